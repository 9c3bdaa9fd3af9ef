//! Unique-minimum conflict-free colorings of chains, rings, trees and trees
//! of rings, plus brute-force oracles that certify them.
//!
//! A coloring is unique-min for a family of vertex sets (hyperedges) when
//! the smallest color in every set occurs exactly once in it. Here the
//! hyperedges are the vertex sets of simple paths or of connected induced
//! subgraphs.
//!
//! ```
//! use cfcolor::interval::{color_chain, color_ring};
//!
//! assert_eq!(color_chain(8, 1).unwrap().colors(), &[3, 2, 3, 1, 3, 2, 3, 4]);
//! assert_eq!(color_ring(8, 1, 0).unwrap().as_slice(), &[1, 4, 3, 4, 2, 4, 3, 4]);
//! ```

pub mod cli;
pub mod graph;
pub mod interval;
pub mod toolkit;
pub mod tor;
pub mod tree;
pub mod verify;

pub use graph::{Color, Coloring, Graph, GraphError, Tree, TreeOfRings, VertexId};
pub use toolkit::Instance;

/// Colors any supported instance with base color 1.
pub fn color_instance(instance: &Instance) -> Coloring {
    match instance {
        Instance::Chain { n } => interval::color_chain(*n, 1)
            .expect("validated chain length")
            .into_coloring(),
        Instance::Ring { n } => interval::color_ring(*n, 1, 0).expect("validated ring length"),
        Instance::Tree(t) => tree::color_tree(t, 1),
        Instance::TreeOfRings(t) => {
            tor::color_tree_of_rings(t)
                .expect("validated tree of rings")
                .coloring
        }
    }
}
