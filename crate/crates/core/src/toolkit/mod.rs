//! Instances, generators and file formats.

pub mod dot;
pub mod generate;
pub mod io;
pub mod prng;

use crate::graph::{Graph, Tree, TreeOfRings};

pub use dot::export_dot;
pub use generate::{gen_random_tor, gen_random_tree, generate, ring_chain, GenError, GenSpec};
pub use io::{read_coloring, read_instance, write_coloring, write_instance, InstanceError};
pub use prng::Prng;

/// One of the supported topologies.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Instance {
    Chain { n: usize },
    Ring { n: usize },
    Tree(Tree),
    TreeOfRings(TreeOfRings),
}

impl Instance {
    pub fn vertex_count(&self) -> usize {
        match self {
            Instance::Chain { n } | Instance::Ring { n } => *n,
            Instance::Tree(t) => t.vertex_count(),
            Instance::TreeOfRings(t) => t.vertex_count(),
        }
    }

    pub fn graph(&self) -> Graph {
        match self {
            Instance::Chain { n } => Graph::path(*n),
            Instance::Ring { n } => Graph::cycle(*n),
            Instance::Tree(t) => t.graph().clone(),
            Instance::TreeOfRings(t) => t.graph().clone(),
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Instance::Chain { .. } => "chain",
            Instance::Ring { .. } => "ring",
            Instance::Tree(_) => "tree",
            Instance::TreeOfRings(_) => "tree_of_rings",
        }
    }
}
