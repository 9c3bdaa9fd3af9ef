//! Tree representation and unique-min coloring of trees of rings.
//!
//! The attachment vertices are colored first, as a tree: inside each ring,
//! its attachments are joined into a path that follows the ring's cyclic
//! order. Every ring then colors its remaining vertices as a shorter ring
//! offset past the largest attachment color it contains.

use thiserror::Error;

use crate::graph::{Color, Coloring, GraphError, Tree, TreeOfRings, VertexId};
use crate::interval::{color_ring, floor_log2};
use crate::tree::color_tree;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TorError {
    #[error("attachment graph is not a tree: {0}")]
    NotATree(GraphError),
    #[error("every vertex of the ring was removed")]
    AllRemoved,
}

/// Tree over the attachment vertices of a tree of rings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeRepresentation {
    /// `None` for a single ring, which has no attachments.
    tree: Option<Tree>,
    /// Tree vertex `i` is attachment `attachments[i]` of the original graph.
    attachments: Vec<VertexId>,
    /// Per ring, its attachments in the order their path was laid out.
    ring_paths: Vec<Vec<VertexId>>,
}

impl TreeRepresentation {
    pub fn tree(&self) -> Option<&Tree> {
        self.tree.as_ref()
    }

    pub fn attachments(&self) -> &[VertexId] {
        &self.attachments
    }

    pub fn ring_paths(&self) -> &[Vec<VertexId>] {
        &self.ring_paths
    }

    /// Tree vertex for an attachment of the original graph.
    pub fn tree_vertex(&self, v: VertexId) -> Option<usize> {
        self.attachments.binary_search(&v).ok()
    }

    /// Edges between original-graph attachment ids.
    pub fn edges(&self) -> Vec<(VertexId, VertexId)> {
        self.tree
            .as_ref()
            .map(|t| {
                t.graph()
                    .edges()
                    .into_iter()
                    .map(|(a, b)| (self.attachments[a], self.attachments[b]))
                    .collect()
            })
            .unwrap_or_default()
    }
}

/// Builds the attachment tree.
///
/// A non-root ring's path starts at the vertex it shares with the rings
/// placed before it; the root ring's path starts at its smallest attachment.
pub fn build_tree_representation(tor: &TreeOfRings) -> Result<TreeRepresentation, TorError> {
    let attachments = tor.attachments().to_vec();
    let index = |v: VertexId| attachments.binary_search(&v).expect("attachment id");

    let mut ring_paths = Vec::with_capacity(tor.num_rings());
    let mut edges = Vec::new();
    for r in 0..tor.num_rings() {
        let ring = tor.ring(r);
        let own = tor.ring_attachments(r);
        let start = match tor.joint_vertex(r) {
            Some(v) => v,
            None => match own.iter().min() {
                Some(&v) => v,
                None => {
                    ring_paths.push(Vec::new());
                    continue;
                }
            },
        };
        let offset = ring.iter().position(|&v| v == start).expect("start on ring");
        let path: Vec<VertexId> = (0..ring.len())
            .map(|k| ring[(offset + k) % ring.len()])
            .filter(|&v| tor.is_attachment(v))
            .collect();
        edges.extend(path.windows(2).map(|w| (index(w[0]), index(w[1]))));
        ring_paths.push(path);
    }

    let tree = if attachments.is_empty() {
        None
    } else {
        Some(Tree::from_edges(attachments.len(), &edges).map_err(TorError::NotATree)?)
    };
    Ok(TreeRepresentation {
        tree,
        attachments,
        ring_paths,
    })
}

/// Vertices of `ring` not in `removed`, in the ring's cyclic order.
pub fn residual_cycle(
    ring: &[VertexId],
    removed: impl Fn(VertexId) -> bool,
) -> Result<Vec<VertexId>, TorError> {
    let rest: Vec<VertexId> = ring.iter().copied().filter(|&v| !removed(v)).collect();
    if rest.is_empty() {
        return Err(TorError::AllRemoved);
    }
    Ok(rest)
}

/// How one ring's remaining vertices were colored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingPlan {
    pub ring_index: usize,
    /// Largest color on the ring before its pass, 0 if none.
    pub cm: Color,
    /// Remaining vertices in cyclic order; empty if every vertex was an
    /// attachment.
    pub residual_cycle: Vec<VertexId>,
    /// Colors given to `residual_cycle`, position by position.
    pub assigned_colors: Vec<Color>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TorColoring {
    pub coloring: Coloring,
    pub plans: Vec<RingPlan>,
    pub representation: TreeRepresentation,
}

/// Colors a residual cycle with colors starting at `base`.
///
/// The anchor is the smallest vertex id. Cycles of one or two vertices,
/// too short for the ring coloring, get `base` and `base, base + 1`.
fn color_residual(cycle: &[VertexId], base: Color) -> Vec<Color> {
    match cycle.len() {
        0 => Vec::new(),
        1 => vec![base],
        2 => vec![base, base + 1],
        len => {
            let anchor = (0..len).min_by_key(|&i| cycle[i]).expect("nonempty");
            color_ring(len, base, anchor)
                .expect("residual ring is long enough")
                .into_vec()
        }
    }
}

/// Unique-min coloring of a tree of rings.
pub fn color_tree_of_rings(tor: &TreeOfRings) -> Result<TorColoring, TorError> {
    let representation = build_tree_representation(tor)?;
    let n = tor.vertex_count();

    if tor.num_rings() == 1 {
        let ring = tor.ring(0);
        let colors = color_residual(ring, 1);
        let mut by_vertex = vec![0; n];
        for (&v, &c) in ring.iter().zip(&colors) {
            by_vertex[v] = c;
        }
        let plan = RingPlan {
            ring_index: 0,
            cm: 0,
            residual_cycle: ring.to_vec(),
            assigned_colors: colors,
        };
        return Ok(TorColoring {
            coloring: Coloring::new(by_vertex).expect("all vertices colored"),
            plans: vec![plan],
            representation,
        });
    }

    let mut colors: Vec<Color> = vec![0; n];
    let tree = representation.tree().expect("several rings share vertices");
    let tree_colors = color_tree(tree, 1);
    for (i, &v) in representation.attachments().iter().enumerate() {
        colors[v] = tree_colors.color(i);
    }

    let mut plans = Vec::with_capacity(tor.num_rings());
    for &r in tor.placement_order() {
        let ring = tor.ring(r);
        let cm = ring.iter().map(|&v| colors[v]).max().unwrap_or(0);
        let residual = match residual_cycle(ring, |v| colors[v] != 0) {
            Ok(cycle) => cycle,
            Err(TorError::AllRemoved) => Vec::new(),
            Err(e) => return Err(e),
        };
        let assigned = color_residual(&residual, cm + 1);
        for (&v, &c) in residual.iter().zip(&assigned) {
            colors[v] = c;
        }
        plans.push(RingPlan {
            ring_index: r,
            cm,
            residual_cycle: residual,
            assigned_colors: assigned,
        });
    }

    Ok(TorColoring {
        coloring: Coloring::new(colors).expect("all vertices colored"),
        plans,
        representation,
    })
}

/// Color budget: `floor(log2 max(1, |A|)) + 1 + floor(log2 max(2, |R| - 1)) + 2`.
pub fn color_bound_tor(tor: &TreeOfRings) -> Color {
    let attachments = tor.attachments().len().max(1);
    let ring = tor.max_ring_len().saturating_sub(1).max(2);
    floor_log2(attachments) + 1 + floor_log2(ring) + 2
}
