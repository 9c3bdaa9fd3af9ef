//! Centroid search and round-based unique-min coloring of trees.
//!
//! Each round finds a (1/2)-separator in every component of the remaining
//! forest, gives all of them the round's color and deletes them. Component
//! sizes at least halve per round, so at most `floor(log2 n) + 1` colors are
//! used.

use thiserror::Error;

use crate::graph::{Color, Coloring, Tree, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeparatorError {
    #[error("component is empty")]
    EmptyComponent,
    #[error("component is not connected in the tree")]
    DisconnectedComponent,
    #[error("vertex {vertex} is not in a tree of {n} vertices")]
    VertexOutOfRange { vertex: VertexId, n: usize },
}

/// A centroid together with the sizes of the pieces it leaves behind.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeparatorChoice {
    pub vertex: VertexId,
    /// Sizes of the components left after removing `vertex`, ascending.
    pub component_sizes: Vec<usize>,
    /// Size of the component `vertex` was chosen from.
    pub component_total: usize,
}

impl SeparatorChoice {
    pub fn is_half_separator(&self) -> bool {
        self.component_sizes
            .iter()
            .all(|&s| s <= self.component_total / 2)
    }
}

/// Separators chosen in one round of the tree coloring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Round {
    pub color: Color,
    pub separators: Vec<SeparatorChoice>,
}

/// Centroid of a connected vertex subset; ties go to the smallest id.
pub fn find_half_separator(
    tree: &Tree,
    component: &[VertexId],
) -> Result<SeparatorChoice, SeparatorError> {
    let n = tree.vertex_count();
    if component.is_empty() {
        return Err(SeparatorError::EmptyComponent);
    }
    if let Some(&vertex) = component.iter().find(|&&v| v >= n) {
        return Err(SeparatorError::VertexOutOfRange { vertex, n });
    }
    if !tree.graph().induces_connected(component) {
        return Err(SeparatorError::DisconnectedComponent);
    }
    let mut inside = vec![false; n];
    let mut members = Vec::with_capacity(component.len());
    for &v in component {
        if !inside[v] {
            inside[v] = true;
            members.push(v);
        }
    }
    let mut scratch = Scratch::new(n);
    Ok(centroid(tree, &members, &inside, &mut scratch))
}

struct Scratch {
    parent: Vec<VertexId>,
    size: Vec<usize>,
    order: Vec<VertexId>,
}

impl Scratch {
    fn new(n: usize) -> Self {
        Self {
            parent: vec![usize::MAX; n],
            size: vec![0; n],
            order: Vec::new(),
        }
    }
}

/// `members` must be connected under `inside` and contain no duplicates.
fn centroid(
    tree: &Tree,
    members: &[VertexId],
    inside: &[bool],
    scratch: &mut Scratch,
) -> SeparatorChoice {
    let total = members.len();
    let root = *members.iter().min().expect("nonempty component");
    let Scratch {
        parent,
        size,
        order,
    } = scratch;

    order.clear();
    order.push(root);
    parent[root] = root;
    let mut head = 0;
    while head < order.len() {
        let u = order[head];
        head += 1;
        for &v in tree.neighbors(u) {
            if inside[v] && v != parent[u] {
                parent[v] = u;
                order.push(v);
            }
        }
    }
    for &u in order.iter() {
        size[u] = 1;
    }
    for &u in order.iter().rev() {
        if u != root {
            size[parent[u]] += size[u];
        }
    }

    let pieces = |u: VertexId| -> Vec<usize> {
        let mut parts: Vec<usize> = tree
            .neighbors(u)
            .iter()
            .filter(|&&v| inside[v] && v != parent[u])
            .map(|&v| size[v])
            .collect();
        if size[u] < total {
            parts.push(total - size[u]);
        }
        parts.sort_unstable();
        parts
    };

    let vertex = order
        .iter()
        .copied()
        .filter(|&u| pieces(u).last().map_or(true, |&m| m <= total / 2))
        .min()
        .expect("every tree has a centroid");
    SeparatorChoice {
        vertex,
        component_sizes: pieces(vertex),
        component_total: total,
    }
}

/// Unique-min coloring of a tree using colors `base, base + 1, ...`.
pub fn color_tree(tree: &Tree, base: Color) -> Coloring {
    color_tree_traced(tree, base).0
}

/// Like [`color_tree`], also returning the separators chosen per round.
pub fn color_tree_traced(tree: &Tree, base: Color) -> (Coloring, Vec<Round>) {
    assert!(base >= 1, "colors start at 1");
    let n = tree.vertex_count();
    let mut colors = vec![0; n];
    let mut alive = vec![true; n];
    let mut remaining = n;
    let mut rounds = Vec::new();
    let mut scratch = Scratch::new(n);
    let mut color = base;

    while remaining > 0 {
        let mut visited = vec![false; n];
        let mut separators = Vec::new();
        for start in 0..n {
            if !alive[start] || visited[start] {
                continue;
            }
            let mut members = vec![start];
            visited[start] = true;
            let mut head = 0;
            while head < members.len() {
                let u = members[head];
                head += 1;
                for &v in tree.neighbors(u) {
                    if alive[v] && !visited[v] {
                        visited[v] = true;
                        members.push(v);
                    }
                }
            }
            separators.push(centroid(tree, &members, &alive, &mut scratch));
        }
        // Separators of distinct components are never adjacent, so removal
        // can wait until the round is complete.
        for choice in &separators {
            colors[choice.vertex] = color;
            alive[choice.vertex] = false;
        }
        remaining -= separators.len();
        rounds.push(Round { color, separators });
        color += 1;
    }

    let coloring = Coloring::new(colors).expect("every vertex is colored once");
    (coloring, rounds)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Tree {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Tree::from_edges(n, &edges).unwrap()
    }

    fn star(leaves: usize) -> Tree {
        let edges: Vec<_> = (1..=leaves).map(|v| (0, v)).collect();
        Tree::from_edges(leaves + 1, &edges).unwrap()
    }

    #[test]
    fn separator_of_small_trees() {
        let choice = find_half_separator(&path(3), &[0, 1, 2]).unwrap();
        assert_eq!((choice.vertex, choice.component_sizes), (1, vec![1, 1]));

        let choice = find_half_separator(&star(3), &[0, 1, 2, 3]).unwrap();
        assert_eq!((choice.vertex, choice.component_sizes), (0, vec![1, 1, 1]));

        let choice = find_half_separator(&path(4), &[3, 2, 1, 0]).unwrap();
        assert_eq!((choice.vertex, choice.component_sizes), (1, vec![1, 2]));
    }

    #[test]
    fn separator_of_a_subcomponent() {
        let choice = find_half_separator(&path(6), &[3, 4, 5]).unwrap();
        assert_eq!(choice.vertex, 4);
        assert_eq!(choice.component_total, 3);
        let single = find_half_separator(&path(6), &[5]).unwrap();
        assert_eq!((single.vertex, single.component_sizes), (5, vec![]));
    }

    #[test]
    fn separator_errors() {
        assert_eq!(
            find_half_separator(&path(4), &[]),
            Err(SeparatorError::EmptyComponent)
        );
        assert_eq!(
            find_half_separator(&path(4), &[0, 2]),
            Err(SeparatorError::DisconnectedComponent)
        );
        assert_eq!(
            find_half_separator(&path(4), &[7]),
            Err(SeparatorError::VertexOutOfRange { vertex: 7, n: 4 })
        );
    }

    #[test]
    fn colors_small_trees() {
        assert_eq!(color_tree(&Tree::singleton(), 3).as_slice(), &[3]);
        assert_eq!(color_tree(&path(4), 1).as_slice(), &[2, 1, 2, 3]);
        assert_eq!(color_tree(&star(3), 1).as_slice(), &[1, 2, 2, 2]);
    }

    #[test]
    fn rounds_of_a_path() {
        let (_, rounds) = color_tree_traced(&path(4), 1);
        let picked: Vec<Vec<VertexId>> = rounds
            .iter()
            .map(|r| r.separators.iter().map(|s| s.vertex).collect())
            .collect();
        assert_eq!(picked, vec![vec![1], vec![0, 2], vec![3]]);
    }

    #[test]
    fn path_coloring_matches_between_tree_and_chain() {
        // On a path the centroid rule and the chain pivot pick the same vertex.
        for n in 1..100 {
            let tree = color_tree(&path(n), 1);
            let chain = crate::interval::color_chain(n, 1).unwrap();
            assert_eq!(tree.as_slice(), chain.colors(), "n={n}");
        }
    }
}
