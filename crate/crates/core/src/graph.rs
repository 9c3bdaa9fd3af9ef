//! Graph, tree and tree-of-rings types.
//!
//! All instances use dense vertex ids `0..n`. Every type is validated at
//! construction and immutable afterwards.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use thiserror::Error;

/// Dense vertex index in `0..n`.
pub type VertexId = usize;

/// Colors are positive integers; `1` is the smallest.
pub type Color = u32;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(VertexId),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(VertexId, VertexId),
    #[error("vertex {vertex} out of range for {n} vertices")]
    VertexOutOfRange { vertex: VertexId, n: usize },
    #[error("graph is not a tree ({n} vertices, {edges} edges, connected: {connected})")]
    NotATree {
        n: usize,
        edges: usize,
        connected: bool,
    },
    #[error("vertex {0} has color 0; colors start at 1")]
    ZeroColor(VertexId),
    #[error("a tree of rings needs at least one ring")]
    NoRings,
    #[error("ring {ring} has length {len}; rings need at least 3 vertices")]
    RingTooShort { ring: usize, len: usize },
    #[error("ring {ring} visits vertex {vertex} twice")]
    RepeatedVertexInRing { ring: usize, vertex: VertexId },
    #[error("rings {first} and {second} share {shared} vertices")]
    MultiVertexIntersection {
        first: usize,
        second: usize,
        shared: usize,
    },
    #[error("rings do not form a connected graph")]
    Disconnected,
    #[error("vertex ids are not contiguous: {0} is missing")]
    NonContiguousIds(VertexId),
    #[error("no ring can be attached after placing {placed} rings")]
    NotATreeOfRings { placed: usize },
}

/// Undirected simple graph with sorted adjacency lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<Vec<VertexId>>,
    edge_count: usize,
}

impl Graph {
    /// Builds a graph, rejecting self-loops, repeated edges and ids `>= n`.
    pub fn new(n: usize, edges: &[(VertexId, VertexId)]) -> Result<Self, GraphError> {
        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in edges {
            for vertex in [u, v] {
                if vertex >= n {
                    return Err(GraphError::VertexOutOfRange { vertex, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for (u, list) in adjacency.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(GraphError::DuplicateEdge(u.min(w[0]), u.max(w[0])));
            }
        }
        Ok(Self {
            adjacency,
            edge_count: edges.len(),
        })
    }

    /// The path `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Self::new(n, &edges).expect("path edges are valid")
    }

    /// The cycle `0 - 1 - ... - (n-1) - 0`. Needs `n >= 3`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        let edges: Vec<_> = (0..n).map(|v| (v, (v + 1) % n)).collect();
        Self::new(n, &edges).expect("cycle edges are valid")
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adjacency[v]
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(VertexId, VertexId)> {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
            .collect()
    }

    pub fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        n == 0 || self.reachable_from(0).iter().all(|&seen| seen)
    }

    fn reachable_from(&self, start: VertexId) -> Vec<bool> {
        let mut seen = vec![false; self.vertex_count()];
        let mut queue = VecDeque::from([start]);
        seen[start] = true;
        while let Some(u) = queue.pop_front() {
            for &v in self.neighbors(u) {
                if !seen[v] {
                    seen[v] = true;
                    queue.push_back(v);
                }
            }
        }
        seen
    }

    /// Whether `vertices` induces a connected subgraph. The empty set is not.
    pub fn induces_connected(&self, vertices: &[VertexId]) -> bool {
        let Some(&start) = vertices.first() else {
            return false;
        };
        let mut inside = vec![false; self.vertex_count()];
        for &v in vertices {
            inside[v] = true;
        }
        let mut seen = vec![false; self.vertex_count()];
        let mut stack = vec![start];
        seen[start] = true;
        let mut reached = 1;
        while let Some(u) = stack.pop() {
            for &v in self.neighbors(u) {
                if inside[v] && !seen[v] {
                    seen[v] = true;
                    reached += 1;
                    stack.push(v);
                }
            }
        }
        let distinct = inside.iter().filter(|&&b| b).count();
        reached == distinct
    }
}

/// A connected graph with `n - 1` edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tree {
    graph: Graph,
}

impl Tree {
    pub fn new(graph: Graph) -> Result<Self, GraphError> {
        let n = graph.vertex_count();
        let connected = graph.is_connected();
        if n == 0 || !connected || graph.edge_count() != n - 1 {
            return Err(GraphError::NotATree {
                n,
                edges: graph.edge_count(),
                connected,
            });
        }
        Ok(Self { graph })
    }

    pub fn from_edges(n: usize, edges: &[(VertexId, VertexId)]) -> Result<Self, GraphError> {
        Self::new(Graph::new(n, edges)?)
    }

    /// The single-vertex tree.
    pub fn singleton() -> Self {
        Self {
            graph: Graph::path(1),
        }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn vertex_count(&self) -> usize {
        self.graph.vertex_count()
    }

    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        self.graph.neighbors(v)
    }

    /// Vertices of the unique path from `from` to `to`, both ends included.
    pub fn path_between(&self, from: VertexId, to: VertexId) -> Vec<VertexId> {
        let n = self.vertex_count();
        let mut parent = vec![usize::MAX; n];
        parent[from] = from;
        let mut queue = VecDeque::from([from]);
        while let Some(u) = queue.pop_front() {
            if u == to {
                break;
            }
            for &v in self.neighbors(u) {
                if parent[v] == usize::MAX {
                    parent[v] = u;
                    queue.push_back(v);
                }
            }
        }
        let mut path = vec![to];
        let mut cur = to;
        while cur != from {
            cur = parent[cur];
            path.push(cur);
        }
        path.reverse();
        path
    }
}

/// Graph assembled by gluing rings together one shared vertex at a time.
///
/// Rings are stored in input order. Validation finds a placement order in
/// which ring 0 comes first and every later ring meets the union of the
/// earlier ones in exactly one vertex; at each step the lowest-indexed
/// eligible ring is placed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeOfRings {
    rings: Vec<Vec<VertexId>>,
    order: Vec<usize>,
    /// For each ring, the vertex it shares with the rings placed before it.
    joint: Vec<Option<VertexId>>,
    attachments: Vec<VertexId>,
    graph: Graph,
}

impl TreeOfRings {
    pub fn new(rings: Vec<Vec<VertexId>>) -> Result<Self, GraphError> {
        if rings.is_empty() {
            return Err(GraphError::NoRings);
        }
        let mut membership: BTreeMap<VertexId, Vec<usize>> = BTreeMap::new();
        for (index, ring) in rings.iter().enumerate() {
            if ring.len() < 3 {
                return Err(GraphError::RingTooShort {
                    ring: index,
                    len: ring.len(),
                });
            }
            let mut seen = BTreeSet::new();
            for &v in ring {
                if !seen.insert(v) {
                    return Err(GraphError::RepeatedVertexInRing {
                        ring: index,
                        vertex: v,
                    });
                }
                membership.entry(v).or_default().push(index);
            }
        }

        let n = membership.len();
        if let Some(missing) = (0..n).find(|v| !membership.contains_key(v)) {
            return Err(GraphError::NonContiguousIds(missing));
        }

        // Pairwise intersections, counted through shared vertices.
        let mut shared: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        for owners in membership.values() {
            for (i, &a) in owners.iter().enumerate() {
                for &b in &owners[i + 1..] {
                    *shared.entry((a, b)).or_default() += 1;
                }
            }
        }
        if let Some((&(first, second), &count)) = shared.iter().find(|(_, &c)| c > 1) {
            return Err(GraphError::MultiVertexIntersection {
                first,
                second,
                shared: count,
            });
        }

        let edges: Vec<_> = rings
            .iter()
            .flat_map(|ring| {
                (0..ring.len()).map(move |i| (ring[i], ring[(i + 1) % ring.len()]))
            })
            .collect();
        let graph = Graph::new(n, &edges)?;
        if !graph.is_connected() {
            return Err(GraphError::Disconnected);
        }

        let (order, joint) = placement_order(&rings, n)?;
        let attachments = membership
            .iter()
            .filter(|(_, owners)| owners.len() >= 2)
            .map(|(&v, _)| v)
            .collect();

        Ok(Self {
            rings,
            order,
            joint,
            attachments,
            graph,
        })
    }

    pub fn rings(&self) -> &[Vec<VertexId>] {
        &self.rings
    }

    pub fn ring(&self, index: usize) -> &[VertexId] {
        &self.rings[index]
    }

    /// `|T|`.
    pub fn num_rings(&self) -> usize {
        self.rings.len()
    }

    /// `|R|`, the longest ring.
    pub fn max_ring_len(&self) -> usize {
        self.rings.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn vertex_count(&self) -> usize {
        self.graph.vertex_count()
    }

    /// Ring indices in placement order; always starts with ring 0.
    pub fn placement_order(&self) -> &[usize] {
        &self.order
    }

    /// The vertex ring `index` shares with the rings placed before it.
    pub fn joint_vertex(&self, index: usize) -> Option<VertexId> {
        self.joint[index]
    }

    /// Vertices that belong to at least two rings, ascending.
    pub fn attachments(&self) -> &[VertexId] {
        &self.attachments
    }

    pub fn is_attachment(&self, v: VertexId) -> bool {
        self.attachments.binary_search(&v).is_ok()
    }

    /// Attachment vertices of one ring, in the ring's cyclic order.
    pub fn ring_attachments(&self, index: usize) -> Vec<VertexId> {
        self.rings[index]
            .iter()
            .copied()
            .filter(|&v| self.is_attachment(v))
            .collect()
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }
}

/// Vertex set of `tor`'s attachment points.
pub fn attachment_vertices(tor: &TreeOfRings) -> BTreeSet<VertexId> {
    tor.attachments().iter().copied().collect()
}

fn placement_order(
    rings: &[Vec<VertexId>],
    n: usize,
) -> Result<(Vec<usize>, Vec<Option<VertexId>>), GraphError> {
    let mut placed_vertex = vec![false; n];
    let mut placed_ring = vec![false; rings.len()];
    let mut order = Vec::with_capacity(rings.len());
    let mut joint = vec![None; rings.len()];

    let place = |index: usize,
                 placed_vertex: &mut [bool],
                 placed_ring: &mut [bool],
                 order: &mut Vec<usize>| {
        placed_ring[index] = true;
        order.push(index);
        for &v in &rings[index] {
            placed_vertex[v] = true;
        }
    };
    place(0, &mut placed_vertex, &mut placed_ring, &mut order);

    while order.len() < rings.len() {
        let next = (0..rings.len()).find_map(|index| {
            if placed_ring[index] {
                return None;
            }
            let mut hits = rings[index].iter().filter(|&&v| placed_vertex[v]);
            match (hits.next(), hits.next()) {
                (Some(&v), None) => Some((index, v)),
                _ => None,
            }
        });
        match next {
            Some((index, v)) => {
                joint[index] = Some(v);
                place(index, &mut placed_vertex, &mut placed_ring, &mut order);
            }
            None => return Err(GraphError::NotATreeOfRings { placed: order.len() }),
        }
    }
    Ok((order, joint))
}

/// A total vertex coloring with colors `>= 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Coloring {
    colors: Vec<Color>,
}

impl Coloring {
    pub fn new(colors: Vec<Color>) -> Result<Self, GraphError> {
        if let Some(v) = colors.iter().position(|&c| c == 0) {
            return Err(GraphError::ZeroColor(v));
        }
        Ok(Self { colors })
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn color(&self, v: VertexId) -> Color {
        self.colors[v]
    }

    pub fn as_slice(&self) -> &[Color] {
        &self.colors
    }

    pub fn into_vec(self) -> Vec<Color> {
        self.colors
    }

    /// Largest color, or 0 for an empty coloring.
    pub fn max_color(&self) -> Color {
        self.colors.iter().copied().max().unwrap_or(0)
    }

    pub fn distinct_colors(&self) -> usize {
        self.colors.iter().collect::<BTreeSet<_>>().len()
    }
}
