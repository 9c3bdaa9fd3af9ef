//! Brute-force hyperedge oracles.
//!
//! A hyperedge is a vertex set: either the vertex set of a simple path, or
//! any set that induces a connected subgraph. Sets reached by several
//! traversals are checked and counted once. Both enumerations are
//! exponential in the worst case and meant for small instances.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Color, Coloring, Graph, VertexId};

/// Default cap on explored paths.
pub const DEFAULT_MAX_PATHS: u64 = 10_000_000;
/// Default vertex cap for connected-subgraph enumeration.
pub const DEFAULT_MAX_SUBGRAPH_VERTICES: usize = 20;
/// Connected-subgraph enumeration works on 64-bit vertex masks.
pub const CONNECTED_HARD_LIMIT: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("path enumeration exceeded the budget of {0} paths")]
    BudgetExceeded(u64),
    #[error("graph has {n} vertices; connected-subgraph enumeration is capped at {cap}")]
    TooLarge { n: usize, cap: usize },
    #[error("coloring has {actual} entries for a graph of {expected} vertices")]
    ColoringLength { expected: usize, actual: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum HyperedgeKind {
    Paths,
    ConnectedSubgraphs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HyperedgeMode {
    pub kind: HyperedgeKind,
    /// Only meaningful for connected subgraphs.
    pub max_vertices: Option<usize>,
}

impl HyperedgeMode {
    pub fn paths() -> Self {
        Self {
            kind: HyperedgeKind::Paths,
            max_vertices: None,
        }
    }

    pub fn connected_subgraphs(max_vertices: usize) -> Self {
        Self {
            kind: HyperedgeKind::ConnectedSubgraphs,
            max_vertices: Some(max_vertices),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Property {
    UniqueMin,
    ConflictFree,
}

/// The offending color in a violating hyperedge: the minimum color and its
/// multiplicity. For conflict-free violations every color repeats, and the
/// smallest one is reported.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessDetail {
    pub color: Color,
    pub multiplicity: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub mode: HyperedgeMode,
    pub property: Property,
    pub ok: bool,
    pub hyperedges_checked: u64,
    /// Lexicographically smallest violating set, sorted ascending.
    pub witness: Option<Vec<VertexId>>,
    pub witness_detail: Option<WitnessDetail>,
}

/// Checks one hyperedge; returns the violation if there is one.
pub fn evaluate(colors: &[Color], set: &[VertexId], property: Property) -> Option<WitnessDetail> {
    let mut seen: Vec<Color> = set.iter().map(|&v| colors[v]).collect();
    seen.sort_unstable();
    let min = *seen.first()?;
    let min_count = seen.iter().take_while(|&&c| c == min).count();
    let violated = match property {
        Property::UniqueMin => min_count != 1,
        Property::ConflictFree => seen
            .chunk_by(|a, b| a == b)
            .all(|run| run.len() != 1),
    };
    violated.then_some(WitnessDetail {
        color: min,
        multiplicity: min_count,
    })
}

/// Tracks the canonical witness while hyperedges stream by.
struct Tally<'a> {
    colors: &'a [Color],
    property: Property,
    checked: u64,
    witness: Option<(Vec<VertexId>, WitnessDetail)>,
}

impl<'a> Tally<'a> {
    fn new(colors: &'a [Color], property: Property) -> Self {
        Self {
            colors,
            property,
            checked: 0,
            witness: None,
        }
    }

    fn record(&mut self, set: Vec<VertexId>) {
        self.checked += 1;
        if let Some(detail) = evaluate(self.colors, &set, self.property) {
            let better = self.witness.as_ref().map_or(true, |(w, _)| set < *w);
            if better {
                self.witness = Some((set, detail));
            }
        }
    }

    fn into_report(self, mode: HyperedgeMode) -> VerificationReport {
        let (witness, witness_detail) = match self.witness {
            Some((w, d)) => (Some(w), Some(d)),
            None => (None, None),
        };
        VerificationReport {
            mode,
            property: self.property,
            ok: witness.is_none(),
            hyperedges_checked: self.checked,
            witness,
            witness_detail,
        }
    }
}

fn bits_to_vertices(words: &[u64]) -> Vec<VertexId> {
    let mut out = Vec::new();
    for (w, &word) in words.iter().enumerate() {
        let mut rest = word;
        while rest != 0 {
            let bit = rest.trailing_zeros() as usize;
            out.push(w * 64 + bit);
            rest &= rest - 1;
        }
    }
    out
}

/// Calls `on_new` once for the vertex set of every simple path.
///
/// `max_paths` caps the number of directed paths explored, duplicates
/// included.
fn walk_paths(
    graph: &Graph,
    max_paths: u64,
    mut on_new: impl FnMut(&[u64]),
) -> Result<(), VerifyError> {
    struct Walk<'g, F> {
        graph: &'g Graph,
        bits: Vec<u64>,
        seen: HashSet<Box<[u64]>>,
        explored: u64,
        max_paths: u64,
        on_new: F,
    }

    impl<F: FnMut(&[u64])> Walk<'_, F> {
        fn visit(&mut self, v: VertexId) -> Result<(), VerifyError> {
            self.explored += 1;
            if self.explored > self.max_paths {
                return Err(VerifyError::BudgetExceeded(self.max_paths));
            }
            self.bits[v / 64] |= 1 << (v % 64);
            if !self.seen.contains(self.bits.as_slice()) {
                self.seen.insert(self.bits.clone().into_boxed_slice());
                (self.on_new)(&self.bits);
            }
            let graph = self.graph;
            for &w in graph.neighbors(v) {
                if self.bits[w / 64] & (1 << (w % 64)) == 0 {
                    self.visit(w)?;
                }
            }
            self.bits[v / 64] &= !(1 << (v % 64));
            Ok(())
        }
    }

    let n = graph.vertex_count();
    let mut walk = Walk {
        graph,
        bits: vec![0; n.div_ceil(64)],
        seen: HashSet::new(),
        explored: 0,
        max_paths,
        on_new: &mut on_new,
    };
    for start in 0..n {
        walk.visit(start)?;
    }
    Ok(())
}

/// Vertex sets of all simple paths (single vertices included), each sorted,
/// in lexicographic order.
pub fn enumerate_paths(graph: &Graph, max_paths: u64) -> Result<Vec<Vec<VertexId>>, VerifyError> {
    let mut sets = Vec::new();
    walk_paths(graph, max_paths, |bits| sets.push(bits_to_vertices(bits)))?;
    sets.sort_unstable();
    Ok(sets)
}

fn neighbor_masks(graph: &Graph) -> Vec<u64> {
    (0..graph.vertex_count())
        .map(|v| graph.neighbors(v).iter().fold(0u64, |m, &w| m | 1 << w))
        .collect()
}

/// Calls `out` once for every connected vertex set, as a bit mask.
///
/// Sets are grown from their smallest vertex. Each candidate is either
/// added (and recursed on) or forbidden for the remaining branches, so no
/// set is produced twice.
fn walk_connected(graph: &Graph, mut out: impl FnMut(u64)) {
    fn grow(nbrs: &[u64], set: u64, candidates: u64, forbidden: u64, out: &mut impl FnMut(u64)) {
        out(set);
        let mut candidates = candidates;
        let mut forbidden = forbidden;
        while candidates != 0 {
            let w = candidates.trailing_zeros() as usize;
            candidates &= candidates - 1;
            let grown = set | 1 << w;
            let next = candidates | (nbrs[w] & !grown & !forbidden);
            grow(nbrs, grown, next, forbidden, out);
            forbidden |= 1 << w;
        }
    }

    let nbrs = neighbor_masks(graph);
    for v in 0..graph.vertex_count() {
        let forbidden = (1u64 << v) - 1;
        let set = 1u64 << v;
        grow(&nbrs, set, nbrs[v] & !forbidden & !set, forbidden | set, &mut out);
    }
}

fn mask_to_vertices(mask: u64) -> Vec<VertexId> {
    bits_to_vertices(&[mask])
}

fn connected_cap_check(graph: &Graph, cap: usize) -> Result<(), VerifyError> {
    let n = graph.vertex_count();
    let cap = cap.min(CONNECTED_HARD_LIMIT);
    if n > cap {
        return Err(VerifyError::TooLarge { n, cap });
    }
    Ok(())
}

/// Every nonempty vertex set inducing a connected subgraph, each sorted,
/// in lexicographic order.
pub fn enumerate_connected_subgraphs(
    graph: &Graph,
    max_vertices: usize,
) -> Result<Vec<Vec<VertexId>>, VerifyError> {
    connected_cap_check(graph, max_vertices)?;
    let mut sets = Vec::new();
    walk_connected(graph, |mask| sets.push(mask_to_vertices(mask)));
    sets.sort_unstable();
    Ok(sets)
}

/// Checks a coloring against every hyperedge of `mode`.
pub fn check_property(
    graph: &Graph,
    coloring: &Coloring,
    mode: HyperedgeMode,
    property: Property,
) -> Result<VerificationReport, VerifyError> {
    check_property_with_budget(graph, coloring, mode, property, DEFAULT_MAX_PATHS)
}

pub fn check_property_with_budget(
    graph: &Graph,
    coloring: &Coloring,
    mode: HyperedgeMode,
    property: Property,
    max_paths: u64,
) -> Result<VerificationReport, VerifyError> {
    let n = graph.vertex_count();
    if coloring.len() != n {
        return Err(VerifyError::ColoringLength {
            expected: n,
            actual: coloring.len(),
        });
    }
    let mut tally = Tally::new(coloring.as_slice(), property);
    match mode.kind {
        HyperedgeKind::Paths => {
            walk_paths(graph, max_paths, |bits| tally.record(bits_to_vertices(bits)))?;
        }
        HyperedgeKind::ConnectedSubgraphs => {
            let cap = mode.max_vertices.unwrap_or(DEFAULT_MAX_SUBGRAPH_VERTICES);
            connected_cap_check(graph, cap)?;
            walk_connected(graph, |mask| tally.record(mask_to_vertices(mask)));
        }
    }
    Ok(tally.into_report(mode))
}

/// Checks an explicit list of hyperedges, e.g. the rings of a tree of rings.
pub fn check_sets<'s>(
    coloring: &Coloring,
    sets: impl IntoIterator<Item = &'s [VertexId]>,
    property: Property,
) -> Option<(Vec<VertexId>, WitnessDetail)> {
    let mut tally = Tally::new(coloring.as_slice(), property);
    for set in sets {
        let mut sorted = set.to_vec();
        sorted.sort_unstable();
        tally.record(sorted);
    }
    tally.witness
}
