//! Independent oracles and instance builders shared by the integration tests.
//!
//! Nothing here calls into the enumerators under test; the oracles use
//! subset filtering and Hamiltonian-path dynamic programming instead.

#![allow(dead_code)]

use std::collections::VecDeque;

use cfcolor::toolkit::Prng;
use cfcolor::{Color, Graph, TreeOfRings, VertexId};

/// Every interval of `colors` has its minimum exactly once.
pub fn intervals_unique_min(colors: &[Color]) -> usize {
    let mut violations = 0;
    for l in 0..colors.len() {
        let (mut min, mut count) = (Color::MAX, 0);
        for &c in &colors[l..] {
            if c < min {
                min = c;
                count = 1;
            } else if c == min {
                count += 1;
            }
            if count != 1 {
                violations += 1;
            }
        }
    }
    violations
}

/// Number of arcs (and the full cycle) of a cyclic coloring whose minimum
/// repeats.
pub fn arcs_unique_min(colors: &[Color]) -> usize {
    let n = colors.len();
    let mut violations = 0;
    for start in 0..n {
        let (mut min, mut count) = (Color::MAX, 0);
        for len in 1..n {
            let c = colors[(start + len - 1) % n];
            if c < min {
                min = c;
                count = 1;
            } else if c == min {
                count += 1;
            }
            if count != 1 {
                violations += 1;
            }
        }
    }
    let min = *colors.iter().min().unwrap();
    if colors.iter().filter(|&&c| c == min).count() != 1 {
        violations += 1;
    }
    violations
}

fn adjacency_masks(graph: &Graph) -> Vec<u32> {
    (0..graph.vertex_count())
        .map(|v| graph.neighbors(v).iter().fold(0u32, |m, &w| m | 1 << w))
        .collect()
}

fn mask_connected(adj: &[u32], mask: u32) -> bool {
    if mask == 0 {
        return false;
    }
    let start = mask.trailing_zeros() as usize;
    let mut seen = 1u32 << start;
    let mut queue = VecDeque::from([start]);
    while let Some(u) = queue.pop_front() {
        let mut fresh = adj[u] & mask & !seen;
        seen |= fresh;
        while fresh != 0 {
            queue.push_back(fresh.trailing_zeros() as usize);
            fresh &= fresh - 1;
        }
    }
    seen == mask
}

pub fn mask_vertices(mask: u32) -> Vec<VertexId> {
    (0..32).filter(|&v| mask & (1 << v) != 0).collect()
}

/// All connected vertex sets by filtering the `2^n - 1` nonempty subsets.
pub fn connected_sets_by_filter(graph: &Graph) -> Vec<Vec<VertexId>> {
    let n = graph.vertex_count();
    assert!(n <= 20);
    let adj = adjacency_masks(graph);
    let mut sets: Vec<_> = (1u32..(1 << n))
        .filter(|&m| mask_connected(&adj, m))
        .map(mask_vertices)
        .collect();
    sets.sort();
    sets
}

/// All vertex sets whose induced subgraph has a Hamiltonian path.
pub fn path_sets_by_dp(graph: &Graph) -> Vec<Vec<VertexId>> {
    let n = graph.vertex_count();
    assert!(n <= 16);
    let adj = adjacency_masks(graph);
    // ends[mask] = vertices v such that a path covering `mask` ends at v
    let mut ends = vec![0u32; 1 << n];
    for v in 0..n {
        ends[1 << v] = 1 << v;
    }
    for mask in 1u32..(1 << n) {
        let mut e = ends[mask as usize];
        while e != 0 {
            let v = e.trailing_zeros() as usize;
            e &= e - 1;
            let mut ext = adj[v] & !mask;
            while ext != 0 {
                let w = ext.trailing_zeros() as usize;
                ext &= ext - 1;
                ends[(mask | 1 << w) as usize] |= 1 << w;
            }
        }
    }
    let mut sets: Vec<_> = (1u32..(1 << n))
        .filter(|&m| ends[m as usize] != 0)
        .map(mask_vertices)
        .collect();
    sets.sort();
    sets
}

/// Whether the minimum color of `set` appears once.
pub fn set_unique_min(colors: &[Color], set: &[VertexId]) -> bool {
    let min = set.iter().map(|&v| colors[v]).min().unwrap();
    set.iter().filter(|&&v| colors[v] == min).count() == 1
}

/// Whether some color of `set` appears once.
pub fn set_conflict_free(colors: &[Color], set: &[VertexId]) -> bool {
    set.iter()
        .any(|&v| set.iter().filter(|&&w| colors[w] == colors[v]).count() == 1)
}

/// G(n, p) with `p = num / 256`, drawn from splitmix64.
pub fn random_graph(n: usize, num: u64, seed: u64) -> Graph {
    let mut rng = Prng::new(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.below(256) < num {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges).unwrap()
}

/// Random tree of rings in which no ring ever holds more than two
/// attachment vertices.
///
/// A new ring may be glued to a vertex that is already an attachment (no
/// ring gains one), or to a vertex of a single ring that has fewer than two
/// attachments so far.
pub fn low_attachment_tor(num_rings: usize, min_len: usize, max_len: usize, seed: u64) -> TreeOfRings {
    let mut rng = Prng::new(seed);
    let spread = (max_len - min_len + 1) as u64;
    let mut owners: Vec<Vec<usize>> = Vec::new();
    let mut ring_attach = vec![0usize; num_rings];
    let mut rings: Vec<Vec<VertexId>> = Vec::new();

    let first = min_len + rng.below(spread) as usize;
    rings.push((0..first).collect());
    owners.extend((0..first).map(|_| vec![0]));
    for r in 1..num_rings {
        let len = min_len + rng.below(spread) as usize;
        let eligible: Vec<VertexId> = (0..owners.len())
            .filter(|&v| owners[v].len() >= 2 || ring_attach[owners[v][0]] < 2)
            .collect();
        let joint = eligible[rng.below_usize(eligible.len())];
        if owners[joint].len() == 1 {
            ring_attach[owners[joint][0]] += 1;
        }
        ring_attach[r] = 1;
        owners[joint].push(r);
        let mut ring = vec![joint];
        for _ in 1..len {
            ring.push(owners.len());
            owners.push(vec![r]);
        }
        rings.push(ring);
    }
    TreeOfRings::new(rings).unwrap()
}

/// Length tuples over `lo..=hi` of size `k`, one representative per
/// reversal pair.
pub fn length_tuples(k: usize, lo: usize, hi: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = vec![lo; k];
    loop {
        let rev: Vec<usize> = cur.iter().rev().copied().collect();
        if cur <= rev {
            out.push(cur.clone());
        }
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] < hi {
                cur[i] += 1;
                for c in &mut cur[i + 1..] {
                    *c = lo;
                }
                break;
            }
        }
    }
}

pub fn max_attachments_per_ring(tor: &TreeOfRings) -> usize {
    (0..tor.num_rings())
        .map(|r| tor.ring_attachments(r).len())
        .max()
        .unwrap_or(0)
}
