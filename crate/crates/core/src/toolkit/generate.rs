//! Seeded instance generators.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use thiserror::Error;

use super::prng::Prng;
use super::Instance;
use crate::graph::{Tree, TreeOfRings, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenError {
    #[error("need at least {min} vertices, got {n}")]
    TooFewVertices { n: usize, min: usize },
    #[error("need at least one ring")]
    NoRings,
    #[error("ring lengths must satisfy 3 <= min ({min}) <= max ({max})")]
    BadLengths { min: usize, max: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GenSpec {
    Chain {
        n: usize,
    },
    Ring {
        n: usize,
    },
    Tree {
        n: usize,
        seed: u64,
    },
    TreeOfRings {
        num_rings: usize,
        min_len: usize,
        max_len: usize,
        seed: u64,
    },
}

pub fn generate(spec: GenSpec) -> Result<Instance, GenError> {
    match spec {
        GenSpec::Chain { n } if n < 1 => Err(GenError::TooFewVertices { n, min: 1 }),
        GenSpec::Chain { n } => Ok(Instance::Chain { n }),
        GenSpec::Ring { n } if n < 3 => Err(GenError::TooFewVertices { n, min: 3 }),
        GenSpec::Ring { n } => Ok(Instance::Ring { n }),
        GenSpec::Tree { n, seed } => gen_random_tree(n, seed).map(Instance::Tree),
        GenSpec::TreeOfRings {
            num_rings,
            min_len,
            max_len,
            seed,
        } => gen_random_tor(num_rings, min_len, max_len, seed).map(Instance::TreeOfRings),
    }
}

/// Random labeled tree decoded from a Prüfer sequence of `n - 2` draws.
pub fn gen_random_tree(n: usize, seed: u64) -> Result<Tree, GenError> {
    if n == 0 {
        return Err(GenError::TooFewVertices { n, min: 1 });
    }
    if n <= 2 {
        let edges: Vec<_> = (1..n).map(|v| (0, v)).collect();
        return Ok(Tree::from_edges(n, &edges).expect("trivial tree"));
    }
    let mut rng = Prng::new(seed);
    let code: Vec<VertexId> = (0..n - 2).map(|_| rng.below_usize(n)).collect();
    let edges = decode_prufer(n, &code);
    Ok(Tree::from_edges(n, &edges).expect("Prüfer decoding yields a tree"))
}

/// Standard decoding: repeatedly join the smallest current leaf to the next
/// code entry.
pub fn decode_prufer(n: usize, code: &[VertexId]) -> Vec<(VertexId, VertexId)> {
    assert_eq!(code.len() + 2, n, "Prüfer code must have n - 2 entries");
    let mut degree = vec![1usize; n];
    for &v in code {
        degree[v] += 1;
    }
    let mut leaves: BinaryHeap<Reverse<VertexId>> =
        (0..n).filter(|&v| degree[v] == 1).map(Reverse).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &v in code {
        let Reverse(leaf) = leaves.pop().expect("a leaf always exists");
        edges.push((leaf.min(v), leaf.max(v)));
        degree[v] -= 1;
        if degree[v] == 1 {
            leaves.push(Reverse(v));
        }
    }
    let Reverse(a) = leaves.pop().expect("two vertices remain");
    let Reverse(b) = leaves.pop().expect("two vertices remain");
    edges.push((a.min(b), a.max(b)));
    edges
}

/// Random tree of rings: each new ring is glued to a uniformly drawn
/// existing vertex. Fresh vertices are numbered in creation order.
pub fn gen_random_tor(
    num_rings: usize,
    min_len: usize,
    max_len: usize,
    seed: u64,
) -> Result<TreeOfRings, GenError> {
    if num_rings == 0 {
        return Err(GenError::NoRings);
    }
    if min_len < 3 || min_len > max_len {
        return Err(GenError::BadLengths {
            min: min_len,
            max: max_len,
        });
    }
    let mut rng = Prng::new(seed);
    let spread = (max_len - min_len + 1) as u64;
    let draw_len = |rng: &mut Prng| min_len + rng.below(spread) as usize;

    let first = draw_len(&mut rng);
    let mut rings = vec![(0..first).collect::<Vec<_>>()];
    let mut count = first;
    for _ in 1..num_rings {
        let len = draw_len(&mut rng);
        let joint = rng.below_usize(count);
        let mut ring = Vec::with_capacity(len);
        ring.push(joint);
        ring.extend(count..count + len - 1);
        count += len - 1;
        rings.push(ring);
    }
    Ok(TreeOfRings::new(rings).expect("generated rings form a tree of rings"))
}

/// Rings glued in a line. Ring `k + 1` hangs off the vertex halfway round
/// ring `k` from where ring `k` was attached.
pub fn ring_chain(lengths: &[usize]) -> Result<TreeOfRings, GenError> {
    if lengths.is_empty() {
        return Err(GenError::NoRings);
    }
    if let Some(&bad) = lengths.iter().find(|&&l| l < 3) {
        return Err(GenError::BadLengths { min: bad, max: bad });
    }
    let mut rings: Vec<Vec<VertexId>> = Vec::with_capacity(lengths.len());
    let mut next = 0;
    for &len in lengths {
        let mut ring = Vec::with_capacity(len);
        if let Some(prev) = rings.last() {
            ring.push(prev[prev.len() / 2]);
        }
        while ring.len() < len {
            ring.push(next);
            next += 1;
        }
        rings.push(ring);
    }
    Ok(TreeOfRings::new(rings).expect("a chain of rings is valid"))
}
