//! Unique-min colorings of chains and rings.
//!
//! The chain coloring is the "ruler" coloring: the midpoint of an interval
//! gets the current color and both halves recurse with the next color, so
//! a chain of `n` vertices uses exactly `floor(log2 n) + 1` colors. A ring
//! spends one extra color on an anchor vertex and colors the rest as a chain.

use thiserror::Error;

use crate::graph::{Color, Coloring, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IntervalError {
    #[error("a chain needs at least one vertex")]
    ZeroLength,
    #[error("base color must be at least 1")]
    ZeroBase,
    #[error("a ring needs at least 3 vertices, got {0}")]
    RingTooShort(usize),
    #[error("anchor {anchor} out of range for a ring of {n} vertices")]
    AnchorOutOfRange { anchor: VertexId, n: usize },
}

/// Chain coloring over positions `0..n`, colors drawn from `base` upwards.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainColoring {
    colors: Vec<Color>,
    base: Color,
}

impl ChainColoring {
    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    pub fn base(&self) -> Color {
        self.base
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn max_color(&self) -> Color {
        self.colors.iter().copied().max().unwrap_or(self.base)
    }

    pub fn into_coloring(self) -> Coloring {
        Coloring::new(self.colors).expect("chain colors are >= base >= 1")
    }
}

/// `floor(log2 n)` for `n >= 1`.
pub fn floor_log2(n: usize) -> u32 {
    debug_assert!(n >= 1);
    usize::BITS - 1 - n.leading_zeros()
}

/// Ruler coloring of a chain of `n` vertices.
///
/// The pivot of interval `[l, r]` is `l + ceil(len / 2) - 1`; for `n = 8`
/// this yields `3 2 3 1 3 2 3 4`.
pub fn color_chain(n: usize, base: Color) -> Result<ChainColoring, IntervalError> {
    if n == 0 {
        return Err(IntervalError::ZeroLength);
    }
    if base == 0 {
        return Err(IntervalError::ZeroBase);
    }
    let mut colors = vec![0; n];
    // (lo, hi) half-open
    let mut pending = vec![(0usize, n, base)];
    while let Some((lo, hi, color)) = pending.pop() {
        if lo >= hi {
            continue;
        }
        let len = hi - lo;
        let pivot = lo + len.div_ceil(2) - 1;
        colors[pivot] = color;
        pending.push((lo, pivot, color + 1));
        pending.push((pivot + 1, hi, color + 1));
    }
    Ok(ChainColoring { colors, base })
}

/// 1-based positions named by step `i` of the closed-form chain schedule.
///
/// Step `i` colors `floor(sum_{j in S} n / 2^j)` for every `S ⊆ {1..i}`
/// containing `i`. Writing the sum as `n * m / 2^i` with `m` odd in
/// `1..2^i` keeps everything in exact integer arithmetic. Positions outside
/// `1..=n` are dropped.
pub fn step_positions_formula(n: usize, i: u32) -> Vec<usize> {
    if n == 0 || i == 0 {
        return Vec::new();
    }
    let n_wide = n as u128;
    // Once 2^i >= 2n every window [p 2^i / n, (p+1) 2^i / n) holds an odd
    // integer, so exactly the positions 1..n-1 are hit.
    if i >= 64 || (1u128 << i) >= 2 * n_wide {
        return (1..n).collect();
    }
    let denom = 1u128 << i;
    let mut positions: Vec<usize> = (0..(1u128 << (i - 1)))
        .map(|k| 2 * k + 1)
        .map(|m| (n_wide * m / denom) as usize)
        .filter(|&p| (1..=n).contains(&p))
        .collect();
    positions.sort_unstable();
    positions.dedup();
    positions
}

/// Ring coloring: `anchor` gets `base`, the other `n - 1` vertices, read
/// cyclically from `anchor + 1`, get the chain coloring from `base + 1`.
pub fn color_ring(n: usize, base: Color, anchor: VertexId) -> Result<Coloring, IntervalError> {
    if n < 3 {
        return Err(IntervalError::RingTooShort(n));
    }
    if anchor >= n {
        return Err(IntervalError::AnchorOutOfRange { anchor, n });
    }
    if base == 0 {
        return Err(IntervalError::ZeroBase);
    }
    let chain = color_chain(n - 1, base + 1)?;
    let mut colors = vec![0; n];
    colors[anchor] = base;
    for (offset, &c) in chain.colors().iter().enumerate() {
        colors[(anchor + 1 + offset) % n] = c;
    }
    Ok(Coloring::new(colors).expect("ring colors are >= base >= 1"))
}

/// Converts unique-min to unique-max by mapping `i` to `c_max - i + 1`.
pub fn to_unique_max(coloring: &Coloring) -> Coloring {
    let top = coloring.max_color();
    let flipped = coloring.as_slice().iter().map(|&c| top - c + 1).collect();
    Coloring::new(flipped).expect("flipped colors stay in 1..=c_max")
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Every interval `[l, r]` has its minimum exactly once.
    fn intervals_unique_min(colors: &[Color]) -> bool {
        (0..colors.len()).all(|l| {
            let (mut min, mut count) = (Color::MAX, 0);
            colors[l..].iter().all(|&c| {
                if c < min {
                    min = c;
                    count = 1;
                } else if c == min {
                    count += 1;
                }
                count == 1
            })
        })
    }

    #[test]
    fn chain_of_eight() {
        let chain = color_chain(8, 1).unwrap();
        assert_eq!(chain.colors(), &[3, 2, 3, 1, 3, 2, 3, 4]);
    }

    #[test]
    fn small_chains() {
        assert_eq!(color_chain(1, 1).unwrap().colors(), &[1]);
        assert_eq!(color_chain(3, 1).unwrap().colors(), &[2, 1, 2]);
        assert_eq!(color_chain(7, 1).unwrap().colors(), &[3, 2, 3, 1, 3, 2, 3]);
        assert!(intervals_unique_min(&[2, 1, 2]));
        assert!(intervals_unique_min(&[3, 2, 3, 1, 3, 2, 3]));
        assert!(!intervals_unique_min(&[1, 2, 1]));
    }

    #[test]
    fn chain_errors() {
        assert_eq!(color_chain(0, 1), Err(IntervalError::ZeroLength));
        assert_eq!(color_chain(3, 0), Err(IntervalError::ZeroBase));
    }

    #[test]
    fn step_positions_for_eight() {
        assert_eq!(step_positions_formula(8, 1), vec![4]);
        assert_eq!(step_positions_formula(8, 2), vec![2, 6]);
        assert_eq!(step_positions_formula(8, 3), vec![1, 3, 5, 7]);
    }

    #[test]
    fn step_positions_past_the_schedule() {
        // Large step: compare the shortcut against the odd-m sum.
        for n in 1..40usize {
            for i in 1..12u32 {
                let mut expected: Vec<usize> = (1..(1usize << i))
                    .step_by(2)
                    .map(|m| n * m >> i)
                    .filter(|&p| p >= 1 && p <= n)
                    .collect();
                expected.sort_unstable();
                expected.dedup();
                assert_eq!(step_positions_formula(n, i), expected, "n={n} i={i}");
            }
        }
        assert_eq!(step_positions_formula(5, 200), vec![1, 2, 3, 4]);
    }

    #[test]
    fn ring_of_eight() {
        assert_eq!(color_ring(8, 1, 0).unwrap().as_slice(), &[1, 4, 3, 4, 2, 4, 3, 4]);
    }

    #[test]
    fn small_rings() {
        assert_eq!(color_ring(3, 1, 0).unwrap().as_slice(), &[1, 2, 3]);
        assert_eq!(color_ring(3, 5, 0).unwrap().as_slice(), &[5, 6, 7]);
        assert_eq!(color_ring(4, 1, 2).unwrap().as_slice(), &[2, 3, 1, 3]);
        assert_eq!(color_ring(2, 1, 0), Err(IntervalError::RingTooShort(2)));
        assert_eq!(
            color_ring(4, 1, 4),
            Err(IntervalError::AnchorOutOfRange { anchor: 4, n: 4 })
        );
    }

    #[test]
    fn unique_max_conversion() {
        let convert = |v: Vec<Color>| to_unique_max(&Coloring::new(v).unwrap()).into_vec();
        assert_eq!(convert(vec![1, 2, 3]), vec![3, 2, 1]);
        assert_eq!(convert(vec![1]), vec![1]);
        assert_eq!(convert(vec![2, 2, 2]), vec![1, 1, 1]);
    }

    #[test]
    fn floor_log2_small() {
        let expected = [0, 1, 1, 2, 2, 2, 2, 3];
        for (n, e) in (1..=8).zip(expected) {
            assert_eq!(floor_log2(n), e);
        }
    }

    proptest! {
        #[test]
        fn base_shift(n in 1usize..300, base in 1u32..50, k in 0u32..50) {
            let low = color_chain(n, base).unwrap();
            let high = color_chain(n, base + k).unwrap();
            for (a, b) in low.colors().iter().zip(high.colors()) {
                prop_assert_eq!(a + k, *b);
            }
        }

        #[test]
        fn chain_unique_min_and_color_count(n in 1usize..200) {
            let chain = color_chain(n, 1).unwrap();
            prop_assert!(intervals_unique_min(chain.colors()));
            prop_assert_eq!(chain.clone().into_coloring().distinct_colors(), floor_log2(n) as usize + 1);
            prop_assert_eq!(chain.max_color(), floor_log2(n) + 1);
        }

        #[test]
        fn unique_max_mirrors_minimum(n in 1usize..100) {
            let colors = color_chain(n, 1).unwrap().into_coloring();
            let flipped = to_unique_max(&colors);
            let top = colors.max_color();
            for (a, b) in colors.as_slice().iter().zip(flipped.as_slice()) {
                prop_assert_eq!(a + b, top + 1);
            }
            prop_assert_eq!(to_unique_max(&flipped), colors);
        }
    }
}
