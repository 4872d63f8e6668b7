//! Lexicographic ranking of unordered pairs.
//!
//! Vertices and colors are 0-based here. Pairs `(u, v)` with `u < v` are
//! ranked in lexicographic order, so `(0,1), (0,2), .., (0,n-1), (1,2), ..`.
//! Color pairs `(i, j)` allow `i == j` and follow the same order.

use crate::error::{Error, Result};

/// Number of unordered pairs of distinct elements, `C(n, 2)`.
#[inline]
pub const fn num_pairs(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Number of unordered pairs with repetition, `C(k + 1, 2)`.
#[inline]
pub const fn num_color_pairs(k: usize) -> usize {
    k * (k + 1) / 2
}

/// A vertex pair `u < v` together with its linear rank.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PairIndex {
    pub u: usize,
    pub v: usize,
    pub index: usize,
}

impl PairIndex {
    /// Builds the index of `{u, v}`; the endpoints may come in either order.
    pub fn new(u: usize, v: usize, n: usize) -> Result<Self> {
        let (a, b) = if u < v { (u, v) } else { (v, u) };
        if a == b || b >= n {
            return Err(Error::PairOutOfRange { u, v, n });
        }
        Ok(PairIndex {
            u: a,
            v: b,
            index: pair_rank(a, b, n),
        })
    }

    pub fn from_index(index: usize, n: usize) -> Result<Self> {
        if index >= num_pairs(n) {
            return Err(Error::PairOutOfRange {
                u: index,
                v: index,
                n,
            });
        }
        let (u, v) = pair_unrank(index, n);
        Ok(PairIndex { u, v, index })
    }
}

/// Rank of `(u, v)`, `u < v < n`. No bounds checks.
#[inline]
pub fn pair_rank(u: usize, v: usize, n: usize) -> usize {
    debug_assert!(u < v && v < n);
    u * (2 * n - u - 1) / 2 + (v - u - 1)
}

/// Inverse of [`pair_rank`].
pub fn pair_unrank(index: usize, n: usize) -> (usize, usize) {
    debug_assert!(index < num_pairs(n));
    let mut u = 0;
    let mut start = 0;
    loop {
        let row = n - u - 1;
        if index < start + row {
            return (u, u + 1 + index - start);
        }
        start += row;
        u += 1;
    }
}

/// Rank of the color pair `{i, j}` (order of arguments irrelevant).
#[inline]
pub fn color_pair_rank(i: usize, j: usize, k: usize) -> usize {
    let (a, b) = if i <= j { (i, j) } else { (j, i) };
    debug_assert!(b < k);
    a * (2 * k - a + 1) / 2 + (b - a)
}

/// Inverse of [`color_pair_rank`].
pub fn color_pair_unrank(index: usize, k: usize) -> (usize, usize) {
    debug_assert!(index < num_color_pairs(k));
    let mut a = 0;
    let mut start = 0;
    loop {
        let row = k - a;
        if index < start + row {
            return (a, a + index - start);
        }
        start += row;
        a += 1;
    }
}

/// All pairs of `[n]` in rank order.
pub fn all_pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |u| (u + 1..n).map(move |v| (u, v)))
}
