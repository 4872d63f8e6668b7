use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::{Deserialize, Serialize};

use super::pairs::{all_pairs, num_pairs, pair_rank, pair_unrank};
use crate::error::{check_dim, Error, Result};

/// Integer vector indexed by the unordered vertex pairs of `[n]`.
///
/// The same type carries multigraphs (entries `>= 0`), simple graphs
/// (entries in `{0, 1}`) and moves or walks (any sign).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct EdgeVector {
    n: usize,
    entries: Vec<i64>,
}

impl EdgeVector {
    pub fn zeros(n: usize) -> Self {
        EdgeVector {
            n,
            entries: vec![0; num_pairs(n)],
        }
    }

    pub fn from_entries(n: usize, entries: Vec<i64>) -> Result<Self> {
        check_dim(num_pairs(n), entries.len())?;
        Ok(EdgeVector { n, entries })
    }

    /// Accumulates `(u, v, multiplicity)` triples. Repeated pairs add up.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, i64)>,
    {
        let mut g = EdgeVector::zeros(n);
        for (u, v, m) in edges {
            g.add_checked(u, v, m)?;
        }
        Ok(g)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    #[inline]
    pub fn entries_mut(&mut self) -> &mut [i64] {
        &mut self.entries
    }

    #[inline]
    fn rank(&self, u: usize, v: usize) -> usize {
        if u < v {
            pair_rank(u, v, self.n)
        } else {
            pair_rank(v, u, self.n)
        }
    }

    /// Entry for `{u, v}`; symmetric in its arguments. Panics on `u == v`.
    #[inline]
    pub fn get(&self, u: usize, v: usize) -> i64 {
        assert_ne!(u, v, "no loops");
        self.entries[self.rank(u, v)]
    }

    #[inline]
    pub fn set(&mut self, u: usize, v: usize, value: i64) {
        assert_ne!(u, v, "no loops");
        let r = self.rank(u, v);
        self.entries[r] = value;
    }

    #[inline]
    pub fn add_entry(&mut self, u: usize, v: usize, delta: i64) {
        assert_ne!(u, v, "no loops");
        let r = self.rank(u, v);
        self.entries[r] += delta;
    }

    pub fn add_checked(&mut self, u: usize, v: usize, delta: i64) -> Result<()> {
        if u == v || u >= self.n || v >= self.n {
            return Err(Error::PairOutOfRange { u, v, n: self.n });
        }
        self.add_entry(u, v, delta);
        Ok(())
    }

    /// Nonzero entries as `(u, v, value)` in pair order.
    pub fn support(&self) -> impl Iterator<Item = (usize, usize, i64)> + '_ {
        self.entries
            .iter()
            .enumerate()
            .filter(|(_, &x)| x != 0)
            .map(move |(i, &x)| {
                let (u, v) = pair_unrank(i, self.n);
                (u, v, x)
            })
    }

    /// All entries with their pairs, zeros included.
    pub fn iter_pairs(&self) -> impl Iterator<Item = (usize, usize, i64)> + '_ {
        all_pairs(self.n)
            .zip(self.entries.iter())
            .map(|((u, v), &x)| (u, v, x))
    }

    pub fn norm1(&self) -> i64 {
        self.entries.iter().map(|x| x.abs()).sum()
    }

    /// Sum of entries; the edge count of a multigraph.
    pub fn total(&self) -> i64 {
        self.entries.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&x| x == 0)
    }

    pub fn is_multigraph(&self) -> bool {
        self.entries.iter().all(|&x| x >= 0)
    }

    pub fn is_simple(&self) -> bool {
        self.entries.iter().all(|&x| x == 0 || x == 1)
    }

    /// First negative entry, as an error, if there is one.
    pub fn require_multigraph(&self) -> Result<()> {
        match self.support().find(|&(_, _, x)| x < 0) {
            Some((u, v, value)) => Err(Error::NegativeEntry { u, v, value }),
            None => Ok(()),
        }
    }

    /// `max(γ, 0)` entrywise.
    pub fn positive_part(&self) -> EdgeVector {
        EdgeVector {
            n: self.n,
            entries: self.entries.iter().map(|&x| x.max(0)).collect(),
        }
    }

    /// `max(-γ, 0)` entrywise.
    pub fn negative_part(&self) -> EdgeVector {
        EdgeVector {
            n: self.n,
            entries: self.entries.iter().map(|&x| (-x).max(0)).collect(),
        }
    }

    pub fn checked_add(&self, other: &EdgeVector) -> Result<EdgeVector> {
        check_dim(self.n, other.n)?;
        Ok(self + other)
    }

    pub fn checked_sub(&self, other: &EdgeVector) -> Result<EdgeVector> {
        check_dim(self.n, other.n)?;
        Ok(self - other)
    }

    pub fn scaled(&self, factor: i64) -> EdgeVector {
        EdgeVector {
            n: self.n,
            entries: self.entries.iter().map(|&x| x * factor).collect(),
        }
    }

    /// `self` divides `other` as monomials: entrywise `self <= other`.
    pub fn divides(&self, other: &EdgeVector) -> bool {
        self.n == other.n && self.entries.iter().zip(&other.entries).all(|(a, b)| a <= b)
    }

    /// Relabels vertices: vertex `i` of the result is vertex `perm[i]` of `self`.
    pub fn permuted(&self, perm: &[usize]) -> EdgeVector {
        debug_assert_eq!(perm.len(), self.n);
        let mut out = EdgeVector::zeros(self.n);
        for (u, v) in all_pairs(self.n) {
            let x = self.get(perm[u], perm[v]);
            if x != 0 {
                out.set(u, v, x);
            }
        }
        out
    }
}

impl Add for &EdgeVector {
    type Output = EdgeVector;

    fn add(self, rhs: Self) -> EdgeVector {
        assert_eq!(self.n, rhs.n, "dimension mismatch");
        EdgeVector {
            n: self.n,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &EdgeVector {
    type Output = EdgeVector;

    fn sub(self, rhs: Self) -> EdgeVector {
        assert_eq!(self.n, rhs.n, "dimension mismatch");
        EdgeVector {
            n: self.n,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Neg for &EdgeVector {
    type Output = EdgeVector;

    fn neg(self) -> EdgeVector {
        self.scaled(-1)
    }
}

impl fmt::Debug for EdgeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "EdgeVector(n={}; ", self.n)?;
        let mut first = true;
        for (u, v, x) in self.support() {
            if !first {
                write!(f, ", ")?;
            }
            first = false;
            write!(f, "{}{}:{}", u + 1, v + 1, x)?;
        }
        write!(f, ")")
    }
}
