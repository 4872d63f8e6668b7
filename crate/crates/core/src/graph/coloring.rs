use serde::{Deserialize, Serialize};

use super::pairs::{color_pair_rank, num_color_pairs};
use crate::error::{Error, Result};

/// A `k`-coloring of the vertices `0..n`. Colors are `0..k`.
///
/// Colors with no vertices are allowed; their rows stay in the design matrix.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Coloring {
    k: usize,
    colors: Vec<usize>,
}

impl Coloring {
    pub fn new(k: usize, colors: Vec<usize>) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidColoring("k must be at least 1".into()));
        }
        if colors.is_empty() {
            return Err(Error::InvalidColoring("n must be at least 1".into()));
        }
        if let Some((v, &c)) = colors.iter().enumerate().find(|(_, &c)| c >= k) {
            return Err(Error::InvalidColoring(format!(
                "vertex {v} has color {c}, outside 0..{k}"
            )));
        }
        Ok(Coloring { k, colors })
    }

    /// Every vertex gets color 0.
    pub fn constant(n: usize) -> Result<Self> {
        Coloring::new(1, vec![0; n])
    }

    /// First `sizes[0]` vertices get color 0, the next `sizes[1]` color 1, and so on.
    pub fn blocks(sizes: &[usize]) -> Result<Self> {
        let colors = sizes
            .iter()
            .enumerate()
            .flat_map(|(c, &s)| std::iter::repeat_n(c, s))
            .collect();
        Coloring::new(sizes.len(), colors)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.colors.len()
    }

    #[inline]
    pub fn k(&self) -> usize {
        self.k
    }

    #[inline]
    pub fn color(&self, v: usize) -> usize {
        self.colors[v]
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    /// Number of color-pair cells, `C(k + 1, 2)`.
    pub fn num_cells(&self) -> usize {
        num_color_pairs(self.k)
    }

    /// Color-pair cell of the vertex pair `{u, v}`.
    #[inline]
    pub fn cell(&self, u: usize, v: usize) -> usize {
        color_pair_rank(self.colors[u], self.colors[v], self.k)
    }

    pub fn class(&self, color: usize) -> impl Iterator<Item = usize> + '_ {
        self.colors
            .iter()
            .enumerate()
            .filter(move |(_, &c)| c == color)
            .map(|(v, _)| v)
    }

    pub fn class_size(&self, color: usize) -> usize {
        self.colors.iter().filter(|&&c| c == color).count()
    }

    pub fn is_non_decreasing(&self) -> bool {
        self.colors.windows(2).all(|w| w[0] <= w[1])
    }

    /// Stable sort of the vertices by color. Entry `i` of the result is the
    /// original vertex placed at position `i`.
    pub fn sorting_permutation(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.n()).collect();
        order.sort_by_key(|&v| self.colors[v]);
        order
    }

    /// The coloring seen through a relabeling: new vertex `i` is old vertex `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> Coloring {
        Coloring {
            k: self.k,
            colors: perm.iter().map(|&old| self.colors[old]).collect(),
        }
    }
}
