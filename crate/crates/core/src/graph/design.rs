use super::coloring::Coloring;
use super::edges::EdgeVector;
use super::pairs::{all_pairs, num_pairs};
use super::stats::{pos_neg_colors, pos_neg_degrees};
use crate::error::{check_dim, Error, Result};

/// The design matrix of the degree-color statistic: the vertex-pair
/// incidence matrix of `K_n` stacked over the color-pair indicator matrix.
///
/// Dense, row-major. Rows `0..n` are degree rows, the remaining
/// `C(k + 1, 2)` rows are color cells in lexicographic order (empty color
/// cells keep their all-zero row).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DesignMatrix {
    n: usize,
    k: usize,
    rows: Vec<Vec<i64>>,
}

impl DesignMatrix {
    pub fn new(z: &Coloring) -> Self {
        let n = z.n();
        let cols = num_pairs(n);
        let mut rows = vec![vec![0; cols]; n + z.num_cells()];
        for (col, (u, v)) in all_pairs(n).enumerate() {
            rows[u][col] = 1;
            rows[v][col] = 1;
            rows[n + z.cell(u, v)][col] = 1;
        }
        DesignMatrix { n, k: z.k(), rows }
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn num_cols(&self) -> usize {
        num_pairs(self.n)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn degree_block(&self) -> &[Vec<i64>] {
        &self.rows[..self.n]
    }

    pub fn color_block(&self) -> &[Vec<i64>] {
        &self.rows[self.n..]
    }

    pub fn mul(&self, g: &EdgeVector) -> Result<Vec<i64>> {
        check_dim(self.num_cols(), g.entries().len())?;
        Ok(self
            .rows
            .iter()
            .map(|row| row.iter().zip(g.entries()).map(|(a, x)| a * x).sum())
            .collect())
    }
}

pub fn design_matrix(z: &Coloring) -> DesignMatrix {
    DesignMatrix::new(z)
}

/// Degree balance and color balance both hold, i.e. `γ` lies in the kernel
/// of the design matrix.
pub fn is_monomial_walk(g: &EdgeVector, z: &Coloring) -> Result<bool> {
    check_dim(z.n(), g.n())?;
    let (dp, dm) = pos_neg_degrees(g);
    if dp != dm {
        return Ok(false);
    }
    let (cp, cm) = pos_neg_colors(g, z)?;
    Ok(cp == cm)
}

/// The closed alternating walk `[v_1, .., v_2l]`: edges `v_{2i-1} v_{2i}`
/// count `+1`, edges `v_{2i} v_{2i+1}` count `-1`, indices wrap around.
pub fn walk_from_brackets(vertices: &[usize], n: usize) -> Result<EdgeVector> {
    let len = vertices.len();
    if len < 4 || !len.is_multiple_of(2) {
        return Err(Error::OddWalk(len));
    }
    if let Some(&v) = vertices.iter().find(|&&v| v >= n) {
        return Err(Error::PairOutOfRange { u: v, v, n });
    }
    let mut g = EdgeVector::zeros(n);
    for i in 0..len {
        let a = vertices[i];
        let b = vertices[(i + 1) % len];
        if a == b {
            return Err(Error::RepeatedVertex {
                vertex: a,
                position: i,
                next: (i + 1) % len,
            });
        }
        g.add_entry(a, b, if i % 2 == 0 { 1 } else { -1 });
    }
    Ok(g)
}
