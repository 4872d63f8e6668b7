use serde::{Deserialize, Serialize};

use super::coloring::Coloring;
use super::edges::EdgeVector;
use super::pairs::color_pair_unrank;
use crate::error::{check_dim, Result};

/// Positive and negative degree sequences `(d⁺, d⁻)` of a signed edge vector.
pub fn pos_neg_degrees(g: &EdgeVector) -> (Vec<i64>, Vec<i64>) {
    let n = g.n();
    let mut pos = vec![0; n];
    let mut neg = vec![0; n];
    for (u, v, x) in g.support() {
        let target = if x > 0 { &mut pos } else { &mut neg };
        target[u] += x.abs();
        target[v] += x.abs();
    }
    (pos, neg)
}

/// Positive and negative color sequences `(c⁺, c⁻)`, indexed by color-pair rank.
pub fn pos_neg_colors(g: &EdgeVector, z: &Coloring) -> Result<(Vec<i64>, Vec<i64>)> {
    check_dim(z.n(), g.n())?;
    let cells = z.num_cells();
    let mut pos = vec![0; cells];
    let mut neg = vec![0; cells];
    for (u, v, x) in g.support() {
        let target = if x > 0 { &mut pos } else { &mut neg };
        target[z.cell(u, v)] += x.abs();
    }
    Ok((pos, neg))
}

/// A degree sequence concatenated with a color sequence: the label `(d; c)`
/// of a fiber.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CDegSequence {
    pub degrees: Vec<i64>,
    pub colors: Vec<i64>,
}

impl CDegSequence {
    pub fn new(degrees: Vec<i64>, colors: Vec<i64>) -> Self {
        CDegSequence { degrees, colors }
    }

    pub fn zeros(z: &Coloring) -> Self {
        CDegSequence {
            degrees: vec![0; z.n()],
            colors: vec![0; z.num_cells()],
        }
    }

    /// Number of edges implied by the color sequence.
    pub fn edge_count(&self) -> i64 {
        self.colors.iter().sum()
    }

    pub fn check_dims(&self, z: &Coloring) -> Result<()> {
        check_dim(z.n(), self.degrees.len())?;
        check_dim(z.num_cells(), self.colors.len())
    }

    /// Whether the label can possibly be the statistic of a multigraph:
    /// nonnegative, `Σd = 2Σc`, and per-color degree totals agree with the
    /// color cells.
    pub fn is_consistent(&self, z: &Coloring) -> bool {
        if self.check_dims(z).is_err() {
            return false;
        }
        if self.degrees.iter().chain(&self.colors).any(|&x| x < 0) {
            return false;
        }
        if self.degrees.iter().sum::<i64>() != 2 * self.edge_count() {
            return false;
        }
        self.color_degree_totals(z) == self.expected_color_degree_totals(z)
    }

    /// `Σ_{v : z(v) = i} d(v)` for each color `i`.
    pub fn color_degree_totals(&self, z: &Coloring) -> Vec<i64> {
        let mut totals = vec![0; z.k()];
        for (v, &d) in self.degrees.iter().enumerate() {
            totals[z.color(v)] += d;
        }
        totals
    }

    /// `2·c(i,i) + Σ_{j≠i} c(i,j)` for each color `i`.
    pub fn expected_color_degree_totals(&self, z: &Coloring) -> Vec<i64> {
        let k = z.k();
        let mut totals = vec![0; k];
        for (cell, &c) in self.colors.iter().enumerate() {
            let (i, j) = color_pair_unrank(cell, k);
            totals[i] += c;
            totals[j] += c;
        }
        totals
    }
}

/// The c-degree sequence `(d(γ); c(γ))` of a multigraph.
pub fn cdeg(g: &EdgeVector, z: &Coloring) -> Result<CDegSequence> {
    check_dim(z.n(), g.n())?;
    g.require_multigraph()?;
    let (degrees, _) = pos_neg_degrees(g);
    let (colors, _) = pos_neg_colors(g, z)?;
    Ok(CDegSequence { degrees, colors })
}
