use std::cmp::Ordering;

use serde::Serialize;

use crate::error::{check_dim, Error, Result};
use crate::graph::{all_pairs, EdgeVector};

fn choose2(x: usize) -> u64 {
    (x * x.saturating_sub(1) / 2) as u64
}

/// Number of edges of the convex `K_n` that neither meet nor cross the chord
/// `uv`, i.e. `C(a, 2) + C(b, 2)` for the `a` and `b` vertices strictly on
/// either side.
pub fn weight(u: usize, v: usize, n: usize) -> Result<u64> {
    let (u, v) = if u < v { (u, v) } else { (v, u) };
    if u == v || v >= n {
        return Err(Error::PairOutOfRange { u, v, n });
    }
    let a = v - u - 1;
    let b = n - 2 - a;
    Ok(choose2(a) + choose2(b))
}

/// How two chords of the convex `n`-gon relate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Intersection {
    Crossing,
    NonCrossing,
    /// The chords have an endpoint in common.
    Shared,
}

/// Vertices sit on a circle in label order; two chords cross when exactly
/// one endpoint of the second lies strictly inside the arc of the first.
pub fn crosses(e1: (usize, usize), e2: (usize, usize)) -> Intersection {
    let (a, b) = if e1.0 < e1.1 { e1 } else { (e1.1, e1.0) };
    let (c, d) = e2;
    if c == a || c == b || d == a || d == b {
        return Intersection::Shared;
    }
    let inside = |x: usize| a < x && x < b;
    if inside(c) != inside(d) {
        Intersection::Crossing
    } else {
        Intersection::NonCrossing
    }
}

/// A monomial `x^α` in the edge variables.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Monomial {
    exponent: EdgeVector,
}

impl Monomial {
    pub fn new(exponent: EdgeVector) -> Result<Monomial> {
        exponent.require_multigraph()?;
        Ok(Monomial { exponent })
    }

    pub fn one(n: usize) -> Monomial {
        Monomial {
            exponent: EdgeVector::zeros(n),
        }
    }

    pub fn exponent(&self) -> &EdgeVector {
        &self.exponent
    }

    pub fn into_exponent(self) -> EdgeVector {
        self.exponent
    }

    pub fn degree(&self) -> i64 {
        self.exponent.total()
    }

    pub fn n(&self) -> usize {
        self.exponent.n()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            exponent: &self.exponent + &other.exponent,
        }
    }
}

/// `x^plus - x^minus`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Binomial {
    pub plus: Monomial,
    pub minus: Monomial,
}

impl Binomial {
    pub fn new(plus: Monomial, minus: Monomial) -> Result<Binomial> {
        check_dim(plus.n(), minus.n())?;
        Ok(Binomial { plus, minus })
    }

    /// `x^{γ⁺} - x^{γ⁻}`.
    pub fn from_vector(g: &EdgeVector) -> Binomial {
        Binomial {
            plus: Monomial {
                exponent: g.positive_part(),
            },
            minus: Monomial {
                exponent: g.negative_part(),
            },
        }
    }

    /// The exponent difference `plus - minus`.
    pub fn vector(&self) -> EdgeVector {
        &self.plus.exponent - &self.minus.exponent
    }
}

/// Weights on the edge variables plus a fixed refinement to a total order:
/// total weight, then degree, then reverse lexicographic on pair rank.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightOrder {
    n: usize,
    weights: Vec<u64>,
}

impl WeightOrder {
    pub fn new(n: usize) -> WeightOrder {
        let weights = all_pairs(n)
            .map(|(u, v)| weight(u, v, n).expect("in range"))
            .collect();
        WeightOrder { n, weights }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    pub fn total_weight(&self, m: &EdgeVector) -> i64 {
        m.entries()
            .iter()
            .zip(&self.weights)
            .map(|(&x, &w)| x * w as i64)
            .sum()
    }

    /// Compares exponent vectors of equal length.
    pub fn compare_exponents(&self, a: &EdgeVector, b: &EdgeVector) -> Ordering {
        self.total_weight(a)
            .cmp(&self.total_weight(b))
            .then_with(|| a.total().cmp(&b.total()))
            .then_with(|| {
                // reverse lex: smaller exponent at the last difference wins
                let last = a
                    .entries()
                    .iter()
                    .zip(b.entries())
                    .rev()
                    .find(|(x, y)| x != y);
                match last {
                    Some((x, y)) => y.cmp(x),
                    None => Ordering::Equal,
                }
            })
    }

    pub fn compare(&self, m1: &Monomial, m2: &Monomial) -> Ordering {
        assert_eq!(m1.n(), self.n, "monomial lives on a different n");
        assert_eq!(m2.n(), self.n, "monomial lives on a different n");
        self.compare_exponents(&m1.exponent, &m2.exponent)
    }

    /// The larger monomial of the binomial, `None` if both sides are equal.
    pub fn leading_term<'a>(&self, b: &'a Binomial) -> Option<&'a Monomial> {
        match self.compare(&b.plus, &b.minus) {
            Ordering::Greater => Some(&b.plus),
            Ordering::Less => Some(&b.minus),
            Ordering::Equal => None,
        }
    }
}
