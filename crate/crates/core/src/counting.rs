//! Lattice-point counts of dilates of the design polytope for two colors.

use std::collections::HashSet;

use num_bigint::BigInt;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{all_pairs, Coloring};

/// `C(a, b)`, zero when `b < 0`, `a < 0` or `a < b`.
pub fn binomial(a: i64, b: i64) -> BigInt {
    if b < 0 || a < 0 || a < b {
        return BigInt::from(0);
    }
    let b = b.min(a - b);
    let mut acc = BigInt::from(1);
    for i in 0..b {
        acc = acc * BigInt::from(a - i) / BigInt::from(i + 1);
    }
    acc
}

/// `(τ11, τ12, τ22)` with nonnegative entries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct WeakPartition3 {
    pub t11: u64,
    pub t12: u64,
    pub t22: u64,
}

impl WeakPartition3 {
    pub fn sum(&self) -> u64 {
        self.t11 + self.t12 + self.t22
    }
}

/// All weak 3-partitions of `r`, lexicographic in `(τ11, τ12)`.
pub fn weak_partitions3(r: u64) -> impl Iterator<Item = WeakPartition3> {
    (0..=r).flat_map(move |t11| {
        (0..=r - t11).map(move |t12| WeakPartition3 {
            t11,
            t12,
            t22: r - t11 - t12,
        })
    })
}

/// The summand for `τ`, with the first product taken literally as a square
/// of the same binomial.
pub fn a_tau(n1: u64, n2: u64, t: &WeakPartition3) -> BigInt {
    let (n1, n2) = (n1 as i64, n2 as i64);
    let (t11, t12, t22) = (t.t11 as i64, t.t12 as i64, t.t22 as i64);
    let x1 = binomial(n1 + 2 * t11 + 2 * t12, n1 - 1);
    let y1 = binomial(n1 - 2 + t11 + t12, n1 - 1);
    let y2 = binomial(n2 - 2 + t22, n2 - 1);
    &x1 * &x1 - BigInt::from(n1) * &y1 * &x1 - BigInt::from(n2) * &x1 * &y2
        + BigInt::from(n1 * n2) * &y1 * &y2
}

/// The closed-form count for two color classes of sizes `n1`, `n2`, summed
/// over all weak 3-partitions of `r`.
pub fn hilbert_k2(n1: u64, n2: u64, r: u64) -> BigInt {
    weak_partitions3(r).map(|t| a_tau(n1, n2, &t)).sum()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleLimits {
    pub max_r: u64,
    pub max_n: usize,
}

impl Default for OracleLimits {
    fn default() -> Self {
        OracleLimits { max_r: 4, max_n: 8 }
    }
}

/// Number of distinct design-matrix images of multigraphs with exactly `r`
/// edges, by exhaustive enumeration of edge multisets.
pub fn lattice_count_oracle(z: &Coloring, r: u64, limits: &OracleLimits) -> Result<u64> {
    let n = z.n();
    if r > limits.max_r || n > limits.max_n {
        return Err(Error::GuardExceeded(format!(
            "oracle limited to r <= {} and n <= {}, got r = {r}, n = {n}",
            limits.max_r, limits.max_n
        )));
    }
    let pairs: Vec<(usize, usize, usize)> = all_pairs(n)
        .map(|(u, v)| (u, v, n + z.cell(u, v)))
        .collect();
    let mut image = vec![0i64; n + z.num_cells()];
    let mut seen = HashSet::new();
    fill(&pairs, 0, r, &mut image, &mut seen);
    Ok(seen.len() as u64)
}

fn fill(
    pairs: &[(usize, usize, usize)],
    pos: usize,
    left: u64,
    image: &mut Vec<i64>,
    seen: &mut HashSet<Vec<i64>>,
) {
    if left == 0 {
        seen.insert(image.clone());
        return;
    }
    if pos == pairs.len() {
        return;
    }
    let (u, v, cell) = pairs[pos];
    for m in 0..=left {
        let d = m as i64;
        image[u] += d;
        image[v] += d;
        image[cell] += d;
        fill(pairs, pos + 1, left - m, image, seen);
        image[u] -= d;
        image[v] -= d;
        image[cell] -= d;
    }
}

/// One formula-versus-oracle comparison.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct K2Check {
    pub n1: u64,
    pub n2: u64,
    pub r: u64,
    /// Decimal, since the formula works in arbitrary precision.
    pub formula: String,
    pub oracle: u64,
    #[serde(rename = "match")]
    pub matches: bool,
}

pub fn check_k2(n1: u64, n2: u64, r: u64, limits: &OracleLimits) -> Result<K2Check> {
    if n1 == 0 || n2 == 0 {
        return Err(Error::InvalidColoring(
            "both color classes must be nonempty".into(),
        ));
    }
    let z = Coloring::blocks(&[n1 as usize, n2 as usize])?;
    let formula = hilbert_k2(n1, n2, r);
    let oracle = lattice_count_oracle(&z, r, limits)?;
    Ok(K2Check {
        n1,
        n2,
        r,
        matches: formula == BigInt::from(oracle),
        formula: formula.to_string(),
        oracle,
    })
}

/// Machine-readable outcome of comparing the closed form against the oracle
/// over a grid of parameters.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DiscrepancyReport {
    pub checks: Vec<K2Check>,
    pub mismatches: usize,
    /// Present when any cell disagrees.
    pub suspected_typo: Option<String>,
}

impl DiscrepancyReport {
    pub fn all_match(&self) -> bool {
        self.mismatches == 0
    }
}

pub const SUSPECTED_TYPO: &str = "the first product of a_tau squares C(n1+2*t11+2*t12, n1-1); \
a factor depending on n2 and t22 would be expected in one of the two positions";

pub fn k2_discrepancy_report(
    sizes: &[u64],
    rs: &[u64],
    limits: &OracleLimits,
) -> Result<DiscrepancyReport> {
    let mut checks = Vec::new();
    for &n1 in sizes {
        for &n2 in sizes {
            for &r in rs {
                checks.push(check_k2(n1, n2, r, limits)?);
            }
        }
    }
    let mismatches = checks.iter().filter(|c| !c.matches).count();
    Ok(DiscrepancyReport {
        checks,
        mismatches,
        suspected_typo: (mismatches > 0).then(|| SUSPECTED_TYPO.to_string()),
    })
}
