use std::cmp::Ordering;

use serde::Serialize;

use super::order::{crosses, Binomial, Intersection, Monomial, WeightOrder};
use crate::error::{check_dim, Error, Result};
use crate::graph::{is_monomial_walk, pair_unrank, Coloring, EdgeVector};

/// One rewriting `x_a x_b -> x_c x_d`, in the caller's vertex labels.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Rewrite {
    pub removed: [(usize, usize); 2],
    pub added: [(usize, usize); 2],
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NormalForm {
    pub monomial: Monomial,
    pub steps: Vec<Rewrite>,
    /// Set when the coloring was not non-decreasing: entry `i` is the
    /// original vertex placed at position `i` before reducing.
    pub permutation: Option<Vec<usize>>,
}

fn same(z: &Coloring, a: usize, b: usize) -> bool {
    z.color(a) == z.color(b)
}

fn colors_meet(z: &Coloring, (u, v): (usize, usize), (x, y): (usize, usize)) -> bool {
    same(z, u, x) || same(z, u, y) || same(z, v, x) || same(z, v, y)
}

/// First pair of distinct support edges, in pair-rank order, that are
/// vertex-disjoint, non-crossing, and share an endpoint color.
fn reducible_divisor(g: &EdgeVector, z: &Coloring) -> Option<((usize, usize), (usize, usize))> {
    let n = g.n();
    let support: Vec<usize> = (0..g.entries().len())
        .filter(|&i| g.entries()[i] > 0)
        .collect();
    for (ai, &a) in support.iter().enumerate() {
        let e1 = pair_unrank(a, n);
        for &b in &support[ai + 1..] {
            let e2 = pair_unrank(b, n);
            if crosses(e1, e2) == Intersection::NonCrossing && colors_meet(z, e1, e2) {
                return Some((e1, e2));
            }
        }
    }
    None
}

fn norm((a, b): (usize, usize)) -> (usize, usize) {
    (a.min(b), a.max(b))
}

/// The other two pairings of the four endpoints that differ from the
/// divisor by a switch, smallest under the order first.
fn rewrite_target(
    e1: (usize, usize),
    e2: (usize, usize),
    z: &Coloring,
    order: &WeightOrder,
) -> [(usize, usize); 2] {
    let ((u, v), (x, y)) = (e1, e2);
    let mut candidates = Vec::new();
    // {ux, vy} is reachable when the diagonals {uy, vx} have a monochromatic pair
    if same(z, u, y) || same(z, v, x) {
        candidates.push([norm((u, x)), norm((v, y))]);
    }
    if same(z, u, x) || same(z, v, y) {
        candidates.push([norm((u, y)), norm((v, x))]);
    }
    let n = order.n();
    let as_vec = |p: &[(usize, usize); 2]| {
        EdgeVector::from_edges(n, p.iter().map(|&(a, b)| (a, b, 1))).expect("in range")
    };
    *candidates
        .iter()
        .min_by(|p, q| order.compare_exponents(&as_vec(p), &as_vec(q)))
        .expect("colors meet, so some switch applies")
}

fn reduce_sorted(g: &EdgeVector, z: &Coloring, order: &WeightOrder) -> (EdgeVector, Vec<Rewrite>) {
    let mut current = g.clone();
    let mut steps = Vec::new();
    while let Some((e1, e2)) = reducible_divisor(&current, z) {
        let added = rewrite_target(e1, e2, z, order);
        let mut next = current.clone();
        next.add_entry(e1.0, e1.1, -1);
        next.add_entry(e2.0, e2.1, -1);
        for (a, b) in added {
            next.add_entry(a, b, 1);
        }
        assert_eq!(
            order.compare_exponents(&next, &current),
            Ordering::Less,
            "rewriting must descend"
        );
        steps.push(Rewrite {
            removed: [e1, e2],
            added,
        });
        current = next;
    }
    (current, steps)
}

/// Reduces `m` modulo the switch binomials of `z` until no non-crossing,
/// color-meeting pair of edges remains.
///
/// If `z` is not non-decreasing the vertices are first relabeled by a stable
/// sort on color, reduced there, and mapped back; the relabeling is returned.
pub fn normal_form(m: &Monomial, z: &Coloring, order: &WeightOrder) -> Result<NormalForm> {
    check_dim(z.n(), m.n())?;
    check_dim(order.n(), m.n())?;
    if z.is_non_decreasing() {
        let (result, steps) = reduce_sorted(m.exponent(), z, order);
        return Ok(NormalForm {
            monomial: Monomial::new(result)?,
            steps,
            permutation: None,
        });
    }
    let perm = z.sorting_permutation();
    let sorted_z = z.permuted(&perm);
    let (result, steps) = reduce_sorted(&m.exponent().permuted(&perm), &sorted_z, order);
    let mut inverse = vec![0; perm.len()];
    for (i, &p) in perm.iter().enumerate() {
        inverse[p] = i;
    }
    let back = |(a, b): (usize, usize)| norm((perm[a], perm[b]));
    let steps = steps
        .into_iter()
        .map(|s| Rewrite {
            removed: s.removed.map(back),
            added: s.added.map(back),
        })
        .collect();
    Ok(NormalForm {
        monomial: Monomial::new(result.permuted(&inverse))?,
        steps,
        permutation: Some(perm),
    })
}

/// Membership of `x^plus - x^minus` in the toric ideal, decided by comparing
/// normal forms.
pub fn in_ideal(b: &Binomial, z: &Coloring, order: &WeightOrder) -> Result<bool> {
    Ok(normal_form(&b.plus, z, order)?.monomial == normal_form(&b.minus, z, order)?.monomial)
}

/// Two same-sign, vertex-disjoint, non-crossing edges whose endpoint colors
/// meet.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PairWitness {
    pub first: (usize, usize),
    pub second: (usize, usize),
    pub sign: i64,
}

/// Searches all same-sign pairs of edges of a monomial walk. `Ok(None)` is
/// returned only for the zero vector or if the search is exhausted.
pub fn find_noncrossing_samecolor_pair(
    g: &EdgeVector,
    z: &Coloring,
) -> Result<Option<PairWitness>> {
    if !z.is_non_decreasing() {
        return Err(Error::NotNonDecreasing);
    }
    if !is_monomial_walk(g, z)? {
        return Err(Error::NotMonomialWalk);
    }
    let edges: Vec<(usize, usize, i64)> = g.support().collect();
    for (i, &(u, v, x)) in edges.iter().enumerate() {
        for &(a, b, y) in &edges[i + 1..] {
            if x.signum() == y.signum()
                && crosses((u, v), (a, b)) == Intersection::NonCrossing
                && colors_meet(z, (u, v), (a, b))
            {
                return Ok(Some(PairWitness {
                    first: (u, v),
                    second: (a, b),
                    sign: x.signum(),
                }));
            }
        }
    }
    Ok(None)
}
