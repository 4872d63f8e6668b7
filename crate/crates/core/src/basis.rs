//! Quadratic moves (switches) and move sets.

use std::collections::HashSet;

use crate::error::{check_dim, Error, Result};
use crate::graph::{is_monomial_walk, num_pairs, pair_rank, Coloring, EdgeVector};

/// A kernel vector stored with the sign that makes its first nonzero entry
/// positive. For a switch this puts the lexicographically smallest pair on
/// the positive side.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Move {
    vector: EdgeVector,
    support: Vec<(usize, i64)>,
}

impl Move {
    /// Validates kernel membership and canonicalizes the sign.
    pub fn new(vector: EdgeVector, z: &Coloring) -> Result<Move> {
        if vector.is_zero() || !is_monomial_walk(&vector, z)? {
            return Err(Error::NotMonomialWalk);
        }
        Ok(Move::canonical(vector))
    }

    fn canonical(vector: EdgeVector) -> Move {
        let first = vector.entries().iter().copied().find(|&x| x != 0);
        let vector = match first {
            Some(x) if x < 0 => -&vector,
            _ => vector,
        };
        let support = vector
            .entries()
            .iter()
            .enumerate()
            .filter(|(_, &x)| x != 0)
            .map(|(i, &x)| (i, x))
            .collect();
        Move { vector, support }
    }

    pub fn vector(&self) -> &EdgeVector {
        &self.vector
    }

    /// Nonzero entries as `(pair rank, value)`.
    pub fn support(&self) -> &[(usize, i64)] {
        &self.support
    }

    pub fn norm1(&self) -> i64 {
        self.vector.norm1()
    }

    /// `[u v u' v']` with `+uv, -vu', +u'v', -v'u`, starting at the smaller
    /// endpoint of the smallest positive pair. `None` unless the move is a
    /// 4-cycle with unit entries.
    pub fn to_brackets(&self) -> Option<[usize; 4]> {
        four_cycle(&self.vector)
    }
}

fn four_cycle(g: &EdgeVector) -> Option<[usize; 4]> {
    let support: Vec<_> = g.support().collect();
    if support.len() != 4 || support.iter().any(|&(_, _, x)| x.abs() != 1) {
        return None;
    }
    let (u, v, first) = support[0];
    let sign = first;
    let next = |from: usize, avoid: usize, want: i64| {
        support.iter().find_map(|&(a, b, x)| {
            if x != want {
                return None;
            }
            let other = if a == from {
                b
            } else if b == from {
                a
            } else {
                return None;
            };
            (other != avoid).then_some(other)
        })
    };
    let w = next(v, u, -sign)?;
    let x = next(w, v, sign)?;
    if x == u || x == v || w == u {
        return None;
    }
    if g.get(x, u) != -sign {
        return None;
    }
    Some([u, v, w, x])
}

/// A set of moves, deduplicated up to sign.
#[derive(Debug, Clone)]
pub struct MoveSet {
    z: Coloring,
    moves: Vec<Move>,
    seen: HashSet<EdgeVector>,
}

impl MoveSet {
    pub fn empty(z: &Coloring) -> MoveSet {
        MoveSet {
            z: z.clone(),
            moves: Vec::new(),
            seen: HashSet::new(),
        }
    }

    /// Builds a set from arbitrary kernel vectors; duplicates and negatives collapse.
    pub fn from_vectors<I>(z: &Coloring, vectors: I) -> Result<MoveSet>
    where
        I: IntoIterator<Item = EdgeVector>,
    {
        let mut set = MoveSet::empty(z);
        for v in vectors {
            set.insert(Move::new(v, z)?);
        }
        Ok(set)
    }

    /// Returns false if the move (or its negative) was already present.
    pub fn insert(&mut self, m: Move) -> bool {
        if self.seen.insert(m.vector.clone()) {
            self.moves.push(m);
            true
        } else {
            false
        }
    }

    pub fn coloring(&self) -> &Coloring {
        &self.z
    }

    pub fn n(&self) -> usize {
        self.z.n()
    }

    pub fn len(&self) -> usize {
        self.moves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.moves.is_empty()
    }

    pub fn moves(&self) -> &[Move] {
        &self.moves
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Move> {
        self.moves.iter()
    }

    /// Whether `g` or `-g` is in the set.
    pub fn contains(&self, g: &EdgeVector) -> bool {
        self.seen.contains(g) || self.seen.contains(&-g)
    }

    /// The canonical vectors, sorted, for comparisons.
    pub fn sorted_vectors(&self) -> Vec<EdgeVector> {
        let mut v: Vec<_> = self.moves.iter().map(|m| m.vector.clone()).collect();
        v.sort();
        v
    }
}

impl<'a> IntoIterator for &'a MoveSet {
    type Item = &'a Move;
    type IntoIter = std::slice::Iter<'a, Move>;

    fn into_iter(self) -> Self::IntoIter {
        self.moves.iter()
    }
}

fn matching_move(n: usize, plus: [(usize, usize); 2], minus: [(usize, usize); 2]) -> Move {
    let mut entries = vec![0; num_pairs(n)];
    for (a, b) in plus {
        entries[pair_rank(a, b, n)] = 1;
    }
    for (a, b) in minus {
        entries[pair_rank(a, b, n)] = -1;
    }
    Move::canonical(EdgeVector::from_entries(n, entries).expect("sized above"))
}

/// All switches on `[n]` whose 4-cycle has a pair of opposite vertices with
/// equal colors.
///
/// For `a < b < c < d` the three perfect matchings are `{ab, cd}`,
/// `{ac, bd}` and `{ad, bc}`. The difference of two of them is a move
/// exactly when the third matching (the diagonals of the cycle) has a
/// monochromatic pair.
pub fn enumerate_quadratic_moves(z: &Coloring) -> MoveSet {
    let n = z.n();
    let mut set = MoveSet::empty(z);
    let same = |x: usize, y: usize| z.color(x) == z.color(y);
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    let ma = [(a, b), (c, d)];
                    let mb = [(a, c), (b, d)];
                    let mc = [(a, d), (b, c)];
                    if same(a, d) || same(b, c) {
                        set.insert(matching_move(n, ma, mb));
                    }
                    if same(a, c) || same(b, d) {
                        set.insert(matching_move(n, ma, mc));
                    }
                    if same(a, b) || same(c, d) {
                        set.insert(matching_move(n, mb, mc));
                    }
                }
            }
        }
    }
    set
}

/// Combinatorial test: `g` is a unit 4-cycle `[u v u' v']` with
/// `z(u) = z(u')` or `z(v) = z(v')`.
pub fn is_basis_move(g: &EdgeVector, z: &Coloring) -> bool {
    if g.n() != z.n() {
        return false;
    }
    match four_cycle(g) {
        Some([u, v, w, x]) => z.color(u) == z.color(w) || z.color(v) == z.color(x),
        None => false,
    }
}

/// `g + m`, or `None` when some entry would turn negative.
pub fn apply_move(g: &EdgeVector, m: &EdgeVector) -> Result<Option<EdgeVector>> {
    check_dim(g.n(), m.n())?;
    g.require_multigraph()?;
    let next = g + m;
    Ok(next.is_multigraph().then_some(next))
}

/// In-place `g += sign * m` if the result stays nonnegative; returns
/// whether the step was taken. `g` is untouched on rejection.
pub fn try_apply_in_place(g: &mut EdgeVector, m: &Move, sign: i64) -> bool {
    let entries = g.entries_mut();
    if m.support.iter().any(|&(i, x)| entries[i] + sign * x < 0) {
        return false;
    }
    for &(i, x) in &m.support {
        entries[i] += sign * x;
    }
    true
}

/// Largest instance accepted by the exhaustive kernel scan.
pub const KERNEL_SCAN_MAX_PAIRS: usize = 28;

/// Every nonzero kernel vector with 1-norm at most `max_norm`, each up to
/// sign once (first nonzero entry positive). Exhaustive; meant for small `n`.
pub fn kernel_vectors_up_to_norm(z: &Coloring, max_norm: i64) -> Result<Vec<EdgeVector>> {
    let n = z.n();
    let pairs = num_pairs(n);
    if pairs > KERNEL_SCAN_MAX_PAIRS {
        return Err(Error::GuardExceeded(format!(
            "kernel scan needs C(n,2) <= {KERNEL_SCAN_MAX_PAIRS}, got {pairs}"
        )));
    }
    let mut out = Vec::new();
    let mut entries = vec![0i64; pairs];
    scan(z, 0, max_norm, false, &mut entries, &mut out);
    Ok(out)
}

fn scan(
    z: &Coloring,
    pos: usize,
    budget: i64,
    started: bool,
    entries: &mut Vec<i64>,
    out: &mut Vec<EdgeVector>,
) {
    if pos == entries.len() {
        if started {
            let g = EdgeVector::from_entries(z.n(), entries.clone()).expect("sized");
            if is_monomial_walk(&g, z).expect("same n") {
                out.push(g);
            }
        }
        return;
    }
    scan(z, pos + 1, budget, started, entries, out);
    for x in 1..=budget {
        for s in [1, -1] {
            if s < 0 && !started {
                continue;
            }
            entries[pos] = s * x;
            scan(z, pos + 1, budget - x, true, entries, out);
        }
    }
    entries[pos] = 0;
}

/// The smallest 1-norm of a nonzero kernel vector, if one of norm `<= 4`
/// exists. `None` means no nonzero kernel vector has norm at most 4.
pub fn minimal_norm_check(z: &Coloring) -> Result<Option<i64>> {
    Ok(kernel_vectors_up_to_norm(z, 4)?
        .iter()
        .map(|g| g.norm1())
        .min())
}
