//! Brute-force oracles and generators shared by the integration tests.
//! Nothing here calls the statistics or enumeration code under test.
#![allow(dead_code)]

use std::collections::HashMap;

use colorswitch::{Coloring, EdgeVector};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Pairs of `[n]` in lexicographic order, computed the slow way.
pub fn pairs(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            out.push((u, v));
        }
    }
    out
}

/// `(d⁺ - d⁻ ; c⁺ - c⁻)` from first principles, color cells keyed by `(i, j)`, `i <= j`.
pub fn dc_image(entries: &[i64], n: usize, colors: &[usize], k: usize) -> Vec<i64> {
    let mut deg = vec![0i64; n];
    let mut cells: HashMap<(usize, usize), i64> = HashMap::new();
    for (idx, (u, v)) in pairs(n).into_iter().enumerate() {
        let x = entries[idx];
        if x == 0 {
            continue;
        }
        deg[u] += x;
        deg[v] += x;
        let (a, b) = (colors[u].min(colors[v]), colors[u].max(colors[v]));
        *cells.entry((a, b)).or_default() += x;
    }
    let mut out = deg;
    for i in 0..k {
        for j in i..k {
            out.push(cells.get(&(i, j)).copied().unwrap_or(0));
        }
    }
    out
}

pub fn image_of(g: &EdgeVector, z: &Coloring) -> Vec<i64> {
    dc_image(g.entries(), g.n(), z.colors(), z.k())
}

pub fn in_kernel(g: &EdgeVector, z: &Coloring) -> bool {
    image_of(g, z).iter().all(|&x| x == 0)
}

/// Restricted growth strings with at most `max_blocks` blocks: colorings up to
/// renaming of colors.
pub fn set_partitions(n: usize, max_blocks: usize) -> Vec<Vec<usize>> {
    fn go(
        n: usize,
        max_blocks: usize,
        cur: &mut Vec<usize>,
        used: usize,
        out: &mut Vec<Vec<usize>>,
    ) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        let limit = (used + 1).min(max_blocks);
        for c in 0..limit {
            cur.push(c);
            go(n, max_blocks, cur, used.max(c + 1), out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, max_blocks, &mut Vec::new(), 0, &mut out);
    out
}

/// Non-decreasing colorings with `k` nonempty classes, for `k` in `1..=max_k`.
pub fn non_decreasing_colorings(n: usize, max_k: usize) -> Vec<Coloring> {
    set_partitions(n, max_k)
        .into_iter()
        .filter(|c| c.windows(2).all(|w| w[0] <= w[1]))
        .map(|c| {
            let k = c.iter().max().unwrap() + 1;
            Coloring::new(k, c).unwrap()
        })
        .collect()
}

/// Every multigraph on `[n]` with exactly `r` edges.
pub fn multigraphs_with_edges(n: usize, r: i64) -> Vec<EdgeVector> {
    fn go(pos: usize, left: i64, cur: &mut Vec<i64>, n: usize, out: &mut Vec<EdgeVector>) {
        if pos == cur.len() {
            if left == 0 {
                out.push(EdgeVector::from_entries(n, cur.clone()).unwrap());
            }
            return;
        }
        for m in 0..=left {
            cur[pos] = m;
            go(pos + 1, left - m, cur, n, out);
        }
        cur[pos] = 0;
    }
    let mut out = Vec::new();
    go(0, r, &mut vec![0; pairs(n).len()], n, &mut out);
    out
}

/// All vectors with 1-norm exactly `norm`.
pub fn vectors_of_norm(n: usize, norm: i64) -> Vec<EdgeVector> {
    fn go(pos: usize, left: i64, cur: &mut Vec<i64>, n: usize, out: &mut Vec<EdgeVector>) {
        if pos == cur.len() {
            if left == 0 {
                out.push(EdgeVector::from_entries(n, cur.clone()).unwrap());
            }
            return;
        }
        go(pos + 1, left, cur, n, out);
        for m in 1..=left {
            for s in [1, -1] {
                cur[pos] = s * m;
                go(pos + 1, left - m, cur, n, out);
            }
        }
        cur[pos] = 0;
    }
    let mut out = Vec::new();
    go(0, norm, &mut vec![0; pairs(n).len()], n, &mut out);
    out
}

pub fn random_coloring(rng: &mut impl Rng, n: usize, max_k: usize) -> Coloring {
    let k = rng.gen_range(1..=max_k);
    Coloring::new(k, (0..n).map(|_| rng.gen_range(0..k)).collect()).unwrap()
}

pub fn random_multigraph(rng: &mut impl Rng, n: usize, edges: usize) -> EdgeVector {
    let mut g = EdgeVector::zeros(n);
    for _ in 0..edges {
        let u = rng.gen_range(0..n);
        let mut v = rng.gen_range(0..n - 1);
        if v >= u {
            v += 1;
        }
        g.add_entry(u, v, 1);
    }
    g
}

pub fn random_signed(rng: &mut impl Rng, n: usize, max_abs: i64) -> EdgeVector {
    let len = pairs(n).len();
    EdgeVector::from_entries(
        n,
        (0..len)
            .map(|_| rng.gen_range(-max_abs..=max_abs))
            .collect(),
    )
    .unwrap()
}

/// A random kernel vector: a small integer combination of switches whose
/// opposite corners share a color, built without the library enumerator.
pub fn random_kernel_vector(rng: &mut impl Rng, z: &Coloring, terms: usize) -> EdgeVector {
    let n = z.n();
    let mut g = EdgeVector::zeros(n);
    let mut added = 0;
    let mut guard = 0;
    while added < terms && guard < 10_000 {
        guard += 1;
        let vs: [usize; 4] = std::array::from_fn(|_| rng.gen_range(0..n));
        let distinct = (0..4).all(|i| (i + 1..4).all(|j| vs[i] != vs[j]));
        if !distinct {
            continue;
        }
        let [a, b, c, d] = vs;
        if z.color(a) != z.color(c) && z.color(b) != z.color(d) {
            continue;
        }
        let s = if rng.gen_bool(0.5) { 1 } else { -1 };
        g.add_entry(a, b, s);
        g.add_entry(b, c, -s);
        g.add_entry(c, d, s);
        g.add_entry(d, a, -s);
        added += 1;
    }
    g
}

/// A random closed alternating walk `[v1 .. v2l]` with no repeated
/// consecutive vertices.
pub fn random_brackets(rng: &mut impl Rng, n: usize, len: usize) -> Vec<usize> {
    loop {
        let vs: Vec<usize> = (0..len).map(|_| rng.gen_range(0..n)).collect();
        if (0..len).all(|i| vs[i] != vs[(i + 1) % len]) {
            return vs;
        }
    }
}

/// Segment intersection for points on the unit circle, by orientation tests.
pub fn chords_cross(n: usize, (a, b): (usize, usize), (c, d): (usize, usize)) -> bool {
    let p = |i: usize| {
        let t = 2.0 * std::f64::consts::PI * i as f64 / n as f64;
        (t.cos(), t.sin())
    };
    let orient = |o: (f64, f64), x: (f64, f64), y: (f64, f64)| {
        (x.0 - o.0) * (y.1 - o.1) - (x.1 - o.1) * (y.0 - o.0)
    };
    let (pa, pb, pc, pd) = (p(a), p(b), p(c), p(d));
    let d1 = orient(pa, pb, pc);
    let d2 = orient(pa, pb, pd);
    let d3 = orient(pc, pd, pa);
    let d4 = orient(pc, pd, pb);
    d1 * d2 < 0.0 && d3 * d4 < 0.0
}
