use crate::error::{check_dim, Error, Result};
use crate::graph::{all_pairs, Coloring, EdgeVector};

/// Repaints every vertex of color `from` with color `into`. The number of
/// colors is unchanged; `from` simply ends up empty.
pub fn recolor(z: &Coloring, into: usize, from: usize) -> Result<Coloring> {
    let k = z.k();
    if into >= k || from >= k {
        return Err(Error::InvalidColoring(format!(
            "colors {into} and {from} must lie in 0..{k}"
        )));
    }
    let colors = z
        .colors()
        .iter()
        .map(|&c| if c == from { into } else { c })
        .collect();
    Coloring::new(k, colors)
}

/// Collapses the color class of `w` onto `w`: edges from a class member to
/// an outside vertex `v` are summed into `wv`; edges inside the class vanish,
/// as does everything else touching the other class members.
pub fn contract(g: &EdgeVector, w: usize, z: &Coloring) -> Result<EdgeVector> {
    check_dim(z.n(), g.n())?;
    let n = z.n();
    if w >= n {
        return Err(Error::PairOutOfRange { u: w, v: w, n });
    }
    let q = z.color(w);
    let mut out = EdgeVector::zeros(n);
    for (u, v) in all_pairs(n) {
        let x = g.get(u, v);
        if x == 0 {
            continue;
        }
        match (z.color(u) == q, z.color(v) == q) {
            (false, false) => out.add_entry(u, v, x),
            (true, false) => out.add_entry(w, v, x),
            (false, true) => out.add_entry(u, w, x),
            (true, true) => {}
        }
    }
    Ok(out)
}
