//! Text and JSON renderings shared by the verbs. JSON uses the same 1-based
//! vertex and color numbering as the text records.

use colorswitch::graph::{CDegSequence, Coloring, EdgeVector};
use colorswitch::groebner::Rewrite;
use serde_json::{json, Value};

pub fn colors_1based(z: &Coloring) -> Vec<usize> {
    z.colors().iter().map(|c| c + 1).collect()
}

pub fn graph_json(z: &Coloring, g: &EdgeVector) -> Value {
    let edges: Vec<[i64; 3]> = g
        .support()
        .map(|(u, v, m)| [u as i64 + 1, v as i64 + 1, m])
        .collect();
    json!({ "n": z.n(), "k": z.k(), "colors": colors_1based(z), "edges": edges })
}

pub fn label_json(z: &Coloring, label: &CDegSequence) -> Value {
    json!({
        "n": z.n(),
        "k": z.k(),
        "colors": colors_1based(z),
        "d": label.degrees,
        "c": label.colors,
    })
}

fn pair(p: (usize, usize)) -> [usize; 2] {
    [p.0 + 1, p.1 + 1]
}

pub fn rewrite_json(r: &Rewrite) -> Value {
    json!({ "remove": r.removed.map(pair), "add": r.added.map(pair) })
}

pub fn rewrite_text(r: &Rewrite) -> String {
    let e = |p: (usize, usize)| format!("{}-{}", p.0 + 1, p.1 + 1);
    format!(
        "remove {} {} add {} {}",
        e(r.removed[0]),
        e(r.removed[1]),
        e(r.added[0]),
        e(r.added[1])
    )
}

pub fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}
