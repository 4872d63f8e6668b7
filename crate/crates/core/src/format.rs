//! Plain-text records.
//!
//! A graph record is a header line `n k`, a line with the `n` vertex colors
//! (1-based), then one line `u v m` per nonzero pair (1-based, `u < v`).
//! Move records use the same layout with signed `m`. A label record has the
//! header and colors, then `d: ...` and `c: ...`. Records in one stream are
//! separated by blank lines; lines starting with `#` are ignored.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{num_pairs, CDegSequence, Coloring, EdgeVector};

/// Largest multiplicity accepted from text.
pub const MAX_MULTIPLICITY: i64 = 1 << 62;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphRecord {
    pub coloring: Coloring,
    pub graph: EdgeVector,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabelRecord {
    pub coloring: Coloring,
    pub label: CDegSequence,
}

struct Line<'a> {
    number: usize,
    tokens: Vec<&'a str>,
}

fn perr(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

/// Splits text into records of meaningful lines, keeping 1-based line numbers.
fn records(text: &str) -> Vec<Vec<Line<'_>>> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let trimmed = raw.trim();
        if trimmed.starts_with('#') {
            continue;
        }
        if trimmed.is_empty() {
            if !current.is_empty() {
                out.push(std::mem::take(&mut current));
            }
            continue;
        }
        current.push(Line {
            number: i + 1,
            tokens: trimmed.split_whitespace().collect(),
        });
    }
    if !current.is_empty() {
        out.push(current);
    }
    out
}

fn int<T: std::str::FromStr>(tok: &str, line: usize) -> Result<T> {
    tok.parse()
        .map_err(|_| perr(line, format!("expected an integer, found `{tok}`")))
}

fn header(lines: &[Line<'_>]) -> Result<Coloring> {
    let first = &lines[0];
    if first.tokens.len() != 2 {
        return Err(perr(first.number, "header must be `n k`"));
    }
    let n: usize = int(first.tokens[0], first.number)?;
    let k: usize = int(first.tokens[1], first.number)?;
    let second = lines
        .get(1)
        .ok_or_else(|| perr(first.number, "missing color line"))?;
    if second.tokens.len() != n {
        return Err(perr(
            second.number,
            format!("expected {n} colors, found {}", second.tokens.len()),
        ));
    }
    let mut colors = Vec::with_capacity(n);
    for tok in &second.tokens {
        let c: usize = int(tok, second.number)?;
        if c == 0 || c > k {
            return Err(perr(second.number, format!("color {c} outside 1..{k}")));
        }
        colors.push(c - 1);
    }
    Coloring::new(k, colors).map_err(|e| perr(second.number, e.to_string()))
}

fn graph_body(lines: &[Line<'_>], z: &Coloring, signed: bool) -> Result<EdgeVector> {
    let n = z.n();
    let mut g = EdgeVector::zeros(n);
    let mut seen = vec![false; num_pairs(n)];
    for line in &lines[2..] {
        let ln = line.number;
        if line.tokens.len() != 3 {
            return Err(perr(ln, "edge line must be `u v m`"));
        }
        let u: usize = int(line.tokens[0], ln)?;
        let v: usize = int(line.tokens[1], ln)?;
        let m: i64 = int(line.tokens[2], ln)?;
        if u == 0 || v == 0 || u >= v || v > n {
            return Err(perr(
                ln,
                format!("pair {u} {v} must satisfy 1 <= u < v <= {n}"),
            ));
        }
        if m.unsigned_abs() > MAX_MULTIPLICITY as u64 {
            return Err(perr(ln, "multiplicity exceeds 2^62"));
        }
        if signed {
            if m == 0 {
                return Err(perr(ln, "move entries must be nonzero"));
            }
        } else if m < 1 {
            return Err(perr(ln, "multiplicity must be at least 1"));
        }
        let r = crate::graph::pair_rank(u - 1, v - 1, n);
        if seen[r] {
            return Err(perr(ln, format!("duplicate pair {u} {v}")));
        }
        seen[r] = true;
        g.set(u - 1, v - 1, m);
    }
    Ok(g)
}

fn parse_records(text: &str, signed: bool) -> Result<Vec<GraphRecord>> {
    records(text)
        .iter()
        .map(|lines| {
            let coloring = header(lines)?;
            let graph = graph_body(lines, &coloring, signed)?;
            Ok(GraphRecord { coloring, graph })
        })
        .collect()
}

/// All multigraph records in `text`.
pub fn parse_graphs(text: &str) -> Result<Vec<GraphRecord>> {
    parse_records(text, false)
}

/// All move records (signed entries) in `text`.
pub fn parse_moves(text: &str) -> Result<Vec<GraphRecord>> {
    parse_records(text, true)
}

fn exactly_one<T>(mut items: Vec<T>, what: &str) -> Result<T> {
    match items.len() {
        1 => Ok(items.pop().unwrap()),
        found => Err(perr(
            0,
            format!("expected exactly one {what} record, found {found}"),
        )),
    }
}

pub fn parse_graph(text: &str) -> Result<GraphRecord> {
    exactly_one(parse_graphs(text)?, "graph")
}

pub fn parse_move(text: &str) -> Result<GraphRecord> {
    exactly_one(parse_moves(text)?, "move")
}

/// A coloring record: header and color line only.
pub fn parse_coloring(text: &str) -> Result<Coloring> {
    let recs = records(text);
    let lines = exactly_one(recs, "coloring")?;
    if lines.len() != 2 {
        return Err(perr(
            lines[0].number,
            "a coloring record has exactly two lines",
        ));
    }
    header(&lines)
}

fn prefixed_vec(line: &Line<'_>, prefix: &str, len: usize) -> Result<Vec<i64>> {
    let ln = line.number;
    let rest: Vec<&str> = match line.tokens.first() {
        Some(&t) if t == prefix => line.tokens[1..].to_vec(),
        Some(t) if t.starts_with(prefix) => std::iter::once(&t[prefix.len()..])
            .chain(line.tokens[1..].iter().copied())
            .collect(),
        _ => return Err(perr(ln, format!("expected a `{prefix}` line"))),
    };
    if rest.len() != len {
        return Err(perr(
            ln,
            format!("`{prefix}` needs {len} entries, found {}", rest.len()),
        ));
    }
    rest.iter()
        .map(|t| {
            let x: i64 = int(t, ln)?;
            if x < 0 {
                return Err(perr(ln, "label entries must be nonnegative"));
            }
            Ok(x)
        })
        .collect()
}

pub fn parse_label(text: &str) -> Result<LabelRecord> {
    let lines = exactly_one(records(text), "label")?;
    let coloring = header(&lines)?;
    if lines.len() != 4 {
        return Err(perr(
            lines[0].number,
            "a label record has header, colors, `d:` and `c:` lines",
        ));
    }
    let degrees = prefixed_vec(&lines[2], "d:", coloring.n())?;
    let colors = prefixed_vec(&lines[3], "c:", coloring.num_cells())?;
    Ok(LabelRecord {
        coloring,
        label: CDegSequence::new(degrees, colors),
    })
}

fn write_header(out: &mut String, z: &Coloring) {
    let _ = writeln!(out, "{} {}", z.n(), z.k());
    let colors: Vec<String> = z.colors().iter().map(|c| (c + 1).to_string()).collect();
    let _ = writeln!(out, "{}", colors.join(" "));
}

/// Writes one record; works for multigraphs and moves alike.
pub fn write_graph(z: &Coloring, g: &EdgeVector) -> String {
    let mut out = String::new();
    write_header(&mut out, z);
    for (u, v, m) in g.support() {
        let _ = writeln!(out, "{} {} {}", u + 1, v + 1, m);
    }
    out
}

pub fn write_coloring(z: &Coloring) -> String {
    let mut out = String::new();
    write_header(&mut out, z);
    out
}

pub fn write_label(z: &Coloring, label: &CDegSequence) -> String {
    let mut out = String::new();
    write_header(&mut out, z);
    let join = |xs: &[i64]| {
        xs.iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    };
    let _ = writeln!(out, "d: {}", join(&label.degrees));
    let _ = writeln!(out, "c: {}", join(&label.colors));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const FIVE_VERTEX: &str = "\
# five vertices
5 3
1 1 2 2 3
1 2 1
1 3 2
1 5 1
2 4 1
2 5 2
3 5 1
4 5 3
";

    #[test]
    fn graph_round_trip() {
        let rec = parse_graph(FIVE_VERTEX).unwrap();
        assert_eq!(rec.graph.total(), 11);
        assert_eq!(rec.graph.get(3, 4), 3);
        let text = write_graph(&rec.coloring, &rec.graph);
        assert_eq!(parse_graph(&text).unwrap(), rec);
    }

    #[test]
    fn several_records() {
        let text = format!("{FIVE_VERTEX}\n\n{FIVE_VERTEX}");
        assert_eq!(parse_graphs(&text).unwrap().len(), 2);
        assert!(parse_graph(&text).is_err());
    }

    #[test]
    fn rejects_malformed_lines() {
        let bad = [
            "2 1\n1 1\n1 2 1\n1 2 1\n",
            "2 1\n1 1\n2 1 1\n",
            "2 1\n1 1\n1 2 0\n",
            "2 1\n1 1\n1 2 -1\n",
            "2 1\n1 2\n",
            "2 1\n1\n",
            "3 1\n1 1 1\n1 3 4611686018427387905\n",
            "2 1\n1 1\n1 2 x\n",
        ];
        for text in bad {
            assert!(
                matches!(parse_graph(text), Err(Error::Parse { .. })),
                "{text:?}"
            );
        }
    }

    #[test]
    fn moves_allow_signs() {
        let text = "4 1\n1 1 1 1\n1 2 1\n1 3 -1\n2 4 -1\n3 4 1\n";
        let rec = parse_move(text).unwrap();
        assert_eq!(rec.graph.norm1(), 4);
        assert!(parse_graph(text).is_err());
        assert_eq!(
            parse_move(&write_graph(&rec.coloring, &rec.graph)).unwrap(),
            rec
        );
        assert!(parse_move("2 1\n1 1\n1 2 0\n").is_err());
    }

    #[test]
    fn label_round_trip() {
        let text = "5 3\n1 1 2 2 3\nd: 4 4 3 4 7\nc: 1 3 3 0 4 0\n";
        let rec = parse_label(text).unwrap();
        assert_eq!(rec.label.degrees, vec![4, 4, 3, 4, 7]);
        assert_eq!(
            parse_label(&write_label(&rec.coloring, &rec.label)).unwrap(),
            rec
        );
        assert!(parse_label("5 3\n1 1 2 2 3\nd: 4 4 3 4\nc: 1 3 3 0 4 0\n").is_err());
        assert!(parse_label("5 3\n1 1 2 2 3\nc: 1 3 3 0 4 0\nd: 4 4 3 4 7\n").is_err());
    }

    #[test]
    fn coloring_record() {
        let z = parse_coloring("3 2\n2 1 2\n").unwrap();
        assert_eq!(z.colors(), &[1, 0, 1]);
        assert_eq!(parse_coloring(&write_coloring(&z)).unwrap(), z);
        assert!(parse_coloring("3 2\n2 1 3\n").is_err());
    }
}
