use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

use colorswitch::format::{parse_graph, parse_graphs, parse_label, parse_move};
use colorswitch::graph::cdeg;
use colorswitch::{Coloring, EdgeVector};
use serde_json::Value;

fn data(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "..", "data", name]
        .iter()
        .collect();
    p.to_string_lossy().into_owned()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_colorswitch"))
        .args(args)
        .env_remove("COLORSWITCH_MAX_EDGES")
        .env_remove("COLORSWITCH_MAX_ELEMENTS")
        .output()
        .unwrap()
}

fn run_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_colorswitch"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn json_lines(o: &Output) -> Vec<Value> {
    stdout(o)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect()
}

/// Rebuilds a graph from its JSON rendering.
fn from_json(v: &Value) -> (Coloring, EdgeVector) {
    let n = v["n"].as_u64().unwrap() as usize;
    let k = v["k"].as_u64().unwrap() as usize;
    let colors = v["colors"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c.as_u64().unwrap() as usize - 1)
        .collect();
    let z = Coloring::new(k, colors).unwrap();
    let edges = v["edges"].as_array().unwrap().iter().map(|e| {
        let e = e.as_array().unwrap();
        (
            e[0].as_u64().unwrap() as usize - 1,
            e[1].as_u64().unwrap() as usize - 1,
            e[2].as_i64().unwrap(),
        )
    });
    (z, EdgeVector::from_edges(n, edges).unwrap())
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

#[test]
fn family_verify_line() {
    let o = run(&["prop31", "--k", "6", "--verify"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "fiber=2 distance=12 verified=true\n");
    let j = json_lines(&run(&["--json", "prop31", "--k", "6", "--verify"]));
    assert_eq!(j.len(), 1);
    assert_eq!(
        (
            j[0]["fiber"].as_u64(),
            j[0]["distance"].as_i64(),
            j[0]["verified"].as_bool()
        ),
        (Some(2), Some(12), Some(true))
    );
}

#[test]
fn eight_vertex_simple_count() {
    let o = run(&["enumerate", "--label", &data("eight.label"), "--simple"]);
    assert_eq!(stdout(&o), "count=2\n");
}

#[test]
fn count_check_reports_mismatch_with_reason() {
    let o = run(&["count", "--n1", "2", "--n2", "2", "--r", "0", "--check"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    let first = text.lines().next().unwrap();
    assert_eq!(first, "formula=4 oracle=1 match=false");
    assert!(text
        .lines()
        .nth(1)
        .unwrap()
        .starts_with("# suspected typo:"));
    let j = &json_lines(&run(&[
        "--json", "count", "--n1", "2", "--n2", "2", "--r", "0", "--check",
    ]))[0];
    assert_eq!(
        format!(
            "formula={} oracle={} match={}",
            j["formula"].as_str().unwrap(),
            j["oracle"],
            j["match"]
        ),
        first
    );
    assert!(j["suspected_typo"].is_string());
    let o = run(&["count", "--n1", "1", "--n2", "2", "--r", "0", "--check"]);
    assert_eq!(stdout(&o), "formula=1 oracle=1 match=true\n");
}

#[test]
fn realize_round_trip() {
    let label = parse_label(&std::fs::read_to_string(data("five.label")).unwrap()).unwrap();
    let o = run(&["realize", "--label", &data("five.label")]);
    assert_eq!(code(&o), 0);
    let rec = parse_graph(&stdout(&o)).unwrap();
    assert_eq!(cdeg(&rec.graph, &rec.coloring).unwrap(), label.label);
    let j = &json_lines(&run(&[
        "--json",
        "realize",
        "--label",
        &data("five.label"),
    ]))[0];
    assert_eq!(j["feasible"], Value::Bool(true));
    assert_eq!(from_json(&j["graph"]), (rec.coloring, rec.graph));
}

#[test]
fn infeasible_exit_one() {
    let text = "2 2\n1 2\nd: 1 1\nc: 1 0 0\n";
    let o = run_stdin(&["realize"], text);
    assert_eq!(code(&o), 1);
    assert_eq!(stdout(&o), "INFEASIBLE\n");
    assert!(stderr(&o).starts_with("error: kind=infeasible reason="));
    let o = run_stdin(&["--json", "realize", "--label", "-"], text);
    assert_eq!(code(&o), 1);
    assert_eq!(json_lines(&o)[0]["feasible"], Value::Bool(false));
}

#[test]
fn usage_and_input_errors_exit_two() {
    let o = run(&["enumerate", "--bogus"]);
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).starts_with("error: kind=usage reason="));
    let o = run(&["frobnicate"]);
    assert_eq!(code(&o), 2);
    let o = run_stdin(&["enumerate"], "3 1\n1 1 1\nd: 1 1\nc: 1\n");
    assert_eq!(code(&o), 2);
    let err = stderr(&o);
    assert!(err.starts_with("error: kind=parse reason="), "{err}");
    assert_eq!(err.lines().count(), 1);
    let o = run(&["sample", "--label", &data("five.label"), "--thin", "0"]);
    assert_eq!(code(&o), 2);
    let o = run(&["--json", "realize", "--label", "/nonexistent/file"]);
    assert_eq!(code(&o), 2);
    let e: Value = serde_json::from_str(stderr(&o).trim()).unwrap();
    assert_eq!(e["error"], "usage");
}

#[test]
fn guard_override_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_colorswitch"))
        .args(["enumerate", "--label", &data("five.label")])
        .env("COLORSWITCH_MAX_EDGES", "5")
        .output()
        .unwrap();
    assert_eq!(code(&o), 1);
    assert!(stderr(&o).starts_with("error: kind=guard-exceeded"));
    let o = run(&[
        "enumerate",
        "--label",
        &data("five.label"),
        "--max-elements",
        "3",
    ]);
    assert_eq!(code(&o), 1);
    let help = stdout(&run(&["--help"]));
    assert!(help.contains("COLORSWITCH_MAX_EDGES"));
}

#[test]
fn enumerate_print_matches_json() {
    let o = run(&["enumerate", "--label", &data("five.label"), "--print"]);
    let text = stdout(&o);
    let (head, rest) = text.split_once('\n').unwrap();
    let plain = parse_graphs(rest).unwrap();
    assert_eq!(head, format!("count={}", plain.len()));
    let j = json_lines(&run(&[
        "--json",
        "enumerate",
        "--label",
        &data("five.label"),
        "--print",
    ]));
    assert_eq!(j[0]["count"].as_u64().unwrap() as usize, plain.len());
    let elems: Vec<_> = j[1..].iter().map(|v| from_json(&v["graph"])).collect();
    let plain: Vec<_> = plain.into_iter().map(|r| (r.coloring, r.graph)).collect();
    assert_eq!(elems, plain);
}

#[test]
fn verify_basis_lists_components() {
    let o = run(&["verify-basis", "--label", &data("eight.label"), "--simple"]);
    let text = stdout(&o);
    let (head, rest) = text.split_once('\n').unwrap();
    assert_eq!(head, "elements=2 components=2 connected=false");
    let reps = parse_graphs(rest).unwrap();
    let j = &json_lines(&run(&[
        "--json",
        "verify-basis",
        "--label",
        &data("eight.label"),
        "--simple",
    ]))[0];
    let jr: Vec<_> = j["representatives"]
        .as_array()
        .unwrap()
        .iter()
        .map(from_json)
        .collect();
    assert_eq!(
        jr,
        reps.into_iter()
            .map(|r| (r.coloring, r.graph))
            .collect::<Vec<_>>()
    );
    let o = run(&["verify-basis", "--label", &data("eight.label")]);
    assert_eq!(stdout(&o), "elements=16847 components=1 connected=true\n");
}

#[test]
fn moves_match_json() {
    let text = stdout(&run(&["moves", "--coloring", &data("five.coloring")]));
    let (head, rest) = text.split_once('\n').unwrap();
    let plain = colorswitch::format::parse_moves(rest).unwrap();
    assert_eq!(head, format!("count={}", plain.len()));
    let j = json_lines(&run(&[
        "--json",
        "moves",
        "--coloring",
        &data("five.coloring"),
    ]));
    assert_eq!(j.len(), plain.len() + 1);
    for (v, r) in j[1..].iter().zip(&plain) {
        assert_eq!(from_json(&v["graph"]).1, r.graph);
        assert_eq!(r.graph.norm1(), 4);
    }
}

#[test]
fn normal_form_plain_and_json_agree() {
    let o = run(&["normal-form", "--graph", &data("five.graph")]);
    let text = stdout(&o);
    let rec = parse_graph(&text).unwrap();
    let steps: Vec<&str> = text.lines().filter(|l| l.starts_with("# step ")).collect();
    let j = &json_lines(&run(&[
        "--json",
        "normal-form",
        "--graph",
        &data("five.graph"),
    ]))[0];
    assert_eq!(
        from_json(&j["graph"]),
        (rec.coloring.clone(), rec.graph.clone())
    );
    let js = j["steps"].as_array().unwrap();
    assert_eq!(js.len(), steps.len());
    assert!(text.contains(&format!("# steps={}", js.len())));
    for (line, s) in steps.iter().zip(js) {
        let e = |p: &Value| format!("{}-{}", p[0], p[1]);
        let expect = format!(
            "remove {} {} add {} {}",
            e(&s["remove"][0]),
            e(&s["remove"][1]),
            e(&s["add"][0]),
            e(&s["add"][1])
        );
        assert!(line.ends_with(&expect), "{line} vs {expect}");
    }
    // same label as the input
    let input = parse_graph(&std::fs::read_to_string(data("five.graph")).unwrap()).unwrap();
    assert_eq!(
        cdeg(&rec.graph, &rec.coloring).unwrap(),
        cdeg(&input.graph, &input.coloring).unwrap()
    );
}

#[test]
fn normal_form_with_coloring_override_relabels() {
    let g = "4 2\n1 2 1 2\n1 2 1\n3 4 1\n";
    let o = run_stdin(&["normal-form"], g);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("# relabeling=1 3 2 4"));
    let o = run_stdin(
        &[
            "--json",
            "normal-form",
            "--coloring",
            &data("five.coloring"),
        ],
        g,
    );
    assert_eq!(code(&o), 2);
}

#[test]
fn in_ideal_of_walk_and_non_walk() {
    let o = run(&["in-ideal", "--binomial", &data("walk.move")]);
    let text = stdout(&o);
    assert!(text.starts_with("in_ideal=true\n"));
    let forms = parse_graphs(&text["in_ideal=true\n".len()..]).unwrap();
    assert_eq!(forms.len(), 2);
    assert_eq!(forms[0], forms[1]);
    let not = "5 3\n1 1 2 2 3\n1 2 1\n3 4 -1\n";
    let j = &json_lines(&run_stdin(&["--json", "in-ideal"], not))[0];
    assert_eq!(j["in_ideal"], Value::Bool(false));
    assert_ne!(j["plus"], j["minus"]);
}

#[test]
fn contract_example_walk() {
    let o = run(&["contract", "--walk", &data("walk.move"), "--vertex", "1"]);
    let rec = parse_move(&stdout(&o)).unwrap();
    let expected = colorswitch::walk_from_brackets(&[0, 3, 4, 2], 5).unwrap();
    assert_eq!(rec.graph, expected);
    let j = &json_lines(&run(&[
        "--json",
        "contract",
        "--walk",
        &data("walk.move"),
        "--vertex",
        "1",
    ]))[0];
    assert_eq!(from_json(&j["graph"]).1, expected);
    let o = run_stdin(&["contract", "--vertex", "3"], &stdout(&o));
    assert_eq!(stdout(&o), "5 3\n1 1 2 2 3\n");
    assert_eq!(
        code(&run(&[
            "contract",
            "--walk",
            &data("walk.move"),
            "--vertex",
            "9"
        ])),
        2
    );
}

#[test]
fn family_instance_records() {
    let text = stdout(&run(&["prop31", "--k", "4"]));
    let parts: Vec<&str> = text.split("\n\n").collect();
    assert_eq!(parts.len(), 3);
    let label = parse_label(parts[0]).unwrap();
    let first = parse_graph(parts[1]).unwrap();
    let second = parse_graph(parts[2]).unwrap();
    assert_eq!(cdeg(&first.graph, &first.coloring).unwrap(), label.label);
    assert_eq!(cdeg(&second.graph, &second.coloring).unwrap(), label.label);
    assert_eq!((&first.graph - &second.graph).norm1(), 8);
    let j = &json_lines(&run(&["--json", "prop31", "--k", "4"]))[0];
    assert_eq!(from_json(&j["first"]).1, first.graph);
    assert_eq!(j["label"]["d"].as_array().unwrap().len(), 8);
    assert_eq!(code(&run(&["prop31", "--k", "2"])), 2);
}

#[test]
fn sample_stream_is_deterministic_and_in_fiber() {
    let args = [
        "sample",
        "--label",
        &data("five.label"),
        "--steps",
        "2000",
        "--burn-in",
        "100",
        "--thin",
        "50",
        "--seed",
        "9",
    ];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    let text = stdout(&a);
    let samples = parse_graphs(&text).unwrap();
    assert_eq!(samples.len(), 38);
    let label = parse_label(&std::fs::read_to_string(data("five.label")).unwrap()).unwrap();
    for s in &samples {
        assert_eq!(cdeg(&s.graph, &s.coloring).unwrap(), label.label);
    }
    let mut json_args = vec!["--json"];
    json_args.extend(args);
    let j = json_lines(&run(&json_args));
    let js: Vec<_> = j
        .iter()
        .filter(|v| v["verb"] == "sample")
        .map(|v| from_json(&v["graph"]).1)
        .collect();
    assert_eq!(
        js,
        samples.iter().map(|s| s.graph.clone()).collect::<Vec<_>>()
    );
    let summary = j.iter().find(|v| v["verb"] == "sample-summary").unwrap();
    assert_eq!(summary["samples"], 38);
    assert!(text.contains(&format!("accepted={}", summary["accepted"])));
}

#[test]
fn parallel_chains_are_tagged_and_diagnosed() {
    let args = [
        "--json",
        "sample",
        "--label",
        &data("five.label"),
        "--steps",
        "20000",
        "--thin",
        "10",
        "--chains",
        "3",
        "--diagnose",
    ];
    let j = json_lines(&run(&args));
    for c in 0..3 {
        let n = j
            .iter()
            .filter(|v| v["verb"] == "sample" && v["chain"] == c)
            .count();
        assert_eq!(n, 2000);
        let u = j
            .iter()
            .find(|v| v["verb"] == "uniformity" && v["chain"] == c)
            .unwrap();
        assert_eq!(u["states"], 20);
        assert_eq!(u["samples"], 2000);
    }
    let seeds: std::collections::HashSet<String> = j
        .iter()
        .filter(|v| v["verb"] == "sample-summary")
        .map(|v| v["seed"].to_string())
        .collect();
    assert_eq!(seeds.len(), 3);
    assert_eq!(j, json_lines(&run(&args)));
}
