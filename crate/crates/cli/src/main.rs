mod render;

use std::fmt::Write as _;
use std::io::{self, BufWriter, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use colorswitch::basis::enumerate_quadratic_moves;
use colorswitch::counting::{check_k2, hilbert_k2, OracleLimits, SUSPECTED_TYPO};
use colorswitch::fiber::{
    enumerate_fiber, fiber_graph, prop31_instance, realize, simple_basis_norm_requirement,
    EnumerationLimits,
};
use colorswitch::format::{
    parse_coloring, parse_graph, parse_label, parse_move, write_graph, write_label, LabelRecord,
};
use colorswitch::graph::Coloring;
use colorswitch::groebner::{contract, normal_form, Binomial, WeightOrder};
use colorswitch::sampler::{run_with_moves, uniformity_diagnostic, ChainConfig, SplitMix64};
use colorswitch::Error;
use serde_json::{json, Value};

use render::{graph_json, join, label_json, rewrite_json, rewrite_text};

const ENV_HELP: &str = "\
Environment overrides for guard defaults:
  COLORSWITCH_MAX_EDGES       largest edge count for multigraph enumeration (24)
  COLORSWITCH_MAX_ELEMENTS    largest number of fiber elements collected (2000000)
  COLORSWITCH_ORACLE_MAX_R    largest r for the lattice-point oracle (4)
  COLORSWITCH_ORACLE_MAX_N    largest n1+n2 for the lattice-point oracle (8)

Exit status: 0 success, 1 infeasible or failed verification, 2 usage or input error.
Input files default to standard input when omitted; `-` also means standard input.";

#[derive(Parser)]
#[command(name = "colorswitch", version, about = "Fibers, switch chains and normal forms for vertex-colored graphs", after_help = ENV_HELP)]
struct Cli {
    /// Emit one JSON object per line instead of text records.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Args, Clone, Copy)]
struct Guards {
    #[arg(long, env = "COLORSWITCH_MAX_EDGES", default_value_t = 24)]
    max_edges: usize,
    #[arg(long, env = "COLORSWITCH_MAX_ELEMENTS", default_value_t = 2_000_000)]
    max_elements: usize,
}

impl Guards {
    fn limits(self) -> EnumerationLimits {
        EnumerationLimits {
            max_edges: self.max_edges,
            max_elements: self.max_elements,
        }
    }
}

#[derive(Subcommand)]
enum Verb {
    /// Find one graph with the given degree and color sequence.
    Realize {
        #[arg(long)]
        label: Option<PathBuf>,
        /// Require a simple graph.
        #[arg(long)]
        simple: bool,
        #[command(flatten)]
        guards: Guards,
    },
    /// Run the switch chain on the fiber of a label.
    Sample {
        #[arg(long)]
        label: Option<PathBuf>,
        #[arg(long, default_value_t = 10_000)]
        steps: u64,
        #[arg(long, default_value_t = 0)]
        burn_in: u64,
        #[arg(long, default_value_t = 1)]
        thin: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Emit only simple states. The chain still walks the multigraph fiber
        /// and filters its output: switches confined to simple graphs do not
        /// connect simple fibers in general.
        #[arg(long)]
        simple_only: bool,
        /// Hold with probability 1/2 before each proposal.
        #[arg(long)]
        lazy: bool,
        /// Independent chains, one thread each; chain i uses a seed derived from --seed.
        #[arg(long, default_value_t = 1)]
        chains: u64,
        /// Enumerate the fiber and report a chi-square uniformity test per chain.
        #[arg(long)]
        diagnose: bool,
        #[command(flatten)]
        guards: Guards,
    },
    /// Count, and optionally print, all graphs with the given label.
    Enumerate {
        #[arg(long)]
        label: Option<PathBuf>,
        #[arg(long)]
        simple: bool,
        #[arg(long)]
        print: bool,
        #[command(flatten)]
        guards: Guards,
    },
    /// Check whether the switches connect the fiber of a label.
    VerifyBasis {
        #[arg(long)]
        label: Option<PathBuf>,
        #[arg(long)]
        simple: bool,
        #[command(flatten)]
        guards: Guards,
    },
    /// List the switch moves of a coloring.
    Moves {
        #[arg(long)]
        coloring: Option<PathBuf>,
    },
    /// Reduce a graph to its normal form.
    NormalForm {
        #[arg(long)]
        graph: Option<PathBuf>,
        /// Use this coloring instead of the one in the graph record.
        #[arg(long)]
        coloring: Option<PathBuf>,
    },
    /// Decide whether a signed edge vector gives a binomial in the toric ideal.
    InIdeal {
        #[arg(long)]
        binomial: Option<PathBuf>,
        #[arg(long)]
        coloring: Option<PathBuf>,
    },
    /// Aggregate a color class of a walk onto one vertex.
    Contract {
        #[arg(long)]
        walk: Option<PathBuf>,
        /// 1-based vertex receiving its color class.
        #[arg(long)]
        vertex: usize,
        #[arg(long)]
        coloring: Option<PathBuf>,
    },
    /// Two-element simple fibers on 2k vertices.
    Prop31 {
        #[arg(long)]
        k: usize,
        /// Enumerate the simple fiber and check its size and diameter.
        #[arg(long)]
        verify: bool,
        #[command(flatten)]
        guards: Guards,
    },
    /// Closed-form lattice count for two color classes.
    Count {
        #[arg(long)]
        n1: u64,
        #[arg(long)]
        n2: u64,
        #[arg(long)]
        r: u64,
        /// Compare against brute-force enumeration.
        #[arg(long)]
        check: bool,
        #[arg(long, env = "COLORSWITCH_ORACLE_MAX_R", default_value_t = 4)]
        oracle_max_r: u64,
        #[arg(long, env = "COLORSWITCH_ORACLE_MAX_N", default_value_t = 8)]
        oracle_max_n: usize,
    },
}

enum Failure {
    Usage(String),
    Input(Error),
    Domain(Error),
    Io(io::Error),
    /// Reported on stdout already; only the exit status is left.
    Negative(&'static str, String),
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse { .. }
            | Error::InvalidColoring(_)
            | Error::DimensionMismatch { .. }
            | Error::PairOutOfRange { .. }
            | Error::NegativeEntry { .. }
            | Error::OddWalk(_)
            | Error::RepeatedVertex { .. }
            | Error::InvalidConfig(_) => Failure::Input(e),
            _ => Failure::Domain(e),
        }
    }
}

type Outcome = Result<(), Failure>;

struct Out {
    json: bool,
    w: BufWriter<io::StdoutLock<'static>>,
}

impl Out {
    fn text(&mut self, s: &str) -> io::Result<()> {
        self.w.write_all(s.as_bytes())
    }

    fn line(&mut self, s: &str) -> io::Result<()> {
        writeln!(self.w, "{s}")
    }

    fn record(&mut self, v: Value) -> io::Result<()> {
        writeln!(self.w, "{v}")
    }
}

fn read_input(path: &Option<PathBuf>) -> Result<String, Failure> {
    let mut s = String::new();
    match path {
        Some(p) if p.as_os_str() != "-" => {
            s = std::fs::read_to_string(p)
                .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", p.display())))?;
        }
        _ => {
            io::stdin().read_to_string(&mut s)?;
        }
    }
    Ok(s)
}

fn read_label(path: &Option<PathBuf>) -> Result<LabelRecord, Failure> {
    Ok(parse_label(&read_input(path)?)?)
}

fn override_coloring(z: Coloring, path: &Option<PathBuf>) -> Result<Coloring, Failure> {
    match path {
        None => Ok(z),
        Some(_) => {
            let c = parse_coloring(&read_input(path)?)?;
            if c.n() != z.n() {
                return Err(Error::DimensionMismatch {
                    expected: z.n(),
                    found: c.n(),
                }
                .into());
            }
            Ok(c)
        }
    }
}

fn cmd_realize(out: &mut Out, label: &Option<PathBuf>, simple: bool, guards: Guards) -> Outcome {
    let rec = read_label(label)?;
    let found = realize(&rec.label, &rec.coloring, simple, &guards.limits())?;
    let feasible = found.is_some();
    match (found, out.json) {
        (Some(g), false) => out.text(&write_graph(&rec.coloring, &g))?,
        (Some(g), true) => out.record(json!({
            "verb": "realize",
            "feasible": true,
            "simple": simple,
            "graph": graph_json(&rec.coloring, &g),
        }))?,
        (None, false) => out.line("INFEASIBLE")?,
        (None, true) => {
            out.record(json!({ "verb": "realize", "feasible": false, "simple": simple }))?
        }
    }
    if feasible {
        Ok(())
    } else {
        Err(Failure::Negative(
            "infeasible",
            "the fiber of the label is empty".into(),
        ))
    }
}

struct SampleArgs {
    label: Option<PathBuf>,
    config: ChainConfig,
    chains: u64,
    diagnose: bool,
    guards: Guards,
}

fn cmd_sample(out: &mut Out, a: SampleArgs) -> Outcome {
    if a.chains == 0 {
        return Err(Failure::Usage("--chains must be at least 1".into()));
    }
    a.config.validate()?;
    let rec = read_label(&a.label)?;
    let z = &rec.coloring;
    let limits = a.guards.limits();
    let start = realize(&rec.label, z, false, &limits)?.ok_or(Error::EmptyFiber)?;
    let moves = enumerate_quadratic_moves(z);
    let fiber = if a.diagnose {
        Some(enumerate_fiber(
            &rec.label,
            z,
            a.config.simple_only,
            &limits,
        )?)
    } else {
        None
    };
    let seeds: Vec<u64> = if a.chains == 1 {
        vec![a.config.seed]
    } else {
        (0..a.chains)
            .map(|i| SplitMix64::derive_seed(a.config.seed, i))
            .collect()
    };
    let runs = std::thread::scope(|s| {
        let handles: Vec<_> = seeds
            .iter()
            .map(|&seed| {
                let cfg = ChainConfig { seed, ..a.config };
                let (start, moves) = (&start, &moves);
                s.spawn(move || run_with_moves(start, moves, &cfg))
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("chain thread"))
            .collect::<Vec<_>>()
    });
    for (chain, (run, seed)) in runs.into_iter().zip(&seeds).enumerate() {
        let run = run?;
        for (i, g) in run.samples.iter().enumerate() {
            if out.json {
                out.record(json!({
                    "verb": "sample",
                    "chain": chain,
                    "sample": i,
                    "graph": graph_json(z, g),
                }))?;
            } else {
                out.text(&format!(
                    "# chain={chain} sample={i}\n{}\n",
                    write_graph(z, g)
                ))?;
            }
        }
        let summary = json!({
            "verb": "sample-summary",
            "chain": chain,
            "seed": seed,
            "steps": a.config.steps,
            "samples": run.samples.len(),
            "accepted": run.accepted,
            "rejected": run.rejected,
            "held": run.held,
            "acceptance_rate": run.acceptance_rate(),
        });
        if out.json {
            out.record(summary)?;
        } else {
            out.line(&format!(
                "# chain={chain} seed={seed} steps={} samples={} accepted={} rejected={} held={} acceptance_rate={}",
                a.config.steps,
                run.samples.len(),
                run.accepted,
                run.rejected,
                run.held,
                run.acceptance_rate()
            ))?;
        }
        if let Some(f) = &fiber {
            let rep = uniformity_diagnostic(&run.samples, f)?;
            if out.json {
                let mut v = serde_json::to_value(&rep).expect("serializable");
                v["verb"] = json!("uniformity");
                v["chain"] = json!(chain);
                v["states"] = json!(f.len());
                out.record(v)?;
            } else {
                let critical = rep
                    .critical_value
                    .map_or("none".to_string(), |c| c.to_string());
                out.line(&format!(
                    "# chain={chain} uniformity states={} samples={} chi_square={} degrees_of_freedom={} critical_value={critical} passes={}",
                    f.len(),
                    rep.samples,
                    rep.chi_square,
                    rep.degrees_of_freedom,
                    rep.passes
                ))?;
            }
        }
    }
    Ok(())
}

fn cmd_enumerate(
    out: &mut Out,
    label: &Option<PathBuf>,
    simple: bool,
    print: bool,
    guards: Guards,
) -> Outcome {
    let rec = read_label(label)?;
    let z = &rec.coloring;
    let f = enumerate_fiber(&rec.label, z, simple, &guards.limits())?;
    if out.json {
        out.record(json!({ "verb": "enumerate", "simple": simple, "count": f.len() }))?;
        if print {
            for (i, g) in f.elements.iter().enumerate() {
                out.record(json!({ "verb": "element", "index": i, "graph": graph_json(z, g) }))?;
            }
        }
    } else {
        out.line(&format!("count={}", f.len()))?;
        if print {
            for g in &f.elements {
                out.text(&format!("\n{}", write_graph(z, g)))?;
            }
        }
    }
    Ok(())
}

fn cmd_verify_basis(
    out: &mut Out,
    label: &Option<PathBuf>,
    simple: bool,
    guards: Guards,
) -> Outcome {
    let rec = read_label(label)?;
    let z = &rec.coloring;
    let f = enumerate_fiber(&rec.label, z, simple, &guards.limits())?;
    let fg = fiber_graph(&f, &enumerate_quadratic_moves(z))?;
    let connected = fg.num_components() <= 1;
    let reps: Vec<usize> = if connected {
        Vec::new()
    } else {
        fg.representatives().to_vec()
    };
    if out.json {
        let graphs: Vec<Value> = reps
            .iter()
            .map(|&i| graph_json(z, &f.elements[i]))
            .collect();
        out.record(json!({
            "verb": "verify-basis",
            "simple": simple,
            "elements": f.len(),
            "components": fg.num_components(),
            "connected": connected,
            "representatives": graphs,
        }))?;
    } else {
        out.line(&format!(
            "elements={} components={} connected={connected}",
            f.len(),
            fg.num_components()
        ))?;
        for (c, &i) in reps.iter().enumerate() {
            out.text(&format!(
                "\n# component {}\n{}",
                c + 1,
                write_graph(z, &f.elements[i])
            ))?;
        }
    }
    Ok(())
}

fn cmd_moves(out: &mut Out, coloring: &Option<PathBuf>) -> Outcome {
    let z = parse_coloring(&read_input(coloring)?)?;
    let set = enumerate_quadratic_moves(&z);
    if out.json {
        out.record(json!({ "verb": "moves", "count": set.len() }))?;
    } else {
        out.line(&format!("count={}", set.len()))?;
    }
    for (i, m) in set.iter().enumerate() {
        let brackets: Option<Vec<usize>> =
            m.to_brackets().map(|b| b.iter().map(|v| v + 1).collect());
        if out.json {
            out.record(json!({
                "verb": "move",
                "index": i,
                "brackets": brackets,
                "graph": graph_json(&z, m.vector()),
            }))?;
        } else {
            let tag = brackets.map_or(String::new(), |b| format!(" [{}]", join(&b)));
            out.text(&format!(
                "\n# move {}{tag}\n{}",
                i + 1,
                write_graph(&z, m.vector())
            ))?;
        }
    }
    Ok(())
}

fn cmd_normal_form(out: &mut Out, graph: &Option<PathBuf>, coloring: &Option<PathBuf>) -> Outcome {
    let rec = parse_graph(&read_input(graph)?)?;
    let z = override_coloring(rec.coloring, coloring)?;
    let order = WeightOrder::new(z.n());
    let nf = normal_form(
        &colorswitch::groebner::Monomial::new(rec.graph)?,
        &z,
        &order,
    )?;
    let relabeling: Option<Vec<usize>> = nf
        .permutation
        .as_ref()
        .map(|p| p.iter().map(|v| v + 1).collect());
    if out.json {
        let steps: Vec<Value> = nf.steps.iter().map(rewrite_json).collect();
        out.record(json!({
            "verb": "normal-form",
            "graph": graph_json(&z, nf.monomial.exponent()),
            "steps": steps,
            "relabeling": relabeling,
        }))?;
    } else {
        let mut s = format!("# steps={}\n", nf.steps.len());
        for (i, r) in nf.steps.iter().enumerate() {
            let _ = writeln!(s, "# step {}: {}", i + 1, rewrite_text(r));
        }
        if let Some(p) = &relabeling {
            let _ = writeln!(s, "# relabeling={}", join(p));
        }
        s.push_str(&write_graph(&z, nf.monomial.exponent()));
        out.text(&s)?;
    }
    Ok(())
}

fn cmd_in_ideal(out: &mut Out, binomial: &Option<PathBuf>, coloring: &Option<PathBuf>) -> Outcome {
    let rec = parse_move(&read_input(binomial)?)?;
    let z = override_coloring(rec.coloring, coloring)?;
    let order = WeightOrder::new(z.n());
    let b = Binomial::from_vector(&rec.graph);
    let plus = normal_form(&b.plus, &z, &order)?.monomial;
    let minus = normal_form(&b.minus, &z, &order)?.monomial;
    let member = plus == minus;
    if out.json {
        out.record(json!({
            "verb": "in-ideal",
            "in_ideal": member,
            "plus": graph_json(&z, plus.exponent()),
            "minus": graph_json(&z, minus.exponent()),
        }))?;
    } else {
        out.text(&format!(
            "in_ideal={member}\n\n# normal form of the positive part\n{}\n# normal form of the negative part\n{}",
            write_graph(&z, plus.exponent()),
            write_graph(&z, minus.exponent())
        ))?;
    }
    Ok(())
}

fn cmd_contract(
    out: &mut Out,
    walk: &Option<PathBuf>,
    vertex: usize,
    coloring: &Option<PathBuf>,
) -> Outcome {
    let rec = parse_move(&read_input(walk)?)?;
    let z = override_coloring(rec.coloring, coloring)?;
    if vertex == 0 || vertex > z.n() {
        return Err(Failure::Usage(format!("--vertex must be in 1..={}", z.n())));
    }
    let c = contract(&rec.graph, vertex - 1, &z)?;
    if out.json {
        out.record(json!({ "verb": "contract", "vertex": vertex, "graph": graph_json(&z, &c) }))?;
    } else {
        out.text(&write_graph(&z, &c))?;
    }
    Ok(())
}

fn cmd_prop31(out: &mut Out, k: usize, verify: bool, guards: Guards) -> Outcome {
    let inst = prop31_instance(k)?;
    if !verify {
        if out.json {
            out.record(json!({
                "verb": "prop31",
                "k": k,
                "label": label_json(&inst.z, &inst.label),
                "first": graph_json(&inst.z, &inst.first),
                "second": graph_json(&inst.z, &inst.second),
            }))?;
        } else {
            out.text(&format!(
                "{}\n{}\n{}",
                write_label(&inst.z, &inst.label),
                write_graph(&inst.z, &inst.first),
                write_graph(&inst.z, &inst.second)
            ))?;
        }
        return Ok(());
    }
    let f = enumerate_fiber(&inst.label, &inst.z, true, &guards.limits())?;
    let distance = simple_basis_norm_requirement(&f)?;
    let verified = f.len() == 2 && distance == 2 * k as i64;
    if out.json {
        out.record(json!({
            "verb": "prop31",
            "k": k,
            "fiber": f.len(),
            "distance": distance,
            "verified": verified,
        }))?;
    } else {
        out.line(&format!(
            "fiber={} distance={distance} verified={verified}",
            f.len()
        ))?;
    }
    if verified {
        Ok(())
    } else {
        Err(Failure::Negative("verification-failed", format!("k = {k}")))
    }
}

struct CountArgs {
    n1: u64,
    n2: u64,
    r: u64,
    check: bool,
    limits: OracleLimits,
}

fn cmd_count(out: &mut Out, a: CountArgs) -> Outcome {
    if a.n1 == 0 || a.n2 == 0 {
        return Err(Failure::Usage("--n1 and --n2 must be at least 1".into()));
    }
    if !a.check {
        let f = hilbert_k2(a.n1, a.n2, a.r);
        if out.json {
            out.record(json!({ "verb": "count", "n1": a.n1, "n2": a.n2, "r": a.r, "formula": f.to_string() }))?;
        } else {
            out.line(&format!("formula={f}"))?;
        }
        return Ok(());
    }
    let c = check_k2(a.n1, a.n2, a.r, &a.limits)?;
    let typo = (!c.matches).then_some(SUSPECTED_TYPO);
    if out.json {
        let mut v = serde_json::to_value(&c).expect("serializable");
        v["verb"] = json!("count");
        v["suspected_typo"] = json!(typo);
        out.record(v)?;
    } else {
        out.line(&format!(
            "formula={} oracle={} match={}",
            c.formula, c.oracle, c.matches
        ))?;
        if let Some(t) = typo {
            out.line(&format!("# suspected typo: {t}"))?;
        }
    }
    Ok(())
}

fn dispatch(cli: Cli, out: &mut Out) -> Outcome {
    match cli.verb {
        Verb::Realize {
            label,
            simple,
            guards,
        } => cmd_realize(out, &label, simple, guards),
        Verb::Sample {
            label,
            steps,
            burn_in,
            thin,
            seed,
            simple_only,
            lazy,
            chains,
            diagnose,
            guards,
        } => cmd_sample(
            out,
            SampleArgs {
                label,
                config: ChainConfig {
                    seed,
                    steps,
                    burn_in,
                    thin,
                    lazy,
                    simple_only,
                },
                chains,
                diagnose,
                guards,
            },
        ),
        Verb::Enumerate {
            label,
            simple,
            print,
            guards,
        } => cmd_enumerate(out, &label, simple, print, guards),
        Verb::VerifyBasis {
            label,
            simple,
            guards,
        } => cmd_verify_basis(out, &label, simple, guards),
        Verb::Moves { coloring } => cmd_moves(out, &coloring),
        Verb::NormalForm { graph, coloring } => cmd_normal_form(out, &graph, &coloring),
        Verb::InIdeal { binomial, coloring } => cmd_in_ideal(out, &binomial, &coloring),
        Verb::Contract {
            walk,
            vertex,
            coloring,
        } => cmd_contract(out, &walk, vertex, &coloring),
        Verb::Prop31 { k, verify, guards } => cmd_prop31(out, k, verify, guards),
        Verb::Count {
            n1,
            n2,
            r,
            check,
            oracle_max_r,
            oracle_max_n,
        } => cmd_count(
            out,
            CountArgs {
                n1,
                n2,
                r,
                check,
                limits: OracleLimits {
                    max_r: oracle_max_r,
                    max_n: oracle_max_n,
                },
            },
        ),
    }
}

fn report(json: bool, kind: &str, reason: &str) {
    let reason = reason.replace('\n', " ");
    if json {
        eprintln!("{}", json!({ "error": kind, "reason": reason }));
    } else {
        eprintln!("error: kind={kind} reason={reason}");
    }
}

fn main() -> ExitCode {
    let json_requested = std::env::args().any(|a| a == "--json");
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = e.print();
                return ExitCode::SUCCESS;
            }
            let text = e.to_string();
            let first = text
                .lines()
                .next()
                .unwrap_or("")
                .trim_start_matches("error: ");
            report(json_requested, "usage", first);
            return ExitCode::from(2);
        }
    };
    let json = cli.json;
    let mut out = Out {
        json,
        w: BufWriter::new(io::stdout().lock()),
    };
    let result = dispatch(cli, &mut out).and_then(|()| out.w.flush().map_err(Failure::Io));
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            let _ = out.w.flush();
            match f {
                Failure::Usage(msg) => {
                    report(json, "usage", &msg);
                    ExitCode::from(2)
                }
                Failure::Input(e) => {
                    report(json, e.kind(), &e.to_string());
                    ExitCode::from(2)
                }
                Failure::Domain(e) => {
                    report(json, e.kind(), &e.to_string());
                    ExitCode::from(1)
                }
                Failure::Negative(kind, msg) => {
                    report(json, kind, &msg);
                    ExitCode::from(1)
                }
                Failure::Io(e) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
                Failure::Io(e) => {
                    report(json, "io", &e.to_string());
                    ExitCode::from(2)
                }
            }
        }
    }
}
