//! Command-line front end: ingest graphs, run the exact solvers, family
//! generators and the theorem suite, and emit deterministic JSON reports.

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use std::io::Read;
use std::process::ExitCode;
use trdom::error::Error;
use trdom::families::{self, FamilySpec};
use trdom::format::{self, GraphFormat};
use trdom::graph::Graph;
use trdom::report::{digest_hex, InputInfo, Report, ToolInfo};
use trdom::solver::{self, Parameter};
use trdom::theorems::{self, CheckId};
use trdom::tree_family;

#[derive(Parser)]
#[command(name = "trdom", version, about = "Exact total Roman {2}-domination toolkit")]
struct Cli {
    /// Worker threads (0 = available parallelism). Output is identical for
    /// every setting.
    #[arg(long, global = true, default_value_t = 0)]
    threads: usize,

    /// Vertex cap for the branch-and-bound solver.
    #[arg(long, global = true, default_value_t = solver::BRANCH_AND_BOUND_LIMIT)]
    limit: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute exact parameter values with one optimal witness each.
    Compute {
        /// Input graph file; `-` reads stdin.
        #[arg(long)]
        input: String,
        #[arg(long, value_enum, default_value_t = FormatArg::Auto)]
        format: FormatArg,
        /// gamma, gamma-t, gamma-r2, gamma-tr, gamma-tr2, gamma-x2 or all.
        #[arg(long = "param", required = true)]
        params: Vec<String>,
    },
    /// Build a named family member and print it as a graph file.
    Generate {
        /// E.g. path:6, cycle:5, star:7, double-star:3,2, hs:3, rr:2,
        /// frn:5,8, random:9,0.4, reduction (reduction reads --input).
        #[arg(long)]
        family: String,
        /// Base graph for `reduction`.
        #[arg(long)]
        input: Option<String>,
        #[arg(long, value_enum, default_value_t = FormatArg::Auto)]
        format: FormatArg,
        /// Output format for the generated graph.
        #[arg(long = "emit", value_enum, default_value_t = EmitArg::G6)]
        emit: EmitArg,
        /// Seed for `random:<n>,<p>`.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Output path; stdout when omitted.
        #[arg(long)]
        output: Option<String>,
    },
    /// Run theorem checks; exits nonzero when a verdict is violated.
    Verify {
        #[arg(long)]
        input: String,
        #[arg(long, value_enum, default_value_t = FormatArg::Auto)]
        format: FormatArg,
        /// A check token (e.g. eq2, reduction-id) or `all`.
        #[arg(long = "check", default_value = "all")]
        check: String,
    },
    /// Generate the constructive tree family with certificates.
    TreeFamily {
        #[arg(long = "max-n")]
        max_n: usize,
        /// Also enumerate every tree up to max-n and cross-check the
        /// characterization in both directions.
        #[arg(long, default_value_t = false)]
        check_completeness: bool,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Auto,
    Edgelist,
    G6,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum EmitArg {
    Edgelist,
    G6,
}

const EXIT_VIOLATION: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_INFEASIBLE: u8 = 3;
const EXIT_SIZE_LIMIT: u8 = 4;

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.threads > 0 {
        rayon::ThreadPoolBuilder::new()
            .num_threads(cli.threads)
            .build_global()
            .expect("thread pool is configured once");
    }
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::Infeasible => EXIT_INFEASIBLE,
                Error::SizeLimit { .. } => EXIT_SIZE_LIMIT,
                _ => EXIT_USAGE,
            })
        }
    }
}

fn run(cli: &Cli) -> Result<ExitCode, Error> {
    let started = std::time::Instant::now();
    match &cli.command {
        Command::Compute { input, format, params } => {
            let (text, g) = read_graph(input, *format)?;
            let kinds = parse_params(params)?;
            let mut any_infeasible = false;
            let mut results = Vec::new();
            for (token, kind) in kinds {
                let r = solver::exact_with_limit(&g, kind, cli.limit)?;
                any_infeasible |= !r.feasible;
                let mut entry = json!({
                    "param": token,
                    "feasible": r.feasible,
                    "value": r.value,
                    "witness": r.witness.as_ref().map(|f| f.values().to_vec()),
                    "nodes": r.nodes,
                });
                if kind.max_label() == 1 {
                    entry["witness_set"] =
                        json!(r.witness.as_ref().map(|f| f.positives().to_vec()));
                }
                results.push(entry);
            }
            let report = Report {
                tool: ToolInfo::current(),
                command: "compute".into(),
                input: Some(input_info(&text, &g)),
                results: json!({ "parameters": results }),
                timing_ms: started.elapsed().as_millis(),
            };
            println!("{}", report.to_json());
            Ok(if any_infeasible {
                ExitCode::from(EXIT_INFEASIBLE)
            } else {
                ExitCode::SUCCESS
            })
        }
        Command::Generate { family, input, format, emit, seed, output } => {
            let g = build_family(family, input.as_deref(), *format, *seed)?;
            let emitted = match emit {
                EmitArg::G6 => format::emit(GraphFormat::Graph6, &g),
                EmitArg::Edgelist => format::emit(GraphFormat::EdgeList, &g),
            };
            match output {
                Some(path) => std::fs::write(path, emitted)
                    .map_err(|e| Error::Parse(format!("cannot write {path}: {e}")))?,
                None => print!("{emitted}"),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { input, format, check } => {
            let (text, g) = read_graph(input, *format)?;
            let verdicts = if check == "all" {
                theorems::run_all(&g)?
            } else {
                let id = CheckId::from_token(check)
                    .ok_or_else(|| Error::Parse(format!("unknown check `{check}`")))?;
                vec![theorems::check(&g, id)?]
            };
            let summary = theorems::summarize(&verdicts);
            let report = Report {
                tool: ToolInfo::current(),
                command: "verify".into(),
                input: Some(input_info(&text, &g)),
                results: json!({
                    "verdicts": verdicts,
                    "summary": summary,
                }),
                timing_ms: started.elapsed().as_millis(),
            };
            println!("{}", report.to_json());
            Ok(if summary.violated > 0 {
                ExitCode::from(EXIT_VIOLATION)
            } else {
                ExitCode::SUCCESS
            })
        }
        Command::TreeFamily { max_n, check_completeness } => {
            let gen = tree_family::generate_family(*max_n)?;
            let members: Vec<Value> = gen
                .members()
                .iter()
                .map(|m| {
                    json!({
                        "order": m.tree.order(),
                        "graph6": format::emit_graph6(&m.tree),
                        "certificate": m.certificate,
                    })
                })
                .collect();
            let mut results = json!({
                "max_order": max_n,
                "count": gen.members().len(),
                "members": members,
            });
            let mut disagreements = 0usize;
            if *check_completeness {
                let mut checked = 0usize;
                let mut mismatches: Vec<Value> = Vec::new();
                for n in 2..=*max_n {
                    for tree in families::enumerate_trees(n)? {
                        let rep = tree_family::characterization_check_with(&tree, &gen)?;
                        checked += 1;
                        if !rep.agrees() {
                            mismatches.push(json!({
                                "graph6": format::emit_graph6(&tree),
                                "weights_equal": rep.weights_equal,
                                "in_family": rep.in_family,
                            }));
                        }
                    }
                }
                disagreements = mismatches.len();
                results["completeness"] = json!({
                    "trees_checked": checked,
                    "disagreements": mismatches,
                });
            }
            let report = Report {
                tool: ToolInfo::current(),
                command: "tree-family".into(),
                input: None,
                results,
                timing_ms: started.elapsed().as_millis(),
            };
            println!("{}", report.to_json());
            Ok(if disagreements > 0 {
                ExitCode::from(EXIT_VIOLATION)
            } else {
                ExitCode::SUCCESS
            })
        }
    }
}

fn read_input(path: &str) -> Result<String, Error> {
    if path == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Error::Parse(format!("cannot read stdin: {e}")))?;
        Ok(buf)
    } else {
        std::fs::read_to_string(path)
            .map_err(|e| Error::Parse(format!("cannot read {path}: {e}")))
    }
}

fn read_graph(path: &str, fmt: FormatArg) -> Result<(String, Graph), Error> {
    let text = read_input(path)?;
    let g = match fmt {
        FormatArg::Auto => format::parse_auto(&text)?,
        FormatArg::Edgelist => format::parse(GraphFormat::EdgeList, &text)?,
        FormatArg::G6 => format::parse(GraphFormat::Graph6, &text)?,
    };
    Ok((text, g))
}

fn input_info(text: &str, g: &Graph) -> InputInfo {
    InputInfo { digest: digest_hex(text.as_bytes()), order: g.order(), size: g.size() }
}

fn parse_params(tokens: &[String]) -> Result<Vec<(&'static str, Parameter)>, Error> {
    let lookup = |token: &str| -> Result<(&'static str, Parameter), Error> {
        Ok(match token {
            "gamma" => ("gamma", Parameter::Domination),
            "gamma-t" => ("gamma-t", Parameter::TotalDomination),
            "gamma-r2" => ("gamma-r2", Parameter::Roman2),
            "gamma-tr" => ("gamma-tr", Parameter::TotalRoman),
            "gamma-tr2" => ("gamma-tr2", Parameter::TotalRoman2),
            "gamma-x2" => ("gamma-x2", Parameter::DoubleDomination),
            other => return Err(Error::Parse(format!("unknown parameter `{other}`"))),
        })
    };
    let mut out = Vec::new();
    for token in tokens {
        if token == "all" {
            for t in ["gamma", "gamma-t", "gamma-r2", "gamma-tr", "gamma-tr2", "gamma-x2"] {
                out.push(lookup(t)?);
            }
        } else {
            out.push(lookup(token)?);
        }
    }
    out.dedup_by_key(|&mut (t, _)| t);
    Ok(out)
}

fn build_family(
    spec: &str,
    input: Option<&str>,
    fmt: FormatArg,
    seed: u64,
) -> Result<Graph, Error> {
    let (name, args) = match spec.split_once(':') {
        Some((n, a)) => (n, a),
        None => (spec, ""),
    };
    let nums = || -> Result<Vec<usize>, Error> {
        args.split(',')
            .filter(|s| !s.is_empty())
            .map(|s| {
                s.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad family parameter `{s}`")))
            })
            .collect()
    };
    let one = |nums: &[usize]| -> Result<usize, Error> {
        if nums.len() == 1 {
            Ok(nums[0])
        } else {
            Err(Error::Parse(format!("family `{name}` takes one parameter")))
        }
    };
    match name {
        "path" => families::build(&FamilySpec::Path(one(&nums()?)?)),
        "cycle" => families::build(&FamilySpec::Cycle(one(&nums()?)?)),
        "complete" => families::build(&FamilySpec::Complete(one(&nums()?)?)),
        "empty" => families::build(&FamilySpec::Empty(one(&nums()?)?)),
        "star" => families::build(&FamilySpec::Star(one(&nums()?)?)),
        "double-star" => {
            let v = nums()?;
            if v.len() != 2 {
                return Err(Error::Parse("double-star takes x,y".into()));
            }
            families::build(&FamilySpec::DoubleStar(v[0], v[1]))
        }
        "hs" => families::build(&FamilySpec::HubOfPath3(one(&nums()?)?)),
        "rr" => families::build(&FamilySpec::HubOfPath4(one(&nums()?)?)),
        "frn" => {
            let v = nums()?;
            if v.len() != 2 {
                return Err(Error::Parse("frn takes r,n".into()));
            }
            families::build(&FamilySpec::Realization { weight: v[0], order: v[1] })
        }
        "reduction" => {
            let path = input.ok_or_else(|| {
                Error::Parse("reduction needs --input with the base graph".into())
            })?;
            let (_, base) = read_graph(path, fmt)?;
            families::reduction_gadget(&base)
        }
        "random" => {
            let mut parts = args.split(',');
            let n: usize = parts
                .next()
                .and_then(|s| s.trim().parse().ok())
                .ok_or_else(|| Error::Parse("random takes n,p".into()))?;
            let p: f64 = parts
                .next()
                .and_then(|s| s.trim().parse().ok())
                .ok_or_else(|| Error::Parse("random takes n,p".into()))?;
            if parts.next().is_some() || !(0.0..=1.0).contains(&p) {
                return Err(Error::Parse("random takes n,p with 0 <= p <= 1".into()));
            }
            Ok(families::random_graph(n, p, seed))
        }
        other => Err(Error::Parse(format!("unknown family `{other}`"))),
    }
}
