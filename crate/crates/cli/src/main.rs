use clap::{Parser, Subcommand, ValueEnum};
use std::io::{self, Read, Write};
use std::process::ExitCode;
use ucover::approx::{self, Algorithm, ApproxResult};
use ucover::classify::Profile;
use ucover::connector::even_2cut_connectors;
use ucover::cycle_cover::{find_covering_cycle_cover, verify_contraction};
use ucover::decomp::{decompose_connectors, decompose_spanning_trees};
use ucover::generators;
use ucover::graph::{parse_graph, parse_node_weights, write_graph};
use ucover::lp::subtour::solve_subtour;
use ucover::rational::int;
use ucover::uniform::{self, Certificate, Variant};
use ucover::{Error, Multigraph, NodeWeights, Result};

mod summary;

#[derive(Parser)]
#[command(name = "ucover", version, about = "Exact uniform covers and certified TSP/2EC approximations")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,

    /// Seed for random generators.
    #[arg(long, default_value_t = 1, global = true)]
    seed: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Summary,
}

#[derive(Clone, Copy, ValueEnum)]
enum DecomposeKind {
    Trees,
    Connectors,
    Even2cut,
}

#[derive(Subcommand)]
enum Command {
    /// Print a named or random graph in the graph file format.
    Gen {
        /// k4, k5, petersen, k33, prism, heawood, mobius-kantor, cube, c8-1-2,
        /// random-cubic-3ec, random-subcubic-2ec (or random-cubic-3ec(n,seed)).
        #[arg(long)]
        family: String,
        /// Vertex count for the random families.
        #[arg(long)]
        n: Option<usize>,
    },
    /// Solve the subtour elimination LP exactly.
    SolveSubtour { input: Option<String> },
    /// Cycle cover meeting every 3- and 4-edge cut twice, with the contraction report.
    CycleCover { input: Option<String> },
    /// Decompose the subtour optimum into trees, connectors or even-2-cut connectors.
    Decompose {
        #[arg(value_enum)]
        kind: DecomposeKind,
        input: Option<String>,
    },
    /// Build a uniform-cover certificate.
    UniformCover {
        #[arg(long)]
        variant: String,
        /// Refuse a non-bipartite variant on a bipartite input.
        #[arg(long)]
        require_bipartite_variant: bool,
        input: Option<String>,
    },
    /// Run an approximation algorithm.
    Approx {
        #[arg(long)]
        alg: String,
        /// Node-weight file, or `uniform1`; reweights the graph's edges.
        #[arg(long)]
        node_weights: Option<String>,
        input: Option<String>,
    },
    /// Re-check a certificate or approximation result.
    Verify { input: Option<String> },
}

fn read_input(path: Option<&str>) -> Result<String> {
    let mut s = String::new();
    match path {
        None | Some("-") => io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Error::Precondition(format!("reading stdin: {e}")))?,
        Some(p) => return std::fs::read_to_string(p).map_err(|e| Error::Precondition(format!("reading {p}: {e}"))),
    };
    Ok(s)
}

fn read_graph(path: Option<&str>) -> Result<Multigraph> {
    parse_graph(&read_input(path)?)
}

fn gen(family: &str, n: Option<usize>, seed: u64) -> Result<Multigraph> {
    if let Some(args) = family.strip_prefix("random-cubic-3ec(").and_then(|s| s.strip_suffix(')')) {
        let parts: Vec<&str> = args.split(',').map(str::trim).collect();
        let bad = || Error::Precondition(format!("cannot parse {family:?}"));
        let [n, s] = parts[..] else { return Err(bad()) };
        return generators::random_cubic_3ec(n.parse().map_err(|_| bad())?, s.parse().map_err(|_| bad())?);
    }
    let need_n = || n.ok_or_else(|| Error::Precondition(format!("--n is required for {family}")));
    match family {
        "random-cubic-3ec" => generators::random_cubic_3ec(need_n()?, seed),
        "random-subcubic-2ec" => generators::random_subcubic_2ec(need_n()?, seed),
        _ => generators::by_name(family).ok_or_else(|| Error::Precondition(format!("unknown family {family:?}"))),
    }
}

fn node_weights(source: &str, g: &Multigraph) -> Result<NodeWeights> {
    if source == "uniform1" {
        return NodeWeights::uniform(g.n(), int(1));
    }
    parse_node_weights(&read_input(Some(source))?)
}

enum Output {
    Text(String),
    Json(serde_json::Value),
}

fn to_json<T: serde::Serialize>(v: &T) -> serde_json::Value {
    serde_json::to_value(v).expect("artifacts serialize")
}

fn run(cli: &Cli) -> Result<Output> {
    let json = cli.format == Format::Json;
    match &cli.command {
        Command::Gen { family, n } => Ok(Output::Text(write_graph(&gen(family, *n, cli.seed)?))),
        Command::SolveSubtour { input } => {
            let g = read_graph(input.as_deref())?;
            let lp = solve_subtour(&g)?;
            Ok(if json { Output::Json(to_json(&lp)) } else { Output::Text(summary::lp(&g, &lp)) })
        }
        Command::CycleCover { input } => {
            let g = read_graph(input.as_deref())?;
            let r = find_covering_cycle_cover(&g)?;
            let rep = verify_contraction(&g, &r)?;
            Ok(if json {
                Output::Json(serde_json::json!({ "cover": to_json(&r), "contraction": to_json(&rep) }))
            } else {
                Output::Text(summary::cycle_cover(&r, &rep))
            })
        }
        Command::Decompose { kind, input } => {
            let g = read_graph(input.as_deref())?;
            let lp = solve_subtour(&g)?;
            let (value, cc) = match kind {
                DecomposeKind::Trees => {
                    let cc = decompose_spanning_trees(&g, &lp.x)?;
                    (to_json(&cc), cc)
                }
                DecomposeKind::Connectors => {
                    let cc = decompose_connectors(&g, &lp.x)?;
                    (to_json(&cc), cc)
                }
                DecomposeKind::Even2cut => {
                    let r = even_2cut_connectors(&g, &lp.x)?;
                    (to_json(&r), r.combination)
                }
            };
            cc.verify(&g, &ucover::decomp::ClassContext::None)?;
            Ok(if json { Output::Json(value) } else { Output::Text(summary::combination(&g, &cc)) })
        }
        Command::UniformCover { variant, require_bipartite_variant, input } => {
            let variant: Variant = variant.parse()?;
            let g = read_graph(input.as_deref())?;
            if *require_bipartite_variant && g.is_bipartite() && variant.profile() != Profile::BipartiteCubic3ec {
                return Err(Error::Profile {
                    profile: variant.profile().name().into(),
                    reason: format!("bipartite input needs a bipartite variant, got {variant}"),
                });
            }
            let cert = uniform::uniform_cover(&g, variant)?;
            Ok(if json { Output::Json(to_json(&cert)) } else { Output::Text(summary::certificate(&cert)) })
        }
        Command::Approx { alg, node_weights: nw, input } => {
            let alg: Algorithm = alg.parse()?;
            let mut g = read_graph(input.as_deref())?;
            let f = match nw {
                Some(source) => {
                    let f = node_weights(source, &g)?;
                    g = g.with_node_weights(&f)?;
                    Some(f)
                }
                None => None,
            };
            let r = approx::run(alg, &g, f.as_ref())?;
            Ok(if json { Output::Json(to_json(&r)) } else { Output::Text(summary::approx(&r)) })
        }
        Command::Verify { input } => {
            let text = read_input(input.as_deref())?;
            let value: serde_json::Value =
                serde_json::from_str(&text).map_err(|e| Error::Parse { line: e.line(), msg: e.to_string() })?;
            let kind = value.get("kind").and_then(|k| k.as_str()).unwrap_or_default().to_string();
            let reject = |e: serde_json::Error| Error::Verification(format!("malformed {kind}: {e}"));
            match kind.as_str() {
                uniform::CERTIFICATE_KIND => {
                    let c: Certificate = serde_json::from_value(value).map_err(reject)?;
                    uniform::verify_certificate(&c)?;
                }
                approx::RESULT_KIND => {
                    let r: ApproxResult = serde_json::from_value(value).map_err(reject)?;
                    approx::verify_approx(&r)?;
                }
                other => return Err(Error::Verification(format!("unknown artifact kind {other:?}"))),
            }
            Ok(if json {
                Output::Json(serde_json::json!({ "kind": kind, "valid": true }))
            } else {
                Output::Text(format!("{kind}: valid\n"))
            })
        }
    }
}

fn configure_threads() {
    if let Some(n) = std::env::var("UCOVER_THREADS").ok().and_then(|v| v.parse::<usize>().ok()) {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
}

fn main() -> ExitCode {
    configure_threads();
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            let text = match out {
                Output::Text(t) => t,
                Output::Json(v) => serde_json::to_string_pretty(&v).expect("json") + "\n",
            };
            let _ = io::stdout().write_all(text.as_bytes());
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
