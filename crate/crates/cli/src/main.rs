//! `safeset`: exact weighted safe numbers, membership recognition and
//! certificates from the command line.
//!
//! Exit codes: 0 success, 1 verification failure, 2 input error.

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use safeset_core::campaign::{
    read_graph6_lines, run_campaign_on_graphs, run_characterization_campaign, CampaignConfig, Sweep,
};
use safeset_core::contraction::DEFAULT_BUDGET;
use safeset_core::enumerate::{GraphFilter, MAX_ENUMERATION_ORDER};
use safeset_core::solver::{all_minimum_safe_sets, safe_numbers};
use safeset_core::witness::{certify_with, CertifyOptions};
use safeset_core::{beta, classify, contract, graph6, Graph, VertexSet, WeightFn, WitnessCertificate};

#[derive(Parser)]
#[command(name = "safeset", version, about = "Weighted safe sets on small graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute s(G,w) and cs(G,w) with witness sets.
    Solve {
        #[command(flatten)]
        graph: GraphArg,
        /// Weights as a JSON array (`["1","3/2",2]`) or `{"weights": [...]}`; defaults to all ones.
        #[arg(long, conflicts_with = "weights_file")]
        weights: Option<String>,
        #[arg(long)]
        weights_file: Option<PathBuf>,
        /// Also list every minimum safe set.
        #[arg(long)]
        all: bool,
    },
    /// Classify membership in the class where s = cs for every weighting.
    Recognize {
        #[command(flatten)]
        graph: GraphArg,
    },
    /// Search for a certificate of s < cs; prints "unknown" when none is found.
    Witness {
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Re-check a certificate produced by `witness`.
    VerifyCertificate {
        /// Certificate JSON file, or `-` for standard input.
        file: PathBuf,
    },
    /// Contract a partition (`--partition`) or build the quotient of a vertex set (`--set`).
    Contract {
        #[command(flatten)]
        graph: GraphArg,
        /// `{"bags": [[0,1],[2]]}` or `[[0,1],[2]]`.
        #[arg(long, required_unless_present = "set", conflicts_with = "set")]
        partition: Option<String>,
        /// Vertex set `S` as a JSON array; contracts the components of G[S] and G-S.
        #[arg(long)]
        set: Option<String>,
    },
    /// Sweep all small connected graphs and cross-check classification against the solver.
    Campaign {
        #[arg(long, default_value_t = 7)]
        max_order: usize,
        #[arg(long, default_value_t = 50)]
        samples: usize,
        #[arg(long)]
        seed: Option<u64>,
        /// all, bipartite, chordal or triangle-free.
        #[arg(long, default_value = "all")]
        filter: String,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        /// Read graph6 lines from this file instead of enumerating.
        #[arg(long)]
        input: Option<PathBuf>,
        /// Write the JSON report here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also write a per-graph CSV summary.
        #[arg(long)]
        csv: Option<PathBuf>,
        /// Record wall-clock times in the report.
        #[arg(long)]
        timings: bool,
    },
}

#[derive(Args)]
struct GraphArg {
    /// Graph in graph6 format.
    #[arg(long = "graph6", short = 'g')]
    graph6: String,
}

impl GraphArg {
    fn parse(&self) -> Result<Graph, Failure> {
        graph6::decode(&self.graph6).map_err(|e| Failure::Input(format!("--graph6: {e}")))
    }
}

enum Failure {
    Input(String),
    Verification(String),
}

impl From<safeset_core::Error> for Failure {
    fn from(e: safeset_core::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

fn input<E: std::fmt::Display>(context: &str) -> impl FnOnce(E) -> Failure + '_ {
    move |e| Failure::Input(format!("{context}: {e}"))
}

fn read_source(path: &PathBuf) -> Result<String, Failure> {
    if path.as_os_str() == "-" {
        std::io::read_to_string(std::io::stdin()).map_err(input("stdin"))
    } else {
        fs::read_to_string(path).map_err(input(&path.display().to_string()))
    }
}

/// Writes a line to stdout; a closed pipe (`safeset ... | head`) is not an error.
fn emit(text: &str) {
    let _ = writeln!(std::io::stdout().lock(), "{text}");
}

fn print(value: &Value) {
    emit(&serde_json::to_string_pretty(value).expect("json"));
}

fn parse_set(text: &str, g: &Graph) -> Result<VertexSet, Failure> {
    let ids: Vec<usize> = serde_json::from_str(text).map_err(input("--set"))?;
    if let Some(&v) = ids.iter().find(|&&v| v >= g.order()) {
        return Err(Failure::Input(format!("--set: vertex {v} out of range for order {}", g.order())));
    }
    Ok(ids.into_iter().collect())
}

fn parse_partition(text: &str, g: &Graph) -> Result<Vec<VertexSet>, Failure> {
    let value: Value = serde_json::from_str(text).map_err(input("--partition"))?;
    let bags = value.get("bags").cloned().unwrap_or(value);
    let bags: Vec<Vec<usize>> = serde_json::from_value(bags).map_err(input("--partition.bags"))?;
    bags.into_iter()
        .enumerate()
        .map(|(i, bag)| match bag.iter().find(|&&v| v >= g.order()) {
            Some(v) => Err(Failure::Input(format!("--partition: bag {i} has vertex {v} out of range"))),
            None => Ok(bag.into_iter().collect()),
        })
        .collect()
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Solve { graph, weights, weights_file, all } => {
            let g = graph.parse()?;
            let w = match (weights, weights_file) {
                (Some(text), _) => serde_json::from_str::<WeightFn>(&text).map_err(input("--weights"))?,
                (None, Some(path)) => {
                    serde_json::from_str::<WeightFn>(&read_source(&path)?).map_err(input("--weights-file"))?
                }
                (None, None) => WeightFn::ones(g.order()),
            };
            let (s, cs) = safe_numbers(&g, &w)?;
            let mut out = json!({
                "graph6": graph6::encode(&g)?,
                "weights": w,
                "s": s.optimum,
                "cs": cs.optimum,
                "minimumSafeSet": s.witness_set,
                "minimumConnectedSafeSet": cs.witness_set,
            });
            if all {
                out["allMinimumSafeSets"] = json!(all_minimum_safe_sets(&g, &w)?);
            }
            print(&out);
        }
        Command::Recognize { graph } => {
            let g = graph.parse()?;
            print(&serde_json::to_value(classify(&g)?).expect("json"));
        }
        Command::Witness { graph, budget, seed } => {
            let g = graph.parse()?;
            if !g.is_connected() {
                return Err(Failure::Input("--graph6: graph is disconnected".into()));
            }
            let mut opts = CertifyOptions { budget, ..CertifyOptions::default() };
            if let Some(seed) = seed {
                opts.seed = seed;
            }
            match certify_with(&g, &opts) {
                Some(cert) => emit(&cert.to_json()),
                None => print(&json!({ "graph6": graph6::encode(&g)?, "result": "unknown" })),
            }
        }
        Command::VerifyCertificate { file } => {
            let cert = WitnessCertificate::from_json(&read_source(&file)?)?;
            match cert.verify() {
                Ok(()) => print(&json!({ "result": "pass", "s": cert.s, "cs": cert.cs })),
                Err(safeset_core::Error::CertificateRejected(reason)) => {
                    print(&json!({ "result": "fail", "reason": reason }));
                    return Err(Failure::Verification(reason));
                }
                Err(e) => {
                    print(&json!({ "result": "fail", "reason": e.to_string() }));
                    return Err(Failure::Verification(e.to_string()));
                }
            }
        }
        Command::Contract { graph, partition, set } => {
            let g = graph.parse()?;
            let q = match (partition, set) {
                (Some(text), _) => contract(&g, &parse_partition(&text, &g)?)?,
                (None, Some(text)) => beta(&g, parse_set(&text, &g)?)?,
                (None, None) => unreachable!("clap requires one of --partition and --set"),
            };
            let mut out = json!({
                "quotient": graph6::encode(&q.quotient)?,
                "bags": q.bags,
                "bagOf": q.bag_of,
            });
            if let Some(sides) = &q.bag_side {
                out["bagSide"] = json!(sides);
            }
            print(&out);
        }
        Command::Campaign { max_order, samples, seed, filter, budget, input: source, out, csv, timings } => {
            let sweeps = match filter.parse::<GraphFilter>().map_err(input("--filter"))? {
                GraphFilter::All => Sweep::ALL.to_vec(),
                GraphFilter::Bipartite => vec![Sweep::Bipartite],
                GraphFilter::Chordal => vec![Sweep::Chordal],
                GraphFilter::TriangleFree => vec![Sweep::TriangleFree],
            };
            let mut config =
                CampaignConfig { max_order, samples, sweeps, budget, timings, ..CampaignConfig::default() };
            if let Some(seed) = seed {
                config.seed = seed;
            }
            let report = match source {
                Some(path) => {
                    let graphs = read_graph6_lines(&read_source(&path)?)?;
                    run_campaign_on_graphs(&config, &graphs)
                }
                None => {
                    if max_order == MAX_ENUMERATION_ORDER {
                        eprintln!("warning: order 8 sweeps enumerate over 11000 graphs and take much longer");
                    }
                    run_characterization_campaign(&config)?
                }
            };
            let text = report.to_json();
            match &out {
                Some(path) => fs::write(path, text + "\n").map_err(input(&path.display().to_string()))?,
                None => emit(&text),
            }
            if let Some(path) = &csv {
                let file = fs::File::create(path).map_err(input(&path.display().to_string()))?;
                report.write_csv(file)?;
            }
            for s in &report.sweeps {
                let c = &s.counts;
                eprintln!(
                    "{:?}: {} graphs, {} members, {} non-members, {} undecided, {} certified",
                    s.sweep, c.total, c.members, c.non_members, c.undecided, c.certified
                );
            }
            if !report.passed() {
                for f in &report.failures {
                    eprintln!("failure [{:?}] {} {}: {}", f.sweep, f.graph6, f.kind, f.detail);
                }
                return Err(Failure::Verification(format!("{} failures", report.failures.len())));
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification(msg)) => {
            eprintln!("verification failed: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
