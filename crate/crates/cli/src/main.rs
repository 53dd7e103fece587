//! `grr`: certify graphical regular representations from the command line.
//!
//! Exit codes: 0 success, 2 usage or parse error, 3 resource limit,
//! 4 internal inconsistency.

mod census;
mod certify;
mod construct;
mod export;
mod groups;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use grr_core::autgraph::SearchConfig;
use grr_core::sampler::primitive_prime_divisors;
use grr_core::{GroupSampler, GroupTable, SamplerConfig};
use serde_json::json;

use crate::certify::CertifyOptions;
use crate::groups::{parse_element, parse_group};
use crate::report::{CliError, RunReport};

const DEFAULT_CAP: usize = 100_000;

#[derive(Parser)]
#[command(
    name = "grr",
    version,
    about = "Certify graphical regular representations of permutation groups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Certify whether Cay(G, S) is a GRR for the valency-k connection set built from x and y.
    Certify {
        /// A<n>, S<n>, C<n>, `;`-separated generators, or file:<path>.
        #[arg(long)]
        group: String,
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
        #[arg(long)]
        k: usize,
        /// Also compute Aut(Cay(G, S)) and compare.
        #[arg(long)]
        exhaustive: bool,
        /// Largest group enumerated as a table; larger groups use permutation methods.
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
        #[arg(long)]
        json: bool,
    },
    /// Build the pair (x, y) generating A_n and compute Aut(G, S) for a range of k.
    ConstructAn {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: Option<usize>,
        /// Inclusive range such as 5..9; defaults to every k the degree allows.
        #[arg(long)]
        k: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Certify every entry of a `label | group | x | y` file.
    Census {
        file: PathBuf,
        #[arg(long, default_value_t = 5)]
        k: usize,
        #[arg(long)]
        exhaustive: bool,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Seed for sampling missing involutions.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
        #[arg(long)]
        json: bool,
    },
    /// Write a Cayley graph as graph6 or DIMACS.
    Export {
        /// Circulant `n:a,b,...` with connection set {±a, ±b, ...}.
        #[arg(long, conflicts_with = "group")]
        circulant: Option<String>,
        #[arg(long)]
        group: Option<String>,
        /// `;`-separated connection set elements (inverses are added).
        #[arg(long, conflicts_with_all = ["x", "y", "k"])]
        connection: Option<String>,
        #[arg(long, requires_all = ["y", "k"])]
        x: Option<String>,
        #[arg(long)]
        y: Option<String>,
        #[arg(long)]
        k: Option<usize>,
        /// graph6 or dimacs.
        #[arg(long)]
        format: String,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
    },
    /// Estimate the probability that a random involution generates G with x.
    Sample {
        #[arg(long)]
        group: String,
        #[arg(long, conflicts_with = "order")]
        x: Option<String>,
        /// Prime order of a sampled x, used when --x is absent.
        #[arg(long)]
        order: Option<u64>,
        #[arg(long, default_value_t = 200)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
    /// Primitive prime divisors of r^m - 1.
    Ppd {
        #[arg(long)]
        r: u64,
        #[arg(long)]
        m: u32,
        #[arg(long)]
        json: bool,
    },
}

fn search_config() -> Result<SearchConfig, CliError> {
    let mut config = SearchConfig::default();
    if let Ok(text) = std::env::var("GRR_NODE_BUDGET") {
        config.node_budget = text
            .trim()
            .parse()
            .map_err(|_| CliError::Usage(format!("GRR_NODE_BUDGET={text:?} is not a number")))?;
    }
    Ok(config)
}

fn emit(report: &RunReport, json: bool, human: impl FnOnce()) {
    if json {
        println!("{}", report.to_json());
    } else {
        human();
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Certify {
            group,
            x,
            y,
            k,
            exhaustive,
            cap,
            json,
        } => {
            let mut report = RunReport::new(
                "certify",
                json!({"group": group, "x": x, "y": y, "k": k, "exhaustive": exhaustive, "cap": cap}),
            );
            if k < 5 {
                return Err(CliError::Usage(format!(
                    "k = {k}: valency k >= 5 is required"
                )));
            }
            let spec = report.time("parse", || parse_group(&group))?;
            let xp = parse_element(&x, spec.degree())?;
            let yp = parse_element(&y, spec.degree())?;
            let opts = CertifyOptions {
                cap,
                exhaustive,
                search: search_config()?,
            };
            let outcome = report.time("certify", || certify::certify(&spec, &xp, &yp, k, opts))?;
            report.results = serde_json::to_value(&outcome).expect("outcome serializes");
            emit(&report, json, || certify::print_outcome(&outcome));
            if outcome.exhaustive.as_ref().is_some_and(|e| !e.agrees) {
                return Err(CliError::Inconsistent(
                    "certificate verdict disagrees with the exhaustive automorphism group".into(),
                ));
            }
            Ok(())
        }
        Command::ConstructAn { n, p, k, json } => {
            let mut report = RunReport::new("construct-an", json!({"n": n, "p": p, "k": k}));
            let ks = k.as_deref().map(construct::parse_k_range).transpose()?;
            let c = report.time("construct", || construct::construct(n, p, ks))?;
            report.results = serde_json::to_value(&c).expect("construction serializes");
            emit(&report, json, || construct::print_construction(&c));
            Ok(())
        }
        Command::Census {
            file,
            k,
            exhaustive,
            jobs,
            seed,
            cap,
            json,
        } => {
            let mut report = RunReport::new(
                "census",
                json!({"file": file, "k": k, "exhaustive": exhaustive, "seed": seed, "cap": cap}),
            );
            let text = std::fs::read_to_string(&file)
                .map_err(|e| CliError::Usage(format!("{}: {e}", file.display())))?;
            let entries = census::parse_census(&text)?;
            let opts = CertifyOptions {
                cap,
                exhaustive,
                search: search_config()?,
            };
            let rows = report.time("census", || {
                census::run_census(&entries, k, seed, opts, jobs)
            })?;
            report.results = json!({ "rows": rows });
            emit(&report, json, || census::print_rows(&rows));
            let disagreements = rows
                .iter()
                .filter(|r| {
                    r.outcome
                        .as_ref()
                        .and_then(|o| o.exhaustive.as_ref())
                        .is_some_and(|e| !e.agrees)
                })
                .count();
            if disagreements > 0 {
                return Err(CliError::Inconsistent(format!(
                    "{disagreements} row(s) disagree with exhaustive search"
                )));
            }
            Ok(())
        }
        Command::Export {
            circulant,
            group,
            connection,
            x,
            y,
            k,
            format,
            out,
            cap,
        } => {
            if format != "graph6" && format != "dimacs" {
                return Err(CliError::Usage(format!(
                    "unknown format {format:?}; expected graph6 or dimacs"
                )));
            }
            let graph = match (circulant, group) {
                (Some(c), None) => export::circulant(&c)?,
                (None, Some(g)) => {
                    let spec = parse_group(&g)?;
                    let table = GroupTable::enumerate(&spec.generators, cap)?;
                    match (connection, x, y, k) {
                        (Some(list), ..) => export::cayley_from_elements(&table, &spec, &list)?,
                        (None, Some(x), Some(y), Some(k)) => {
                            export::gamma_k(&table, &spec, &x, &y, k)?
                        }
                        _ => {
                            return Err(CliError::Usage(
                                "--group needs --connection or all of --x, --y, --k".into(),
                            ))
                        }
                    }
                }
                _ => {
                    return Err(CliError::Usage(
                        "give exactly one of --circulant or --group".into(),
                    ))
                }
            };
            let body = match format.as_str() {
                "graph6" => format!("{}\n", graph.to_graph6()),
                _ => graph.to_dimacs(),
            };
            match out {
                Some(path) => {
                    std::fs::write(&path, &body)
                        .map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
                    eprintln!(
                        "wrote {} ({} vertices, {} edges, {} bytes)",
                        path.display(),
                        graph.vertex_count(),
                        graph.edge_count(),
                        body.len()
                    );
                }
                None => print!("{body}"),
            }
            Ok(())
        }
        Command::Sample {
            group,
            x,
            order,
            trials,
            seed,
            json,
        } => {
            let mut report = RunReport::new(
                "sample",
                json!({"group": group, "x": x, "order": order, "trials": trials, "seed": seed}),
            );
            let spec = parse_group(&group)?;
            let sampler = report
                .time("chain", || GroupSampler::new(&spec.generators))
                .map_err(|e| CliError::Usage(e.to_string()))?;
            let config = SamplerConfig {
                seed,
                trials,
                ..SamplerConfig::default()
            };
            let xp = match (x, order) {
                (Some(x), _) => parse_element(&x, spec.degree())?,
                (None, Some(p)) => sampler
                    .element_of_order(p, &config)
                    .ok_or_else(|| CliError::Limit(format!("no element of order {p} found")))?,
                (None, None) => return Err(CliError::Usage("give --x or --order".into())),
            };
            let estimate = report
                .time("estimate", || {
                    sampler.estimate_generation_probability(&xp, &config)
                })
                .map_err(|e| CliError::Usage(e.to_string()))?;
            report.results = json!({
                "group_order": sampler.order().to_string(),
                "x": xp.to_string(),
                "estimate": estimate,
            });
            emit(&report, json, || {
                println!("|G| = {}", sampler.order());
                println!("x = {xp}");
                println!(
                    "{} of {} random involutions generate G with x: {:.4}",
                    estimate.successes, estimate.trials, estimate.estimate
                );
            });
            Ok(())
        }
        Command::Ppd { r, m, json } => {
            let mut report = RunReport::new("ppd", json!({"r": r, "m": m}));
            let primes =
                primitive_prime_divisors(r, m).map_err(|e| CliError::Usage(e.to_string()))?;
            report.results = json!({ "primes": primes });
            emit(&report, json, || println!("ppd({r}, {m}) = {primes:?}"));
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
