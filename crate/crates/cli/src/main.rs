//! `cosets` — build coset semigroups of small finite groups, describe
//! their structure, and verify the theorem suites over a group catalog.
//!
//! Exit codes: 0 all checks passed or were skipped with a tagged reason,
//! 1 at least one refuted check, 2 usage or input error, 3 no failures but
//! at least one inconclusive (timed-out) check.

use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};

use coset_cli::catalog::{default_catalog, load_catalog, resolve_group};
use coset_cli::describe::describe;
use coset_cli::report::{exit_code, to_json, Report};
use coset_cli::suites::{run_suite, SUITE_NAMES};
use coset_cli::{Ctx, Prepared, DEFAULT_ISO_TIMEOUT_SECS};
use coset_core::{CosetSemigroup, SubgroupLattice, Variant, DEFAULT_ORDER_CAP};

#[derive(Parser)]
#[command(name = "cosets", version, about = "coset semigroups of small finite groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Run one theorem suite (or all of them) over the group catalog.
    Verify {
        /// Suite name, or "all".
        #[arg(long, default_value = "all")]
        suite: String,
        /// Skip catalog groups above this order.
        #[arg(long, default_value_t = 24)]
        max_order: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Seconds allowed per semigroup-isomorphism search (also settable
        /// via COSETS_BUDGET; default 10).
        #[arg(long)]
        budget: Option<u64>,
        /// Catalog file (`name = spec` lines) replacing the built-in catalog.
        #[arg(long)]
        catalog: Option<PathBuf>,
    },
    /// Summarize one group: lattice landmarks, graph, unit group.
    Describe {
        /// Constructor expression (e.g. "C4xC2") or `file:<path>`.
        #[arg(long)]
        group: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Write a group's Cayley table in the plain table-file format.
    Build {
        /// Constructor expression (e.g. "C4xC2") or `file:<path>`.
        #[arg(long)]
        group: String,
        /// Output path; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn iso_timeout(flag: Option<u64>) -> Duration {
    let secs = flag
        .or_else(|| {
            std::env::var("COSETS_BUDGET")
                .ok()
                .and_then(|v| v.parse().ok())
        })
        .unwrap_or(DEFAULT_ISO_TIMEOUT_SECS);
    Duration::from_secs(secs)
}

fn usage_error(msg: &str) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Verify {
            suite,
            max_order,
            format,
            budget,
            catalog,
        } => {
            let entries = match catalog {
                Some(path) => match load_catalog(&path) {
                    Ok(e) => e,
                    Err(e) => return usage_error(&e.to_string()),
                },
                None => default_catalog(),
            };
            let ctx = Ctx::new(entries, max_order, iso_timeout(budget));
            let names: Vec<&str> = if suite == "all" {
                SUITE_NAMES.to_vec()
            } else if SUITE_NAMES.contains(&suite.as_str()) {
                vec![SUITE_NAMES[SUITE_NAMES.iter().position(|n| *n == suite).unwrap()]]
            } else {
                return usage_error(&format!(
                    "unknown suite {suite:?}; expected one of {} or \"all\"",
                    SUITE_NAMES.join(", ")
                ));
            };
            let reports: Vec<Report> = names
                .iter()
                .map(|n| run_suite(n, &ctx).expect("suite names are validated"))
                .collect();
            match format {
                Format::Text => {
                    for (i, r) in reports.iter().enumerate() {
                        if i > 0 {
                            println!();
                        }
                        print!("{}", r.to_text());
                    }
                }
                Format::Json => println!("{}", to_json(&reports)),
            }
            ExitCode::from(exit_code(&reports) as u8)
        }
        Command::Describe { group, format } => {
            let g = match resolve_group(&group) {
                Ok(g) => g,
                Err(e) => return usage_error(&e.to_string()),
            };
            let name = g.name().to_string();
            let group_arc = Arc::new(g);
            let lattice = match SubgroupLattice::enumerate(group_arc.clone(), DEFAULT_ORDER_CAP) {
                Ok(l) => Arc::new(l),
                Err(e) => return usage_error(&e.to_string()),
            };
            let k1 = match CosetSemigroup::new(lattice.clone(), Variant::Nontrivial) {
                Ok(s) => Arc::new(s),
                Err(e) => return usage_error(&e.to_string()),
            };
            let prepared = Prepared {
                name,
                group: group_arc,
                lattice,
                k1,
            };
            let d = describe(&prepared);
            match format {
                Format::Text => print!("{}", d.to_text()),
                Format::Json => println!("{}", d.to_json()),
            }
            ExitCode::SUCCESS
        }
        Command::Build { group, out } => {
            let g = match resolve_group(&group) {
                Ok(g) => g,
                Err(e) => return usage_error(&e.to_string()),
            };
            let text = g.to_table_file();
            match out {
                Some(path) => {
                    if let Err(e) = std::fs::write(&path, text) {
                        return usage_error(&format!("cannot write {}: {e}", path.display()));
                    }
                }
                None => print!("{text}"),
            }
            ExitCode::SUCCESS
        }
    }
}
