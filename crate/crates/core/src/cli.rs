//! The `rsk` command-line front end.
//!
//! Exit status: 0 on success (verified, consistent), 1 when the report is a
//! refutation or inconsistency, 2 on input errors.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::approx::{self, OperatorPairing};
use crate::characterization::{self, CharacterizationId};
use crate::config::Capacity;
use crate::covering;
use crate::error::{Error, Result};
use crate::io;
use crate::properties::{self, PropertyId};
use crate::relation::{BinaryRelation, RelationClass};

/// Largest relation the `check` and `characterize` subcommands sweep; two-set
/// rows cost 4^n evaluations.
pub const SWEEP_MAX_N: usize = 12;

#[derive(Debug, Parser)]
#[command(name = "rsk", version, about = "Relational rough-set approximation laboratory")]
pub struct Cli {
    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Markdown,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Op {
    Lower,
    Upper,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Reflexive / symmetric / transitive / serial flags of a relation.
    Classify {
        #[arg(long)]
        relation: PathBuf,
    },
    /// Apply a lower or upper approximation to a set.
    Approx {
        #[arg(long, value_parser = parse_pairing)]
        pairing: OperatorPairing,
        #[arg(long, value_enum)]
        op: Op,
        #[arg(long)]
        relation: PathBuf,
        #[arg(long)]
        set: PathBuf,
    },
    /// Generate the full 23 × 9 property table for a pairing.
    Table {
        #[arg(long, value_parser = parse_pairing)]
        pairing: OperatorPairing,
        #[arg(long, default_value_t = 3)]
        max_n: usize,
        /// Worker threads (defaults to the number of CPUs).
        #[arg(long)]
        workers: Option<usize>,
    },
    /// Check one property row against one relation for all subsets.
    Check {
        #[arg(long)]
        relation: PathBuf,
        #[arg(long, value_parser = parse_row)]
        row: PropertyId,
        #[arg(long, value_parser = parse_pairing)]
        pairing: OperatorPairing,
    },
    /// Search a relation class for a minimal counterexample to a row.
    Counterexample {
        #[arg(long, value_parser = parse_row)]
        row: PropertyId,
        #[arg(long, value_parser = parse_pairing)]
        pairing: OperatorPairing,
        #[arg(long, value_parser = parse_class)]
        class: RelationClass,
        #[arg(long, default_value_t = 3)]
        max_n: usize,
    },
    /// Evaluate both sides of a characterization biconditional.
    #[command(alias = "check-characterization")]
    Characterize {
        #[arg(long, value_parser = parse_characterization)]
        id: CharacterizationId,
        #[arg(long)]
        relation: PathBuf,
    },
    /// Verify that C_t operators reduce to the non-dual operators.
    Covering {
        #[arg(long)]
        covering: PathBuf,
        /// Optionally report both C_t approximations of this set.
        #[arg(long)]
        set: Option<PathBuf>,
    },
    /// Deductive closure and largest theory of a set of propositions.
    Logic {
        #[arg(long)]
        frame: PathBuf,
        #[arg(long)]
        set: PathBuf,
    },
}

fn parse_pairing(s: &str) -> std::result::Result<OperatorPairing, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_class(s: &str) -> std::result::Result<RelationClass, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_characterization(s: &str) -> std::result::Result<CharacterizationId, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_row(s: &str) -> std::result::Result<PropertyId, String> {
    let row: u8 = s.parse().map_err(|_| format!("property row must be 1..=23, got {s:?}"))?;
    PropertyId::new(row).map_err(|e| e.to_string())
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Input(format!("{}: {e}", path.display())))
}

fn load_relation(path: &Path) -> Result<BinaryRelation> {
    io::parse_relation(&read(path)?).map_err(|e| Error::Input(format!("{}: {e}", path.display())))
}

fn with_path<T>(path: &Path, r: Result<T>) -> Result<T> {
    r.map_err(|e| Error::Input(format!("{}: {e}", path.display())))
}

fn sweepable(r: &BinaryRelation) -> Result<()> {
    if r.size() > SWEEP_MAX_N {
        return Err(Error::Capacity { requested: r.size(), bound: SWEEP_MAX_N });
    }
    Ok(())
}

fn pretty<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("report serializes");
    s.push('\n');
    s
}

/// A rendered report and the exit status it implies.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub status: i32,
    pub report: String,
}

impl Outcome {
    fn new(ok: bool, report: String) -> Self {
        Outcome { status: if ok { 0 } else { 1 }, report }
    }
}

/// Executes a parsed command line. `Err` means an input error (exit 2).
pub fn execute(cli: &Cli) -> Result<Outcome> {
    let cap = Capacity::from_env()?;
    match &cli.command {
        Command::Classify { relation } => {
            let r = load_relation(relation)?;
            Ok(Outcome::new(true, pretty(&r.classify())))
        }
        Command::Approx { pairing, op, relation, set } => {
            let r = load_relation(relation)?;
            let x = with_path(set, io::parse_set(&read(set)?, r.universe()))?;
            let out = match op {
                Op::Lower => approx::lower(*pairing, &r, x)?,
                Op::Upper => approx::upper(*pairing, &r, x)?,
            };
            Ok(Outcome::new(true, pretty(&json!({ "set": io::set_labels(r.universe(), &out) }))))
        }
        Command::Table { pairing, max_n, workers } => {
            cap.check(*max_n)?;
            let t = properties::generate_table_with_workers(*pairing, *max_n, &cap, *workers)?;
            let report = match cli.format {
                Format::Json => {
                    let mut s = t.to_json();
                    s.push('\n');
                    s
                }
                Format::Markdown => t.to_markdown(),
            };
            Ok(Outcome::new(true, report))
        }
        Command::Check { relation, row, pairing } => {
            let r = load_relation(relation)?;
            sweepable(&r)?;
            let c = properties::check_relation(*row, *pairing, &r)?;
            let u = r.universe();
            let failing = c.failing.map(|a| {
                json!({
                    "x": io::set_labels(u, &a.x),
                    "y": a.y.map(|y| io::set_labels(u, &y)),
                })
            });
            let report = json!({
                "row": row.row(),
                "pairing": pairing,
                "holds": c.holds,
                "failing": failing,
            });
            Ok(Outcome::new(c.holds, pretty(&report)))
        }
        Command::Counterexample { row, pairing, class, max_n } => {
            let v = properties::search_class(*row, *pairing, *class, *max_n, &cap)?;
            Ok(Outcome::new(v.is_verified(), pretty(&v)))
        }
        Command::Characterize { id, relation } => {
            let r = load_relation(relation)?;
            sweepable(&r)?;
            let rec = characterization::check_biconditional(*id, &r);
            Ok(Outcome::new(rec.consistent, pretty(&rec)))
        }
        Command::Covering { covering: path, set } => {
            let c = with_path(path, io::parse_covering(&read(path)?))?;
            let report = covering::reduction_report(&c)?;
            let ok = report.ok();
            let mut value = serde_json::to_value(&report).expect("report serializes");
            if let Some(set) = set {
                let x = with_path(set, io::parse_set(&read(set)?, c.universe()))?;
                value["ct_lower"] = json!(io::set_labels(c.universe(), &c.ct_lower(x)));
                value["ct_upper"] = json!(io::set_labels(c.universe(), &c.ct_upper(x)));
            }
            Ok(Outcome::new(ok, pretty(&value)))
        }
        Command::Logic { frame, set } => {
            let f = with_path(frame, io::parse_frame(&read(frame)?))?;
            let u = f.propositions();
            let x = with_path(set, io::parse_set(&read(set)?, u))?;
            let closure = f.deductive_closure(x)?;
            let interior = f.largest_theory_within(x)?;
            let report = json!({
                "set": io::set_labels(u, &x),
                "is_theory": f.is_theory(x)?,
                "deductive_closure": io::set_labels(u, &closure),
                "largest_theory_within": io::set_labels(u, &interior),
            });
            Ok(Outcome::new(true, pretty(&report)))
        }
    }
}

/// Runs the command and writes its report; returns the process exit code.
pub fn run(cli: &Cli, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    match execute(cli) {
        Ok(out) => {
            let written = match &cli.output {
                Some(path) => fs::write(path, &out.report).map_err(|e| e.to_string()),
                None => stdout.write_all(out.report.as_bytes()).map_err(|e| e.to_string()),
            };
            match written {
                Ok(()) => out.status,
                Err(e) => {
                    let _ = writeln!(stderr, "error: {e}");
                    2
                }
            }
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            2
        }
    }
}
