//! Command-line front end: `decompose`, `equiv`, `irreducible` and
//! `oracle-check` over the expression language in [`syntax`].
//!
//! Exit codes: 0 success, 1 oracle mismatch, 2 usage or parse error,
//! 3 truncation depth insufficient.

pub mod eval;
pub mod syntax;

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use serde_json::json;

use crate::oracle::{to_dot, Truncation};
use crate::repcalc::{irreducible, DecompositionJson};

pub use eval::{
    alphabet_of, build_oracle, default_depth, eval_formula, eval_oracle, resolve_endo, CliError,
};
pub use syntax::{parse, EndoExpr, Expr, ExprKind, ParseError, Span};

#[derive(Debug, Parser)]
#[command(name = "cuntz-rep", version, about = "Decompose φ-tensor products of permutative representations of Cuntz algebras")]
pub struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Truncation depth for simulation (default: 2 * longest word + 4).
    #[arg(long, global = true, env = "CUNTZ_REP_DEPTH")]
    pub depth: Option<usize>,
    /// Write the oracle graph of the (first) expression in DOT format.
    #[arg(long, global = true, value_name = "PATH")]
    pub dot: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the canonical decomposition.
    Decompose { expr: String },
    /// Compare the decompositions of two expressions.
    Equiv { left: String, right: String },
    /// Report irreducibility of every component.
    Irreducible { expr: String },
    /// Recompute with the orbit oracle and compare.
    OracleCheck { expr: String },
}

/// Captured result of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { stdout, stderr: String::new(), code: 0 }
    }

    fn fail(err: &CliError) -> Self {
        Outcome { stdout: String::new(), stderr: format!("error: {err}\n"), code: err.exit_code() }
    }
}

pub fn run(cli: &Cli) -> Outcome {
    match dispatch(cli) {
        Ok(out) => out,
        Err(err) => Outcome::fail(&err),
    }
}

fn depth_for(cli: &Cli, exprs: &[&Expr]) -> usize {
    cli.depth.unwrap_or_else(|| exprs.iter().map(|e| default_depth(e)).max().unwrap_or(6))
}

fn with_newline(mut s: String) -> String {
    s.push('\n');
    s
}

fn dispatch(cli: &Cli) -> Result<Outcome, CliError> {
    let first = match &cli.command {
        Command::Decompose { expr } | Command::Irreducible { expr } | Command::OracleCheck { expr } => expr,
        Command::Equiv { left, .. } => left,
    };
    let first = parse(first)?;
    if let Some(path) = &cli.dot {
        let d = depth_for(cli, &[&first]);
        alphabet_of(&first)?;
        let model = build_oracle(&first, Truncation::uniform(d))?;
        std::fs::write(path, to_dot(&model)).map_err(|err| CliError::EndoFile {
            path: path.display().to_string(),
            msg: err.to_string(),
        })?;
    }

    match &cli.command {
        Command::Decompose { .. } => {
            let d = eval_formula(&first, depth_for(cli, &[&first]))?;
            Ok(Outcome::ok(with_newline(if cli.json {
                serde_json::to_string(&d).expect("decomposition serializes")
            } else {
                d.to_string()
            })))
        }
        Command::Equiv { right, .. } => {
            let second = parse(right)?;
            let depth = depth_for(cli, &[&first, &second]);
            let (a, b) = (eval_formula(&first, depth)?, eval_formula(&second, depth)?);
            let same = a == b;
            Ok(Outcome::ok(with_newline(if cli.json {
                json!({
                    "equivalent": same,
                    "left": DecompositionJson::from(&a),
                    "right": DecompositionJson::from(&b),
                })
                .to_string()
            } else {
                same.to_string()
            })))
        }
        Command::Irreducible { .. } => {
            let d = eval_formula(&first, depth_for(cli, &[&first]))?;
            if cli.json {
                let rows: Vec<_> = d
                    .components()
                    .map(|(c, m)| {
                        json!({
                            "class": c.to_string(),
                            "multiplicity": crate::repcalc::MultiplicityJson::from(m),
                            "irreducible": irreducible(c),
                        })
                    })
                    .collect();
                return Ok(Outcome::ok(with_newline(json!({ "components": rows }).to_string())));
            }
            let mut out = String::new();
            for (c, _) in d.components() {
                let verdict = if irreducible(c) { "irreducible" } else { "reducible" };
                let _ = writeln!(out, "{c} {verdict}");
            }
            Ok(Outcome::ok(out))
        }
        Command::OracleCheck { .. } => {
            let depth = depth_for(cli, &[&first]);
            let formula = eval_formula(&first, depth)?;
            let oracle = eval_oracle(&first, depth)?;
            let matches = oracle.complete && oracle.decomposition == formula;
            let verdict = if matches {
                "MATCH"
            } else if !oracle.complete {
                "INCOMPLETE"
            } else {
                "MISMATCH"
            };
            let code = match verdict {
                "MATCH" => 0,
                "INCOMPLETE" => 3,
                _ => 1,
            };
            let stdout = if cli.json {
                with_newline(
                    json!({
                        "result": verdict,
                        "depth": depth,
                        "complete": oracle.complete,
                        "formula": DecompositionJson::from(&formula),
                        "oracle": DecompositionJson::from(&oracle.decomposition),
                    })
                    .to_string(),
                )
            } else {
                format!(
                    "formula: {formula}\noracle:  {}{}\n{verdict}\n",
                    oracle.decomposition,
                    if oracle.complete { "" } else { " (incomplete)" }
                )
            };
            Ok(Outcome { stdout, stderr: String::new(), code })
        }
    }
}
