//! Command-line front end: expression evaluation, product tables,
//! verification suites and the brute-force oracles.

pub mod eval;
pub mod parse;
pub mod suites;

use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

pub use eval::{evaluate, EvalError, EvalOptions, ResultDoc, Value};
pub use parse::{parse, Atom, BinOp, Expr, Func, ParseError};
pub use suites::{run_suite, SuiteReport};

use crate::combinat::{Composition, Partition, Permutation};

/// Largest `--maxdeg` accepted by `table` without `--force`.
pub const MAX_TABLE_DEGREE: usize = 10;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "heis", about = "Heisenberg products on symmetric functions, descents and permutations")]
pub struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Truncation degree for completion-valued maps; also caps result degrees.
    #[arg(long, global = true, value_name = "N")]
    pub truncate: Option<usize>,
    /// Override the size guards.
    #[arg(long, global = true)]
    pub force: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate an expression such as "h[2,1] # h[3]".
    Eval {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Products of all pairs of basis elements up to a total degree.
    Table {
        #[arg(long, value_enum)]
        space: Space,
        #[arg(long)]
        maxdeg: usize,
        #[arg(long, value_enum, default_value = "heis")]
        op: TableOp,
    },
    /// Run a verification suite ("all" runs every suite, "list" names them).
    Verify {
        #[arg(long)]
        suite: String,
        /// Override the suite's default size bound.
        #[arg(long)]
        max: Option<usize>,
    },
    /// Run a brute-force oracle.
    Oracle {
        #[arg(value_enum)]
        which: OracleKind,
        #[arg(long, default_value_t = 3)]
        max: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Space {
    H,
    P,
    #[value(name = "X")]
    X,
    #[value(name = "M")]
    M,
    Perm,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TableOp {
    Heis,
    Ext,
    Int,
}

impl TableOp {
    fn binop(self) -> BinOp {
        match self {
            TableOp::Heis => BinOp::Heisenberg,
            TableOp::Ext => BinOp::External,
            TableOp::Int => BinOp::Internal,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OracleKind {
    Schurweyl,
    Cosets,
}

/// Basis atoms of one space with positive degree at most `n`.
fn basis_atoms(space: Space, n: usize) -> Vec<Atom> {
    let comps = || Composition::all_up_to(n).into_iter().filter(|c| !c.is_empty());
    let parts = || Partition::all_up_to(n).into_iter().filter(|c| !c.is_empty());
    match space {
        Space::H => parts().map(|p| Atom::H(p.parts().to_vec())).collect(),
        Space::P => parts().map(|p| Atom::P(p.parts().to_vec())).collect(),
        Space::X => comps().map(|c| Atom::X(c.parts().to_vec())).collect(),
        Space::M => comps().map(|c| Atom::M(c.parts().to_vec())).collect(),
        Space::Perm => (1..=n)
            .flat_map(Permutation::all_of)
            .map(|s| Atom::Perm(s.image().to_vec()))
            .collect(),
    }
}

fn atom_degree(a: &Atom) -> usize {
    match a {
        Atom::H(v) | Atom::P(v) | Atom::X(v) | Atom::M(v) => v.iter().sum(),
        Atom::Perm(v) => v.len(),
    }
}

#[derive(Debug, Serialize)]
pub struct TableEntry {
    pub expr: String,
    pub result: ResultDoc,
}

/// All products `a op b` over basis pairs of positive degree with total
/// degree at most `maxdeg`; `int` keeps only pairs of equal degree.
pub fn table(space: Space, maxdeg: usize, op: TableOp, opts: &EvalOptions) -> Result<Vec<TableEntry>, EvalError> {
    if maxdeg > MAX_TABLE_DEGREE && !opts.force {
        return Err(EvalError::SizeGuard(format!(
            "table degree {maxdeg} exceeds {MAX_TABLE_DEGREE}"
        )));
    }
    let atoms = basis_atoms(space, maxdeg.saturating_sub(1));
    let mut out = Vec::new();
    for a in &atoms {
        for b in &atoms {
            let (p, q) = (atom_degree(a), atom_degree(b));
            if p + q > maxdeg || (op == TableOp::Int && p != q) {
                continue;
            }
            let e = Expr::Bin(
                op.binop(),
                Box::new(Expr::Atom(a.clone())),
                Box::new(Expr::Atom(b.clone())),
            );
            let v = evaluate(&e, opts)?;
            out.push(TableEntry {
                expr: e.to_string(),
                result: ResultDoc::from_value(&v, opts.truncate),
            });
        }
    }
    Ok(out)
}

fn report_json(r: &SuiteReport) -> serde_json::Value {
    json!({
        "suite": r.name,
        "bound": r.bound,
        "checks": r.checks,
        "passed": r.passed(),
        "counterexample": r.counterexample,
    })
}

fn emit_reports(reports: &[SuiteReport], as_json: bool, out: &mut dyn Write) -> std::io::Result<i32> {
    if as_json {
        let docs: Vec<_> = reports.iter().map(report_json).collect();
        writeln!(out, "{}", serde_json::to_string_pretty(&docs).expect("serializable"))?;
    } else {
        for r in reports {
            writeln!(out, "{}", r.summary())?;
        }
    }
    Ok(if reports.iter().all(SuiteReport::passed) {
        EXIT_OK
    } else {
        EXIT_FAILURE
    })
}

/// Executes a parsed command line, writing results to `out` and
/// diagnostics to `err`. Returns the process exit code.
pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match run_inner(cli, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn run_inner(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, Box<dyn std::error::Error>> {
    let opts = EvalOptions {
        truncate: cli.truncate,
        force: cli.force,
    };
    match &cli.command {
        Command::Eval { expr } => {
            let e = match parse(expr) {
                Ok(e) => e,
                Err(pe) => {
                    writeln!(err, "{pe}")?;
                    return Ok(EXIT_USAGE);
                }
            };
            let v = match evaluate(&e, &opts) {
                Ok(v) => v,
                Err(ee) => {
                    writeln!(err, "{ee}")?;
                    return Ok(EXIT_USAGE);
                }
            };
            let doc = ResultDoc::from_value(&v, cli.truncate);
            if cli.json {
                writeln!(out, "{}", doc.to_json())?;
            } else {
                write!(out, "{}", doc.to_text())?;
            }
            Ok(EXIT_OK)
        }
        Command::Table { space, maxdeg, op } => {
            let entries = match table(*space, *maxdeg, *op, &opts) {
                Ok(t) => t,
                Err(ee) => {
                    writeln!(err, "{ee}")?;
                    return Ok(EXIT_USAGE);
                }
            };
            if cli.json {
                writeln!(out, "{}", serde_json::to_string_pretty(&entries)?)?;
            } else {
                for t in &entries {
                    let rhs = t.result.to_expression().unwrap_or_default();
                    writeln!(out, "{} = {rhs}", t.expr)?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::Verify { suite, max } => {
            if suite == "list" {
                for (name, bound, what) in suites::SUITES {
                    writeln!(out, "{name:<15} bound {bound:<2} {what}")?;
                }
                return Ok(EXIT_OK);
            }
            let names: Vec<&str> = if suite == "all" {
                suites::suite_names()
            } else {
                vec![suite.as_str()]
            };
            let mut reports = Vec::new();
            for name in names {
                match run_suite(name, *max) {
                    Some(r) => reports.push(r),
                    None => {
                        writeln!(
                            err,
                            "unknown suite `{name}`; expected one of {}, all, list",
                            suites::suite_names().join(", ")
                        )?;
                        return Ok(EXIT_USAGE);
                    }
                }
            }
            Ok(emit_reports(&reports, cli.json, out)?)
        }
        Command::Oracle { which, max } => {
            let name = match which {
                OracleKind::Schurweyl => "schurweyl",
                OracleKind::Cosets => "cosets",
            };
            if *which == OracleKind::Cosets && 2 * max > crate::rep_oracle::MAX_TOTAL {
                writeln!(
                    err,
                    "size guard: the coset oracle needs 2 * max <= {}",
                    crate::rep_oracle::MAX_TOTAL
                )?;
                return Ok(EXIT_USAGE);
            }
            let report = run_suite(name, Some(*max)).expect("known suite");
            Ok(emit_reports(&[report], cli.json, out)?)
        }
    }
}
