//! Command-line front end.
//!
//! Exit codes: `0` success, `1` a verification failed, `2` usage error,
//! `3` resource limit exceeded. Output is written once, after the whole
//! computation has finished, and is byte-for-byte deterministic.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::brauer::{f_d_pullback_matrix, verify_brauer_ranks, verify_shift_square, BrauerRanksReport, NsModel};
use crate::chern::verify_c_identities;
use crate::combi::binomial;
use crate::divisor::{dual_contract, pairing_table, verify_closed_formula, verify_divisor_classes};
use crate::error::{Error, Result};
use crate::quot::{poincare_quot, PoincarePolynomial};
use crate::sym::{betti_sym_closed, generation_check, invariant_rank, Limits, DEFAULT_MAX_BASIS};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFICATION_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "symquot",
    version,
    about = "Cohomology of symmetric products and Quot schemes of curves"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    /// Refuse computations whose Künneth basis (2g+2)^d exceeds this size.
    #[arg(long, default_value_t = DEFAULT_MAX_BASIS, global = true)]
    max_basis: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Betti numbers b_k.
    #[command(subcommand)]
    Betti(Space),
    /// Poincaré polynomials.
    #[command(subcommand)]
    Poincare(Space),
    /// Brauer-group ranks of Pic^d X, Sym^d X and Q(r, d).
    Brauer(BrauerArgs),
    /// Pairings of the universal divisor against the dual basis of H^2(X^{d+1}).
    Pairing(PairingArgs),
    /// Run a verification suite.
    Verify(VerifyArgs),
}

#[derive(Debug, Subcommand)]
enum Space {
    /// The symmetric product Sym^d X.
    Sym(SymArgs),
    /// The Quot scheme Q(r, d) of torsion quotients of O^r.
    Quot(QuotArgs),
}

#[derive(Debug, Args)]
struct SymArgs {
    #[arg(long)]
    genus: u32,
    #[arg(long)]
    degree: usize,
    /// A single cohomological degree instead of the whole sequence.
    #[arg(long)]
    k: Option<usize>,
}

#[derive(Debug, Args)]
struct PairingArgs {
    #[arg(long)]
    genus: u32,
    #[arg(long)]
    degree: usize,
}

#[derive(Debug, Args)]
struct QuotArgs {
    #[arg(long)]
    genus: u32,
    #[arg(long)]
    rank: usize,
    #[arg(long)]
    degree: usize,
    /// A single cohomological degree instead of the whole sequence.
    #[arg(long)]
    k: Option<usize>,
}

#[derive(Debug, Args)]
struct BrauerArgs {
    #[arg(long)]
    genus: u32,
    #[arg(long)]
    rank: usize,
    #[arg(long)]
    degree: usize,
    /// Picard number of Pic^d X (default: 1, or 0 in genus 0).
    #[arg(long)]
    rho: Option<u64>,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    suite: Suite,
    /// Restrict to one genus (default: 0..=3).
    #[arg(long)]
    genus: Option<u32>,
    /// Restrict to one degree (default: the suite's range up to 4).
    #[arg(long)]
    degree: Option<usize>,
    /// Restrict to one Quot rank (default: 2..=3).
    #[arg(long)]
    rank: Option<usize>,
    /// Restrict to one Picard number (default: every valid value).
    #[arg(long)]
    rho: Option<u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    Macdonald,
    Divisor,
    Chern,
    Pullback,
    Theorem1,
    All,
}

impl Suite {
    fn name(self) -> &'static str {
        match self {
            Suite::Macdonald => "macdonald",
            Suite::Divisor => "divisor",
            Suite::Chern => "chern",
            Suite::Pullback => "pullback",
            Suite::Theorem1 => "theorem1",
            Suite::All => "all",
        }
    }
}

/// Runs the CLI on `args` (including the program name) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = sink.write_all(text.as_bytes());
            return code;
        }
    };
    let limits = Limits {
        max_basis: cli.max_basis,
        ..Limits::default()
    };
    match execute(&cli, &limits) {
        Ok((text, pass)) => {
            let _ = out.write_all(text.as_bytes());
            if pass {
                EXIT_OK
            } else {
                EXIT_VERIFICATION_FAILED
            }
        }
        Err(e) => {
            let _ = err.write_all(render_error(&e, cli.format).as_bytes());
            exit_code(&e)
        }
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::ResourceLimit(_) | Error::Overflow(_) => EXIT_RESOURCE,
        Error::ChangeOfBasis(_) | Error::Internal(_) => EXIT_VERIFICATION_FAILED,
        Error::Precondition(_)
        | Error::IndexOutOfRange { .. }
        | Error::DimensionMismatch { .. }
        | Error::GenusMismatch { .. } => EXIT_USAGE,
    }
}

fn render_error(e: &Error, format: Format) -> String {
    match format {
        Format::Json => format!("{}\n", json!({"error": {"kind": e.kind(), "message": e.to_string()}})),
        Format::Text | Format::Csv => format!("error[{}]: {e}\n", e.kind()),
    }
}

fn to_json<T: Serialize>(value: &T) -> Result<String> {
    serde_json::to_string(value)
        .map(|s| s + "\n")
        .map_err(|e| Error::Internal(format!("JSON encoding failed: {e}")))
}

fn execute(cli: &Cli, limits: &Limits) -> Result<(String, bool)> {
    let format = cli.format;
    match &cli.command {
        Command::Betti(space) | Command::Poincare(space) => {
            let poly_style = matches!(cli.command, Command::Poincare(_));
            let (poly, k) = match space {
                Space::Sym(a) => (sym_polynomial(a.genus, a.degree, limits)?, a.k),
                Space::Quot(a) => (quot_polynomial(a.genus, a.rank, a.degree, limits)?, a.k),
            };
            Ok((render_polynomial(&poly, k, format, poly_style)?, true))
        }
        Command::Brauer(a) => {
            let rho = a.rho.unwrap_or(u64::from(a.genus > 0));
            let report = verify_brauer_ranks(a.genus, a.rank, a.degree, rho)?;
            Ok((render_brauer(&report, format)?, report.pass))
        }
        Command::Pairing(a) => {
            check_h2_size(limits, a.genus, a.degree + 1, false)?;
            let table = pairing_table(a.genus, a.degree)?;
            let text = match format {
                Format::Json => to_json(&table)?,
                Format::Csv => table.to_csv(),
                Format::Text => table.to_csv().replace(',', "\t"),
            };
            Ok((text, true))
        }
        Command::Verify(a) => {
            let cases = run_suite(a, limits)?;
            let pass = cases.iter().all(|c| c.pass);
            Ok((render_cases(&cases, pass, format)?, pass))
        }
    }
}

/// Guard for computations over the degree-two Künneth basis of `X^n`
/// (size `n + C(n,2)·4g²`); `pairwise` ones compare it against itself.
fn check_h2_size(limits: &Limits, genus: u32, n: usize, pairwise: bool) -> Result<()> {
    let n = n as u64;
    let g = u64::from(genus);
    let size = n
        .checked_mul(n.saturating_sub(1))
        .and_then(|p| (p / 2).checked_mul(4 * g * g))
        .and_then(|p| p.checked_add(n));
    let work = if pairwise {
        size.and_then(|s| s.checked_mul(s))
    } else {
        size
    };
    match work {
        Some(w) if w <= limits.max_basis => Ok(()),
        _ => Err(Error::ResourceLimit(format!(
            "the degree-two basis of X^{n} in genus {genus} exceeds the work limit {}",
            limits.max_basis
        ))),
    }
}

fn sym_polynomial(genus: u32, d: usize, limits: &Limits) -> Result<PoincarePolynomial> {
    limits.check_basis(genus, d)?;
    let betti = (0..=2 * d as u32)
        .map(|k| invariant_rank(genus, d, k, limits))
        .collect::<Result<Vec<_>>>()?;
    PoincarePolynomial::new(d, betti)
}

fn quot_polynomial(genus: u32, r: usize, d: usize, limits: &Limits) -> Result<PoincarePolynomial> {
    if r == 0 {
        return Err(Error::Precondition("Q(r, d) needs r ≥ 1".into()));
    }
    let cells = binomial((d + r - 1) as u64, (r - 1) as u64)?;
    let width = 2 * (r as u64) * (d as u64) + 1;
    if cells > limits.max_basis || width > limits.max_basis {
        return Err(Error::ResourceLimit(format!(
            "Q({r}, {d}) has {cells} fixed components and {width} Betti numbers, above the limit {}",
            limits.max_basis
        )));
    }
    poincare_quot(genus, r, d)
}

fn render_polynomial(poly: &PoincarePolynomial, k: Option<usize>, format: Format, poly_style: bool) -> Result<String> {
    if let Some(k) = k {
        let b = *poly.betti.get(k).ok_or(Error::IndexOutOfRange {
            what: "k",
            value: k,
            min: 0,
            max: 2 * poly.dim,
        })?;
        return match format {
            Format::Json => to_json(&json!({"k": k, "betti": b})),
            Format::Csv => Ok(format!("k,betti\n{k},{b}\n")),
            Format::Text => Ok(format!("{b}\n")),
        };
    }
    match format {
        Format::Json => to_json(poly),
        Format::Csv => {
            let mut s = String::from("k,betti\n");
            for (i, b) in poly.betti.iter().enumerate() {
                let _ = writeln!(s, "{i},{b}");
            }
            Ok(s)
        }
        Format::Text if poly_style => Ok(format!("{}\n", polynomial_text(&poly.betti))),
        Format::Text => {
            let line: Vec<String> = poly.betti.iter().map(u64::to_string).collect();
            Ok(format!("{}\n", line.join(" ")))
        }
    }
}

fn polynomial_text(betti: &[u64]) -> String {
    let terms: Vec<String> = betti
        .iter()
        .enumerate()
        .filter(|(_, &b)| b != 0)
        .map(|(i, &b)| match (i, b) {
            (0, b) => b.to_string(),
            (1, 1) => "t".into(),
            (1, b) => format!("{b}t"),
            (i, 1) => format!("t^{i}"),
            (i, b) => format!("{b}t^{i}"),
        })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

fn render_brauer(report: &BrauerRanksReport, format: Format) -> Result<String> {
    match format {
        Format::Json => to_json(report),
        Format::Csv => Ok(format!(
            "rank_pic,rank_sym,rank_quot,pass,rho\n{},{},{},{},{}\n",
            report.rank_pic, report.rank_sym, report.rank_quot, report.pass, report.rho
        )),
        Format::Text => Ok(format!(
            "Pic^d X: (Q/Z)^{}\nSym^d X: (Q/Z)^{}\nQ(r, d): (Q/Z)^{}\nrho = {}\n{}\n",
            report.rank_pic,
            report.rank_sym,
            report.rank_quot,
            report.rho,
            if report.pass { "ranks agree" } else { "RANKS DIFFER" }
        )),
    }
}

/// One verified parameter point.
#[derive(Debug, Clone, Serialize)]
struct Case {
    suite: &'static str,
    check: &'static str,
    genus: u32,
    degree: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    rank: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    rho: Option<u64>,
    pass: bool,
    detail: Value,
}

struct Grid<'a> {
    args: &'a VerifyArgs,
}

impl Grid<'_> {
    fn genera(&self) -> Vec<u32> {
        self.args.genus.map_or_else(|| (0..=3).collect(), |g| vec![g])
    }

    fn degrees(&self, lo: usize, hi: usize) -> Vec<usize> {
        self.args.degree.map_or_else(|| (lo..=hi).collect(), |d| vec![d])
    }

    fn ranks(&self) -> Vec<usize> {
        self.args.rank.map_or_else(|| (2..=3).collect(), |r| vec![r])
    }

    fn rhos(&self, genus: u32) -> Vec<u64> {
        match self.args.rho {
            Some(rho) => vec![rho],
            None if genus == 0 => vec![0],
            None => (1..=u64::from(genus * genus)).collect(),
        }
    }
}

fn value<T: Serialize>(v: &T) -> Result<Value> {
    serde_json::to_value(v).map_err(|e| Error::Internal(format!("JSON encoding failed: {e}")))
}

fn run_suite(args: &VerifyArgs, limits: &Limits) -> Result<Vec<Case>> {
    let suites = match args.suite {
        Suite::All => vec![
            Suite::Macdonald,
            Suite::Divisor,
            Suite::Chern,
            Suite::Pullback,
            Suite::Theorem1,
        ],
        s => vec![s],
    };
    let grid = Grid { args };
    let mut cases = Vec::new();
    for suite in suites {
        let case = |check, genus, degree, rank, rho, pass, detail| Case {
            suite: suite.name(),
            check,
            genus,
            degree,
            rank,
            rho,
            pass,
            detail,
        };
        match suite {
            Suite::Macdonald => {
                for g in grid.genera() {
                    for d in grid.degrees(1, 4) {
                        limits.check_basis(g, d)?;
                        let report = generation_check(g, d, 2 * d as u32, limits)?;
                        cases.push(case(
                            "generation",
                            g,
                            d,
                            None,
                            None,
                            report.pass,
                            value(&report.degrees)?,
                        ));
                        let mut mismatched = Vec::new();
                        for k in 0..=2 * d as u32 {
                            if invariant_rank(g, d, k, limits)? != betti_sym_closed(g, d, k)? {
                                mismatched.push(k);
                            }
                        }
                        cases.push(case(
                            "closed_form",
                            g,
                            d,
                            None,
                            None,
                            mismatched.is_empty(),
                            json!({"mismatched_degrees": mismatched}),
                        ));
                    }
                }
            }
            Suite::Divisor => {
                for g in grid.genera() {
                    for d in grid.degrees(1, 4) {
                        check_h2_size(limits, g, d + 1, true)?;
                        let formula = verify_closed_formula(g, d, d as i64)?;
                        cases.push(case("closed_formula", g, d, None, None, formula.pass, value(&formula)?));
                        let classes = verify_divisor_classes(g, d)?;
                        cases.push(case("classes", g, d, None, None, classes.pass, value(&classes)?));
                        let table = pairing_table(g, d)?;
                        let mismatches = table.case_analysis_mismatches();
                        let mut reconstructs = true;
                        for k in 1..=d {
                            let diag = crate::class::diagonal_class(crate::GenusContext::new(g), d + 1, k, d + 1)?;
                            reconstructs &= table.reconstruct_row(k)? == diag;
                        }
                        cases.push(case(
                            "pairing_table",
                            g,
                            d,
                            None,
                            None,
                            mismatches.is_empty() && reconstructs,
                            json!({"columns": table.columns.len(), "mismatches": mismatches.len(), "reconstructs_diagonals": reconstructs}),
                        ));
                        let contract = dual_contract(g, d + 1)?;
                        cases.push(case(
                            "dual_basis",
                            g,
                            d,
                            None,
                            None,
                            contract.pass,
                            json!({"size": contract.size, "mismatches": contract.mismatches.len()}),
                        ));
                    }
                }
            }
            Suite::Chern => {
                for g in grid.genera() {
                    for d in grid.degrees(1, 4) {
                        let report = verify_c_identities(g, d)?;
                        let whitney = crate::chern::whitney_consistent(g, d)?;
                        cases.push(case("identities", g, d, None, None, report.pass, value(&report)?));
                        cases.push(case(
                            "whitney",
                            g,
                            d,
                            None,
                            None,
                            whitney,
                            json!({"consistent": whitney}),
                        ));
                    }
                }
            }
            Suite::Pullback => {
                for g in grid.genera() {
                    for d in grid.degrees(2, 4) {
                        check_h2_size(limits, g, d + 1, false)?;
                        let m = f_d_pullback_matrix(g, d)?;
                        let identity = m.is_identity();
                        cases.push(case(
                            "f_d",
                            g,
                            d,
                            None,
                            None,
                            identity,
                            json!({"size": m.size(), "identity": identity}),
                        ));
                    }
                }
            }
            Suite::Theorem1 => {
                for g in grid.genera() {
                    for d in grid.degrees(2, 4) {
                        for r in grid.ranks() {
                            for rho in grid.rhos(g) {
                                NsModel::new(g, rho)?;
                                let ranks = verify_brauer_ranks(g, r, d, rho)?;
                                cases.push(case("ranks", g, d, Some(r), Some(rho), ranks.pass, value(&ranks)?));
                            }
                            if let Some(rho) = grid.rhos(g).first().copied() {
                                check_h2_size(limits, g, d + r, false)?;
                                let shift = verify_shift_square(g, r, d, rho)?;
                                cases.push(case(
                                    "shift_square",
                                    g,
                                    d,
                                    Some(r),
                                    Some(rho),
                                    shift.pass,
                                    value(&shift)?,
                                ));
                            }
                        }
                    }
                }
            }
            Suite::All => unreachable!("expanded above"),
        }
    }
    Ok(cases)
}

fn render_cases(cases: &[Case], pass: bool, format: Format) -> Result<String> {
    match format {
        Format::Json => to_json(&json!({"cases": value(&cases.to_vec())?, "pass": pass})),
        Format::Csv => {
            let mut s = String::from("suite,check,genus,degree,rank,rho,pass\n");
            for c in cases {
                let opt = |v: Option<String>| v.unwrap_or_default();
                let _ = writeln!(
                    s,
                    "{},{},{},{},{},{},{}",
                    c.suite,
                    c.check,
                    c.genus,
                    c.degree,
                    opt(c.rank.map(|r| r.to_string())),
                    opt(c.rho.map(|r| r.to_string())),
                    c.pass
                );
            }
            Ok(s)
        }
        Format::Text => {
            let mut s = String::new();
            for c in cases {
                let _ = write!(
                    s,
                    "{} {} {} g={} d={}",
                    if c.pass { "PASS" } else { "FAIL" },
                    c.suite,
                    c.check,
                    c.genus,
                    c.degree
                );
                if let Some(r) = c.rank {
                    let _ = write!(s, " r={r}");
                }
                if let Some(rho) = c.rho {
                    let _ = write!(s, " rho={rho}");
                }
                if !c.pass {
                    let _ = write!(s, " {}", c.detail);
                }
                s.push('\n');
            }
            let failed = cases.iter().filter(|c| !c.pass).count();
            let _ = writeln!(s, "{} of {} checks passed", cases.len() - failed, cases.len());
            Ok(s)
        }
    }
}
