//! Argument parsing and command dispatch.
//!
//! Exit status: 0 when every identity holds, 1 when one fails (or a golden
//! file differs), 2 for usage and I/O errors.

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use macdo_core::macdonald::{
    cauchy_dual_check, determinantal_check, dual_lowering_check, eigen_check, JTable,
};
use macdo_core::partitions::{MultiIndex, Partition};
use macdo_core::qbinomial::{
    chu_vandermonde2_check, chu_vandermonde_check, qbinom_multiplicative_identity_check, qbinom_theorem_check,
};
use macdo_core::raising::{
    b_oracle_check, f_matrix_check, hall_littlewood_check, iterated_build_check, key_identity_check,
    phi_degree_check, phi_oracle_check, verify_raising, HallLittlewoodOperator, RaisingOperator,
};
use macdo_core::report::IdentityReport;

use crate::golden;
use crate::json::{j_table_json, operator_to_json, p_table_json, report_line, to_pretty};
use crate::suites::{self, RunConfig, Suite, DESK_MAX_M, DESK_MAX_N, DESK_MAX_WEIGHT};

#[derive(Parser, Debug)]
#[command(name = "macdo", version, about = "Exact Macdonald polynomials and row-type raising operators")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print P_λ or J_λ in the monomial basis.
    Poly(PolyArgs),
    /// Print the coefficient table of B_m.
    Operator(OperatorArgs),
    /// Run a single identity check.
    Identity(IdentityArgs),
    /// Run a verification suite.
    Verify(VerifyArgs),
    /// Write or check the golden tables.
    Golden(GoldenArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Args, Debug)]
pub struct Output {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write to this file instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Allow limits beyond n <= 4, m <= 4, |λ| <= 5.
    #[arg(long)]
    pub unsafe_limits: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum PolyKind {
    #[value(name = "P", alias = "p")]
    P,
    #[value(name = "J", alias = "j")]
    J,
}

#[derive(Args, Debug)]
pub struct PolyArgs {
    #[arg(value_enum)]
    pub kind: PolyKind,
    /// Comma-separated parts; empty for the empty partition.
    #[arg(long, value_parser = parse_partition)]
    pub lambda: Partition,
    #[arg(long)]
    pub n: usize,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Args, Debug)]
pub struct OperatorArgs {
    #[arg(long)]
    pub m: u32,
    #[arg(long)]
    pub n: usize,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum IdentityName {
    Raising,
    IteratedBuild,
    QbinomTheorem,
    QbinomMultiplicative,
    ChuVandermonde,
    ChuVandermonde2,
    PhiOracle,
    BOracle,
    FMatrix,
    KeyIdentity,
    PhiDegree,
    Equivariance,
    OrderBound,
    Eigen,
    Determinantal,
    Cauchy,
    DualLowering,
    HallLittlewood,
}

#[derive(Args, Debug)]
pub struct IdentityArgs {
    #[arg(value_enum)]
    pub name: IdentityName,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub m: Option<u32>,
    /// Partition, comma-separated (λ, or μ for dual-lowering).
    #[arg(long, value_parser = parse_partition)]
    pub lambda: Option<Partition>,
    #[arg(long, value_parser = parse_index)]
    pub alpha: Option<MultiIndex>,
    #[arg(long, value_parser = parse_index)]
    pub beta: Option<MultiIndex>,
    #[arg(long, value_parser = parse_index)]
    pub gamma: Option<MultiIndex>,
    #[arg(long)]
    pub k: Option<u32>,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(long, default_value = "all", value_parser = parse_suite)]
    pub suite: Suite,
    /// Largest variable count; every n from 1 up is covered.
    #[arg(long, default_value_t = 3)]
    pub n: usize,
    /// Largest operator weight; every m from 0 up is covered.
    #[arg(long, default_value_t = 3)]
    pub m: u32,
    /// Largest partition or multi-index weight.
    #[arg(long, default_value_t = 4)]
    pub max_weight: u32,
    /// Shuffles the order work is dispatched in; results are unaffected.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GoldenAction {
    Write,
    Check,
}

#[derive(Args, Debug)]
pub struct GoldenArgs {
    #[arg(value_enum)]
    pub action: GoldenAction,
    pub path: PathBuf,
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    s.parse().map_err(|e| format!("{e}"))
}

fn parse_index(s: &str) -> Result<MultiIndex, String> {
    s.parse().map_err(|e| format!("{e}"))
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse()
}

/// Failure modes that are not an identity failing.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Io(io::Error),
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

impl From<macdo_core::Error> for CliError {
    fn from(e: macdo_core::Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

/// Process exit status for a command outcome.
pub fn exit_code(r: &Result<bool, CliError>) -> ExitCode {
    match r {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(_) => ExitCode::from(2),
    }
}

fn emit(output: &Output, text: &str) -> Result<(), CliError> {
    match &output.out {
        Some(p) => fs::write(p, text)?,
        None => io::stdout().lock().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn within_limits(output: &Output, n: usize, m: u32, weight: u32) -> Result<(), CliError> {
    if n == 0 {
        return Err(CliError::Usage("--n must be at least 1".into()));
    }
    if !output.unsafe_limits && (n > DESK_MAX_N || m > DESK_MAX_M || weight > DESK_MAX_WEIGHT) {
        return Err(CliError::Usage(format!(
            "limits exceed n <= {DESK_MAX_N}, m <= {DESK_MAX_M}, weight <= {DESK_MAX_WEIGHT}; pass --unsafe-limits to override"
        )));
    }
    Ok(())
}

/// Runs a parsed command. `Ok(passed)` carries whether every identity held.
pub fn run(cli: Cli) -> Result<bool, CliError> {
    match cli.command {
        Command::Poly(a) => cmd_poly(a),
        Command::Operator(a) => cmd_operator(a),
        Command::Identity(a) => cmd_identity(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Golden(a) => cmd_golden(a),
    }
}

fn cmd_poly(a: PolyArgs) -> Result<bool, CliError> {
    within_limits(&a.output, a.n, 0, a.lambda.weight())?;
    if a.lambda.len() > a.n {
        return Err(CliError::Usage(format!("partition {} has more than {} parts", a.lambda, a.n)));
    }
    let table = JTable::build(a.n, a.lambda.weight())?;
    let (name, sym) = match a.kind {
        PolyKind::P => ("P", table.p(&a.lambda)?),
        PolyKind::J => ("J", table.j(&a.lambda)?),
    };
    let text = match a.output.format {
        Format::Json => match a.kind {
            PolyKind::P => to_pretty(&p_table_json(a.n, &a.lambda, &sym)),
            PolyKind::J => to_pretty(&j_table_json(a.n, &a.lambda, &table.get(&a.lambda).expect("built").coeffs)),
        },
        Format::Text => {
            let mut s = format!("{name}[{}] in {} variables, monomial basis:\n", a.lambda, a.n);
            for (mu, c) in sym.expansion.iter().rev() {
                s.push_str(&format!("  m[{mu}]: {c}\n"));
            }
            s
        }
    };
    emit(&a.output, &text)?;
    Ok(true)
}

fn cmd_operator(a: OperatorArgs) -> Result<bool, CliError> {
    within_limits(&a.output, a.n, a.m, 0)?;
    let op = RaisingOperator::build(a.m, a.n)?;
    let text = match a.output.format {
        Format::Json => to_pretty(&operator_to_json(&op)),
        Format::Text => {
            let mut s = format!("B_{} in {} variables, {} terms:\n", a.m, a.n, op.op().coeffs().len());
            for (g, c) in op.op().coeffs().iter().rev() {
                s.push_str(&format!("  T^[{g}]: {c}\n"));
            }
            s
        }
    };
    emit(&a.output, &text)?;
    Ok(true)
}

fn report_text(r: &IdentityReport) -> String {
    let status = if r.passed { "PASS" } else { "FAIL" };
    match &r.detail {
        Some(d) => format!("{status} {} {} : {d}\n", r.identity, r.params_text()),
        None => format!("{status} {} {}\n", r.identity, r.params_text()),
    }
}

fn render(format: Format, reports: &[IdentityReport]) -> String {
    reports
        .iter()
        .map(|r| match format {
            Format::Json => report_line(r) + "\n",
            Format::Text => report_text(r),
        })
        .collect()
}

fn need<T>(v: Option<T>, flag: &str, name: IdentityName) -> Result<T, CliError> {
    v.ok_or_else(|| CliError::Usage(format!("{name:?} needs --{flag}")))
}

fn cmd_identity(a: IdentityArgs) -> Result<bool, CliError> {
    use IdentityName as I;
    let name = a.name;
    let n = a.n.unwrap_or(1);
    let m = a.m.unwrap_or(0);
    let weight = [a.lambda.as_ref().map(Partition::weight), a.alpha.as_ref().map(MultiIndex::weight)]
        .into_iter()
        .flatten()
        .max()
        .unwrap_or(0);
    let len = a.alpha.as_ref().map_or(n, MultiIndex::len).max(n);
    within_limits(&a.output, len, m, weight)?;
    let lam = || need(a.lambda.clone(), "lambda", name);
    let alpha = || need(a.alpha.clone(), "alpha", name);
    let beta = || need(a.beta.clone(), "beta", name);
    let raising_op = |m: u32| RaisingOperator::build(m, n);
    let report = match name {
        I::Raising => {
            let lam = lam()?;
            let table = JTable::build(n, lam.weight() + m)?;
            verify_raising(&raising_op(m)?, &table, &lam)
        }
        I::IteratedBuild => {
            let lam = lam()?;
            let table = JTable::build(n, lam.weight())?;
            let ops = (0..=lam.part(0)).map(raising_op).collect::<Result<Vec<_>, _>>()?;
            iterated_build_check(&lam, &table, |m| Ok(&ops[m as usize]))
        }
        I::QbinomTheorem => qbinom_theorem_check(&alpha()?),
        I::QbinomMultiplicative => {
            qbinom_multiplicative_identity_check(&alpha()?, &need(a.gamma.clone(), "gamma", name)?, &beta()?)
        }
        I::ChuVandermonde => chu_vandermonde_check(&alpha()?, need(a.k, "k", name)?),
        I::ChuVandermonde2 => chu_vandermonde2_check(&alpha()?, &beta()?, need(a.k, "k", name)?),
        I::PhiOracle => phi_oracle_check(n, m, &alpha()?),
        I::BOracle => b_oracle_check(n, m),
        I::FMatrix => f_matrix_check(&alpha()?, &beta()?),
        I::KeyIdentity => key_identity_check(&raising_op(m)?),
        I::PhiDegree => phi_degree_check(&raising_op(m)?),
        I::Equivariance => raising_op(m)?.equivariance_check(),
        I::OrderBound => raising_op(m)?.order_check(),
        I::Eigen => {
            let lam = lam()?;
            eigen_check(&JTable::build(n, lam.weight())?, &lam)
        }
        I::Determinantal => determinantal_check(n),
        I::Cauchy => cauchy_dual_check(n, m as usize),
        I::DualLowering => dual_lowering_check(&lam()?, m as usize),
        I::HallLittlewood => {
            let lam = lam()?;
            let table = JTable::build(n, lam.weight() + m)?;
            hall_littlewood_check(&HallLittlewoodOperator::build(m, n)?, &table, &lam)
        }
    };
    emit(&a.output, &render(a.output.format, std::slice::from_ref(&report)))?;
    Ok(report.passed)
}

fn cmd_verify(a: VerifyArgs) -> Result<bool, CliError> {
    let cfg = RunConfig {
        n: a.n,
        m: a.m,
        max_weight: a.max_weight,
        seed: a.seed,
        unsafe_limits: a.output.unsafe_limits,
    };
    cfg.validate().map_err(CliError::Usage)?;
    let reports = suites::run(a.suite, &cfg);
    emit(&a.output, &render(a.output.format, &reports))?;
    let failed = reports.iter().filter(|r| !r.passed).count();
    eprintln!("{}: {} cases, {} failed", a.suite, reports.len(), failed);
    Ok(failed == 0)
}

fn cmd_golden(a: GoldenArgs) -> Result<bool, CliError> {
    let files = golden::generate()?;
    match a.action {
        GoldenAction::Write => {
            golden::write(&a.path, &files)?;
            eprintln!("wrote {} files under {}", files.len(), a.path.display());
            Ok(true)
        }
        GoldenAction::Check => match golden::check(&a.path, &files)? {
            golden::CheckOutcome::Match => {
                eprintln!("{} golden files match", files.len());
                Ok(true)
            }
            golden::CheckOutcome::Differ(paths) => {
                for p in &paths {
                    eprintln!("differs: {}", p.display());
                }
                Ok(false)
            }
        },
    }
}
