//! `hahnlab` command-line front end.

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hahnlab::exact::parse_rational;
use hahnlab::report::{self, run_suite, sweep};
use hahnlab::specialfn::{hahn_q, hahn_q_table, rational_u, rational_u_table, HahnParams};
use hahnlab::{Error, Rational, RationalMatrix, RationalParams};
use serde::Serialize;

#[derive(Parser)]
#[command(
    name = "hahnlab",
    version,
    about = "Exact verification of the meta/trio Hahn algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the full verification suite for one parameter set.
    Report(ReportArgs),
    /// Run the suite over seeded random generic parameters.
    Sweep(SweepArgs),
    /// Print one exact value.
    Eval(EvalArgs),
    /// Export a value table as CSV.
    Table(TableArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Standard,
    General,
    Jacobi,
}

#[derive(Clone, Copy, ValueEnum)]
enum Function {
    HahnQ,
    RationalU,
}

fn rational(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

#[derive(Args)]
struct ParamArgs {
    #[arg(long, value_parser = rational, allow_hyphen_values = true)]
    a: Option<Rational>,
    #[arg(long, value_parser = rational, allow_hyphen_values = true)]
    b: Option<Rational>,
    #[arg(long, value_parser = rational, allow_hyphen_values = true)]
    c: Option<Rational>,
    #[arg(long, value_parser = rational, allow_hyphen_values = true)]
    rho: Option<Rational>,
    #[arg(long)]
    n: usize,
}

#[derive(Args)]
struct ReportArgs {
    #[command(flatten)]
    params: ParamArgs,
    #[arg(long, value_enum, default_value = "standard")]
    kind: KindArg,
    /// Write the JSON report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct SweepArgs {
    #[arg(long, default_value_t = report::DEFAULT_N_MIN)]
    n_min: usize,
    #[arg(long, default_value_t = report::DEFAULT_N_MAX)]
    n_max: usize,
    #[arg(long, default_value_t = report::DEFAULT_SAMPLES as u64, value_parser = clap::value_parser!(u64).range(1..))]
    samples: u64,
    #[arg(long, default_value_t = report::DEFAULT_SEED)]
    seed: u64,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct EvalArgs {
    #[arg(value_enum)]
    function: Function,
    #[arg(long)]
    k: usize,
    #[arg(long)]
    l: usize,
    #[command(flatten)]
    params: ParamArgs,
}

#[derive(Args)]
struct TableArgs {
    #[arg(value_enum)]
    function: Function,
    #[command(flatten)]
    params: ParamArgs,
    #[arg(long)]
    out: Option<PathBuf>,
}

enum Failure {
    Usage(String),
    NonGeneric(String),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::NonGenericParams(_) | Error::DenominatorVanishes(_) => {
                Failure::NonGeneric(e.to_string())
            }
            _ => Failure::Usage(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e.to_string())
    }
}

fn need(value: &Option<Rational>, flag: &str) -> Result<Rational, Failure> {
    value
        .clone()
        .ok_or_else(|| Failure::Usage(format!("--{flag} is required here")))
}

fn params(args: &ParamArgs, kind: KindArg) -> Result<RationalParams, Failure> {
    let a = need(&args.a, "a")?;
    Ok(match kind {
        KindArg::Standard => {
            RationalParams::standard(a, need(&args.c, "c")?, need(&args.rho, "rho")?, args.n)
        }
        KindArg::General => {
            let p = RationalParams::general(a, need(&args.b, "b")?, need(&args.c, "c")?, args.n);
            match &args.rho {
                Some(rho) => p.with_rho(rho.clone()),
                None => p,
            }
        }
        KindArg::Jacobi => RationalParams::jacobi(a, need(&args.b, "b")?, args.n),
    })
}

fn emit(out: &Option<PathBuf>, text: &str) -> Result<(), Failure> {
    match out {
        Some(path) => fs::write(path, text)?,
        None => io::stdout().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report serializes");
    s.push('\n');
    s
}

fn csv_table(m: &RationalMatrix) -> Result<String, Failure> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["k", "l", "value"])
        .map_err(|e| Failure::Io(e.to_string()))?;
    for k in 0..m.rows() {
        for l in 0..m.cols() {
            w.write_record([k.to_string(), l.to_string(), m[(k, l)].to_string()])
                .map_err(|e| Failure::Io(e.to_string()))?;
        }
    }
    let bytes = w.into_inner().map_err(|e| Failure::Io(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("ascii"))
}

fn run(cli: Cli) -> Result<bool, Failure> {
    match cli.command {
        Command::Report(args) => {
            let p = params(&args.params, args.kind)?;
            let rep = run_suite(&p)?;
            emit(&args.out, &json(&rep))?;
            for f in rep.failures() {
                eprintln!("FAIL {}/{}: {}", f.family, f.name, f.detail);
            }
            eprintln!(
                "{} checks: {} passed, {} failed, {} skipped",
                rep.summary.total, rep.summary.passed, rep.summary.failed, rep.summary.skipped
            );
            Ok(rep.passed())
        }
        Command::Sweep(args) => {
            let rep = sweep(args.n_min, args.n_max, args.samples as usize, args.seed)?;
            emit(&args.out, &json(&rep))?;
            eprintln!(
                "{} runs, {} checks: {} passed, {} failed, {} skipped",
                rep.runs.len(),
                rep.summary.total,
                rep.summary.passed,
                rep.summary.failed,
                rep.summary.skipped
            );
            Ok(rep.passed())
        }
        Command::Eval(args) => {
            let p = &args.params;
            let a = need(&p.a, "a")?;
            let value = match args.function {
                Function::HahnQ => hahn_q(
                    args.k,
                    args.l,
                    &HahnParams::new(a, need(&p.rho, "rho")?, p.n),
                )?,
                Function::RationalU => rational_u(args.k, args.l, &a, &need(&p.c, "c")?, p.n)?,
            };
            println!("{value}");
            Ok(true)
        }
        Command::Table(args) => {
            let p = &args.params;
            let a = need(&p.a, "a")?;
            let m = match args.function {
                Function::HahnQ => hahn_q_table(&HahnParams::new(a, need(&p.rho, "rho")?, p.n))?,
                Function::RationalU => rational_u_table(&a, &need(&p.c, "c")?, p.n)?,
            };
            emit(&args.out, &csv_table(&m)?)?;
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::NonGeneric(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
        Err(Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
