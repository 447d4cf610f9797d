//! `waring` — exact invariant tests for sums-of-powers representability.
//!
//! Four subcommands consume a form (literal text or JSON, a file path, or
//! `-` for standard input) and print a report: `aronhold` for plane
//! cubics, `secant7` for quinary cubics, `catalecticant` for quartics and
//! `scorza` for plane quartics. `sample` emits reproducible random forms
//! as JSON (pipe it into the other commands), and `segre` evaluates the
//! secant-variety degree formula.
//!
//! Reports go to stdout and are byte-deterministic: the same input, flags
//! and seed always produce identical bytes. Timing goes to stderr. All
//! arithmetic is exact; no value is ever rounded.
//!
//! Exit codes: 0 success, 2 malformed input, 3 input of the wrong shape
//! (arity, degree, dimensions), 4 internal consistency failure, 1 I/O.

mod report;
mod source;

use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use num_traits::Zero;
use rayon::prelude::*;

use report::{Report, Value};
use waring::rational::rat;
use waring::{
    build_a, build_b, build_c, cube_root, plane_rank_profile, random_form, random_powers_sum,
    scorza_map, segre_degree, Error, Form,
};

/// Exact invariants deciding when cubic and quartic forms are sums of powers.
#[derive(Parser)]
#[command(name = "waring", version)]
struct Cli {
    /// Print reports as one-line JSON objects instead of key: value lines.
    #[arg(long, global = true)]
    json: bool,

    /// Seed for the `sample` generator.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Aronhold invariant of a ternary cubic: zero exactly on sums of three cubes.
    Aronhold(AronholdArgs),
    /// Degree-15 invariant of a quinary cubic: zero exactly on sums of seven cubes.
    Secant7(Secant7Args),
    /// Catalecticant of a quartic; for ternary quartics this decides Clebsch.
    Catalecticant(CatalecticantArgs),
    /// Scorza quartic of a plane quartic.
    Scorza(ScorzaArgs),
    /// Emit a reproducible random form (or sum of powers of linear forms) as JSON.
    Sample(SampleArgs),
    /// Degree of the k-th secant variety of the quadric Veronese of P^n.
    Segre(SegreArgs),
}

#[derive(Args)]
struct FormArg {
    /// The form: literal text or JSON, a file path, or '-' for stdin.
    form: String,

    /// One form per input line, processed in parallel; reports keep input order.
    #[arg(long)]
    batch: bool,
}

#[derive(Args)]
struct AronholdArgs {
    #[command(flatten)]
    input: FormArg,

    /// Also print the 9x9 and 8x8 matrices.
    #[arg(long)]
    matrix: bool,

    /// Also print the rank of the 8x8 matrix and the secant membership bits.
    #[arg(long)]
    profile: bool,
}

#[derive(Args)]
struct Secant7Args {
    #[command(flatten)]
    input: FormArg,

    /// Print the determinant of the 45x45 matrix (default: everything).
    #[arg(long)]
    det: bool,

    /// Print the degree-15 invariant P (default: everything).
    #[arg(long)]
    p: bool,

    /// Print the rank of the 45x45 matrix (default: everything).
    #[arg(long)]
    rank: bool,

    /// Also print the 50x50 and 45x45 matrices.
    #[arg(long)]
    matrix: bool,
}

#[derive(Args)]
struct CatalecticantArgs {
    #[command(flatten)]
    input: FormArg,

    /// Number of variables expected for text input (JSON carries its own).
    #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u8).range(1..=10))]
    vars: u8,

    /// Also print the catalecticant matrix.
    #[arg(long)]
    matrix: bool,
}

#[derive(Args)]
struct ScorzaArgs {
    #[command(flatten)]
    input: FormArg,
}

#[derive(Args)]
struct SampleArgs {
    /// Number of variables.
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=10))]
    vars: u8,

    /// Degree of the form.
    #[arg(long, value_parser = clap::builder::RangedU64ValueParser::<usize>::new().range(1..))]
    degree: usize,

    /// Draw a sum of this many degree-th powers of random linear forms
    /// instead of a form with independent random coefficients.
    #[arg(long, value_parser = clap::builder::RangedU64ValueParser::<usize>::new().range(1..))]
    sum_of: Option<usize>,

    /// Coefficients are drawn uniformly from [-bound, bound].
    #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(i64).range(1..))]
    bound: i64,
}

#[derive(Args)]
struct SegreArgs {
    /// Dimension n of the ambient projective space.
    #[arg(long)]
    n: u64,

    /// Index k of the secant variety, 1 <= k <= n.
    #[arg(long)]
    k: u64,
}

enum CliError {
    Lib(Error),
    Io(std::io::Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Lib(e)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

/// Malformed input is 2, wrong shape is 3, a broken internal identity is 4.
fn error_code(e: &Error) -> u8 {
    match e {
        Error::Syntax { .. } | Error::DegreeMismatch { .. } | Error::VarOutOfRange { .. } => 2,
        Error::Shape(_) | Error::NotSquare { .. } | Error::OddOrder(_) | Error::NotAntisymmetric => {
            3
        }
        Error::Inconsistency(_) => 4,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let result = run(&cli);
    eprintln!("timing: {} ms", start.elapsed().as_millis());
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Lib(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(error_code(&e))
        }
        Err(CliError::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}

fn run(cli: &Cli) -> Result<(), CliError> {
    match &cli.command {
        Command::Aronhold(args) => {
            for_each_form(&args.input, cli.json, 3, 3, false, |f| aronhold_report(f, args))
        }
        Command::Secant7(args) => {
            for_each_form(&args.input, cli.json, 5, 3, false, |f| secant7_report(f, args))
        }
        Command::Catalecticant(args) => for_each_form(&args.input, cli.json, args.vars, 4, true, |f| {
            catalecticant_report(f, args)
        }),
        Command::Scorza(args) => for_each_form(&args.input, cli.json, 3, 4, false, scorza_report),
        Command::Sample(args) => sample(args, cli.seed),
        Command::Segre(args) => segre(args, cli.json),
    }
}

/// Runs `handler` on the input form, or in batch mode on every nonempty
/// line in parallel, printing reports in input order.
fn for_each_form<F>(
    input: &FormArg,
    json: bool,
    nvars: u8,
    degree: usize,
    any_nvars: bool,
    handler: F,
) -> Result<(), CliError>
where
    F: Fn(&Form) -> waring::Result<Report> + Sync,
{
    let content = source::fetch(&input.form)?;
    if input.batch {
        let lines: Vec<&str> = content
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty())
            .collect();
        let results: Vec<waring::Result<Report>> = lines
            .par_iter()
            .map(|line| source::parse(line, nvars, degree, any_nvars).and_then(|f| handler(&f)))
            .collect();
        for (i, result) in results.into_iter().enumerate() {
            match result {
                Ok(rep) => {
                    if i > 0 && !json {
                        println!();
                    }
                    print!("{}", rep.render(json));
                }
                Err(e) => {
                    eprintln!("input {} failed", i + 1);
                    return Err(e.into());
                }
            }
        }
        Ok(())
    } else {
        let form = source::parse(&content, nvars, degree, any_nvars)?;
        print!("{}", handler(&form)?.render(json));
        Ok(())
    }
}

fn aronhold_report(f: &Form, args: &AronholdArgs) -> waring::Result<Report> {
    let mats = build_a(f)?;
    let mut rep = Report::new("aronhold").with_input(f);
    rep.push("aronhold", Value::Rational(mats.a.pfaffian()?));
    if args.profile {
        let profile = plane_rank_profile(f)?;
        rep.push("rank_a", Value::Count(profile.rank_a));
        rep.push("sigma_1", Value::Bool(profile.in_sigma[0]));
        rep.push("sigma_2", Value::Bool(profile.in_sigma[1]));
        rep.push("sigma_3", Value::Bool(profile.in_sigma[2]));
    }
    if args.matrix {
        rep.push("aprime", Value::Matrix(mats.aprime));
        rep.push("a", Value::Matrix(mats.a));
    }
    Ok(rep)
}

fn secant7_report(f: &Form, args: &Secant7Args) -> waring::Result<Report> {
    let mats = build_b(f)?;
    let det = mats.b.det()?;
    let all = !(args.det || args.p || args.rank);
    let mut rep = Report::new("secant7").with_input(f);
    rep.push("member", Value::Bool(det.is_zero()));
    if all || args.det {
        rep.push("det", Value::Rational(det.clone()));
    }
    if all || args.p {
        let half = det.clone() / rat(2);
        let p = cube_root(&half).ok_or_else(|| {
            Error::Inconsistency("det B_f / 2 is not the cube of a rational".to_string())
        })?;
        rep.push("p", Value::Rational(p));
    }
    if all || args.rank {
        let rank = mats.b.rank();
        if det.is_zero() && rank > 42 {
            return Err(Error::Inconsistency(format!(
                "det B_f = 0 but rank B_f = {rank} > 42"
            )));
        }
        rep.push("rank_b", Value::Count(rank));
    }
    if args.matrix {
        rep.push("bprime", Value::Matrix(mats.bprime));
        rep.push("b", Value::Matrix(mats.b));
    }
    Ok(rep)
}

fn catalecticant_report(f: &Form, args: &CatalecticantArgs) -> waring::Result<Report> {
    let c = build_c(f)?;
    let det = c.matrix.det()?;
    let mut rep = Report::new("catalecticant").with_input(f);
    rep.push("vars", Value::Count(c.n + 1));
    rep.push("size", Value::Count(c.size));
    rep.push("det", Value::Rational(det.clone()));
    rep.push("rank", Value::Count(c.matrix.rank()));
    if f.nvars() == 3 {
        rep.push("clebsch", Value::Bool(det.is_zero()));
    }
    if args.matrix {
        rep.push("catalecticant", Value::Matrix(c.matrix));
    }
    Ok(rep)
}

fn scorza_report(f: &Form) -> waring::Result<Report> {
    let s = scorza_map(f)?;
    let mut rep = Report::new("scorza").with_input(f);
    rep.push("scorza", Value::Form(s));
    Ok(rep)
}

/// Prints the sampled form as bare one-line JSON (under any flags), so the
/// output can be piped straight into the form-consuming subcommands.
fn sample(args: &SampleArgs, seed: u64) -> Result<(), CliError> {
    let form = match args.sum_of {
        Some(k) => random_powers_sum(args.vars, args.degree, k, seed, args.bound).1,
        None => random_form(args.vars, args.degree, seed, args.bound),
    };
    println!("{}", form.to_json().map_err(CliError::Lib)?);
    Ok(())
}

fn segre(args: &SegreArgs, json: bool) -> Result<(), CliError> {
    let degree = segre_degree(args.n, args.k)?;
    if json {
        let mut rep = Report::new("segre");
        rep.push("n", Value::Count(args.n as usize));
        rep.push("k", Value::Count(args.k as usize));
        rep.push("degree", Value::Integer(degree));
        print!("{}", rep.render(true));
    } else {
        println!("{degree}");
    }
    Ok(())
}
