//! `genbound`: class-group generator bounds from the command line.
//!
//! Exit status: 0 success, 1 usage error, 2 no bound certified,
//! 3 field arithmetic could not be completed.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use genbound::criteria::{self, AlphaBetaMode, BoundReport, FieldShape};
use genbound::field::{DefiningPolynomial, NumberField};
use genbound::quadratic::{class_group, FundamentalDiscriminant};
use genbound::sieve::DEFAULT_SIEVE_LIMIT;
use genbound::verify::{self, Suite, VerifyContext};
use genbound::Error;

#[derive(Parser, Debug)]
#[command(name = "genbound", version, about = "GRH-conditional bounds on class-group generators")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Least T certified by the field-independent test for a field shape.
    BoundGeneric(BoundGenericArgs),
    /// Least integer T certified by the exact test for a specific field.
    BoundExact(BoundExactArgs),
    /// Recompute the published numerical claims.
    Verify(VerifyArgs),
    /// Splitting of rational primes in a number field.
    Split(SplitArgs),
    /// Class group of a quadratic field and generation by small primes.
    Classgroup(ClassgroupArgs),
}

#[derive(Clone, Copy, Debug, ValueEnum, PartialEq, Eq)]
enum Format {
    Text,
    Machine,
}

#[derive(Args, Debug)]
struct FormatArg {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args, Debug)]
struct BoundGenericArgs {
    #[arg(long)]
    degree: u32,
    #[arg(long)]
    r1: u32,
    /// log of the absolute discriminant
    #[arg(long)]
    log_disc: f64,
    /// Use the constant floors for alpha and beta (needs T >= 1000).
    #[arg(long)]
    floor_mode: bool,
    #[command(flatten)]
    fmt: FormatArg,
}

#[derive(Args, Debug)]
struct BoundExactArgs {
    /// Coefficients "c0,c1,...", constant term first.
    #[arg(long, allow_hyphen_values = true)]
    poly: String,
    /// Largest T to try; defaults to 4 log^2 Delta.
    #[arg(long)]
    ceiling: Option<f64>,
    #[command(flatten)]
    fmt: FormatArg,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long, value_parser = clap::builder::PossibleValuesParser::new(Suite::NAMES))]
    suite: String,
    #[arg(long, env = "GENBOUND_SIEVE_LIMIT", default_value_t = DEFAULT_SIEVE_LIMIT)]
    sieve_limit: u64,
    #[arg(long, env = "GENBOUND_PRIME_CACHE")]
    prime_cache: Option<PathBuf>,
    #[command(flatten)]
    fmt: FormatArg,
}

#[derive(Args, Debug)]
struct SplitArgs {
    #[arg(long, allow_hyphen_values = true)]
    poly: String,
    #[arg(long)]
    pmax: u64,
    #[command(flatten)]
    fmt: FormatArg,
}

#[derive(Args, Debug)]
struct ClassgroupArgs {
    #[arg(long, allow_hyphen_values = true)]
    disc: i64,
    #[arg(long)]
    bound: f64,
    #[command(flatten)]
    fmt: FormatArg,
}

fn exit_code(err: &Error) -> u8 {
    match err {
        Error::NoBoundCertified => 2,
        Error::SplittingUnavailable(_)
        | Error::UnverifiedDiscriminant
        | Error::Uncertified(_)
        | Error::UnsupportedRepresentation(_)
        | Error::Capacity { .. } => 3,
        _ => 1,
    }
}

/// Lines of `key<TAB>value` or `key: value`.
fn render_pairs(pairs: &[(String, String)], format: Format) -> String {
    let mut out = String::new();
    for (k, v) in pairs {
        match format {
            Format::Machine => writeln!(out, "{k}\t{v}").unwrap(),
            Format::Text => writeln!(out, "{k}: {v}").unwrap(),
        }
    }
    out
}

fn report_pairs(report: &BoundReport) -> Vec<(String, String)> {
    let mut pairs = vec![
        ("criterion".to_string(), report.criterion.to_string()),
        ("T_bound".to_string(), report.t_bound.to_string()),
        ("c_used".to_string(), report.c_used.to_string()),
        ("margin".to_string(), report.margin.to_string()),
        ("search".to_string(), format!("{:?}", report.search).to_lowercase()),
        ("lhs".to_string(), report.evaluation.lhs.to_string()),
    ];
    for (term, value) in &report.evaluation.rhs_terms {
        pairs.push((format!("term.{term}"), (value + 0.0).to_string()));
    }
    pairs
}

fn bound_generic(args: &BoundGenericArgs) -> Result<String, Error> {
    let shape = FieldShape::new(args.degree, args.r1, args.log_disc)?;
    let mode = if args.floor_mode { AlphaBetaMode::Floor } else { AlphaBetaMode::Exact };
    let report = criteria::minimal_t_generic(&shape, mode)?;
    let mut pairs = vec![
        ("shape".to_string(), shape.to_string()),
        ("mode".to_string(), format!("{mode:?}").to_lowercase()),
    ];
    pairs.extend(report_pairs(&report));
    pairs.push(("ratio".to_string(), (report.t_bound / (args.log_disc * args.log_disc)).to_string()));
    Ok(render_pairs(&pairs, args.fmt.format))
}

fn field_from(poly: &str) -> Result<NumberField, Error> {
    NumberField::new(DefiningPolynomial::parse(poly)?)
}

fn unverified_primes(field: &NumberField) -> String {
    let bad: Vec<String> = field
        .index_square_divisors()
        .iter()
        .filter(|&&p| !field.dedekind_certified(p))
        .map(u64::to_string)
        .collect();
    if bad.is_empty() {
        "discriminant not fully factored".to_string()
    } else {
        format!("index may be divisible by {}", bad.join(", "))
    }
}

fn bound_exact(args: &BoundExactArgs) -> Result<String, CliError> {
    let field = field_from(&args.poly)?;
    let log_disc = field.log_abs_disc().map_err(|e| CliError {
        message: format!("{e}: {}", unverified_primes(&field)),
        code: exit_code(&e),
    })?;
    let ceiling = args.ceiling.unwrap_or(4.0 * log_disc * log_disc);
    let report = criteria::minimal_t_exact(&field, ceiling)?;
    let (r1, r2) = field.signature();
    let mut pairs = vec![
        ("poly".to_string(), field.poly().to_string()),
        ("disc".to_string(), field.field_disc().expect("checked above").to_string()),
        ("abs_disc".to_string(), field.field_disc().expect("checked above").magnitude().to_string()),
        ("r1".to_string(), r1.to_string()),
        ("r2".to_string(), r2.to_string()),
        ("ceiling".to_string(), ceiling.to_string()),
    ];
    pairs.extend(report_pairs(&report));
    Ok(render_pairs(&pairs, args.fmt.format))
}

#[derive(Debug)]
struct CliError {
    message: String,
    code: u8,
}

impl From<Error> for CliError {
    fn from(err: Error) -> Self {
        CliError { message: err.to_string(), code: exit_code(&err) }
    }
}

fn verify_cmd(args: &VerifyArgs) -> Result<(String, bool), CliError> {
    let suite: Suite = args.suite.parse()?;
    let ctx = VerifyContext { sieve_limit: args.sieve_limit, prime_cache: args.prime_cache.clone() };
    let records = verify::run_suite(suite, &ctx)?;
    let all_pass = records.iter().all(|r| r.passed);
    let out = match args.fmt.format {
        Format::Text => verify::render_text(&records),
        Format::Machine => verify::render_machine(&records),
    };
    Ok((out, all_pass))
}

fn split_cmd(args: &SplitArgs) -> Result<String, Error> {
    let field = field_from(&args.poly)?;
    let mut out = String::new();
    for p in (2..=args.pmax).filter(|&p| genbound::field::is_prime(p)) {
        let datum = field.split_prime(p)?;
        let pairs = datum.ef_pairs();
        match args.fmt.format {
            Format::Machine => {
                let cells: Vec<String> = pairs.iter().map(|(e, f)| format!("{e},{f}")).collect();
                writeln!(out, "{p}\t{}", cells.join(" ")).unwrap();
            }
            Format::Text => {
                let kind = if datum.is_ramified() {
                    "ramified"
                } else if pairs.len() == 1 {
                    "inert"
                } else if pairs.len() == field.degree() {
                    "split"
                } else {
                    "partly split"
                };
                let cells: Vec<String> = pairs.iter().map(|(e, f)| format!("(e={e}, f={f})")).collect();
                writeln!(out, "{p}: {} [{kind}]", cells.join(" ")).unwrap();
            }
        }
    }
    Ok(out)
}

fn classgroup_cmd(args: &ClassgroupArgs) -> Result<String, Error> {
    let d = FundamentalDiscriminant::new(args.disc)?;
    let group = class_group(d);
    let gen = group.generated_by_primes_up_to(args.bound);
    let factors: Vec<String> = group.invariant_factors().iter().map(u64::to_string).collect();
    let divisors: Vec<String> = group.elementary_divisors().iter().map(u64::to_string).collect();
    let primes: Vec<String> = gen.primes_used.iter().map(u64::to_string).collect();
    let pairs = vec![
        ("disc".to_string(), args.disc.to_string()),
        ("h".to_string(), group.order().to_string()),
        ("invariant_factors".to_string(), factors.join(",")),
        ("elementary_divisors".to_string(), divisors.join(",")),
        ("bound".to_string(), args.bound.to_string()),
        ("primes".to_string(), primes.join(",")),
        ("subgroup_order".to_string(), gen.subgroup_order.to_string()),
        ("generates".to_string(), gen.generates.to_string()),
    ];
    Ok(render_pairs(&pairs, args.fmt.format))
}

fn run(cli: Cli) -> Result<(String, bool), CliError> {
    match cli.command {
        Command::BoundGeneric(a) => Ok((bound_generic(&a)?, true)),
        Command::BoundExact(a) => Ok((bound_exact(&a)?, true)),
        Command::Verify(a) => verify_cmd(&a),
        Command::Split(a) => Ok((split_cmd(&a)?, true)),
        Command::Classgroup(a) => Ok((classgroup_cmd(&a)?, true)),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok((out, ok)) => {
            print!("{out}");
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}
