use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use chern_obstruct::arith::rational::parse_rational;
use chern_obstruct::cli::job::{OracleParams, SweepParams};
use chern_obstruct::cli::run::family_invariants;
use chern_obstruct::cli::{family_csv, parse_job, run, CsvOptions, JobSpec, Mode, Payload, ReportFormat};
use chern_obstruct::arith::Rational;
use chern_obstruct::Error;

#[derive(Parser)]
#[command(name = "chern-obstruct", version, about = "Chern-number obstructions to Einstein and Kaehler metrics")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify a single invariant vector (n, v, a, b).
    Check(Common),
    /// Analyse a twist family.
    Twist(FamilyArgs),
    /// Analyse a product family.
    Product(FamilyArgs),
    /// Run the exact exterior-algebra identity suite.
    VerifyOracle(OracleArgs),
    /// Compare asymptotic verdicts against the closed-form conditions.
    Sweep(Common),
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    #[value(alias = "json")]
    Structured,
}

#[derive(Args)]
struct Common {
    /// Job document, or `-` for stdin.
    #[arg(long)]
    input: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Use k2 = 3/4 in dimension 4.
    #[arg(long)]
    lebrun_k2: bool,
}

#[derive(Args)]
struct FamilyArgs {
    #[command(flatten)]
    common: Common,
    /// Write sampled invariants to this CSV file.
    #[arg(long)]
    csv: Option<PathBuf>,
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    t_min: String,
    #[arg(long, default_value = "10", allow_hyphen_values = true)]
    t_max: String,
    #[arg(long, default_value_t = 100)]
    steps: usize,
    /// Target width of root isolating intervals.
    #[arg(long)]
    refine_width: Option<String>,
}

#[derive(Args)]
struct OracleArgs {
    #[command(flatten)]
    common: Common,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    samples: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
    /// Permit n above the default limit.
    #[arg(long)]
    allow_large: bool,
}

fn read_input(path: &PathBuf) -> Result<String, Error> {
    let io = |e: std::io::Error| Error::InvalidSpec(format!("{}: {e}", path.display()));
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(io)?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(io)
    }
}

fn flag_rational(field: &str, value: &str) -> Result<Rational, Error> {
    parse_rational(value).map_err(|e| Error::InvalidSpec(format!("--{field}: {e}")))
}

fn payload(mode: Mode, common: &Common) -> Result<Option<Payload>, Error> {
    match &common.input {
        Some(path) => parse_job(&read_input(path)?, Some(mode)).map(Some),
        None => Ok(None),
    }
}

fn required(mode: Mode, common: &Common) -> Result<Payload, Error> {
    payload(mode, common)?.ok_or_else(|| Error::InvalidSpec(format!("`{mode}` needs --input")))
}

fn build(cli: &Cli) -> Result<JobSpec, Error> {
    let (mut job, common) = match &cli.command {
        Command::Check(c) => (JobSpec::new(required(Mode::Check, c)?), c),
        Command::Twist(f) | Command::Product(f) => {
            let mode = if matches!(cli.command, Command::Twist(_)) { Mode::Twist } else { Mode::Product };
            let mut job = JobSpec::new(required(mode, &f.common)?);
            if let Some(w) = &f.refine_width {
                let w = flag_rational("refine-width", w)?;
                if w <= Rational::from_integer(0.into()) {
                    return Err(Error::InvalidSpec("--refine-width must be positive".into()));
                }
                job.output.refine_width = w;
            }
            if let Some(path) = &f.csv {
                let csv = CsvOptions {
                    path: path.clone(),
                    t_min: flag_rational("t-min", &f.t_min)?,
                    t_max: flag_rational("t-max", &f.t_max)?,
                    steps: f.steps,
                };
                if csv.t_min > csv.t_max {
                    return Err(Error::InvalidSpec("--t-min exceeds --t-max".into()));
                }
                job.output.csv = Some(csv);
            }
            (job, &f.common)
        }
        Command::VerifyOracle(o) => {
            let mut params = match payload(Mode::VerifyOracle, &o.common)? {
                Some(Payload::VerifyOracle(p)) => p,
                _ => OracleParams::default(),
            };
            params.n = o.n.unwrap_or(params.n);
            params.samples = o.samples.unwrap_or(params.samples);
            params.seed = o.seed.unwrap_or(params.seed);
            params.allow_large |= o.allow_large;
            (JobSpec::new(Payload::VerifyOracle(params)), &o.common)
        }
        Command::Sweep(c) => {
            let p = payload(Mode::Sweep, c)?.unwrap_or(Payload::Sweep(SweepParams::default()));
            (JobSpec::new(p), c)
        }
    };
    job.output.format = match common.format {
        Format::Text => ReportFormat::Text,
        Format::Structured => ReportFormat::Structured,
    };
    job.output.lebrun_k2 = common.lebrun_k2;
    Ok(job)
}

fn execute(cli: &Cli) -> Result<ExitCode, Error> {
    let job = build(cli)?;
    let report = run(&job)?;
    if let Some(csv) = &job.output.csv {
        let (_, inv) = family_invariants(&job)?;
        std::fs::write(&csv.path, family_csv(&inv, csv))
            .map_err(|e| Error::InvalidSpec(format!("{}: {e}", csv.path.display())))?;
    }
    let text = match job.output.format {
        ReportFormat::Text => report.to_text(),
        ReportFormat::Structured => report.to_structured() + "\n",
    };
    let mut out = std::io::stdout().lock();
    if let Err(e) = out.write_all(text.as_bytes()).and_then(|_| out.flush()) {
        if e.kind() != std::io::ErrorKind::BrokenPipe {
            return Err(Error::InvalidSpec(format!("stdout: {e}")));
        }
    }
    Ok(if report.has_internal_failure() { ExitCode::from(2) } else { ExitCode::SUCCESS })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::DomainViolation(_) => ExitCode::from(2),
                _ => ExitCode::from(1),
            }
        }
    }
}
