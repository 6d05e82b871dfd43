//! Argument parsing and dispatch for the `hyperzeta` binary.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use hyperzeta_core::ensemble::DEFAULT_BUDGET;
use hyperzeta_core::{FamilyKind, FieldCtx};

use crate::commands::{cmd_avg, cmd_charsum, cmd_zeta, RunConfig};
use crate::parallel::default_workers;
use crate::report::{write_table, Format};
use crate::verify::run_all;
use crate::AppError;

#[derive(Debug, Parser)]
#[command(name = "hyperzeta", version, about = "Zeta functions and trace statistics of hyperelliptic curves over F_q")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Odd prime field size
    #[arg(long, global = true, default_value_t = 3)]
    q: u64,
    /// Genus of the families
    #[arg(long, global = true, default_value_t = 2)]
    g: usize,
    /// Largest power n (default: 2g for zeta, 2g+2 otherwise)
    #[arg(long = "n-max", global = true)]
    n_max: Option<usize>,
    #[arg(long, global = true, value_enum, default_value = "all")]
    family: FamilyArg,
    /// Curve polynomial Q for `zeta`: coefficients, constant term first
    #[arg(long, global = true, allow_hyphen_values = true)]
    poly: Option<String>,
    #[arg(long, global = true, value_enum, default_value = "csv")]
    format: Format,
    /// Write output here instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Worker threads (default: available parallelism)
    #[arg(long, global = true, env = "HYPERZETA_WORKERS")]
    workers: Option<usize>,
    /// Refuse families with (q-1) q^(2g+2) above this
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    /// Check every k-th candidate against point counts (0 = never)
    #[arg(long = "check-stride", global = true, default_value_t = 97)]
    check_stride: u64,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// L-polynomial, point counts and checks for one curve
    Zeta,
    /// Exact family averages of the scaled traces
    Avg,
    /// The character sums S(beta; n) with their identities
    Charsum,
    /// Run every self-check suite
    Verify,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FamilyArg {
    FOdd,
    FEven,
    Union,
    Hg,
    HgMonic,
    All,
}

impl FamilyArg {
    fn kinds(self) -> Vec<FamilyKind> {
        match self {
            FamilyArg::FOdd => vec![FamilyKind::FOdd],
            FamilyArg::FEven => vec![FamilyKind::FEven],
            FamilyArg::Union => vec![FamilyKind::Union],
            FamilyArg::Hg => vec![FamilyKind::Hg],
            FamilyArg::HgMonic => vec![FamilyKind::HgMonic],
            FamilyArg::All => FamilyKind::ALL.to_vec(),
        }
    }
}

/// Parses `args` (program name first), runs the command and returns the
/// process exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(stderr, "{e}");
            return if e.use_stderr() { 1 } else { 0 };
        }
    };
    match execute(cli, stdout, stderr) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}

fn execute(cli: Cli, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<(), AppError> {
    let fq = FieldCtx::new(cli.q).map_err(|e| AppError::Usage(e.to_string()))?;
    let mut buf: Vec<u8> = Vec::new();
    let mut failures = 0;
    match cli.command {
        Command::Zeta => {
            let poly = cli.poly.as_deref().ok_or_else(|| AppError::Usage("zeta needs --poly".into()))?;
            let report = cmd_zeta(fq, poly, cli.n_max)?;
            match cli.format {
                Format::Json => {
                    serde_json::to_writer_pretty(&mut buf, &report)?;
                    buf.push(b'\n');
                }
                Format::Csv => write_zeta_csv(&report, &mut buf)?,
            }
            if !report.passed() {
                failures = 1;
            }
        }
        Command::Avg | Command::Charsum | Command::Verify => {
            let cfg = RunConfig {
                fq,
                g: cli.g,
                n_max: cli.n_max.unwrap_or(2 * cli.g + 2),
                families: cli.family.kinds(),
                format: cli.format,
                workers: cli.workers.unwrap_or_else(default_workers),
                budget: cli.budget,
                check_stride: cli.check_stride,
            };
            cfg.validate()?;
            match cli.command {
                Command::Avg => write_table(&cmd_avg(&cfg)?, cfg.format, &mut buf)?,
                Command::Charsum => {
                    let rows = cmd_charsum(&cfg)?;
                    failures = rows.iter().filter(|r| r.duality == "fail" || r.endpoint == "fail").count() as u64;
                    write_table(&rows, cfg.format, &mut buf)?;
                }
                _ => {
                    let suites = run_all(&cfg, stderr)?;
                    failures = suites.iter().map(|s| s.failures).sum();
                    write_table(&suites, cfg.format, &mut buf)?;
                }
            }
        }
    }
    match &cli.out {
        Some(path) => std::fs::write(path, &buf)?,
        None => stdout.write_all(&buf)?,
    }
    if failures > 0 {
        return Err(AppError::Verification(failures));
    }
    Ok(())
}

fn write_zeta_csv(r: &crate::zeta::ZetaReport, out: &mut Vec<u8>) -> Result<(), AppError> {
    fn join<T: ToString>(v: &[T]) -> String {
        v.iter().map(T::to_string).collect::<Vec<_>>().join(";")
    }
    let opt = |b: Option<bool>| b.map_or("n/a".to_string(), |b| b.to_string());
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["field", "value"])?;
    let fields: [(&str, String); 13] = [
        ("poly", r.poly.clone()),
        ("q", r.q.to_string()),
        ("genus", r.genus.to_string()),
        ("lambda", r.lambda.to_string()),
        ("points", join(&r.points)),
        ("lcoeffs", join(&r.lcoeffs)),
        ("traces", join(&r.traces)),
        ("lfunc", r.lfunc.as_deref().map_or("n/a".to_string(), join)),
        ("routes_agree", r.routes_agree.to_string()),
        ("functional_equation", r.functional_equation.to_string()),
        ("lfunc_factorization", opt(r.lfunc_factorization)),
        ("weil_deviation", format!("{:e}", crate::report::round12(r.weil_deviation))),
        ("weil", r.weil.to_string()),
    ];
    for (k, v) in fields {
        w.write_record([k, v.as_str()])?;
    }
    w.flush()?;
    Ok(())
}
