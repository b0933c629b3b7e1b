//! `tmoyal`: run conformance suites, print spectrum tables, evaluate elements.

use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use num_complex::Complex64;

use tmoyal::numeric::{eval, NumericConfig, NumericPoint};
use tmoyal::report::{exit_code, run_suite, spectrum_table, OmegaMode, Report, RunConfig, SuiteName};
use tmoyal::star::HamiltonianMethod;
use tmoyal::states::StateSide;
use tmoyal::TwistedElement;

#[derive(Parser)]
#[command(name = "tmoyal", version, about = "Exact algebra and conformance audits for the twisted Moyal plane")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Side {
    Right,
    Left,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Series,
    Mu,
    Bracket,
}

#[derive(Subcommand)]
enum Command {
    /// Run one suite (or `all`) and print its report.
    Verify {
        #[arg(long)]
        suite: String,
        #[arg(long, default_value_t = 8)]
        max_level: u32,
        #[arg(long, default_value_t = RunConfig::DEFAULT_SEED)]
        seed: u64,
        /// Draws per random property case.
        #[arg(long, default_value_t = 200)]
        samples: usize,
        #[arg(long, default_value_t = 1.0)]
        theta: f64,
        /// Twist parameter as `RE,IM`.
        #[arg(long, default_value = "0,0", allow_hyphen_values = true)]
        omega: String,
        #[arg(long, default_value_t = NumericConfig::DEFAULT_NODES)]
        nodes: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Engine and printed energies level by level.
    Spectrum {
        #[arg(long, value_enum)]
        side: Side,
        #[arg(long, default_value_t = 8)]
        max_level: u32,
        /// Reduce every column to ω = 0.
        #[arg(long)]
        omega_zero: bool,
        #[arg(long, value_enum, default_value_t = Method::Series)]
        method: Method,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Evaluate an element given in canonical text at a real point.
    Eval {
        #[arg(long)]
        expr: String,
        /// Point as `X1,X2`.
        #[arg(long, allow_hyphen_values = true)]
        at: String,
        #[arg(long, default_value_t = 1.0)]
        theta: f64,
        #[arg(long, default_value = "0,0", allow_hyphen_values = true)]
        omega: String,
    },
}

fn pair(s: &str, what: &str) -> Result<(f64, f64)> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    let [x, y] = parts.as_slice() else {
        bail!("{what} must be two comma-separated numbers, got `{s}`");
    };
    let parse = |v: &str| v.parse::<f64>().with_context(|| format!("bad number `{v}` in {what}"));
    Ok((parse(x)?, parse(y)?))
}

fn omega_of(s: &str) -> Result<Complex64> {
    let (re, im) = pair(s, "--omega")?;
    Ok(Complex64::new(re, im))
}

fn print_reports(reports: &[Report], format: Format) -> Result<()> {
    match format {
        Format::Text => {
            for r in reports {
                println!("{}", r.render_text());
            }
        }
        Format::Json if reports.len() == 1 => println!("{}", reports[0].to_json()),
        Format::Json => println!("{}", serde_json::to_string_pretty(reports)?),
    }
    Ok(())
}

fn run(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::Verify { suite, max_level, seed, samples, theta, omega, nodes, format } => {
            let numeric = NumericConfig::new(theta, omega_of(&omega)?).with_nodes(nodes);
            let config = RunConfig { max_level, seed, samples, numeric };
            let names: Vec<SuiteName> = if suite == "all" { SuiteName::ALL.to_vec() } else { vec![suite.parse()?] };
            let reports = names.into_iter().map(|n| run_suite(n, &config)).collect::<Result<Vec<_>, _>>()?;
            print_reports(&reports, format)?;
            Ok(exit_code(&reports) as u8)
        }
        Command::Spectrum { side, max_level, omega_zero, method, format } => {
            let side = match side {
                Side::Right => StateSide::Right,
                Side::Left => StateSide::Left,
            };
            let method = match method {
                Method::Series => HamiltonianMethod::Series,
                Method::Mu => HamiltonianMethod::MuOperator,
                Method::Bracket => HamiltonianMethod::Bracket,
            };
            let mode = if omega_zero { OmegaMode::Zero } else { OmegaMode::Symbolic };
            let table = spectrum_table(side, max_level, mode, method)?;
            match format {
                Format::Text => print!("{}", table.render_text()),
                Format::Json => println!("{}", serde_json::to_string_pretty(&table)?),
            }
            Ok(0)
        }
        Command::Eval { expr, at, theta, omega } => {
            let f: TwistedElement = expr.parse().map_err(|e| anyhow!("cannot parse `{expr}`: {e}"))?;
            let (x1, x2) = pair(&at, "--at")?;
            let cfg = NumericConfig::new(theta, omega_of(&omega)?);
            cfg.validate()?;
            let v = eval(&f, &NumericPoint::real(x1, x2, theta, cfg.omega_val))?;
            println!("{:.15e} {:+.15e}i", v.re, v.im);
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
