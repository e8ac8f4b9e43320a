//! Command-line front end for `samelson-core`.
//!
//! Exit codes: 0 when everything verified, 1 on a mathematical mismatch,
//! 2 on a usage error. The `run*` functions return an [`Outcome`] instead of
//! printing so that tests can drive them in-process.

pub mod record;

use std::ffi::OsString;

use clap::{Parser, Subcommand};
use samelson_core::bott::{BottSigma, SigmaTable};
use samelson_core::order::compute_order_with;
use samelson_core::rational::fraction_string;
use samelson_core::{SamelsonParams, Triangulation};

pub use record::{Format, GeneratorRecord, OutputRecord};

pub const EXIT_OK: u8 = 0;
pub const EXIT_MISMATCH: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "samelson",
    version,
    about = "Verify the order of the Samelson product <ε_{m,n}, ε_{m,n}> in Sp(n) with exact arithmetic"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute the order for a single instance 1 <= m < n.
    Compute {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Include the per-generator breakdown of ψ.
        #[arg(long)]
        verbose: bool,
    },
    /// Check every instance 1 <= m < n <= max-n.
    Sweep {
        #[arg(long = "max-n")]
        max_n: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        verbose: bool,
    },
    /// Compare the three routes to the coefficient of t^j in (e^t - 1)^k.
    Chern {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        j: u32,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        k: u32,
    },
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: u8,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn usage(message: String) -> Self {
        Self {
            code: EXIT_USAGE,
            stdout: String::new(),
            stderr: message,
        }
    }
}

/// Parses `args` (including the program name) and runs the subcommand.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run_command(cli.command),
        Err(err) => {
            let rendered = err.render().to_string();
            if err.exit_code() == 0 {
                Outcome {
                    code: EXIT_OK,
                    stdout: rendered,
                    stderr: String::new(),
                }
            } else {
                Outcome::usage(rendered)
            }
        }
    }
}

pub fn run_command(command: Command) -> Outcome {
    match command {
        Command::Compute {
            m,
            n,
            format,
            verbose,
        } => run_compute(m, n, format, verbose),
        Command::Sweep {
            max_n,
            format,
            verbose,
        } => run_sweep(max_n, format, verbose, &BottSigma),
        Command::Chern { j, k } => run_chern(j, k),
    }
}

pub fn run_compute(m: u32, n: u32, format: Format, verbose: bool) -> Outcome {
    let params = match SamelsonParams::new(m, n) {
        Ok(p) => p,
        Err(e) => {
            return Outcome::usage(format!(
                "error: {e}\n\nUsage: samelson compute --m <M> --n <N> [--format <FORMAT>] [--verbose]\n"
            ))
        }
    };
    let report = match compute_order_with(params, &BottSigma) {
        Ok(r) => r,
        Err(e) => return failure(e),
    };
    let record = OutputRecord::from_report(&report, verbose);
    let stdout = match format {
        Format::Json => record::render_json_object(&record),
        other => record::render(std::slice::from_ref(&record), other),
    };
    Outcome {
        code: if record.matched {
            EXIT_OK
        } else {
            EXIT_MISMATCH
        },
        stdout,
        stderr: String::new(),
    }
}

/// Runs every instance up to `max_n` with σ values drawn from `sigma`.
/// The CLI always passes [`BottSigma`].
pub fn run_sweep(max_n: u32, format: Format, verbose: bool, sigma: &dyn SigmaTable) -> Outcome {
    if max_n < 2 {
        return Outcome::usage(format!(
            "error: --max-n must be at least 2 (got {max_n})\n\nUsage: samelson sweep --max-n <MAX_N> [--format <FORMAT>]\n"
        ));
    }
    let mut records = Vec::new();
    for params in SamelsonParams::sweep(max_n) {
        match compute_order_with(params, sigma) {
            Ok(report) => records.push(OutputRecord::from_report(&report, verbose)),
            Err(e) => return failure(e),
        }
    }
    let all_match = records.iter().all(|r| r.matched);
    Outcome {
        code: if all_match { EXIT_OK } else { EXIT_MISMATCH },
        stdout: record::render(&records, format),
        stderr: String::new(),
    }
}

pub fn run_chern(j: u32, k: u32) -> Outcome {
    let tri = Triangulation::compute(j, k);
    let mut stderr = String::new();
    let compositions = match &tri.compositions {
        Some(c) => fraction_string(c),
        None => {
            stderr.push_str(&format!(
                "note: composition sum skipped for j = {j} (size limit {})\n",
                samelson_core::chern::COMPOSITION_LIMIT
            ));
            String::from("skipped")
        }
    };
    let agree = tri.agree();
    Outcome {
        code: if agree { EXIT_OK } else { EXIT_MISMATCH },
        stdout: format!(
            "{}, {}, {}, {}\n",
            fraction_string(&tri.series),
            compositions,
            fraction_string(&tri.stirling),
            if agree { "agree" } else { "disagree" }
        ),
        stderr,
    }
}

fn failure(e: samelson_core::Error) -> Outcome {
    Outcome {
        code: EXIT_MISMATCH,
        stdout: String::new(),
        stderr: format!("error: {e}\n"),
    }
}
