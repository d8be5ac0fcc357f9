use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use qdirac::harness::{emit_report, run_suite, Format, SuiteConfig, SUITES};
use qdirac::Error;

#[derive(Parser)]
#[command(name = "qdirac", version, about = "Verify the quaternion Dirac identities on seeded random instances")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run one suite, or `all`
    Verify {
        suite: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        trials: usize,
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
        /// Transformation exponents, comma separated
        #[arg(long = "n", value_delimiter = ',', allow_hyphen_values = true, default_value = "-1,0,1,2")]
        n_set: Vec<i32>,
        #[arg(long, default_value_t = 0.05)]
        grid_h: f64,
        #[arg(long, value_enum, default_value_t = FormatArg::Text)]
        format: FormatArg,
    },
    /// Print the available suite names
    ListSuites,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Json,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match cli.command {
        Command::ListSuites => {
            for s in SUITES {
                println!("{s}");
            }
            println!("all");
            ExitCode::SUCCESS
        }
        Command::Verify { suite, seed, trials, tol, n_set, grid_h, format } => {
            let format = match format {
                FormatArg::Text => Format::Text,
                FormatArg::Json => Format::Json,
            };
            let cfg = SuiteConfig { suite, seed, trials, tol, n_set, grid_h, format };
            match run_suite(&cfg) {
                Ok(report) => {
                    println!("{}", emit_report(&report, format).trim_end());
                    if report.pass {
                        ExitCode::SUCCESS
                    } else {
                        for c in report.cases.iter().filter(|c| !c.pass) {
                            eprintln!("failed: {} ({:e} > {:e})", c.name, c.max_residual, c.tolerance);
                        }
                        ExitCode::from(1)
                    }
                }
                Err(e @ (Error::UnknownSuite(_) | Error::InvalidConfig(_))) => {
                    eprintln!("error: {e}");
                    ExitCode::from(2)
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    ExitCode::from(1)
                }
            }
        }
    }
}
