use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use num_rational::BigRational;

use braidkit::cli::{cmd_baxterize, cmd_gen, cmd_verify, RunConfig};
use braidkit::report::Report;

#[derive(Parser)]
#[command(name = "braidkit", version, about = "Exact verification toolkit for braidings, quantum matrix algebras and their current analogs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct CommonArgs {
    /// Built-in symmetry (flip | superflip | standard | jordan) or a path
    /// to a symmetry.json file
    #[arg(long, default_value = "standard")]
    symmetry: String,
    /// Dimension of the base space for the built-ins
    #[arg(long, default_value_t = 2)]
    n: usize,
    /// Hecke parameter mode: "sym" or a rational value (built-ins use
    /// their natural mode; files carry their own)
    #[arg(long)]
    q: Option<String>,
    /// First parameter of the two-parameter involutive family
    #[arg(long, default_value = "1")]
    a: String,
    /// Second parameter of the two-parameter involutive family
    #[arg(long, default_value = "0")]
    b: String,
    /// Laurent truncation order
    #[arg(long, default_value_t = 2)]
    truncation: usize,
    /// Fock space truncation degree
    #[arg(long, default_value_t = 4)]
    fock_degree: usize,
    /// Spectral sample count
    #[arg(long, default_value_t = 8)]
    samples: usize,
    /// Seed for the deterministic sample grids
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Write the full JSON report here
    #[arg(long)]
    report: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Write a validated symmetry file for a built-in
    Gen {
        #[command(flatten)]
        common: CommonArgs,
        /// Output path
        #[arg(long)]
        out: PathBuf,
    },
    /// Certify the parameterized Yang-Baxter equation on a grid
    Baxterize {
        #[command(flatten)]
        common: CommonArgs,
        /// Coefficient flavor; `auto` derives it from the symmetry kind
        #[arg(long, default_value = "auto")]
        flavor: String,
    },
    /// Run a verification suite
    Verify {
        #[command(flatten)]
        common: CommonArgs,
        /// core | qma | yangian-hecke | yangian-involutive | rtt-yangian |
        /// chn | fock | all
        #[arg(long, default_value = "core")]
        suite: String,
    },
}

fn parse_rational(s: &str) -> Result<BigRational, String> {
    if let Some((num, den)) = s.split_once('/') {
        let n: num_bigint::BigInt = num.trim().parse().map_err(|_| format!("bad rational {s}"))?;
        let d: num_bigint::BigInt = den.trim().parse().map_err(|_| format!("bad rational {s}"))?;
        if d == 0.into() {
            return Err(format!("bad rational {s}"));
        }
        Ok(BigRational::new(n, d))
    } else {
        let n: num_bigint::BigInt = s.trim().parse().map_err(|_| format!("bad rational {s}"))?;
        Ok(BigRational::from_integer(n))
    }
}

fn config_from(common: &CommonArgs, suite: &str) -> Result<RunConfig, String> {
    Ok(RunConfig {
        symmetry: common.symmetry.clone(),
        n: common.n,
        q: common.q.clone(),
        a: parse_rational(&common.a)?,
        b: parse_rational(&common.b)?,
        truncation: common.truncation,
        fock_degree: common.fock_degree,
        samples: common.samples,
        seed: common.seed,
        suite: suite.to_string(),
        report: common.report.clone(),
    })
}

fn emit(report: &Report, path: &Option<PathBuf>) -> ExitCode {
    print!("{}", report.summary());
    if let Some(p) = path {
        let text = serde_json::to_string_pretty(&report.to_json()).unwrap();
        if let Err(e) = std::fs::write(p, text) {
            eprintln!("cannot write report: {e}");
            return ExitCode::from(2);
        }
    }
    if report.all_ok() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Gen { common, out } => {
            let cfg = match config_from(&common, "gen") {
                Ok(c) => c,
                Err(e) => {
                    eprintln!("configuration error: {e}");
                    return ExitCode::from(2);
                }
            };
            match cmd_gen(&cfg, &out) {
                Ok(()) => {
                    println!("wrote {}", out.display());
                    ExitCode::SUCCESS
                }
                Err(e) => {
                    eprintln!("configuration error: {e}");
                    ExitCode::from(2)
                }
            }
        }
        Command::Baxterize { common, flavor } => {
            if flavor != "auto" {
                eprintln!("configuration error: only the auto flavor is supported; the symmetry kind fixes it");
                return ExitCode::from(2);
            }
            let cfg = match config_from(&common, "baxterize") {
                Ok(c) => c,
                Err(e) => {
                    eprintln!("configuration error: {e}");
                    return ExitCode::from(2);
                }
            };
            match cmd_baxterize(&cfg) {
                Ok(report) => emit(&report, &cfg.report),
                Err(e) => {
                    eprintln!("configuration error: {e}");
                    ExitCode::from(2)
                }
            }
        }
        Command::Verify { common, suite } => {
            let cfg = match config_from(&common, &suite) {
                Ok(c) => c,
                Err(e) => {
                    eprintln!("configuration error: {e}");
                    return ExitCode::from(2);
                }
            };
            match cmd_verify(&cfg) {
                Ok(report) => emit(&report, &cfg.report),
                Err(e) => {
                    eprintln!("configuration error: {e}");
                    ExitCode::from(2)
                }
            }
        }
    }
}
