use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use spectral_cli::commands::{self, GenerateOptions, ProbeOptions};
use spectral_cli::report::render_drazin;
use spectral_cli::{render_human, CliError, EXIT_FAIL, EXIT_PASS};
use spectral_core::ratmat::parse_rat;
use spectral_core::Rat;

#[derive(Parser)]
#[command(name = "spectral", version, about = "Exact spectral invariants of operator triples (A, B, C)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct ProbeArgs {
    /// Probe value p or p/q; repeatable. Defaults to the rational
    /// eigenvalues of AC and BA, 1, and two non-eigenvalues.
    #[arg(long = "lambda", value_parser = parse_lambda, allow_hyphen_values = true)]
    lambda: Vec<Rat>,
    /// Largest n in the sequence tables (default max(dim X, dim Y)).
    #[arg(long)]
    nmax: Option<usize>,
    /// Print the machine-readable JSON report instead of the table.
    #[arg(long)]
    json: bool,
}

impl ProbeArgs {
    fn options(&self) -> ProbeOptions {
        ProbeOptions {
            lambdas: (!self.lambda.is_empty()).then(|| self.lambda.clone()),
            n_max: self.nmax,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Invariant tables for AC - lambda and BA - lambda, memberships, Drazin section.
    Report {
        file: PathBuf,
        #[command(flatten)]
        probes: ProbeArgs,
    },
    /// Run every verifier; exit 0 iff all pass.
    Verify {
        file: PathBuf,
        /// Treat a violated condition as a hard error.
        #[arg(long)]
        strict: bool,
        #[command(flatten)]
        probes: ProbeArgs,
    },
    /// Write a generated triple document.
    Generate {
        #[arg(long)]
        template: String,
        #[arg(long)]
        dim: usize,
        #[arg(long)]
        dim_y: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = spectral_core::genlab::DEFAULT_ENTRY_BOUND)]
        entry_bound: u32,
        /// Output path; stdout when absent.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Drazin inverse S of AC and the transferred inverse B S^2 A of BA.
    Drazin {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
}

fn parse_lambda(s: &str) -> Result<Rat, String> {
    parse_rat(s).map_err(|e| e.to_string())
}

fn load(file: &Path) -> Result<(spectral_core::intertwine::OperatorTriple, Option<String>), CliError> {
    let doc = commands::read_document(file)?;
    let t = doc.to_triple()?;
    Ok((t, doc.metadata.name.clone()))
}

fn run(cli: Cli) -> Result<i32, CliError> {
    match cli.command {
        Command::Report { file, probes } => {
            let (t, name) = load(&file)?;
            let report = commands::build_report(&t, name, &probes.options())?;
            if probes.json {
                println!("{}", report.to_json());
            } else {
                print!("{}", render_human(&report));
            }
            Ok(EXIT_PASS)
        }
        Command::Verify { file, strict, probes } => {
            let (t, name) = load(&file)?;
            let report = commands::verify(&t, name, strict, &probes.options())?;
            if probes.json {
                println!("{}", report.to_json());
            } else {
                print!("{}", render_human(&report));
            }
            match report.first_failure() {
                None => Ok(EXIT_PASS),
                Some(c) => {
                    eprintln!("verification failed: {}", c.name);
                    Ok(EXIT_FAIL)
                }
            }
        }
        Command::Generate { template, dim, dim_y, seed, entry_bound, out } => {
            let doc = commands::generate_document(&GenerateOptions {
                template,
                dim,
                dim_y,
                seed,
                entry_bound,
            })?;
            match out {
                Some(path) => commands::write_document(&path, &doc)?,
                None => print!("{}", doc.to_json()),
            }
            Ok(EXIT_PASS)
        }
        Command::Drazin { file, json } => {
            let (t, _) = load(&file)?;
            let d = commands::drazin(&t)?;
            if json {
                println!("{}", serde_json::to_string_pretty(&d).expect("serializable"));
            } else {
                print!("{}", render_drazin(&d));
            }
            Ok(if d.verified && d.matches_oracle && d.proof.holds { EXIT_PASS } else { EXIT_FAIL })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    };
    ExitCode::from(code as u8)
}
