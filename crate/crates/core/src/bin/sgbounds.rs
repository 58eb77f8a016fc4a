use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use signed_laplacian::harness::{self, GeneratorConfig, ReportFormat, ReportOptions};
use signed_laplacian::{balance, parse_signed_graph, spectra, SignedGraph};

/// Laplacian spectral radius bounds for signed graphs.
#[derive(Parser)]
#[command(name = "sgbounds", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Md,
    Csv,
}

impl From<Format> for ReportFormat {
    fn from(f: Format) -> Self {
        match f {
            Format::Md => ReportFormat::Markdown,
            Format::Csv => ReportFormat::Csv,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate every bound on one graph
    Bounds {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum, default_value = "md")]
        format: Format,
        #[arg(long)]
        full_precision: bool,
    },
    /// Print the Laplacian eigenvalues in ascending order
    Spectrum {
        #[arg(long)]
        input: PathBuf,
    },
    /// Comparison table over several graphs
    Report {
        #[arg(long, num_args = 1.., required = true)]
        inputs: Vec<PathBuf>,
        #[arg(long, value_enum, default_value = "md")]
        format: Format,
        #[arg(long)]
        full_precision: bool,
    },
    /// Check bounds and identities on seeded random graphs
    Verify {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        edge_prob: f64,
        #[arg(long)]
        neg_prob: f64,
        #[arg(long)]
        trials: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        require_connected: bool,
    },
    /// Decide switching equivalence of two graphs
    SwitchCheck {
        #[arg(long)]
        a: PathBuf,
        #[arg(long)]
        b: PathBuf,
    },
}

fn read_graph(path: &Path) -> Result<SignedGraph, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    parse_signed_graph(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    let tol = harness::tolerance_from_env().map_err(|e| e.to_string())?;
    match cli.command {
        Command::Bounds { input, format, full_precision } => {
            let g = read_graph(&input)?;
            let options = ReportOptions { format: format.into(), full_precision };
            let (table, evaluation) = harness::bounds_table(&g, options).map_err(|e| e.to_string())?;
            print!("{table}");
            let violations = evaluation.violations(tol);
            for v in &violations {
                eprintln!("violation: {} = {} vs λmax {} (off by {:e})", v.id, v.value, v.lambda_max, v.magnitude);
            }
            Ok(if violations.is_empty() { ExitCode::SUCCESS } else { ExitCode::FAILURE })
        }
        Command::Spectrum { input } => {
            let g = read_graph(&input)?;
            let spectrum = spectra::laplacian_spectrum(&g).map_err(|e| e.to_string())?;
            for &v in spectrum.values() {
                let v = if v.abs() < tol { 0.0 } else { v };
                println!("{}", harness::format_significant(v, 6));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Report { inputs, format, full_precision } => {
            let mut graphs = Vec::new();
            for path in &inputs {
                let name =
                    path.file_stem().map_or_else(|| path.display().to_string(), |s| s.to_string_lossy().into_owned());
                graphs.push((name, read_graph(path)?));
            }
            let options = ReportOptions { format: format.into(), full_precision };
            print!("{}", harness::report(&graphs, options).map_err(|e| e.to_string())?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { n, edge_prob, neg_prob, trials, seed, require_connected } => {
            let cfg = GeneratorConfig { n, edge_prob, neg_prob, seed, require_connected };
            let report = harness::verify(&cfg, trials, tol).map_err(|e| e.to_string())?;
            print!("{}", report.summary());
            Ok(if report.is_success() { ExitCode::SUCCESS } else { ExitCode::FAILURE })
        }
        Command::SwitchCheck { a, b } => {
            let (ga, gb) = (read_graph(&a)?, read_graph(&b)?);
            match balance::switching_equivalent(&ga, &gb) {
                Some(theta) => {
                    println!("equivalent");
                    println!("theta: {theta}");
                }
                None => println!("not equivalent"),
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
