use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use symsep_cli::classify::classify;
use symsep_cli::figures::{fig1, fig2, fig3};
use symsep_cli::grid::Figure;
use symsep_cli::radii::radii;
use symsep_cli::verify::{verify, Suite};
use symsep_cli::{CliError, CliResult, Scale};
use symsep_core::Exec;

#[derive(Parser)]
#[command(name = "symsep", version, about = "Maximal entanglement and absolute separability of symmetric two- and three-qubit states")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
    Text,
}

#[derive(Args)]
struct Common {
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Write the main output here instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Run sequentially even when built with the parallel feature.
    #[arg(long)]
    sequential: bool,
}

impl Common {
    fn exec(&self) -> Exec {
        if self.sequential {
            Exec::Sequential
        } else {
            Exec::Parallel
        }
    }
}

#[derive(Args)]
struct FigArgs {
    /// Lattice points per axis.
    #[arg(long)]
    resolution: Option<usize>,
    /// Boundary series destination; defaults to `<output stem>_boundary.csv`
    /// next to `--output`.
    #[arg(long)]
    boundary_output: Option<PathBuf>,
    #[command(flatten)]
    common: Common,
}

#[derive(Subcommand)]
enum Command {
    /// Classify a spectrum (values may be unsorted).
    Classify {
        #[arg(required = true, num_args = 1.., allow_negative_numbers = true)]
        spectrum: Vec<f64>,
        #[arg(long, default_value_t = 2)]
        qubits: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Maximal negativity over the two-qubit simplex (tau3, tau2).
    Fig1(FigArgs),
    /// Maximal negativity over the (tau3, r) wedge.
    Fig2(FigArgs),
    /// Region caught by the three-qubit Dicke-mixture test over (tau3, tau4).
    Fig3(FigArgs),
    /// Ball radii of the SAS set.
    Radii {
        #[arg(long, default_value_t = 2)]
        qubits: usize,
        /// Also run the Monte-Carlo estimate of R_SAS (three qubits).
        #[arg(long)]
        estimate: bool,
        #[arg(long, value_enum, default_value_t = Scale::Full)]
        scale: Scale,
        #[command(flatten)]
        common: Common,
    },
    /// Run a property suite; exit status 0 iff every check passes.
    Verify {
        /// theorem1, appendixA, obs1, concurrence, sas, radii or all.
        suite: String,
        #[arg(long, value_enum, default_value_t = Scale::Quick)]
        scale: Scale,
        #[command(flatten)]
        common: Common,
    },
}

fn emit(path: Option<&Path>, text: &str) -> CliResult<()> {
    match path {
        Some(p) => fs::write(p, text)?,
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())?;
            if !text.ends_with('\n') {
                out.write_all(b"\n")?;
            }
        }
    }
    Ok(())
}

fn sibling(path: &Path) -> PathBuf {
    let stem = path.file_stem().and_then(|s| s.to_str()).unwrap_or("grid");
    path.with_file_name(format!("{stem}_boundary.csv"))
}

fn write_figure(fig: &Figure, args: &FigArgs) -> CliResult<()> {
    let output = args.common.output.as_deref();
    match args.common.format.unwrap_or(Format::Csv) {
        Format::Json => emit(output, &serde_json::to_string_pretty(fig)?),
        Format::Csv => {
            emit(output, &fig.grid.to_csv()?)?;
            let boundary = args.boundary_output.clone().or_else(|| output.map(sibling));
            if let Some(b) = boundary {
                fs::write(b, fig.boundary.to_csv()?)?;
            }
            Ok(())
        }
        Format::Text => Err(CliError::Usage("figures are written as csv or json".into())),
    }
}

fn report<T: serde::Serialize + std::fmt::Display>(value: &T, common: &Common) -> CliResult<()> {
    let out = common.output.as_deref();
    match common.format.unwrap_or(Format::Text) {
        Format::Json => emit(out, &serde_json::to_string_pretty(value)?),
        Format::Text => emit(out, &value.to_string()),
        Format::Csv => Err(CliError::Usage("reports are written as text or json".into())),
    }
}

fn run(cli: Cli) -> CliResult<ExitCode> {
    match cli.command {
        Command::Classify { spectrum, qubits, common } => {
            report(&classify(&spectrum, qubits, common.seed)?, &common)?;
        }
        Command::Fig1(args) => {
            let fig = fig1(args.resolution.unwrap_or(400), args.common.seed, args.common.exec())?;
            write_figure(&fig, &args)?;
        }
        Command::Fig2(args) => {
            let fig = fig2(args.resolution.unwrap_or(400), args.common.seed, args.common.exec())?;
            write_figure(&fig, &args)?;
        }
        Command::Fig3(args) => {
            let fig = fig3(args.resolution.unwrap_or(600), args.common.seed, args.common.exec())?;
            write_figure(&fig, &args)?;
        }
        Command::Radii { qubits, estimate, scale, common } => {
            report(&radii(qubits, estimate, scale, common.seed, common.exec())?, &common)?;
        }
        Command::Verify { suite, scale, common } => {
            let suite: Suite = suite.parse()?;
            let r = verify(suite, common.seed, scale, common.exec());
            emit(common.output.as_deref(), &serde_json::to_string_pretty(&r)?)?;
            let failed = r.checks.iter().filter(|c| !c.passed).count();
            eprintln!(
                "{}: {} of {} checks passed",
                if r.passed { "PASS" } else { "FAIL" },
                r.checks.len() - failed,
                r.checks.len()
            );
            if !r.passed {
                return Ok(ExitCode::FAILURE);
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
