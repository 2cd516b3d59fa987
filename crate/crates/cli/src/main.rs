use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use frobsep_cli::{export_builtin, load_spec, resolve_options, run_command, verify_report, CliError, Command, Report};

#[derive(Parser)]
#[command(name = "frobsep", version, about = "Decide Frobenius and separability properties exactly over the rationals")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Structured,
}

#[derive(Args)]
struct RunOpts {
    /// Spec file (TOML).
    spec: PathBuf,
    /// Random trials before falling back to symbolic methods.
    #[arg(long)]
    trials: Option<usize>,
    /// Seed for the random search; overrides the spec file's `seed`.
    #[arg(long)]
    seed: Option<u64>,
    /// Largest pencil whose determinant is expanded symbolically.
    #[arg(long = "symbolic-cap")]
    symbolic_cap: Option<usize>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Write the report here instead of stdout.
    #[arg(long, short)]
    output: Option<PathBuf>,
    /// Record wall-clock time in the report (breaks byte-for-byte reproducibility).
    #[arg(long)]
    timing: bool,
}

#[derive(Subcommand)]
enum Cmd {
    /// Decide whether an algebra is Frobenius.
    CheckFrobenius(RunOpts),
    /// Decide whether an algebra is separable, and compare with the α criterion.
    CheckSeparable(RunOpts),
    /// Nakayama automorphism of the spec file's functional, or of a found one.
    Nakayama(RunOpts),
    /// Decide separability and the Frobenius property of an extension.
    CheckExtension(RunOpts),
    /// Validate a wreath and decide both properties of A → A#X.
    CheckWreath(RunOpts),
    /// Run independent decision routes against each other.
    Crosscheck(RunOpts),
    /// Re-verify every witness in a structured report against its spec.
    Verify {
        spec: PathBuf,
        report: PathBuf,
    },
    /// Print a spec file for a builtin algebra with its table written out.
    ExportBuiltin {
        /// e.g. field, cyclic:3, matrix:2, truncated:2, upper_triangular:2, diagonal:3
        name: String,
    },
}

fn run(cli: Cli) -> Result<(), CliError> {
    let (cmd, opts) = match cli.command {
        Cmd::CheckFrobenius(o) => (Command::CheckFrobenius, o),
        Cmd::CheckSeparable(o) => (Command::CheckSeparable, o),
        Cmd::Nakayama(o) => (Command::Nakayama, o),
        Cmd::CheckExtension(o) => (Command::CheckExtension, o),
        Cmd::CheckWreath(o) => (Command::CheckWreath, o),
        Cmd::Crosscheck(o) => (Command::Crosscheck, o),
        Cmd::Verify { spec, report } => return verify(&spec, &report),
        Cmd::ExportBuiltin { name } => {
            print!("{}", export_builtin(&name)?);
            return Ok(());
        }
    };
    let spec = load_spec(&opts.spec)?;
    let search = resolve_options(&spec, opts.trials, opts.seed, opts.symbolic_cap);
    let start = Instant::now();
    let mut report = run_command(cmd, &spec, &search)?;
    if opts.timing {
        report.elapsed_ms = Some(start.elapsed().as_millis() as u64);
    }
    let text = match opts.format {
        Format::Text => report.to_text(),
        Format::Structured => report.to_json(),
    };
    match &opts.output {
        Some(p) => std::fs::write(p, text).map_err(|e| CliError::Internal(format!("{}: {e}", p.display())))?,
        None => print!("{text}"),
    }
    Ok(())
}

fn verify(spec: &PathBuf, report: &PathBuf) -> Result<(), CliError> {
    let spec = load_spec(spec)?;
    let text = std::fs::read_to_string(report).map_err(|e| CliError::Parse(format!("{}: {e}", report.display())))?;
    let report = Report::from_json(&text).map_err(|e| CliError::Parse(format!("{}: {e}", report.display())))?;
    let results = verify_report(&spec, &report)?;
    let mut failed = 0;
    for r in &results {
        println!("[{}] {}", if r.ok { "ok" } else { "BAD" }, r.id);
        failed += usize::from(!r.ok);
    }
    println!("{} witnesses re-verified, {failed} failed", results.len());
    if failed > 0 {
        return Err(CliError::Validation(format!("{failed} witnesses do not re-verify")));
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("frobsep: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
