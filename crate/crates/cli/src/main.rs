use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use nccech_cli::error::EXIT_INPUT;
use nccech_cli::{run, CliError, Command, Overrides};

#[derive(Parser)]
#[command(
    name = "nccech",
    version,
    about = "Čech and Amitsur cohomology of coverings of finite-dimensional algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,

    /// Problem file (JSON); `-` reads standard input
    #[arg(long, global = true)]
    input: Option<PathBuf>,

    /// Write the report here instead of standard output
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Highest Amitsur degree built (and chain map degree checked)
    #[arg(long, global = true)]
    n_max: Option<usize>,

    /// Largest coordinate dimension allowed while building tensor powers
    #[arg(long, global = true)]
    dim_cap: Option<usize>,

    /// Replace the problem's field: Q, F<p> or Fp:<p>
    #[arg(long, global = true)]
    field_override: Option<String>,
}

#[derive(Subcommand, Clone, Copy)]
enum Cmd {
    /// Covering and completeness report
    Check,
    /// Čech cohomology of the problem's functor
    Cech,
    /// Amitsur complex dimensions and homology
    Amitsur,
    /// Run every consistency check and exit 1 on a violation
    Verify,
    /// Compare Čech cohomology of a cover functor with its nerve
    Oracle,
}

#[derive(ValueEnum, Clone, Copy)]
enum Format {
    Text,
    Json,
}

fn read_input(path: &Option<PathBuf>) -> Result<Vec<u8>, CliError> {
    let io = |p: &str, e: std::io::Error| CliError::Io {
        path: p.into(),
        message: e.to_string(),
    };
    match path {
        None => Err(CliError::Usage("missing --input <path>".into())),
        Some(p) if p.as_os_str() == "-" => {
            let mut buf = Vec::new();
            std::io::stdin()
                .read_to_end(&mut buf)
                .map_err(|e| io("-", e))?;
            Ok(buf)
        }
        Some(p) => std::fs::read(p).map_err(|e| io(&p.display().to_string(), e)),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let command = match cli.command {
        Cmd::Check => Command::Check,
        Cmd::Cech => Command::Cech,
        Cmd::Amitsur => Command::Amitsur,
        Cmd::Verify => Command::Verify,
        Cmd::Oracle => Command::Oracle,
    };
    let overrides = Overrides {
        field: cli.field_override.clone(),
        n_max: cli.n_max,
        dim_cap: cli.dim_cap,
    };
    let outcome = read_input(&cli.input).and_then(|bytes| run(command, &bytes, &overrides));
    let (report, code) = match outcome {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(e.exit_code());
        }
    };
    let rendered = match cli.format {
        Format::Text => report.to_text(),
        Format::Json => report.to_json(),
    };
    match &cli.output {
        Some(path) => {
            if let Err(e) = std::fs::write(path, rendered) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(EXIT_INPUT);
            }
        }
        None => print!("{rendered}"),
    }
    ExitCode::from(code)
}
