use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use qhoch::{commands, AlgebraSource, CliError, CliResult, Format, RunConfig, SpaceSource, Window};
use serde_json::json;

#[derive(Parser)]
#[command(name = "qhoch", version, about = "Exact q-Hochschild homology of order Y")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Amplitude homology table of the N-complex.
    Homology(Common),
    /// Run the identity suite; exit 1 if any identity fails.
    Verify(Common),
    /// Induced maps of Lie derivatives on homology.
    Lie(Common),
    /// Windowed bivariant cohomology and induced maps.
    Bivariant {
        #[command(flatten)]
        common: Common,
        /// Lowest Hom degree of the window.
        #[arg(long, default_value_t = -2, allow_negative_numbers = true)]
        n_min: i64,
        /// Highest Hom degree of the window.
        #[arg(long, default_value_t = 2, allow_negative_numbers = true)]
        n_max: i64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Csv,
}

#[derive(Args)]
struct Common {
    /// Order of the root of unity q.
    #[arg(long = "N")]
    order: u32,
    /// q = ζ_N^a; must be coprime to N.
    #[arg(long = "q-exp", default_value_t = 1, allow_negative_numbers = true)]
    q_exp: i64,
    /// Truncation degree.
    #[arg(long = "T")]
    truncation: usize,
    /// builtin:field, builtin:dual, builtin:truncpoly:M or file:PATH.
    #[arg(long, default_value = "builtin:dual")]
    algebra: AlgebraSource,
    /// point, circle, sphere:P or file:PATH.
    #[arg(long, default_value = "circle")]
    space: SpaceSource,
    /// Derivation file.
    #[arg(long)]
    derivation: Option<PathBuf>,
    /// Hasse–Schmidt derivation file.
    #[arg(long)]
    higher: Option<PathBuf>,
    /// Order of the higher Lie derivative.
    #[arg(long)]
    k: Option<usize>,
    /// Write the result here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "json")]
    format: FormatArg,
    /// Lift the dimension guard on chain levels.
    #[arg(long)]
    force_dims: bool,
}

impl Common {
    fn config(&self) -> RunConfig {
        RunConfig {
            order: self.order,
            q_exponent: self.q_exp,
            truncation: self.truncation,
            algebra: self.algebra.clone(),
            space: self.space.clone(),
            derivation: self.derivation.clone(),
            higher: self.higher.clone(),
            k: self.k,
            force_dims: self.force_dims,
        }
    }

    fn format(&self) -> Format {
        match self.format {
            FormatArg::Json => Format::Json,
            FormatArg::Csv => Format::Csv,
        }
    }
}

fn run(cli: &Cli) -> CliResult<bool> {
    let (common, output) = match &cli.command {
        Command::Homology(c) => (c, commands::homology(&c.config())?),
        Command::Verify(c) => (c, commands::verify(&c.config())?),
        Command::Lie(c) => (c, commands::lie(&c.config())?),
        Command::Bivariant { common, n_min, n_max } => {
            (common, commands::bivariant(&common.config(), Window { n_min: *n_min, n_max: *n_max })?)
        }
    };
    let text = output.render(common.format())?;
    match &common.out {
        Some(path) => fs::write(path, text).map_err(|e| CliError::Io { path: path.clone(), message: e.to_string() })?,
        None => print!("{text}"),
    }
    Ok(output.failed)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(false) => ExitCode::SUCCESS,
        Ok(true) => ExitCode::from(1),
        Err(e) => {
            let body = json!({ "error": { "code": e.code(), "message": e.to_string() } });
            println!("{}", serde_json::to_string_pretty(&body).expect("serializable"));
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
