use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

mod commands;
mod output;

use commands::Failure;

#[derive(Parser, Debug)]
#[command(name = "critgroup", version, about = "Exact critical groups of modules over finite-dimensional algebras")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Args, Debug, Clone)]
pub struct Source {
    /// Bundled data: s4p2, s4p3, s4p0, s5p3, taft or radford
    #[arg(long, conflicts_with = "input")]
    pub builtin: Option<String>,

    /// JSON file holding a datum or a catalog entry
    #[arg(long)]
    pub input: Option<PathBuf>,

    /// Parameter n for taft and radford
    #[arg(long)]
    pub n: Option<usize>,

    /// Parameter m for taft and radford
    #[arg(long)]
    pub m: Option<usize>,
}

#[derive(Args, Debug, Clone)]
pub struct ModuleArg {
    /// Module name: a simple label, P<k>, P(<label>), trivial or regular
    #[arg(long, conflicts_with = "class")]
    pub module: Option<String>,

    /// Multiplicities of the simples, comma separated or as {"c": [...]}
    #[arg(long)]
    pub class: Option<String>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// M_V, L_V, Smith form and K(V), with cardinality cross-checks
    Compute {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        module: ModuleArg,
    },
    /// K(A) of the regular module: closed form against Smith form
    Regular {
        #[command(flatten)]
        source: Source,
    },
    /// Validate a datum and its Brauer table
    Verify {
        #[command(flatten)]
        source: Source,
    },
    /// The five equivalent finiteness conditions for K(V)
    #[command(name = "theorem4")]
    Finiteness {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        module: ModuleArg,
    },
    /// Chip-firing on the reduced Laplacian of V
    Chipfire {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        module: ModuleArg,
        /// Initial configuration, comma separated; defaults to the maximal
        /// stable configuration
        #[arg(long)]
        config: Option<String>,
    },
    /// List bundled data, or export one entry as JSON
    Catalog {
        /// Entry to export: a group-algebra key, taft:<n>,<m> or radford:<n>,<m>
        #[arg(long)]
        export: Option<String>,
    },
}

fn run(cli: Cli) -> Result<String, Failure> {
    let format = cli.format;
    match cli.command {
        Command::Compute { source, module } => commands::compute(&source, &module, format),
        Command::Regular { source } => commands::regular(&source, format),
        Command::Verify { source } => commands::verify(&source, format),
        Command::Finiteness { source, module } => commands::finiteness(&source, &module, format),
        Command::Chipfire {
            source,
            module,
            config,
        } => commands::chipfire(&source, &module, config.as_deref(), format),
        Command::Catalog { export } => commands::catalog(export.as_deref(), format),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(failure) => {
            if let Some(report) = &failure.report {
                print!("{report}");
            }
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}
