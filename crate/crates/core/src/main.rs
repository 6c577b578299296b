use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use esheaf::cli::{self, Outcome, PointSource, ScanArgs, Sheaf};

#[derive(Parser)]
#[command(name = "esheaf", version, about = "Kernel and image sheaves of modules over varieties of elementary subalgebras")]
struct Cli {
    /// Write the JSON report here instead of standard output.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the axioms of an algebra and optionally of a module.
    Validate {
        #[arg(long)]
        algebra: PathBuf,
        #[arg(long)]
        module: Option<PathBuf>,
    },
    /// Radical and socle dimensions over a locus, with constancy verdicts.
    Scan {
        #[arg(long)]
        algebra: PathBuf,
        #[arg(long)]
        module: PathBuf,
        /// Chart parametrization.
        #[arg(long, conflicts_with_all = ["line", "enumerate"])]
        locus: Option<PathBuf>,
        /// Parametrized projective line.
        #[arg(long, conflicts_with = "enumerate")]
        line: Option<PathBuf>,
        /// Enumerate all r-dimensional elementary subalgebras instead.
        #[arg(long, value_name = "R")]
        enumerate: Option<usize>,
        #[arg(long, value_delimiter = ',', default_value = "1")]
        j: Vec<usize>,
        /// Degree of the extension of F_p the points are taken over.
        #[arg(long, default_value_t = 1)]
        k: usize,
        #[arg(long, default_value_t = 200)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Splitting type of the kernel or image bundle on a line.
    Splitting {
        #[arg(long)]
        algebra: PathBuf,
        #[arg(long)]
        module: PathBuf,
        #[arg(long)]
        line: PathBuf,
        #[arg(long, default_value_t = 1)]
        j: usize,
        #[arg(long)]
        dmax: Option<usize>,
        #[arg(long, value_enum, default_value_t = Sheaf::Kernel)]
        sheaf: Sheaf,
    },
    /// Kernel and image ranks over the function field of a locus.
    GenericRank {
        #[arg(long)]
        algebra: PathBuf,
        #[arg(long)]
        module: PathBuf,
        #[arg(long, conflicts_with = "line")]
        locus: Option<PathBuf>,
        #[arg(long)]
        line: Option<PathBuf>,
        #[arg(long, default_value_t = 1)]
        j: usize,
    },
    /// Sheaf fibers against socle and radical at one point.
    Fiber {
        #[arg(long)]
        algebra: PathBuf,
        #[arg(long)]
        module: PathBuf,
        #[arg(long, conflicts_with = "line")]
        locus: Option<PathBuf>,
        #[arg(long)]
        line: Option<PathBuf>,
        #[arg(long, default_value_t = 1)]
        j: usize,
        /// Parameter values separated by commas (chart) or `s:t` (line);
        /// an element of F_(p^k) is written as coordinates joined by `/`.
        #[arg(long, allow_hyphen_values = true)]
        point: String,
        #[arg(long, default_value_t = 1)]
        k: usize,
    },
    /// Built-in examples.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
}

#[derive(Subcommand)]
enum CatalogAction {
    List,
    /// Write algebra.json, module.json and locus files for an entry.
    Emit {
        id: String,
        #[arg(long, default_value = ".")]
        out: PathBuf,
    },
}

fn run(cmd: Command) -> esheaf::Result<Outcome> {
    match cmd {
        Command::Validate { algebra, module } => cli::cmd_validate(&algebra, module.as_deref()),
        Command::Scan { algebra, module, locus, line, enumerate, j, k, samples, seed } => {
            let source = match (&locus, &line, enumerate) {
                (Some(l), None, None) => PointSource::Chart(l),
                (None, Some(l), None) => PointSource::Line(l),
                (None, None, Some(r)) => PointSource::Enumerate { r },
                _ => {
                    return Err(esheaf::Error::InvalidParameter(
                        "give one of --locus, --line and --enumerate".into(),
                    ))
                }
            };
            cli::cmd_scan(&ScanArgs { algebra: &algebra, module: &module, source, js: j, k, samples, seed })
        }
        Command::Splitting { algebra, module, line, j, dmax, sheaf } => {
            cli::cmd_splitting(&algebra, &module, &line, j, dmax, sheaf)
        }
        Command::GenericRank { algebra, module, locus, line, j } => {
            cli::cmd_generic_rank(&algebra, &module, locus.as_deref(), line.as_deref(), j)
        }
        Command::Fiber { algebra, module, locus, line, j, point, k } => {
            cli::cmd_fiber(&algebra, &module, locus.as_deref(), line.as_deref(), j, &point, k)
        }
        Command::Catalog { action: CatalogAction::List } => cli::cmd_catalog_list(),
        Command::Catalog { action: CatalogAction::Emit { id, out } } => cli::cmd_catalog_emit(&id, &out),
    }
}

fn main() -> ExitCode {
    let args = Cli::parse();
    let (value, status) = match run(args.command) {
        Ok(o) => (o.value, o.status),
        Err(e) => {
            eprintln!("error: {e}");
            (cli::error_value(&e), cli::EXIT_ERROR)
        }
    };
    let text = serde_json::to_string_pretty(&value).expect("serializable report") + "\n";
    let written = match &args.output {
        Some(path) => std::fs::write(path, &text),
        None => std::io::stdout().write_all(text.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("error: {e}");
        return ExitCode::from(cli::EXIT_ERROR as u8);
    }
    ExitCode::from(status as u8)
}
