use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use tps::commands::{self, Outcome};
use tps::CliResult;
use tps_core::classify::Flag;

/// Finite topological preordered spaces: classification, separators,
/// isotone functions, quotients and fixture search.
#[derive(Parser)]
#[command(name = "tps", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the six separation flags with a witness for each false one.
    Check {
        space: PathBuf,
        #[arg(long, conflicts_with = "text")]
        json: bool,
        /// Plain text (the default).
        #[arg(long)]
        text: bool,
    },
    /// Open decreasing U ⊇ A and open increasing V ⊇ B, disjoint.
    Separate {
        space: PathBuf,
        #[arg(long = "A", default_value = "")]
        a: String,
        #[arg(long = "B", default_value = "")]
        b: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Continuous isotone f with f = 0 on A and f = 1 on B.
    Urysohn {
        space: PathBuf,
        #[arg(long = "A", default_value = "")]
        a: String,
        #[arg(long = "B", default_value = "")]
        b: String,
        /// Dyadic depth (defaults to the number of points).
        #[arg(long)]
        depth: Option<u32>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Continuous isotone extension of a function file, optionally 0 on A
    /// and 1 on B.
    Extend {
        space: PathBuf,
        #[arg(long = "f")]
        function: PathBuf,
        /// Domain of f; must match the function file's keys.
        #[arg(long = "S")]
        s: Option<String>,
        #[arg(long = "A")]
        a: Option<String>,
        #[arg(long = "B")]
        b: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Continuous isotone f with f⁻¹(0) = A and f⁻¹(1) = B exactly.
    Perfect {
        space: PathBuf,
        #[arg(long = "A", default_value = "")]
        a: String,
        #[arg(long = "B", default_value = "")]
        b: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Continuous utilities representing the order of a regular space.
    Utilities {
        space: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Indifference quotient with projection and flag comparison.
    Quotient {
        space: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Piecewise separation over a directory of nested pieces.
    Stream {
        dir: PathBuf,
        /// Per-piece closed decreasing sets: "a;a,b;…".
        #[arg(long = "A-per-piece")]
        a: Option<String>,
        /// Per-piece closed increasing sets: "c;c,d;…".
        #[arg(long = "B-per-piece")]
        b: Option<String>,
        /// Use only the first J pieces.
        #[arg(long)]
        steps: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Smallest space (up to n points) with the required flags and without
    /// the forbidden ones; exits 1 with NOT_FOUND if there is none.
    Find {
        n: usize,
        #[arg(long, value_delimiter = ',', value_parser = parse_flag)]
        require: Vec<Flag>,
        #[arg(long, value_delimiter = ',', value_parser = parse_flag)]
        forbid: Vec<Flag>,
        /// Randomized search with this seed instead of exhaustive search.
        #[arg(long)]
        seed: Option<u64>,
        /// Samples drawn in randomized mode.
        #[arg(long, default_value_t = 20_000)]
        attempts: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Graphviz digraph: order edges solid, neighborhood edges dashed.
    Dot { space: PathBuf },
}

fn parse_flag(s: &str) -> Result<Flag, String> {
    let names: Vec<&str> = Flag::ALL.iter().map(|f| f.name()).collect();
    Flag::from_name(s.trim()).ok_or_else(|| format!("unknown flag {s:?}; expected one of {}", names.join(", ")))
}

fn run(cli: Cli) -> CliResult<Outcome> {
    match cli.command {
        Command::Check { space, json, .. } => commands::check(&space, json),
        Command::Separate { space, a, b, out } => commands::separate_cmd(&space, &a, &b, out.as_deref()),
        Command::Urysohn { space, a, b, depth, out } => commands::urysohn_cmd(&space, &a, &b, depth, out.as_deref()),
        Command::Extend { space, function, s, a, b, out } => {
            commands::extend_cmd(&space, &function, s.as_deref(), a.as_deref(), b.as_deref(), out.as_deref())
        }
        Command::Perfect { space, a, b, out } => commands::perfect_cmd(&space, &a, &b, out.as_deref()),
        Command::Utilities { space, out } => commands::utilities_cmd(&space, out.as_deref()),
        Command::Quotient { space, out } => commands::quotient_cmd(&space, out.as_deref()),
        Command::Stream { dir, a, b, steps, out } => {
            commands::stream_cmd(&dir, a.as_deref(), b.as_deref(), steps, out.as_deref())
        }
        Command::Find { n, require, forbid, seed, attempts, out } => {
            commands::find_cmd(n, &require, &forbid, seed, attempts, out.as_deref())
        }
        Command::Dot { space } => commands::dot_cmd(&space),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(outcome) => {
            print!("{}", outcome.stdout);
            eprint!("{}", outcome.stderr);
            let _ = std::io::stdout().flush();
            ExitCode::from(outcome.code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code)
        }
    }
}
