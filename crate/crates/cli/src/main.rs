//! `hasse-paths`: edge tables, cross-route verification, series dumps,
//! Young-lattice queries and Hasse-index reports.
//!
//! Exit codes: 0 success, 1 verification mismatch or internal failure,
//! 2 usage error, 3 resource cap exceeded.

mod commands;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use hasse_paths::ClassKind;

use commands::Failure;

#[derive(Parser, Debug)]
#[command(
    name = "hasse-paths",
    version,
    about = "Edges of Hasse diagrams of lattices of paths and Young lattices"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, ValueEnum)]
pub enum RouteName {
    Enum,
    Series,
    Formula,
    Order,
}

fn parse_class(s: &str) -> Result<ClassKind, String> {
    s.parse::<ClassKind>().map_err(|e| e.to_string())
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Edge counts of all eight path families for n = 0..=max-n.
    Table {
        #[arg(long, default_value_t = 10)]
        max_n: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Compare edge counts across independent routes.
    Verify {
        /// A class code (DD, GD, MM, GM, SS, GS, FF, GF) or "all".
        target: String,
        #[arg(long, default_value_t = 6)]
        max_n: usize,
        #[arg(long, value_enum, value_delimiter = ',', default_values_t = [RouteName::Enum, RouteName::Series, RouteName::Formula])]
        routes: Vec<RouteName>,
        /// Ignore the per-class size caps.
        #[arg(long)]
        force: bool,
        /// Add one to the enumeration result at CLASS:N.
        #[arg(long, hide = true, value_name = "CLASS:N")]
        inject_fault: Option<String>,
    },
    /// Dump exact series coefficients up to x^N.
    Series {
        /// edge, edge-via-delta, delta, vertex, or base:B|C|T|M|d|r.
        name: String,
        #[arg(long, value_parser = parse_class)]
        class: Option<ClassKind>,
        #[arg(short = 'N', default_value_t = 10)]
        order: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Edges of the Young lattice of a partition.
    Young {
        /// Comma-separated, non-increasing parts.
        #[arg(long, allow_hyphen_values = true)]
        partition: String,
        /// Print a JSON report with ideal size and corner cells.
        #[arg(long)]
        full: bool,
        /// Count edges by listing the whole lattice.
        #[arg(long)]
        brute: bool,
        #[arg(long)]
        force: bool,
    },
    /// Exact Hasse index ℓ/|P| and its classification.
    Index {
        #[arg(long, value_parser = parse_class)]
        class: ClassKind,
        #[arg(short = 'n')]
        n: usize,
        /// Also print the limiting slope and asymptotic estimate.
        #[arg(long)]
        asymptotic: bool,
    },
    /// Distribution of |Δγ| and |∇γ| over P_n as q-polynomials.
    Distribution {
        #[arg(long, value_parser = parse_class)]
        class: ClassKind,
        #[arg(short = 'n')]
        n: usize,
        #[arg(long)]
        force: bool,
    },
}

fn run(cli: Cli) -> Result<String, Failure> {
    match cli.command {
        Command::Table { max_n, format } => commands::table(max_n, format),
        Command::Verify {
            target,
            max_n,
            routes,
            force,
            inject_fault,
        } => commands::verify(&target, max_n, &routes, force, inject_fault.as_deref()),
        Command::Series {
            name,
            class,
            order,
            format,
        } => commands::series(&name, class, order, format),
        Command::Young {
            partition,
            full,
            brute,
            force,
        } => commands::young(&partition, full, brute, force),
        Command::Index {
            class,
            n,
            asymptotic,
        } => commands::index(class, n, asymptotic),
        Command::Distribution { class, n, force } => commands::distribution(class, n, force),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(f) => {
            if let Some(out) = f.partial_output() {
                print!("{out}");
            }
            eprintln!("hasse-paths: {f}");
            ExitCode::from(f.exit_code())
        }
    }
}
