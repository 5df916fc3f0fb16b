use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Result};
use clap::{Parser, Subcommand};
use hurwitz_cli::commands::{self, ExportSource, Outcome};
use hurwitz_cli::config::{resolve_cap, Format, GraphArg, ItemKind, RunConfig, Workload};
use hurwitz_core::GraphKind;

/// Exit status for usage and input errors.
const EXIT_USAGE: u8 = 2;

#[derive(Parser)]
#[command(
    name = "hurwitz",
    version,
    about = "Factorizations of the long cycle, Hurwitz graphs and geometric trees"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List F_n (words) or the non-crossing spanning trees on n points.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = ItemKind::Words)]
        kind: ItemKind,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Read and refresh a plain-text enumeration cache here.
        #[arg(long)]
        cache_dir: Option<PathBuf>,
        /// Largest n allowed (default 8).
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Radius, diameter, center size and eccentricity histogram of a graph.
    Metrics {
        #[arg(long, value_enum)]
        graph: GraphArg,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Largest n allowed (default 7).
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Run an exhaustive check; exits 1 on a counterexample.
    Verify {
        /// Registered check name, or `all`.
        #[arg(long)]
        theorem: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Largest n allowed (default 7 for metric checks, 8 otherwise).
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Graph distance between two words (or trees for the tree graph).
    Distance {
        #[arg(long, value_enum, default_value_t = GraphArg::Hurwitz)]
        graph: GraphArg,
        /// Number of points; inferred from the inputs when omitted.
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
        /// Also print a shortest path as replayable move records.
        #[arg(long)]
        path: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Write a graph as DOT or eccentricity CSV, or a single tree as DOT.
    Export {
        #[arg(long, value_enum, conflicts_with = "tree", requires = "n")]
        graph: Option<GraphArg>,
        #[arg(long)]
        n: Option<usize>,
        /// Tree text such as "1-2,2-3".
        #[arg(long)]
        tree: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Dot)]
        format: Format,
        /// Destination file; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        cap: Option<usize>,
    },
}

fn run(cli: Cli, out: &mut dyn Write) -> Result<Outcome> {
    match cli.command {
        Command::Enumerate {
            n,
            kind,
            format,
            cache_dir,
            cap,
        } => {
            let cap = resolve_cap(cap, Workload::Enumeration);
            let cfg = RunConfig::new(n, GraphKind::Hurwitz, format, cache_dir, cap)?;
            commands::enumerate(&cfg, kind, out)
        }
        Command::Metrics { graph, n, format, cap } => {
            let cap = resolve_cap(cap, Workload::Metrics);
            let cfg = RunConfig::new(n, graph.into(), format, None, cap)?;
            commands::metrics(&cfg, out)
        }
        Command::Verify {
            theorem,
            n,
            format,
            cap,
        } => {
            let theorems = commands::parse_theorems(&theorem)?;
            let Some(n) = n else {
                bail!("verify needs --n");
            };
            let cap = resolve_cap(cap, commands::verify_workload(&theorems));
            let cfg = RunConfig::new(n, GraphKind::Hurwitz, format, None, cap)?;
            commands::verify(&theorems, cfg.n, cfg.cap, format, out)
        }
        Command::Distance {
            graph,
            n,
            from,
            to,
            path,
            format,
            cap,
        } => commands::distance(graph.into(), n, &from, &to, path, format, cap, out),
        Command::Export {
            graph,
            n,
            tree,
            format,
            out: dest,
            cap,
        } => {
            let source = match (graph, n, tree) {
                (_, _, Some(t)) => ExportSource::Tree(t),
                (Some(g), Some(n), None) => ExportSource::Graph(g.into(), n),
                _ => bail!("export needs --graph with --n, or --tree"),
            };
            commands::export(&source, format, cap, dest.as_deref(), out)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = run(cli, &mut out);
    let flushed = out.flush();
    match (result, flushed) {
        (Ok(outcome), Ok(())) => ExitCode::from(outcome.exit_code()),
        (Err(e), _) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_USAGE)
        }
        (_, Err(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}
