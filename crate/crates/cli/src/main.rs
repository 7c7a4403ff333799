//! Binary entry point: maps parsed arguments onto the command functions and
//! their results onto the process contract — the document on stdout, an
//! optional copy to --output, diagnostics on stderr, and exit status
//! 0 (pass) / 1 (verification failed) / 2 (usage or domain error) /
//! 3 (search cap exhausted).

use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};

use prismdim_cli::commands::{cmd_build, cmd_construct, cmd_search, cmd_table, cmd_verify};
use prismdim_cli::family::FamilySpec;
use prismdim_cli::output::CommandOutput;
use prismdim_core::{Error, Result};

#[derive(Parser)]
#[command(
    name = "prismdim",
    version,
    about = "Exact resolvability computations on cycles, paths, cylinders, and prisms",
    long_about = "Builds labeled graphs from four families (cycle, path, cylinder = cycle x path, \
                  prism = cylinder x path), verifies resolving / doubly resolving / strong \
                  resolving sets, computes the minimum sizes of such sets by exhaustive search, \
                  prints distance-representation tables, and generates the named witness-set \
                  constructions with their claimed properties."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

/// Flags shared by every subcommand that names a target graph.
#[derive(Args)]
struct GraphArgs {
    /// Graph family: cycle, path, cylinder, or prism
    #[arg(long)]
    family: String,
    /// Cycle length (cycle, cylinder, prism)
    #[arg(long)]
    n: Option<usize>,
    /// Path length (path, cylinder, prism)
    #[arg(long)]
    k: Option<usize>,
    /// Number of cylinder copies (prism only)
    #[arg(long)]
    m: Option<usize>,
}

#[derive(Args)]
struct OutputArgs {
    /// Output format (commands accept a subset of json, text, dot, edges)
    #[arg(long, default_value = "json")]
    format: String,
    /// Also write the document to this file (stdout is unaffected)
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Construct a graph and emit it as json, edges, or dot
    Build {
        #[command(flatten)]
        graph: GraphArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Check whether a vertex set has a property; exits 1 when it does not
    Verify {
        #[command(flatten)]
        graph: GraphArgs,
        /// Comma-separated vertex labels, e.g. x1,x3 or x1^1,x16^4
        #[arg(long)]
        set: String,
        /// Property to check: resolving, doubly, or strong
        #[arg(long)]
        property: String,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Find a minimum set by exhaustive search over ascending sizes
    Search {
        #[command(flatten)]
        graph: GraphArgs,
        /// Parameter to minimize: beta, psi, or sdim
        #[arg(long)]
        parameter: String,
        /// Largest set size to try before giving up (exit 3); defaults per family
        #[arg(long)]
        cap: Option<usize>,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Print the distance representation of every vertex against a set
    Table {
        #[command(flatten)]
        graph: GraphArgs,
        /// Comma-separated vertex labels defining the columns
        #[arg(long)]
        set: String,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Generate a named witness family (M, N, A, B, A1, B1, C, D, E1-E4, E3_1, T)
    Construct {
        /// Catalog id, e.g. M, A1, E3_1, T
        #[arg(long = "family-id")]
        family_id: String,
        /// Index i of the family member, for the indexed families
        #[arg(long)]
        index: Option<usize>,
        /// Cycle length of the target graph
        #[arg(long)]
        n: Option<usize>,
        /// Path length of the target graph
        #[arg(long)]
        k: Option<usize>,
        /// Number of cylinder copies of the target prism
        #[arg(long)]
        m: Option<usize>,
        #[command(flatten)]
        out: OutputArgs,
    },
}

fn graph_spec(args: &GraphArgs) -> Result<FamilySpec> {
    FamilySpec::assemble(args.family.parse()?, args.n, args.k, args.m)
}

fn run(command: Command) -> Result<(CommandOutput, Option<PathBuf>)> {
    match command {
        Command::Build { graph, out } => {
            let spec = graph_spec(&graph)?;
            Ok((cmd_build(&spec, out.format.parse()?)?, out.output))
        }
        Command::Verify {
            graph,
            set,
            property,
            out,
        } => {
            let spec = graph_spec(&graph)?;
            Ok((
                cmd_verify(&spec, &set, property.parse()?, out.format.parse()?)?,
                out.output,
            ))
        }
        Command::Search {
            graph,
            parameter,
            cap,
            out,
        } => {
            let spec = graph_spec(&graph)?;
            let started = Instant::now();
            let result = cmd_search(&spec, parameter.parse()?, cap, out.format.parse()?)?;
            eprintln!("search elapsed {:.3}s", started.elapsed().as_secs_f64());
            Ok((result, out.output))
        }
        Command::Table { graph, set, out } => {
            let spec = graph_spec(&graph)?;
            Ok((cmd_table(&spec, &set, out.format.parse()?)?, out.output))
        }
        Command::Construct {
            family_id,
            index,
            n,
            k,
            m,
            out,
        } => Ok((
            cmd_construct(&family_id, index, n, k, m, out.format.parse()?)?,
            out.output,
        )),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok((result, output_path)) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(result.stdout.as_bytes()).is_err() {
                return ExitCode::from(2);
            }
            drop(stdout);
            if let Some(path) = output_path {
                if let Err(e) = std::fs::write(&path, result.stdout.as_bytes()) {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    return ExitCode::from(2);
                }
            }
            match result.holds {
                Some(false) => ExitCode::from(1),
                _ => ExitCode::SUCCESS,
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::CapExhausted { .. } => ExitCode::from(3),
                _ => ExitCode::from(2),
            }
        }
    }
}
