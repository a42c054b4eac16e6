mod bench;

use std::fs;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use arborescence::{
    attach_super_root, gen_antilemon, gen_er_rooted, parse_edge_list, parse_konect, sample_weights, solve_arborescence,
    Algorithm, Graph, SolveError, Weight,
};
use clap::{Args, Parser, Subcommand, ValueEnum};

const EXIT_FAILURE: u8 = 1;
const EXIT_INFEASIBLE: u8 = 2;
const EXIT_USAGE: u8 = 64;

#[derive(Parser)]
#[command(name = "arbo", version, about = "Minimum spanning arborescence solver and benchmark harness")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve one instance; prints the weight, then writes the chosen edge ids.
    Solve(SolveArgs),
    /// Time each solver phase on a set of instances and append CSV rows.
    Bench(bench::BenchArgs),
    /// Write a generated instance in edge-list format.
    Gen(GenArgs),
}

#[derive(Args)]
struct SolveArgs {
    #[arg(long, value_parser = parse_algorithm)]
    algo: Algorithm,
    #[arg(long = "in")]
    input: PathBuf,
    /// Override the root stored in the file.
    #[arg(long)]
    root: Option<usize>,
    /// Edge ids go here, one per line; stdout if omitted.
    #[arg(long)]
    out: Option<PathBuf>,
    #[command(flatten)]
    input_opts: InputOpts,
}

#[derive(Args, Clone, Debug)]
pub struct InputOpts {
    #[arg(long, value_enum, default_value_t = Format::EdgeList)]
    format: Format,
    /// Replace weights by uniform draws from 1..=max-w with this seed.
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long, default_value_t = 1000)]
    max_w: Weight,
    /// Keep the largest weak component and add a super-root reaching every
    /// vertex (implied for konect input). Reported edges exclude its edges.
    #[arg(long)]
    super_root: bool,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    EdgeList,
    Konect,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Family {
    Antilemon,
    ErRooted,
}

#[derive(Args)]
struct GenArgs {
    #[arg(value_enum)]
    family: Family,
    /// Chain length (antilemon).
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long, default_value_t = 1000)]
    max_w: Weight,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    out: PathBuf,
}

fn parse_algorithm(s: &str) -> Result<Algorithm, String> {
    s.parse().map_err(|e: arborescence::UnknownAlgorithm| e.to_string())
}

/// A graph ready for solving, plus the super-root mapping when one was added.
pub struct Loaded {
    pub graph: Graph,
    pub prepared: Option<arborescence::SuperRooted>,
}

impl Loaded {
    /// Original edge ids of a solution and their total weight.
    fn original(&self, edges: &[usize], weight: Weight) -> (Vec<usize>, Weight) {
        match &self.prepared {
            None => (edges.to_vec(), weight),
            Some(p) => {
                let sentinels = edges.iter().filter(|&&e| p.is_sentinel(e)).count() as Weight;
                (p.original_edges(edges), weight - sentinels * p.sentinel)
            }
        }
    }
}

pub fn load(path: &Path, opts: &InputOpts, root: Option<usize>) -> Result<Loaded, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let parsed = match opts.format {
        Format::EdgeList => parse_edge_list(&text),
        Format::Konect => parse_konect(&text),
    };
    let mut graph = parsed.map_err(|e| format!("{}: {e}", path.display()))?;
    if let Some(r) = root {
        graph = graph.with_root(r).map_err(|e| e.to_string())?;
    }
    if let Some(seed) = opts.seed {
        graph = sample_weights(&graph, seed, opts.max_w).map_err(|e| e.to_string())?;
    }
    if opts.super_root || opts.format == Format::Konect {
        let prepared = attach_super_root(&graph).map_err(|e| e.to_string())?;
        return Ok(Loaded { graph: prepared.graph.clone(), prepared: Some(prepared) });
    }
    Ok(Loaded { graph, prepared: None })
}

fn run_solve(args: SolveArgs) -> Result<(), (u8, String)> {
    let loaded = load(&args.input, &args.input_opts, args.root).map_err(|e| (EXIT_FAILURE, e))?;
    let tree = match solve_arborescence(&loaded.graph, args.algo) {
        Ok(t) => t,
        Err(e @ SolveError::Infeasible { .. }) => return Err((EXIT_INFEASIBLE, e.to_string())),
        Err(e) => return Err((EXIT_FAILURE, e.to_string())),
    };
    let (edges, weight) = loaded.original(&tree.edges, tree.total_weight);

    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let io_err = |e: io::Error| (EXIT_FAILURE, e.to_string());
    writeln!(out, "{weight}").map_err(io_err)?;
    match &args.out {
        Some(path) => {
            let file = fs::File::create(path).map_err(|e| (EXIT_FAILURE, format!("{}: {e}", path.display())))?;
            write_ids(BufWriter::new(file), &edges).map_err(io_err)?;
        }
        None => write_ids(&mut out, &edges).map_err(io_err)?,
    }
    out.flush().map_err(io_err)
}

fn write_ids(mut w: impl Write, ids: &[usize]) -> io::Result<()> {
    for id in ids {
        writeln!(w, "{id}")?;
    }
    w.flush()
}

fn run_gen(args: GenArgs) -> Result<(), (u8, String)> {
    let usage = |msg: &str| (EXIT_USAGE, msg.to_string());
    let graph = match args.family {
        Family::Antilemon => {
            let k = args.k.ok_or_else(|| usage("antilemon needs --k"))?;
            gen_antilemon(k)
        }
        Family::ErRooted => {
            let n = args.n.ok_or_else(|| usage("er-rooted needs --n"))?;
            let m = args.m.ok_or_else(|| usage("er-rooted needs --m"))?;
            gen_er_rooted(n, m, args.max_w, args.seed)
        }
    }
    .map_err(|e| (EXIT_USAGE, e.to_string()))?;

    let file = fs::File::create(&args.out).map_err(|e| (EXIT_FAILURE, format!("{}: {e}", args.out.display())))?;
    let mut w = BufWriter::new(file);
    write!(w, "{graph}").and_then(|_| w.flush()).map_err(|e| (EXIT_FAILURE, e.to_string()))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(EXIT_USAGE) } else { ExitCode::SUCCESS };
        }
    };
    let outcome = match cli.command {
        Command::Solve(args) => run_solve(args),
        Command::Bench(args) => bench::run(args),
        Command::Gen(args) => run_gen(args),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err((code, msg)) => {
            eprintln!("arbo: {msg}");
            ExitCode::from(code)
        }
    }
}
