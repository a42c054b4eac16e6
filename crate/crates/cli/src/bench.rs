//! Phase-split timing runs.

use std::fs::OpenOptions;
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use arborescence::recon::reconstruct_from;
use arborescence::{build_solver, Algorithm, SolveError, SolverConfig};
use clap::Args;

use crate::{load, parse_algorithm, InputOpts, EXIT_FAILURE};

pub const HEADER: [&str; 10] =
    ["instance", "algorithm", "n", "m", "weight", "init_ms", "exec_ms", "recon_ms", "teardown_ms", "status"];

#[derive(Args)]
pub struct BenchArgs {
    #[arg(long, value_delimiter = ',', required = true, value_parser = parse_algorithm)]
    algos: Vec<Algorithm>,
    #[arg(long = "in", num_args = 1.., required = true)]
    inputs: Vec<PathBuf>,
    #[arg(long, default_value_t = 1)]
    reps: usize,
    /// Per-run limit in seconds.
    #[arg(long, default_value_t = 1800.0)]
    timeout: f64,
    /// Rows are appended; the header is written only to a new or empty file.
    #[arg(long)]
    csv: PathBuf,
    #[command(flatten)]
    input_opts: InputOpts,
}

#[derive(Debug, Default)]
struct Row {
    n: usize,
    m: usize,
    weight: Option<i64>,
    phases: [u128; 4],
    status: &'static str,
}

fn one_run(path: &Path, opts: &InputOpts, algo: Algorithm, timeout: Duration) -> Row {
    let start = Instant::now();
    let deadline = start.checked_add(timeout);
    let timed_out = |row: Row| Row { phases: [0; 4], weight: None, status: "timeout", ..row };

    let loaded = match load(path, opts, None) {
        Ok(l) => l,
        Err(_) => return Row { status: "error", ..Row::default() },
    };
    let graph = &loaded.graph;
    let base = Row { n: graph.n(), m: graph.m(), ..Row::default() };
    let mut solver = match build_solver(algo, graph, SolverConfig { deadline, check_invariants: false }) {
        Ok(s) => s,
        // An instance the solver refuses for size counts like one it could
        // not finish.
        Err(SolveError::TooLarge { .. }) => return timed_out(base),
        Err(_) => return Row { status: "error", ..base },
    };
    let t_init = start.elapsed();
    if t_init >= timeout {
        return timed_out(base);
    }

    let t = Instant::now();
    let result = match solver.run() {
        Ok(r) => r,
        Err(SolveError::Timeout) => return timed_out(base),
        Err(SolveError::Infeasible { .. }) => return Row { status: "infeasible", ..base },
        Err(_) => return Row { status: "error", ..base },
    };
    let t_exec = t.elapsed();

    let t = Instant::now();
    let edges = reconstruct_from(&result, graph);
    let t_recon = t.elapsed();
    let Ok(edges) = edges else { return Row { status: "error", ..base } };
    let (_, weight) = loaded.original(&edges, result.total_weight);

    let t = Instant::now();
    drop(solver);
    drop(result);
    let t_teardown = t.elapsed();
    if start.elapsed() >= timeout {
        return timed_out(base);
    }

    Row {
        weight: Some(weight),
        phases: [t_init, t_exec, t_recon, t_teardown].map(|d| d.as_millis()),
        status: "ok",
        ..base
    }
}

pub fn run(args: BenchArgs) -> Result<(), (u8, String)> {
    if !(args.timeout >= 0.0 && args.timeout.is_finite()) {
        return Err((crate::EXIT_USAGE, format!("invalid timeout {}", args.timeout)));
    }
    let timeout = Duration::from_secs_f64(args.timeout);
    let fail = |e: &dyn std::fmt::Display| (EXIT_FAILURE, format!("{}: {e}", args.csv.display()));

    let file = OpenOptions::new().create(true).append(true).open(&args.csv).map_err(|e| fail(&e))?;
    let fresh = file.metadata().map_err(|e| fail(&e))?.len() == 0;
    let mut w = csv::Writer::from_writer(file);
    if fresh {
        w.write_record(HEADER).map_err(|e| fail(&e))?;
    }

    for path in &args.inputs {
        let name = path.display().to_string();
        for &algo in &args.algos {
            for _ in 0..args.reps {
                let row = one_run(path, &args.input_opts, algo, timeout);
                let [init, exec, recon, teardown] = row.phases.map(|p| p.to_string());
                w.write_record([
                    name.as_str(),
                    algo.name(),
                    &row.n.to_string(),
                    &row.m.to_string(),
                    &row.weight.map(|x| x.to_string()).unwrap_or_default(),
                    &init,
                    &exec,
                    &recon,
                    &teardown,
                    row.status,
                ])
                .map_err(|e| fail(&e))?;
                // Keep rows durable between runs so an interrupted bench
                // leaves a valid file.
                w.flush().map_err(|e| fail(&e))?;
            }
        }
    }
    Ok(())
}
