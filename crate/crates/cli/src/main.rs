//! Command-line front end: DIMACS in, solution text out.
//!
//! Exit codes: 0 a 3-coloring was produced (or `check` passed), 20 not
//! 3-colorable, 64 input outside the {P7, triangle}-free class, 1 a
//! submitted coloring failed `check`, 2 usage errors, 65 instance too large
//! or generation budget exhausted, 66 unreadable input.

mod dimacs;
mod solution;

use clap::{Parser, Subcommand};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use trifree_core::oracle::{self, Family, GeneratorSpec};
use trifree_core::palette::{validate, ColoringProblem};
use trifree_core::{solve_with, Graph, SolveOptions, SolveOutcome};

#[derive(Parser)]
#[command(name = "trifree", version, about = "Exact 3-coloring for triangle-free graphs without induced seven-vertex paths")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve a DIMACS graph: print a 3-coloring or a verdict.
    Solve {
        file: PathBuf,
        /// Skip the {P7, triangle}-freeness verification (benchmarking only;
        /// answers are undefined off-class).
        #[arg(long)]
        no_promise_check: bool,
        /// Worker threads for independent solver branches.
        #[arg(long, default_value_t = 1)]
        parallel: usize,
        /// Append a one-line machine-readable run record to this file.
        #[arg(long)]
        seed_log: Option<PathBuf>,
    },
    /// Brute-force ground truth (bounded instance size).
    Oracle { file: PathBuf },
    /// Remove dominated vertices and shrink homogeneous pairs; print the
    /// reduced graph with the journal as comments.
    Clean { file: PathBuf },
    /// Generate a certified in-class instance.
    Gen {
        #[arg(long)]
        family: String,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0.2)]
        density: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Validate a coloring file against a graph file.
    Check { graph: PathBuf, coloring: PathBuf },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Solve { file, no_promise_check, parallel, seed_log } => {
            cmd_solve(&file, no_promise_check, parallel, seed_log.as_deref())
        }
        Command::Oracle { file } => cmd_oracle(&file),
        Command::Clean { file } => cmd_clean(&file),
        Command::Gen { family, n, density, seed } => cmd_gen(&family, n, density, seed),
        Command::Check { graph, coloring } => cmd_check(&graph, &coloring),
    }
}

fn read_graph(path: &Path) -> Result<Graph, ExitCode> {
    let text = match std::fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("cannot read {}: {}", path.display(), e);
            return Err(ExitCode::from(66));
        }
    };
    dimacs::parse_dimacs(&text).map_err(|e| {
        eprintln!("cannot parse {}: {}", path.display(), e);
        ExitCode::from(66)
    })
}

fn cmd_solve(
    file: &Path,
    no_promise_check: bool,
    parallel: usize,
    seed_log: Option<&Path>,
) -> ExitCode {
    let g = match read_graph(file) {
        Ok(g) => g,
        Err(code) => return code,
    };
    let opts = SolveOptions { check_promise: !no_promise_check, parallelism: parallel.max(1) };
    let report = solve_with(&g, &opts);
    print!("{}", solution::write_outcome(&report.outcome));
    if let Some(log) = seed_log {
        let status = match &report.outcome {
            SolveOutcome::Colored(_) => "colored",
            SolveOutcome::NotColorable => "not-3-colorable",
            SolveOutcome::OutsideClass(_) => "outside-class",
        };
        let line = format!(
            "file={} n={} status={} fallback={}\n",
            file.display(),
            g.order(),
            status,
            report.fallback_used
        );
        if let Err(e) = append_to(log, &line) {
            eprintln!("cannot write {}: {}", log.display(), e);
            return ExitCode::from(66);
        }
    }
    exit_for(&report.outcome)
}

fn append_to(path: &Path, line: &str) -> std::io::Result<()> {
    use std::io::Write;
    let mut f = std::fs::OpenOptions::new().create(true).append(true).open(path)?;
    f.write_all(line.as_bytes())
}

fn exit_for(outcome: &SolveOutcome) -> ExitCode {
    match outcome {
        SolveOutcome::Colored(_) => ExitCode::SUCCESS,
        SolveOutcome::NotColorable => ExitCode::from(20),
        SolveOutcome::OutsideClass(_) => ExitCode::from(64),
    }
}

fn cmd_oracle(file: &Path) -> ExitCode {
    let g = match read_graph(file) {
        Ok(g) => g,
        Err(code) => return code,
    };
    match oracle::brute_force_3color(&g) {
        Ok(Some(c)) => {
            print!("{}", solution::write_outcome(&SolveOutcome::Colored(c)));
            ExitCode::SUCCESS
        }
        Ok(None) => {
            print!("{}", solution::write_outcome(&SolveOutcome::NotColorable));
            ExitCode::from(20)
        }
        Err(_) => {
            eprintln!(
                "instance exceeds the oracle bound of {} vertices",
                oracle::DEFAULT_VERTEX_BOUND
            );
            ExitCode::from(65)
        }
    }
}

fn cmd_clean(file: &Path) -> ExitCode {
    let g = match read_graph(file) {
        Ok(g) => g,
        Err(code) => return code,
    };
    let (cleaned, journal) = trifree_core::cleaning::clean(&g);
    for record in journal.records() {
        use trifree_core::cleaning::ReductionRecord;
        match record {
            ReductionRecord::DominatedBy { removed, dominator } => {
                println!("c journal dominated {} {}", removed + 1, dominator + 1);
            }
            ReductionRecord::HomogeneousPair { side_a, side_b, kept_a, kept_b } => {
                let fmt_side = |side: &[u32]| {
                    side.iter().map(|v| (v + 1).to_string()).collect::<Vec<_>>().join(" ")
                };
                println!(
                    "c journal pair a {} b {} keep {} {}",
                    fmt_side(side_a),
                    fmt_side(side_b),
                    kept_a + 1,
                    kept_b + 1
                );
            }
            ReductionRecord::NbrsDrop { removed, .. } => {
                println!("c journal drop {}", removed + 1);
            }
            ReductionRecord::EdgeDrop { narrow, wide, .. } => {
                println!("c journal edge-drop {} {}", narrow + 1, wide + 1);
            }
        }
    }
    let edges = cleaned.edges();
    println!("c surviving vertices: {}", cleaned.order());
    print!("p edge {} {}\n", cleaned.universe(), edges.len());
    for (u, v) in edges {
        println!("e {} {}", u + 1, v + 1);
    }
    ExitCode::SUCCESS
}

fn cmd_gen(family: &str, n: usize, density: f64, seed: u64) -> ExitCode {
    let family = match family {
        "random-rejection" => Family::RandomRejection,
        "cycle-decorated" => Family::CycleDecorated,
        "bipartite" => Family::Bipartite,
        "shell-decorated" => Family::ShellDecorated,
        "fivegon-decorated" => Family::FivegonDecorated,
        other => {
            eprintln!(
                "unknown family `{other}`; expected one of random-rejection, \
                 cycle-decorated, bipartite, shell-decorated, fivegon-decorated"
            );
            return ExitCode::from(2);
        }
    };
    let spec = GeneratorSpec { family, n, density, seed };
    match oracle::generate(&spec) {
        Ok(g) => {
            print!("{}", dimacs::write_dimacs(&g));
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("{e}");
            ExitCode::from(65)
        }
    }
}

fn cmd_check(graph_path: &Path, coloring_path: &Path) -> ExitCode {
    let g = match read_graph(graph_path) {
        Ok(g) => g,
        Err(code) => return code,
    };
    let text = match std::fs::read_to_string(coloring_path) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("cannot read {}: {}", coloring_path.display(), e);
            return ExitCode::from(66);
        }
    };
    let parsed = match solution::parse_solution(&text) {
        Ok(p) => p,
        Err(e) => {
            eprintln!("cannot parse {}: {}", coloring_path.display(), e);
            return ExitCode::from(66);
        }
    };
    let solution::ParsedSolution::Colored(c) = parsed else {
        println!("violation: no coloring to check");
        return ExitCode::from(1);
    };
    for &v in g.vertices() {
        if c.try_get(v).is_none() {
            println!("violation: vertex {} uncolored", v + 1);
            return ExitCode::from(1);
        }
    }
    for (u, v) in g.edges() {
        if c.get(u) == c.get(v) {
            println!("violation: edge {} {} shares color {}", u + 1, v + 1, c.get(u));
            return ExitCode::from(1);
        }
    }
    debug_assert!(validate(&ColoringProblem::plain(g.clone()), &c));
    println!("ok");
    ExitCode::SUCCESS
}
