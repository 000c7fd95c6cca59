//! Command-line front door: instance generation, approximate and exact
//! solving, the grid-to-UDG reduction, ratio experiments, and the reduction
//! equivalence sweep.
//!
//! Exit codes: 0 success, 2 invalid instance or input, 3 size limit
//! exceeded, 4 bound or verifier violation, 1 anything else.

mod experiment;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::Result;
use clap::{Parser, Subcommand, ValueEnum};

use udg_dom::approx::{total_dominating_set, total_roman_function};
use udg_dom::exact::{
    exact_min_ds, exact_min_rdf, exact_min_tds, exact_min_trdf, DEFAULT_LABEL_SEARCH_LIMIT,
    DEFAULT_SET_SEARCH_LIMIT,
};
use udg_dom::generator::{self, DEFAULT_RETRY_CAP};
use udg_dom::geometry::UnitDiskGraph;
use udg_dom::io::{self, SolutionFile};
use udg_dom::reduction::{equivalence_profile, grid_to_gadget, lattice_animals, GridGraph};
use udg_dom::Error;

use experiment::{parallel_map, worker_count, RatioSettings};

#[derive(Parser)]
#[command(
    name = "udg-dom",
    about = "Total domination and total Roman domination on unit disk graphs",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum ApproxProblem {
    Tds,
    Trds,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum ExactProblem {
    Ds,
    Tds,
    Rds,
    Trds,
}

#[derive(Subcommand)]
enum Command {
    /// Sample a random instance without isolated vertices and write it.
    Generate {
        /// Points per instance.
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 4.0)]
        width: f64,
        #[arg(long, default_value_t = 4.0)]
        height: f64,
        #[arg(long, default_value_t = 1.0)]
        radius: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Target problem; both require instances without isolated vertices.
        #[arg(long, value_enum, default_value_t = ApproxProblem::Tds)]
        problem: ApproxProblem,
        #[arg(long)]
        out: PathBuf,
    },
    /// Run an approximation algorithm; prints the objective on stdout.
    Solve {
        #[arg(long, value_enum)]
        problem: ApproxProblem,
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Run an exact oracle; prints the optimal objective on stdout.
    Exact {
        #[arg(long, value_enum)]
        problem: ExactProblem,
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
        /// Vertex limit for the exponential search (defaults: ds/tds 20,
        /// rds/trds 14).
        #[arg(long)]
        exact_limit: Option<usize>,
    },
    /// Build the gadget UDG from a grid graph; writes the instance and a
    /// roles sidecar next to it.
    Reduce {
        #[arg(long)]
        grid: PathBuf,
        /// Emit doubled coordinates with radius 1 instead of radius 0.5.
        #[arg(long)]
        scale2: bool,
        #[arg(long)]
        out: PathBuf,
    },
    /// Measure empirical approximation ratios over seeded trials and write
    /// a CSV report.
    Ratio {
        #[arg(long, value_enum)]
        problem: ApproxProblem,
        #[arg(long)]
        trials: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 4.0)]
        width: f64,
        #[arg(long, default_value_t = 4.0)]
        height: f64,
        #[arg(long, default_value_t = 1.0)]
        radius: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Exact oracle cutoff; trials with n above it report NA ratios
        /// (defaults: tds 18, trds 14).
        #[arg(long)]
        exact_limit: Option<usize>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Check the reduction equivalence on every connected grid graph with
    /// up to --max-n vertices, for every k.
    VerifyClaim {
        #[arg(long)]
        max_n: usize,
    },
}

/// Violation of a bound or verifier found while a command ran to
/// completion; mapped to exit code 4.
#[derive(Debug)]
pub struct Violation(pub String);

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl std::error::Error for Violation {}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(exit_code_for(&err))
        }
    }
}

fn exit_code_for(err: &anyhow::Error) -> u8 {
    if err.downcast_ref::<Violation>().is_some() {
        return 4;
    }
    match err.downcast_ref::<Error>() {
        Some(Error::SizeLimit { .. }) => 3,
        Some(Error::Io(_)) | Some(Error::RetryExhausted { .. }) | None => 1,
        Some(_) => 2,
    }
}

fn run(command: Command) -> Result<()> {
    match command {
        Command::Generate {
            n,
            width,
            height,
            radius,
            seed,
            problem: _,
            out,
        } => {
            check_box(width, height)?;
            let mut rng = generator::seeded_rng(seed);
            let g = generator::sample_without_isolated(
                &mut rng,
                n,
                width,
                height,
                radius,
                DEFAULT_RETRY_CAP,
            )?;
            io::write_instance(&out, g.pointset())?;
            Ok(())
        }
        Command::Solve {
            problem,
            input,
            out,
        } => cmd_solve(problem, &input, &out),
        Command::Exact {
            problem,
            input,
            out,
            exact_limit,
        } => cmd_exact(problem, &input, &out, exact_limit),
        Command::Reduce { grid, scale2, out } => cmd_reduce(&grid, scale2, &out),
        Command::Ratio {
            problem,
            trials,
            n,
            width,
            height,
            radius,
            seed,
            exact_limit,
            out,
        } => {
            check_box(width, height)?;
            experiment::run_ratio(RatioSettings {
                problem,
                trials,
                n,
                width,
                height,
                radius,
                seed,
                exact_limit,
                out,
            })
        }
        Command::VerifyClaim { max_n } => cmd_verify_claim(max_n),
    }
}

fn check_box(width: f64, height: f64) -> Result<()> {
    if width.is_finite() && width > 0.0 && height.is_finite() && height > 0.0 {
        Ok(())
    } else {
        Err(Error::Parse(format!(
            "box {width}x{height} must have positive finite sides"
        ))
        .into())
    }
}

fn load_graph(input: &Path) -> Result<UnitDiskGraph> {
    let ps = io::read_instance(input)?;
    Ok(UnitDiskGraph::build(ps)?)
}

fn cmd_solve(problem: ApproxProblem, input: &Path, out: &Path) -> Result<()> {
    let g = load_graph(input)?;
    let report = g.isolated_vertices();
    if !report.is_clean() {
        return Err(Error::IsolatedVertices(report.isolated).into());
    }
    let solution = match problem {
        ApproxProblem::Tds => {
            let s = total_dominating_set(&g)?;
            println!("{}", s.len());
            SolutionFile::tds(&s)
        }
        ApproxProblem::Trds => {
            let f = total_roman_function(&g)?;
            println!("{}", f.weight());
            SolutionFile::trds(&f)
        }
    };
    io::write_solution(out, &solution)?;
    Ok(())
}

fn cmd_exact(
    problem: ExactProblem,
    input: &Path,
    out: &Path,
    exact_limit: Option<usize>,
) -> Result<()> {
    let g = load_graph(input)?;
    let limit = exact_limit.unwrap_or(match problem {
        ExactProblem::Ds | ExactProblem::Tds => DEFAULT_SET_SEARCH_LIMIT,
        ExactProblem::Rds | ExactProblem::Trds => DEFAULT_LABEL_SEARCH_LIMIT,
    });
    let solution = match problem {
        ExactProblem::Ds => {
            let r = exact_min_ds(&g, limit)?;
            println!("{}", r.objective);
            SolutionFile::Ds {
                members: r.witness.as_set().unwrap().to_vec(),
            }
        }
        ExactProblem::Tds => {
            let r = exact_min_tds(&g, limit)?;
            println!("{}", r.objective);
            SolutionFile::Tds {
                members: r.witness.as_set().unwrap().to_vec(),
            }
        }
        ExactProblem::Rds => {
            let r = exact_min_rdf(&g, limit)?;
            println!("{}", r.objective);
            let f = r.witness.as_assignment().unwrap();
            SolutionFile::Rds {
                values: f.values.clone(),
                weight: r.objective,
            }
        }
        ExactProblem::Trds => {
            let r = exact_min_trdf(&g, limit, false)?;
            println!("{}", r.objective);
            let f = r.witness.as_assignment().unwrap();
            SolutionFile::Trds {
                values: f.values.clone(),
                weight: r.objective,
            }
        }
    };
    io::write_solution(out, &solution)?;
    Ok(())
}

/// `x.json -> x.roles.json`; other names get `.roles.json` appended.
fn roles_path(out: &Path) -> PathBuf {
    match out.extension().and_then(|e| e.to_str()) {
        Some("json") => out.with_extension("roles.json"),
        _ => {
            let mut name = out.as_os_str().to_owned();
            name.push(".roles.json");
            PathBuf::from(name)
        }
    }
}

fn cmd_reduce(grid: &Path, scale2: bool, out: &Path) -> Result<()> {
    let g = io::read_grid(grid)?;
    let gadget = grid_to_gadget(&g, scale2);
    io::write_instance(out, gadget.udg.pointset())?;
    io::write_roles(&roles_path(out), &gadget.roles)?;
    println!("{}", gadget.udg.vertex_count());
    Ok(())
}

fn cmd_verify_claim(max_n: usize) -> Result<()> {
    if max_n > 4 {
        // a 4-cell animal can reach 4 + 2*4 = 12 gadget vertices; anything
        // larger overruns the exact TRDF limit
        return Err(Error::SizeLimit {
            actual: max_n,
            limit: 4,
        }
        .into());
    }

    let mut graphs = Vec::new();
    for size in 2..=max_n {
        graphs.extend(lattice_animals(size));
    }
    let workers = worker_count();
    let lines = parallel_map(&graphs, workers, |cells| -> Result<(String, bool)> {
        let g = GridGraph::new(cells.clone())?;
        let p = equivalence_profile(&g)?;
        let n = g.vertex_count();
        let m = g.edge_count();
        let pass = (1..=n)
            .all(|k| (p.domination_number <= k) == (p.gadget_total_roman_number <= k + 2 * m));
        let line = format!(
            "n={n} m={m} cells={cells:?} gamma={} gamma_tr={} {}",
            p.domination_number,
            p.gadget_total_roman_number,
            if pass { "PASS" } else { "FAIL" }
        );
        Ok((line, pass))
    });

    let mut all_pass = true;
    let mut count = 0usize;
    for result in lines {
        let (line, pass) = result?;
        println!("{line}");
        all_pass &= pass;
        count += 1;
    }
    println!(
        "checked {count} grid graphs up to {max_n} vertices: {}",
        if all_pass { "all pass" } else { "FAILURES" }
    );
    if all_pass {
        Ok(())
    } else {
        Err(Violation("reduction equivalence failed".into()).into())
    }
}
