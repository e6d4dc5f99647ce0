use std::path::{Path, PathBuf};
use std::process::ExitCode;

use apdr::harness::{self, PlotFormat, Row, EPSILONS, EXACT_GAP_TOL};
use apdr::problem_file::ProblemFile;
use apdr::properties::{run_suite, SuiteConfig};
use apdr::{solve, ForcingSchedule, ProjectionMode, Status};
use clap::{Parser, Subcommand, ValueEnum};

const EXIT_INPUT: u8 = 1;
const EXIT_MAX_OUTER: u8 = 2;
const EXIT_PROPERTY: u8 = 3;

#[derive(Parser)]
#[command(name = "apdr", version, about = "Inexact Douglas-Rachford feasibility solver")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve the two-set feasibility problem in a problem file.
    Solve {
        path: PathBuf,
        /// Forcing parameter for the first set (and the second, when it is
        /// projected by conditional gradient and --delta is absent).
        #[arg(long)]
        epsilon: Option<f64>,
        #[arg(long)]
        delta: Option<f64>,
        /// Stop once the squared shadow residual drops below this.
        #[arg(long)]
        tol: Option<f64>,
        #[arg(long)]
        max_outer: Option<usize>,
        #[arg(long, default_value = ".")]
        output: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Rerun the benchmark experiments and compare with the published numbers.
    Reproduce {
        #[arg(value_enum)]
        target: Target,
        #[arg(long, default_value = ".")]
        output: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        /// Gap for emulated exact ellipse projections. Defaults to 1e-6 for
        /// the tables and 1e-13 for the figure paths.
        #[arg(long)]
        gap: Option<f64>,
        /// Timed runs per cell for table2.
        #[arg(long, default_value_t = 200)]
        repetitions: usize,
    },
    /// Run the randomized property suite.
    Verify {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1000)]
        instances: usize,
        /// Perturb one output so that the suite must fail.
        #[arg(long)]
        force_failure: bool,
    },
    /// Median wall time of each benchmark problem, inexact and exact.
    Bench {
        #[arg(long, default_values_t = EPSILONS.to_vec())]
        epsilon: Vec<f64>,
        #[arg(long, default_value_t = 200)]
        repetitions: usize,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Target {
    Table1,
    Table2,
    Figures,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(EXIT_INPUT)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let result = match cli.command {
        Command::Solve {
            path,
            epsilon,
            delta,
            tol,
            max_outer,
            output,
            format,
        } => cmd_solve(&path, epsilon, delta, tol, max_outer, &output, format),
        Command::Reproduce {
            target,
            output,
            format,
            gap,
            repetitions,
        } => cmd_reproduce(target, &output, format, gap, repetitions),
        Command::Verify {
            seed,
            instances,
            force_failure,
        } => cmd_verify(seed, instances, force_failure),
        Command::Bench { epsilon, repetitions } => cmd_bench(&epsilon, repetitions),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_INPUT)
        }
    }
}

fn fmt_point(p: &[f64]) -> String {
    let parts: Vec<String> = p.iter().map(|v| format!("{v:.10}")).collect();
    format!("({})", parts.join(", "))
}

fn cmd_solve(
    path: &Path,
    epsilon: Option<f64>,
    delta: Option<f64>,
    tol: Option<f64>,
    max_outer: Option<usize>,
    output: &Path,
    format: Format,
) -> apdr::Result<ExitCode> {
    let file = ProblemFile::load(path)?;
    let (problem, mut config) = file.instance()?;
    if let Some(eps) = epsilon {
        config.eps_a = ForcingSchedule::Constant(eps);
        if delta.is_none() {
            let d = if problem.mode_b == ProjectionMode::Inexact {
                eps
            } else {
                0.0
            };
            config.eps_b = ForcingSchedule::Constant(d);
        }
    }
    if let Some(d) = delta {
        config.eps_b = ForcingSchedule::Constant(d);
    }
    if let Some(t) = tol {
        config.residual_sq_tol = t;
    }
    if let Some(m) = max_outer {
        config.max_outer = m;
    }
    config.validate()?;
    let trace = solve(&problem, &config)?;

    ensure_dir(output)?;
    let trace_path = match format {
        Format::Csv => {
            let p = output.join("trace.csv");
            harness::write_trace_csv(&trace, &p)?;
            p
        }
        Format::Json => {
            let p = output.join("trace.json");
            harness::write_file(&p, &to_json(&trace)?)?;
            p
        }
    };
    let shadow = trace.final_shadow().map(|p| p.as_slice().to_vec()).unwrap_or_default();
    let summary = serde_json::json!({
        "problem": problem.name,
        "status": trace.status,
        "iterations": trace.iterations(),
        "first_hit_k": trace.first_hit_k,
        "final_residual": trace.final_residual(),
        "final_shadow": shadow,
        "capped_projections": trace.capped_projections,
    });
    harness::write_file(&output.join("summary.json"), &to_json(&summary)?)?;

    println!("problem         {}", problem.name);
    println!("status          {}", status_name(trace.status));
    println!("iterations      {}", trace.iterations());
    match trace.first_hit_k {
        Some(k) => println!("first hit       {k}"),
        None => println!("first hit       none"),
    }
    println!("final residual  {:.6e}", trace.final_residual());
    println!("final shadow    {}", fmt_point(&shadow));
    println!("trace           {}", trace_path.display());
    Ok(match trace.status {
        Status::MaxOuterReached => ExitCode::from(EXIT_MAX_OUTER),
        _ => ExitCode::SUCCESS,
    })
}

fn to_json(value: &impl serde::Serialize) -> apdr::Result<String> {
    serde_json::to_string_pretty(value).map_err(|e| apdr::Error::Parse(e.to_string()))
}

fn status_name(s: Status) -> &'static str {
    match s {
        Status::Converged => "converged",
        Status::StoppedExact => "stopped_exact",
        Status::MaxOuterReached => "max_outer_reached",
    }
}

/// Pass band for a reproduced iteration count.
fn within_band(row: Row, computed: usize, published: usize) -> bool {
    let band = match row {
        Row::Exact => 2,
        Row::Epsilon(_) => ((published as f64 * 0.3).ceil() as usize).max(3),
    };
    computed.abs_diff(published) <= band
}

fn ensure_dir(dir: &Path) -> apdr::Result<()> {
    std::fs::create_dir_all(dir).map_err(|e| apdr::Error::Io {
        path: dir.to_path_buf(),
        source: e,
    })
}

fn cmd_reproduce(
    target: Target,
    output: &Path,
    format: Format,
    gap: Option<f64>,
    repetitions: usize,
) -> apdr::Result<ExitCode> {
    ensure_dir(output)?;
    match target {
        Target::Table1 => {
            let report = harness::reproduce_table1(&EPSILONS, gap.unwrap_or(EXACT_GAP_TOL))?;
            let path = output.join("table1.csv");
            harness::write_file(&path, &report.to_csv())?;
            println!(
                "{:<7} {:<4} {:>10} {:>10}  match",
                "row", "set", "computed", "published"
            );
            for cell in &report.cells {
                let published = harness::published_count(&cell.problem, cell.row).expect("published cell");
                let iters_ok = within_band(cell.row, cell.outer_iters, published.iters);
                let hit_ok = match (published.hit, cell.first_hit_k) {
                    (Some(p), Some(c)) => c.abs_diff(p) <= 2,
                    (Some(_), None) => false,
                    (None, _) => true,
                };
                let verdict = if cell.label() == published.label() {
                    "exact"
                } else if iters_ok && hit_ok {
                    "within band"
                } else {
                    "differs"
                };
                println!(
                    "{:<7} {:<4} {:>10} {:>10}  {verdict}",
                    cell.row.to_string(),
                    cell.problem,
                    cell.label(),
                    published.label()
                );
            }
            println!("wrote {}", path.display());
        }
        Target::Table2 => {
            let report = harness::reproduce_table2(&EPSILONS, repetitions, gap.unwrap_or(EXACT_GAP_TOL))?;
            let path = output.join("table2.csv");
            harness::write_file(&path, &report.to_csv())?;
            println!(
                "{:<7} {:<4} {:>9} {:>10}  direction",
                "eps", "set", "ratio", "published"
            );
            for cell in &report.cells {
                let published = harness::published_ratio(&cell.problem, cell.epsilon).expect("published ratio");
                let verdict = if cell.ratio <= 1.0 { "faster" } else { "slower" };
                println!(
                    "{:<7.3} {:<4} {:>9.3} {:>10.2}  {verdict}",
                    cell.epsilon, cell.problem, cell.ratio, published
                );
            }
            println!("wrote {}", path.display());
        }
        Target::Figures => {
            let plot = match format {
                Format::Csv => PlotFormat::Csv,
                Format::Json => PlotFormat::Json,
            };
            println!("{:<12} {:>6} {:>6} {:>12}", "panel", "nodes", "iters", "max dev");
            for panel in harness::figure_panels() {
                let problem = harness::paper_problem(panel.problem).expect("benchmark problem");
                let g = match panel.row {
                    Row::Exact => gap.unwrap_or(1e-13),
                    Row::Epsilon(_) => EXACT_GAP_TOL,
                };
                let trace = harness::run_row(&problem, panel.row, g)?;
                let expected = harness::nodes_to_points(panel.x_nodes);
                let dev = match harness::golden_trace_check(&trace, &expected) {
                    Ok(r) => format!("{:.3e}", r.max_deviation),
                    Err(e) => e.to_string(),
                };
                harness::export_plot_data(&trace, output, &panel.slug(), plot)?;
                println!(
                    "{:<12} {:>6} {:>6} {:>12}",
                    panel.slug(),
                    panel.x_nodes.len(),
                    trace.iterations(),
                    dev
                );
            }
            println!("wrote plot data to {}", output.display());
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(seed: u64, instances: usize, force_failure: bool) -> apdr::Result<ExitCode> {
    let report = run_suite(&SuiteConfig {
        seed,
        instances,
        force_failure,
    })?;
    println!("seed {seed}, {instances} instances per property");
    println!(
        "{:<40} {:>8} {:>8} {:>12} {:>10}  result",
        "property", "checked", "failed", "max viol", "tol"
    );
    for o in &report.outcomes {
        let result = match (o.passed(), o.informational) {
            (true, _) => "pass",
            (false, true) => "info",
            (false, false) => "FAIL",
        };
        println!(
            "{:<40} {:>8} {:>8} {:>12.3e} {:>10.1e}  {result}",
            o.name, o.checked, o.failures, o.max_violation, o.tolerance
        );
    }
    Ok(if report.all_passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_PROPERTY)
    })
}

fn cmd_bench(epsilons: &[f64], repetitions: usize) -> apdr::Result<ExitCode> {
    let report = harness::reproduce_table2(epsilons, repetitions, EXACT_GAP_TOL)?;
    println!(
        "{:<4} {:>7} {:>14} {:>14} {:>8}",
        "set", "eps", "inexact ns", "exact ns", "ratio"
    );
    for c in &report.cells {
        println!(
            "{:<4} {:>7.3} {:>14} {:>14} {:>8.3}",
            c.problem, c.epsilon, c.inexact_median_nanos, c.exact_median_nanos, c.ratio
        );
    }
    Ok(ExitCode::SUCCESS)
}
