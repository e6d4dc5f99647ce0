//! Benchmark instances in the plane, table and figure reproduction, and
//! trace export.

pub mod published;

use std::f64::consts::PI;
use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{point, ConvexSet, Ellipsoid, HalfSpace, Point};
use crate::operators::ProjectionMode;
use crate::solver::{solve, solve_exact_dr, ApDRConfig, ApDRTrace, IterationRecord, ProblemInstance, Status};

pub const START: [f64; 2] = [-1.0, 1.5];
pub const EPSILONS: [f64; 2] = [0.245, 0.120];
pub const COLUMNS: [&str; 4] = ["E2", "E3", "H1", "H2"];
/// Gap at which ellipse projections are emulated for the exact row.
pub const EXACT_GAP_TOL: f64 = 1e-6;

pub fn e1() -> Ellipsoid {
    Ellipsoid::from_axes(point(&[0.0, 0.0]), &[2.0, 0.2], Some(-PI / 4.0)).expect("valid ellipse")
}

pub fn e2() -> Ellipsoid {
    Ellipsoid::from_axes(point(&[2.3, 0.5]), &[2.0, 0.4], Some(PI / 3.0)).expect("valid ellipse")
}

/// Touches `E1` from outside, so the intersection has empty interior.
pub fn e3() -> Ellipsoid {
    Ellipsoid::from_axes(point(&[1.7882409, -0.66441136]), &[0.762734, 0.152547], Some(PI / 3.0))
        .expect("valid ellipse")
}

/// `x_1 >= offset`.
pub fn vertical_half_plane(offset: f64) -> HalfSpace {
    HalfSpace::new(point(&[1.0, 0.0]), offset).expect("valid half-space")
}

pub fn h1() -> HalfSpace {
    vertical_half_plane(1.3)
}

/// Supporting half-plane of `E1` at its rightmost point.
pub fn h2() -> HalfSpace {
    let offset = ConvexSet::from(e1())
        .support_value(&point(&[1.0, 0.0]))
        .expect("ellipse is compact");
    vertical_half_plane(offset)
}

fn instance(name: &str, b: ConvexSet) -> ProblemInstance {
    let mode_b = if b.is_compact() {
        ProjectionMode::Inexact
    } else {
        ProjectionMode::ClosedForm
    };
    ProblemInstance {
        name: name.to_string(),
        set_a: e1().into(),
        set_b: b,
        start: point(&START),
        mode_a: ProjectionMode::Inexact,
        mode_b,
    }
}

/// The four instances `E1 ∩ E2`, `E1 ∩ E3`, `E1 ∩ H1`, `E1 ∩ H2`, in that
/// order. Ellipses are projected by conditional gradient, half-planes in
/// closed form.
pub fn paper_problems() -> Vec<ProblemInstance> {
    vec![
        instance("E2", e2().into()),
        instance("E3", e3().into()),
        instance("H1", h1().into()),
        instance("H2", h2().into()),
    ]
}

pub fn paper_problem(name: &str) -> Option<ProblemInstance> {
    paper_problems().into_iter().find(|p| p.name.eq_ignore_ascii_case(name))
}

/// A row of the iteration table.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Row {
    Epsilon(f64),
    Exact,
}

impl fmt::Display for Row {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Row::Epsilon(e) => write!(f, "{e:.3}"),
            Row::Exact => f.write_str("Exact"),
        }
    }
}

/// Runs `problem` the way `row` prescribes: the inexact method with
/// `eps_k = eps` (and `delta_k = eps` when B is an ellipse), or classical
/// DR with ellipse projections emulated to `exact_gap_tol`.
pub fn run_row(problem: &ProblemInstance, row: Row, exact_gap_tol: f64) -> Result<ApDRTrace> {
    match row {
        Row::Epsilon(eps) => solve(problem, &ApDRConfig::with_epsilon(eps, problem.mode_b)),
        Row::Exact => solve_exact_dr(
            problem,
            &ApDRConfig {
                exact_gap_tol,
                ..Default::default()
            },
        ),
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Cell {
    pub problem: String,
    pub row: Row,
    pub outer_iters: usize,
    pub first_hit_k: Option<usize>,
    pub final_residual: f64,
    pub status: Status,
    pub wall_nanos: u64,
}

impl Cell {
    fn from_trace(problem: &str, row: Row, trace: &ApDRTrace) -> Self {
        Cell {
            problem: problem.to_string(),
            row,
            outer_iters: trace.iterations(),
            first_hit_k: trace.first_hit_k,
            final_residual: trace.final_residual(),
            status: trace.status,
            wall_nanos: trace.total_nanos(),
        }
    }

    /// Table notation, e.g. `52 (2)`.
    pub fn label(&self) -> String {
        count_label(self.outer_iters, self.first_hit_k)
    }
}

fn count_label(iters: usize, hit: Option<usize>) -> String {
    match hit {
        Some(h) => format!("{iters} ({h})"),
        None => iters.to_string(),
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PublishedCount {
    pub iters: usize,
    /// Only reported when the intersection has nonempty interior.
    pub hit: Option<usize>,
}

impl PublishedCount {
    pub fn label(&self) -> String {
        count_label(self.iters, self.hit)
    }
}

const fn pc(iters: usize, hit: Option<usize>) -> PublishedCount {
    PublishedCount { iters, hit }
}

/// Published iteration counts, rows `0.245`, `0.120`, exact; columns as in
/// [`COLUMNS`].
pub const PUBLISHED_TABLE1: [(Row, [PublishedCount; 4]); 3] = [
    (
        Row::Epsilon(0.245),
        [pc(52, Some(2)), pc(14, None), pc(10, Some(4)), pc(5, None)],
    ),
    (
        Row::Epsilon(0.120),
        [pc(51, Some(2)), pc(13, None), pc(12, Some(3)), pc(5, None)],
    ),
    (
        Row::Exact,
        [pc(24, Some(6)), pc(11, None), pc(15, Some(4)), pc(6, None)],
    ),
];

/// Published time ratios (inexact over exact), rows `0.245`, `0.120`.
pub const PUBLISHED_TABLE2: [(f64, [f64; 4]); 2] =
    [(0.245, [0.34, 0.48, 0.17, 0.15]), (0.120, [0.36, 0.48, 0.23, 0.18])];

pub fn published_count(problem: &str, row: Row) -> Option<PublishedCount> {
    let col = COLUMNS.iter().position(|c| *c == problem)?;
    PUBLISHED_TABLE1
        .iter()
        .find(|(r, _)| *r == row)
        .map(|(_, counts)| counts[col])
}

pub fn published_ratio(problem: &str, eps: f64) -> Option<f64> {
    let col = COLUMNS.iter().position(|c| *c == problem)?;
    PUBLISHED_TABLE2.iter().find(|(e, _)| *e == eps).map(|(_, r)| r[col])
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Table1Report {
    pub rows: Vec<Row>,
    pub cells: Vec<Cell>,
}

impl Table1Report {
    pub fn cell(&self, problem: &str, row: Row) -> Option<&Cell> {
        self.cells.iter().find(|c| c.problem == problem && c.row == row)
    }

    /// `epsilon,E2,E3,H1,H2` with cells like `52 (2)`.
    pub fn to_csv(&self) -> String {
        let mut out = format!("epsilon,{}\n", COLUMNS.join(","));
        for row in &self.rows {
            let cells: Vec<String> = COLUMNS
                .iter()
                .map(|c| self.cell(c, *row).map_or_else(String::new, Cell::label))
                .collect();
            out.push_str(&format!("{row},{}\n", cells.join(",")));
        }
        out
    }
}

/// Iteration counts and intersection hits for every problem at each
/// `epsilons` entry plus the exact row.
pub fn reproduce_table1(epsilons: &[f64], exact_gap_tol: f64) -> Result<Table1Report> {
    let rows: Vec<Row> = epsilons
        .iter()
        .map(|e| Row::Epsilon(*e))
        .chain(std::iter::once(Row::Exact))
        .collect();
    let mut cells = Vec::new();
    for row in &rows {
        for p in paper_problems() {
            let trace = run_row(&p, *row, exact_gap_tol)?;
            cells.push(Cell::from_trace(&p.name, *row, &trace));
        }
    }
    Ok(Table1Report { rows, cells })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TimingCell {
    pub problem: String,
    pub epsilon: f64,
    pub inexact_median_nanos: u64,
    pub exact_median_nanos: u64,
    pub ratio: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Table2Report {
    pub epsilons: Vec<f64>,
    pub repetitions: usize,
    pub cells: Vec<TimingCell>,
}

impl Table2Report {
    pub fn cell(&self, problem: &str, eps: f64) -> Option<&TimingCell> {
        self.cells.iter().find(|c| c.problem == problem && c.epsilon == eps)
    }

    pub fn to_csv(&self) -> String {
        let mut out = format!("epsilon,{}\n", COLUMNS.join(","));
        for eps in &self.epsilons {
            let cells: Vec<String> = COLUMNS
                .iter()
                .map(|c| {
                    self.cell(c, *eps)
                        .map_or_else(String::new, |t| format!("{:.4}", t.ratio))
                })
                .collect();
            out.push_str(&format!("{eps:.3},{}\n", cells.join(",")));
        }
        out
    }
}

/// Median wall time of `repetitions` timed runs, after `warmup` untimed ones.
pub fn median_nanos(repetitions: usize, warmup: usize, mut run: impl FnMut() -> Result<()>) -> Result<u64> {
    if repetitions == 0 {
        return Err(Error::InvalidConfig("repetitions must be at least 1".into()));
    }
    for _ in 0..warmup {
        run()?;
    }
    let mut samples = Vec::with_capacity(repetitions);
    for _ in 0..repetitions {
        let t = Instant::now();
        run()?;
        samples.push(t.elapsed().as_nanos() as u64);
    }
    samples.sort_unstable();
    let m = samples.len() / 2;
    Ok(if samples.len() % 2 == 1 {
        samples[m]
    } else {
        (samples[m - 1] + samples[m]) / 2
    })
}

/// Wall-time ratio of the inexact method over classical DR for each problem
/// and `epsilons` entry. Cells run one after another.
pub fn reproduce_table2(epsilons: &[f64], repetitions: usize, exact_gap_tol: f64) -> Result<Table2Report> {
    let warmup = (repetitions / 10).clamp(1, 100);
    let mut cells = Vec::new();
    for p in paper_problems() {
        let exact = median_nanos(repetitions, warmup, || run_row(&p, Row::Exact, exact_gap_tol).map(drop))?;
        for &eps in epsilons {
            let inexact = median_nanos(repetitions, warmup, || {
                run_row(&p, Row::Epsilon(eps), exact_gap_tol).map(drop)
            })?;
            cells.push(TimingCell {
                problem: p.name.clone(),
                epsilon: eps,
                inexact_median_nanos: inexact,
                exact_median_nanos: exact,
                ratio: inexact as f64 / exact.max(1) as f64,
            });
        }
    }
    Ok(Table2Report {
        epsilons: epsilons.to_vec(),
        repetitions,
        cells,
    })
}

/// One panel of the published iterate figures.
#[derive(Clone, Copy, Debug)]
pub struct FigurePanel {
    pub problem: &'static str,
    pub row: Row,
    /// Drawn iterates `x^1, x^2, ...`.
    pub x_nodes: &'static [[f64; 2]],
    /// Plotted `|y_A^k - y_B^k|` for `k = 1, 2, ...`.
    pub residuals: &'static [f64],
    /// Drawn shadow points `y_A^k`, where the figure shows them.
    pub shadow_a: Option<&'static [[f64; 2]]>,
}

impl FigurePanel {
    pub fn slug(&self) -> String {
        match self.row {
            Row::Epsilon(e) => format!("{}_eps{:03}", self.problem.to_lowercase(), (e * 1000.0).round() as u32),
            Row::Exact => format!("{}_exact", self.problem.to_lowercase()),
        }
    }
}

pub fn figure_panels() -> Vec<FigurePanel> {
    use published::*;
    let p = |problem, row, x_nodes, residuals, shadow_a| FigurePanel {
        problem,
        row,
        x_nodes,
        residuals,
        shadow_a,
    };
    let (a, b, x) = (Row::Epsilon(0.245), Row::Epsilon(0.120), Row::Exact);
    vec![
        p("E2", a, E2_245_X, E2_245_RES, None),
        p("E2", b, E2_120_X, E2_120_RES, None),
        p("E2", x, E2_EXACT_X, E2_EXACT_RES, None),
        p("E3", a, E3_245_X, E3_245_RES, Some(E3_245_YA)),
        p("E3", b, E3_120_X, E3_120_RES, Some(E3_120_YA)),
        p("E3", x, E3_EXACT_X, E3_EXACT_RES, Some(E3_EXACT_YA)),
        p("H1", a, H1_245_X, H1_245_RES, None),
        p("H1", b, H1_120_X, H1_120_RES, None),
        p("H1", x, H1_EXACT_X, H1_EXACT_RES, None),
        p("H2", a, H2_245_X, H2_245_RES, Some(H2_245_YA)),
        p("H2", b, H2_120_X, H2_120_RES, Some(H2_120_YA)),
        p("H2", x, H2_EXACT_X, H2_EXACT_RES, Some(H2_EXACT_YA)),
    ]
}

pub fn figure_panel(problem: &str, row: Row) -> Option<FigurePanel> {
    figure_panels()
        .into_iter()
        .find(|p| p.problem.eq_ignore_ascii_case(problem) && p.row == row)
}

#[derive(Clone, Debug, PartialEq)]
pub struct GoldenReport {
    pub max_deviation: f64,
    pub compared: usize,
    pub expected_len: usize,
    pub actual_len: usize,
}

/// Compares `x^1, x^2, ...` of a run positionally against `expected`.
///
/// The lengths may differ by one (figures sometimes omit the final
/// iterate); a larger difference is a `LengthMismatch`.
pub fn golden_trace_check(trace: &ApDRTrace, expected: &[Point]) -> Result<GoldenReport> {
    if expected.is_empty() {
        return Err(Error::InvalidConfig("expected trace is empty".into()));
    }
    let actual = trace.x_path();
    if actual.len().abs_diff(expected.len()) > 1 {
        return Err(Error::LengthMismatch {
            expected: expected.len(),
            found: actual.len(),
        });
    }
    let mut max_deviation = 0.0f64;
    let compared = actual.len().min(expected.len());
    for (a, e) in actual.iter().zip(expected) {
        if a.len() != e.len() {
            return Err(Error::DimensionMismatch {
                expected: e.len(),
                found: a.len(),
            });
        }
        max_deviation = max_deviation.max((a - e).amax());
    }
    Ok(GoldenReport {
        max_deviation,
        compared,
        expected_len: expected.len(),
        actual_len: actual.len(),
    })
}

pub fn nodes_to_points(nodes: &[[f64; 2]]) -> Vec<Point> {
    nodes.iter().map(|n| point(n)).collect()
}

fn fmt_f64(v: f64) -> String {
    format!("{v:.16e}")
}

/// `k,x1..xn,yA1..yAn,yB1..yBn,residual,innerA,innerB,nanos`, one row per
/// outer iteration, floats at 17 significant digits.
pub fn trace_csv(records: &[IterationRecord]) -> Result<String> {
    let n = records.first().map_or(0, |r| r.x.len());
    let mut w = csv::Writer::from_writer(Vec::new());
    let mut header = vec!["k".to_string()];
    for prefix in ["x", "yA", "yB"] {
        header.extend((1..=n).map(|i| format!("{prefix}{i}")));
    }
    header.extend(["residual", "innerA", "innerB", "nanos"].map(String::from));
    w.write_record(&header).map_err(csv_err)?;
    for r in records {
        let mut row = vec![r.k.to_string()];
        row.extend(r.x.iter().chain(&r.ya).chain(&r.yb).map(|v| fmt_f64(*v)));
        row.push(fmt_f64(r.residual));
        row.extend([r.inner_a, r.inner_b].map(|v| v.to_string()));
        row.push(r.wall_nanos.to_string());
        w.write_record(&row).map_err(csv_err)?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Parse(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| Error::Parse(e.to_string()))
}

fn csv_err(e: csv::Error) -> Error {
    Error::Parse(e.to_string())
}

pub fn parse_trace_csv(text: &str) -> Result<Vec<IterationRecord>> {
    let mut rdr = csv::Reader::from_reader(text.as_bytes());
    let header = rdr.headers().map_err(csv_err)?.clone();
    if header.len() < 5 || (header.len() - 5) % 3 != 0 {
        return Err(Error::Parse(format!(
            "unexpected trace header with {} columns",
            header.len()
        )));
    }
    let n = (header.len() - 5) / 3;
    let mut out = Vec::new();
    for (line, rec) in rdr.records().enumerate() {
        let rec = rec.map_err(csv_err)?;
        let field = |i: usize| rec.get(i).unwrap_or("");
        let float = |i: usize| {
            field(i)
                .parse::<f64>()
                .map_err(|e| Error::Parse(format!("row {}, column {}: {e}", line + 2, &header[i])))
        };
        let int = |i: usize| {
            field(i)
                .parse::<u64>()
                .map_err(|e| Error::Parse(format!("row {}, column {}: {e}", line + 2, &header[i])))
        };
        let floats = |from: usize| (from..from + n).map(float).collect::<Result<Vec<f64>>>();
        out.push(IterationRecord {
            k: int(0)? as usize,
            x: floats(1)?,
            ya: floats(1 + n)?,
            yb: floats(1 + 2 * n)?,
            residual: float(1 + 3 * n)?,
            inner_a: int(2 + 3 * n)? as usize,
            inner_b: int(3 + 3 * n)? as usize,
            wall_nanos: int(4 + 3 * n)?,
        });
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PlotFormat {
    Csv,
    Json,
}

pub fn write_file(path: &Path, contents: &str) -> Result<()> {
    if let Some(dir) = path.parent() {
        if !dir.as_os_str().is_empty() {
            fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))?;
        }
    }
    fs::write(path, contents).map_err(|e| Error::io(path, e))
}

pub fn write_trace_csv(trace: &ApDRTrace, path: &Path) -> Result<()> {
    write_file(path, &trace_csv(&trace.records)?)
}

/// Writes the residual curve and the iterate path of `trace` into `dir`,
/// named `{stem}_residuals` and `{stem}_path`.
pub fn export_plot_data(trace: &ApDRTrace, dir: &Path, stem: &str, format: PlotFormat) -> Result<Vec<PathBuf>> {
    if trace.records.is_empty() {
        return Err(Error::EmptyTrace);
    }
    let residuals: Vec<(usize, f64)> = trace.records.iter().map(|r| (r.k, r.residual)).collect();
    let path: Vec<Vec<f64>> = trace.x_path().iter().map(|p| p.as_slice().to_vec()).collect();
    match format {
        PlotFormat::Csv => {
            let res_path = dir.join(format!("{stem}_residuals.csv"));
            let mut s = String::from("k,residual\n");
            for (k, r) in &residuals {
                s.push_str(&format!("{k},{}\n", fmt_f64(*r)));
            }
            write_file(&res_path, &s)?;

            let path_path = dir.join(format!("{stem}_path.csv"));
            let n = path[0].len();
            let mut s = (1..=n).map(|i| format!("x{i}")).collect::<Vec<_>>().join(",");
            s.push('\n');
            for p in &path {
                s.push_str(&p.iter().map(|v| fmt_f64(*v)).collect::<Vec<_>>().join(","));
                s.push('\n');
            }
            write_file(&path_path, &s)?;
            Ok(vec![res_path, path_path])
        }
        PlotFormat::Json => {
            let out = dir.join(format!("{stem}_plot.json"));
            let doc = serde_json::json!({ "residuals": residuals, "path": path });
            let text = serde_json::to_string_pretty(&doc).map_err(|e| Error::Parse(e.to_string()))?;
            write_file(&out, &text)?;
            Ok(vec![out])
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn h2_offset_is_the_ellipse_support() {
        let offset = match ConvexSet::from(h2()) {
            ConvexSet::HalfSpace(h) => h.offset,
            _ => unreachable!(),
        };
        assert!((offset - 2.02f64.sqrt()).abs() < 1e-14);
        assert!((offset - 1.4212670403551897).abs() < 1e-14);
        assert!((offset - 1.421267).abs() < 1e-6);
    }

    #[test]
    fn e3_axes_are_a_scaled_copy_of_e2() {
        let ratios: [f64; 2] = [0.762734 / 2.0, 0.152547 / 0.4];
        for r in ratios {
            assert!((r - 0.381367).abs() < 1e-6);
            assert!((r * r - 0.145).abs() < 1e-3);
        }
    }

    #[test]
    fn published_projection_is_on_the_first_ellipse() {
        let y = point(&[-1.1480148168230162, 1.291200937154192]);
        assert!((e1().quadratic_form(&y) - 1.0).abs() < 1e-3);
    }

    #[test]
    fn start_is_outside_every_set() {
        for p in paper_problems() {
            assert!(!p.set_a.contains(&p.start, 0.0), "{}", p.name);
            assert!(!p.set_b.contains(&p.start, 0.0), "{}", p.name);
        }
    }

    #[test]
    fn published_tables_are_addressable() {
        assert_eq!(published_count("E2", Row::Exact).unwrap().label(), "24 (6)");
        assert_eq!(published_count("H1", Row::Epsilon(0.245)).unwrap().label(), "10 (4)");
        assert_eq!(published_count("E3", Row::Epsilon(0.120)).unwrap().label(), "13");
        assert_eq!(published_ratio("H2", 0.120), Some(0.18));
        assert_eq!(published_ratio("E2", 0.245), Some(0.34));
        assert!(published_count("X", Row::Exact).is_none());
    }

    #[test]
    fn figure_data_is_consistent_with_tables() {
        for panel in figure_panels() {
            let count = published_count(panel.problem, panel.row).unwrap();
            assert_eq!(panel.residuals.len(), count.iters, "{}", panel.slug());
            assert!(panel.x_nodes.len().abs_diff(count.iters) <= 1, "{}", panel.slug());
            assert_eq!(panel.x_nodes[0], START);
        }
    }

    #[test]
    fn degenerate_golden_check() {
        let ball: ConvexSet = crate::geometry::Ball::new(point(&[0.0, 0.0]), 1.0).unwrap().into();
        let p = ProblemInstance {
            name: "solved".into(),
            set_a: ball.clone(),
            set_b: ball,
            start: point(&[0.5, 0.0]),
            mode_a: ProjectionMode::ClosedForm,
            mode_b: ProjectionMode::ClosedForm,
        };
        let t = solve(&p, &ApDRConfig::default()).unwrap();
        let r = golden_trace_check(&t, std::slice::from_ref(&p.start)).unwrap();
        assert_eq!(r.max_deviation, 0.0);
        let long = vec![p.start.clone(); 4];
        assert!(matches!(
            golden_trace_check(&t, &long),
            Err(Error::LengthMismatch { .. })
        ));
        assert!(golden_trace_check(&t, &[]).is_err());
    }

    #[test]
    fn median_of_samples() {
        assert!(median_nanos(0, 0, || Ok(())).is_err());
        assert!(median_nanos(3, 1, || Ok(())).is_ok());
    }

    #[test]
    fn trace_csv_header_and_round_trip() {
        let p = paper_problem("H2").unwrap();
        let t = run_row(&p, Row::Epsilon(0.245), EXACT_GAP_TOL).unwrap();
        let text = trace_csv(&t.records).unwrap();
        assert!(text.starts_with("k,x1,x2,yA1,yA2,yB1,yB2,residual,innerA,innerB,nanos\n"));
        assert_eq!(parse_trace_csv(&text).unwrap(), t.records);
        assert!(parse_trace_csv("a,b\n1,2\n").is_err());
    }

    #[test]
    fn empty_trace_is_not_exported() {
        let t = ApDRTrace {
            records: vec![],
            final_x: vec![0.0, 0.0],
            status: Status::Converged,
            first_hit_k: None,
            capped_projections: 0,
        };
        let dir = tempfile::tempdir().unwrap();
        assert!(matches!(
            export_plot_data(&t, dir.path(), "x", PlotFormat::Csv),
            Err(Error::EmptyTrace)
        ));
    }
}
