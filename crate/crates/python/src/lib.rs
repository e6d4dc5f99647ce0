//! Python module `apdr_py`: convex sets with their oracles and projections,
//! the solver, and the benchmark problems.

use apdr::condg::{condg_project, CondGLimits};
use apdr::geometry::{point, Ball, BoxSet, Ellipsoid, HalfSpace, SymmetricPd, VertexPolytope};
use apdr::harness::{self, Row};
use apdr::problem_file::ProblemFile;
use apdr::properties::{run_suite, SuiteConfig};
use apdr::{ApDRConfig, ApDRTrace, ForcingSchedule, Point, ProblemInstance, ProjectionMode, Status};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

fn err(e: apdr::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn vec_of(p: &Point) -> Vec<f64> {
    p.as_slice().to_vec()
}

fn default_mode(set: &apdr::ConvexSet) -> ProjectionMode {
    if set.has_closed_form_projection() {
        ProjectionMode::ClosedForm
    } else {
        ProjectionMode::Inexact
    }
}

#[pyclass(name = "ConvexSet", module = "apdr_py", from_py_object)]
#[derive(Clone)]
struct PySet {
    inner: apdr::ConvexSet,
}

#[pymethods]
impl PySet {
    /// Ellipsoid from semi-axes, with an optional planar rotation in radians.
    #[staticmethod]
    #[pyo3(signature = (center, axes, rotation=None))]
    fn ellipsoid(center: Vec<f64>, axes: Vec<f64>, rotation: Option<f64>) -> PyResult<Self> {
        let e = Ellipsoid::from_axes(point(&center), &axes, rotation).map_err(err)?;
        Ok(PySet { inner: e.into() })
    }

    /// `{x : (x - c)^T shape (x - c) <= 1}`.
    #[staticmethod]
    fn ellipsoid_from_shape(center: Vec<f64>, shape: Vec<Vec<f64>>) -> PyResult<Self> {
        let n = shape.len();
        if shape.iter().any(|r| r.len() != n) {
            return Err(PyValueError::new_err("shape must be a square matrix"));
        }
        let m = nalgebra::DMatrix::from_fn(n, n, |i, j| shape[i][j]);
        let e = Ellipsoid::new(point(&center), SymmetricPd::new(m).map_err(err)?).map_err(err)?;
        Ok(PySet { inner: e.into() })
    }

    /// `{x : <normal, x> >= offset}`.
    #[staticmethod]
    fn half_space(normal: Vec<f64>, offset: f64) -> PyResult<Self> {
        let h = HalfSpace::new(point(&normal), offset).map_err(err)?;
        Ok(PySet { inner: h.into() })
    }

    #[staticmethod]
    fn ball(center: Vec<f64>, radius: f64) -> PyResult<Self> {
        let b = Ball::new(point(&center), radius).map_err(err)?;
        Ok(PySet { inner: b.into() })
    }

    #[staticmethod]
    #[pyo3(name = "box")]
    fn boxed(lower: Vec<f64>, upper: Vec<f64>) -> PyResult<Self> {
        let b = BoxSet::new(point(&lower), point(&upper)).map_err(err)?;
        Ok(PySet { inner: b.into() })
    }

    #[staticmethod]
    fn polytope(vertices: Vec<Vec<f64>>) -> PyResult<Self> {
        let p = VertexPolytope::new(vertices.iter().map(|v| point(v)).collect()).map_err(err)?;
        Ok(PySet { inner: p.into() })
    }

    #[getter]
    fn kind(&self) -> &'static str {
        self.inner.kind()
    }

    #[getter]
    fn dim(&self) -> usize {
        self.inner.dim()
    }

    #[pyo3(signature = (x, tol=1e-9))]
    fn contains(&self, x: Vec<f64>, tol: f64) -> bool {
        self.inner.contains(&point(&x), tol)
    }

    /// A minimizer of `<c, z>` over the set.
    fn lo_oracle(&self, c: Vec<f64>) -> PyResult<Vec<f64>> {
        self.inner.lo_oracle(&point(&c)).map(|z| vec_of(&z)).map_err(err)
    }

    fn support_value(&self, c: Vec<f64>) -> PyResult<f64> {
        self.inner.support_value(&point(&c)).map_err(err)
    }

    /// Nearest point. Sets without a closed form are handled by conditional
    /// gradient run to the duality gap `gap_tol`.
    #[pyo3(signature = (u, gap_tol=1e-12))]
    fn project(&self, u: Vec<f64>, gap_tol: f64) -> PyResult<Vec<f64>> {
        let limits = CondGLimits::default();
        let proj = apdr::Projector::new(&self.inner, ProjectionMode::exact_for(&self.inner, gap_tol), &limits);
        proj.project(&point(&u)).map(|p| vec_of(&p.point)).map_err(err)
    }

    /// Conditional-gradient inexact projection of `u`, warm-started at `y`,
    /// with tolerance `epsilon |y - v|^2`. Returns
    /// `(point, inner_iterations, converged)`.
    fn inexact_project(
        &self,
        u: Vec<f64>,
        y: Vec<f64>,
        v: Vec<f64>,
        epsilon: f64,
    ) -> PyResult<(Vec<f64>, usize, bool)> {
        let res = condg_project(
            &self.inner,
            &point(&u),
            &point(&y),
            &point(&v),
            epsilon,
            &CondGLimits::default(),
        )
        .map_err(err)?;
        Ok((vec_of(&res.point), res.inner_iters, res.converged))
    }

    fn __repr__(&self) -> String {
        format!("ConvexSet({:?})", self.inner)
    }
}

#[pyclass(name = "Trace", module = "apdr_py", frozen)]
struct PyTrace {
    inner: ApDRTrace,
}

#[pymethods]
impl PyTrace {
    #[getter]
    fn status(&self) -> &'static str {
        match self.inner.status {
            Status::Converged => "converged",
            Status::StoppedExact => "stopped_exact",
            Status::MaxOuterReached => "max_outer_reached",
        }
    }

    #[getter]
    fn iterations(&self) -> usize {
        self.inner.iterations()
    }

    #[getter]
    fn first_hit_k(&self) -> Option<usize> {
        self.inner.first_hit_k
    }

    #[getter]
    fn final_residual(&self) -> f64 {
        self.inner.final_residual()
    }

    #[getter]
    fn final_x(&self) -> Vec<f64> {
        self.inner.final_x.clone()
    }

    #[getter]
    fn final_shadow(&self) -> Option<Vec<f64>> {
        self.inner.final_shadow().map(|p| vec_of(&p))
    }

    #[getter]
    fn residuals(&self) -> Vec<f64> {
        self.inner.records.iter().map(|r| r.residual).collect()
    }

    /// `x^1, ..., x^{K+1}`.
    #[getter]
    fn x_path(&self) -> Vec<Vec<f64>> {
        self.inner.x_path().iter().map(vec_of).collect()
    }

    #[getter]
    fn shadow_a(&self) -> Vec<Vec<f64>> {
        self.inner.records.iter().map(|r| r.ya.clone()).collect()
    }

    #[getter]
    fn shadow_b(&self) -> Vec<Vec<f64>> {
        self.inner.records.iter().map(|r| r.yb.clone()).collect()
    }

    fn to_csv(&self) -> PyResult<String> {
        harness::trace_csv(&self.inner.records).map_err(err)
    }

    fn __repr__(&self) -> String {
        format!(
            "Trace(status={}, iterations={}, final_residual={:e})",
            self.status(),
            self.iterations(),
            self.final_residual()
        )
    }
}

#[pyclass(name = "Problem", module = "apdr_py", frozen)]
struct PyProblem {
    inner: ProblemInstance,
}

#[pymethods]
impl PyProblem {
    #[getter]
    fn name(&self) -> String {
        self.inner.name.clone()
    }

    #[getter]
    fn set_a(&self) -> PySet {
        PySet {
            inner: self.inner.set_a.clone(),
        }
    }

    #[getter]
    fn set_b(&self) -> PySet {
        PySet {
            inner: self.inner.set_b.clone(),
        }
    }

    #[getter]
    fn start(&self) -> Vec<f64> {
        vec_of(&self.inner.start)
    }

    /// The inexact method at constant `epsilon`, or classical
    /// Douglas-Rachford when `epsilon` is `None`.
    #[pyo3(signature = (epsilon=None, gap_tol=harness::EXACT_GAP_TOL))]
    fn solve(&self, epsilon: Option<f64>, gap_tol: f64) -> PyResult<PyTrace> {
        let row = epsilon.map_or(Row::Exact, Row::Epsilon);
        let inner = harness::run_row(&self.inner, row, gap_tol).map_err(err)?;
        Ok(PyTrace { inner })
    }

    fn __repr__(&self) -> String {
        format!("Problem({})", self.inner.name)
    }
}

/// Solves the feasibility problem for `set_a` and `set_b` from `start`.
///
/// With `epsilon=None` this is classical Douglas-Rachford. Otherwise the
/// inexact method runs with `eps_k = epsilon` and `delta_k = delta`, where
/// `delta` defaults to `epsilon` when `set_b` has no closed-form projection.
#[pyfunction]
#[pyo3(signature = (set_a, set_b, start, epsilon=None, delta=None, residual_sq_tol=1e-6, max_outer=10_000, gap_tol=harness::EXACT_GAP_TOL))]
#[allow(clippy::too_many_arguments)]
fn solve(
    set_a: &PySet,
    set_b: &PySet,
    start: Vec<f64>,
    epsilon: Option<f64>,
    delta: Option<f64>,
    residual_sq_tol: f64,
    max_outer: usize,
    gap_tol: f64,
) -> PyResult<PyTrace> {
    let problem = ProblemInstance {
        name: "problem".into(),
        mode_a: default_mode(&set_a.inner),
        mode_b: default_mode(&set_b.inner),
        set_a: set_a.inner.clone(),
        set_b: set_b.inner.clone(),
        start: point(&start),
    };
    let mut config = ApDRConfig {
        residual_sq_tol,
        max_outer,
        exact_gap_tol: gap_tol,
        ..Default::default()
    };
    let inner = match epsilon {
        None => apdr::solve_exact_dr(&problem, &config),
        Some(eps) => {
            let d = delta.unwrap_or(if problem.mode_b == ProjectionMode::Inexact {
                eps
            } else {
                0.0
            });
            config.eps_a = ForcingSchedule::Constant(eps);
            config.eps_b = ForcingSchedule::Constant(d);
            apdr::solve(&problem, &config)
        }
    }
    .map_err(err)?;
    Ok(PyTrace { inner })
}

/// The four benchmark instances `E2`, `E3`, `H1`, `H2`.
#[pyfunction]
fn paper_problems() -> Vec<PyProblem> {
    harness::paper_problems()
        .into_iter()
        .map(|inner| PyProblem { inner })
        .collect()
}

/// Reads a TOML problem file.
#[pyfunction]
fn load_problem(path: std::path::PathBuf) -> PyResult<PyProblem> {
    let (inner, _) = ProblemFile::load(&path).and_then(|f| f.instance()).map_err(err)?;
    Ok(PyProblem { inner })
}

/// One dict per (row, problem) with iteration counts, the first
/// intersection hit and the published counterpart.
#[pyfunction]
#[pyo3(signature = (epsilons=harness::EPSILONS.to_vec(), gap_tol=harness::EXACT_GAP_TOL))]
fn reproduce_table1<'py>(py: Python<'py>, epsilons: Vec<f64>, gap_tol: f64) -> PyResult<Vec<Bound<'py, PyDict>>> {
    let report = harness::reproduce_table1(&epsilons, gap_tol).map_err(err)?;
    report
        .cells
        .iter()
        .map(|c| {
            let d = PyDict::new(py);
            d.set_item("problem", &c.problem)?;
            d.set_item("row", c.row.to_string())?;
            d.set_item("iterations", c.outer_iters)?;
            d.set_item("first_hit_k", c.first_hit_k)?;
            d.set_item("final_residual", c.final_residual)?;
            let published = harness::published_count(&c.problem, c.row);
            d.set_item("published_iterations", published.map(|p| p.iters))?;
            d.set_item("published_hit", published.and_then(|p| p.hit))?;
            Ok(d)
        })
        .collect()
}

type PropertyRow = (String, usize, usize, f64, f64, bool);

/// Runs the property suite and returns
/// `(name, checked, failures, max_violation, tolerance, passed)` rows.
#[pyfunction]
#[pyo3(signature = (seed=0, instances=1000))]
fn verify(seed: u64, instances: usize) -> PyResult<Vec<PropertyRow>> {
    let report = run_suite(&SuiteConfig {
        seed,
        instances,
        force_failure: false,
    })
    .map_err(err)?;
    Ok(report
        .outcomes
        .iter()
        .map(|o| {
            (
                o.name.to_string(),
                o.checked,
                o.failures,
                o.max_violation,
                o.tolerance,
                o.passed() || o.informational,
            )
        })
        .collect())
}

#[pymodule]
fn apdr_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PySet>()?;
    m.add_class::<PyTrace>()?;
    m.add_class::<PyProblem>()?;
    m.add_function(wrap_pyfunction!(solve, m)?)?;
    m.add_function(wrap_pyfunction!(paper_problems, m)?)?;
    m.add_function(wrap_pyfunction!(load_problem, m)?)?;
    m.add_function(wrap_pyfunction!(reproduce_table1, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    Ok(())
}
