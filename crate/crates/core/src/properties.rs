//! Seeded randomized checks of the inequalities behind the method.
//!
//! Every property draws its instances from its own ChaCha stream of a
//! single seed, so a run is reproducible from that seed alone. Each
//! property reports the largest observed violation, measured so that the
//! property holds iff the violation is at most the stated tolerance.

use nalgebra::DMatrix;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::condg::{
    condg_iterates, condg_project, emulate_exact_projection, verify_feasible_inexact_projection, CondGLimits,
};
use crate::error::Result;
use crate::geometry::{Ball, BoxSet, ConvexSet, Ellipsoid, HalfSpace, Point, SymmetricPd, VertexPolytope, FEAS_TOL};
use crate::harness::{paper_problems, run_row, Row, EPSILONS, EXACT_GAP_TOL};
use crate::operators::{dr_operator, idr_step, ProjectionMode, Projector};
use crate::solver::{
    fejer_certificate, fixed_point_reference, shadow_limit_check, solve, ApDRConfig, ApDRTrace, ProblemInstance,
};

/// Gap used for reference projections onto sets without a closed form.
pub const REFERENCE_GAP: f64 = 1e-12;
/// Stationarity required of reference fixed points.
pub const FIXED_POINT_TOL: f64 = 1e-10;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SuiteConfig {
    pub seed: u64,
    pub instances: usize,
    /// Perturb computed projections before they are checked.
    pub force_failure: bool,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            seed: 0,
            instances: 1000,
            force_failure: false,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PropertyOutcome {
    pub name: &'static str,
    pub checked: usize,
    pub failures: usize,
    pub max_violation: f64,
    pub tolerance: f64,
    /// Reported for context; does not decide the suite.
    pub informational: bool,
}

impl PropertyOutcome {
    pub fn passed(&self) -> bool {
        self.failures == 0 && self.checked > 0
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SuiteReport {
    pub seed: u64,
    pub instances: usize,
    pub outcomes: Vec<PropertyOutcome>,
}

impl SuiteReport {
    pub fn all_passed(&self) -> bool {
        self.outcomes
            .iter()
            .filter(|o| !o.informational)
            .all(PropertyOutcome::passed)
    }

    pub fn get(&self, name: &str) -> Option<&PropertyOutcome> {
        self.outcomes.iter().find(|o| o.name == name)
    }
}

struct Tally(PropertyOutcome);

impl Tally {
    fn new(name: &'static str, tolerance: f64) -> Self {
        Tally(PropertyOutcome {
            name,
            checked: 0,
            failures: 0,
            max_violation: f64::NEG_INFINITY,
            tolerance,
            informational: false,
        })
    }

    fn informational(mut self) -> Self {
        self.0.informational = true;
        self
    }

    fn record(&mut self, violation: f64) {
        let o = &mut self.0;
        o.checked += 1;
        let v = if violation.is_nan() { f64::INFINITY } else { violation };
        o.max_violation = o.max_violation.max(v);
        if !(v <= o.tolerance) {
            o.failures += 1;
        }
    }

    fn fail(&mut self) {
        self.record(f64::INFINITY);
    }

    fn check(&mut self, ok: bool) {
        self.record(if ok { 0.0 } else { 1.0 });
    }

    fn done(self) -> PropertyOutcome {
        self.0
    }
}

fn stream(seed: u64, id: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(id);
    rng
}

fn reference_limits() -> CondGLimits {
    CondGLimits {
        max_inner: 200_000,
        ..CondGLimits::default()
    }
}

/// Random instance generators.
pub mod gen {
    use super::*;

    pub fn vector(rng: &mut impl Rng, n: usize, lo: f64, hi: f64) -> Point {
        Point::from_fn(n, |_, _| rng.random_range(lo..hi))
    }

    pub fn unit(rng: &mut impl Rng, n: usize) -> Point {
        loop {
            let v = vector(rng, n, -1.0, 1.0);
            let norm = v.norm();
            if norm > 1e-3 && norm <= 1.0 {
                return v / norm;
            }
        }
    }

    pub fn dim(rng: &mut impl Rng) -> usize {
        rng.random_range(2..=4)
    }

    fn orthogonal(rng: &mut impl Rng, n: usize) -> DMatrix<f64> {
        DMatrix::from_fn(n, n, |_, _| rng.random_range(-1.0..1.0)).qr().q()
    }

    /// Ellipsoid with semi-axes in `[0.2, 2]` and random orientation.
    pub fn ellipsoid(rng: &mut impl Rng, center: Point) -> Ellipsoid {
        let n = center.len();
        let (shape, _, _) = oriented_shape(rng, n);
        Ellipsoid::new(center, shape).expect("random ellipsoid is valid")
    }

    fn oriented_shape(rng: &mut impl Rng, n: usize) -> (SymmetricPd, DMatrix<f64>, Vec<f64>) {
        let q = orthogonal(rng, n);
        let axes: Vec<f64> = (0..n).map(|_| rng.random_range(0.2..2.0)).collect();
        let d = DMatrix::from_diagonal(&Point::from_iterator(n, axes.iter().map(|a| 1.0 / (a * a))));
        let m = &q * d * q.transpose();
        let m = (&m + m.transpose()) * 0.5;
        (SymmetricPd::new(m).expect("random shape is positive definite"), q, axes)
    }

    pub fn ball(rng: &mut impl Rng, center: Point) -> Ball {
        Ball::new(center, rng.random_range(0.2..2.0)).expect("random ball is valid")
    }

    pub fn boxed(rng: &mut impl Rng, center: Point) -> BoxSet {
        let n = center.len();
        let half = vector(rng, n, 0.1, 1.5);
        BoxSet::new(&center - &half, &center + &half).expect("random box is valid")
    }

    pub fn polytope(rng: &mut impl Rng, center: Point) -> VertexPolytope {
        let n = center.len();
        let count = rng.random_range(n + 1..=n + 6);
        let vertices = (0..count).map(|_| &center + vector(rng, n, -1.5, 1.5)).collect();
        VertexPolytope::new(vertices).expect("random polytope is valid")
    }

    /// Ellipsoid, ball, box or (with `polytopes`) vertex polytope.
    pub fn compact(rng: &mut impl Rng, n: usize, polytopes: bool) -> ConvexSet {
        let c = vector(rng, n, -2.0, 2.0);
        match rng.random_range(0..if polytopes { 4 } else { 3 }) {
            0 => ellipsoid(rng, c).into(),
            1 => ball(rng, c).into(),
            2 => boxed(rng, c).into(),
            _ => polytope(rng, c).into(),
        }
    }

    /// A compact set with `p` strictly inside.
    pub fn compact_containing(rng: &mut impl Rng, p: &Point, allow_ellipsoid: bool) -> ConvexSet {
        let n = p.len();
        match rng.random_range(0..if allow_ellipsoid { 3 } else { 2 }) {
            0 => {
                let b = ball(rng, p.clone());
                let shift = unit(rng, n) * (b.radius * rng.random_range(0.0..0.8));
                Ball::new(p + shift, b.radius).unwrap().into()
            }
            1 => {
                let half = vector(rng, n, 0.2, 1.5);
                let shift = Point::from_fn(n, |i, _| half[i] * rng.random_range(-0.8..0.8));
                let c = p + shift;
                BoxSet::new(&c - &half, &c + &half).unwrap().into()
            }
            _ => {
                let (shape, q, axes) = oriented_shape(rng, n);
                let s = unit(rng, n) * rng.random_range(0.0..0.8);
                let local = Point::from_fn(n, |i, _| axes[i] * s[i]);
                Ellipsoid::new(p + q * local, shape).unwrap().into()
            }
        }
    }

    /// A set with `p` strictly inside, possibly an unbounded half-space.
    pub fn set_containing(rng: &mut impl Rng, p: &Point, allow_ellipsoid: bool) -> ConvexSet {
        if rng.random_bool(0.3) {
            let normal = unit(rng, p.len());
            let offset = normal.dot(p) - rng.random_range(0.05..1.0);
            HalfSpace::new(normal, offset).unwrap().into()
        } else {
            compact_containing(rng, p, allow_ellipsoid)
        }
    }

    /// A random member of a compact set.
    pub fn member(rng: &mut impl Rng, set: &ConvexSet) -> Point {
        if let ConvexSet::Polytope(poly) = set {
            let w: Vec<f64> = poly.vertices.iter().map(|_| rng.random::<f64>() + 1e-3).collect();
            let total: f64 = w.iter().sum();
            let mut acc = Point::zeros(set.dim());
            for (v, wi) in poly.vertices.iter().zip(&w) {
                acc += v * (wi / total);
            }
            return acc;
        }
        let base = set.canonical_point();
        let z = set.lo_oracle(&unit(rng, set.dim())).expect("compact set");
        &base + (z - &base) * rng.random::<f64>()
    }

    /// A pair of sets sharing an interior point, with A compact. Modes are
    /// closed form where available and conditional gradient otherwise,
    /// except that A is always projected by conditional gradient.
    pub fn intersecting_pair(rng: &mut impl Rng, allow_ellipsoids: bool) -> ProblemInstance {
        let n = dim(rng);
        let p = vector(rng, n, -1.0, 1.0);
        let set_a = compact_containing(rng, &p, allow_ellipsoids);
        let set_b = set_containing(rng, &p, allow_ellipsoids);
        let mode_b = if set_b.has_closed_form_projection() {
            ProjectionMode::ClosedForm
        } else {
            ProjectionMode::Inexact
        };
        ProblemInstance {
            name: "random".into(),
            start: vector(rng, n, -4.0, 4.0),
            set_a,
            set_b,
            mode_a: ProjectionMode::Inexact,
            mode_b,
        }
    }
}

/// Closed-form projection when the set has one, otherwise conditional
/// gradient run to [`REFERENCE_GAP`].
pub fn reference_projection(set: &ConvexSet, u: &Point) -> Result<Point> {
    if set.has_closed_form_projection() {
        set.exact_project(u)
    } else {
        Ok(emulate_exact_projection(set, u, REFERENCE_GAP, &reference_limits())?
            .ensure_converged()?
            .point)
    }
}

fn perturbed(p: Point, on: bool) -> Point {
    if on {
        let mut q = p;
        q[0] -= 1.0;
        q
    } else {
        p
    }
}

fn forcing(rng: &mut impl Rng) -> f64 {
    rng.random_range(0.01..0.49)
}

/// Iterate feasibility, monotone distance, the one-oracle certificate and
/// termination of the conditional-gradient projection.
fn condg_properties(cfg: &SuiteConfig, out: &mut Vec<PropertyOutcome>) -> Result<()> {
    let mut rng = stream(cfg.seed, 1);
    let limits = CondGLimits::default();
    let mut feasible = Tally::new("condg_iterates_feasible", FEAS_TOL);
    let mut monotone = Tally::new("condg_monotone_distance", 1e-12);
    let mut certificate = Tally::new("inexact_projection_certificate", 1e-12);
    let mut terminates = Tally::new("condg_terminates", 0.0);
    for _ in 0..cfg.instances {
        let n = gen::dim(&mut rng);
        let set = gen::compact(&mut rng, n, true);
        let u = gen::vector(&mut rng, n, -5.0, 5.0);
        let y = gen::member(&mut rng, &set);
        let v = gen::vector(&mut rng, n, -3.0, 3.0);
        let eps = forcing(&mut rng);

        let (res, iterates) = condg_iterates(&set, &u, &y, &v, eps, &limits)?;
        feasible.record(
            iterates
                .iter()
                .map(|w| set.violation(w))
                .fold(f64::NEG_INFINITY, f64::max),
        );
        monotone.record(
            iterates
                .windows(2)
                .map(|w| (&w[1] - &u).norm() - (&w[0] - &u).norm())
                .fold(0.0, f64::max),
        );
        terminates.check(res.converged);

        let direct = condg_project(&set, &u, &y, &v, eps, &limits)?;
        let yplus = perturbed(direct.point, cfg.force_failure);
        let cert = verify_feasible_inexact_projection(&set, &u, &yplus, direct.threshold)?;
        certificate.record(cert.max_violation - direct.threshold);
    }
    out.extend([feasible.done(), monotone.done(), certificate.done(), terminates.done()]);
    Ok(())
}

/// With zero forcing the conditional-gradient projection onto a ball agrees
/// with the closed form.
fn zero_forcing_recovery(cfg: &SuiteConfig, out: &mut Vec<PropertyOutcome>) -> Result<()> {
    let mut rng = stream(cfg.seed, 2);
    let limits = CondGLimits {
        abs_gap_floor: 1e-10,
        ..reference_limits()
    };
    let mut t = Tally::new("zero_forcing_recovers_projection", 1e-4);
    for _ in 0..cfg.instances {
        let n = gen::dim(&mut rng);
        let c = gen::vector(&mut rng, n, -2.0, 2.0);
        let set: ConvexSet = gen::ball(&mut rng, c).into();
        let u = gen::vector(&mut rng, n, -5.0, 5.0);
        let y = gen::member(&mut rng, &set);
        let v = gen::vector(&mut rng, n, -3.0, 3.0);
        let w = condg_project(&set, &u, &y, &v, 0.0, &limits)?.point;
        let w = perturbed(w, cfg.force_failure);
        t.record((w - set.exact_project(&u)?).norm());
    }
    out.push(t.done());
    Ok(())
}

/// Distance of an inexact projection to the exact one.
fn distance_bound(cfg: &SuiteConfig, out: &mut Vec<PropertyOutcome>) -> Result<()> {
    let mut rng = stream(cfg.seed, 3);
    let limits = CondGLimits::default();
    let mut t = Tally::new("inexact_projection_distance_bound", 1e-4);
    for _ in 0..cfg.instances {
        let n = gen::dim(&mut rng);
        let c = gen::vector(&mut rng, n, -2.0, 2.0);
        let set: ConvexSet = if rng.random_bool(0.5) {
            gen::ball(&mut rng, c).into()
        } else {
            gen::ellipsoid(&mut rng, c).into()
        };
        let u = gen::vector(&mut rng, n, -5.0, 5.0);
        let y = gen::member(&mut rng, &set);
        let v = gen::vector(&mut rng, n, -3.0, 3.0);
        let eps = forcing(&mut rng);
        let yplus = perturbed(condg_project(&set, &u, &y, &v, eps, &limits)?.point, cfg.force_failure);
        let p = reference_projection(&set, &u)?;
        t.record((yplus - p).norm() - (2.0 * eps).sqrt() * (&y - &v).norm());
    }
    out.push(t.done());
    Ok(())
}

/// Firm-nonexpansiveness and reflection counterparts for a single inexact
/// projection against an exact one.
fn nonexpansive_counterparts(cfg: &SuiteConfig, out: &mut Vec<PropertyOutcome>) -> Result<()> {
    let mut rng = stream(cfg.seed, 4);
    let limits = CondGLimits::default();
    let mut proj = Tally::new("inexact_projection_firm_nonexpansive", 1e-6);
    let mut refl = Tally::new("inexact_reflection_nonexpansive", 1e-6);
    for _ in 0..cfg.instances {
        let n = gen::dim(&mut rng);
        let set = gen::compact(&mut rng, n, false);
        let u = gen::vector(&mut rng, n, -5.0, 5.0);
        let wbar = gen::vector(&mut rng, n, -5.0, 5.0);
        let y = gen::member(&mut rng, &set);
        let v = gen::vector(&mut rng, n, -3.0, 3.0);
        let eps = forcing(&mut rng);
        let yplus = perturbed(condg_project(&set, &u, &y, &v, eps, &limits)?.point, cfg.force_failure);
        let xbar = reference_projection(&set, &wbar)?;
        let slack = eps * (&y - &v).norm_squared();

        let lhs = (&yplus - &xbar).norm_squared();
        let rhs = (&u - &wbar).norm_squared() - ((&u - &yplus) - (&wbar - &xbar)).norm_squared() + 2.0 * slack;
        proj.record(lhs - rhs);

        let r_in = &yplus * 2.0 - &u;
        let r_ex = &xbar * 2.0 - &wbar;
        refl.record((r_in - r_ex).norm_squared() - (&u - &wbar).norm_squared() - 4.0 * slack);
    }
    out.extend([proj.done(), refl.done()]);
    Ok(())
}

fn modes_projectors<'a>(p: &'a ProblemInstance, limits: &'a CondGLimits) -> (Projector<'a>, Projector<'a>) {
    (
        Projector::new(&p.set_a, p.mode_a, limits),
        Projector::new(&p.set_b, p.mode_b, limits),
    )
}

/// One inexact step against a fixed point of the exact operator.
fn step_against_fixed_point(cfg: &SuiteConfig, out: &mut Vec<PropertyOutcome>) -> Result<()> {
    let mut rng = stream(cfg.seed, 5);
    let limits = CondGLimits::default();
    let mut t = Tally::new("idr_step_quasi_fejer", 1e-6);
    for _ in 0..cfg.instances {
        let with_ellipsoids = rng.random_bool(0.25);
        let p = gen::intersecting_pair(&mut rng, with_ellipsoids);
        let n = p.start.len();
        let x = gen::vector(&mut rng, n, -4.0, 4.0);
        let ya = gen::member(&mut rng, &p.set_a);
        let yb = if p.set_b.is_compact() {
            gen::member(&mut rng, &p.set_b)
        } else {
            p.set_b.exact_project(&gen::vector(&mut rng, n, -2.0, 2.0))?
        };
        let eps = rng.random_range(0.0..0.245);
        let delta = if p.mode_b == ProjectionMode::Inexact {
            rng.random_range(0.0..0.245)
        } else {
            0.0
        };
        let from = gen::vector(&mut rng, n, -4.0, 4.0);
        let est = fixed_point_reference(&p, &from, REFERENCE_GAP, FIXED_POINT_TOL, 100_000, &reference_limits())?;
        if !est.is_within(FIXED_POINT_TOL) {
            t.fail();
            continue;
        }
        let xbar = est.point;
        let (a, b) = modes_projectors(&p, &limits);
        let step = idr_step(&a, &b, &x, &ya, &yb, eps, delta)?;
        let xplus = perturbed(step.x_next, cfg.force_failure);
        let lhs = (&xplus - &xbar).norm_squared();
        let rhs = (&x - &xbar).norm_squared() - (&x - &xplus).norm_squared()
            + 2.0 * (eps + delta) * (&ya - &yb).norm_squared();
        t.record(lhs - rhs);
    }
    out.push(t.done());
    Ok(())
}

/// Zero forcing reduces one inexact step to the classical operator.
fn zero_forcing_step(cfg: &SuiteConfig, out: &mut Vec<PropertyOutcome>) -> Result<()> {
    let mut rng = stream(cfg.seed, 6);
    let limits = reference_limits();
    let mut closed = Tally::new("zero_forcing_step_closed_form", 1e-12);
    let mut emulated = Tally::new("zero_forcing_step_emulated", 1e-4);
    for _ in 0..cfg.instances {
        let n = gen::dim(&mut rng);
        let x = gen::vector(&mut rng, n, -4.0, 4.0);

        let p = gen::vector(&mut rng, n, -1.0, 1.0);
        let set_a = loop {
            let s = gen::set_containing(&mut rng, &p, false);
            if s.has_closed_form_projection() {
                break s;
            }
        };
        let set_b = gen::set_containing(&mut rng, &p, false);
        let (a, b) = (
            Projector::new(&set_a, ProjectionMode::ClosedForm, &limits),
            Projector::new(&set_b, ProjectionMode::ClosedForm, &limits),
        );
        let ya = set_a.exact_project(&gen::vector(&mut rng, n, -2.0, 2.0))?;
        let yb = set_b.exact_project(&gen::vector(&mut rng, n, -2.0, 2.0))?;
        let step = idr_step(&a, &b, &x, &ya, &yb, 0.0, 0.0)?;
        let reference = dr_operator(&a, &b, &x)?;
        closed.record((perturbed(step.x_next, cfg.force_failure) - reference).amax());

        let c = gen::vector(&mut rng, n, -1.0, 1.0);
        let ea: ConvexSet = gen::ellipsoid(&mut rng, c).into();
        let c = gen::vector(&mut rng, n, -1.0, 1.0);
        let eb: ConvexSet = gen::ellipsoid(&mut rng, c).into();
        let ya = gen::member(&mut rng, &ea);
        let yb = gen::member(&mut rng, &eb);
        let inexact = idr_step(
            &Projector::new(&ea, ProjectionMode::Inexact, &limits),
            &Projector::new(&eb, ProjectionMode::Inexact, &limits),
            &x,
            &ya,
            &yb,
            0.0,
            0.0,
        )?;
        let emu = ProjectionMode::Emulated { gap_tol: REFERENCE_GAP };
        let reference = dr_operator(
            &Projector::new(&ea, emu, &limits),
            &Projector::new(&eb, emu, &limits),
            &x,
        )?;
        emulated.record((perturbed(inexact.x_next, cfg.force_failure) - reference).amax());
    }
    out.extend([closed.done(), emulated.done()]);
    Ok(())
}

/// Configurations outside `2 (eps + delta) < 1` are rejected, the others
/// accepted.
fn forcing_guard(cfg: &SuiteConfig, out: &mut Vec<PropertyOutcome>) {
    let mut rng = stream(cfg.seed, 7);
    let mut t = Tally::new("forcing_parameter_guard", 0.0);
    for _ in 0..cfg.instances {
        let eps = rng.random_range(0.0..0.6);
        let delta = rng.random_range(0.0..0.6);
        let c = ApDRConfig {
            eps_a: crate::solver::ForcingSchedule::Constant(eps),
            eps_b: crate::solver::ForcingSchedule::Constant(delta),
            ..Default::default()
        };
        let rejected = c.validate().is_err();
        t.check(rejected == (2.0 * (eps + delta) >= 1.0) && !cfg.force_failure);
    }
    out.push(t.done());
}

struct RunTallies {
    update: Tally,
    shadows: Tally,
    decay: Tally,
    fejer: Tally,
    stationarity: Tally,
    limit: Tally,
}

impl RunTallies {
    fn new(prefix: bool) -> Self {
        let pick = |random: &'static str, paper: &'static str| if prefix { paper } else { random };
        RunTallies {
            update: Tally::new(pick("update_identity", "paper_update_identity"), 0.0),
            shadows: Tally::new(
                pick("shadow_iterates_feasible", "paper_shadow_iterates_feasible"),
                FEAS_TOL,
            ),
            decay: Tally::new(pick("residual_decay", "paper_residual_decay"), 0.0),
            fejer: Tally::new(
                pick("fejer_merit_nonincreasing", "paper_fejer_merit_nonincreasing"),
                1e-6,
            ),
            // The benchmark E1 and E3 miss each other by about 5e-8, so no
            // exact fixed point exists there and the best reference is only
            // approximately stationary.
            stationarity: if prefix {
                Tally::new("paper_fixed_point_reference", FIXED_POINT_TOL).informational()
            } else {
                Tally::new("fixed_point_reference", FIXED_POINT_TOL)
            },
            limit: Tally::new(pick("final_shadow_feasible", "paper_final_shadow_feasible"), 1e-3),
        }
    }

    fn observe(&mut self, p: &ProblemInstance, cfg: &ApDRConfig, trace: &ApDRTrace, perturb: bool) -> Result<()> {
        self.update.record(trace.check_consistency());
        let worst = trace
            .records
            .iter()
            .map(|r| {
                p.set_a
                    .violation(&Point::from_vec(r.ya.clone()))
                    .max(p.set_b.violation(&Point::from_vec(r.yb.clone())))
            })
            .fold(f64::NEG_INFINITY, f64::max);
        self.shadows.record(worst);
        let converged = trace.status.is_success()
            && trace.final_residual() * trace.final_residual() < cfg.residual_sq_tol
            && trace.capped_projections == 0;
        self.decay.check(converged);
        if !converged {
            return Ok(());
        }
        let from = Point::from_vec(trace.final_x.clone());
        let est = fixed_point_reference(p, &from, REFERENCE_GAP, FIXED_POINT_TOL, 100_000, &reference_limits())?;
        self.stationarity.record(est.step);
        let xbar = perturbed(est.point, perturb);
        self.fejer
            .record(fejer_certificate(trace, &xbar, cfg.epsilon_bar(), 0.0).max_violation);
        let s = shadow_limit_check(trace, &p.set_a, &p.set_b).expect("converged trace is nonempty");
        self.limit
            .record(s.dist_to_a.max(s.dist_to_b) + if perturb { 1.0 } else { 0.0 });
        Ok(())
    }

    fn done(self, out: &mut Vec<PropertyOutcome>) {
        out.extend([
            self.update.done(),
            self.shadows.done(),
            self.decay.done(),
            self.fejer.done(),
            self.stationarity.done(),
            self.limit.done(),
        ]);
    }
}

/// Whole runs on random intersecting pairs.
fn random_runs(cfg: &SuiteConfig, out: &mut Vec<PropertyOutcome>) -> Result<()> {
    let mut rng = stream(cfg.seed, 8);
    let mut t = RunTallies::new(false);
    for _ in 0..cfg.instances {
        let with_ellipsoids = rng.random_bool(0.25);
        let p = gen::intersecting_pair(&mut rng, with_ellipsoids);
        let eps = rng.random_range(0.0..0.245);
        let config = ApDRConfig::with_epsilon(eps, p.mode_b);
        let trace = solve(&p, &config)?;
        t.observe(&p, &config, &trace, cfg.force_failure)?;
    }
    t.done(out);
    Ok(())
}

/// Whole runs on the four benchmark instances, inexact rows and exact row.
fn benchmark_runs(cfg: &SuiteConfig, out: &mut Vec<PropertyOutcome>) -> Result<()> {
    let mut t = RunTallies::new(true);
    let mut mixed = Tally::new("mixed_modes_converge", 0.0);
    for p in paper_problems() {
        for row in EPSILONS.map(Row::Epsilon).into_iter().chain([Row::Exact]) {
            let trace = run_row(&p, row, EXACT_GAP_TOL)?;
            let config = match row {
                Row::Epsilon(e) => ApDRConfig::with_epsilon(e, p.mode_b),
                Row::Exact => ApDRConfig::default(),
            };
            let instance = match row {
                Row::Exact => p.with_exact_modes(EXACT_GAP_TOL),
                _ => p.clone(),
            };
            t.observe(&instance, &config, &trace, cfg.force_failure)?;
            if p.mode_b == ProjectionMode::ClosedForm && matches!(row, Row::Epsilon(_)) {
                mixed.check(trace.status.is_success());
            }
        }
    }
    t.done(out);
    out.push(mixed.done());
    Ok(())
}

/// Runs every property with `cfg.instances` random instances each, plus the
/// fixed benchmark runs.
pub fn run_suite(cfg: &SuiteConfig) -> Result<SuiteReport> {
    let mut out = Vec::new();
    condg_properties(cfg, &mut out)?;
    zero_forcing_recovery(cfg, &mut out)?;
    distance_bound(cfg, &mut out)?;
    nonexpansive_counterparts(cfg, &mut out)?;
    step_against_fixed_point(cfg, &mut out)?;
    zero_forcing_step(cfg, &mut out)?;
    forcing_guard(cfg, &mut out);
    random_runs(cfg, &mut out)?;
    benchmark_runs(cfg, &mut out)?;
    Ok(SuiteReport {
        seed: cfg.seed,
        instances: cfg.instances,
        outcomes: out,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn members_are_members() {
        let mut rng = stream(7, 0);
        for _ in 0..200 {
            let n = gen::dim(&mut rng);
            let set = gen::compact(&mut rng, n, true);
            assert!(set.violation(&gen::member(&mut rng, &set)) <= FEAS_TOL);
            let p = gen::vector(&mut rng, n, -1.0, 1.0);
            assert!(gen::set_containing(&mut rng, &p, true).violation(&p) < 0.0);
        }
    }

    #[test]
    fn streams_are_deterministic() {
        let a: Vec<f64> = (0..5).map(|_| stream(3, 1).random()).collect();
        let b: Vec<f64> = (0..5).map(|_| stream(3, 1).random()).collect();
        assert_eq!(a, b);
        assert_ne!(stream(3, 1).random::<f64>(), stream(3, 2).random::<f64>());
    }

    #[test]
    fn small_suite_passes_and_fails_on_demand() {
        let cfg = SuiteConfig {
            seed: 11,
            instances: 20,
            force_failure: false,
        };
        let report = run_suite(&cfg).unwrap();
        for o in report.outcomes.iter().filter(|o| !o.informational) {
            assert!(o.passed(), "{o:?}");
        }
        let forced = run_suite(&SuiteConfig {
            force_failure: true,
            ..cfg
        })
        .unwrap();
        assert!(!forced.all_passed());
    }
}
