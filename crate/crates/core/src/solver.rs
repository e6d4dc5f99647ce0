//! The approximate Douglas-Rachford outer loop.
//!
//! Each outer step computes an inexact projection `y_A^k` of `x^k` onto A,
//! an inexact projection `y_B^k` of `2 y_A^k - x^k` onto B, both relative to
//! the previous shadow pair, and moves `x^{k+1} = x^k + y_B^k - y_A^k`.

use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::condg::CondGLimits;
use crate::error::{Error, Result};
use crate::geometry::{check_dim, check_finite, ConvexSet, Point};
use crate::operators::{dr_operator, idr_step, ProjectionMode, Projector};

/// Forcing parameters `eps_k` (or `delta_k`), indexed from `k = 1`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ForcingSchedule {
    Constant(f64),
    /// `values[k - 1]` for the first steps, then `tail`.
    Sequence {
        values: Vec<f64>,
        tail: f64,
    },
}

impl ForcingSchedule {
    pub fn value(&self, k: usize) -> f64 {
        match self {
            ForcingSchedule::Constant(v) => *v,
            ForcingSchedule::Sequence { values, tail } => values.get(k.saturating_sub(1)).copied().unwrap_or(*tail),
        }
    }

    pub fn supremum(&self) -> f64 {
        match self {
            ForcingSchedule::Constant(v) => *v,
            ForcingSchedule::Sequence { values, tail } => values.iter().copied().fold(*tail, f64::max),
        }
    }

    fn values(&self) -> impl Iterator<Item = f64> + '_ {
        let (head, tail): (&[f64], f64) = match self {
            ForcingSchedule::Constant(v) => (&[], *v),
            ForcingSchedule::Sequence { values, tail } => (values.as_slice(), *tail),
        };
        head.iter().copied().chain(std::iter::once(tail))
    }

    pub fn is_zero(&self) -> bool {
        self.values().all(|v| v == 0.0)
    }
}

/// Threshold applied to the inexact projections of the very first step.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FirstStep {
    /// The initial shadow points are accepted as soon as their gap has been
    /// evaluated, so `y^1 = y^0` for conditional-gradient sets.
    #[default]
    AcceptInitial,
    /// Use `eps_1 |y_A^0 - y_B^0|^2` like every later step.
    Relative,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ApDRConfig {
    pub eps_a: ForcingSchedule,
    pub eps_b: ForcingSchedule,
    /// Stop once `|y_A^k - y_B^k|^2 < residual_sq_tol`.
    pub residual_sq_tol: f64,
    pub max_outer: usize,
    pub condg: CondGLimits,
    /// Reject schedules with `sup 2 (eps_k + delta_k) >= 1`.
    pub epsilon_bar_check: bool,
    /// Membership tolerance for the intersection-hit record.
    pub hit_tol: f64,
    pub first_step: FirstStep,
    /// Gap used when an exact run has to emulate a projection.
    pub exact_gap_tol: f64,
}

impl Default for ApDRConfig {
    fn default() -> Self {
        ApDRConfig {
            eps_a: ForcingSchedule::Constant(0.0),
            eps_b: ForcingSchedule::Constant(0.0),
            residual_sq_tol: 1e-6,
            max_outer: 10_000,
            condg: CondGLimits::default(),
            epsilon_bar_check: true,
            hit_tol: 1e-9,
            first_step: FirstStep::AcceptInitial,
            exact_gap_tol: 1e-6,
        }
    }
}

impl ApDRConfig {
    /// Constant `eps` on A, and the same value on B when B is projected by
    /// conditional gradient (zero otherwise).
    pub fn with_epsilon(eps: f64, mode_b: ProjectionMode) -> Self {
        let delta = if mode_b == ProjectionMode::Inexact { eps } else { 0.0 };
        ApDRConfig {
            eps_a: ForcingSchedule::Constant(eps),
            eps_b: ForcingSchedule::Constant(delta),
            ..Default::default()
        }
    }

    /// `sup_k 2 (eps_k + delta_k)`.
    pub fn epsilon_bar(&self) -> f64 {
        let n = match (&self.eps_a, &self.eps_b) {
            (ForcingSchedule::Sequence { values: a, .. }, ForcingSchedule::Sequence { values: b, .. }) => {
                a.len().max(b.len())
            }
            (ForcingSchedule::Sequence { values, .. }, _) | (_, ForcingSchedule::Sequence { values, .. }) => {
                values.len()
            }
            _ => 0,
        };
        (1..=n + 1)
            .map(|k| 2.0 * (self.eps_a.value(k) + self.eps_b.value(k)))
            .fold(0.0, f64::max)
    }

    pub fn validate(&self) -> Result<()> {
        self.condg.validate()?;
        for (name, s) in [("eps_a", &self.eps_a), ("eps_b", &self.eps_b)] {
            if let Some(v) = s.values().find(|v| !(v.is_finite() && *v >= 0.0)) {
                return Err(Error::InvalidConfig(format!("{name} contains {v}, expected >= 0")));
            }
        }
        if self.epsilon_bar_check && self.epsilon_bar() >= 1.0 {
            return Err(Error::InvalidConfig(format!(
                "forcing parameters give sup 2(eps + delta) = {} >= 1",
                self.epsilon_bar()
            )));
        }
        if !(self.residual_sq_tol >= 0.0) {
            return Err(Error::InvalidConfig("residual_sq_tol must be >= 0".into()));
        }
        if self.max_outer == 0 {
            return Err(Error::InvalidConfig("max_outer must be at least 1".into()));
        }
        if !(self.hit_tol >= 0.0) || !(self.exact_gap_tol >= 0.0) {
            return Err(Error::InvalidConfig("tolerances must be >= 0".into()));
        }
        Ok(())
    }
}

/// Two sets, a start point and how each set is projected onto.
#[derive(Clone, Debug, PartialEq)]
pub struct ProblemInstance {
    pub name: String,
    pub set_a: ConvexSet,
    pub set_b: ConvexSet,
    pub start: Point,
    pub mode_a: ProjectionMode,
    pub mode_b: ProjectionMode,
}

impl ProblemInstance {
    pub fn validate(&self) -> Result<()> {
        let n = self.set_a.dim();
        check_dim(n, &self.start)?;
        check_finite(&self.start, "start point")?;
        if self.set_b.dim() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: self.set_b.dim(),
            });
        }
        self.mode_a.check_for(&self.set_a)?;
        self.mode_b.check_for(&self.set_b)?;
        Ok(())
    }

    /// Same sets, with every projection exact (closed form where available,
    /// emulated at `gap_tol` otherwise).
    pub fn with_exact_modes(&self, gap_tol: f64) -> Self {
        ProblemInstance {
            mode_a: ProjectionMode::exact_for(&self.set_a, gap_tol),
            mode_b: ProjectionMode::exact_for(&self.set_b, gap_tol),
            ..self.clone()
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct IterationRecord {
    pub k: usize,
    /// `x^k`, the point being projected at this step.
    pub x: Vec<f64>,
    pub ya: Vec<f64>,
    pub yb: Vec<f64>,
    pub residual: f64,
    pub inner_a: usize,
    pub inner_b: usize,
    pub wall_nanos: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Converged,
    /// The shadow points coincided exactly.
    StoppedExact,
    MaxOuterReached,
}

impl Status {
    pub fn is_success(&self) -> bool {
        !matches!(self, Status::MaxOuterReached)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ApDRTrace {
    pub records: Vec<IterationRecord>,
    /// `x^{K+1}` after the last recorded step.
    pub final_x: Vec<f64>,
    pub status: Status,
    pub first_hit_k: Option<usize>,
    /// Inner projections that stopped at the conditional-gradient cap.
    pub capped_projections: usize,
}

impl ApDRTrace {
    pub fn iterations(&self) -> usize {
        self.records.len()
    }

    pub fn final_residual(&self) -> f64 {
        self.records.last().map_or(f64::NAN, |r| r.residual)
    }

    pub fn final_shadow(&self) -> Option<Point> {
        self.records.last().map(|r| Point::from_vec(r.ya.clone()))
    }

    /// `x^1, ..., x^K, x^{K+1}`.
    pub fn x_path(&self) -> Vec<Point> {
        self.records
            .iter()
            .map(|r| Point::from_vec(r.x.clone()))
            .chain(std::iter::once(Point::from_vec(self.final_x.clone())))
            .collect()
    }

    pub fn total_nanos(&self) -> u64 {
        self.records.iter().map(|r| r.wall_nanos).sum()
    }

    /// Largest deviation from the stored-residual and update identities.
    pub fn check_consistency(&self) -> f64 {
        let mut worst = 0.0f64;
        let path = self.x_path();
        for (i, r) in self.records.iter().enumerate() {
            let ya = Point::from_vec(r.ya.clone());
            let yb = Point::from_vec(r.yb.clone());
            worst = worst.max(((&ya - &yb).norm() - r.residual).abs());
            let next = &path[i] + (&yb - &ya);
            worst = worst.max((next - &path[i + 1]).amax());
        }
        worst
    }
}

/// Runs the approximate Douglas-Rachford method.
pub fn solve(problem: &ProblemInstance, config: &ApDRConfig) -> Result<ApDRTrace> {
    problem.validate()?;
    config.validate()?;

    let a = Projector::new(&problem.set_a, problem.mode_a, &config.condg);
    let b = Projector::new(&problem.set_b, problem.mode_b, &config.condg);

    let mut x = problem.start.clone();
    let mut ya = problem.set_a.canonical_point();
    let mut yb = problem.set_b.canonical_point();
    let mut records = Vec::new();
    let mut first_hit_k = None;
    let mut status = Status::MaxOuterReached;
    let mut capped_projections = 0;

    for k in 1..=config.max_outer {
        let (eps, delta) = if k == 1 && config.first_step == FirstStep::AcceptInitial {
            (f64::INFINITY, f64::INFINITY)
        } else {
            (config.eps_a.value(k), config.eps_b.value(k))
        };
        let started = Instant::now();
        let step = idr_step(&a, &b, &x, &ya, &yb, eps, delta)?;
        let wall_nanos = started.elapsed().as_nanos() as u64;
        capped_projections += step.capped;

        if first_hit_k.is_none() {
            let in_both =
                |p: &Point| problem.set_a.contains(p, config.hit_tol) && problem.set_b.contains(p, config.hit_tol);
            if in_both(&step.ya_plus) || in_both(&step.yb_plus) {
                first_hit_k = Some(k);
            }
        }

        records.push(IterationRecord {
            k,
            x: x.as_slice().to_vec(),
            ya: step.ya_plus.as_slice().to_vec(),
            yb: step.yb_plus.as_slice().to_vec(),
            residual: step.residual,
            inner_a: step.inner_a,
            inner_b: step.inner_b,
            wall_nanos,
        });
        x = step.x_next;
        ya = step.ya_plus;
        yb = step.yb_plus;

        if step.residual == 0.0 {
            status = Status::StoppedExact;
            break;
        }
        if step.residual * step.residual < config.residual_sq_tol {
            status = Status::Converged;
            break;
        }
    }

    Ok(ApDRTrace {
        records,
        final_x: x.as_slice().to_vec(),
        status,
        first_hit_k,
        capped_projections,
    })
}

/// Classical Douglas-Rachford: zero forcing parameters and exact projections
/// (closed form, or emulated at `config.exact_gap_tol`).
pub fn solve_exact_dr(problem: &ProblemInstance, config: &ApDRConfig) -> Result<ApDRTrace> {
    let exact = ProblemInstance {
        mode_a: exact_mode(&problem.set_a, problem.mode_a, config.exact_gap_tol),
        mode_b: exact_mode(&problem.set_b, problem.mode_b, config.exact_gap_tol),
        ..problem.clone()
    };
    let cfg = ApDRConfig {
        eps_a: ForcingSchedule::Constant(0.0),
        eps_b: ForcingSchedule::Constant(0.0),
        ..config.clone()
    };
    solve(&exact, &cfg)
}

fn exact_mode(set: &ConvexSet, mode: ProjectionMode, gap_tol: f64) -> ProjectionMode {
    if mode.is_exact() {
        mode
    } else {
        ProjectionMode::exact_for(set, gap_tol)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct FixedPointEstimate {
    pub point: Point,
    /// `|T(point) - point|`.
    pub step: f64,
    pub iterations: usize,
}

impl FixedPointEstimate {
    pub fn is_within(&self, tol: f64) -> bool {
        self.step <= tol
    }
}

/// Iterates the exact Douglas-Rachford map from `from` until
/// `|T(x) - x| <= tol` or `max_iters` maps have been applied, and returns
/// the last `x` together with its step length. The step stays bounded away
/// from zero when the sets do not intersect.
pub fn fixed_point_reference(
    problem: &ProblemInstance,
    from: &Point,
    gap_tol: f64,
    tol: f64,
    max_iters: usize,
    limits: &CondGLimits,
) -> Result<FixedPointEstimate> {
    let mode_a = ProjectionMode::exact_for(&problem.set_a, gap_tol);
    let mode_b = ProjectionMode::exact_for(&problem.set_b, gap_tol);
    let a = Projector::new(&problem.set_a, mode_a, limits);
    let b = Projector::new(&problem.set_b, mode_b, limits);
    let mut x = from.clone();
    let mut iterations = 0;
    loop {
        let next = dr_operator(&a, &b, &x)?;
        iterations += 1;
        let step = (&next - &x).norm();
        if step <= tol || iterations >= max_iters {
            return Ok(FixedPointEstimate {
                point: x,
                step,
                iterations,
            });
        }
        x = next;
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct FejerReport {
    /// Steps `k` (1-based) with `V_{k+1} > V_k + slack`.
    pub violations: Vec<usize>,
    /// `max_k (V_{k+1} - V_k)`; nonpositive when the merit never increases.
    pub max_violation: f64,
    pub merit: Vec<f64>,
}

/// Checks that `V_k = |x^{k+1} - x*|^2 + eps_bar |y_A^k - y_B^k|^2` does not
/// increase along the trace.
pub fn fejer_certificate(trace: &ApDRTrace, x_star: &Point, epsilon_bar: f64, slack: f64) -> FejerReport {
    let path = trace.x_path();
    let merit: Vec<f64> = trace
        .records
        .iter()
        .enumerate()
        .map(|(i, r)| (&path[i + 1] - x_star).norm_squared() + epsilon_bar * r.residual * r.residual)
        .collect();
    let mut violations = Vec::new();
    let mut max_violation = f64::NEG_INFINITY;
    for (i, pair) in merit.windows(2).enumerate() {
        let inc = pair[1] - pair[0];
        max_violation = max_violation.max(inc);
        if inc > slack {
            violations.push(i + 1);
        }
    }
    if merit.len() < 2 {
        max_violation = 0.0;
    }
    FejerReport {
        violations,
        max_violation,
        merit,
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ShadowFeasibility {
    /// Feasibility violation of the final `y_A` for A (nonpositive inside).
    pub dist_to_a: f64,
    pub dist_to_b: f64,
}

impl ShadowFeasibility {
    pub fn within(&self, tol: f64) -> bool {
        self.dist_to_a <= tol && self.dist_to_b <= tol
    }
}

/// Feasibility of the final shadow point with respect to both sets.
pub fn shadow_limit_check(trace: &ApDRTrace, set_a: &ConvexSet, set_b: &ConvexSet) -> Option<ShadowFeasibility> {
    let y = trace.final_shadow()?;
    Some(ShadowFeasibility {
        dist_to_a: set_a.violation(&y),
        dist_to_b: set_b.violation(&y),
    })
}

/// Violation of the final shadow point for every record, for monitoring the
/// approach to an intersection with empty interior.
pub fn shadow_violation_history(trace: &ApDRTrace, set_b: &ConvexSet) -> Vec<f64> {
    trace
        .records
        .iter()
        .map(|r| set_b.violation(&Point::from_vec(r.ya.clone())))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{point, Ball};

    fn ball_problem() -> ProblemInstance {
        let ball: ConvexSet = Ball::new(point(&[0.0, 0.0]), 1.0).unwrap().into();
        ProblemInstance {
            name: "balls".into(),
            set_a: ball.clone(),
            set_b: ball,
            start: point(&[0.0, 0.0]),
            mode_a: ProjectionMode::ClosedForm,
            mode_b: ProjectionMode::ClosedForm,
        }
    }

    #[test]
    fn schedules() {
        let s = ForcingSchedule::Sequence {
            values: vec![0.3, 0.2],
            tail: 0.1,
        };
        assert_eq!(s.value(1), 0.3);
        assert_eq!(s.value(2), 0.2);
        assert_eq!(s.value(7), 0.1);
        assert_eq!(s.supremum(), 0.3);
        assert!(!s.is_zero());
        assert!(ForcingSchedule::Constant(0.0).is_zero());
    }

    #[test]
    fn epsilon_bar_guard() {
        let mut cfg = ApDRConfig::with_epsilon(0.245, ProjectionMode::Inexact);
        assert!((cfg.epsilon_bar() - 0.98).abs() < 1e-15);
        assert!(cfg.validate().is_ok());
        cfg.eps_b = ForcingSchedule::Constant(0.26);
        assert!(matches!(cfg.validate(), Err(Error::InvalidConfig(_))));
        cfg.epsilon_bar_check = false;
        assert!(cfg.validate().is_ok());
        cfg.eps_a = ForcingSchedule::Constant(-0.1);
        assert!(cfg.validate().is_err());
        let seq = ApDRConfig {
            eps_a: ForcingSchedule::Sequence {
                values: vec![0.4, 0.0],
                tail: 0.0,
            },
            eps_b: ForcingSchedule::Constant(0.2),
            ..Default::default()
        };
        assert!((seq.epsilon_bar() - 1.2).abs() < 1e-15);
        assert!(seq.validate().is_err());
    }

    #[test]
    fn point_in_both_sets_stops_at_first_step() {
        let p = ball_problem();
        let trace = solve(&p, &ApDRConfig::default()).unwrap();
        assert_eq!(trace.iterations(), 1);
        assert_eq!(trace.status, Status::StoppedExact);
        assert_eq!(trace.final_residual(), 0.0);
        assert_eq!(trace.final_x, vec![0.0, 0.0]);
        assert_eq!(trace.first_hit_k, Some(1));
        assert_eq!(trace.check_consistency(), 0.0);
        let f = fejer_certificate(&trace, &point(&[0.0, 0.0]), 0.5, 1e-6);
        assert!(f.violations.is_empty());
        let s = shadow_limit_check(&trace, &p.set_a, &p.set_b).unwrap();
        assert!(s.within(0.0));
    }

    #[test]
    fn exact_dr_equals_zero_schedule() {
        let mut p = ball_problem();
        p.set_b = Ball::new(point(&[1.5, 0.5]), 1.0).unwrap().into();
        p.start = point(&[-3.0, 2.0]);
        let cfg = ApDRConfig::default();
        let a = solve_exact_dr(&p, &cfg).unwrap();
        let b = solve(
            &p,
            &ApDRConfig {
                eps_a: ForcingSchedule::Constant(0.0),
                eps_b: ForcingSchedule::Constant(0.0),
                ..cfg
            },
        )
        .unwrap();
        assert_eq!(a.x_path(), b.x_path());
        assert!(a.status.is_success());
    }

    #[test]
    fn disjoint_sets_hit_the_cap() {
        let mut p = ball_problem();
        p.set_b = Ball::new(point(&[10.0, 0.0]), 1.0).unwrap().into();
        p.start = point(&[3.0, 1.0]);
        let cfg = ApDRConfig {
            max_outer: 25,
            ..Default::default()
        };
        let t = solve(&p, &cfg).unwrap();
        assert_eq!(t.status, Status::MaxOuterReached);
        assert_eq!(t.iterations(), 25);
        assert_eq!(t.first_hit_k, None);
    }

    #[test]
    fn rejects_inconsistent_problems() {
        let mut p = ball_problem();
        p.start = point(&[0.0, 0.0, 0.0]);
        assert!(solve(&p, &ApDRConfig::default()).is_err());
        let mut p = ball_problem();
        p.set_b = crate::geometry::HalfSpace::new(point(&[1.0, 0.0]), 0.0).unwrap().into();
        p.mode_b = ProjectionMode::Inexact;
        assert!(matches!(
            solve(&p, &ApDRConfig::default()),
            Err(Error::InvalidConfig(_))
        ));
    }
}
