//! Conditional gradient (Frank-Wolfe) inner solver for feasible inexact
//! projections.
//!
//! `condg_project` minimizes `|w - u|^2 / 2` over a compact set with one
//! linear-minimization call per iteration and an exact line search, and
//! stops as soon as the duality gap `-s* = <u - w, z - w>` drops to the
//! relative threshold `eps |y - v|^2`. The returned point `y+` then satisfies
//!
//! ```text
//! <u - y+, z - y+> <= eps |y - v|^2   for every z in the set,
//! ```
//!
//! which [`verify_feasible_inexact_projection`] checks with a single oracle
//! call.

use crate::error::{Error, Result};
use crate::geometry::{check_dim, check_finite, ConvexSet, Point, FEAS_TOL};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CondGLimits {
    pub max_inner: usize,
    /// Stopping level used when the relative threshold is exactly zero.
    pub abs_gap_floor: f64,
    /// Return `u` itself, with no oracle call, when `u` already lies in the set.
    pub interior_shortcut: bool,
}

impl Default for CondGLimits {
    fn default() -> Self {
        CondGLimits {
            max_inner: 10_000,
            abs_gap_floor: 1e-12,
            interior_shortcut: true,
        }
    }
}

impl CondGLimits {
    pub fn validate(&self) -> Result<()> {
        if self.max_inner == 0 {
            return Err(Error::InvalidConfig("max_inner must be at least 1".into()));
        }
        if !(self.abs_gap_floor >= 0.0) {
            return Err(Error::InvalidConfig("abs_gap_floor must be nonnegative".into()));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct CondGResult {
    pub point: Point,
    pub inner_iters: usize,
    /// The last duality gap `-s*` evaluated.
    pub final_gap: f64,
    /// The stopping level actually applied.
    pub threshold: f64,
    pub converged: bool,
}

impl CondGResult {
    /// Turns a capped run into [`Error::IterationCapReached`].
    pub fn ensure_converged(self) -> Result<Self> {
        if self.converged {
            Ok(self)
        } else {
            Err(Error::IterationCapReached {
                iters: self.inner_iters,
                gap: self.final_gap,
            })
        }
    }
}

/// Feasible inexact projection of `u` relative to `y` (a member of `set`)
/// and `v`, with forcing parameter `epsilon`.
///
/// The iteration is warm-started at `w0 = y`. `epsilon = +inf` accepts `y`
/// after a single gap evaluation. When `epsilon |y - v|^2` is zero the loop
/// stops on `limits.abs_gap_floor` instead.
pub fn condg_project(
    set: &ConvexSet,
    u: &Point,
    y: &Point,
    v: &Point,
    epsilon: f64,
    limits: &CondGLimits,
) -> Result<CondGResult> {
    if !(epsilon >= 0.0) {
        return Err(Error::InvalidConfig(format!(
            "forcing parameter must be >= 0, got {epsilon}"
        )));
    }
    let n = set.dim();
    check_dim(n, u)?;
    check_dim(n, y)?;
    check_dim(n, v)?;
    check_finite(u, "projection target")?;
    check_finite(v, "reference point")?;
    let violation = set.violation(y);
    if !(violation <= FEAS_TOL) {
        return Err(Error::NotAMember { violation });
    }
    run(set, u, y, relative_threshold(epsilon, y, v), limits, |_| {})
}

/// Runs the conditional gradient method to an absolute gap of `gap_tol`,
/// starting from the set's canonical point. Since
/// `psi(w) - psi* <= -s*`, the output is within `sqrt(2 gap_tol)` of the
/// true projection.
pub fn emulate_exact_projection(set: &ConvexSet, u: &Point, gap_tol: f64, limits: &CondGLimits) -> Result<CondGResult> {
    if !(gap_tol >= 0.0) {
        return Err(Error::InvalidConfig(format!(
            "gap tolerance must be >= 0, got {gap_tol}"
        )));
    }
    check_dim(set.dim(), u)?;
    check_finite(u, "projection target")?;
    run(set, u, &set.canonical_point(), gap_tol, limits, |_| {})
}

/// All iterates `w_0, w_1, ...` visited by [`condg_project`], for
/// diagnostics and tests.
pub fn condg_iterates(
    set: &ConvexSet,
    u: &Point,
    y: &Point,
    v: &Point,
    epsilon: f64,
    limits: &CondGLimits,
) -> Result<(CondGResult, Vec<Point>)> {
    let threshold = relative_threshold(epsilon, y, v);
    let mut seen = Vec::new();
    let res = run(set, u, y, threshold, limits, |w| seen.push(w.clone()))?;
    Ok((res, seen))
}

fn relative_threshold(epsilon: f64, y: &Point, v: &Point) -> f64 {
    if epsilon.is_infinite() {
        f64::INFINITY
    } else {
        epsilon * (y - v).norm_squared()
    }
}

fn run(
    set: &ConvexSet,
    u: &Point,
    start: &Point,
    threshold: f64,
    limits: &CondGLimits,
    mut observe: impl FnMut(&Point),
) -> Result<CondGResult> {
    limits.validate()?;
    if !set.is_compact() {
        return Err(Error::UnboundedSet);
    }
    if limits.interior_shortcut && set.contains(u, 0.0) {
        observe(u);
        return Ok(CondGResult {
            point: u.clone(),
            inner_iters: 0,
            final_gap: 0.0,
            threshold,
            converged: true,
        });
    }
    let stop_level = if threshold > 0.0 {
        threshold
    } else {
        limits.abs_gap_floor
    };

    let mut w = start.clone();
    let mut gap = f64::INFINITY;
    for ell in 0..=limits.max_inner {
        observe(&w);
        let grad = &w - u;
        let z = set.lo_oracle(&grad)?;
        let dir = z - &w;
        gap = -grad.dot(&dir);
        if gap <= stop_level {
            return Ok(CondGResult {
                point: w,
                inner_iters: ell,
                final_gap: gap,
                threshold: stop_level,
                converged: true,
            });
        }
        if ell == limits.max_inner {
            break;
        }
        let denom = dir.norm_squared();
        assert!(denom > 0.0, "positive gap with a zero step direction");
        let alpha = (gap / denom).min(1.0);
        w += dir * alpha;
    }
    Ok(CondGResult {
        point: w,
        inner_iters: limits.max_inner,
        final_gap: gap,
        threshold: stop_level,
        converged: false,
    })
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct InexactCertificate {
    /// `max_{z in set} <u - y+, z - y+>`.
    pub max_violation: f64,
    pub ok: bool,
}

/// Evaluates the inexact-projection inequality for `yplus` exactly, with
/// one oracle call maximizing `<u - y+, z>` over the set.
pub fn verify_feasible_inexact_projection(
    set: &ConvexSet,
    u: &Point,
    yplus: &Point,
    bound: f64,
) -> Result<InexactCertificate> {
    check_dim(set.dim(), u)?;
    check_dim(set.dim(), yplus)?;
    let dir = u - yplus;
    let z = set.lo_oracle(&(-&dir))?;
    let max_violation = dir.dot(&(z - yplus));
    Ok(InexactCertificate {
        max_violation,
        ok: max_violation <= bound + 1e-12,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{point, Ball, Ellipsoid};
    use std::f64::consts::PI;

    fn disk() -> ConvexSet {
        Ball::new(point(&[0.0, 0.0]), 1.0).unwrap().into()
    }

    fn e1() -> ConvexSet {
        Ellipsoid::from_axes(point(&[0.0, 0.0]), &[2.0, 0.2], Some(-PI / 4.0))
            .unwrap()
            .into()
    }

    /// Nearest point of the unit circle by sweeping angles; independent of
    /// the solver.
    fn grid_project_disk(u: &Point) -> Point {
        if u.norm() <= 1.0 {
            return u.clone();
        }
        let steps = 400_000;
        (0..steps)
            .map(|i| {
                let t = 2.0 * PI * i as f64 / steps as f64;
                point(&[t.cos(), t.sin()])
            })
            .min_by(|a, b| (a - u).norm().total_cmp(&(b - u).norm()))
            .unwrap()
    }

    #[test]
    fn stops_immediately_at_exact_projection() {
        let r = condg_project(
            &disk(),
            &point(&[2.0, 0.0]),
            &point(&[1.0, 0.0]),
            &point(&[0.0, 0.0]),
            0.1,
            &CondGLimits::default(),
        )
        .unwrap();
        assert_eq!(r.point, point(&[1.0, 0.0]));
        assert_eq!(r.inner_iters, 0);
        assert_eq!(r.final_gap, 0.0);
        assert!(r.converged);
    }

    #[test]
    fn first_step_matches_hand_evaluation() {
        let u = point(&[0.0, 2.0]);
        let y = point(&[1.0, 0.0]);
        let v = point(&[0.0, 0.0]);
        let one_step = CondGLimits {
            max_inner: 1,
            ..Default::default()
        };
        let (_, iterates) = condg_iterates(&disk(), &u, &y, &v, 0.245, &one_step).unwrap();
        // z0 = -(1, -2)/sqrt(5), -s0 = sqrt(5) + 1, alpha0 = 1.
        let z0 = point(&[-1.0, 2.0]) / 5f64.sqrt();
        assert!((&iterates[1] - &z0).norm() < 1e-15);

        let res = condg_project(&disk(), &u, &y, &v, 0.245, &CondGLimits::default()).unwrap();
        assert!(res.converged);
        assert!(res.final_gap <= 0.245);
        let cert = verify_feasible_inexact_projection(&disk(), &u, &res.point, 0.245).unwrap();
        assert!(cert.ok);
        // Prop-style distance bound against a brute-force projection.
        let p = grid_project_disk(&u);
        assert!((&res.point - &p).norm() <= (2.0 * 0.245f64).sqrt() + 1e-4);
    }

    #[test]
    fn first_gap_value() {
        let u = point(&[0.0, 2.0]);
        let y = point(&[1.0, 0.0]);
        let cert = verify_feasible_inexact_projection(&disk(), &u, &y, 0.245).unwrap();
        assert!((cert.max_violation - (5f64.sqrt() + 1.0)).abs() < 1e-12);
        assert!(!cert.ok);
        let exact = verify_feasible_inexact_projection(&disk(), &u, &point(&[0.0, 1.0]), 0.0).unwrap();
        assert_eq!(exact.max_violation, 0.0);
        assert!(exact.ok);
    }

    #[test]
    fn published_ellipse_projection() {
        let e = e1();
        let u = point(&[-1.0, 1.5]);
        let expected = point(&[-1.148_014_816_823_016_2, 1.291_200_937_154_192]);
        let c = e.canonical_point();
        let limits = CondGLimits {
            abs_gap_floor: 1e-6,
            ..Default::default()
        };
        let r = condg_project(&e, &u, &c, &c, 0.0, &limits).unwrap();
        assert!(r.converged && r.final_gap <= 1e-6);
        // sqrt(2 * 1e-6) bounds the distance to the true projection.
        assert!((&r.point - &expected).norm() <= (2e-6f64).sqrt());

        let tight = emulate_exact_projection(&e, &u, 1e-13, &CondGLimits::default()).unwrap();
        assert!((&tight.point - &expected).norm() < 1e-6);
    }

    #[test]
    fn emulated_examples() {
        let r = emulate_exact_projection(&disk(), &point(&[0.0, 2.0]), 1e-6, &CondGLimits::default()).unwrap();
        assert!((&r.point - point(&[0.0, 1.0])).norm() < 1e-3);

        let ball = ConvexSet::from(Ball::new(point(&[1.0, 1.0]), 1.0).unwrap());
        let no_shortcut = CondGLimits {
            interior_shortcut: false,
            ..Default::default()
        };
        let r = emulate_exact_projection(&ball, &point(&[1.0, 1.0]), 1e-6, &no_shortcut).unwrap();
        assert_eq!(r.point, point(&[1.0, 1.0]));
        assert_eq!(r.inner_iters, 0);
        assert_eq!(r.final_gap, 0.0);
    }

    #[test]
    fn interior_shortcut_returns_target() {
        let u = point(&[0.2, -0.1]);
        let r = condg_project(
            &disk(),
            &u,
            &point(&[1.0, 0.0]),
            &point(&[0.0, 0.0]),
            0.3,
            &CondGLimits::default(),
        )
        .unwrap();
        assert_eq!(r.point, u);
        assert_eq!(r.inner_iters, 0);
    }

    #[test]
    fn unbounded_epsilon_accepts_warm_start() {
        let y = point(&[0.0, -1.0]);
        let r = condg_project(
            &disk(),
            &point(&[5.0, 5.0]),
            &y,
            &y,
            f64::INFINITY,
            &CondGLimits::default(),
        )
        .unwrap();
        assert_eq!(r.point, y);
        assert_eq!(r.inner_iters, 0);
    }

    #[test]
    fn degenerate_threshold_uses_floor() {
        let y = point(&[1.0, 0.0]);
        let r = condg_project(&disk(), &point(&[0.0, 3.0]), &y, &y, 0.4, &CondGLimits::default()).unwrap();
        assert!(r.converged);
        assert_eq!(r.threshold, 1e-12);
        assert!(r.final_gap <= 1e-12);
        assert!((&r.point - point(&[0.0, 1.0])).norm() < 1e-5);
    }

    #[test]
    fn iteration_cap_flags_result() {
        let limits = CondGLimits {
            max_inner: 2,
            abs_gap_floor: 0.0,
            interior_shortcut: false,
        };
        let r = condg_project(
            &e1(),
            &point(&[-1.0, 1.5]),
            &point(&[0.0, 0.0]),
            &point(&[0.0, 0.0]),
            0.0,
            &limits,
        )
        .unwrap();
        assert!(!r.converged);
        assert_eq!(r.inner_iters, 2);
        assert!(e1().contains(&r.point, 1e-10));
        assert!(matches!(
            r.ensure_converged(),
            Err(Error::IterationCapReached { iters: 2, .. })
        ));
    }

    #[test]
    fn error_paths() {
        let outside = point(&[2.0, 0.0]);
        let o = point(&[0.0, 0.0]);
        assert!(matches!(
            condg_project(&disk(), &o, &outside, &o, 0.1, &CondGLimits::default()),
            Err(Error::NotAMember { .. })
        ));
        let half = ConvexSet::from(crate::geometry::HalfSpace::new(point(&[1.0, 0.0]), 0.0).unwrap());
        assert!(matches!(
            condg_project(&half, &point(&[-1.0, 0.0]), &o, &o, 0.1, &CondGLimits::default()),
            Err(Error::UnboundedSet)
        ));
        assert!(condg_project(&disk(), &o, &o, &o, -0.1, &CondGLimits::default()).is_err());
    }

    #[test]
    fn iterates_stay_feasible_and_distance_decreases() {
        let u = point(&[3.0, -2.0]);
        let c = point(&[0.0, 0.0]);
        let limits = CondGLimits {
            abs_gap_floor: 1e-12,
            interior_shortcut: false,
            ..Default::default()
        };
        let (_, ws) = condg_iterates(&e1(), &u, &c, &c, 0.0, &limits).unwrap();
        assert!(ws.len() > 3);
        for pair in ws.windows(2) {
            assert!(e1().contains(&pair[1], 1e-10));
            assert!((&pair[1] - &u).norm() <= (&pair[0] - &u).norm() + 1e-12);
        }
    }
}
