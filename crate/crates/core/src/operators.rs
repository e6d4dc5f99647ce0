//! Reflection and Douglas-Rachford operators, exact and inexact.

use serde::{Deserialize, Serialize};

use crate::condg::{condg_project, emulate_exact_projection, CondGLimits};
use crate::error::{Error, Result};
use crate::geometry::{ConvexSet, Point};

/// How a set is projected onto.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum ProjectionMode {
    /// Closed-form Euclidean projection (half-spaces, boxes, balls).
    ClosedForm,
    /// Conditional gradient run to an absolute gap, standing in for an exact
    /// projection.
    Emulated { gap_tol: f64 },
    /// Conditional gradient stopped at the relative forcing threshold.
    Inexact,
}

impl ProjectionMode {
    pub fn check_for(&self, set: &ConvexSet) -> Result<()> {
        match self {
            ProjectionMode::ClosedForm if !set.has_closed_form_projection() => Err(Error::InvalidConfig(format!(
                "no closed-form projection for a {}",
                set.kind()
            ))),
            ProjectionMode::Emulated { .. } | ProjectionMode::Inexact if !set.is_compact() => {
                Err(Error::InvalidConfig(format!(
                    "conditional gradient needs a compact set, got a {}",
                    set.kind()
                )))
            }
            ProjectionMode::Emulated { gap_tol } if !(*gap_tol >= 0.0) => Err(Error::InvalidConfig(format!(
                "emulated gap tolerance must be >= 0, got {gap_tol}"
            ))),
            _ => Ok(()),
        }
    }

    pub fn is_exact(&self) -> bool {
        !matches!(self, ProjectionMode::Inexact)
    }

    /// The exact counterpart: closed form when the set has one, otherwise
    /// emulation at `gap_tol`.
    pub fn exact_for(set: &ConvexSet, gap_tol: f64) -> Self {
        if set.has_closed_form_projection() {
            ProjectionMode::ClosedForm
        } else {
            ProjectionMode::Emulated { gap_tol }
        }
    }
}

/// A set paired with the way it is projected onto.
#[derive(Clone, Copy, Debug)]
pub struct Projector<'a> {
    pub set: &'a ConvexSet,
    pub mode: ProjectionMode,
    pub limits: &'a CondGLimits,
}

/// One (possibly inexact) projection with its inner-iteration count.
#[derive(Clone, Debug, PartialEq)]
pub struct Projected {
    pub point: Point,
    pub inner_iters: usize,
    /// False when conditional gradient stopped at its iteration cap.
    pub converged: bool,
}

impl<'a> Projector<'a> {
    pub fn new(set: &'a ConvexSet, mode: ProjectionMode, limits: &'a CondGLimits) -> Self {
        Projector { set, mode, limits }
    }

    /// Exact (or emulated-exact) projection of `u`.
    pub fn project(&self, u: &Point) -> Result<Projected> {
        match self.mode {
            ProjectionMode::ClosedForm => Ok(Projected {
                point: self.set.exact_project(u)?,
                inner_iters: 0,
                converged: true,
            }),
            ProjectionMode::Emulated { gap_tol } => {
                let r = emulate_exact_projection(self.set, u, gap_tol, self.limits)?;
                Ok(Projected {
                    converged: r.converged,
                    point: r.point,
                    inner_iters: r.inner_iters,
                })
            }
            ProjectionMode::Inexact => Err(Error::InvalidConfig(
                "an inexact projector needs a reference pair and a forcing parameter".into(),
            )),
        }
    }

    /// A member of the feasible inexact projection of `u` relative to `y` and
    /// `v`. Exact modes ignore `y`, `v` and `epsilon`: an exact projection is
    /// always an admissible inexact one.
    pub fn project_inexact(&self, u: &Point, y: &Point, v: &Point, epsilon: f64) -> Result<Projected> {
        match self.mode {
            ProjectionMode::Inexact => {
                let r = condg_project(self.set, u, y, v, epsilon, self.limits)?;
                Ok(Projected {
                    converged: r.converged,
                    point: r.point,
                    inner_iters: r.inner_iters,
                })
            }
            _ => self.project(u),
        }
    }
}

/// `R(u) = 2 P(u) - u` with the mode's projector.
pub fn reflect(set: &ConvexSet, u: &Point, mode: ProjectionMode, limits: &CondGLimits) -> Result<Point> {
    mode.check_for(set)?;
    let p = Projector::new(set, mode, limits).project(u)?.point;
    Ok(p * 2.0 - u)
}

#[derive(Clone, Debug, PartialEq)]
pub struct InexactReflection {
    pub reflected: Point,
    pub yplus: Point,
}

/// `2 y+ - u` where `y+` is the conditional-gradient inexact projection.
pub fn inexact_reflect(
    set: &ConvexSet,
    y: &Point,
    v: &Point,
    u: &Point,
    epsilon: f64,
    limits: &CondGLimits,
) -> Result<InexactReflection> {
    let yplus = condg_project(set, u, y, v, epsilon, limits)?.point;
    Ok(InexactReflection {
        reflected: &yplus * 2.0 - u,
        yplus,
    })
}

/// Classical Douglas-Rachford map `(R_B(R_A(u)) + u) / 2`.
pub fn dr_operator(a: &Projector<'_>, b: &Projector<'_>, u: &Point) -> Result<Point> {
    a.mode.check_for(a.set)?;
    b.mode.check_for(b.set)?;
    let ra = a.project(u)?.point * 2.0 - u;
    let rb = b.project(&ra)?.point * 2.0 - &ra;
    Ok((rb + u) * 0.5)
}

#[derive(Clone, Debug, PartialEq)]
pub struct IdrStep {
    pub x_next: Point,
    pub ya_plus: Point,
    pub yb_plus: Point,
    /// `|ya_plus - yb_plus|`; zero certifies a point of the intersection.
    pub residual: f64,
    pub inner_a: usize,
    pub inner_b: usize,
    /// Number of the two projections that stopped at the iteration cap.
    pub capped: usize,
}

/// One inexact Douglas-Rachford step from `x` with shadow points `ya`, `yb`.
///
/// Projects `x` onto A first, then `2 ya+ - x` onto B, and returns
/// `x + yb+ - ya+`.
pub fn idr_step(
    a: &Projector<'_>,
    b: &Projector<'_>,
    x: &Point,
    ya: &Point,
    yb: &Point,
    epsilon: f64,
    delta: f64,
) -> Result<IdrStep> {
    let pa = a.project_inexact(x, ya, yb, epsilon)?;
    let target = &pa.point * 2.0 - x;
    let pb = b.project_inexact(&target, yb, ya, delta)?;
    let diff = &pb.point - &pa.point;
    let x_next = x + &diff;
    Ok(IdrStep {
        residual: diff.norm(),
        x_next,
        ya_plus: pa.point,
        yb_plus: pb.point,
        inner_a: pa.inner_iters,
        inner_b: pb.inner_iters,
        capped: usize::from(!pa.converged) + usize::from(!pb.converged),
    })
}
