//! Convex set descriptors and the primitive operations the solvers need:
//! membership, linear minimization oracles, support values and the
//! closed-form projectors for the sets that have one.
//!
//! All sets are immutable after construction. Dimensions are generic; the
//! only two-dimensional helper is [`rotation_matrix`].

use nalgebra::{Cholesky, DMatrix, DVector, Dyn};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A point (or direction) of R^n.
pub type Point = DVector<f64>;

/// Default membership tolerance used by assertions across the crate.
pub const FEAS_TOL: f64 = 1e-9;

const SYMMETRY_TOL: f64 = 1e-12;

pub fn point(coords: &[f64]) -> Point {
    DVector::from_row_slice(coords)
}

pub(crate) fn check_finite(p: &Point, what: &'static str) -> Result<()> {
    if p.iter().all(|v| v.is_finite()) {
        Ok(())
    } else {
        Err(Error::NonFinite(what))
    }
}

pub(crate) fn check_dim(expected: usize, p: &Point) -> Result<()> {
    if p.len() == expected {
        Ok(())
    } else {
        Err(Error::DimensionMismatch {
            expected,
            found: p.len(),
        })
    }
}

/// The planar rotation `[[cos t, sin t], [-sin t, cos t]]`.
pub fn rotation_matrix(theta: f64) -> DMatrix<f64> {
    let (s, c) = theta.sin_cos();
    DMatrix::from_row_slice(2, 2, &[c, s, -s, c])
}

/// Symmetric positive-definite matrix together with its Cholesky factor.
#[derive(Clone, Debug)]
pub struct SymmetricPd {
    matrix: DMatrix<f64>,
    chol: Cholesky<f64, Dyn>,
}

impl SymmetricPd {
    pub fn new(matrix: DMatrix<f64>) -> Result<Self> {
        if !matrix.is_square() || matrix.nrows() == 0 {
            return Err(Error::InvalidSet(format!(
                "shape matrix must be square and nonempty, got {}x{}",
                matrix.nrows(),
                matrix.ncols()
            )));
        }
        if matrix.iter().any(|v| !v.is_finite()) {
            return Err(Error::NonFinite("shape matrix"));
        }
        let scale = matrix.amax().max(f64::MIN_POSITIVE);
        let asym = (&matrix - matrix.transpose()).amax() / scale;
        if asym > SYMMETRY_TOL {
            return Err(Error::NotSymmetric(asym));
        }
        // Symmetrize away rounding noise so the factor is exact for the stored matrix.
        let matrix = (&matrix + matrix.transpose()) * 0.5;
        let chol = Cholesky::new(matrix.clone()).ok_or(Error::NotPositiveDefinite)?;
        Ok(SymmetricPd { matrix, chol })
    }

    pub fn dim(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn matrix(&self) -> &DMatrix<f64> {
        &self.matrix
    }

    /// Solves `M w = rhs` through the factorization.
    pub fn solve(&self, rhs: &Point) -> Point {
        self.chol.solve(rhs)
    }

    pub fn quadratic_form(&self, d: &Point) -> f64 {
        d.dot(&(&self.matrix * d))
    }
}

impl PartialEq for SymmetricPd {
    fn eq(&self, other: &Self) -> bool {
        self.matrix == other.matrix
    }
}

/// `{x : <x - center, shape (x - center)> <= 1}`.
#[derive(Clone, Debug, PartialEq)]
pub struct Ellipsoid {
    pub center: Point,
    pub shape: SymmetricPd,
}

impl Ellipsoid {
    pub fn new(center: Point, shape: SymmetricPd) -> Result<Self> {
        check_finite(&center, "ellipsoid center")?;
        check_dim(shape.dim(), &center)?;
        Ok(Ellipsoid { center, shape })
    }

    /// Builds `shape = R^T diag(1/a_i^2) R` from semi-axis lengths.
    ///
    /// `rotation` (radians) is only meaningful in the plane; the first
    /// semi-axis then points along `(cos t, sin t)`. Pass `None` for an
    /// axis-aligned ellipsoid in any dimension.
    pub fn from_axes(center: Point, semi_axes: &[f64], rotation: Option<f64>) -> Result<Self> {
        if semi_axes.len() != center.len() {
            return Err(Error::DimensionMismatch {
                expected: center.len(),
                found: semi_axes.len(),
            });
        }
        if let Some(a) = semi_axes.iter().find(|a| !(a.is_finite() && **a > 0.0)) {
            return Err(Error::InvalidSet(format!("semi-axis must be positive, got {a}")));
        }
        let diag = DMatrix::from_diagonal(&DVector::from_iterator(
            semi_axes.len(),
            semi_axes.iter().map(|a| 1.0 / (a * a)),
        ));
        let shape = match rotation {
            Some(theta) if theta != 0.0 => {
                if center.len() != 2 {
                    return Err(Error::InvalidSet(
                        "rotation angles are only supported in two dimensions".into(),
                    ));
                }
                let r = rotation_matrix(theta);
                r.transpose() * diag * r
            }
            _ => diag,
        };
        Ellipsoid::new(center, SymmetricPd::new(shape)?)
    }

    pub fn quadratic_form(&self, x: &Point) -> f64 {
        self.shape.quadratic_form(&(x - &self.center))
    }
}

/// `{x : <normal, x> >= offset}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct HalfSpace {
    pub normal: Point,
    pub offset: f64,
}

impl HalfSpace {
    pub fn new(normal: Point, offset: f64) -> Result<Self> {
        check_finite(&normal, "half-space normal")?;
        if !offset.is_finite() {
            return Err(Error::NonFinite("half-space offset"));
        }
        if normal.norm_squared() == 0.0 {
            return Err(Error::InvalidSet("half-space normal must be nonzero".into()));
        }
        Ok(HalfSpace { normal, offset })
    }

    pub fn slack(&self, x: &Point) -> f64 {
        self.normal.dot(x) - self.offset
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BoxSet {
    pub lower: Point,
    pub upper: Point,
}

impl BoxSet {
    pub fn new(lower: Point, upper: Point) -> Result<Self> {
        check_finite(&lower, "box lower bound")?;
        check_finite(&upper, "box upper bound")?;
        check_dim(lower.len(), &upper)?;
        if lower.iter().zip(upper.iter()).any(|(l, u)| l > u) {
            return Err(Error::InvalidSet("box lower bound exceeds upper bound".into()));
        }
        Ok(BoxSet { lower, upper })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Ball {
    pub center: Point,
    pub radius: f64,
}

impl Ball {
    pub fn new(center: Point, radius: f64) -> Result<Self> {
        check_finite(&center, "ball center")?;
        if !(radius.is_finite() && radius > 0.0) {
            return Err(Error::InvalidSet(format!("ball radius must be positive, got {radius}")));
        }
        Ok(Ball { center, radius })
    }
}

/// Convex hull of finitely many vertices.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VertexPolytope {
    pub vertices: Vec<Point>,
}

impl VertexPolytope {
    pub fn new(vertices: Vec<Point>) -> Result<Self> {
        let first = vertices
            .first()
            .ok_or_else(|| Error::InvalidSet("polytope needs at least one vertex".into()))?;
        let n = first.len();
        for v in &vertices {
            check_dim(n, v)?;
            check_finite(v, "polytope vertex")?;
        }
        Ok(VertexPolytope { vertices })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum ConvexSet {
    Ellipsoid(Ellipsoid),
    HalfSpace(HalfSpace),
    Box(BoxSet),
    Ball(Ball),
    Polytope(VertexPolytope),
}

impl From<Ellipsoid> for ConvexSet {
    fn from(e: Ellipsoid) -> Self {
        ConvexSet::Ellipsoid(e)
    }
}
impl From<HalfSpace> for ConvexSet {
    fn from(h: HalfSpace) -> Self {
        ConvexSet::HalfSpace(h)
    }
}
impl From<BoxSet> for ConvexSet {
    fn from(b: BoxSet) -> Self {
        ConvexSet::Box(b)
    }
}
impl From<Ball> for ConvexSet {
    fn from(b: Ball) -> Self {
        ConvexSet::Ball(b)
    }
}
impl From<VertexPolytope> for ConvexSet {
    fn from(p: VertexPolytope) -> Self {
        ConvexSet::Polytope(p)
    }
}

impl ConvexSet {
    pub fn kind(&self) -> &'static str {
        match self {
            ConvexSet::Ellipsoid(_) => "ellipsoid",
            ConvexSet::HalfSpace(_) => "half-space",
            ConvexSet::Box(_) => "box",
            ConvexSet::Ball(_) => "ball",
            ConvexSet::Polytope(_) => "polytope",
        }
    }

    pub fn dim(&self) -> usize {
        match self {
            ConvexSet::Ellipsoid(e) => e.center.len(),
            ConvexSet::HalfSpace(h) => h.normal.len(),
            ConvexSet::Box(b) => b.lower.len(),
            ConvexSet::Ball(b) => b.center.len(),
            ConvexSet::Polytope(p) => p.vertices[0].len(),
        }
    }

    pub fn is_compact(&self) -> bool {
        !matches!(self, ConvexSet::HalfSpace(_))
    }

    pub fn has_closed_form_projection(&self) -> bool {
        matches!(self, ConvexSet::HalfSpace(_) | ConvexSet::Box(_) | ConvexSet::Ball(_))
    }

    /// How far `x` is outside the set, in the set's own units: quadratic-form
    /// excess for ellipsoids, linear slack for half-spaces and boxes, radial
    /// excess for balls and Euclidean distance for polytopes. Nonpositive
    /// values mean membership.
    pub fn violation(&self, x: &Point) -> f64 {
        match self {
            ConvexSet::Ellipsoid(e) => e.quadratic_form(x) - 1.0,
            ConvexSet::HalfSpace(h) => -h.slack(x),
            ConvexSet::Box(b) => x
                .iter()
                .zip(b.lower.iter().zip(b.upper.iter()))
                .map(|(v, (l, u))| (l - v).max(v - u))
                .fold(f64::NEG_INFINITY, f64::max),
            ConvexSet::Ball(b) => (x - &b.center).norm() - b.radius,
            ConvexSet::Polytope(p) => hull_distance(&p.vertices, x),
        }
    }

    pub fn contains(&self, x: &Point, feas_tol: f64) -> bool {
        x.len() == self.dim() && self.violation(x) <= feas_tol
    }

    /// Deterministic reference point: center for ellipsoids and balls,
    /// midpoint for boxes, vertex 0 for polytopes and the projection of the
    /// origin for half-spaces.
    pub fn canonical_point(&self) -> Point {
        match self {
            ConvexSet::Ellipsoid(e) => e.center.clone(),
            ConvexSet::Ball(b) => b.center.clone(),
            ConvexSet::Box(b) => (&b.lower + &b.upper) * 0.5,
            ConvexSet::Polytope(p) => p.vertices[0].clone(),
            ConvexSet::HalfSpace(h) => project_half_space(h, &Point::zeros(h.normal.len())),
        }
    }

    /// A minimizer of `<c, x>` over the set.
    ///
    /// Ties are broken deterministically: `c = 0` gives the center of an
    /// ellipsoid or ball, zero components of `c` select the lower bound of a
    /// box, and polytopes return the lowest-index optimal vertex.
    pub fn lo_oracle(&self, c: &Point) -> Result<Point> {
        check_dim(self.dim(), c)?;
        match self {
            ConvexSet::Ellipsoid(e) => {
                let w = e.shape.solve(c);
                let denom = c.dot(&w);
                if denom <= 0.0 {
                    return Ok(e.center.clone());
                }
                Ok(&e.center - w / denom.sqrt())
            }
            ConvexSet::Ball(b) => {
                let norm = c.norm();
                if norm == 0.0 {
                    return Ok(b.center.clone());
                }
                Ok(&b.center - c * (b.radius / norm))
            }
            ConvexSet::Box(b) => Ok(Point::from_iterator(
                c.len(),
                c.iter()
                    .zip(b.lower.iter().zip(b.upper.iter()))
                    .map(|(ci, (l, u))| if *ci < 0.0 { *u } else { *l }),
            )),
            ConvexSet::Polytope(p) => {
                let mut best = 0;
                let mut best_val = c.dot(&p.vertices[0]);
                for (i, v) in p.vertices.iter().enumerate().skip(1) {
                    let val = c.dot(v);
                    if val < best_val {
                        best = i;
                        best_val = val;
                    }
                }
                Ok(p.vertices[best].clone())
            }
            ConvexSet::HalfSpace(_) => Err(Error::UnboundedSet),
        }
    }

    /// `max_{x in set} <c, x>`.
    pub fn support_value(&self, c: &Point) -> Result<f64> {
        let neg = -c;
        Ok(c.dot(&self.lo_oracle(&neg)?))
    }

    /// Euclidean projection, for the sets that admit a closed form.
    pub fn exact_project(&self, u: &Point) -> Result<Point> {
        check_dim(self.dim(), u)?;
        match self {
            ConvexSet::HalfSpace(h) => Ok(project_half_space(h, u)),
            ConvexSet::Box(b) => Ok(Point::from_iterator(
                u.len(),
                u.iter()
                    .zip(b.lower.iter().zip(b.upper.iter()))
                    .map(|(v, (l, h))| v.clamp(*l, *h)),
            )),
            ConvexSet::Ball(b) => {
                let d = u - &b.center;
                let norm = d.norm();
                if norm <= b.radius {
                    Ok(u.clone())
                } else {
                    Ok(&b.center + d * (b.radius / norm))
                }
            }
            ConvexSet::Ellipsoid(_) => Err(Error::NoClosedForm("ellipsoid")),
            ConvexSet::Polytope(_) => Err(Error::NoClosedForm("polytope")),
        }
    }
}

fn project_half_space(h: &HalfSpace, u: &Point) -> Point {
    let s = h.slack(u);
    if s >= 0.0 {
        u.clone()
    } else {
        u - &h.normal * (s / h.normal.norm_squared())
    }
}

/// Distance from `x` to the convex hull of `vertices` (Wolfe's minimum-norm
/// point algorithm on the translated vertex set).
fn hull_distance(vertices: &[Point], x: &Point) -> f64 {
    let pts: Vec<Point> = vertices.iter().map(|v| v - x).collect();
    let scale = pts.iter().map(|p| p.norm_squared()).fold(0.0, f64::max).max(1.0);
    let tol = 1e-13 * scale;

    let start = (0..pts.len())
        .min_by(|&a, &b| pts[a].norm_squared().total_cmp(&pts[b].norm_squared()))
        .unwrap_or(0);
    let mut active = vec![start];
    let mut weights = vec![1.0];
    let mut w = pts[start].clone();

    for _ in 0..(50 * pts.len() + 50) {
        let (j, val) = pts
            .iter()
            .enumerate()
            .map(|(i, p)| (i, w.dot(p)))
            .min_by(|a, b| a.1.total_cmp(&b.1))
            .unwrap();
        if w.norm_squared() - val <= tol || active.contains(&j) {
            break;
        }
        active.push(j);
        weights.push(0.0);

        loop {
            let Some(alpha) = affine_min_norm(&pts, &active) else {
                return w.norm();
            };
            if alpha.iter().all(|a| *a > 1e-14) {
                weights = alpha;
                break;
            }
            let mut theta = 1.0f64;
            for (l, a) in weights.iter().zip(alpha.iter()) {
                if *a <= 1e-14 && l - a > 0.0 {
                    theta = theta.min(l / (l - a));
                }
            }
            for (l, a) in weights.iter_mut().zip(alpha.iter()) {
                *l += theta * (a - *l);
            }
            let keep: Vec<bool> = weights.iter().map(|l| *l > 1e-14).collect();
            let mut i = 0;
            active.retain(|_| {
                i += 1;
                keep[i - 1]
            });
            let mut i = 0;
            weights.retain(|_| {
                i += 1;
                keep[i - 1]
            });
            let total: f64 = weights.iter().sum();
            weights.iter_mut().for_each(|l| *l /= total);
            if active.len() <= 1 {
                break;
            }
        }
        w = active
            .iter()
            .zip(weights.iter())
            .fold(Point::zeros(x.len()), |acc, (i, l)| acc + &pts[*i] * *l);
    }
    w.norm()
}

/// Minimum-norm point of the affine hull of `pts[active]`, as barycentric
/// weights.
fn affine_min_norm(pts: &[Point], active: &[usize]) -> Option<Vec<f64>> {
    let m = active.len();
    let mut kkt = DMatrix::zeros(m + 1, m + 1);
    for (r, &i) in active.iter().enumerate() {
        for (c, &j) in active.iter().enumerate() {
            kkt[(r, c)] = pts[i].dot(&pts[j]);
        }
        kkt[(r, m)] = 1.0;
        kkt[(m, r)] = 1.0;
    }
    let mut rhs = DVector::zeros(m + 1);
    rhs[m] = 1.0;
    let sol = kkt.lu().solve(&rhs)?;
    if sol.iter().any(|v| !v.is_finite()) {
        return None;
    }
    Some(sol.iter().take(m).copied().collect())
}
