//! TOML problem files: two sets, a start point and solver settings.
//!
//! ```toml
//! name = "e1_h1"
//! start = [-1.0, 1.5]
//!
//! [[sets]]
//! kind = "ellipsoid"
//! center = [0.0, 0.0]
//! axes = [2.0, 0.2]
//! rotation_degrees = -45.0
//!
//! [[sets]]
//! kind = "half_space"
//! normal = [1.0, 0.0]
//! offset = 1.3
//!
//! [solver]
//! epsilon_a = 0.245
//! mode_b = "closed_form"
//! ```

use std::path::Path;

use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

use crate::condg::CondGLimits;
use crate::error::{Error, Result};
use crate::geometry::{point, Ball, BoxSet, ConvexSet, Ellipsoid, HalfSpace, SymmetricPd, VertexPolytope};
use crate::operators::ProjectionMode;
use crate::solver::{ApDRConfig, ForcingSchedule, ProblemInstance};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum SetSpec {
    /// Either `axes` (with an optional 2-D `rotation_degrees`) or a full
    /// `shape` matrix `M` for `{x : (x - c)^T M (x - c) <= 1}`.
    Ellipsoid {
        center: Vec<f64>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        axes: Option<Vec<f64>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        rotation_degrees: Option<f64>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        shape: Option<Vec<Vec<f64>>>,
    },
    /// `{x : <normal, x> >= offset}`.
    HalfSpace {
        normal: Vec<f64>,
        offset: f64,
    },
    Ball {
        center: Vec<f64>,
        radius: f64,
    },
    Box {
        lower: Vec<f64>,
        upper: Vec<f64>,
    },
    Polytope {
        vertices: Vec<Vec<f64>>,
    },
}

impl SetSpec {
    pub fn build(&self) -> Result<ConvexSet> {
        Ok(match self {
            SetSpec::Ellipsoid {
                center,
                axes,
                rotation_degrees,
                shape,
            } => {
                let c = point(center);
                match (axes, shape) {
                    (Some(a), None) => Ellipsoid::from_axes(c, a, rotation_degrees.map(f64::to_radians))?.into(),
                    (None, Some(rows)) => {
                        if rotation_degrees.is_some() {
                            return Err(Error::InvalidSet(
                                "rotation_degrees only applies together with axes".into(),
                            ));
                        }
                        let n = rows.len();
                        if let Some(bad) = rows.iter().find(|r| r.len() != n) {
                            return Err(Error::DimensionMismatch {
                                expected: n,
                                found: bad.len(),
                            });
                        }
                        let m = DMatrix::from_fn(n, n, |i, j| rows[i][j]);
                        Ellipsoid::new(c, SymmetricPd::new(m)?)?.into()
                    }
                    _ => {
                        return Err(Error::InvalidSet(
                            "an ellipsoid needs exactly one of axes or shape".into(),
                        ))
                    }
                }
            }
            SetSpec::HalfSpace { normal, offset } => HalfSpace::new(point(normal), *offset)?.into(),
            SetSpec::Ball { center, radius } => Ball::new(point(center), *radius)?.into(),
            SetSpec::Box { lower, upper } => BoxSet::new(point(lower), point(upper))?.into(),
            SetSpec::Polytope { vertices } => VertexPolytope::new(vertices.iter().map(|v| point(v)).collect())?.into(),
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ModeName {
    ClosedForm,
    Emulated,
    Inexact,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SolverSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub epsilon_a: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub epsilon_b: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub residual_sq_tol: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_outer: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub condg_max_inner: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub condg_gap_floor: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mode_a: Option<ModeName>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mode_b: Option<ModeName>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub emulated_gap_tol: Option<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub start: Vec<f64>,
    #[serde(default)]
    pub sets: Vec<SetSpec>,
    #[serde(default)]
    pub solver: SolverSpec,
}

fn default_mode(set: &ConvexSet) -> ModeName {
    if set.has_closed_form_projection() {
        ModeName::ClosedForm
    } else {
        ModeName::Inexact
    }
}

fn to_mode(name: ModeName, gap_tol: f64) -> ProjectionMode {
    match name {
        ModeName::ClosedForm => ProjectionMode::ClosedForm,
        ModeName::Emulated => ProjectionMode::Emulated { gap_tol },
        ModeName::Inexact => ProjectionMode::Inexact,
    }
}

impl ProblemFile {
    pub fn parse(text: &str) -> Result<Self> {
        let file: ProblemFile = toml::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        file.check_shape()?;
        Ok(file)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        Self::parse(&text).map_err(|e| match e {
            Error::Parse(msg) => Error::Parse(format!("{}: {msg}", path.display())),
            other => other,
        })
    }

    pub fn to_toml(&self) -> Result<String> {
        toml::to_string(self).map_err(|e| Error::Parse(e.to_string()))
    }

    fn check_shape(&self) -> Result<()> {
        if self.sets.len() != 2 {
            return Err(Error::Parse(format!(
                "expected exactly two [[sets]] sections, found {}",
                self.sets.len()
            )));
        }
        Ok(())
    }

    /// Builds and validates the instance and the solver configuration.
    pub fn instance(&self) -> Result<(ProblemInstance, ApDRConfig)> {
        self.check_shape()?;
        let set_a = self.sets[0].build()?;
        let set_b = self.sets[1].build()?;
        let s = &self.solver;
        let defaults = ApDRConfig::default();
        let gap_tol = s.emulated_gap_tol.unwrap_or(defaults.exact_gap_tol);
        let mode_a = to_mode(s.mode_a.unwrap_or_else(|| default_mode(&set_a)), gap_tol);
        let mode_b = to_mode(s.mode_b.unwrap_or_else(|| default_mode(&set_b)), gap_tol);
        let eps_a = s.epsilon_a.unwrap_or(0.0);
        let eps_b = s
            .epsilon_b
            .unwrap_or(if mode_b == ProjectionMode::Inexact { eps_a } else { 0.0 });
        let problem = ProblemInstance {
            name: self.name.clone().unwrap_or_else(|| "problem".into()),
            set_a,
            set_b,
            start: point(&self.start),
            mode_a,
            mode_b,
        };
        let config = ApDRConfig {
            eps_a: ForcingSchedule::Constant(eps_a),
            eps_b: ForcingSchedule::Constant(eps_b),
            residual_sq_tol: s.residual_sq_tol.unwrap_or(defaults.residual_sq_tol),
            max_outer: s.max_outer.unwrap_or(defaults.max_outer),
            condg: CondGLimits {
                max_inner: s.condg_max_inner.unwrap_or(defaults.condg.max_inner),
                abs_gap_floor: s.condg_gap_floor.unwrap_or(defaults.condg.abs_gap_floor),
                ..defaults.condg
            },
            exact_gap_tol: gap_tol,
            ..defaults
        };
        problem.validate()?;
        config.validate()?;
        Ok((problem, config))
    }
}
