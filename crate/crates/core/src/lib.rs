//! Approximate Douglas-Rachford splitting with conditional-gradient
//! inexact projections, for two-set convex feasibility problems.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod condg;
pub mod error;
pub mod geometry;
pub mod harness;
pub mod operators;
pub mod problem_file;
pub mod properties;
pub mod solver;

pub use condg::{
    condg_project, emulate_exact_projection, verify_feasible_inexact_projection, CondGLimits, CondGResult,
};
pub use error::{Error, Result};
pub use geometry::{point, Ball, BoxSet, ConvexSet, Ellipsoid, HalfSpace, Point, SymmetricPd, VertexPolytope};
pub use operators::{dr_operator, idr_step, inexact_reflect, reflect, ProjectionMode, Projector};
pub use solver::{
    fejer_certificate, fixed_point_reference, shadow_limit_check, solve, solve_exact_dr, ApDRConfig, ApDRTrace,
    FirstStep, FixedPointEstimate, ForcingSchedule, IterationRecord, ProblemInstance, Status,
};
