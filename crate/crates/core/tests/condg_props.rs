use apdr::condg::{
    condg_iterates, condg_project, emulate_exact_projection, verify_feasible_inexact_projection, CondGLimits,
};
use apdr::geometry::{point, Ball, ConvexSet, Ellipsoid, Point, FEAS_TOL};
use proptest::prelude::*;

fn coords(n: usize, lo: f64, hi: f64) -> impl Strategy<Value = Vec<f64>> {
    prop::collection::vec(lo..hi, n)
}

fn ball_or_ellipse() -> impl Strategy<Value = ConvexSet> {
    prop_oneof![
        (coords(2, -2.0, 2.0), 0.2f64..2.0).prop_map(|(c, r)| Ball::new(point(&c), r).unwrap().into()),
        (coords(2, -2.0, 2.0), 0.2f64..2.0, 0.2f64..2.0, -3.2f64..3.2).prop_map(|(c, a, b, th)| Ellipsoid::from_axes(
            point(&c),
            &[a, b],
            Some(th)
        )
        .unwrap()
        .into()),
    ]
}

fn member(set: &ConvexSet, dir: &[f64], t: f64) -> Point {
    let base = set.canonical_point();
    let z = set.lo_oracle(&point(dir)).unwrap();
    &base + (z - &base) * t
}

fn reference(set: &ConvexSet, u: &Point) -> Point {
    match set {
        ConvexSet::Ball(_) => set.exact_project(u).unwrap(),
        _ => {
            emulate_exact_projection(
                set,
                u,
                1e-12,
                &CondGLimits {
                    max_inner: 200_000,
                    ..Default::default()
                },
            )
            .unwrap()
            .ensure_converged()
            .unwrap()
            .point
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn iterates_feasible_monotone_and_certified(
        set in ball_or_ellipse(),
        u in coords(2, -5.0, 5.0),
        dir in coords(2, -1.0, 1.0),
        t in 0.0f64..1.0,
        v in coords(2, -3.0, 3.0),
        eps in 0.01f64..0.49,
    ) {
        let (u, v) = (point(&u), point(&v));
        let y = member(&set, &dir, t);
        let limits = CondGLimits::default();
        let (res, iterates) = condg_iterates(&set, &u, &y, &v, eps, &limits).unwrap();
        prop_assert!(res.converged);
        prop_assert!(res.final_gap <= res.threshold);
        for w in &iterates {
            prop_assert!(set.violation(w) <= FEAS_TOL);
        }
        for pair in iterates.windows(2) {
            prop_assert!((&pair[1] - &u).norm() <= (&pair[0] - &u).norm() + 1e-12);
        }
        let cert = verify_feasible_inexact_projection(&set, &u, &res.point, res.threshold).unwrap();
        prop_assert!(cert.ok, "violation {} over {}", cert.max_violation, res.threshold);
    }

    #[test]
    fn distance_to_exact_projection_is_bounded(
        set in ball_or_ellipse(),
        u in coords(2, -5.0, 5.0),
        dir in coords(2, -1.0, 1.0),
        t in 0.0f64..1.0,
        v in coords(2, -3.0, 3.0),
        eps in 0.01f64..0.49,
    ) {
        let (u, v) = (point(&u), point(&v));
        let y = member(&set, &dir, t);
        let yplus = condg_project(&set, &u, &y, &v, eps, &CondGLimits::default()).unwrap().point;
        let bound = (2.0 * eps).sqrt() * (&y - &v).norm();
        prop_assert!((yplus - reference(&set, &u)).norm() <= bound + 1e-4);
    }

    #[test]
    fn zero_forcing_recovers_the_ball_projection(
        c in coords(2, -2.0, 2.0),
        r in 0.2f64..2.0,
        u in coords(2, -5.0, 5.0),
        dir in coords(2, -1.0, 1.0),
        t in 0.0f64..1.0,
        v in coords(2, -3.0, 3.0),
    ) {
        let ball: ConvexSet = Ball::new(point(&c), r).unwrap().into();
        let u = point(&u);
        let y = member(&ball, &dir, t);
        let limits = CondGLimits { abs_gap_floor: 1e-10, max_inner: 200_000, ..Default::default() };
        let w = condg_project(&ball, &u, &y, &point(&v), 0.0, &limits).unwrap().point;
        prop_assert!((w - ball.exact_project(&u).unwrap()).norm() <= 1e-4);
    }
}

#[test]
fn polytope_projection_terminates_and_certifies() {
    let square: ConvexSet = apdr::geometry::VertexPolytope::new(vec![
        point(&[0.0, 0.0]),
        point(&[1.0, 0.0]),
        point(&[1.0, 1.0]),
        point(&[0.0, 1.0]),
        point(&[0.5, 0.5]),
    ])
    .unwrap()
    .into();
    let u = point(&[2.0, 0.3]);
    let y = point(&[0.0, 1.0]);
    let v = point(&[0.0, 0.0]);
    let res = condg_project(&square, &u, &y, &v, 0.01, &CondGLimits::default()).unwrap();
    assert!(res.converged);
    assert!(
        verify_feasible_inexact_projection(&square, &u, &res.point, res.threshold)
            .unwrap()
            .ok
    );
    // With bound 0.01 the point is within sqrt(0.02) of (1, 0.3).
    assert!((res.point - point(&[1.0, 0.3])).norm() <= 0.02f64.sqrt() + 1e-12);
}
