use necklace::curve::*;
use proptest::prelude::*;

#[test]
fn residuals_and_strip_up_to_120() {
    for t in 2..=120u32 {
        let pts = necklace_points(t, 1e-9).unwrap();
        let expected = if t % 2 == 1 { t - 1 } else { t };
        assert_eq!(pts.len() as u32, expected, "t={t}");
        for p in &pts {
            assert!(p.residual <= 1e-9, "t={t} {:?}", p);
            assert!(in_zero_strip(p.root, 1e-12), "t={t} {:?}", p.root);
            assert!(p.root.norm() > 0.0);
            let (a, b) = (p.root.re, p.root.im);
            let scale = b * b + a.abs() * (a * a + a.abs() + 1.0) / (1.0 + a).abs();
            assert!(curve_constraint_check(p.root).abs() <= 1e-9 * scale, "t={t} {}", p.root);
        }
    }
}

#[test]
fn refined_roots_match_closed_form() {
    // (1+y)^2 / (1+y^2) = w with w^m = -1 gives y^2 + 2y/(1-w) + 1 = 0.
    for t in [20u32, 57, 120, 301] {
        let m = t / 2;
        let zs = necklace_roots(t).unwrap();
        assert_eq!(zs.len() as u32, t);
        let one = necklace::Complex64::new(1.0, 0.0);
        for j in 0..m {
            let w = necklace::Complex64::from_polar(1.0, std::f64::consts::PI * (2 * j + 1) as f64 / m as f64);
            let b = 2.0 / (one - w);
            let d = (b * b - 4.0).sqrt();
            for y in [(-b + d) / 2.0, (-b - d) / 2.0] {
                let err = zs.iter().map(|z| (z - y).norm()).fold(f64::MAX, f64::min);
                assert!(err <= 1e-11 * y.norm(), "t={t} y={y} err={err}");
            }
        }
    }
}

#[test]
fn quartic_points() {
    let pts = necklace_points(4, 1e-12).unwrap();
    let expected = [
        (1.3460143, -0.7121567),
        (1.3460143, 0.7121567),
        (3.8900536, -5.9482247),
        (3.8900536, 5.9482247),
    ];
    assert_eq!(pts.len(), 4);
    for (p, (u, v)) in pts.iter().zip(expected) {
        assert!(p.point.approx_eq(&CurvePoint::affine(u, v), 1e-6), "{:?}", p.point);
    }
}

#[test]
fn quartic_zero_maps_onto_curve() {
    // z = y + 1/y solves z^2 + 2z + 2 = 0, so z = -1 + i and y^2 - zy + 1 = 0.
    let z = necklace::Complex64::new(-1.0, 1.0);
    let disc = (z * z - 4.0).sqrt();
    for y in [(z + disc) / 2.0, (z - disc) / 2.0] {
        assert!(curve_constraint_check(y).abs() < 1e-13, "{y}");
    }
}

#[test]
fn printed_table_first_six_rows_match() {
    let report = point_table_report().unwrap();
    assert_eq!(report.matching(1e-9), ["P1", "P2", "P3", "P4", "P5", "P6"]);
    // N_2 divides N_6, so the six points of N_6 are P1..P6.
    let six = necklace_points(6, 1e-9).unwrap();
    assert_eq!(six.len(), 6);
    for (name, _, printed) in printed_table().into_iter().take(6) {
        assert_eq!(six.iter().filter(|p| p.point.approx_eq(&printed, 1e-9)).count(), 1, "{name}");
    }
}

#[test]
fn printed_quartic_rows_are_off_by_four() {
    // The rows from N_4 are reported, not asserted against the computed points.
    let report = point_table_report().unwrap();
    for row in &report.rows[6..] {
        assert!(row.printed_residual > 1e-3, "{}", row.name);
        assert!(row.distance > 1.0, "{}", row.name);
        assert!(row.quarter_distance < 1e-9, "{} {}", row.name, row.quarter_distance);
    }
    assert_eq!(report.to_string(), point_table_report().unwrap().to_string());
}

#[test]
fn doubling_examples() {
    let two = necklace_points(2, 1e-9).unwrap();
    let p1 = two[0].point;
    assert!(add(&p1, &p1).approx_eq(&CurvePoint::affine(1.0, 0.0), 1e-8));
    let p3 = printed_table()[2].2;
    let p2 = CurvePoint::affine(2.0, 3f64.sqrt());
    assert!(add(&p3, &p3).approx_eq(&p2, 1e-8));
    let computed_p3 = necklace_points(6, 1e-9)
        .unwrap()
        .into_iter()
        .find(|p| p.point.approx_eq(&p3, 1e-9))
        .unwrap();
    assert!(add(&computed_p3.point, &computed_p3.point).approx_eq(&p2, 1e-8));
}

#[test]
fn octic_check_small() {
    let r = octic_check().unwrap();
    assert!(r.residual <= 1e-6, "{}", r.residual);
    let s5 = 5f64.sqrt();
    let re = 0.5 * (7.0 + 3.0 * s5 + (66.0 + 30.0 * s5).sqrt());
    let im = -0.5 * (21.0 + 9.0 * s5 + (30.0 * (29.0 + 13.0 * s5)).sqrt());
    assert!((r.w.re - re).abs() < 1e-9, "{}", r.w);
    assert!((r.w.im - im).abs() < 1e-9, "{}", r.w);
}

#[test]
fn octic_divides_no_row() {
    assert!(octic_divisibility_scan(300).unwrap().dividing.is_empty());
    assert!(octic_divisibility_scan(1001).is_err());
}

#[test]
fn shift_preserves_residual() {
    for t in [2u32, 4, 6, 17, 60] {
        for p in necklace_points(t, 1e-9).unwrap() {
            let (u, v) = p.point.coords().unwrap();
            let scale = v * v + u.abs().powi(3) + 2.0 * u * u + 2.0 * u.abs() + 1.0;
            let a = residual(&p.point).unwrap();
            let b = residual_48a4(&shift_48a4(&p.point)).unwrap();
            assert!((a - b).abs() <= 8.0 * f64::EPSILON * scale, "t={t}");
        }
    }
}

#[test]
fn closure_is_deterministic() {
    let a = closure_report(6, 1e-8).unwrap();
    assert_eq!(a, closure_report(6, 1e-8).unwrap());
    assert!(a.closed >= 2, "{a}");
    assert!(a.closed < a.pairs);
}

#[test]
fn odd_rows_keep_the_pole_zero_out() {
    let zs = necklace_roots(5).unwrap();
    assert!(zs.contains(&necklace::Complex64::new(-1.0, 0.0)));
    assert_eq!(necklace_points(5, 1e-9).unwrap().len(), 4);
}

fn on_curve() -> impl Strategy<Value = CurvePoint> {
    // u >= 1 gives v^2 >= 0; pick the sign of v at random.
    (1.0f64..50.0, any::<bool>()).prop_map(|(u, up)| {
        let v = (((u - 2.0) * u + 2.0) * u - 1.0).sqrt();
        CurvePoint::affine(u, if up { v } else { -v })
    })
}

proptest! {
    #[test]
    fn addition_commutes(p in on_curve(), q in on_curve()) {
        let a = add(&p, &q);
        let b = add(&q, &p);
        match (a, b) {
            (CurvePoint::Infinity, CurvePoint::Infinity) => {}
            (CurvePoint::Affine { u, v }, CurvePoint::Affine { u: u2, v: v2 }) => {
                let s = 1e-9 * (1.0 + u.abs() + v.abs());
                prop_assert!((u - u2).abs() <= s && (v - v2).abs() <= s);
            }
            _ => prop_assert!(false, "one sum at infinity"),
        }
    }

    #[test]
    fn inverse_and_identity(p in on_curve()) {
        prop_assert_eq!(add(&p, &negate(&p)), CurvePoint::Infinity);
        prop_assert_eq!(add(&p, &CurvePoint::Infinity), p);
    }

    #[test]
    fn sums_stay_on_curve(p in on_curve(), q in on_curve()) {
        if let CurvePoint::Affine { .. } = add(&p, &q) {
            prop_assert!(normalized_residual(&add(&p, &q)).unwrap() < 1e-6);
        }
    }
}
