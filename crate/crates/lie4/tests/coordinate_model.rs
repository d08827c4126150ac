use lie4::coordinate_model::*;
use proptest::prelude::*;

#[test]
fn metric_at_origin_is_identity() {
    let g = metric_at(&[0.0; 4], 1.0).unwrap();
    assert_eq!(g, nalgebra::Matrix4::identity());
}

#[test]
fn metric_hand_evaluation() {
    let g = metric_at(&[0.0, 0.0, 0.0, 1.0], 1.0).unwrap();
    let r2 = 2f64.sqrt();
    assert!((g[(0, 0)] - r2).abs() < 1e-15);
    assert!((g[(1, 1)] - r2).abs() < 1e-15);
    assert_eq!(g[(0, 1)], -1.0);
    assert_eq!(g[(2, 2)], 1.0);
    assert_eq!(g[(3, 3)], 0.5);
    assert_eq!(g[(2, 3)], 0.0);
}

#[test]
fn nonpositive_lambda_rejected() {
    assert_eq!(KowalskiMetric::new(0.0), Err(ModelError::NonPositiveLambda(0.0)));
    assert!(KowalskiMetric::new(f64::NAN).is_err());
    assert!(ricci_fd(&FlatMetric, &[0.0; 4], 0.0).is_err());
}

#[test]
fn metric_positive_definite_on_samples() {
    for p in sample_points(100, 42) {
        let g = metric_at(&p, 0.7).unwrap();
        assert!(g.determinant() > 0.0);
        assert!(nalgebra::Cholesky::new(g).is_some());
    }
}

#[test]
fn flat_metric_has_zero_ricci() {
    let rep = ricci_fd(&FlatMetric, &[1.0, -2.0, 0.5, 0.1], DEFAULT_STEP).unwrap();
    assert!(rep.ricci.iter().flatten().all(|x| x.abs() <= 1e-10));
    assert!(rep.christoffel.iter().flatten().flatten().all(|x| x.abs() <= 1e-10));
}

#[test]
fn sphere_product_matches_closed_form() {
    let m = SphereProduct { r1: 1.0, r2: 2.0 };
    for p in [[1.0, 0.3, 0.8, -1.0], [0.6, 2.0, 2.1, 0.0]] {
        let rep = ricci_fd(&m, &p, DEFAULT_STEP).unwrap();
        let exact = m.exact_ricci(&p);
        for i in 0..4 {
            for j in 0..4 {
                assert!((rep.ricci[i][j] - exact[(i, j)]).abs() <= 1e-7, "{i}{j}");
            }
        }
        assert!((rep.scal - m.exact_scal()).abs() <= 1e-7);
    }
}

#[test]
fn coarse_step_is_reported() {
    let err = ricci_fd(&SphereProduct { r1: 1.0, r2: 1.0 }, &[1.2, 0.0, 1.4, 0.0], 0.2).unwrap_err();
    assert!(matches!(err, ModelError::NotConverged { .. }));
}

#[test]
fn lambda_scaling_of_the_spectrum() {
    let r = |lambda: f64| {
        let rep = ricci_fd(&KowalskiMetric::new(lambda).unwrap(), &[0.0; 4], DEFAULT_STEP).unwrap();
        zero_zero_r_r(&rep.ricci_eigenvalues).0
    };
    // recorded from the finite-difference run: r(λ) = -3/(2λ²)
    assert!((r(1.0) + 1.5).abs() < 1e-7);
    assert!((r(1.0) / r(2.0) - 4.0).abs() < 1e-6);
}

#[test]
fn cross_validation_finds_the_homothety() {
    let pts = sample_points(2, 5);
    let cv = cross_validate(1.0, 2.0, &pts, DEFAULT_STEP).unwrap();
    assert!((cv.lambda - 0.4).abs() < 1e-8);
    assert!(cv.agrees(1e-5));
    assert!((cv.family_ratio - 2.0).abs() < 1e-12);
    assert_eq!(cross_validate(1.0, 0.0, &pts, DEFAULT_STEP).unwrap_err(), ModelError::ZeroT);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn ricci_symmetric_and_spectrum_shape(
        u in -2.0..2.0f64, v in -2.0..2.0f64, x in -2.0..2.0f64, y in -2.0..2.0f64, lambda in 0.5..2.0f64,
    ) {
        let rep = ricci_fd(&KowalskiMetric::new(lambda).unwrap(), &[u, v, x, y], DEFAULT_STEP).unwrap();
        for i in 0..4 {
            for j in 0..4 {
                prop_assert!((rep.ricci[i][j] - rep.ricci[j][i]).abs() <= 1e-7);
            }
        }
        prop_assert!(rep.ricci_eigenvalues.windows(2).all(|w| w[0] <= w[1]));
        let (r, defect) = zero_zero_r_r(&rep.ricci_eigenvalues);
        prop_assert!(defect <= 1e-6 * r.abs());
        prop_assert!((rep.scal * lambda * lambda + 3.0).abs() <= 1e-6);
    }
}
