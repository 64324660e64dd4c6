use approx::assert_abs_diff_eq;

use rqcm::constraint::{
    alpha_from_a, invariant_norm, pi_from_p, xi_directional_derivative, xi_from_x, Axis, ConstraintVector,
};
use rqcm::minkowski::{
    cm_and_relative, eta_params, general_boost, lorentz_factor, minkowski_dot, on_shell_momentum, perp_projection, rest_mass,
    total_and_relative_momentum, BoundSystem, ComplexFourVector, FourVector, MassBranch,
};
use rqcm::verify::finite_difference_gradient4;
use rqcm::Complex64;

fn assert_vec_eq(a: &[f64], b: &[f64], tol: f64) {
    assert_eq!(a.len(), b.len());
    for (x, y) in a.iter().zip(b) {
        assert_abs_diff_eq!(x, y, epsilon = tol);
    }
}

#[test]
fn metric_signs() {
    let e1 = FourVector::new(1.0, 0.0, 0.0, 0.0);
    let e4 = FourVector::new(0.0, 0.0, 0.0, 1.0);
    assert_eq!(minkowski_dot(&e1, &e1), 1.0);
    assert_eq!(minkowski_dot(&e4, &e4), -1.0);
    let sys = BoundSystem::at_rest(1.0, 1.0, 0.0).unwrap();
    let p = sys.total_momentum();
    assert_abs_diff_eq!(minkowski_dot(&p, &p), -4.0, epsilon = 1e-12);
}

#[test]
fn boost_examples() {
    let x = FourVector::new(1.0, 2.0, 3.0, 4.0);
    assert_eq!(general_boost(&x, &[0.0; 3]).unwrap(), x);
    let t = general_boost(&FourVector::new(0.0, 0.0, 0.0, 1.0), &[0.6, 0.0, 0.0]).unwrap();
    assert_vec_eq(&t.0, &[-0.75, 0.0, 0.0, 1.25], 1e-14);
    assert_abs_diff_eq!(lorentz_factor(&[0.6, 0.0, 0.0]).unwrap(), 1.25, epsilon = 1e-15);
}

#[test]
fn superluminal_boost_is_rejected() {
    assert!(general_boost(&FourVector::ZERO, &[1.0, 0.0, 0.0]).is_err());
    assert!(lorentz_factor(&[0.8, 0.7, 0.0]).is_err());
}

#[test]
fn rest_mass_examples() {
    assert_abs_diff_eq!(rest_mass(1.0, 1.0, 0.0, MassBranch::Minus).unwrap(), 2.0, epsilon = 1e-14);
    assert_abs_diff_eq!(rest_mass(2.0, 1.0, 0.0, MassBranch::Minus).unwrap(), 3.0, epsilon = 1e-14);
    let plus = rest_mass(2.0, 1.0, 0.0, MassBranch::Plus).unwrap();
    assert!((plus - 3.291).abs() < 1e-3, "plus branch gives {plus}");
    let m0 = rest_mass(1.0, 1.0, 0.01, MassBranch::Minus).unwrap();
    assert!((m0 - (2.0 + 0.01 / 0.5)).abs() <= 1e-3);
    assert_eq!(MassBranch::default(), MassBranch::Minus);
}

#[test]
fn ground_level_rest_mass_is_four() {
    assert_abs_diff_eq!(rest_mass(1.0, 1.0, 1.5, MassBranch::Minus).unwrap(), 4.0, epsilon = 1e-12);
}

#[test]
fn eta_examples() {
    let (a, b) = eta_params(1.0, 1.0, 2.0).unwrap();
    assert_abs_diff_eq!(a, 0.5, epsilon = 1e-15);
    assert_abs_diff_eq!(b, 0.5, epsilon = 1e-15);
    let (a, b) = eta_params(2.0, 1.0, 3.0).unwrap();
    assert_abs_diff_eq!(a, 5.0 / 6.0, epsilon = 1e-15);
    assert_abs_diff_eq!(b, 1.0 / 6.0, epsilon = 1e-15);
    for (m1, m2, m0) in [(0.3, 7.0, 6.5), (4.0, 0.1, 4.05), (1.0, 2.0, 2.9)] {
        let (a, b) = eta_params(m1, m2, m0).unwrap();
        assert_abs_diff_eq!(a + b, 1.0, epsilon = 1e-14);
    }
}

#[test]
fn cm_and_relative_examples() {
    let sys = BoundSystem::at_rest(1.0, 1.0, 0.0).unwrap();
    let w = FourVector::new(0.3, -1.0, 2.0, 5.0);
    let (cm, rel) = cm_and_relative(&w, &w, &sys);
    assert_vec_eq(&cm.0, &w.0, 1e-14);
    assert_eq!(rel, FourVector::ZERO);

    let (cm, rel) = cm_and_relative(&FourVector::new(1.0, 0.0, 0.0, 0.0), &FourVector::ZERO, &sys);
    assert_vec_eq(&cm.0, &[0.5, 0.0, 0.0, 0.0], 1e-15);
    assert_vec_eq(&rel.0, &[1.0, 0.0, 0.0, 0.0], 1e-15);

    let (p, q) = total_and_relative_momentum(&FourVector::new(1.0, 0.0, 0.0, 2.0), &FourVector::new(-1.0, 0.0, 0.0, 2.0), &sys);
    assert_vec_eq(&p.0, &[0.0, 0.0, 0.0, 4.0], 1e-15);
    assert_vec_eq(&q.0, &[1.0, 0.0, 0.0, 0.0], 1e-15);
}

#[test]
fn perp_projection_examples() {
    let m0 = 2.5;
    let rest = FourVector::new(0.0, 0.0, 0.0, m0);
    let w = FourVector::new(1.0, -2.0, 3.0, 7.0);
    assert_vec_eq(&perp_projection(&w, &rest, m0).unwrap().0, &[1.0, -2.0, 3.0, 0.0], 1e-14);
    assert_vec_eq(&perp_projection(&rest, &rest, m0).unwrap().0, &[0.0; 4], 1e-14);

    let p = on_shell_momentum(m0, &[0.3, -0.5, 0.6]).unwrap();
    let perp = perp_projection(&w, &p, m0).unwrap();
    assert_abs_diff_eq!(p.dot(&perp), 0.0, epsilon = 1e-12);
    assert!(perp_projection(&w, &FourVector::new(0.0, 0.0, 0.0, 1.0), m0).is_err());
}

#[test]
fn on_shell_momentum_examples() {
    assert_vec_eq(&on_shell_momentum(2.0, &[0.0; 3]).unwrap().0, &[0.0, 0.0, 0.0, 2.0], 1e-15);
    assert_vec_eq(&on_shell_momentum(1.0, &[0.6, 0.0, 0.0]).unwrap().0, &[0.75, 0.0, 0.0, 1.25], 1e-14);
    let p = on_shell_momentum(3.7, &[-0.4, 0.2, 0.7]).unwrap();
    assert_abs_diff_eq!(p.dot(&p), -3.7 * 3.7, epsilon = 1e-12);
}

#[test]
fn xi_examples() {
    let rest = BoundSystem::at_rest(1.0, 2.0, 0.4).unwrap();
    let x = FourVector::new(0.5, -1.5, 2.5, 9.0);
    assert_eq!(xi_from_x(&x, &rest).0, [0.5, -1.5, 2.5]);
    assert_eq!(xi_from_x(&FourVector::ZERO, &rest).0, [0.0; 3]);

    let v = [0.6, 0.0, 0.0];
    let moving = BoundSystem::new(1.0, 2.0, 0.4, v).unwrap();
    let x = FourVector::new(1.0, 0.0, 0.0, 0.0);
    let in_rest_frame = general_boost(&x, &v).unwrap();
    assert_vec_eq(&xi_from_x(&x, &moving).0, &in_rest_frame.spatial(), 1e-14);
}

#[test]
fn xi_matches_rest_frame_coordinates_for_oblique_frames() {
    let v = [0.3, -0.5, 0.6];
    let sys = BoundSystem::new(1.3, 0.7, 0.2, v).unwrap();
    let x = FourVector::new(0.4, 1.1, -0.8, 2.0);
    assert_vec_eq(&xi_from_x(&x, &sys).0, &general_boost(&x, &v).unwrap().spatial(), 1e-13);
}

#[test]
fn pi_examples() {
    let rest = BoundSystem::at_rest(1.0, 1.0, 0.0).unwrap();
    let p = FourVector::new(0.5, -1.5, 2.5, 9.0);
    assert_eq!(pi_from_p(&p, &rest).0, [0.5, -1.5, 2.5]);

    let moving = BoundSystem::new(1.0, 3.0, 0.5, [0.1, 0.7, -0.2]).unwrap();
    let total = moving.total_momentum();
    assert_vec_eq(&pi_from_p(&total, &moving).0, &[0.0; 3], 1e-12);
    assert_abs_diff_eq!(invariant_norm(&total, &moving), 0.0, epsilon = 1e-12);

    let q = FourVector::new(0.3, 0.4, -0.2, 0.9);
    let m0 = moving.rest_mass();
    let expected = q.dot(&q) + total.dot(&q).powi(2) / (m0 * m0);
    assert_abs_diff_eq!(pi_from_p(&q, &moving).norm_sq(), expected, epsilon = 1e-12);
}

#[test]
fn alpha_examples() {
    let rest = BoundSystem::at_rest(1.0, 1.0, 0.0).unwrap();
    let z = [Complex64::new(1.0, 2.0), Complex64::new(-0.5, 0.1), Complex64::new(0.0, -3.0), Complex64::new(4.0, 4.0)];
    let a = ComplexFourVector(z);
    assert_eq!(alpha_from_a(&a, &rest).0, [z[0], z[1], z[2]]);

    let moving = BoundSystem::new(2.0, 1.0, 0.3, [0.2, -0.4, 0.5]).unwrap();
    let x = FourVector::new(0.7, -0.2, 1.3, 0.4);
    let alpha = alpha_from_a(&ComplexFourVector::from_real(&x), &moving);
    let xi = xi_from_x(&x, &moving);
    for k in 0..3 {
        assert_abs_diff_eq!(alpha.0[k].re, xi.0[k], epsilon = 1e-14);
        assert_eq!(alpha.0[k].im, 0.0);
    }

    // Term-by-term evaluation with a₄ = 0 and purely imaginary spatial part.
    let a = ComplexFourVector::new(Complex64::new(0.0, 0.5), Complex64::new(0.0, -1.0), Complex64::new(0.0, 2.0), Complex64::new(0.0, 0.0));
    let p = moving.total_momentum();
    let m0 = moving.rest_mass();
    let p_dot_a: Complex64 = (0..3).map(|k| a.0[k] * p.0[k]).sum::<Complex64>() - a.0[3] * p.0[3];
    let got = alpha_from_a(&a, &moving);
    for k in 0..3 {
        let expected = a.0[k] + p.0[k] * (p_dot_a - a.0[3] * m0) / (m0 * (m0 + p.0[3]));
        assert_abs_diff_eq!((got.0[k] - expected).norm(), 0.0, epsilon = 1e-14);
    }
}

#[test]
fn xi_derivative_of_xi_is_kronecker_delta() {
    let sys = BoundSystem::new(1.0, 2.0, 0.6, [0.4, -0.3, 0.5]).unwrap();
    let x = FourVector::new(0.3, 0.1, -0.7, 0.2);
    for j in Axis::ALL {
        let grad = finite_difference_gradient4(|y| xi_from_x(y, &sys).0[j.index()], &x, 1e-6);
        for i in Axis::ALL {
            let d = xi_directional_derivative(&grad, i, &sys);
            assert_abs_diff_eq!(d, if i == j { 1.0 } else { 0.0 }, epsilon = 1e-8);
        }
    }
}

#[test]
fn xi_derivative_in_rest_frame_is_spatial_partial() {
    let sys = BoundSystem::at_rest(1.0, 1.0, 0.0).unwrap();
    let grad = FourVector::new(0.2, -0.4, 0.9, 3.0);
    for i in Axis::ALL {
        assert_eq!(xi_directional_derivative(&grad, i, &sys), grad.0[i.index()]);
    }
}

#[test]
fn xi_derivative_of_xi_squared() {
    let sys = BoundSystem::new(1.5, 0.5, 0.2, [-0.6, 0.2, 0.3]).unwrap();
    let x = FourVector::new(-0.4, 0.8, 0.5, -1.1);
    let grad = finite_difference_gradient4(|y| xi_from_x(y, &sys).norm_sq(), &x, 1e-6);
    let xi = xi_from_x(&x, &sys);
    for i in Axis::ALL {
        assert_abs_diff_eq!(xi_directional_derivative(&grad, i, &sys), 2.0 * xi.0[i.index()], epsilon = 1e-7);
    }
}

#[test]
fn invariant_norm_examples() {
    let rest = BoundSystem::at_rest(1.0, 1.0, 0.0).unwrap();
    assert_eq!(invariant_norm(&FourVector::new(1.0, 0.0, 0.0, 0.0), &rest), 1.0);

    let sys = BoundSystem::new(1.0, 2.0, 0.3, [0.1, 0.2, 0.3]).unwrap();
    let x = FourVector::new(0.4, -1.0, 0.6, 1.7);
    let u = [-0.5, 0.4, 0.3];
    let boosted = sys.boosted(&u).unwrap();
    let x_boosted = general_boost(&x, &u).unwrap();
    let a = invariant_norm(&x, &sys);
    let b = invariant_norm(&x_boosted, &boosted);
    assert!((a - b).abs() <= 1e-10 * a.abs().max(1.0));
    assert_abs_diff_eq!(a, xi_from_x(&x, &sys).norm_sq(), epsilon = 1e-12);
}

#[test]
fn constraint_vector_helpers() {
    let a = ConstraintVector([1.0, 2.0, 2.0]);
    assert_eq!(a.norm(), 3.0);
    assert_eq!(a.dot(&ConstraintVector([1.0, 0.0, -1.0])), -1.0);
    assert!(Axis::new(3).is_err());
}
