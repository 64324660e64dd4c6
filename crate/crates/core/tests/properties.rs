use proptest::prelude::*;

use rqcm::constraint::{embed, invariant_norm, pi_from_p, xi_from_x, Axis, ConstraintVector};
use rqcm::minkowski::{
    eta_params, general_boost, minkowski_dot, on_shell_momentum, perp_projection, rest_mass, BoundSystem, FourVector, MassBranch,
};
use rqcm::oscillator::{hermite, ladder_apply, psi_position, LadderDirection, OscillatorState, QuantumNumbers};

fn close(a: f64, b: f64, rel: f64) -> bool {
    (a - b).abs() <= rel * a.abs().max(b.abs()).max(1.0)
}

fn component() -> impl Strategy<Value = f64> {
    -5.0..5.0f64
}

fn four_vector() -> impl Strategy<Value = FourVector> {
    prop::array::uniform4(component()).prop_map(FourVector)
}

/// Velocities with |v| ≤ 0.99.
fn velocity() -> impl Strategy<Value = [f64; 3]> {
    (prop::array::uniform3(-1.0..1.0f64), 0.0..0.99f64).prop_map(|(d, speed)| {
        let n = (d[0] * d[0] + d[1] * d[1] + d[2] * d[2]).sqrt();
        if n < 1e-9 {
            [0.0; 3]
        } else {
            d.map(|c| c / n * speed)
        }
    })
}

fn system() -> impl Strategy<Value = BoundSystem> {
    (0.1..5.0f64, 0.1..5.0f64, 0.0..1.0f64, velocity())
        .prop_map(|(m1, m2, s, v)| BoundSystem::new(m1, m2, s * m1 * m2, v).unwrap())
}

proptest! {
    #[test]
    fn boosts_preserve_the_interval(x in four_vector(), v in velocity()) {
        let y = general_boost(&x, &v).unwrap();
        prop_assert!(close(minkowski_dot(&y, &y), minkowski_dot(&x, &x), 1e-10));
    }

    #[test]
    fn free_rest_mass_is_mass_sum(m1 in 0.01..100.0f64, m2 in 0.01..100.0f64) {
        prop_assert!(close(rest_mass(m1, m2, 0.0, MassBranch::Minus).unwrap(), m1 + m2, 1e-12));
    }

    #[test]
    fn eta_weights_sum_to_one(m1 in 0.1..10.0f64, m2 in 0.1..10.0f64, extra in 0.0..3.0f64) {
        let (a, b) = eta_params(m1, m2, m1 + m2 + extra).unwrap();
        prop_assert!(close(a + b, 1.0, 1e-14));
    }

    #[test]
    fn on_shell_momentum_squares_to_mass(m0 in 0.1..20.0f64, v in velocity()) {
        let p = on_shell_momentum(m0, &v).unwrap();
        prop_assert!(close(p.dot(&p), -m0 * m0, 1e-12));
    }

    #[test]
    fn projection_is_orthogonal_and_idempotent(w in four_vector(), sys in system()) {
        let p = sys.total_momentum();
        let m0 = sys.rest_mass();
        let once = perp_projection(&w, &p, m0).unwrap();
        let twice = perp_projection(&once, &p, m0).unwrap();
        prop_assert!(p.dot(&once).abs() <= 1e-10 * p.euclidean_norm() * w.euclidean_norm().max(1.0));
        for k in 0..4 {
            prop_assert!(close(once.0[k], twice.0[k], 1e-10));
        }
    }

    #[test]
    fn constraint_norms_are_frame_invariant(x in four_vector(), q in four_vector(), sys in system(), u in velocity()) {
        let moved = sys.boosted(&u).unwrap();
        let x2 = general_boost(&x, &u).unwrap();
        let q2 = general_boost(&q, &u).unwrap();
        prop_assert!(close(xi_from_x(&x, &sys).norm_sq(), xi_from_x(&x2, &moved).norm_sq(), 1e-9));
        prop_assert!(close(pi_from_p(&q, &sys).norm_sq(), pi_from_p(&q2, &moved).norm_sq(), 1e-9));
        prop_assert!(close(xi_from_x(&x, &sys).dot(&pi_from_p(&q, &sys)), xi_from_x(&x2, &moved).dot(&pi_from_p(&q2, &moved)), 1e-9));
        prop_assert!(close(invariant_norm(&x, &sys), invariant_norm(&x2, &moved), 1e-9));
    }

    #[test]
    fn embedding_inverts_xi(c in prop::array::uniform3(component()), sys in system()) {
        let xi = ConstraintVector(c);
        let back = xi_from_x(&embed(&xi, &sys), &sys);
        for (got, want) in back.0.iter().zip(c) {
            prop_assert!(close(*got, want, 1e-12));
        }
    }

    #[test]
    fn xi_ignores_shifts_along_the_total_momentum(x in four_vector(), sys in system(), t in -3.0..3.0f64) {
        let shifted = x + sys.four_velocity() * t;
        let a = xi_from_x(&x, &sys);
        let b = xi_from_x(&shifted, &sys);
        for k in 0..3 {
            prop_assert!((a.0[k] - b.0[k]).abs() <= 1e-11 * (1.0 + x.euclidean_norm() + t.abs()) * sys.four_velocity().euclidean_norm());
        }
    }

    #[test]
    fn hermite_recurrence(l in 1i64..30, y in -4.0..4.0f64) {
        let next = hermite(l + 1, y).unwrap();
        let expected = 2.0 * y * hermite(l, y).unwrap() - 2.0 * l as f64 * hermite(l - 1, y).unwrap();
        prop_assert!(close(next, expected, 1e-10));
    }

    #[test]
    fn ladder_round_trip_restores_state(l in prop::array::uniform3(0u32..8), i in 0usize..3, omega in 0.2..3.0f64) {
        let s = OscillatorState::new(QuantumNumbers::new(l[0], l[1], l[2]).unwrap(), omega, 1.0, 2.0, [0.1, 0.0, 0.2]).unwrap();
        let axis = Axis::new(i).unwrap();
        let up = ladder_apply(LadderDirection::Raise, axis, &s).unwrap();
        let down = ladder_apply(LadderDirection::Lower, axis, &up.state.unwrap()).unwrap();
        prop_assert_eq!(down.state.unwrap().quanta(), s.quanta());
        prop_assert!(close(up.coefficient * down.coefficient, f64::from(l[i]) + 1.0, 1e-14));
    }

    #[test]
    fn cm_position_only_changes_the_phase(x in four_vector(), cm in four_vector(), sys_v in velocity()) {
        let s = OscillatorState::new(QuantumNumbers::new(1, 0, 2).unwrap(), 0.8, 1.0, 1.0, sys_v).unwrap();
        let a = psi_position(&s, &x, &FourVector::ZERO).norm();
        let b = psi_position(&s, &x, &cm).norm();
        prop_assert!((a - b).abs() <= 1e-12 * a.max(1e-300));
    }
}
