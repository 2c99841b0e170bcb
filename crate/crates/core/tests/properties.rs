//! Property tests for the algebraic invariants.

use proptest::prelude::*;

use pauli_core::group::{find_isomorphism, verify_isomorphism, zoo};
use pauli_core::numeric::{rational, ExactMatrix, ExactQuaternion, GaussianRational, Quaternion};
use pauli_core::presentation::{bundled, quotient_presentation, todd_coxeter, Word};
use pauli_core::pseudo_fermion::{
    build_pf, eigensystem, hamiltonian, metric_operators, rho_operators, PFParams,
};
use pauli_core::sphere::{exact_unit_quaternions, z4_act, SpherePointC};

fn gauss() -> impl Strategy<Value = GaussianRational> {
    (-6i64..=6, -6i64..=6).prop_map(|(a, b)| GaussianRational::from_integers(a, b))
}

fn matrix() -> impl Strategy<Value = ExactMatrix> {
    (gauss(), gauss(), gauss(), gauss()).prop_map(|(a, b, c, d)| ExactMatrix::new(a, b, c, d))
}

fn quaternion() -> impl Strategy<Value = ExactQuaternion> {
    (-9i64..=9, -9i64..=9, -9i64..=9, -9i64..=9)
        .prop_map(|(a, b, c, d)| Quaternion::from_integers(a, b, c, d))
}

fn bundled_word() -> impl Strategy<Value = Word> {
    prop::collection::vec((0..3usize, any::<bool>()), 0..6).prop_map(|v| {
        let mut w = Word::empty();
        for (g, inv) in v {
            w = w.concat(&Word::power_of(
                ["u", "xy", "y"][g],
                if inv { -1 } else { 1 },
            ));
        }
        w
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn matrix_product_is_associative(a in matrix(), b in matrix(), c in matrix()) {
        prop_assert_eq!(a.mat_mul(&b).mat_mul(&c), a.mat_mul(&b.mat_mul(&c)));
    }

    #[test]
    fn determinant_is_multiplicative(a in matrix(), b in matrix()) {
        prop_assert_eq!(a.mat_mul(&b).det(), a.det() * b.det());
    }

    #[test]
    fn adjoint_reverses_products(a in matrix(), b in matrix()) {
        prop_assert_eq!(a.mat_mul(&b).adjoint(), b.adjoint().mat_mul(&a.adjoint()));
    }

    #[test]
    fn quaternion_norm_is_multiplicative(p in quaternion(), q in quaternion()) {
        prop_assert_eq!(p.quat_mul(&q).norm_sq(), p.norm_sq() * q.norm_sq());
    }

    #[test]
    fn quaternion_product_is_associative(p in quaternion(), q in quaternion(), r in quaternion()) {
        prop_assert_eq!(p.quat_mul(&q).quat_mul(&r), p.quat_mul(&q.quat_mul(&r)));
    }

    #[test]
    fn sampled_points_are_exact_units(seed in any::<u64>()) {
        for q in exact_unit_quaternions(60, seed) {
            prop_assert_eq!(q.norm_sq(), rational(1, 1));
        }
    }

    #[test]
    fn z4_action_is_a_homomorphism(seed in any::<u64>(), m in -8i64..8, n in -8i64..8) {
        let q = exact_unit_quaternions(49, seed).pop().unwrap();
        let [a, b, c, d] = q.coefficients().map(Clone::clone);
        let p = SpherePointC::new(GaussianRational::new(a, b), GaussianRational::new(c, d), 0.0).unwrap();
        prop_assert_eq!(z4_act(m, &z4_act(n, &p)), z4_act(m + n, &p));
        prop_assert_eq!(z4_act(4, &p), p);
    }

    #[test]
    fn quotient_order_divides(extra in bundled_word()) {
        let base = bundled::seifquo();
        let q = quotient_presentation(&base, &[extra]).unwrap();
        prop_assert_eq!(q.generators(), base.generators());
        let t = todd_coxeter(&q, &[], 1000).unwrap();
        prop_assert!(t.is_complete());
        prop_assert!(t.verify(&q));
        prop_assert_eq!(16 % t.coset_count(), 0);
    }

    #[test]
    fn pf_invariants_hold_on_valid_parameters(
        w in 0.2f64..8.0,
        theta in -3.2f64..3.2,
        frac in -0.95f64..0.95,
    ) {
        let p = PFParams::new(w, theta, frac * w).unwrap();
        let h = hamiltonian(&p, 1e-9);
        prop_assert!(h.trace_residual <= 1e-9 && h.det_residual <= 1e-9, "{:?}", h);
        prop_assert!(h.passed, "{:?}", h);
        let rho = rho_operators(&build_pf(&p)).relations();
        prop_assert!(rho.max_residual() <= 1e-9);
        let es = eigensystem(&build_pf(&p), 1e-12).unwrap();
        prop_assert!(es.check(1e-8).passed);
        prop_assert!(metric_operators(&es, 1e-8).passed);
    }
}

#[test]
fn isomorphism_search_is_reflexive_on_the_zoo() {
    for (name, g) in zoo::all() {
        let m = find_isomorphism(&g, &g).unwrap_or_else(|| panic!("{name}"));
        assert!(verify_isomorphism(&g, &g, &m), "{name}");
    }
}
