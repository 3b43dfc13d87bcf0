mod common;

use std::collections::HashMap;

use fqh_core::entangle::{
    closed_form_sf_laughlin2, modified_measure, one_body_density, schliemann_eta, slater_pairing,
};
use fqh_core::expand::{is_antisymmetric, slater_project, vandermonde_power, MultiPoly};
use fqh_core::lll::to_fock;
use fqh_core::quasihole::{condense, vanishes, CondensateKernel};
use fqh_core::states::{Family, FamilySpec, StateError};
use itertools::Itertools;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn as_map(p: &MultiPoly) -> HashMap<Vec<u32>, BigInt> {
    p.terms().map(|(e, c)| (e.as_slice().to_vec(), c.clone())).collect()
}

fn family_states(n_max: usize, m_max: u32) -> Vec<(FamilySpec, fqh_core::FockVector)> {
    let mut out = Vec::new();
    for family in Family::ALL {
        for n in 2..=n_max {
            for m in (1..=m_max).step_by(2) {
                if let Ok(v) = FamilySpec::new(family, n, m).build() {
                    out.push((FamilySpec::new(family, n, m), v));
                }
            }
        }
    }
    out
}

#[test]
fn vandermonde_matches_iterated_linear_factors() {
    for n in 1..=3 {
        for m in 1..=5 {
            assert_eq!(as_map(&vandermonde_power(n, m)), common::brute_vandermonde(n, m), "N={n} m={m}");
        }
    }
}

#[test]
fn slater_coefficients_match_enumeration() {
    for m in [1, 3, 5] {
        let s = slater_project(&vandermonde_power(3, m)).unwrap();
        for (lambda, c) in s.terms() {
            assert_eq!(common::brute_coefficient(lambda.as_slice(), m), *c);
        }
    }
}

#[test]
fn condensate_matches_direct_integration() {
    for n in 1..=4 {
        for p in 0..=10u32 {
            let out = condense(&CondensateKernel::new(n, p));
            let oracle = common::brute_condensate(n, p);
            assert_eq!(out.is_zero(), oracle.is_empty(), "N={n} p={p}");
            assert_eq!(out.is_zero(), vanishes(n, p), "N={n} p={p}");
            if out.is_zero() {
                continue;
            }
            assert_eq!(out.scale.pi_power, 2);
            assert_eq!(oracle.len(), out.poly.len());
            for (e, c) in out.poly.terms() {
                let want = BigRational::from_integer(c.clone()) * &out.scale.coef;
                assert_eq!(oracle.get(e.as_slice()), Some(&want), "N={n} p={p} {e}");
            }
            assert!(out.poly.is_symmetric());
            assert_eq!(out.poly.homogeneous_degree(), Some(2 * n as u32 - p));
        }
    }
}

#[test]
fn family_polynomials_are_antisymmetric_and_round_trip() {
    for (spec, _) in family_states(3, 9) {
        let p = spec.polynomial().unwrap();
        for (i, j) in (0..spec.n).tuple_combinations() {
            assert_eq!(p.swap_vars(i, j), -&p, "{spec} swap {i},{j}");
        }
        let s = slater_project(&p).unwrap();
        assert_eq!(s.to_poly(), p, "{spec}");
    }
}

#[test]
fn fock_states_are_exactly_normalized_and_homogeneous() {
    for (spec, v) in family_states(4, 7) {
        let total: BigRational = v.terms().map(|(_, a)| a.magnitude_sq.clone()).sum();
        assert!(total.is_one(), "{spec}");
        let degree = spec.polynomial().unwrap().homogeneous_degree().unwrap() as usize;
        assert_eq!(v.angular_momentum(), Some(degree), "{spec}");
        assert_eq!(v.dim(), degree + 1);
        assert!(v.terms().all(|(c, _)| c.orbitals().iter().all(|&o| o < v.dim())));
    }
}

#[test]
fn density_matrices_are_exact_and_diagonal() {
    for (spec, v) in family_states(4, 5) {
        let rho = one_body_density(&v);
        assert!(rho.is_diagonal(), "{spec}");
        assert!(rho.trace().is_one(), "{spec}");
        assert!(rho.diagonal().iter().all(|d| *d >= BigRational::zero()));
    }
}

#[test]
fn measure_is_zero_exactly_on_single_configurations() {
    for (spec, v) in family_states(4, 9) {
        let s = modified_measure(&v).measure_nats;
        assert!(s >= 0.0);
        assert_eq!(s == 0.0, v.is_single_config(), "{spec}: {s}");
    }
}

#[test]
fn two_electron_spectrum_is_pair_degenerate() {
    for (spec, v) in family_states(2, 13) {
        let rho = one_body_density(&v);
        let pairing = slater_pairing(&v).unwrap();
        for pair in &pairing.pairs {
            let want = BigRational::new(BigInt::one(), BigInt::from(2)) * &v
                .terms()
                .find(|(c, _)| c.orbitals() == [pair.a, pair.b])
                .unwrap()
                .1
                .magnitude_sq;
            assert_eq!(rho.diagonal()[pair.a], want, "{spec}");
            assert_eq!(rho.diagonal()[pair.b], want, "{spec}");
        }
    }
}

#[test]
fn closed_form_tracks_pipeline() {
    for m in (1..=13).step_by(2) {
        let v = FamilySpec::new(Family::Laughlin, 2, m).build().unwrap();
        let diff = closed_form_sf_laughlin2(m).unwrap() - modified_measure(&v).measure_nats;
        assert!(diff.abs() < 1e-10, "m={m}: {diff}");
    }
}

#[test]
fn chi_vanishes_exactly_beyond_the_boundary() {
    for n in 2..=4 {
        for m in (1..=13).step_by(2) {
            let zero = matches!(FamilySpec::new(Family::Chi, n, m).build(), Err(StateError::ZeroWavefunction { .. }));
            assert_eq!(zero, vanishes(n, m - 1), "N={n} m={m}");
        }
    }
}

#[test]
fn chi_four_three_is_entangled_and_matches_brute_force() {
    // Independent route: ν=1 determinant times the directly integrated condensate.
    let v = FamilySpec::new(Family::Chi, 4, 3).build().unwrap();
    assert!(modified_measure(&v).measure_nats > 0.1);
    let oracle = common::brute_condensate(4, 2);
    let condensate = MultiPoly::from_terms(
        4,
        oracle.into_iter().map(|(e, c)| (e, c.to_integer())),
    );
    let poly = vandermonde_power(4, 1).multiply(&condensate).unwrap();
    let w = to_fock(&slater_project(&poly).unwrap()).unwrap();
    let probs = |v: &fqh_core::FockVector| -> Vec<BigRational> {
        v.terms().map(|(_, a)| a.magnitude_sq.clone()).collect()
    };
    assert_eq!(probs(&v), probs(&w));
}

#[test]
fn eta_zero_iff_measure_zero_on_random_states() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for i in 0..200 {
        let v = if i % 3 == 0 { common::random_product_state(&mut rng) } else { common::random_generic_state(&mut rng) };
        let eta = schliemann_eta(&v).unwrap();
        let s = modified_measure(&v).measure_nats;
        assert_eq!(eta.is_zero(), s == 0.0, "state {i}: η={} S={s}", eta.value());
        assert!(eta.value() <= 1.0 + 1e-12);
        let pairing = slater_pairing(&v).unwrap();
        assert!((pairing.measure_nats() - s).abs() < 1e-9, "state {i}");
    }
}

fn small_poly(n: usize) -> impl Strategy<Value = MultiPoly> {
    prop::collection::vec((prop::collection::vec(0u32..4, n), -5i64..=5), 0..6)
        .prop_map(move |terms| MultiPoly::from_terms(n, terms.into_iter().map(|(e, c)| (e, BigInt::from(c)))))
}

proptest! {
    #[test]
    fn antisymmetrized_polynomials_round_trip(p in small_poly(3)) {
        // Antisymmetrize p by multiplying with the Vandermonde determinant
        // after symmetrizing.
        let mut sym = MultiPoly::zero(3);
        for perm in (0..3).permutations(3) {
            sym = &sym + &p.permute_vars(&perm);
        }
        let a = sym.multiply(&vandermonde_power(3, 1)).unwrap();
        prop_assert!(is_antisymmetric(&a));
        let s = slater_project(&a).unwrap();
        prop_assert_eq!(s.to_poly(), a);
    }

    #[test]
    fn multiplication_is_commutative_and_degree_additive(p in small_poly(2), q in small_poly(2)) {
        let pq = p.multiply(&q).unwrap();
        prop_assert_eq!(&pq, &q.multiply(&p).unwrap());
        if let (Some(dp), Some(dq)) = (p.total_degree(), q.total_degree()) {
            prop_assert_eq!(pq.total_degree(), Some(dp + dq));
        }
    }

    #[test]
    fn vandermonde_is_homogeneous(n in 1usize..=4, m in 1u32..=4) {
        let v = vandermonde_power(n, m);
        prop_assert_eq!(v.homogeneous_degree(), Some(m * (n * n.saturating_sub(1) / 2) as u32));
        prop_assert_eq!(is_antisymmetric(&v), m % 2 == 1 || n < 2);
    }
}
