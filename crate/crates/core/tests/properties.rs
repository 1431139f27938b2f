//! Randomized property suites over the graded invariants. Every suite runs
//! a fixed-seed ChaCha stream, so each is deterministic and individually
//! reproducible.

mod common;

use common::*;
use liminal_core::{
    milnor_number, poincare_polynomial, s_vector, spectrum_of, t1_of, Rational, WeightSystem,
};
use num::bigint::BigInt;
use num::{BigUint, One, Zero};

#[test]
fn poincare_is_palindromic_and_sums_to_milnor_number() {
    let mut rng = rng(0x5eed_0001);
    for case in 0..1000 {
        let ws = random_realizable(&mut rng);
        let p = poincare_polynomial(&ws)
            .unwrap_or_else(|e| panic!("case {case}: ({ws}) should be realizable: {e}"));
        assert!(p.is_palindromic(), "case {case}: ({ws}) not palindromic");
        assert_eq!(
            milnor_number(&ws).unwrap(),
            p.milnor_number(),
            "case {case}: ({ws}) product formula disagrees with coefficient sum"
        );
    }
}

#[test]
fn spectrum_is_symmetric_about_half_n_plus_one() {
    let mut rng = rng(0x5eed_0002);
    for case in 0..300 {
        let ws = random_realizable(&mut rng);
        let p = poincare_polynomial(&ws).unwrap();
        let spec = spectrum_of(&ws, &p);
        let entries = spec.entries();
        let center = Rational::from(BigInt::from(ws.num_vars() as u64));
        for (e, opposite) in entries.iter().zip(entries.iter().rev()) {
            assert_eq!(
                e.value.clone() + opposite.value.clone(),
                center,
                "case {case}: ({ws}) spectral values not paired"
            );
            assert_eq!(
                e.multiplicity, opposite.multiplicity,
                "case {case}: ({ws}) multiplicities not paired"
            );
        }
    }
}

#[test]
fn diagonal_coefficients_match_monomial_box_enumeration() {
    let mut rng = rng(0x5eed_0003);
    let cap = BigUint::from(100_000u32);
    for case in 0..250 {
        let (exps, ws) = random_diagonal(&mut rng, 2..=6, 7);
        let family_mu: BigUint = exps.iter().map(|&p| BigUint::from(p - 1)).product();
        assert!(family_mu <= cap, "generator outgrew the oracle budget");

        let p = poincare_polynomial(&ws).unwrap();
        // Direct oracle: walk the exponent box prod {0..p_i-2} and grade
        // each monomial by sum alpha_i * a_i.
        let weights = ws.original_weights();
        let mut counts = vec![0u64; p.top_degree() + 1];
        let mut alpha = vec![0u64; exps.len()];
        'walk: loop {
            let degree: u64 = alpha.iter().zip(weights).map(|(&x, &a)| x * a).sum();
            counts[degree as usize] += 1;
            for i in 0..alpha.len() {
                if alpha[i] + 2 < exps[i] {
                    alpha[i] += 1;
                    continue 'walk;
                }
                alpha[i] = 0;
            }
            break;
        }
        let oracle: Vec<BigUint> = counts.into_iter().map(BigUint::from).collect();
        assert_eq!(
            p.coeffs(),
            &oracle[..],
            "case {case}: ({ws}) coefficients disagree with the box count"
        );
    }
}

#[test]
fn alpha_at_least_two_iff_alpha_at_least_one_and_s1_vanishes() {
    let mut rng = rng(0x5eed_0004);
    let one = Rational::from(BigInt::one());
    let two = Rational::from(BigInt::from(2));
    let mut above = 0u32;
    for case in 0..400 {
        // favor many-variable diagonals so alpha >= 2 actually occurs
        let ws = if case % 2 == 0 {
            random_diagonal(&mut rng, 4..=7, 4).1
        } else {
            random_realizable(&mut rng)
        };
        let alpha = ws.minimal_exponent();
        let s = s_vector(&ws).unwrap();
        let lhs = alpha >= two;
        let rhs = alpha >= one && s[1].is_zero();
        assert_eq!(lhs, rhs, "case {case}: ({ws}) alpha = {alpha}, s_1 = {}", s[1]);
        if lhs {
            above += 1;
        }
    }
    assert!(above >= 50, "generator produced too few alpha >= 2 cases: {above}");
}

#[test]
fn zero_liminal_signature_in_the_s_vector() {
    let mut rng = rng(0x5eed_0005);
    let pool = zero_liminal_pool();
    for case in 0..250 {
        // alternate defect-zero systems with strictly positive defect
        let ws = if case % 2 == 0 {
            random_zero_liminal(&mut rng, &pool)
        } else {
            // many small exponents push sum(1/p) above 1
            random_diagonal(&mut rng, 4..=7, 3).1
        };
        let defect = ws.liminal_defect();
        if defect < 0 {
            continue;
        }
        let s = s_vector(&ws).unwrap();
        let n = ws.dim();
        if defect == 0 {
            assert!(s[n].is_one(), "case {case}: ({ws}) s_n != 1 at defect 0");
            assert!(s[0].is_zero(), "case {case}: ({ws}) s_0 != 0 at defect 0");
        } else {
            assert!(s[n].is_zero(), "case {case}: ({ws}) s_n != 0 at defect > 0");
        }
    }
}

#[test]
fn scaling_leaves_every_graded_invariant_unchanged() {
    let mut rng = rng(0x5eed_0006);
    for case in 0..20 {
        let ws = random_realizable(&mut rng);
        let p = poincare_polynomial(&ws).unwrap();
        let spec = spectrum_of(&ws, &p);
        let t1 = t1_of(&ws, &p);
        let class = ws.classify();
        for m in [2u64, 3, 5] {
            let scaled = WeightSystem::new(
                ws.original_weights().iter().map(|&a| a * m).collect(),
                ws.degree() * m,
            )
            .unwrap();
            assert_eq!(scaled, ws, "case {case}: canonical equality broken");
            assert_eq!(scaled.minimal_exponent(), ws.minimal_exponent());
            assert_eq!(
                Rational::from(BigInt::from(scaled.liminal_defect()))
                    / BigInt::from(scaled.degree()),
                Rational::from(BigInt::from(ws.liminal_defect())) / BigInt::from(ws.degree()),
                "case {case}: defect/degree not scale-free"
            );

            let sclass = scaled.classify();
            assert_eq!(sclass.log_canonical, class.log_canonical);
            assert_eq!(sclass.rational, class.rational);
            assert_eq!(sclass.max_du_bois, class.max_du_bois);
            assert_eq!(sclass.max_rational, class.max_rational);
            assert_eq!(sclass.liminal_level, class.liminal_level);
            assert_eq!(sclass.zero_liminal, class.zero_liminal);

            // Poincare polynomial: P_scaled(t) = P(t^m)
            let sp = poincare_polynomial(&scaled).unwrap();
            assert_eq!(sp.top_degree(), p.top_degree() * m as usize);
            for (j, c) in sp.coeffs().iter().enumerate() {
                let expected = if j % m as usize == 0 {
                    p.coeffs()[j / m as usize].clone()
                } else {
                    BigUint::zero()
                };
                assert_eq!(*c, expected, "case {case}: coefficient t^{j} at scale {m}");
            }

            // spectrum and s-vector: identical as rationals
            let sspec = spectrum_of(&scaled, &sp);
            assert_eq!(sspec.entries(), spec.entries(), "case {case}: spectrum at scale {m}");
            assert_eq!(sspec.s_vector(), spec.s_vector());

            // T^1: weights stretch by m, dimensions carry over
            let st1 = t1_of(&scaled, &sp);
            assert_eq!(st1.by_weight().len(), t1.by_weight().len());
            for (a, dim) in t1.by_weight() {
                assert_eq!(
                    st1.weight_dim(a * m as i128),
                    *dim,
                    "case {case}: T^1 weight {a} at scale {m}"
                );
            }
            assert_eq!(st1.dim_k(), t1.dim_k());
            assert_eq!(st1.dim_k_prime(), t1.dim_k_prime());
            assert_eq!(st1.gr_link(), t1.gr_link());
            assert_eq!(st1.h1_log(), t1.h1_log());
            assert_eq!(st1.h1_log_minus_e(), t1.h1_log_minus_e());
            assert_eq!(st1.labels_valid(), t1.labels_valid());
        }
    }
}

#[test]
fn t_minus_equals_s1_on_zero_liminal_systems() {
    // all 14 diagonal families of dimension 3 ...
    for family in liminal_core::enumerate_diagonal_liminal(3).unwrap() {
        let ws = family.weight_system();
        let p = poincare_polynomial(ws).unwrap();
        let s = spectrum_of(ws, &p).s_vector();
        let t1 = t1_of(ws, &p);
        assert_eq!(t1.t_minus(), &s[1], "family {:?}", family.exponents());
    }
    // ... and 200 random defect-zero systems
    let mut rng = rng(0x5eed_0007);
    let pool = zero_liminal_pool();
    for case in 0..200 {
        let ws = random_zero_liminal(&mut rng, &pool);
        assert_eq!(ws.liminal_defect(), 0);
        let p = poincare_polynomial(&ws).unwrap();
        let s = spectrum_of(&ws, &p).s_vector();
        let t1 = t1_of(&ws, &p);
        assert_eq!(t1.t_minus(), &s[1], "case {case}: ({ws})");
        assert!(t1.labels_valid(), "case {case}: ({ws})");
    }
}

#[test]
fn t1_weights_mirror_and_partition() {
    let mut rng = rng(0x5eed_0008);
    for case in 0..300 {
        let ws = random_realizable(&mut rng);
        let p = poincare_polynomial(&ws).unwrap();
        let t1 = t1_of(&ws, &p);
        let mu = p.milnor_number();
        let shift = p.top_degree() as i128 - 2 * ws.degree() as i128;
        for (a, dim) in t1.by_weight() {
            assert_eq!(
                t1.weight_dim(shift - a),
                *dim,
                "case {case}: ({ws}) weight {a} vs mirror {}",
                shift - a
            );
        }
        // the two exact sequences partition mu both ways
        assert_eq!(t1.dim_k() + t1.h1_log_minus_e(), mu, "case {case}: ({ws})");
        assert_eq!(t1.dim_k_prime() + t1.h1_log(), mu, "case {case}: ({ws})");
        assert_eq!(t1.total_dim(), mu, "case {case}: ({ws})");
    }
}

#[test]
fn defect_is_degree_times_exponent_minus_one() {
    let mut rng = rng(0x5eed_0009);
    for _ in 0..300 {
        let ws = random_realizable(&mut rng);
        let lhs = Rational::from(BigInt::from(ws.liminal_defect()));
        let rhs = (ws.minimal_exponent() - Rational::from(BigInt::one()))
            * Rational::from(BigInt::from(ws.degree()));
        assert_eq!(lhs, rhs, "({ws})");
        assert_eq!(ws.classify().zero_liminal, ws.liminal_defect() == 0);
    }
}
