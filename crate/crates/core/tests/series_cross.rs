//! Cross-module consistency between the closed-form dimension series and
//! the graded computations, plus brute-force confirmation of the bounded
//! composition counts.

use liminal_core::{
    local_image_dims, poincare_polynomial, t1_of, t_minus_formula, verify_identity, WeightSystem,
};
use num::BigUint;

fn fermat(n: u64) -> WeightSystem {
    WeightSystem::new(vec![1; (n + 1) as usize], n + 1).unwrap()
}

#[test]
fn identity_holds_for_all_supported_dimensions() {
    for n in 3..=64 {
        let witness = verify_identity(n).unwrap();
        assert!(witness.holds, "identity fails at n = {n}");
        assert!(witness.t_minus_matches_t1, "t_minus cross-check fails at n = {n}");
    }
    let w = verify_identity(3).unwrap();
    assert_eq!(
        (w.dim_a_system, w.moduli_e, w.t_minus, w.global_t1),
        (
            BigUint::from(51u32),
            BigUint::from(19u32),
            BigUint::from(31u32),
            BigUint::from(101u32)
        )
    );
}

#[test]
fn fermat_t_minus_matches_formula_through_n_20() {
    // the Poincare route stays cheap (the coefficient vector has a few
    // hundred entries) even where the Milnor number is astronomical
    for n in 3..=20u64 {
        let ws = fermat(n);
        let p = poincare_polynomial(&ws).unwrap();
        let t1 = t1_of(&ws, &p);
        assert_eq!(
            t1.t_minus(),
            &t_minus_formula(n).unwrap(),
            "Fermat cone disagrees with the closed form at n = {n}"
        );
    }
}

#[test]
fn local_image_matches_direct_enumeration_up_to_n_5() {
    for n in 2..=5u64 {
        let dims = local_image_dims(n).unwrap();
        // walk {0..n-1}^(n+1) and count exponent sums <= n+2
        let vars = (n + 1) as usize;
        let mut alpha = vec![0u64; vars];
        let mut full = 0u64;
        let mut image = 0u64;
        'walk: loop {
            full += 1;
            if alpha.iter().sum::<u64>() <= n + 2 {
                image += 1;
            }
            for slot in alpha.iter_mut() {
                if *slot + 1 < n {
                    *slot += 1;
                    continue 'walk;
                }
                *slot = 0;
            }
            break;
        }
        assert_eq!(dims.full, BigUint::from(full), "full count at n = {n}");
        assert_eq!(dims.image, BigUint::from(image), "image count at n = {n}");
        assert_eq!(dims.codim, BigUint::from(full - image), "codim at n = {n}");
    }
}

#[test]
fn codim_is_strictly_increasing_from_3_to_64() {
    // observational regression: the library does not promise this, the
    // numbers just do it
    let mut prev = local_image_dims(3).unwrap().codim;
    for n in 4..=64u64 {
        let codim = local_image_dims(n).unwrap().codim;
        assert!(codim > prev, "codim not strictly increasing at n = {n}");
        prev = codim;
    }
}
