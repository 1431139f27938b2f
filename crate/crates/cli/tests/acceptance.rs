//! Acceptance gate: ten end-to-end criteria, one test and one printed
//! `criterion N: PASS`/`FAIL` line each (run with `--nocapture` to see the
//! lines unconditionally; failures always carry them in the panic output).

use std::collections::BTreeMap;
use std::process::Command;
use std::time::Instant;

use liminal_core::{
    binomial, enumerate_diagonal_liminal, local_image_dims, milnor_number, poincare_polynomial,
    spectrum_of, t1_of, t_minus_formula, verify_identity, DualComplexData, MilnorError,
    WeightSystem,
};
use num::{BigInt, BigUint, One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn criterion(n: usize, name: &str, body: impl FnOnce() -> Result<(), String>) {
    match body() {
        Ok(()) => println!("criterion {n}: PASS — {name}"),
        Err(msg) => {
            println!("criterion {n}: FAIL — {name}: {msg}");
            panic!("criterion {n} failed: {msg}");
        }
    }
}

fn check(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn ws(weights: &[u64], degree: u64) -> WeightSystem {
    WeightSystem::new(weights.to_vec(), degree).expect("valid test system")
}

#[test]
fn criterion_01_dimension_three_enumeration_via_cli() {
    criterion(1, "enumerate --dim 3 lists exactly the 14 families, fast", || {
        let start = Instant::now();
        let out = Command::new(env!("CARGO_BIN_EXE_liminal"))
            .args(["enumerate", "--dim", "3"])
            .output()
            .map_err(|e| format!("cannot run binary: {e}"))?;
        let elapsed = start.elapsed();
        check(out.status.success(), "non-zero exit")?;
        let text = String::from_utf8_lossy(&out.stdout).to_string();
        let tuples: Vec<&str> = text.lines().collect();
        check(
            tuples.len() == 14,
            format!("expected 14 tuples, found {}", tuples.len()),
        )?;
        check(
            tuples.contains(&"2,3,7,42"),
            "missing the extremal family 2,3,7,42",
        )?;
        check(
            tuples.contains(&"4,4,4,4"),
            "missing the symmetric family 4,4,4,4",
        )?;
        check(
            elapsed.as_secs_f64() < 1.0,
            format!("took {elapsed:?}, expected under 1s"),
        )
    });
}

#[test]
fn criterion_02_enumerated_families_are_zero_liminal_with_unit_top_s() {
    criterion(2, "dims 2 and 3: every family has defect 0, s_n = 1, s_0 = 0", || {
        for dim in [2usize, 3] {
            let families =
                enumerate_diagonal_liminal(dim).map_err(|e| format!("enumeration failed: {e}"))?;
            for family in &families {
                let system = family.weight_system();
                let class = system.classify();
                check(
                    class.liminal_defect == 0,
                    format!("{system} has defect {}", class.liminal_defect),
                )?;
                let poincare =
                    poincare_polynomial(system).map_err(|e| format!("{system}: {e}"))?;
                let s = spectrum_of(system, &poincare).s_vector();
                check(s[dim] == BigUint::one(), format!("{system}: s_n != 1"))?;
                check(s[0].is_zero(), format!("{system}: s_0 != 0"))?;
            }
        }
        Ok(())
    });
}

#[test]
fn criterion_03_fermat_milnor_numbers_and_t_minus_formula() {
    criterion(3, "Fermat cones: mu = n^(n+1), t_minus matches the closed form", || {
        for n in 2u64..=6 {
            let vars = usize::try_from(n).unwrap() + 1;
            let system = ws(&vec![1; vars], n + 1);
            let mu = milnor_number(&system).map_err(|e| e.to_string())?;
            let expected = BigUint::from(n).pow(u32::try_from(n).unwrap() + 1);
            check(
                mu == expected,
                format!("n = {n}: mu = {mu}, expected {expected}"),
            )?;
        }
        for n in 3u64..=8 {
            let vars = usize::try_from(n).unwrap() + 1;
            let system = ws(&vec![1; vars], n + 1);
            let poincare = poincare_polynomial(&system).map_err(|e| e.to_string())?;
            let t_minus = t1_of(&system, &poincare).dim_k_prime().clone();
            let formula = t_minus_formula(n).map_err(|e| e.to_string())?;
            let direct = binomial(2 * n + 1, n) - BigUint::from(n + 1);
            check(
                t_minus == formula && formula == direct,
                format!("n = {n}: t_minus = {t_minus}, formula = {formula}, direct = {direct}"),
            )?;
        }
        Ok(())
    });
}

#[test]
fn criterion_04_quartic_cone_anchor_values() {
    criterion(4, "(1,1,1,1;4): s_1 = t_minus = 31 and the link grading is 19", || {
        let system = ws(&[1, 1, 1, 1], 4);
        let poincare = poincare_polynomial(&system).map_err(|e| e.to_string())?;
        let s = spectrum_of(&system, &poincare).s_vector();
        let t1 = t1_of(&system, &poincare);
        check(s[1] == BigUint::from(31u32), format!("s_1 = {}", s[1]))?;
        check(
            t1.dim_k_prime() == &BigUint::from(31u32),
            format!("t_minus = {}", t1.dim_k_prime()),
        )?;
        check(
            t1.gr_link() == &BigUint::from(19u32),
            format!("gr link = {}", t1.gr_link()),
        )
    });
}

#[test]
fn criterion_05_global_identity_across_the_series() {
    criterion(5, "identity dim|A| + moduli(E) + t_minus = T^1 for 3 <= n <= 64", || {
        for n in 3u64..=64 {
            let witness = verify_identity(n).map_err(|e| e.to_string())?;
            check(witness.holds, format!("identity fails at n = {n}"))?;
            check(
                witness.t_minus_matches_t1,
                format!("closed form disagrees with T^1 at n = {n}"),
            )?;
        }
        let w = verify_identity(3).map_err(|e| e.to_string())?;
        let anchor = (
            w.dim_a_system.clone(),
            w.moduli_e.clone(),
            w.t_minus.clone(),
            w.global_t1.clone(),
        );
        let expected = (
            BigUint::from(51u32),
            BigUint::from(19u32),
            BigUint::from(31u32),
            BigUint::from(101u32),
        );
        check(
            anchor == expected,
            format!("witness at n = 3 is {anchor:?}, expected {expected:?}"),
        )
    });
}

#[test]
fn criterion_06_local_image_dimensions_against_brute_force() {
    criterion(6, "restricted local deformations match a brute-force count", || {
        // anchors
        for (n, full, image, codim) in [
            (2u64, 8u64, 8u64, 0u64),
            (3, 81, 66, 15),
            (4, 1024, 357, 667),
        ] {
            let dims = local_image_dims(n).map_err(|e| e.to_string())?;
            let got = (dims.full.clone(), dims.image.clone(), dims.codim.clone());
            let want = (
                BigUint::from(full),
                BigUint::from(image),
                BigUint::from(codim),
            );
            check(got == want, format!("n = {n}: {got:?}, expected {want:?}"))?;
        }
        // brute force: exponent vectors in {0..n-1}^(n+1) with sum <= n + 2
        for n in 2usize..=5 {
            let dims = local_image_dims(n as u64).map_err(|e| e.to_string())?;
            let vars = n + 1;
            let mut alpha = vec![0usize; vars];
            let mut full_count = BigUint::zero();
            let mut image_count = BigUint::zero();
            'walk: loop {
                full_count += 1u32;
                if alpha.iter().sum::<usize>() <= n + 2 {
                    image_count += 1u32;
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
            check(
                dims.full == full_count && dims.image == image_count,
                format!(
                    "n = {n}: library says {:?}, brute force {:?}",
                    (&dims.full, &dims.image),
                    (full_count, image_count)
                ),
            )?;
        }
        Ok(())
    });
}

#[test]
fn criterion_07_ordinary_double_points_walk_the_ladder() {
    criterion(7, "ODPs: 1-liminal (dim 3), 1-rational only (dim 4), 2-liminal (dim 5)", || {
        let class3 = ws(&[1, 1, 1, 1], 2).classify();
        check(
            class3.liminal_level == Some(1),
            format!("dim 3 describes as {:?}", class3.describe()),
        )?;
        let class4 = ws(&[1, 1, 1, 1, 1], 2).classify();
        check(
            class4.max_rational == 1 && class4.liminal_level.is_none(),
            format!("dim 4 describes as {:?}", class4.describe()),
        )?;
        let class5 = ws(&[1, 1, 1, 1, 1, 1], 2).classify();
        check(
            class5.liminal_level == Some(2),
            format!("dim 5 describes as {:?}", class5.describe()),
        )
    });
}

#[test]
fn criterion_08_seeded_property_sweeps() {
    criterion(8, "five property families, 200+ seeded cases each", || {
        let mut rng = ChaCha8Rng::seed_from_u64(0xacce_97ed);

        // (i) palindromy + (ii) spectrum symmetry, random diagonal systems
        for case in 0..200 {
            let vars = rng.random_range(2..=6usize);
            let exps: Vec<u64> = (0..vars).map(|_| rng.random_range(2..=7u64)).collect();
            let d = exps.iter().fold(1u64, |acc, &p| num::integer::lcm(acc, p));
            let weights: Vec<u64> = exps.iter().map(|&p| d / p).collect();
            let system = ws(&weights, d);
            let poincare =
                poincare_polynomial(&system).map_err(|e| format!("case {case}: {e}"))?;
            check(
                poincare.is_palindromic(),
                format!("case {case}: {system} not palindromic"),
            )?;
            check(
                poincare.milnor_number() == milnor_number(&system).map_err(|e| e.to_string())?,
                format!("case {case}: {system} coefficient sum != product formula"),
            )?;
            let spectrum = spectrum_of(&system, &poincare);
            let entries = spectrum.entries();
            let n_plus_one = BigInt::from(system.num_vars());
            for (e, opposite) in entries.iter().zip(entries.iter().rev()) {
                let sum = e.value.clone() + opposite.value.clone();
                check(
                    sum == num::BigRational::from(n_plus_one.clone())
                        && e.multiplicity == opposite.multiplicity,
                    format!("case {case}: {system} spectrum asymmetric"),
                )?;
            }
        }

        // (iii) diagonal graded dimensions against the monomial box
        let mut rng = ChaCha8Rng::seed_from_u64(0xacce_97ee);
        for case in 0..200 {
            let vars = rng.random_range(2..=4usize);
            let exps: Vec<u64> = (0..vars).map(|_| rng.random_range(2..=5u64)).collect();
            let d = exps.iter().fold(1u64, |acc, &p| num::integer::lcm(acc, p));
            let weights: Vec<u64> = exps.iter().map(|&p| d / p).collect();
            let system = ws(&weights, d);
            let poincare =
                poincare_polynomial(&system).map_err(|e| format!("case {case}: {e}"))?;
            let mut counts: BTreeMap<usize, u64> = BTreeMap::new();
            let mut alpha = vec![0u64; vars];
            'box_walk: loop {
                let degree: u64 = alpha
                    .iter()
                    .zip(&weights)
                    .map(|(&a, &w)| a * w)
                    .sum();
                *counts.entry(usize::try_from(degree).unwrap()).or_insert(0) += 1;
                for (slot, &p) in alpha.iter_mut().zip(&exps) {
                    if *slot + 2 < p {
                        *slot += 1;
                        continue 'box_walk;
                    }
                    *slot = 0;
                }
                break;
            }
            for (m, coeff) in poincare.coeffs().iter().enumerate() {
                let expected = counts.get(&m).copied().unwrap_or(0);
                check(
                    coeff == &BigUint::from(expected),
                    format!("case {case}: {system} coefficient {m} mismatch"),
                )?;
            }
        }

        // (iv) minimal-exponent criterion through the s-vector
        let mut rng = ChaCha8Rng::seed_from_u64(0xacce_97ef);
        let mut deep = 0usize;
        for case in 0..300 {
            let vars = rng.random_range(2..=7usize);
            let exps: Vec<u64> = (0..vars).map(|_| rng.random_range(2..=4u64)).collect();
            let d = exps.iter().fold(1u64, |acc, &p| num::integer::lcm(acc, p));
            let weights: Vec<u64> = exps.iter().map(|&p| d / p).collect();
            let system = ws(&weights, d);
            let class = system.classify();
            let one = num::BigRational::one();
            let two = &one + &one;
            let poincare =
                poincare_polynomial(&system).map_err(|e| format!("case {case}: {e}"))?;
            let s = spectrum_of(&system, &poincare).s_vector();
            let lhs = class.minimal_exponent >= two;
            let rhs = class.minimal_exponent >= one && s[1].is_zero();
            check(
                lhs == rhs,
                format!("case {case}: {system} breaks the s_1 criterion"),
            )?;
            if lhs {
                deep += 1;
            }
        }
        check(deep >= 30, format!("only {deep} exponent >= 2 cases, sweep too shallow"))?;

        // (v) delta o delta = 0 and Euler consistency on random complexes
        let mut rng = ChaCha8Rng::seed_from_u64(0xacce_97f0);
        for case in 0..200 {
            let vertices = rng.random_range(1..=7usize);
            let components: Vec<String> = (0..vertices).map(|i| format!("E{i}")).collect();
            let mut faces = Vec::new();
            for _ in 0..rng.random_range(0..=4usize) {
                let size = rng.random_range(1..=vertices.min(4));
                let mut pool: Vec<usize> = (0..vertices).collect();
                for i in 0..size {
                    let j = rng.random_range(i..pool.len());
                    pool.swap(i, j);
                }
                faces.push(pool[..size].to_vec());
            }
            let data = DualComplexData::new(8, components, faces, vec![])
                .map_err(|e| format!("case {case}: {e}"))?;
            let deltas = data.coboundary_matrices();
            for k in 0..deltas.len().saturating_sub(1) {
                let (low, high) = (&deltas[k], &deltas[k + 1]);
                for row in high {
                    for col in 0..low.first().map_or(0, Vec::len) {
                        let mut dot = BigInt::zero();
                        for (j, low_row) in low.iter().enumerate() {
                            dot += &row[j] * &low_row[col];
                        }
                        check(
                            dot.is_zero(),
                            format!("case {case}: delta_{} o delta_{k} != 0", k + 1),
                        )?;
                    }
                }
            }
            let h = data.cohomology();
            let mut euler_h = 0i64;
            for (k, dim) in h.iter().enumerate() {
                let signed = i64::try_from(*dim).unwrap();
                euler_h += if k % 2 == 0 { signed } else { -signed };
            }
            let mut euler_faces = 0i64;
            for p in 0..data.ambient_dim() {
                let signed = i64::try_from(data.face_count(p)).unwrap();
                euler_faces += if p % 2 == 0 { signed } else { -signed };
            }
            check(
                euler_h == euler_faces,
                format!("case {case}: Euler characteristics disagree"),
            )?;
        }
        Ok(())
    });
}

#[test]
fn criterion_09_dual_complex_anchors_and_violation_detection() {
    criterion(9, "hollow triangle, boundary 3-simplex, and a two-cone violation", || {
        let hollow = DualComplexData::new(
            2,
            vec!["E0".into(), "E1".into(), "E2".into()],
            vec![vec![0, 1], vec![1, 2], vec![0, 2]],
            vec![],
        )
        .map_err(|e| e.to_string())?;
        check(
            hollow.cohomology() == vec![1, 1],
            format!("hollow triangle cohomology {:?}", hollow.cohomology()),
        )?;

        let boundary = DualComplexData::new(
            3,
            (0..4).map(|i| format!("E{i}")).collect(),
            vec![vec![0, 1, 2], vec![0, 1, 3], vec![0, 2, 3], vec![1, 2, 3]],
            vec![],
        )
        .map_err(|e| e.to_string())?;
        check(
            boundary.cohomology() == vec![1, 0, 1],
            format!("boundary of the 3-simplex cohomology {:?}", boundary.cohomology()),
        )?;

        // two components each carrying top cohomology: exactly clause (a)
        let two_cones = DualComplexData::new(
            2,
            vec!["E0".into(), "E1".into()],
            vec![vec![0, 1]],
            vec![
                liminal_core::dual_complex::StratumCohomology {
                    face: vec![0],
                    q: 1,
                    dim: 1,
                },
                liminal_core::dual_complex::StratumCohomology {
                    face: vec![1],
                    q: 1,
                    dim: 1,
                },
            ],
        )
        .map_err(|e| e.to_string())?;
        let violations = two_cones.check_zero_liminal_constraints(None);
        check(
            violations.len() == 1 && violations[0].clause() == "a",
            format!("expected exactly clause (a), found {violations:?}"),
        )
    });
}

#[test]
fn criterion_10_unrealizable_system_fails_cleanly() {
    criterion(10, "(2,5;6) is rejected as NonPolynomialQuotient, CLI exits 1", || {
        let system = ws(&[2, 5], 6);
        match poincare_polynomial(&system) {
            Err(MilnorError::NonPolynomialQuotient { .. }) => {}
            other => {
                return Err(format!(
                    "expected NonPolynomialQuotient, got {other:?}"
                ))
            }
        }
        let out = Command::new(env!("CARGO_BIN_EXE_liminal"))
            .args(["spectrum", "--system", "2,5;6"])
            .output()
            .map_err(|e| format!("cannot run binary: {e}"))?;
        check(out.status.code() == Some(1), format!("exit {:?}", out.status.code()))?;
        check(
            String::from_utf8_lossy(&out.stderr).contains("NonPolynomialQuotient"),
            "stderr does not name the error",
        )
    });
}
