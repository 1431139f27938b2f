//! Enumeration of diagonal defect-zero families.
//!
//! A diagonal singularity `z_1^(p_1) + ... + z_(n+1)^(p_(n+1))` carries the
//! weight system `(L/p_1, ..., L/p_(n+1); L)` with `L = lcm(p_i)`, and its
//! liminal defect vanishes exactly when
//!
//! ```text
//!   1/p_1 + ... + 1/p_(n+1) = 1.
//! ```
//!
//! So the diagonal defect-zero families in dimension `n` are the
//! non-decreasing integer tuples `2 <= p_1 <= ... <= p_(n+1)` solving the
//! unit-fraction equation — a finite set for each `n` (3 solutions in
//! dimension 2, 14 in dimension 3, 147 in dimension 4, ...).
//!
//! The search runs on exact rationals with sharp bounds
//! `ceil(1/r) <= p <= floor(k/r)` for the remaining target `r` over `k`
//! slots, and charges every candidate against a node budget so that
//! runaway dimensions fail cleanly with
//! [`EnumerationError::DimensionTooLarge`] instead of hanging.

use num::bigint::{BigInt, BigUint};
use num::rational::Ratio;
use num::{Integer, One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::milnor::{poincare_polynomial, spectrum_of, MilnorError};
use crate::t1::{t1_of, T1Decomposition};
use crate::weights::{SingularityClass, ValidationError, WeightSystem};
use crate::Rational;

/// Default search budget: candidates examined before giving up.
pub const DEFAULT_NODE_BUDGET: u64 = 10_000_000;

/// Failures of the family enumeration.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EnumerationError {
    /// The search budget was exhausted before the enumeration completed.
    #[error("DimensionTooLarge: enumerating dimension {dim} exceeded the search budget of {budget} nodes")]
    DimensionTooLarge { dim: usize, budget: u64 },
    /// Dimension 0 has a single variable and no hypersurface singularity.
    #[error("dimension must be at least 1, got {dim}")]
    DimensionTooSmall { dim: usize },
    /// A solution's exponents or lcm exceed the 64-bit weight range.
    #[error("exponent tuple {exponents:?} overflows 64-bit weights")]
    WeightOverflow { exponents: Vec<String> },
}

/// One diagonal defect-zero family: exponents `(p_1, ..., p_(n+1))` with
/// the induced weight system, weights stored parallel to the exponents.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DiagonalFamily {
    #[serde(with = "crate::jsonnum::u64_seq")]
    exponents: Vec<u64>,
    weight_system: WeightSystem,
}

impl DiagonalFamily {
    /// Builds the family for non-decreasing exponents `p_i >= 2` with
    /// `sum 1/p_i = 1`; rejects tuples violating any of that.
    pub fn new(exponents: Vec<u64>) -> Result<Self, ValidationError> {
        let invalid = |reason: &str| ValidationError::Malformed {
            input: format!("{exponents:?}"),
            reason: reason.to_owned(),
        };
        if exponents.len() < 2 {
            return Err(invalid("need at least 2 exponents"));
        }
        if exponents.windows(2).any(|w| w[0] > w[1]) {
            return Err(invalid("exponents must be non-decreasing"));
        }
        if exponents.iter().any(|&p| p < 2) {
            return Err(invalid("exponents must be at least 2"));
        }
        let sum: Rational = exponents
            .iter()
            .map(|&p| Ratio::new(BigInt::one(), BigInt::from(p)))
            .sum();
        if !sum.is_one() {
            return Err(invalid("reciprocals must sum to 1"));
        }
        let mut lcm: u64 = 1;
        for &p in &exponents {
            let g = lcm.gcd(&p);
            lcm = (lcm / g)
                .checked_mul(p)
                .ok_or_else(|| invalid("lcm of exponents overflows u64"))?;
        }
        let weights: Vec<u64> = exponents.iter().map(|&p| lcm / p).collect();
        let weight_system = WeightSystem::new(weights, lcm)?;
        Ok(DiagonalFamily {
            exponents,
            weight_system,
        })
    }

    /// Exponents `(p_1, ..., p_(n+1))`, non-decreasing.
    pub fn exponents(&self) -> &[u64] {
        &self.exponents
    }

    /// The induced weight system `(L/p_1, ..., L/p_(n+1); L)`.
    pub fn weight_system(&self) -> &WeightSystem {
        &self.weight_system
    }

    /// Singularity dimension `n`.
    pub fn dim(&self) -> usize {
        self.exponents.len() - 1
    }

    /// Milnor number `prod (p_i - 1)`.
    pub fn milnor_number(&self) -> BigUint {
        self.exponents
            .iter()
            .map(|&p| BigUint::from(p - 1))
            .product()
    }
}

/// Enumerates all diagonal defect-zero families of singularity dimension
/// `dim`, in lexicographically ascending exponent order, under the default
/// node budget.
pub fn enumerate_diagonal_liminal(dim: usize) -> Result<Vec<DiagonalFamily>, EnumerationError> {
    enumerate_diagonal_liminal_with_budget(dim, DEFAULT_NODE_BUDGET)
}

/// Same as [`enumerate_diagonal_liminal`] with an explicit node budget.
pub fn enumerate_diagonal_liminal_with_budget(
    dim: usize,
    budget: u64,
) -> Result<Vec<DiagonalFamily>, EnumerationError> {
    if dim < 1 {
        return Err(EnumerationError::DimensionTooSmall { dim });
    }
    let mut search = Search {
        dim,
        budget,
        nodes: 0,
        stack: Vec::with_capacity(dim + 1),
        out: Vec::new(),
    };
    search.run(dim + 1, 2, Ratio::one())?;
    let mut families = Vec::with_capacity(search.out.len());
    for exponents in search.out {
        let as_u64: Option<Vec<u64>> = exponents.iter().map(|p| p.to_u64()).collect();
        let family = as_u64
            .and_then(|exps| DiagonalFamily::new(exps).ok())
            .ok_or_else(|| EnumerationError::WeightOverflow {
                exponents: exponents.iter().map(|p| p.to_string()).collect(),
            })?;
        families.push(family);
    }
    Ok(families)
}

struct Search {
    dim: usize,
    budget: u64,
    nodes: u64,
    stack: Vec<BigInt>,
    out: Vec<Vec<BigInt>>,
}

impl Search {
    /// Extends the current prefix by all exponents `p >= min_p` reaching
    /// `target` with `slots` entries.
    fn run(&mut self, slots: usize, min_p: u64, target: Rational) -> Result<(), EnumerationError> {
        if target.is_zero() || target.is_negative() {
            return Ok(());
        }
        let (num, den) = (target.numer().clone(), target.denom().clone());
        if slots == 1 {
            self.charge()?;
            // 1/p = target exactly: p = den, if num == 1 and den >= min_p.
            if num.is_one() && den >= BigInt::from(min_p) {
                self.stack.push(den);
                self.out.push(self.stack.clone());
                self.stack.pop();
            }
            return Ok(());
        }
        // 1/p <= target  and  slots * (1/p) >= target:
        let lo = Integer::div_ceil(&den, &num).max(BigInt::from(min_p));
        let hi = Integer::div_floor(&(BigInt::from(slots) * &den), &num);
        let mut p = lo;
        while p <= hi {
            self.charge()?;
            let rest = &target - Ratio::new(BigInt::one(), p.clone());
            self.stack.push(p.clone());
            // exponents stay non-decreasing: the child floor is p itself
            let child_min = p.to_u64().unwrap_or(u64::MAX);
            self.run(slots - 1, child_min, rest)?;
            self.stack.pop();
            p += 1;
        }
        Ok(())
    }

    fn charge(&mut self) -> Result<(), EnumerationError> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(EnumerationError::DimensionTooLarge {
                dim: self.dim,
                budget: self.budget,
            });
        }
        Ok(())
    }
}

/// Full invariant bundle for one diagonal family.
#[derive(Debug, Clone, Serialize)]
pub struct FamilyReport {
    #[serde(with = "crate::jsonnum::u64_seq")]
    pub exponents: Vec<u64>,
    pub weight_system: WeightSystem,
    pub class: SingularityClass,
    #[serde(with = "crate::jsonnum::biguint")]
    pub milnor_number: BigUint,
    #[serde(with = "crate::jsonnum::biguint_seq")]
    pub s_vector: Vec<BigUint>,
    pub t1: T1Decomposition,
}

/// Computes classification, Milnor number, `s` vector, and the `T^1`
/// decomposition for one family.
pub fn family_report(family: &DiagonalFamily) -> Result<FamilyReport, MilnorError> {
    let ws = family.weight_system();
    let poincare = poincare_polynomial(ws)?;
    let spectrum = spectrum_of(ws, &poincare);
    Ok(FamilyReport {
        exponents: family.exponents().to_vec(),
        weight_system: ws.clone(),
        class: ws.classify(),
        milnor_number: poincare.milnor_number(),
        s_vector: spectrum.s_vector(),
        t1: t1_of(ws, &poincare),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dimension_one_is_the_node() {
        let families = enumerate_diagonal_liminal(1).unwrap();
        assert_eq!(families.len(), 1);
        assert_eq!(families[0].exponents(), &[2, 2]);
        assert_eq!(families[0].weight_system(), &WeightSystem::parse("1,1;2").unwrap());
    }

    #[test]
    fn dimension_two_has_three_families() {
        let families = enumerate_diagonal_liminal(2).unwrap();
        let exps: Vec<&[u64]> = families.iter().map(|f| f.exponents()).collect();
        assert_eq!(exps, vec![&[2, 3, 6][..], &[2, 4, 4], &[3, 3, 3]]);
    }

    #[test]
    fn dimension_three_has_fourteen_families() {
        let families = enumerate_diagonal_liminal(3).unwrap();
        let exps: Vec<Vec<u64>> = families.iter().map(|f| f.exponents().to_vec()).collect();
        let expected: Vec<Vec<u64>> = vec![
            vec![2, 3, 7, 42],
            vec![2, 3, 8, 24],
            vec![2, 3, 9, 18],
            vec![2, 3, 10, 15],
            vec![2, 3, 12, 12],
            vec![2, 4, 5, 20],
            vec![2, 4, 6, 12],
            vec![2, 4, 8, 8],
            vec![2, 5, 5, 10],
            vec![2, 6, 6, 6],
            vec![3, 3, 4, 12],
            vec![3, 3, 6, 6],
            vec![3, 4, 4, 6],
            vec![4, 4, 4, 4],
        ];
        assert_eq!(exps, expected);
    }

    #[test]
    fn dimension_four_count_matches_the_classical_value() {
        assert_eq!(enumerate_diagonal_liminal(4).unwrap().len(), 147);
    }

    #[test]
    fn every_family_has_defect_zero() {
        for dim in 1..=4 {
            for family in enumerate_diagonal_liminal(dim).unwrap() {
                let ws = family.weight_system();
                assert_eq!(ws.liminal_defect(), 0, "{:?}", family.exponents());
                assert_eq!(ws.num_vars(), dim + 1);
                assert_eq!(
                    family.milnor_number(),
                    crate::milnor::milnor_number(ws).unwrap()
                );
            }
        }
    }

    #[test]
    fn budget_exhaustion_reports_dimension_too_large() {
        let err = enumerate_diagonal_liminal_with_budget(3, 5).unwrap_err();
        assert!(matches!(err, EnumerationError::DimensionTooLarge { budget: 5, .. }));
        assert!(err.to_string().starts_with("DimensionTooLarge"));
    }

    #[test]
    fn dimension_zero_is_rejected() {
        assert!(matches!(
            enumerate_diagonal_liminal(0),
            Err(EnumerationError::DimensionTooSmall { dim: 0 })
        ));
    }

    #[test]
    fn family_validation() {
        assert!(DiagonalFamily::new(vec![2, 3, 7, 42]).is_ok());
        // wrong sum
        assert!(DiagonalFamily::new(vec![2, 3, 7, 41]).is_err());
        // not sorted
        assert!(DiagonalFamily::new(vec![3, 2, 7, 42]).is_err());
        // exponent 1 would need weight > d/2
        assert!(DiagonalFamily::new(vec![1, 2, 3, 42]).is_err());
    }

    #[test]
    fn family_weights_parallel_exponents() {
        let family = DiagonalFamily::new(vec![2, 3, 7, 42]).unwrap();
        let ws = family.weight_system();
        assert_eq!(ws.degree(), 42);
        assert_eq!(ws.original_weights(), &[21, 14, 6, 1]);
        assert_eq!(ws.weights(), &[1, 6, 14, 21]);
    }

    #[test]
    fn report_for_the_quartic_family() {
        let family = DiagonalFamily::new(vec![4, 4, 4, 4]).unwrap();
        let report = family_report(&family).unwrap();
        assert!(report.class.zero_liminal);
        assert_eq!(report.milnor_number, BigUint::from(81u32));
        assert_eq!(
            report.s_vector,
            vec![
                BigUint::from(0u32),
                BigUint::from(31u32),
                BigUint::from(49u32),
                BigUint::from(1u32)
            ]
        );
        assert_eq!(*report.t1.t_minus(), BigUint::from(31u32));
    }
}
