//! Torus-weight decomposition of first-order deformations.
//!
//! For the cone singularity of a quasi-homogeneous polynomial `f` with
//! weight system `(a_1, ..., a_{n+1}; d)`, the module `T^1` of first-order
//! deformations is (as a graded vector space) the degree-shifted Milnor
//! algebra: the monomial `z^alpha` (taken modulo the Jacobian ideal)
//! deforms `f + t z^alpha` and carries the torus weight
//!
//! ```text
//!   wt(z^alpha) = alpha_1 a_1 + ... + alpha_{n+1} a_{n+1} - d.
//! ```
//!
//! So the dimension of the weight-`a` piece of `T^1` is the coefficient of
//! `t^(a + d)` in the Poincaré polynomial. The partial sums of this
//! decomposition compute Hodge-theoretic invariants of the projectivized
//! setting when the defect is zero (the cone over a Calabi-Yau
//! hypersurface in weighted projective space):
//!
//! * weights `>= 0`: `H^1` of the log tangent sheaf of the pair,
//! * weight `0`: the graded piece seen by `H^(n-1)` of the link,
//! * weights `> 0`: the image of restriction from the log deformations of
//!   the resolution,
//! * weights `<= 0`: the subspace `K` of deformations not extending to
//!   locally trivial ones,
//! * weights `< 0`: the kernel `K'`, whose dimension equals the link
//!   invariant `t_-` (and `b^(1,n-2)` of the Calabi-Yau fiber).
//!
//! For nonzero defect the grading itself is still meaningful, but those
//! Hodge-theoretic labels no longer apply; [`T1Decomposition::labels_valid`]
//! records which situation we are in.

use std::collections::BTreeMap;

use num::bigint::BigUint;
use num::Zero;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::milnor::{poincare_polynomial, MilnorError, PoincarePolynomial};
use crate::weights::WeightSystem;

/// The torus weight of the deformation by `z^alpha`:
/// `sum(alpha_i a_i) - d`, with `alpha_i` matched to the weights in the
/// order they were originally supplied.
///
/// # Panics
///
/// Panics if `alpha` does not have one exponent per variable, or if the
/// weight overflows an `i128` (beyond any realistic input).
pub fn weight_of_monomial(ws: &WeightSystem, alpha: &[u64]) -> i128 {
    assert_eq!(
        alpha.len(),
        ws.num_vars(),
        "monomial has {} exponents but the weight system has {} variables",
        alpha.len(),
        ws.num_vars()
    );
    let mut sum: i128 = -(ws.degree() as i128);
    for (&e, &a) in alpha.iter().zip(ws.original_weights()) {
        let term = (e as u128).checked_mul(a as u128).expect("weight overflow");
        sum = sum
            .checked_add(i128::try_from(term).expect("weight overflow"))
            .expect("weight overflow");
    }
    sum
}

/// The weight decomposition of `T^1`, with the graded partial sums that,
/// for defect zero, compute the Hodge-theoretic invariants listed in the
/// module docs.
///
/// Serializes as
/// `{"weights": {"-4": 1, ...}, "K": ..., "Kprime": ..., "Gr": ...,
///   "H1log": ..., "H1logminusE": ...}`
/// with weight keys in ascending numeric order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct T1Decomposition {
    by_weight: BTreeMap<i128, BigUint>,
    dim_k: BigUint,
    dim_k_prime: BigUint,
    gr_link: BigUint,
    h1_log: BigUint,
    h1_log_minus_e: BigUint,
    labels_valid: bool,
}

impl T1Decomposition {
    /// Nonzero graded dimensions, keyed by torus weight.
    pub fn by_weight(&self) -> &BTreeMap<i128, BigUint> {
        &self.by_weight
    }

    /// Dimension of the weight-`a` piece (zero if absent).
    pub fn weight_dim(&self, a: i128) -> BigUint {
        self.by_weight.get(&a).cloned().unwrap_or_else(BigUint::zero)
    }

    /// Total dimension of `T^1` (the Milnor number).
    pub fn total_dim(&self) -> BigUint {
        self.by_weight.values().sum()
    }

    /// Weights `<= 0`: the subspace `K`.
    pub fn dim_k(&self) -> &BigUint {
        &self.dim_k
    }

    /// Weights `< 0`: the subspace `K'`.
    pub fn dim_k_prime(&self) -> &BigUint {
        &self.dim_k_prime
    }

    /// Weight `0` alone: the graded piece of `H^(n-1)` of the link.
    pub fn gr_link(&self) -> &BigUint {
        &self.gr_link
    }

    /// Weights `>= 0`: `H^1` of log deformations of the pair.
    pub fn h1_log(&self) -> &BigUint {
        &self.h1_log
    }

    /// Weights `> 0`: the image of `H^1(log) -> T^1` forgetting the
    /// exceptional divisor.
    pub fn h1_log_minus_e(&self) -> &BigUint {
        &self.h1_log_minus_e
    }

    /// The link invariant `t_-` = dim `K'` (equals `b^(1,n-2)` of the
    /// Calabi-Yau fiber in the defect-zero case).
    pub fn t_minus(&self) -> &BigUint {
        &self.dim_k_prime
    }

    /// Whether the Hodge-theoretic labels apply: true exactly when the
    /// liminal defect is zero. The weight grading itself is always valid.
    pub fn labels_valid(&self) -> bool {
        self.labels_valid
    }
}

impl Serialize for T1Decomposition {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use crate::jsonnum::Uint;
        struct Weights<'a>(&'a BTreeMap<i128, BigUint>);
        impl Serialize for Weights<'_> {
            fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
                use serde::ser::SerializeMap;
                let mut map = serializer.serialize_map(Some(self.0.len()))?;
                for (weight, dim) in self.0 {
                    map.serialize_entry(&weight.to_string(), &Uint(dim))?;
                }
                map.end()
            }
        }
        let mut st = serializer.serialize_struct("T1Decomposition", 6)?;
        st.serialize_field("weights", &Weights(&self.by_weight))?;
        st.serialize_field("K", &Uint(&self.dim_k))?;
        st.serialize_field("Kprime", &Uint(&self.dim_k_prime))?;
        st.serialize_field("Gr", &Uint(&self.gr_link))?;
        st.serialize_field("H1log", &Uint(&self.h1_log))?;
        st.serialize_field("H1logminusE", &Uint(&self.h1_log_minus_e))?;
        st.end()
    }
}

/// Computes the `T^1` weight decomposition from the Milnor algebra grading.
pub fn t1_decomposition(ws: &WeightSystem) -> Result<T1Decomposition, MilnorError> {
    let poincare = poincare_polynomial(ws)?;
    Ok(t1_of(ws, &poincare))
}

/// `T^1` decomposition from an already-computed Poincaré polynomial of the
/// same weight system.
pub fn t1_of(ws: &WeightSystem, poincare: &PoincarePolynomial) -> T1Decomposition {
    let d = ws.degree() as i128;
    let mut by_weight = BTreeMap::new();
    let mut dim_k = BigUint::zero();
    let mut dim_k_prime = BigUint::zero();
    let mut gr_link = BigUint::zero();
    let mut h1_log = BigUint::zero();
    let mut h1_log_minus_e = BigUint::zero();
    for (m, c) in poincare.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let weight = m as i128 - d;
        by_weight.insert(weight, c.clone());
        if weight <= 0 {
            dim_k += c;
        }
        if weight < 0 {
            dim_k_prime += c;
        }
        if weight == 0 {
            gr_link += c;
        }
        if weight >= 0 {
            h1_log += c;
        }
        if weight > 0 {
            h1_log_minus_e += c;
        }
    }
    T1Decomposition {
        by_weight,
        dim_k,
        dim_k_prime,
        gr_link,
        h1_log,
        h1_log_minus_e,
        labels_valid: ws.liminal_defect() == 0,
    }
}
