//! The graded Milnor algebra: Poincaré polynomial, Milnor number,
//! Steenbrink spectrum, and the `s_p` vector.
//!
//! For a quasi-homogeneous polynomial with weight system
//! `(a_1, ..., a_{n+1}; d)` and an isolated singularity, the Milnor algebra
//! `C[z]/(df)` is graded and its Poincaré series is the finite product
//!
//! ```text
//!   P(t) = prod_i (t^(d - a_i) - 1) / (t^(a_i) - 1).
//! ```
//!
//! We compute `P` exactly: expand the numerator (each factor has two
//! terms), then divide by each `t^(a_i) - 1` using synthetic division,
//! failing fast on a nonzero remainder. If the result is not a polynomial
//! with non-negative coefficients, no isolated quasi-homogeneous
//! singularity has that weight system and the computation reports
//! [`MilnorError::NonPolynomialQuotient`].
//!
//! The spectrum is read off the grading: a monomial of degree `m`
//! contributes the spectral value `(m + a_1 + ... + a_{n+1}) / d`, and the
//! Hodge-level counts `s_p` are the multiplicities of the half-open windows
//! `(n - p, n - p + 1]`.

use num::bigint::{BigInt, BigUint};
use num::rational::Ratio;
use num::{Signed, ToPrimitive, Zero};
use serde::ser::{SerializeSeq, SerializeStruct};
use serde::{Serialize, Serializer};

use crate::weights::WeightSystem;
use crate::Rational;

/// Hard cap on the number of coefficients materialized while expanding a
/// Poincaré polynomial (the numerator has degree `sum(d - a_i)`). Guards
/// against accidental multi-gigabyte allocations for astronomically scaled
/// weight systems; the exact math below this bound is unaffected.
pub const MAX_POINCARE_SUPPORT: u128 = 1 << 22;

/// Failures of the graded Milnor algebra computations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MilnorError {
    /// The Hilbert series `prod (t^(d-a_i) - 1)/(t^(a_i) - 1)` is not a
    /// polynomial with non-negative coefficients, so the weight system is
    /// not realized by any quasi-homogeneous isolated singularity.
    #[error("NonPolynomialQuotient: the Milnor algebra series of ({weight_system}) is not a polynomial with non-negative coefficients ({detail})")]
    NonPolynomialQuotient {
        weight_system: String,
        detail: String,
    },
    /// The product formula `prod (d - a_i)/a_i` is not an integer.
    #[error("NonIntegerMilnorNumber: prod (d - a_i)/a_i is not an integer for ({weight_system})")]
    NonIntegerMilnorNumber { weight_system: String },
    /// The polynomial would need more than [`MAX_POINCARE_SUPPORT`]
    /// coefficients to write down.
    #[error("PolynomialTooLarge: the Poincaré polynomial of ({weight_system}) has {support} terms, beyond the supported {limit}")]
    PolynomialTooLarge {
        weight_system: String,
        support: u128,
        limit: u128,
    },
}

/// The Poincaré polynomial of a graded Milnor algebra: `coeffs()[m]` is the
/// dimension of the degree-`m` graded piece.
///
/// Serializes as the bare coefficient array (the big-number JSON policy of
/// [`crate::jsonnum`] applies to each entry).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PoincarePolynomial {
    coeffs: Vec<BigUint>,
}

impl PoincarePolynomial {
    /// Coefficients by degree, `0..=top_degree`.
    pub fn coeffs(&self) -> &[BigUint] {
        &self.coeffs
    }

    /// Degree of the socle, `sum(d - 2 a_i)`.
    pub fn top_degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Dimension of the degree-`m` piece (zero outside the support).
    pub fn graded_dim(&self, m: usize) -> BigUint {
        self.coeffs.get(m).cloned().unwrap_or_else(BigUint::zero)
    }

    /// Total dimension: the Milnor number.
    pub fn milnor_number(&self) -> BigUint {
        self.coeffs.iter().sum()
    }

    /// Whether `coeffs[m] == coeffs[top_degree - m]` for all `m` (always
    /// true for genuine Milnor algebras, by duality).
    pub fn is_palindromic(&self) -> bool {
        let n = self.coeffs.len();
        (0..n / 2).all(|m| self.coeffs[m] == self.coeffs[n - 1 - m])
    }
}

impl Serialize for PoincarePolynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        crate::jsonnum::biguint_seq::serialize(&self.coeffs, serializer)
    }
}

/// Computes the Poincaré polynomial of the graded Milnor algebra.
///
/// All numerator factors are multiplied out first; the result is then
/// divided by each `t^(a_i) - 1` in turn, failing fast on the first factor
/// that does not divide exactly.
pub fn poincare_polynomial(ws: &WeightSystem) -> Result<PoincarePolynomial, MilnorError> {
    let d = ws.degree();
    let support: u128 = ws
        .weights()
        .iter()
        .map(|&a| (d - a) as u128)
        .sum::<u128>()
        + 1;
    if support > MAX_POINCARE_SUPPORT {
        return Err(MilnorError::PolynomialTooLarge {
            weight_system: ws.to_string(),
            support,
            limit: MAX_POINCARE_SUPPORT,
        });
    }

    // Numerator: prod (t^(d - a_i) - 1), expanded sparsely.
    let mut coeffs: Vec<BigInt> = vec![BigInt::from(1)];
    for &a in ws.weights() {
        let k = (d - a) as usize;
        let mut next = vec![BigInt::zero(); coeffs.len() + k];
        for (j, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            next[j + k] += c;
            next[j] -= c;
        }
        coeffs = next;
    }

    // Denominator: divide by each t^a - 1, exactly or not at all.
    for &a in ws.weights() {
        coeffs = divide_by_binomial(coeffs, a as usize).map_err(|detail| {
            MilnorError::NonPolynomialQuotient {
                weight_system: ws.to_string(),
                detail,
            }
        })?;
    }

    let mut unsigned = Vec::with_capacity(coeffs.len());
    for (m, c) in coeffs.iter().enumerate() {
        if c.is_negative() {
            return Err(MilnorError::NonPolynomialQuotient {
                weight_system: ws.to_string(),
                detail: format!("coefficient of t^{m} is negative"),
            });
        }
        unsigned.push(c.to_biguint().expect("non-negative"));
    }
    debug_assert!(!unsigned.is_empty() && !unsigned.last().unwrap().is_zero());
    Ok(PoincarePolynomial { coeffs: unsigned })
}

/// Exact division by `t^a - 1` via synthetic division from the top degree
/// down; returns the reason on a nonzero remainder.
fn divide_by_binomial(mut coeffs: Vec<BigInt>, a: usize) -> Result<Vec<BigInt>, String> {
    debug_assert!(a >= 1);
    if coeffs.len() <= a {
        return Err(format!(
            "degree {} remainder is not divisible by t^{a} - 1",
            coeffs.len() - 1
        ));
    }
    let mut quotient = vec![BigInt::zero(); coeffs.len() - a];
    for j in (a..coeffs.len()).rev() {
        let c = std::mem::take(&mut coeffs[j]);
        if c.is_zero() {
            continue;
        }
        coeffs[j - a] += &c;
        quotient[j - a] = c;
    }
    if let Some(m) = coeffs[..a].iter().position(|c| !c.is_zero()) {
        return Err(format!(
            "nonzero remainder at t^{m} after dividing by t^{a} - 1"
        ));
    }
    Ok(quotient)
}

/// The Milnor number by the product formula `prod (d - a_i)/a_i`.
///
/// Computed as one exact division of big-integer products; when the Poincaré
/// polynomial exists this equals its coefficient sum.
pub fn milnor_number(ws: &WeightSystem) -> Result<BigUint, MilnorError> {
    use num::Integer;
    let d = ws.degree();
    let mut numerator = BigUint::from(1u32);
    let mut denominator = BigUint::from(1u32);
    for &a in ws.weights() {
        numerator *= BigUint::from(d - a);
        denominator *= BigUint::from(a);
    }
    let (q, r) = numerator.div_rem(&denominator);
    if !r.is_zero() {
        return Err(MilnorError::NonIntegerMilnorNumber {
            weight_system: ws.to_string(),
        });
    }
    Ok(q)
}

/// One spectral value with its multiplicity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectrumEntry {
    /// `(m + sum(a_i)) / d` in lowest terms.
    pub value: Rational,
    pub multiplicity: BigUint,
}

impl Serialize for SpectrumEntry {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("SpectrumEntry", 3)?;
        st.serialize_field("num", &crate::jsonnum::Int(self.value.numer()))?;
        st.serialize_field("den", &crate::jsonnum::Int(self.value.denom()))?;
        st.serialize_field("mult", &crate::jsonnum::Uint(&self.multiplicity))?;
        st.end()
    }
}

/// The Steenbrink spectrum of the singularity, as ascending spectral values
/// with multiplicities. Serializes as an array of `{"num","den","mult"}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Spectrum {
    entries: Vec<SpectrumEntry>,
    dim: usize,
}

impl Spectrum {
    /// Entries in strictly ascending spectral value.
    pub fn entries(&self) -> &[SpectrumEntry] {
        &self.entries
    }

    /// Dimension `n` of the singularity.
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Sum of all multiplicities (the Milnor number).
    pub fn total_multiplicity(&self) -> BigUint {
        self.entries.iter().map(|e| &e.multiplicity).sum()
    }

    /// The vector `(s_0, ..., s_n)`: `s_p` is the total multiplicity of
    /// spectral values in the half-open window `(n - p, n - p + 1]`.
    pub fn s_vector(&self) -> Vec<BigUint> {
        let n = self.dim;
        let mut s = vec![BigUint::zero(); n + 1];
        for entry in &self.entries {
            // value in (n - p, n - p + 1]  <=>  p = n + 1 - ceil(value);
            // spectral values lie strictly between 0 and n + 1, so p is in
            // range.
            let ceil = entry.value.ceil().to_integer();
            let p = n as i128 + 1 - ceil.to_i128().expect("spectral value within i128");
            debug_assert!((0..=n as i128).contains(&p));
            s[p as usize] += &entry.multiplicity;
        }
        s
    }
}

impl Serialize for Spectrum {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.entries.len()))?;
        for entry in &self.entries {
            seq.serialize_element(entry)?;
        }
        seq.end()
    }
}

/// Computes the spectrum from the Poincaré polynomial grading.
pub fn spectrum(ws: &WeightSystem) -> Result<Spectrum, MilnorError> {
    let poincare = poincare_polynomial(ws)?;
    Ok(spectrum_of(ws, &poincare))
}

/// Spectrum from an already-computed Poincaré polynomial of the same weight
/// system.
pub fn spectrum_of(ws: &WeightSystem, poincare: &PoincarePolynomial) -> Spectrum {
    let weight_sum = BigInt::from(ws.weight_sum());
    let degree = BigInt::from(ws.degree());
    let entries = poincare
        .coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(m, c)| SpectrumEntry {
            value: Ratio::new(BigInt::from(m) + &weight_sum, degree.clone()),
            multiplicity: c.clone(),
        })
        .collect();
    Spectrum {
        entries,
        dim: ws.dim(),
    }
}

/// The `(s_0, ..., s_n)` vector in one call.
pub fn s_vector(ws: &WeightSystem) -> Result<Vec<BigUint>, MilnorError> {
    Ok(spectrum(ws)?.s_vector())
}
