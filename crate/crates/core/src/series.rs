//! Closed-form dimension counts for the cone over a smooth degree-`n+1`
//! hypersurface in `P^(n+1)` (a Calabi-Yau hypersurface, so the cone is a
//! 0-liminal singularity), and the identity tying them together.
//!
//! For each `n` the players are exact binomial expressions:
//!
//! ```text
//!   global_t1    = C(2n+3, n+2) - (n+2)^2     first-order deformations
//!   dim_A_system = C(2n+2, n)   - (n+1) - 1   embedded family of pairs
//!   moduli_E     = C(2n+1, n+1) - (n+1)^2     moduli of the CY hypersurface
//!   t_minus      = C(2n+1, n)   - (n+1)       negative-weight local piece
//! ```
//!
//! and the decomposition identity
//!
//! ```text
//!   dim_A_system + moduli_E + t_minus = global_t1
//! ```
//!
//! holds for every `n` — [`verify_identity`] checks it numerically and also
//! cross-checks `t_minus` against the torus-weight decomposition of the
//! Fermat cone `(1, ..., 1; n+1)` computed by the [`crate::t1`] module.
//!
//! [`local_image_dims`] counts, for the same Fermat cone, how much of the
//! local deformation space `C[z]/(z_i^n)` (dimension `n^(n+1)`) is reached
//! by global degree-`n+2` perturbations: monomials with every exponent at
//! most `n-1` and total degree at most `n+2`, counted by exact
//! inclusion–exclusion. The positive codimension for `n >= 3` is the
//! numerical footprint of the cone's non-smoothability in those dimensions.

use num::bigint::{BigInt, BigUint};
use num::{One, Zero};
use serde::Serialize;

use crate::t1::t1_decomposition;
use crate::weights::WeightSystem;

/// Largest dimension the series operations accept. Binomials would be fine
/// far beyond this; the bound keeps the Fermat cross-check in
/// [`verify_identity`] comfortably fast.
pub const MAX_SERIES_DIM: u64 = 128;

/// Default upper end of report ranges (tables stay readable).
pub const DEFAULT_SERIES_CAP: u64 = 64;

/// Failures of the series computations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SeriesError {
    #[error("dimension out of range: n = {n} not in {min}..={max}")]
    DimensionOutOfRange { n: u64, min: u64, max: u64 },
    #[error("empty range: {lo}..={hi}")]
    EmptyRange { lo: u64, hi: u64 },
}

fn check_dim(n: u64, min: u64, max: u64) -> Result<(), SeriesError> {
    if n < min || n > max {
        return Err(SeriesError::DimensionOutOfRange { n, min, max });
    }
    Ok(())
}

/// Exact binomial coefficient `C(n, k)` (zero for `k > n`).
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut result = BigUint::one();
    for i in 0..k {
        result = result * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    result
}

fn to_unsigned(v: BigInt, what: &str) -> BigUint {
    v.to_biguint()
        .unwrap_or_else(|| panic!("{what} must be non-negative"))
}

/// `C(2n+3, n+2) - (n+2)^2`: the full first-order deformation space of the
/// cone. Requires `3 <= n <= MAX_SERIES_DIM`.
pub fn global_t1_dim(n: u64) -> Result<BigUint, SeriesError> {
    check_dim(n, 3, MAX_SERIES_DIM)?;
    let value = BigInt::from(binomial(2 * n + 3, n + 2)) - BigInt::from((n + 2) * (n + 2));
    Ok(to_unsigned(value, "global_t1"))
}

/// `C(2n+2, n) - (n+1) - 1`: the linear system of hypersurface pairs.
pub fn dim_a_system(n: u64) -> Result<BigUint, SeriesError> {
    check_dim(n, 3, MAX_SERIES_DIM)?;
    let value = BigInt::from(binomial(2 * n + 2, n)) - BigInt::from(n + 2);
    Ok(to_unsigned(value, "dim_A_system"))
}

/// `C(2n+1, n+1) - (n+1)^2`: moduli of the Calabi-Yau hypersurface itself.
pub fn moduli_e_dim(n: u64) -> Result<BigUint, SeriesError> {
    check_dim(n, 3, MAX_SERIES_DIM)?;
    let value = BigInt::from(binomial(2 * n + 1, n + 1)) - BigInt::from((n + 1) * (n + 1));
    Ok(to_unsigned(value, "moduli_E"))
}

/// `C(2n+1, n) - (n+1)`: the negative-weight part of the local `T^1`.
pub fn t_minus_formula(n: u64) -> Result<BigUint, SeriesError> {
    check_dim(n, 3, MAX_SERIES_DIM)?;
    let value = BigInt::from(binomial(2 * n + 1, n)) - BigInt::from(n + 1);
    Ok(to_unsigned(value, "t_minus"))
}

/// The witness record of [`verify_identity`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityWitness {
    pub n: u64,
    #[serde(rename = "dim_A_system", with = "crate::jsonnum::biguint")]
    pub dim_a_system: BigUint,
    #[serde(rename = "moduli_E", with = "crate::jsonnum::biguint")]
    pub moduli_e: BigUint,
    #[serde(with = "crate::jsonnum::biguint")]
    pub t_minus: BigUint,
    #[serde(with = "crate::jsonnum::biguint")]
    pub global_t1: BigUint,
    /// `dim_A_system + moduli_E + t_minus == global_t1`.
    pub holds: bool,
    /// The formula value of `t_minus` agrees with the negative-weight
    /// dimension computed from the Fermat cone `(1,...,1; n+1)` by the
    /// torus-weight decomposition.
    pub t_minus_matches_t1: bool,
}

/// Checks the decomposition identity at `n` and returns the full witness.
/// A false result is data, not an error.
pub fn verify_identity(n: u64) -> Result<IdentityWitness, SeriesError> {
    let dim_a = dim_a_system(n)?;
    let moduli_e = moduli_e_dim(n)?;
    let t_minus = t_minus_formula(n)?;
    let global_t1 = global_t1_dim(n)?;
    let holds = &dim_a + &moduli_e + &t_minus == global_t1;
    let fermat = WeightSystem::new(vec![1; (n + 1) as usize], n + 1)
        .expect("Fermat weight system is valid for n >= 3");
    let t_minus_matches_t1 = match t1_decomposition(&fermat) {
        Ok(t1) => *t1.t_minus() == t_minus,
        Err(_) => false,
    };
    Ok(IdentityWitness {
        n,
        dim_a_system: dim_a,
        moduli_e,
        t_minus,
        global_t1,
        holds,
        t_minus_matches_t1,
    })
}

/// `#{alpha in Z_(>=0)^k : alpha_i <= bound for all i, sum alpha_i <= total}`
/// by inclusion–exclusion over the coordinates pushed past the bound:
/// `sum_j (-1)^j C(k, j) C(total - j(bound+1) + k, k)`.
pub fn bounded_compositions(k: u64, bound: u64, total: u64) -> BigUint {
    let mut acc = BigInt::zero();
    for j in 0..=k {
        let shift = match j.checked_mul(bound + 1) {
            Some(s) if s <= total => s,
            _ => break,
        };
        let term = BigInt::from(binomial(total - shift + k, k) * binomial(k, j));
        if j % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    to_unsigned(acc, "bounded composition count")
}

/// The local-versus-global comparison of [`local_image_dims`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LocalImageDims {
    /// `n^(n+1)`: the whole local deformation space of the Fermat cone.
    #[serde(with = "crate::jsonnum::biguint")]
    pub full: BigUint,
    /// Monomials with every exponent `<= n-1` and total degree `<= n+2`.
    #[serde(with = "crate::jsonnum::biguint")]
    pub image: BigUint,
    /// `full - image`; zero exactly at `n = 2`.
    #[serde(with = "crate::jsonnum::biguint")]
    pub codim: BigUint,
}

/// Counts how much of the local deformation space of the Fermat cone in
/// dimension `n` is hit by global perturbations. Requires
/// `2 <= n <= MAX_SERIES_DIM`.
pub fn local_image_dims(n: u64) -> Result<LocalImageDims, SeriesError> {
    check_dim(n, 2, MAX_SERIES_DIM)?;
    let full = BigUint::from(n).pow(
        u32::try_from(n + 1).expect("n <= MAX_SERIES_DIM"),
    );
    let image = bounded_compositions(n + 1, n - 1, n + 2);
    let codim = &full - &image;
    Ok(LocalImageDims { full, image, codim })
}

/// One row of the series table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SeriesReport {
    pub n: u64,
    #[serde(with = "crate::jsonnum::biguint")]
    pub global_t1: BigUint,
    /// `dim_A_system + moduli_E`: deformations of the resolved pair.
    #[serde(with = "crate::jsonnum::biguint")]
    pub pair_moduli: BigUint,
    #[serde(rename = "dim_A_system", with = "crate::jsonnum::biguint")]
    pub dim_a_system: BigUint,
    #[serde(rename = "moduli_E", with = "crate::jsonnum::biguint")]
    pub moduli_e: BigUint,
    #[serde(with = "crate::jsonnum::biguint")]
    pub t_minus: BigUint,
    pub identity_holds: bool,
    #[serde(with = "crate::jsonnum::biguint")]
    pub local_full: BigUint,
    #[serde(with = "crate::jsonnum::biguint")]
    pub local_image: BigUint,
    #[serde(with = "crate::jsonnum::biguint")]
    pub local_codim: BigUint,
    /// True only at `n = 3`, where the second cohomology of the relevant
    /// log sheaf is nonzero and the identity needs a separate argument;
    /// numerically nothing changes.
    pub log_h2_nonzero: bool,
}

/// Builds the table rows for `n` in `lo..=hi`. Requires
/// `3 <= lo <= hi <= DEFAULT_SERIES_CAP`; use [`series_reports_capped`] to
/// raise the cap to at most [`MAX_SERIES_DIM`].
pub fn series_reports(lo: u64, hi: u64) -> Result<Vec<SeriesReport>, SeriesError> {
    series_reports_capped(lo, hi, DEFAULT_SERIES_CAP)
}

/// [`series_reports`] with an explicit cap (at most [`MAX_SERIES_DIM`]).
pub fn series_reports_capped(
    lo: u64,
    hi: u64,
    cap: u64,
) -> Result<Vec<SeriesReport>, SeriesError> {
    if lo > hi {
        return Err(SeriesError::EmptyRange { lo, hi });
    }
    let cap = cap.min(MAX_SERIES_DIM);
    check_dim(lo, 3, cap)?;
    check_dim(hi, 3, cap)?;
    (lo..=hi).map(series_report).collect()
}

/// One table row.
pub fn series_report(n: u64) -> Result<SeriesReport, SeriesError> {
    let global_t1 = global_t1_dim(n)?;
    let dim_a_system = dim_a_system(n)?;
    let moduli_e = moduli_e_dim(n)?;
    let t_minus = t_minus_formula(n)?;
    let pair_moduli = &dim_a_system + &moduli_e;
    let identity_holds = &pair_moduli + &t_minus == global_t1;
    let local = local_image_dims(n)?;
    Ok(SeriesReport {
        n,
        global_t1,
        pair_moduli,
        dim_a_system,
        moduli_e,
        t_minus,
        identity_holds,
        local_full: local.full,
        local_image: local.image,
        local_codim: local.codim,
        log_h2_nonzero: n == 3,
    })
}
