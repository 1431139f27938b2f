//! Exact-arithmetic invariants of isolated weighted-homogeneous hypersurface
//! singularities.
//!
//! The central object is a [`WeightSystem`]: positive integer weights
//! `a_1, ..., a_{n+1}` together with a degree `d`, describing a
//! quasi-homogeneous polynomial `f` with an isolated critical point at the
//! origin of `C^{n+1}`. Everything downstream is computed exactly — big
//! integers and big rationals throughout, no floating point.
//!
//! Modules:
//!
//! * [`weights`] — weight systems, the liminal defect, the minimal exponent,
//!   and the Du Bois / rational / liminal classification ladder.
//! * [`milnor`] — the Poincaré polynomial of the graded Milnor algebra, the
//!   Milnor number, the Steenbrink spectrum, and the `s_p` vector.
//! * [`t1`] — the torus-weight decomposition of first-order deformations
//!   (`T^1`) of the cone singularity, with the graded pieces that see the
//!   Hodge theory of the link.
//! * [`families`] — enumeration of diagonal (Fermat-type, unit-fraction)
//!   weight systems with defect zero in a fixed dimension.
//! * [`series`] — closed-form dimension counts for the cone over a smooth
//!   degree-`n+1` hypersurface in `P^{n+1}`, and the decomposition identity
//!   relating them.
//! * [`dual_complex`] — bookkeeping for dual complexes of simple normal
//!   crossing degenerations: E_1 pages, dual-complex cohomology, and the
//!   combinatorial constraints forced in the defect-zero case.
//! * [`jsonnum`] — serialization policy for integers beyond 2^53 and for
//!   exact rationals.

pub mod dual_complex;
pub mod families;
pub mod jsonnum;
pub mod milnor;
pub mod series;
pub mod t1;
pub mod weights;

pub use dual_complex::{ConstraintViolation, DualComplexData, DualComplexError, E1Page};
pub use families::{
    enumerate_diagonal_liminal, enumerate_diagonal_liminal_with_budget, family_report,
    DiagonalFamily, EnumerationError, FamilyReport, DEFAULT_NODE_BUDGET,
};
pub use milnor::{
    milnor_number, poincare_polynomial, s_vector, spectrum, spectrum_of, MilnorError,
    PoincarePolynomial, Spectrum,
};
pub use series::{
    binomial, bounded_compositions, dim_a_system, global_t1_dim, local_image_dims, moduli_e_dim,
    series_report, series_reports, series_reports_capped, t_minus_formula, verify_identity,
    IdentityWitness, LocalImageDims, SeriesError, SeriesReport,
};
pub use t1::{t1_decomposition, t1_of, weight_of_monomial, T1Decomposition};
pub use weights::{SingularityClass, ValidationError, WeightSystem};

/// Exact rational numbers used for exponents and spectral values.
pub type Rational = num::BigRational;
