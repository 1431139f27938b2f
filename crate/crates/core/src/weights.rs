//! Weight systems and the Du Bois / rational / liminal classification.
//!
//! A weight system `(a_1, ..., a_{n+1}; d)` records positive integer weights
//! and a degree such that a generic quasi-homogeneous polynomial of degree
//! `d` in variables of weights `a_i` has an isolated singularity at the
//! origin. We require `n + 1 >= 2` variables, `d >= 2`, and `0 < a_i < d`
//! for every `i`, so each factor of the Milnor algebra's Hilbert series is
//! nontrivial. Normalized systems have all `2 a_i <= d`; systems outside
//! that range are accepted here, because whether *any* isolated
//! quasi-homogeneous singularity realizes the weights is a deeper question
//! answered downstream — see [`crate::milnor`], which rejects unrealizable
//! systems such as `(2,5;6)` with a `NonPolynomialQuotient` error.
//!
//! Two derived quantities drive the classification:
//!
//! * the **liminal defect** `N = a_1 + ... + a_{n+1} - d`, and
//! * the **minimal exponent** `alpha = (a_1 + ... + a_{n+1}) / d = N/d + 1`.
//!
//! The singularity is log canonical iff `N >= 0`, rational iff `N > 0`, and
//! *k-liminal* when `alpha = k + 1` exactly — the boundary case between
//! k-rational and (k+1)-rational. Defect zero (`alpha = 1`) is the
//! "0-liminal" borderline: Du Bois but not rational.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num::bigint::BigInt;
use num::rational::Ratio;
use num::Integer;
use serde::{Deserialize, Serialize};

use crate::Rational;

/// Errors rejected by [`WeightSystem`] construction and parsing.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ValidationError {
    /// Fewer than two variables.
    #[error("weight system needs at least 2 weights, found {found}")]
    TooFewVariables { found: usize },
    /// Degree below 2.
    #[error("degree must be at least 2, found {degree}")]
    DegreeTooSmall { degree: u64 },
    /// A weight of zero.
    #[error("weight #{index} is zero; weights must be positive")]
    ZeroWeight { index: usize },
    /// A weight at least as large as the degree (`a_i >= d`).
    #[error("weight #{index} is {weight}, which is not smaller than the degree {degree}")]
    WeightTooLarge { index: usize, weight: u64, degree: u64 },
    /// Malformed textual input.
    #[error("malformed weight system {input:?}: {reason}")]
    Malformed { input: String, reason: String },
}

/// A weight system `(a_1, ..., a_{n+1}; d)`.
///
/// Weights are stored sorted (non-decreasing) for all computations; the
/// original order is kept for display, so a system parses and prints back
/// unchanged. Equality and hashing use the canonical form: sorted weights
/// and degree divided by their common gcd, making `(1,1,1;3)` equal to
/// `(2,2,2;6)`.
#[derive(Debug, Clone)]
pub struct WeightSystem {
    /// Sorted non-decreasing.
    weights: Vec<u64>,
    degree: u64,
    /// As supplied by the caller, for display.
    original: Vec<u64>,
}

impl WeightSystem {
    /// Validates and builds a weight system. The order of `weights` is
    /// remembered for display but is otherwise irrelevant.
    pub fn new(weights: Vec<u64>, degree: u64) -> Result<Self, ValidationError> {
        if weights.len() < 2 {
            return Err(ValidationError::TooFewVariables {
                found: weights.len(),
            });
        }
        if degree < 2 {
            return Err(ValidationError::DegreeTooSmall { degree });
        }
        for (index, &weight) in weights.iter().enumerate() {
            if weight == 0 {
                return Err(ValidationError::ZeroWeight { index });
            }
            // a_i < d keeps every Hilbert-series factor t^(d - a_i) - 1
            // nontrivial. Weights above d/2 are deliberately let through:
            // their deeper obstruction (no isolated singularity carries
            // them) is detected by the Milnor-algebra division itself.
            if weight >= degree {
                return Err(ValidationError::WeightTooLarge {
                    index,
                    weight,
                    degree,
                });
            }
        }
        let original = weights.clone();
        let mut weights = weights;
        weights.sort_unstable();
        Ok(WeightSystem {
            weights,
            degree,
            original,
        })
    }

    /// Weights sorted non-decreasingly.
    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    /// Weights in the order originally supplied.
    pub fn original_weights(&self) -> &[u64] {
        &self.original
    }

    pub fn degree(&self) -> u64 {
        self.degree
    }

    /// Number of variables, `n + 1`.
    pub fn num_vars(&self) -> usize {
        self.weights.len()
    }

    /// Dimension `n` of the singularity (the hypersurface has dimension
    /// `n`, one less than the ambient variable count).
    pub fn dim(&self) -> usize {
        self.weights.len() - 1
    }

    /// Sum of the weights, exact.
    pub fn weight_sum(&self) -> u128 {
        self.weights.iter().map(|&a| a as u128).sum()
    }

    /// The liminal defect `N = sum(a_i) - d`. Negative iff the singularity
    /// fails to be log canonical.
    pub fn liminal_defect(&self) -> i128 {
        self.weight_sum() as i128 - self.degree as i128
    }

    /// The minimal exponent `alpha = sum(a_i) / d`, as an exact rational.
    pub fn minimal_exponent(&self) -> Rational {
        Ratio::new(
            BigInt::from(self.weight_sum()),
            BigInt::from(self.degree),
        )
    }

    /// Normalized weights `w_i = a_i / d` in sorted order.
    pub fn normalized_weights(&self) -> Vec<Rational> {
        self.weights
            .iter()
            .map(|&a| Ratio::new(BigInt::from(a), BigInt::from(self.degree)))
            .collect()
    }

    /// The canonical representative: weights sorted and the whole tuple
    /// divided by `gcd(a_1, ..., a_{n+1}, d)`.
    pub fn canonical(&self) -> WeightSystem {
        let g = self
            .weights
            .iter()
            .fold(self.degree, |acc, &a| acc.gcd(&a));
        let weights: Vec<u64> = self.weights.iter().map(|&a| a / g).collect();
        WeightSystem {
            original: weights.clone(),
            weights,
            degree: self.degree / g,
        }
    }

    fn canonical_key(&self) -> (Vec<u64>, u64) {
        let c = self.canonical();
        (c.weights, c.degree)
    }

    /// Classification along the Du Bois / rational / liminal ladder,
    /// determined by the minimal exponent alone.
    pub fn classify(&self) -> SingularityClass {
        let defect = self.liminal_defect();
        let d = self.degree as i128;
        // max k with alpha >= k + 1, i.e. k <= N/d.
        let max_du_bois = Integer::div_floor(&defect, &d);
        // max k with alpha > k + 1, i.e. k < N/d.
        let max_rational = Integer::div_floor(&(defect - 1), &d);
        let liminal_level = if defect >= 0 && defect % d == 0 {
            Some((defect / d) as u64)
        } else {
            None
        };
        SingularityClass {
            liminal_defect: defect,
            minimal_exponent: self.minimal_exponent(),
            log_canonical: defect >= 0,
            rational: defect > 0,
            max_du_bois,
            max_rational,
            liminal_level,
            zero_liminal: defect == 0,
        }
    }

    /// Parses `"a1,a2,...,ak;d"` (ASCII, optional spaces around tokens).
    pub fn parse(input: &str) -> Result<Self, ValidationError> {
        input.parse()
    }
}

impl fmt::Display for WeightSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, a) in self.original.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, ";{}", self.degree)
    }
}

impl FromStr for WeightSystem {
    type Err = ValidationError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let malformed = |reason: &str| ValidationError::Malformed {
            input: s.to_owned(),
            reason: reason.to_owned(),
        };
        let (weight_part, degree_part) = s
            .split_once(';')
            .ok_or_else(|| malformed("expected 'a1,...,ak;d'"))?;
        if degree_part.contains(';') {
            return Err(malformed("more than one ';'"));
        }
        let degree: u64 = degree_part
            .trim()
            .parse()
            .map_err(|_| malformed("degree is not a non-negative integer"))?;
        let mut weights = Vec::new();
        for token in weight_part.split(',') {
            let w: u64 = token
                .trim()
                .parse()
                .map_err(|_| malformed("weight is not a non-negative integer"))?;
            weights.push(w);
        }
        WeightSystem::new(weights, degree)
    }
}

impl PartialEq for WeightSystem {
    fn eq(&self, other: &Self) -> bool {
        self.canonical_key() == other.canonical_key()
    }
}

impl Eq for WeightSystem {}

impl std::hash::Hash for WeightSystem {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.canonical_key().hash(state);
    }
}

impl PartialOrd for WeightSystem {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for WeightSystem {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.canonical_key().cmp(&other.canonical_key())
    }
}

impl Serialize for WeightSystem {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = serializer.serialize_struct("WeightSystem", 2)?;
        st.serialize_field("weights", &crate::jsonnum::U64Seq(&self.original))?;
        st.serialize_field("degree", &crate::jsonnum::U64(self.degree))?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for WeightSystem {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            #[serde(with = "crate::jsonnum::u64_seq")]
            weights: Vec<u64>,
            #[serde(with = "crate::jsonnum::u64_value")]
            degree: u64,
        }
        let raw = Raw::deserialize(deserializer)?;
        WeightSystem::new(raw.weights, raw.degree).map_err(serde::de::Error::custom)
    }
}

/// Where a singularity sits on the Du Bois / rational / liminal ladder.
///
/// Invariants: `max_rational <= max_du_bois <= max_rational + 1`;
/// `liminal_level = Some(k)` exactly when `max_du_bois = k` and
/// `max_rational = k - 1` (the minimal exponent is the integer `k + 1`);
/// `zero_liminal` iff `liminal_level == Some(0)` iff `liminal_defect == 0`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SingularityClass {
    /// `N = sum(a_i) - d`.
    #[serde(with = "crate::jsonnum::int128")]
    pub liminal_defect: i128,
    /// `alpha = sum(a_i) / d`, in lowest terms.
    #[serde(with = "crate::jsonnum::rational")]
    pub minimal_exponent: Rational,
    /// `alpha >= 1`, equivalently Du Bois.
    pub log_canonical: bool,
    /// `alpha > 1`.
    pub rational: bool,
    /// Largest `k` with `alpha >= k + 1`; negative iff not log canonical.
    #[serde(with = "crate::jsonnum::int128")]
    pub max_du_bois: i128,
    /// Largest `k` with `alpha > k + 1`; negative iff not rational.
    #[serde(with = "crate::jsonnum::int128")]
    pub max_rational: i128,
    /// `Some(k)` iff `alpha = k + 1` exactly.
    pub liminal_level: Option<u64>,
    /// `alpha = 1` exactly: Du Bois but not rational.
    pub zero_liminal: bool,
}

impl SingularityClass {
    /// One-line human description, e.g. `"0-liminal"` or
    /// `"2-Du Bois, 1-rational"` or `"not log canonical"`.
    pub fn describe(&self) -> String {
        if !self.log_canonical {
            return "not log canonical".to_owned();
        }
        match self.liminal_level {
            Some(k) => format!("{k}-liminal"),
            None => format!(
                "{}-Du Bois, {}-rational",
                self.max_du_bois, self.max_rational
            ),
        }
    }
}

/// A map from weight systems to values with deterministic (canonical-order)
/// iteration; convenience alias used by callers that group results.
pub type WeightSystemMap<V> = BTreeMap<WeightSystem, V>;
