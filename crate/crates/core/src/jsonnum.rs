//! JSON serialization policy for exact numbers.
//!
//! Arbitrary-precision results must survive JSON without silently losing
//! precision in readers that parse numbers as IEEE doubles. The policy:
//!
//! * integers with magnitude at most 2^53 are emitted as JSON numbers;
//! * anything larger is emitted as a decimal string;
//! * rationals are always objects `{"num": ..., "den": ...}` in lowest
//!   terms, each component following the integer rule.
//!
//! Deserializers accept both forms (number or decimal string), so output
//! re-parses losslessly.
//!
//! The submodules are `#[serde(with = ...)]` adapters: [`biguint`],
//! [`bigint`], [`int128`], [`biguint_seq`], [`u64_value`], [`u64_seq`],
//! and [`rational`].

use num::bigint::{BigInt, BigUint};
use num::rational::Ratio;
use num::ToPrimitive;
use serde::de::Error as _;
use serde::{Deserialize, Serialize, Serializer};

/// Largest magnitude serialized as a JSON number: 2^53.
pub const MAX_SAFE_INTEGER: u64 = 1 << 53;

pub(crate) struct Uint<'a>(pub &'a BigUint);

impl Serialize for Uint<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self.0.to_u64() {
            Some(small) if small <= MAX_SAFE_INTEGER => serializer.serialize_u64(small),
            _ => serializer.serialize_str(&self.0.to_string()),
        }
    }
}

pub(crate) struct Int<'a>(pub &'a BigInt);

impl Serialize for Int<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self.0.to_i64() {
            Some(small) if small.unsigned_abs() <= MAX_SAFE_INTEGER => {
                serializer.serialize_i64(small)
            }
            _ => serializer.serialize_str(&self.0.to_string()),
        }
    }
}

pub(crate) struct U64(pub u64);

impl Serialize for U64 {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        if self.0 <= MAX_SAFE_INTEGER {
            serializer.serialize_u64(self.0)
        } else {
            serializer.serialize_str(&self.0.to_string())
        }
    }
}

pub(crate) struct U64Seq<'a>(pub &'a [u64]);

impl Serialize for U64Seq<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeSeq;
        let mut seq = serializer.serialize_seq(Some(self.0.len()))?;
        for &v in self.0 {
            seq.serialize_element(&U64(v))?;
        }
        seq.end()
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum UintRepr {
    Number(u64),
    Text(String),
}

impl UintRepr {
    fn into_biguint<E: serde::de::Error>(self) -> Result<BigUint, E> {
        match self {
            UintRepr::Number(v) => Ok(BigUint::from(v)),
            UintRepr::Text(text) => text
                .trim()
                .parse()
                .map_err(|_| E::custom(format!("not a non-negative integer: {text:?}"))),
        }
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum IntRepr {
    Number(i64),
    Big(u64),
    Text(String),
}

impl IntRepr {
    fn into_bigint<E: serde::de::Error>(self) -> Result<BigInt, E> {
        match self {
            IntRepr::Number(v) => Ok(BigInt::from(v)),
            IntRepr::Big(v) => Ok(BigInt::from(v)),
            IntRepr::Text(text) => text
                .trim()
                .parse()
                .map_err(|_| E::custom(format!("not an integer: {text:?}"))),
        }
    }
}

/// `#[serde(with = "jsonnum::biguint")]` for [`BigUint`] fields.
pub mod biguint {
    use super::*;

    pub fn serialize<S: Serializer>(value: &BigUint, serializer: S) -> Result<S::Ok, S::Error> {
        Uint(value).serialize(serializer)
    }

    pub fn deserialize<'de, D>(deserializer: D) -> Result<BigUint, D::Error>
    where
        D: serde::Deserializer<'de>,
    {
        UintRepr::deserialize(deserializer)?.into_biguint()
    }
}

/// `#[serde(with = "jsonnum::bigint")]` for [`BigInt`] fields.
pub mod bigint {
    use super::*;

    pub fn serialize<S: Serializer>(value: &BigInt, serializer: S) -> Result<S::Ok, S::Error> {
        Int(value).serialize(serializer)
    }

    pub fn deserialize<'de, D>(deserializer: D) -> Result<BigInt, D::Error>
    where
        D: serde::Deserializer<'de>,
    {
        IntRepr::deserialize(deserializer)?.into_bigint()
    }
}

/// `#[serde(with = "jsonnum::int128")]` for `i128` fields.
pub mod int128 {
    use super::*;

    pub fn serialize<S: Serializer>(value: &i128, serializer: S) -> Result<S::Ok, S::Error> {
        Int(&BigInt::from(*value)).serialize(serializer)
    }

    pub fn deserialize<'de, D>(deserializer: D) -> Result<i128, D::Error>
    where
        D: serde::Deserializer<'de>,
    {
        let big = IntRepr::deserialize(deserializer)?.into_bigint()?;
        big.to_i128()
            .ok_or_else(|| D::Error::custom("integer out of i128 range"))
    }
}

/// `#[serde(with = "jsonnum::biguint_seq")]` for `Vec<BigUint>` fields.
pub mod biguint_seq {
    use super::*;
    use serde::ser::SerializeSeq;

    pub fn serialize<S: Serializer>(values: &[BigUint], serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(values.len()))?;
        for v in values {
            seq.serialize_element(&Uint(v))?;
        }
        seq.end()
    }

    pub fn deserialize<'de, D>(deserializer: D) -> Result<Vec<BigUint>, D::Error>
    where
        D: serde::Deserializer<'de>,
    {
        let raw = Vec::<UintRepr>::deserialize(deserializer)?;
        raw.into_iter().map(UintRepr::into_biguint).collect()
    }
}

/// `#[serde(with = "jsonnum::u64_value")]` for `u64` fields.
pub mod u64_value {
    use super::*;

    pub fn serialize<S: Serializer>(value: &u64, serializer: S) -> Result<S::Ok, S::Error> {
        U64(*value).serialize(serializer)
    }

    pub fn deserialize<'de, D>(deserializer: D) -> Result<u64, D::Error>
    where
        D: serde::Deserializer<'de>,
    {
        use num::ToPrimitive;
        let big = UintRepr::deserialize(deserializer)?.into_biguint()?;
        big.to_u64()
            .ok_or_else(|| D::Error::custom("integer out of u64 range"))
    }
}

/// `#[serde(with = "jsonnum::u64_seq")]` for `Vec<u64>` fields.
pub mod u64_seq {
    use super::*;
    use serde::ser::SerializeSeq;

    pub fn serialize<S: Serializer>(values: &[u64], serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(values.len()))?;
        for &v in values {
            seq.serialize_element(&U64(v))?;
        }
        seq.end()
    }

    pub fn deserialize<'de, D>(deserializer: D) -> Result<Vec<u64>, D::Error>
    where
        D: serde::Deserializer<'de>,
    {
        use num::ToPrimitive;
        let raw = Vec::<UintRepr>::deserialize(deserializer)?;
        raw.into_iter()
            .map(|repr| {
                repr.into_biguint().and_then(|big| {
                    big.to_u64()
                        .ok_or_else(|| D::Error::custom("integer out of u64 range"))
                })
            })
            .collect()
    }
}

/// `#[serde(with = "jsonnum::rational")]` for [`crate::Rational`] fields:
/// `{"num": ..., "den": ...}` in lowest terms with positive denominator.
pub mod rational {
    use super::*;

    #[derive(Serialize, Deserialize)]
    struct RatioRepr {
        #[serde(with = "super::bigint")]
        num: BigInt,
        #[serde(with = "super::bigint")]
        den: BigInt,
    }

    pub fn serialize<S: Serializer>(
        value: &Ratio<BigInt>,
        serializer: S,
    ) -> Result<S::Ok, S::Error> {
        RatioRepr {
            num: value.numer().clone(),
            den: value.denom().clone(),
        }
        .serialize(serializer)
    }

    pub fn deserialize<'de, D>(deserializer: D) -> Result<Ratio<BigInt>, D::Error>
    where
        D: serde::Deserializer<'de>,
    {
        use num::Zero;
        let repr = RatioRepr::deserialize(deserializer)?;
        if repr.den.is_zero() {
            return Err(D::Error::custom("rational with zero denominator"));
        }
        Ok(Ratio::new(repr.num, repr.den))
    }
}
