//! Dual complexes of simple normal crossing divisors.
//!
//! The input is combinatorial: component labels `E_1, ..., E_k` of an SNC
//! divisor inside a smooth space of dimension `n`, the set of index sets
//! `I` with nonempty intersection `E_I` (an abstract simplicial complex
//! `Γ`, automatically closed downward here since `E_J ⊇ E_I` for
//! `J ⊆ I`), and the cohomology dimensions `h^q(E_I; O)` of each stratum.
//!
//! From this we assemble:
//!
//! * the Mayer–Vietoris first page `E_1^(p,q) = Σ_(#I = p+1) h^q(E_I)`,
//! * the simplicial cohomology of `|Γ|` over the rationals, by exact
//!   (fraction-free) rank computation of the coboundary matrices, and
//! * the necessary conditions satisfied by the exceptional divisor of a
//!   resolution of a defect-zero singularity: at most one component
//!   carries top cohomology, and `|Γ|` has no low-degree cohomology
//!   within a user-asserted vanishing range.
//!
//! Only dimensions are computed — the differentials past the first page
//! would need the geometric restriction maps, which a dimension table
//! cannot carry. The bottom `q = 0` row, for connected strata, already
//! computes `h^i(|Γ|)`, which is all the constraint checking needs.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num::bigint::BigInt;
use num::{Integer, One, Zero};
use serde::ser::SerializeStruct;
use serde::{Deserialize, Serialize, Serializer};

/// Failures of dual-complex construction and computation.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DualComplexError {
    /// The data violates a structural invariant; the message says which.
    #[error("InvalidComplex: {0}")]
    InvalidComplex(String),
}

fn invalid(msg: impl Into<String>) -> DualComplexError {
    DualComplexError::InvalidComplex(msg.into())
}

/// Caps that keep exact linear algebra on the complex tractable.
const MAX_COMPONENTS: usize = 4096;
const MAX_FACE_SIZE: usize = 20;
const MAX_FACES: usize = 1 << 20;
const MAX_AMBIENT_DIM: usize = 512;
/// Bound on the total number of stored `h^q` cells (faces times h-vector
/// lengths), which is what actually drives memory.
const MAX_H_CELLS: usize = 1 << 24;

/// One `h^q(E_I) = dim` assignment in the input.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StratumCohomology {
    pub face: Vec<usize>,
    pub q: usize,
    pub dim: u64,
}

/// A validated dual complex with per-stratum cohomology dimensions.
///
/// Faces are stored sorted, deduplicated, and downward-closed (every
/// nonempty subset of a face is a face, and every component is a face).
/// `h^0` of every stratum defaults to 1 and anything else to 0 unless the
/// input says otherwise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualComplexData {
    n: usize,
    components: Vec<String>,
    /// face -> (h^0, ..., h^(dim E_I)), where dim E_I = n - #I.
    strata: BTreeMap<Vec<usize>, Vec<u64>>,
}

impl DualComplexData {
    /// Validates and builds the complex. `faces` may list any generating
    /// set (e.g. only the maximal faces); the downward closure and all
    /// singletons are added automatically.
    pub fn new(
        n: usize,
        components: Vec<String>,
        faces: Vec<Vec<usize>>,
        h: Vec<StratumCohomology>,
    ) -> Result<Self, DualComplexError> {
        if n == 0 {
            return Err(invalid("ambient dimension n must be at least 1"));
        }
        if n > MAX_AMBIENT_DIM {
            return Err(invalid(format!(
                "ambient dimension {n} exceeds the supported {MAX_AMBIENT_DIM}"
            )));
        }
        if components.is_empty() {
            return Err(invalid("component list is empty"));
        }
        if components.len() > MAX_COMPONENTS {
            return Err(invalid(format!(
                "too many components ({}, limit {MAX_COMPONENTS})",
                components.len()
            )));
        }

        let mut face_set: BTreeSet<Vec<usize>> = BTreeSet::new();
        for i in 0..components.len() {
            face_set.insert(vec![i]);
        }
        for raw in &faces {
            let mut face = raw.clone();
            face.sort_unstable();
            if face.is_empty() {
                return Err(invalid("empty face"));
            }
            face.dedup();
            if face.len() != raw.len() {
                return Err(invalid(format!("face {raw:?} repeats an index")));
            }
            if let Some(&i) = face.iter().find(|&&i| i >= components.len()) {
                return Err(invalid(format!(
                    "face {raw:?} references component {i}, but only {} exist",
                    components.len()
                )));
            }
            if face.len() > n {
                return Err(invalid(format!(
                    "face {raw:?} has {} components, so its stratum would have negative dimension (ambient n = {n})",
                    face.len()
                )));
            }
            if face.len() > MAX_FACE_SIZE {
                return Err(invalid(format!(
                    "face {raw:?} exceeds the supported size {MAX_FACE_SIZE}"
                )));
            }
            // downward closure: every nonempty subset is a face
            for mask in 1u32..(1u32 << face.len()) {
                let subset: Vec<usize> = face
                    .iter()
                    .enumerate()
                    .filter(|(j, _)| mask >> j & 1 == 1)
                    .map(|(_, &v)| v)
                    .collect();
                face_set.insert(subset);
                if face_set.len() > MAX_FACES {
                    return Err(invalid(format!(
                        "complex exceeds the supported {MAX_FACES} faces"
                    )));
                }
            }
        }

        let mut cells: usize = 0;
        let mut strata: BTreeMap<Vec<usize>, Vec<u64>> = BTreeMap::new();
        for face in face_set {
            let dim_e = n - face.len();
            cells += dim_e + 1;
            if cells > MAX_H_CELLS {
                return Err(invalid(format!(
                    "complex stores more than {MAX_H_CELLS} cohomology cells \
                     (faces times h-vector lengths)"
                )));
            }
            let mut hvec = vec![0u64; dim_e + 1];
            hvec[0] = 1;
            strata.insert(face, hvec);
        }

        let mut seen: BTreeSet<(Vec<usize>, usize)> = BTreeSet::new();
        for entry in &h {
            let mut face = entry.face.clone();
            face.sort_unstable();
            let hvec = strata
                .get_mut(&face)
                .ok_or_else(|| invalid(format!("h entry references non-face {:?}", entry.face)))?;
            if !seen.insert((face.clone(), entry.q)) {
                return Err(invalid(format!(
                    "duplicate h entry for face {:?}, q = {}",
                    entry.face, entry.q
                )));
            }
            if entry.q >= hvec.len() {
                if entry.dim != 0 {
                    return Err(invalid(format!(
                        "h^{}({:?}) = {} but the stratum has dimension {}",
                        entry.q,
                        entry.face,
                        entry.dim,
                        hvec.len() - 1
                    )));
                }
                continue; // explicit zero beyond the stratum dimension
            }
            hvec[entry.q] = entry.dim;
        }
        for (face, hvec) in &strata {
            if hvec[0] == 0 {
                return Err(invalid(format!(
                    "h^0({face:?}) = 0, but every nonempty stratum has h^0 >= 1"
                )));
            }
        }

        Ok(DualComplexData {
            n,
            components,
            strata,
        })
    }

    /// Parses the JSON input form
    /// `{"n":..,"components":[..],"faces":[[..]],"h":[{"face":..,"q":..,"dim":..}]}`.
    pub fn from_json(text: &str) -> Result<Self, DualComplexError> {
        let raw: RawDualComplex = serde_json::from_str(text)
            .map_err(|e| invalid(format!("malformed dual-complex JSON: {e}")))?;
        Self::new(raw.n, raw.components, raw.faces, raw.h)
    }

    /// Ambient germ dimension.
    pub fn ambient_dim(&self) -> usize {
        self.n
    }

    pub fn components(&self) -> &[String] {
        &self.components
    }

    /// All faces (downward-closed, singletons included), sorted.
    pub fn faces(&self) -> impl Iterator<Item = &[usize]> {
        self.strata.keys().map(|f| f.as_slice())
    }

    /// `h^q(E_I)`; zero outside the stored range.
    pub fn stratum_h(&self, face: &[usize], q: usize) -> u64 {
        self.strata
            .get(face)
            .and_then(|hvec| hvec.get(q))
            .copied()
            .unwrap_or(0)
    }

    /// Number of faces with `p + 1` components.
    pub fn face_count(&self, p: usize) -> usize {
        self.strata.keys().filter(|f| f.len() == p + 1).count()
    }

    /// The first page `E_1^(p,q) = Σ_(#I = p+1) h^q(E_I)` as an
    /// `n x n` table (rows `q`, columns `p`; entries vanish for
    /// `q > n - 1 - p`). Entries saturate at `u64::MAX`.
    pub fn e1_page(&self) -> E1Page {
        let n = self.n;
        let mut entries = vec![vec![0u64; n]; n];
        for (face, hvec) in &self.strata {
            let p = face.len() - 1;
            for (q, &dim) in hvec.iter().enumerate() {
                if dim != 0 {
                    entries[q][p] = entries[q][p].saturating_add(dim);
                }
            }
        }
        E1Page { n, entries }
    }

    /// The coboundary matrices `delta_k: C^k -> C^(k+1)` for
    /// `k = 0 .. dim Γ - 1`, rows indexed by `(k+1)`-simplices and columns
    /// by `k`-simplices, both in sorted order; entry signs follow the
    /// sorted-vertex orientation convention.
    pub fn coboundary_matrices(&self) -> Vec<Vec<Vec<BigInt>>> {
        let faces_by_dim = self.faces_by_dim();
        (0..faces_by_dim.len().saturating_sub(1))
            .map(|k| coboundary(&faces_by_dim[k], &faces_by_dim[k + 1]))
            .collect()
    }

    fn faces_by_dim(&self) -> Vec<Vec<&Vec<usize>>> {
        let top = self.strata.keys().map(Vec::len).max().unwrap_or(0);
        // faces_by_dim[k] = sorted list of k-simplices (size k+1)
        let mut faces_by_dim: Vec<Vec<&Vec<usize>>> = vec![Vec::new(); top];
        for face in self.strata.keys() {
            faces_by_dim[face.len() - 1].push(face);
        }
        faces_by_dim
    }

    /// Simplicial cohomology ranks `h^0, ..., h^(dim Γ)` of `|Γ|` over the
    /// rationals, with the fixed sorted-vertex orientation convention.
    pub fn cohomology(&self) -> Vec<u64> {
        let faces_by_dim = self.faces_by_dim();
        let top = faces_by_dim.len();
        let mut ranks: Vec<usize> = self
            .coboundary_matrices()
            .into_iter()
            .map(matrix_rank)
            .collect();
        ranks.push(0); // delta from the top dimension is zero
        let mut h = Vec::with_capacity(top);
        for k in 0..top {
            let below = if k == 0 { 0 } else { ranks[k - 1] };
            h.push((faces_by_dim[k].len() - ranks[k] - below) as u64);
        }
        h
    }

    /// Checks the necessary conditions for `Γ` to be the dual complex of
    /// the exceptional divisor over a defect-zero point:
    ///
    /// * (a) the total top cohomology `Σ_i h^(n-1)(E_i)` is 0 or 1;
    /// * (b) if that total is 1, exactly one component carries it;
    /// * (c) if the caller asserts `h^i(E; O) = 0` for `0 < i < m`
    ///   (`vanishing_range = Some(m)`), then `h^i(|Γ|) = 0` on that range.
    ///
    /// Returns all violations; an empty list means every checked condition
    /// holds.
    pub fn check_zero_liminal_constraints(
        &self,
        vanishing_range: Option<usize>,
    ) -> Vec<ConstraintViolation> {
        let mut violations = Vec::new();
        let top_q = self.n - 1;
        let mut total: u64 = 0;
        let mut carriers = Vec::new();
        for i in 0..self.components.len() {
            let h = self.stratum_h(&[i], top_q);
            total = total.saturating_add(h);
            if h > 0 {
                carriers.push(i);
            }
        }
        if total > 1 {
            violations.push(ConstraintViolation::TopCohomologyTotal {
                total,
                carriers: carriers.clone(),
            });
        } else if total == 1 && carriers.len() != 1 {
            violations.push(ConstraintViolation::TopCohomologyShared { carriers });
        }
        if let Some(m) = vanishing_range {
            let h = self.cohomology();
            for (i, &dim) in h.iter().enumerate().skip(1) {
                if i < m && dim != 0 {
                    violations.push(ConstraintViolation::DualComplexCohomology {
                        degree: i,
                        dim,
                        range: m,
                    });
                }
            }
        }
        violations
    }
}

#[derive(Deserialize)]
struct RawDualComplex {
    n: usize,
    components: Vec<String>,
    #[serde(default)]
    faces: Vec<Vec<usize>>,
    #[serde(default)]
    h: Vec<StratumCohomology>,
}

impl Serialize for DualComplexData {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let faces: Vec<&Vec<usize>> = self.strata.keys().collect();
        let mut h = Vec::new();
        for (face, hvec) in &self.strata {
            for (q, &dim) in hvec.iter().enumerate() {
                let default = if q == 0 { 1 } else { 0 };
                if dim != default {
                    h.push(StratumCohomology {
                        face: face.clone(),
                        q,
                        dim,
                    });
                }
            }
        }
        let mut st = serializer.serialize_struct("DualComplexData", 4)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("components", &self.components)?;
        st.serialize_field("faces", &faces)?;
        st.serialize_field("h", &h)?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for DualComplexData {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = RawDualComplex::deserialize(deserializer)?;
        DualComplexData::new(raw.n, raw.components, raw.faces, raw.h)
            .map_err(serde::de::Error::custom)
    }
}

/// The Mayer–Vietoris first page: `entry(p, q)` sums `h^q` over the
/// strata with `p + 1` components.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct E1Page {
    n: usize,
    /// `entries[q][p]`.
    entries: Vec<Vec<u64>>,
}

impl E1Page {
    pub fn entry(&self, p: usize, q: usize) -> u64 {
        self.entries
            .get(q)
            .and_then(|row| row.get(p))
            .copied()
            .unwrap_or(0)
    }

    /// Rows indexed by `q = 0..n-1`, each row over `p = 0..n-1`.
    pub fn rows(&self) -> &[Vec<u64>] {
        &self.entries
    }

    pub fn size(&self) -> usize {
        self.n
    }
}

/// A failed necessary condition; `Display` names the clause.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConstraintViolation {
    /// (a) `Σ_i h^(n-1)(E_i)` exceeds 1.
    TopCohomologyTotal { total: u64, carriers: Vec<usize> },
    /// (b) total is 1 but not carried by exactly one component.
    TopCohomologyShared { carriers: Vec<usize> },
    /// (c) `h^degree(|Γ|) != 0` inside the asserted vanishing range.
    DualComplexCohomology {
        degree: usize,
        dim: u64,
        range: usize,
    },
}

impl ConstraintViolation {
    /// `"a"`, `"b"`, or `"c"`.
    pub fn clause(&self) -> &'static str {
        match self {
            ConstraintViolation::TopCohomologyTotal { .. } => "a",
            ConstraintViolation::TopCohomologyShared { .. } => "b",
            ConstraintViolation::DualComplexCohomology { .. } => "c",
        }
    }
}

impl fmt::Display for ConstraintViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConstraintViolation::TopCohomologyTotal { total, carriers } => write!(
                f,
                "clause (a): total top-degree cohomology over the components is {total} (carried by {carriers:?}), must be 0 or 1"
            ),
            ConstraintViolation::TopCohomologyShared { carriers } => write!(
                f,
                "clause (b): top-degree cohomology of total 1 must sit on exactly one component, found {carriers:?}"
            ),
            ConstraintViolation::DualComplexCohomology { degree, dim, range } => write!(
                f,
                "clause (c): h^{degree}(|Γ|) = {dim}, expected 0 for 0 < i < {range}"
            ),
        }
    }
}

impl Serialize for ConstraintViolation {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("ConstraintViolation", 2)?;
        st.serialize_field("clause", self.clause())?;
        st.serialize_field("detail", &self.to_string())?;
        st.end()
    }
}

/// Coboundary matrix from `k`-simplices to `(k+1)`-simplices: row per
/// `(k+1)`-simplex, column per `k`-simplex, sign `(-1)^j` for omitting the
/// `j`-th vertex (vertices sorted ascending).
fn coboundary(lower: &[&Vec<usize>], upper: &[&Vec<usize>]) -> Vec<Vec<BigInt>> {
    let index: BTreeMap<&[usize], usize> = lower
        .iter()
        .enumerate()
        .map(|(i, f)| (f.as_slice(), i))
        .collect();
    let mut matrix = vec![vec![BigInt::zero(); lower.len()]; upper.len()];
    for (row, tau) in upper.iter().enumerate() {
        for j in 0..tau.len() {
            let mut sigma = (*tau).clone();
            sigma.remove(j);
            let col = index[sigma.as_slice()]; // closure guarantees presence
            let sign = if j % 2 == 0 { 1 } else { -1 };
            matrix[row][col] += BigInt::from(sign);
        }
    }
    matrix
}

/// Exact rank by fraction-free (Bareiss) elimination.
fn matrix_rank(mut m: Vec<Vec<BigInt>>) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    let mut prev = BigInt::one();
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pivot_row) = (rank..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot_row);
        let pivot = m[rank][col].clone();
        for r in rank + 1..rows {
            for c in col + 1..cols {
                let val = &pivot * &m[r][c] - &m[r][col] * &m[rank][c];
                let (q, rem) = val.div_rem(&prev);
                debug_assert!(rem.is_zero(), "fraction-free elimination stayed exact");
                m[r][c] = q;
            }
            m[r][col] = BigInt::zero();
        }
        prev = pivot;
        rank += 1;
    }
    rank
}
