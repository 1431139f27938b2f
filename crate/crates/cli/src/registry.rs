//! Built-in example systems with stable labels, usable anywhere a weight
//! system is expected (`--label NAME`).
//!
//! The list is generated, not hand-copied: the dimension-3 defect-zero
//! entries come straight from the enumerator, so `registry list --verify`
//! cross-checks the generator against independently computed invariants.

use liminal_core::{
    enumerate_diagonal_liminal, milnor_number, poincare_polynomial, spectrum_of, t1_of,
    WeightSystem,
};
use num::{BigUint, One, Zero};

pub struct RegistryEntry {
    pub label: String,
    pub system: WeightSystem,
    pub note: String,
}

/// All entries, in a fixed, documented order: Fermat cones, ordinary double
/// points, one anisotropic threefold, then the fourteen dimension-3
/// defect-zero diagonal families in lexicographic exponent order.
pub fn registry() -> Vec<RegistryEntry> {
    let mut entries = Vec::new();
    for n in 2..=8u64 {
        let vars = usize::try_from(n).unwrap() + 1;
        entries.push(RegistryEntry {
            label: format!("fermat-cone-n{n}"),
            system: WeightSystem::new(vec![1; vars], n + 1).unwrap(),
            note: format!("cone over a smooth degree-{} hypersurface, defect zero", n + 1),
        });
    }
    for n in 2..=8u64 {
        let vars = usize::try_from(n).unwrap() + 1;
        entries.push(RegistryEntry {
            label: format!("odp-n{n}"),
            system: WeightSystem::new(vec![1; vars], 2).unwrap(),
            note: format!("ordinary double point of dimension {n}"),
        });
    }
    entries.push(RegistryEntry {
        label: "reid-1-1-2-4-8".to_owned(),
        system: WeightSystem::new(vec![1, 1, 2, 4], 8).unwrap(),
        note: "anisotropic defect-zero threefold, exponents (8,8,4,2)".to_owned(),
    });
    let families = enumerate_diagonal_liminal(3)
        .expect("dimension 3 enumeration is far below the default budget");
    for family in families {
        let label = std::iter::once("dim3".to_owned())
            .chain(family.exponents().iter().map(u64::to_string))
            .collect::<Vec<_>>()
            .join("-");
        entries.push(RegistryEntry {
            label,
            system: family.weight_system().clone(),
            note: "diagonal defect-zero threefold family".to_owned(),
        });
    }
    entries
}

/// Exact label lookup.
pub fn find(label: &str) -> Option<RegistryEntry> {
    registry().into_iter().find(|e| e.label == label)
}

/// Recomputes each entry's invariants along two independent routes and
/// cross-checks them, plus label-specific anchors. Returns the offending
/// label and a reason on the first mismatch.
pub fn verify(entry: &RegistryEntry) -> Result<(), String> {
    let fail = |reason: String| Err(format!("registry entry {}: {reason}", entry.label));
    let ws = &entry.system;
    let poincare = match poincare_polynomial(ws) {
        Ok(p) => p,
        Err(e) => return fail(format!("graded algebra not computable: {e}")),
    };
    if !poincare.is_palindromic() {
        return fail("Poincare polynomial is not palindromic".to_owned());
    }
    // product formula vs. coefficient sum
    let mu = match milnor_number(ws) {
        Ok(mu) => mu,
        Err(e) => return fail(format!("product formula failed: {e}")),
    };
    if mu != poincare.milnor_number() {
        return fail(format!(
            "product formula gives mu = {mu}, coefficient sum gives {}",
            poincare.milnor_number()
        ));
    }
    let spectrum = spectrum_of(ws, &poincare);
    if spectrum.total_multiplicity() != mu {
        return fail("spectrum multiplicities do not sum to mu".to_owned());
    }
    let t1 = t1_of(ws, &poincare);
    if t1.total_dim() != mu {
        return fail("T^1 graded dimensions do not sum to mu".to_owned());
    }

    // label-specific anchors
    let s = spectrum.s_vector();
    let n = ws.dim();
    let class = ws.classify();
    if let Some(rest) = entry.label.strip_prefix("fermat-cone-n") {
        let n64: u64 = rest.parse().unwrap();
        if mu != BigUint::from(n64).pow(u32::try_from(n64).unwrap() + 1) {
            return fail(format!("expected mu = {n64}^{}", n64 + 1));
        }
        if class.liminal_defect != 0 || s[n] != BigUint::one() {
            return fail("expected a defect-zero system with s_n = 1".to_owned());
        }
    } else if entry.label.starts_with("odp-n") {
        if mu != BigUint::one() {
            return fail("expected mu = 1".to_owned());
        }
        let expected = match n % 2 {
            1 => format!("{}-liminal", (n - 1) / 2),
            _ => format!("{}-Du Bois, {}-rational", n / 2 - 1, n / 2 - 1),
        };
        if class.describe() != expected {
            return fail(format!(
                "expected class {expected:?}, found {:?}",
                class.describe()
            ));
        }
    } else if entry.label == "reid-1-1-2-4-8" {
        if mu != BigUint::from(147u32) {
            return fail("expected mu = 147".to_owned());
        }
        if class.liminal_defect != 0 {
            return fail("expected defect zero".to_owned());
        }
    } else if entry.label.starts_with("dim3-") {
        if class.liminal_defect != 0 || s[n] != BigUint::one() || !s[0].is_zero() {
            return fail("expected defect zero with s_3 = 1, s_0 = 0".to_owned());
        }
        if t1.dim_k_prime() != &s[1] {
            return fail("expected t_minus = s_1".to_owned());
        }
    }
    Ok(())
}
