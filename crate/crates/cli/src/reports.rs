//! Report structs (the JSON output shapes) and their text renderers.
//!
//! Every subcommand builds one of these, serializes it with
//! `serde_json::to_string_pretty` for `--json`, and renders it with the
//! matching `render_*` function otherwise. Both paths are deterministic:
//! equal inputs produce byte-identical output.

use std::fmt::Write as _;

use liminal_core::{
    ConstraintViolation, FamilyReport, PoincarePolynomial, SeriesReport, SingularityClass,
    Spectrum, T1Decomposition, WeightSystem,
};
use num::BigUint;
use serde::Serialize;

/// Key column width for the aligned `key: value` text layout.
const KEY_WIDTH: usize = 23;

fn kv(out: &mut String, key: &str, value: impl std::fmt::Display) {
    let _ = writeln!(out, "{:<KEY_WIDTH$}{}", format!("{key}:"), value);
}

fn yes_no(flag: bool) -> &'static str {
    if flag {
        "yes"
    } else {
        "no"
    }
}

fn join<T: std::fmt::Display>(items: impl IntoIterator<Item = T>, sep: &str) -> String {
    let mut out = String::new();
    for (i, item) in items.into_iter().enumerate() {
        if i > 0 {
            out.push_str(sep);
        }
        let _ = write!(out, "{item}");
    }
    out
}

fn tuple<T: std::fmt::Display>(items: impl IntoIterator<Item = T>) -> String {
    format!("({})", join(items, ", "))
}

/// Renders rows as a right-aligned table with a header line. Column widths
/// adapt to the data, so arbitrarily large exact integers stay lined up.
fn table(headers: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = headers.iter().map(|h| h.len()).collect();
    for row in rows {
        for (i, cell) in row.iter().enumerate() {
            widths[i] = widths[i].max(cell.len());
        }
    }
    let mut out = String::new();
    let render_row = |out: &mut String, cells: &[String]| {
        let mut line = String::new();
        for (i, cell) in cells.iter().enumerate() {
            if i > 0 {
                line.push_str("  ");
            }
            let _ = write!(line, "{cell:>width$}", width = widths[i]);
        }
        out.push_str(line.trim_end());
        out.push('\n');
    };
    let header_cells: Vec<String> = headers.iter().map(|h| h.to_string()).collect();
    render_row(&mut out, &header_cells);
    for row in rows {
        render_row(&mut out, row);
    }
    out
}

// ---------------------------------------------------------------------------
// classify

#[derive(Serialize)]
pub struct ClassifyReport {
    pub system: WeightSystem,
    pub description: String,
    pub class: SingularityClass,
}

pub fn render_classify(r: &ClassifyReport) -> String {
    let ws = &r.system;
    let c = &r.class;
    let mut out = String::new();
    kv(&mut out, "system", ws);
    kv(
        &mut out,
        "variables",
        format!("{} (dimension n = {})", ws.num_vars(), ws.dim()),
    );
    kv(&mut out, "degree", ws.degree());
    kv(&mut out, "liminal defect", c.liminal_defect);
    kv(&mut out, "minimal exponent", &c.minimal_exponent);
    kv(&mut out, "classification", &r.description);
    kv(&mut out, "log canonical", yes_no(c.log_canonical));
    kv(&mut out, "rational", yes_no(c.rational));
    kv(&mut out, "max Du Bois level", c.max_du_bois);
    kv(&mut out, "max rational level", c.max_rational);
    match c.liminal_level {
        Some(k) => kv(&mut out, "liminal level", k),
        None => kv(&mut out, "liminal level", "none (exponent not an integer)"),
    }
    out
}

// ---------------------------------------------------------------------------
// spectrum

#[derive(Serialize)]
pub struct SpectrumReport {
    pub system: WeightSystem,
    #[serde(with = "liminal_core::jsonnum::biguint")]
    pub milnor_number: BigUint,
    pub top_degree: usize,
    pub poincare: PoincarePolynomial,
    pub spectrum: Spectrum,
    #[serde(with = "liminal_core::jsonnum::biguint_seq")]
    pub s_vector: Vec<BigUint>,
}

pub fn render_spectrum(r: &SpectrumReport) -> String {
    let mut out = String::new();
    kv(&mut out, "system", &r.system);
    kv(&mut out, "milnor number", &r.milnor_number);
    kv(&mut out, "top degree", r.top_degree);
    kv(&mut out, "poincare coefficients", join(r.poincare.coeffs(), ", "));
    out.push_str("spectrum (value x multiplicity):\n");
    for entry in r.spectrum.entries() {
        let _ = writeln!(out, "  {} x {}", entry.value, entry.multiplicity);
    }
    kv(&mut out, "s-vector", tuple(&r.s_vector));
    out
}

// ---------------------------------------------------------------------------
// t1

#[derive(Serialize)]
pub struct T1Report {
    pub system: WeightSystem,
    #[serde(with = "liminal_core::jsonnum::biguint")]
    pub milnor_number: BigUint,
    pub labels_valid: bool,
    pub t1: T1Decomposition,
}

pub fn render_t1(r: &T1Report) -> String {
    let mut out = String::new();
    kv(&mut out, "system", &r.system);
    kv(&mut out, "milnor number", &r.milnor_number);
    out.push_str("graded pieces (weight: dimension):\n");
    for (weight, dim) in r.t1.by_weight() {
        let _ = writeln!(out, "  {weight}: {dim}");
    }
    kv(&mut out, "dim K (weights <= 0)", r.t1.dim_k());
    kv(&mut out, "dim K' (weights < 0)", r.t1.dim_k_prime());
    kv(&mut out, "Gr (weight = 0)", r.t1.gr_link());
    kv(&mut out, "H1 log (weights >= 0)", r.t1.h1_log());
    kv(&mut out, "H1 log - E (> 0)", r.t1.h1_log_minus_e());
    kv(
        &mut out,
        "labels valid",
        if r.t1.labels_valid() {
            "yes (defect zero)"
        } else {
            "no (defect nonzero: dimensions are raw weight counts)"
        },
    );
    out
}

// ---------------------------------------------------------------------------
// enumerate

/// Plain mode: one exponent tuple per line, nothing else, so the output can
/// be consumed by line-oriented tools.
pub fn render_exponent_lines(exponents: &[&[u64]]) -> String {
    let mut out = String::new();
    for exps in exponents {
        let _ = writeln!(out, "{}", join(*exps, ","));
    }
    out
}

pub fn render_family_reports(reports: &[FamilyReport]) -> String {
    let rows: Vec<Vec<String>> = reports
        .iter()
        .map(|r| {
            vec![
                join(&r.exponents, ","),
                r.weight_system.to_string(),
                r.milnor_number.to_string(),
                tuple(&r.s_vector),
                r.t1.dim_k_prime().to_string(),
                r.class.describe(),
            ]
        })
        .collect();
    table(
        &["exponents", "system", "mu", "s-vector", "t_minus", "class"],
        &rows,
    )
}

// ---------------------------------------------------------------------------
// suite

pub fn render_suite(reports: &[SeriesReport]) -> String {
    let rows: Vec<Vec<String>> = reports
        .iter()
        .map(|r| {
            vec![
                r.n.to_string(),
                r.dim_a_system.to_string(),
                r.moduli_e.to_string(),
                r.pair_moduli.to_string(),
                r.t_minus.to_string(),
                r.global_t1.to_string(),
                if r.identity_holds { "ok" } else { "FAIL" }.to_string(),
                r.local_codim.to_string(),
                if r.log_h2_nonzero { "log-H2 nonzero" } else { "" }.to_string(),
            ]
        })
        .collect();
    table(
        &[
            "n",
            "dim|A|",
            "moduli(E)",
            "pair",
            "t_minus",
            "global T^1",
            "identity",
            "local codim",
            "note",
        ],
        &rows,
    )
}

// ---------------------------------------------------------------------------
// dual-complex

#[derive(Serialize)]
pub struct DualComplexReport {
    pub n: usize,
    pub components: Vec<String>,
    /// `face_counts[p]` = number of faces with `p + 1` vertices.
    pub face_counts: Vec<usize>,
    /// `e1[q][p]`.
    pub e1: Vec<Vec<u64>>,
    pub cohomology: Vec<u64>,
    pub violations: Vec<ConstraintViolation>,
}

pub fn render_dual_complex(r: &DualComplexReport) -> String {
    let mut out = String::new();
    kv(&mut out, "ambient dimension n", r.n);
    kv(
        &mut out,
        format!("components ({})", r.components.len()).as_str(),
        join(&r.components, ", "),
    );
    kv(&mut out, "faces by dimension", join(&r.face_counts, ", "));
    out.push_str("E1 page (rows q, columns p = 0..n-1):\n");
    let width = r
        .e1
        .iter()
        .flatten()
        .map(|v| v.to_string().len())
        .max()
        .unwrap_or(1);
    for (q, row) in r.e1.iter().enumerate().rev() {
        let _ = write!(out, "  q={q} |");
        for v in row {
            let _ = write!(out, " {v:>width$}");
        }
        out.push('\n');
    }
    kv(&mut out, "cohomology of |Gamma|", tuple(&r.cohomology));
    if r.violations.is_empty() {
        kv(&mut out, "constraint check", "ok (no violations)");
    } else {
        kv(
            &mut out,
            "constraint check",
            format!("{} violation(s)", r.violations.len()),
        );
        for v in &r.violations {
            let _ = writeln!(out, "  {v}");
        }
    }
    out
}

// ---------------------------------------------------------------------------
// registry

#[derive(Serialize)]
pub struct RegistryRow {
    pub label: String,
    pub system: WeightSystem,
    pub note: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verified: Option<bool>,
}

pub fn render_registry(rows: &[RegistryRow]) -> String {
    let verified = rows.iter().any(|r| r.verified.is_some());
    let mut headers = vec!["label", "system", "note"];
    if verified {
        headers.push("check");
    }
    let cells: Vec<Vec<String>> = rows
        .iter()
        .map(|r| {
            let mut row = vec![r.label.clone(), r.system.to_string(), r.note.clone()];
            if verified {
                row.push(if r.verified == Some(true) { "ok" } else { "FAIL" }.to_string());
            }
            row
        })
        .collect();
    // left-align text columns by padding manually: reuse `table` but flip
    // alignment by appending spaces is noisier than a direct loop.
    let mut widths: Vec<usize> = headers.iter().map(|h| h.len()).collect();
    for row in &cells {
        for (i, cell) in row.iter().enumerate() {
            widths[i] = widths[i].max(cell.len());
        }
    }
    let mut out = String::new();
    let render_row = |out: &mut String, cells: &[String]| {
        for (i, cell) in cells.iter().enumerate() {
            if i > 0 {
                out.push_str("  ");
            }
            if i + 1 == cells.len() {
                out.push_str(cell); // last column: no trailing padding
            } else {
                let _ = write!(out, "{cell:<width$}", width = widths[i]);
            }
        }
        out.push('\n');
    };
    let header_cells: Vec<String> = headers.iter().map(|h| h.to_string()).collect();
    render_row(&mut out, &header_cells);
    for row in &cells {
        render_row(&mut out, row);
    }
    out
}

// ---------------------------------------------------------------------------
// batch

#[derive(Serialize)]
pub struct BatchSummary {
    pub total: usize,
    pub ok: usize,
    pub skipped: usize,
}

/// Full per-system report: classification, grading, spectrum, and `T^1`.
#[derive(Serialize)]
pub struct BatchEntryReport {
    pub index: usize,
    pub system: WeightSystem,
    pub description: String,
    pub class: SingularityClass,
    #[serde(with = "liminal_core::jsonnum::biguint")]
    pub milnor_number: BigUint,
    pub poincare: PoincarePolynomial,
    pub spectrum: Spectrum,
    #[serde(with = "liminal_core::jsonnum::biguint_seq")]
    pub s_vector: Vec<BigUint>,
    pub labels_valid: bool,
    pub t1: T1Decomposition,
}

#[derive(Serialize)]
pub struct SkippedEntry {
    pub index: usize,
    /// The offending input, echoed back verbatim.
    pub input: serde_json::Value,
    pub error: String,
}

#[derive(Serialize)]
pub struct BatchReport {
    pub summary: BatchSummary,
    pub reports: Vec<BatchEntryReport>,
    pub skipped: Vec<SkippedEntry>,
}

pub fn render_batch(r: &BatchReport) -> String {
    let mut out = String::new();
    let mut lines: Vec<(usize, String)> = Vec::new();
    for rep in &r.reports {
        lines.push((
            rep.index,
            format!(
                "{}  {}, mu = {}, s = {}, t_minus = {}",
                rep.system,
                rep.description,
                rep.milnor_number,
                tuple(&rep.s_vector),
                rep.t1.dim_k_prime(),
            ),
        ));
    }
    for skip in &r.skipped {
        lines.push((skip.index, format!("skipped: {}", skip.error)));
    }
    lines.sort_by_key(|(index, _)| *index);
    for (index, line) in &lines {
        let _ = writeln!(out, "#{index}  {line}");
    }
    let _ = writeln!(
        out,
        "summary: {} entries, {} ok, {} skipped",
        r.summary.total, r.summary.ok, r.summary.skipped
    );
    out
}
