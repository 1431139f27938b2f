//! `liminal`: exact invariants of isolated weighted-homogeneous
//! hypersurface singularities from the command line.
//!
//! Exit codes: 0 on success, 1 on domain errors (a computation rejected the
//! input, message carries the library error name verbatim) and on batch
//! runs with skipped entries, 2 on usage errors (bad flags, malformed
//! values, unreadable input files).

mod registry;
mod reports;

use std::fs;
use std::io::Read as _;

use clap::{Args, Parser, Subcommand};
use liminal_core::{
    enumerate_diagonal_liminal_with_budget, family_report, poincare_polynomial, series_reports,
    spectrum_of, t1_of, DualComplexData, FamilyReport, WeightSystem, DEFAULT_NODE_BUDGET,
};
use serde::Serialize;

use reports::{
    render_batch, render_classify, render_dual_complex, render_exponent_lines,
    render_family_reports, render_registry, render_spectrum, render_suite, render_t1,
    BatchEntryReport, BatchReport, BatchSummary, ClassifyReport, DualComplexReport, RegistryRow,
    SkippedEntry, SpectrumReport, T1Report,
};

const EXIT_DOMAIN: i32 = 1;
const EXIT_USAGE: i32 = 2;

/// Environment override for the enumeration search budget (node count).
const NODE_BUDGET_ENV: &str = "LIMINAL_NODE_BUDGET";

#[derive(Parser)]
#[command(
    name = "liminal",
    version,
    about = "Exact invariants of isolated weighted-homogeneous hypersurface singularities",
    after_help = "Exit codes: 0 success, 1 domain error (or skipped batch entries), 2 usage error."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Place a weight system on the Du Bois / rational / liminal ladder
    Classify(SystemArgs),
    /// Milnor number, Poincaré polynomial, spectrum, and s-vector
    Spectrum(SystemArgs),
    /// Torus-weight decomposition of first-order deformations
    T1(SystemArgs),
    /// List the diagonal defect-zero families of a given dimension
    Enumerate(EnumerateArgs),
    /// Closed-form dimension table for the cone series, with identity checks
    Suite(SuiteArgs),
    /// Spectral-sequence bookkeeping for a simple normal crossing divisor
    DualComplex(DualComplexArgs),
    /// Built-in example systems
    Registry(RegistryArgs),
    /// Full reports for a JSON array of weight systems
    Batch(BatchArgs),
}

#[derive(Args)]
struct OutputArgs {
    /// Emit JSON; TARGET is a file path, "-" or omitted means stdout
    #[arg(long, value_name = "TARGET", num_args = 0..=1, default_missing_value = "-")]
    json: Option<String>,
    /// Also write the rendered output to FILE
    #[arg(long, value_name = "FILE")]
    out: Option<std::path::PathBuf>,
}

#[derive(Args)]
struct SystemArgs {
    /// Weight system as one token, e.g. "1,1,2,4;8"
    #[arg(long, value_name = "SPEC")]
    system: Option<String>,
    /// Comma-separated weights (with --degree), e.g. --weights 1,1,2,4
    #[arg(long, value_name = "LIST", value_delimiter = ',', requires = "degree")]
    weights: Option<Vec<u64>>,
    /// Degree paired with --weights
    #[arg(long, value_name = "D", requires = "weights")]
    degree: Option<u64>,
    /// Name of a built-in example (see `liminal registry list`)
    #[arg(long, value_name = "NAME")]
    label: Option<String>,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct EnumerateArgs {
    /// Singularity dimension n (families have n + 1 exponents)
    #[arg(long, value_name = "N")]
    dim: usize,
    /// Emit a full report per family instead of bare exponent tuples
    #[arg(long)]
    reports: bool,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct SuiteArgs {
    /// Single dimension "N" or inclusive range "LO..HI"
    #[arg(long, value_name = "N|LO..HI")]
    n: String,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct DualComplexArgs {
    /// JSON description {"n", "components", "faces", "h"} ("-" for stdin)
    #[arg(long, value_name = "FILE")]
    input: String,
    /// Also require h^i(|Gamma|) = 0 for 0 < i < M (asserted vanishing)
    #[arg(long, value_name = "M")]
    vanishing_range: Option<usize>,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct RegistryArgs {
    #[command(subcommand)]
    action: RegistryAction,
}

#[derive(Subcommand)]
enum RegistryAction {
    /// List the built-in example systems
    List {
        /// Recompute every entry's invariants and cross-check them
        #[arg(long)]
        verify: bool,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Args)]
struct BatchArgs {
    /// JSON array of weight systems ("-" for stdin); entries are
    /// {"weights": [...], "degree": d} objects or "a1,...,ak;d" strings
    #[arg(long, value_name = "FILE")]
    input: String,
    #[command(flatten)]
    output: OutputArgs,
}

enum CliError {
    /// The computation rejected the input; exit 1.
    Domain(String),
    /// The invocation itself is wrong; exit 2.
    Usage(String),
}

fn domain(e: impl std::fmt::Display) -> CliError {
    CliError::Domain(e.to_string())
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

/// A finished command: both renderings plus the exit code to use after a
/// successful emit (batch runs with skipped entries exit 1).
struct Rendered {
    human: String,
    json: String,
    exit: i32,
}

impl Rendered {
    fn ok<T: Serialize>(report: &T, human: String) -> Result<Self, CliError> {
        Self::with_exit(report, human, 0)
    }

    fn with_exit<T: Serialize>(report: &T, human: String, exit: i32) -> Result<Self, CliError> {
        let json = serde_json::to_string_pretty(report).map_err(domain)?;
        Ok(Rendered { human, json, exit })
    }
}

fn main() {
    let cli = Cli::parse(); // clap exits 2 on its own parse errors
    let code = match run(&cli) {
        Ok(code) => code,
        Err(CliError::Domain(msg)) => {
            eprintln!("error: {msg}");
            EXIT_DOMAIN
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            EXIT_USAGE
        }
    };
    std::process::exit(code);
}

fn run(cli: &Cli) -> Result<i32, CliError> {
    let (rendered, output) = match &cli.command {
        Command::Classify(args) => (cmd_classify(args)?, &args.output),
        Command::Spectrum(args) => (cmd_spectrum(args)?, &args.output),
        Command::T1(args) => (cmd_t1(args)?, &args.output),
        Command::Enumerate(args) => (cmd_enumerate(args)?, &args.output),
        Command::Suite(args) => (cmd_suite(args)?, &args.output),
        Command::DualComplex(args) => (cmd_dual_complex(args)?, &args.output),
        Command::Registry(args) => match &args.action {
            RegistryAction::List { verify, output } => (cmd_registry_list(*verify)?, output),
        },
        Command::Batch(args) => (cmd_batch(args)?, &args.output),
    };
    emit(&rendered, output)?;
    Ok(rendered.exit)
}

/// Writes the selected rendering: JSON to stdout or to the `--json` target,
/// text to stdout otherwise; `--out FILE` persists a copy either way.
fn emit(r: &Rendered, output: &OutputArgs) -> Result<(), CliError> {
    let write = |path: &str, content: &str| {
        fs::write(path, content).map_err(|e| CliError::Domain(format!("cannot write {path}: {e}")))
    };
    match output.json.as_deref() {
        Some("-") => println!("{}", r.json),
        Some(path) => write(path, &format!("{}\n", r.json))?,
        None => print!("{}", r.human),
    }
    if let Some(path) = &output.out {
        let content = match output.json {
            Some(_) => format!("{}\n", r.json),
            None => r.human.clone(),
        };
        write(&path.display().to_string(), &content)?;
    }
    Ok(())
}

/// Exactly one of `--system`, `--weights`/`--degree`, `--label`.
fn resolve_system(args: &SystemArgs) -> Result<WeightSystem, CliError> {
    let picked =
        usize::from(args.system.is_some()) + usize::from(args.weights.is_some()) + usize::from(args.label.is_some());
    if picked != 1 {
        return Err(usage(
            "provide exactly one input: --system \"a1,...,ak;d\", or --weights LIST --degree D, \
             or --label NAME",
        ));
    }
    if let Some(spec) = &args.system {
        return spec.parse::<WeightSystem>().map_err(domain);
    }
    if let Some(weights) = &args.weights {
        let degree = args.degree.expect("clap enforces --weights requires --degree");
        return WeightSystem::new(weights.clone(), degree).map_err(domain);
    }
    let label = args.label.as_deref().expect("one input was picked");
    match registry::find(label) {
        Some(entry) => Ok(entry.system),
        None => Err(usage(format!(
            "unknown registry label {label:?}; run `liminal registry list`"
        ))),
    }
}

fn read_input(path: &str) -> Result<String, CliError> {
    if path == "-" {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| usage(format!("cannot read stdin: {e}")))?;
        Ok(text)
    } else {
        fs::read_to_string(path).map_err(|e| usage(format!("cannot read {path}: {e}")))
    }
}

fn node_budget() -> Result<u64, CliError> {
    match std::env::var(NODE_BUDGET_ENV) {
        Err(_) => Ok(DEFAULT_NODE_BUDGET),
        Ok(text) => text.trim().parse::<u64>().map_err(|_| {
            usage(format!(
                "{NODE_BUDGET_ENV} must be a non-negative integer, found {text:?}"
            ))
        }),
    }
}

/// "N" or "LO..HI" (inclusive).
fn parse_dim_range(text: &str) -> Result<(u64, u64), CliError> {
    let parse = |part: &str| {
        part.trim()
            .parse::<u64>()
            .map_err(|_| usage(format!("--n: {part:?} is not an integer")))
    };
    match text.split_once("..") {
        Some((lo, hi)) => Ok((parse(lo)?, parse(hi)?)),
        None => {
            let n = parse(text)?;
            Ok((n, n))
        }
    }
}

// ---------------------------------------------------------------------------
// subcommands

fn cmd_classify(args: &SystemArgs) -> Result<Rendered, CliError> {
    let system = resolve_system(args)?;
    let class = system.classify();
    let report = ClassifyReport {
        description: class.describe(),
        system,
        class,
    };
    Rendered::ok(&report, render_classify(&report))
}

fn cmd_spectrum(args: &SystemArgs) -> Result<Rendered, CliError> {
    let system = resolve_system(args)?;
    let poincare = poincare_polynomial(&system).map_err(domain)?;
    let spectrum = spectrum_of(&system, &poincare);
    let report = SpectrumReport {
        milnor_number: poincare.milnor_number(),
        top_degree: poincare.top_degree(),
        s_vector: spectrum.s_vector(),
        system,
        poincare,
        spectrum,
    };
    Rendered::ok(&report, render_spectrum(&report))
}

fn cmd_t1(args: &SystemArgs) -> Result<Rendered, CliError> {
    let system = resolve_system(args)?;
    let poincare = poincare_polynomial(&system).map_err(domain)?;
    let t1 = t1_of(&system, &poincare);
    let report = T1Report {
        milnor_number: poincare.milnor_number(),
        labels_valid: t1.labels_valid(),
        system,
        t1,
    };
    Rendered::ok(&report, render_t1(&report))
}

fn cmd_enumerate(args: &EnumerateArgs) -> Result<Rendered, CliError> {
    let budget = node_budget()?;
    let families = enumerate_diagonal_liminal_with_budget(args.dim, budget).map_err(domain)?;
    if args.reports {
        let reports: Vec<FamilyReport> = families
            .iter()
            .map(family_report)
            .collect::<Result<_, _>>()
            .map_err(domain)?;
        Rendered::ok(&reports, render_family_reports(&reports))
    } else {
        #[derive(Serialize)]
        struct Row<'a>(#[serde(serialize_with = "ser_exponents")] &'a [u64]);
        fn ser_exponents<S: serde::Serializer>(v: &&[u64], s: S) -> Result<S::Ok, S::Error> {
            liminal_core::jsonnum::u64_seq::serialize(v, s)
        }
        let tuples: Vec<&[u64]> = families.iter().map(|f| f.exponents()).collect();
        let rows: Vec<Row> = tuples.iter().map(|t| Row(t)).collect();
        Rendered::ok(&rows, render_exponent_lines(&tuples))
    }
}

fn cmd_suite(args: &SuiteArgs) -> Result<Rendered, CliError> {
    let (lo, hi) = parse_dim_range(&args.n)?;
    let reports = series_reports(lo, hi).map_err(domain)?;
    Rendered::ok(&reports, render_suite(&reports))
}

fn cmd_dual_complex(args: &DualComplexArgs) -> Result<Rendered, CliError> {
    let text = read_input(&args.input)?;
    let data = DualComplexData::from_json(&text).map_err(domain)?;
    let n = data.ambient_dim();
    let report = DualComplexReport {
        n,
        components: data.components().to_vec(),
        face_counts: (0..n).map(|p| data.face_count(p)).collect(),
        e1: data.e1_page().rows().to_vec(),
        cohomology: data.cohomology(),
        violations: data.check_zero_liminal_constraints(args.vanishing_range),
    };
    Rendered::ok(&report, render_dual_complex(&report))
}

fn cmd_registry_list(verify: bool) -> Result<Rendered, CliError> {
    let entries = registry::registry();
    if verify {
        for entry in &entries {
            registry::verify(entry).map_err(CliError::Domain)?;
        }
    }
    let rows: Vec<RegistryRow> = entries
        .into_iter()
        .map(|e| RegistryRow {
            label: e.label,
            system: e.system,
            note: e.note,
            verified: verify.then_some(true),
        })
        .collect();
    Rendered::ok(&rows, render_registry(&rows))
}

fn cmd_batch(args: &BatchArgs) -> Result<Rendered, CliError> {
    let text = read_input(&args.input)?;
    let values: Vec<serde_json::Value> = serde_json::from_str(&text).map_err(|e| {
        usage(format!(
            "batch input must be a JSON array of weight systems: {e}"
        ))
    })?;
    let mut ok = Vec::new();
    let mut skipped = Vec::new();
    for (index, value) in values.into_iter().enumerate() {
        match batch_entry(index, &value) {
            Ok(report) => ok.push(report),
            Err(error) => skipped.push(SkippedEntry {
                index,
                input: value,
                error,
            }),
        }
    }
    let report = BatchReport {
        summary: BatchSummary {
            total: ok.len() + skipped.len(),
            ok: ok.len(),
            skipped: skipped.len(),
        },
        reports: ok,
        skipped,
    };
    let exit = if report.summary.skipped > 0 { EXIT_DOMAIN } else { 0 };
    Rendered::with_exit(&report, render_batch(&report), exit)
}

fn batch_entry(index: usize, value: &serde_json::Value) -> Result<BatchEntryReport, String> {
    let system: WeightSystem = match value {
        serde_json::Value::String(text) => text.parse().map_err(|e| format!("{e}"))?,
        other => serde_json::from_value(other.clone()).map_err(|e| format!("{e}"))?,
    };
    let poincare = poincare_polynomial(&system).map_err(|e| format!("{e}"))?;
    let spectrum = spectrum_of(&system, &poincare);
    let t1 = t1_of(&system, &poincare);
    let class = system.classify();
    Ok(BatchEntryReport {
        index,
        description: class.describe(),
        milnor_number: poincare.milnor_number(),
        s_vector: spectrum.s_vector(),
        labels_valid: t1.labels_valid(),
        system,
        class,
        poincare,
        spectrum,
        t1,
    })
}
