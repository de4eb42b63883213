//! One function per subcommand; each returns the rendered stdout payload
//! plus the process exit code.

use std::fmt::Write as _;

use fibdev_core::{
    corr_fib, corr_lucas, count_states, density_fib, density_fib_float, density_lucas,
    density_lucas_float, density_profile, enumerate_states, estimate_correlation,
    estimate_density, format_ratio, ratio_to_f64, verify, BigRational, CorrelationResult,
    DeviceSpec, Estimate, SampleConfig, Topology,
};
use serde_json::{json, Value};

use crate::output::{
    csv_text, format_float, format_float_opt, json_biguint, json_document, json_float,
    json_float_opt, OutputFormat,
};

/// Anything that stops a subcommand from producing a result.
pub enum Failure {
    /// The invocation itself is malformed (missing or contradictory flags).
    Usage(String),
    /// The library rejected the inputs or a resource guard tripped.
    Core(fibdev_core::Error),
}

impl From<fibdev_core::Error> for Failure {
    fn from(error: fibdev_core::Error) -> Self {
        Failure::Core(error)
    }
}

/// Stdout payload and exit code of a successful dispatch.
pub struct Rendered {
    pub text: String,
    pub code: u8,
}

impl Rendered {
    fn ok(text: String) -> Self {
        Rendered { text, code: 0 }
    }
}

/// What a sampling run estimates.
pub enum Observable {
    Cell(usize),
    Pair(usize, usize),
}

fn topology_name(topology: Topology) -> &'static str {
    match topology {
        Topology::Linear => "linear",
        Topology::Circular => "circular",
    }
}

/// Swallows the float-range guard: past the evaluation limit the float
/// column is simply absent. Domain errors cannot reach here because the
/// exact computation validates the same inputs first.
fn float_column(result: fibdev_core::Result<f64>) -> Option<f64> {
    result.ok()
}

pub fn density(
    format: OutputFormat,
    topology: Topology,
    n: usize,
    i: Option<usize>,
) -> Result<Rendered, Failure> {
    let spec = DeviceSpec::new(topology, n)?;
    if topology == Topology::Linear && i.is_none() {
        return density_table(format, n);
    }
    let (exact, approx) = match topology {
        Topology::Linear => {
            let i = i.expect("single-cell branch");
            (density_fib(n, i)?, float_column(density_fib_float(n, i)))
        }
        Topology::Circular => {
            if let Some(i) = i {
                spec.check_cell(i)?;
            }
            (density_lucas(n)?, float_column(density_lucas_float(n)))
        }
    };
    let text = match format {
        OutputFormat::Table => {
            format!("{}  {}\n", format_ratio(&exact), format_float_opt(approx))
        }
        OutputFormat::Csv => match i {
            Some(i) => format!(
                "i,exact,approx\n{},{},{}\n",
                i,
                format_ratio(&exact),
                format_float_opt(approx)
            ),
            None => format!(
                "exact,approx\n{},{}\n",
                format_ratio(&exact),
                format_float_opt(approx)
            ),
        },
        OutputFormat::Json => {
            let mut inputs = json!({
                "command": "density",
                "topology": topology_name(topology),
                "n": n,
            });
            if let Some(i) = i {
                inputs["i"] = json!(i);
            }
            json_document(&json!({
                "inputs": inputs,
                "exact": format_ratio(&exact),
                "approx": json_float_opt(approx),
            }))
        }
    };
    Ok(Rendered::ok(text))
}

/// Whole-device density profile for a chain; one row per cell.
fn density_table(format: OutputFormat, n: usize) -> Result<Rendered, Failure> {
    let profile = density_profile(n, Topology::Linear)?;
    let text = match format {
        OutputFormat::Table => {
            let mut text = String::new();
            for row in &profile.rows {
                let _ = writeln!(
                    text,
                    "{}  {}  {}",
                    row.i,
                    format_ratio(&row.exact),
                    format_float_opt(row.approx)
                );
            }
            text
        }
        OutputFormat::Csv => {
            let mut text = format!("# density profile: linear device, n = {}\ni,exact,approx\n", n);
            for row in &profile.rows {
                let _ = writeln!(
                    text,
                    "{},{},{}",
                    row.i,
                    format_ratio(&row.exact),
                    format_float_opt(row.approx)
                );
            }
            text
        }
        OutputFormat::Json => {
            let rows: Vec<Value> = profile
                .rows
                .iter()
                .map(|row| {
                    json!({
                        "i": row.i,
                        "exact": format_ratio(&row.exact),
                        "approx": json_float_opt(row.approx),
                    })
                })
                .collect();
            json_document(&json!({
                "inputs": { "command": "density", "topology": "linear", "n": n },
                "rows": rows,
            }))
        }
    };
    Ok(Rendered::ok(text))
}

pub fn corr(
    format: OutputFormat,
    topology: Topology,
    n: usize,
    k: usize,
    l: Option<usize>,
) -> Result<Rendered, Failure> {
    let result: CorrelationResult = match topology {
        Topology::Linear => {
            let l = l.ok_or_else(|| {
                Failure::Usage("a chain correlation needs both -k and -l".to_owned())
            })?;
            corr_fib(n, k, l)?
        }
        Topology::Circular => {
            if l.is_some() {
                return Err(Failure::Usage(
                    "a ring correlation takes -k only; cell k is paired with cell 1".to_owned(),
                ));
            }
            corr_lucas(n, k)?
        }
    };
    let counts = &result.counts;
    let text = match format {
        OutputFormat::Table => format!(
            "{}  {}\nn00 = {}  n01 = {}  n10 = {}  n11 = {}\n",
            format_ratio(&result.exact),
            format_float(result.approx),
            counts.n00,
            counts.n01,
            counts.n10,
            counts.n11
        ),
        OutputFormat::Csv => format!(
            "exact,approx,n00,n01,n10,n11\n{},{},{},{},{},{}\n",
            format_ratio(&result.exact),
            format_float(result.approx),
            counts.n00,
            counts.n01,
            counts.n10,
            counts.n11
        ),
        OutputFormat::Json => {
            let mut inputs = json!({
                "command": "corr",
                "topology": topology_name(topology),
                "n": n,
                "k": k,
            });
            if let Some(l) = l {
                inputs["l"] = json!(l);
            }
            json_document(&json!({
                "inputs": inputs,
                "exact": format_ratio(&result.exact),
                "approx": json_float(result.approx),
                "counts": {
                    "n00": json_biguint(&counts.n00),
                    "n01": json_biguint(&counts.n01),
                    "n10": json_biguint(&counts.n10),
                    "n11": json_biguint(&counts.n11),
                },
            }))
        }
    };
    Ok(Rendered::ok(text))
}

pub fn states(format: OutputFormat, topology: Topology, n: usize) -> Result<Rendered, Failure> {
    let spec = DeviceSpec::new(topology, n)?;
    let words: Vec<String> = enumerate_states(&spec)?.map(|w| w.to_string()).collect();
    let count = count_states(&spec);
    let identity = match topology {
        Topology::Linear => format!("F_{}", n + 2),
        Topology::Circular => format!("L_{}", n),
    };
    let text = match format {
        OutputFormat::Table => {
            let mut text = String::new();
            for word in &words {
                let _ = writeln!(text, "{word}");
            }
            let _ = writeln!(text, "count = {count} = {identity}");
            text
        }
        OutputFormat::Csv => {
            let mut text = format!("# count = {count} = {identity}\nstate\n");
            for word in &words {
                let _ = writeln!(text, "{word}");
            }
            text
        }
        OutputFormat::Json => json_document(&json!({
            "inputs": { "command": "states", "topology": topology_name(topology), "n": n },
            "states": words,
            "count": count.to_string(),
            "identity": identity,
        })),
    };
    Ok(Rendered::ok(text))
}

/// The exact value a sampling run is estimating, for side-by-side display.
fn sample_reference(
    topology: Topology,
    n: usize,
    observable: &Observable,
) -> Result<BigRational, Failure> {
    match (topology, observable) {
        (Topology::Linear, Observable::Cell(i)) => Ok(density_fib(n, *i)?),
        (Topology::Circular, Observable::Cell(i)) => {
            DeviceSpec::circular(n)?.check_cell(*i)?;
            Ok(density_lucas(n)?)
        }
        (Topology::Linear, Observable::Pair(k, l)) => {
            Ok(corr_fib(n, *k.min(l), *k.max(l))?.exact)
        }
        (Topology::Circular, Observable::Pair(k, l)) => {
            let spec = DeviceSpec::circular(n)?;
            spec.check_cell(*k)?;
            spec.check_cell(*l)?;
            // Ring correlations depend only on the cyclic distance.
            let gap = k.abs_diff(*l);
            let distance = gap.min(n - gap);
            Ok(corr_lucas(n, distance + 1)?.exact)
        }
    }
}

pub fn sample(
    format: OutputFormat,
    topology: Topology,
    n: usize,
    observable: Observable,
    count: u64,
    seed: u64,
) -> Result<Rendered, Failure> {
    let spec = DeviceSpec::new(topology, n)?;
    let exact = sample_reference(topology, n, &observable)?;
    let config = SampleConfig::new(spec, count, seed)?;
    let estimate: Estimate = match observable {
        Observable::Cell(i) => estimate_density(&config, i)?,
        Observable::Pair(k, l) => estimate_correlation(&config, k, l)?,
    };
    let exact_approx = ratio_to_f64(&exact);
    let text = match format {
        OutputFormat::Table => format!(
            "mean = {}\nstd_error = {}\ncount = {}\nexact = {}\n",
            format_float(estimate.mean),
            format_float(estimate.std_error),
            estimate.sample_count,
            format_float(exact_approx)
        ),
        OutputFormat::Csv => format!(
            "mean,std_error,count,exact\n{},{},{},{}\n",
            format_float(estimate.mean),
            format_float(estimate.std_error),
            estimate.sample_count,
            format_float(exact_approx)
        ),
        OutputFormat::Json => {
            let mut inputs = json!({
                "command": "sample",
                "topology": topology_name(topology),
                "n": n,
            });
            match observable {
                Observable::Cell(i) => inputs["i"] = json!(i),
                Observable::Pair(k, l) => {
                    inputs["k"] = json!(k);
                    inputs["l"] = json!(l);
                }
            }
            inputs["count"] = json!(count);
            inputs["seed"] = json!(seed);
            json_document(&json!({
                "inputs": inputs,
                "mean": json_float(estimate.mean),
                "std_error": json_float(estimate.std_error),
                "count": estimate.sample_count,
                "exact": format_ratio(&exact),
                "exact_approx": json_float(exact_approx),
            }))
        }
    };
    Ok(Rendered::ok(text))
}

pub fn verify_sweep(format: OutputFormat, max_n: usize) -> Result<Rendered, Failure> {
    let report = verify::run(max_n)?;
    let code = if report.all_passed() { 0 } else { 1 };
    let text = match format {
        OutputFormat::Table => {
            let mut text = String::new();
            for family in &report.families {
                match &family.failure {
                    None => {
                        let _ = writeln!(text, "PASS {} ({} checks)", family.family, family.checks);
                    }
                    Some(locus) => {
                        let _ = writeln!(text, "FAIL {}: {}", family.family, locus);
                    }
                }
            }
            if report.all_passed() {
                let _ = writeln!(
                    text,
                    "result: PASS ({} checks, n <= {})",
                    report.total_checks(),
                    report.max_n
                );
            } else {
                let _ = writeln!(text, "result: FAIL");
            }
            text
        }
        OutputFormat::Csv => {
            let mut text = String::from("family,checks,status,locus\n");
            for family in &report.families {
                let (status, locus) = match &family.failure {
                    None => ("PASS", String::new()),
                    Some(locus) => ("FAIL", csv_text(locus)),
                };
                let _ = writeln!(
                    text,
                    "{},{},{},{}",
                    csv_text(family.family),
                    family.checks,
                    status,
                    locus
                );
            }
            text
        }
        OutputFormat::Json => {
            let families: Vec<Value> = report
                .families
                .iter()
                .map(|family| {
                    json!({
                        "family": family.family,
                        "checks": family.checks,
                        "passed": family.passed(),
                        "failure": family.failure,
                    })
                })
                .collect();
            json_document(&json!({
                "inputs": { "command": "verify", "max_n": report.max_n },
                "families": families,
                "checks": report.total_checks(),
                "passed": report.all_passed(),
            }))
        }
    };
    Ok(Rendered { text, code })
}
