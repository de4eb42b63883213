//! Thin JSON-speaking bindings for the browser demo. Each exported function
//! wraps a plain Rust implementation so the logic also compiles and tests
//! natively; errors cross the boundary as JS exceptions.

use fibdev_core::{
    corr_fib, corr_lucas, density_profile, estimate_density, format_ratio, ratio_to_f64,
    DeviceSpec, Estimate, Result, SampleConfig, Topology,
};
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

fn topology_of(circular: bool) -> Topology {
    if circular {
        Topology::Circular
    } else {
        Topology::Linear
    }
}

fn profile_impl(n: usize, circular: bool) -> Result<String> {
    let profile = density_profile(n, topology_of(circular))?;
    let rows: Vec<Value> = profile
        .rows
        .iter()
        .map(|row| {
            json!({
                "i": row.i,
                "exact": format_ratio(&row.exact),
                "value": row.approx.unwrap_or_else(|| ratio_to_f64(&row.exact)),
            })
        })
        .collect();
    Ok(json!({ "n": n, "circular": circular, "rows": rows }).to_string())
}

/// Correlation of cell `k` with every cell of the device.
fn correlation_curve_impl(n: usize, k: usize, circular: bool) -> Result<String> {
    let spec = DeviceSpec::new(topology_of(circular), n)?;
    spec.check_cell(k)?;
    let mut points = Vec::with_capacity(n);
    for j in 1..=n {
        let exact = if circular {
            // Ring correlations depend only on the cyclic distance.
            let gap = k.abs_diff(j);
            let distance = gap.min(n - gap);
            corr_lucas(n, distance + 1)?.exact
        } else {
            corr_fib(n, k.min(j), k.max(j))?.exact
        };
        points.push(json!({
            "j": j,
            "exact": format_ratio(&exact),
            "value": ratio_to_f64(&exact),
        }));
    }
    Ok(json!({ "n": n, "k": k, "circular": circular, "points": points }).to_string())
}

fn sampled_density_impl(
    n: usize,
    i: usize,
    count: u32,
    seed: u32,
    circular: bool,
) -> Result<String> {
    let spec = DeviceSpec::new(topology_of(circular), n)?;
    spec.check_cell(i)?;
    let exact = if circular {
        fibdev_core::density_lucas(n)?
    } else {
        fibdev_core::density_fib(n, i)?
    };
    let config = SampleConfig::new(spec, u64::from(count), u64::from(seed))?;
    let estimate: Estimate = estimate_density(&config, i)?;
    Ok(json!({
        "n": n,
        "i": i,
        "count": estimate.sample_count,
        "seed": seed,
        "mean": estimate.mean,
        "std_error": estimate.std_error,
        "exact": format_ratio(&exact),
        "exact_value": ratio_to_f64(&exact),
    })
    .to_string())
}

/// Per-cell occupation densities as JSON rows `{i, exact, value}`.
#[wasm_bindgen]
pub fn profile(n: usize, circular: bool) -> std::result::Result<String, JsError> {
    Ok(profile_impl(n, circular)?)
}

/// Correlation of cell `k` with every cell `j`, as JSON points
/// `{j, exact, value}`.
#[wasm_bindgen(js_name = correlationCurve)]
pub fn correlation_curve(
    n: usize,
    k: usize,
    circular: bool,
) -> std::result::Result<String, JsError> {
    Ok(correlation_curve_impl(n, k, circular)?)
}

/// Seeded Monte Carlo estimate of one cell's density next to its exact value.
#[wasm_bindgen(js_name = sampledDensity)]
pub fn sampled_density(
    n: usize,
    i: usize,
    count: u32,
    seed: u32,
    circular: bool,
) -> std::result::Result<String, JsError> {
    Ok(sampled_density_impl(n, i, count, seed, circular)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use fibdev_core::Error;

    #[test]
    fn profile_rows_carry_exact_and_float_values() {
        let doc: Value = serde_json::from_str(&profile_impl(6, false).unwrap()).unwrap();
        assert_eq!(doc["rows"].as_array().unwrap().len(), 6);
        assert_eq!(doc["rows"][2]["exact"], "2/7");
        assert!((doc["rows"][2]["value"].as_f64().unwrap() - 2.0 / 7.0).abs() < 1e-12);

        let doc: Value = serde_json::from_str(&profile_impl(4, true).unwrap()).unwrap();
        assert_eq!(doc["rows"][0]["exact"], "2/7");
        assert_eq!(doc["rows"][3]["exact"], "2/7");
    }

    #[test]
    fn profile_survives_devices_past_the_float_range() {
        let doc: Value = serde_json::from_str(&profile_impl(1500, false).unwrap()).unwrap();
        let value = doc["rows"][749]["value"].as_f64().unwrap();
        assert!((value - 0.276393).abs() < 1e-3, "interior value {value}");
    }

    #[test]
    fn correlation_curve_matches_the_closed_forms() {
        let doc: Value =
            serde_json::from_str(&correlation_curve_impl(10, 3, false).unwrap()).unwrap();
        let points = doc["points"].as_array().unwrap();
        assert_eq!(points.len(), 10);
        assert_eq!(points[2]["exact"], "1/1");
        let expected = corr_fib(10, 3, 7).unwrap();
        assert_eq!(
            points[6]["exact"],
            format_ratio(&expected.exact).as_str(),
            "chain pair (3, 7)"
        );

        let doc: Value =
            serde_json::from_str(&correlation_curve_impl(10, 4, true).unwrap()).unwrap();
        let points = doc["points"].as_array().unwrap();
        // Cell 4 against cell 6 sits at ring distance 2, same as (1, 3).
        let expected = corr_lucas(10, 3).unwrap();
        assert_eq!(points[5]["exact"], format_ratio(&expected.exact).as_str());
        // Wrap-around: cell 4 against cell 10 is ring distance 4.
        let expected = corr_lucas(10, 5).unwrap();
        assert_eq!(points[9]["exact"], format_ratio(&expected.exact).as_str());
    }

    #[test]
    fn sampled_density_is_seed_stable_and_near_exact() {
        let first = sampled_density_impl(30, 15, 4000, 9, false).unwrap();
        let second = sampled_density_impl(30, 15, 4000, 9, false).unwrap();
        assert_eq!(first, second);
        let doc: Value = serde_json::from_str(&first).unwrap();
        let mean = doc["mean"].as_f64().unwrap();
        let exact = doc["exact_value"].as_f64().unwrap();
        let se = doc["std_error"].as_f64().unwrap();
        assert!((mean - exact).abs() < 5.0 * se.max(1e-9), "mean {mean} vs exact {exact}");
    }

    #[test]
    fn invalid_inputs_surface_as_errors() {
        assert!(matches!(
            profile_impl(0, false),
            Err(Error::EmptyDevice)
        ));
        assert!(matches!(
            correlation_curve_impl(5, 9, true),
            Err(Error::CellOutOfRange { .. })
        ));
        assert!(matches!(
            sampled_density_impl(20000, 1, 10, 0, false),
            Err(Error::SamplingLimit { .. })
        ));
    }
}
