//! One-shot cross-checks of every closed form against brute-force
//! enumeration, grouped into named formula families.

use num_bigint::BigUint;

use crate::device::DeviceSpec;
use crate::enumeration::{
    brute_correlation, brute_density, brute_pair_counts, count_states, enumerate_states,
};
use crate::error::{Error, Result};
use crate::rational::{rational, BigRational};
use crate::statistics::{
    corr_fib, corr_fib_adjacent, corr_fib_reflect, corr_lucas, corr_lucas_nn, corr_lucas_nnn,
    density_fib, density_lucas, fib_pair_counts, lucas_pair_counts,
};

/// Default sweep ceiling; comfortably fast while still covering every
/// degenerate small case several times over.
pub const DEFAULT_MAX_N: usize = 18;

/// Absolute sweep ceiling; enumeration cost roughly multiplies by the
/// golden ratio per extra cell, so a runaway bound is refused outright.
pub const VERIFY_HARD_CAP: usize = 25;

/// Outcome of sweeping one formula family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyReport {
    pub family: &'static str,
    /// Number of individual comparisons performed.
    pub checks: u64,
    /// First failing locus, if any; the sweep stops at the first failure.
    pub failure: Option<String>,
}

impl FamilyReport {
    fn pass(family: &'static str, checks: u64) -> Self {
        FamilyReport {
            family,
            checks,
            failure: None,
        }
    }

    fn fail(family: &'static str, checks: u64, locus: String) -> Self {
        FamilyReport {
            family,
            checks,
            failure: Some(locus),
        }
    }

    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

/// Results of a full verification run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub max_n: usize,
    pub families: Vec<FamilyReport>,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.families.iter().all(FamilyReport::passed)
    }

    pub fn total_checks(&self) -> u64 {
        self.families.iter().map(|f| f.checks).sum()
    }
}

/// Sweeps every formula family for device lengths `1..=max_n`.
pub fn run(max_n: usize) -> Result<VerifyReport> {
    if max_n > VERIFY_HARD_CAP {
        return Err(Error::VerifyLimit {
            requested: max_n,
            max: VERIFY_HARD_CAP,
        });
    }
    let families = vec![
        chain_state_counts(max_n),
        ring_state_counts(max_n),
        chain_densities(max_n),
        ring_densities(max_n),
        chain_pair_count_family(max_n),
        chain_correlations(max_n),
        chain_reflection_symmetry(max_n),
        chain_neighbor_sign(max_n),
        ring_pair_count_family(max_n),
        ring_correlations(max_n),
        ring_neighbor_signs(max_n),
    ];
    Ok(VerifyReport { max_n, families })
}

fn linear(n: usize) -> DeviceSpec {
    DeviceSpec::linear(n).expect("n >= 1")
}

fn circular(n: usize) -> DeviceSpec {
    DeviceSpec::circular(n).expect("n >= 1")
}

fn one() -> BigRational {
    rational(1, 1).expect("1/1")
}

fn chain_state_counts(max_n: usize) -> FamilyReport {
    let name = "chain state count F_{n+2}";
    let mut checks = 0;
    for n in 1..=max_n {
        let spec = linear(n);
        let tally = enumerate_states(&spec).expect("within guard").count();
        let closed = count_states(&spec);
        checks += 1;
        if BigUint::from(tally) != closed {
            return FamilyReport::fail(
                name,
                checks,
                format!("n = {n}: enumerated {tally}, closed form {closed}"),
            );
        }
    }
    FamilyReport::pass(name, checks)
}

fn ring_state_counts(max_n: usize) -> FamilyReport {
    let name = "ring state count L_n";
    let mut checks = 0;
    for n in 1..=max_n {
        let spec = circular(n);
        let tally = enumerate_states(&spec).expect("within guard").count();
        let closed = count_states(&spec);
        checks += 1;
        if BigUint::from(tally) != closed {
            return FamilyReport::fail(
                name,
                checks,
                format!("n = {n}: enumerated {tally}, closed form {closed}"),
            );
        }
    }
    FamilyReport::pass(name, checks)
}

fn chain_densities(max_n: usize) -> FamilyReport {
    let name = "chain density F_i F_{n-i+1} / F_{n+2}";
    let mut checks = 0;
    for n in 1..=max_n {
        let spec = linear(n);
        for i in 1..=n {
            let closed = density_fib(n, i).expect("valid cell");
            let brute = brute_density(&spec, i).expect("valid cell");
            checks += 1;
            if closed != brute {
                return FamilyReport::fail(
                    name,
                    checks,
                    format!("n = {n}, i = {i}: closed form {closed}, brute force {brute}"),
                );
            }
        }
    }
    FamilyReport::pass(name, checks)
}

fn ring_densities(max_n: usize) -> FamilyReport {
    let name = "ring density F_{n-1} / L_n";
    let mut checks = 0;
    for n in 1..=max_n {
        let spec = circular(n);
        let closed = density_lucas(n).expect("n >= 1");
        for i in 1..=n {
            let brute = brute_density(&spec, i).expect("valid cell");
            checks += 1;
            if closed != brute {
                return FamilyReport::fail(
                    name,
                    checks,
                    format!("n = {n}, i = {i}: closed form {closed}, brute force {brute}"),
                );
            }
        }
    }
    FamilyReport::pass(name, checks)
}

fn chain_pair_count_family(max_n: usize) -> FamilyReport {
    let name = "chain pair counts N^F";
    let mut checks = 0;
    for n in 1..=max_n {
        let spec = linear(n);
        for k in 1..n {
            for l in k + 1..=n {
                let closed = fib_pair_counts(n, k, l).expect("valid pair");
                let brute = brute_pair_counts(&spec, k, l).expect("valid pair");
                checks += 1;
                if closed != brute {
                    return FamilyReport::fail(
                        name,
                        checks,
                        format!("n = {n}, k = {k}, l = {l}: closed form {closed:?}, brute force {brute:?}"),
                    );
                }
            }
        }
    }
    FamilyReport::pass(name, checks)
}

fn chain_correlations(max_n: usize) -> FamilyReport {
    let name = "chain correlation C^F";
    let mut checks = 0;
    for n in 1..=max_n {
        let spec = linear(n);
        for k in 1..=n {
            for l in k..=n {
                let closed = corr_fib(n, k, l).expect("valid pair").exact;
                let brute = brute_correlation(&spec, k, l).expect("valid pair");
                checks += 1;
                if closed != brute {
                    return FamilyReport::fail(
                        name,
                        checks,
                        format!("n = {n}, k = {k}, l = {l}: closed form {closed}, brute force {brute}"),
                    );
                }
                if k == l && closed != one() {
                    return FamilyReport::fail(
                        name,
                        checks,
                        format!("n = {n}, k = l = {k}: self-correlation {closed} != 1"),
                    );
                }
            }
        }
    }
    FamilyReport::pass(name, checks)
}

fn chain_reflection_symmetry(max_n: usize) -> FamilyReport {
    let name = "chain reflection symmetry";
    let mut checks = 0;
    for n in 1..=max_n {
        for k in 1..=n {
            for l in k..=n {
                let direct = corr_fib(n, k, l).expect("valid pair").exact;
                let reflected = corr_fib_reflect(n, k, l).expect("valid pair");
                checks += 1;
                if direct != reflected {
                    return FamilyReport::fail(
                        name,
                        checks,
                        format!(
                            "n = {n}, k = {k}, l = {l}: direct {direct}, reflected {reflected}"
                        ),
                    );
                }
            }
        }
    }
    FamilyReport::pass(name, checks)
}

fn chain_neighbor_sign(max_n: usize) -> FamilyReport {
    let name = "chain neighbor correlation sign";
    let zero = rational(0, 1).expect("0/1");
    let mut checks = 0;
    for n in 2..=max_n {
        for k in 1..n {
            let adjacent = corr_fib_adjacent(n, k).expect("valid cell");
            let general = corr_fib(n, k, k + 1).expect("valid pair").exact;
            checks += 1;
            // Strictly negative everywhere except the middle pair of the
            // 4-cell chain, which balances to exactly zero.
            let expected_zero = n == 4 && k == 2;
            if expected_zero && adjacent != zero {
                return FamilyReport::fail(
                    name,
                    checks,
                    format!("n = 4, k = 2: expected the degenerate zero, got {adjacent}"),
                );
            }
            if !expected_zero && adjacent >= zero {
                return FamilyReport::fail(
                    name,
                    checks,
                    format!("n = {n}, k = {k}: neighbor correlation {adjacent} is not negative"),
                );
            }
            if adjacent != general {
                return FamilyReport::fail(
                    name,
                    checks,
                    format!(
                        "n = {n}, k = {k}: reduced form {adjacent} != general form {general}"
                    ),
                );
            }
        }
    }
    FamilyReport::pass(name, checks)
}

fn ring_pair_count_family(max_n: usize) -> FamilyReport {
    let name = "ring pair counts N^L";
    let mut checks = 0;
    for n in 1..=max_n {
        let spec = circular(n);
        let half = (n + 1).div_ceil(2);
        for k in 2..=half {
            let closed = lucas_pair_counts(n, k).expect("valid cell");
            let brute = brute_pair_counts(&spec, 1, k).expect("valid cell");
            checks += 1;
            if closed != brute {
                return FamilyReport::fail(
                    name,
                    checks,
                    format!("n = {n}, k = {k}: closed form {closed:?}, brute force {brute:?}"),
                );
            }
        }
    }
    FamilyReport::pass(name, checks)
}

fn ring_correlations(max_n: usize) -> FamilyReport {
    let name = "ring correlation C^L";
    let mut checks = 0;
    for n in 1..=max_n {
        let spec = circular(n);
        for k in 1..=n {
            let closed = corr_lucas(n, k).expect("valid cell").exact;
            let brute = brute_correlation(&spec, 1, k).expect("valid cell");
            checks += 1;
            if closed != brute {
                return FamilyReport::fail(
                    name,
                    checks,
                    format!("n = {n}, k = {k}: closed form {closed}, brute force {brute}"),
                );
            }
            if k == 1 && closed != one() {
                return FamilyReport::fail(
                    name,
                    checks,
                    format!("n = {n}: self-correlation {closed} != 1"),
                );
            }
        }
    }
    FamilyReport::pass(name, checks)
}

fn ring_neighbor_signs(max_n: usize) -> FamilyReport {
    let name = "ring neighbor correlation signs";
    let zero = rational(0, 1).expect("0/1");
    let mut checks = 0;
    for n in 4..=max_n {
        let nn = corr_lucas_nn(n).expect("n >= 4");
        checks += 1;
        if nn >= zero || nn != corr_lucas(n, 2).expect("valid").exact {
            return FamilyReport::fail(
                name,
                checks,
                format!("n = {n}: nearest-neighbor form {nn} wrong sign or mismatch"),
            );
        }
        if n >= 5 {
            let nnn = corr_lucas_nnn(n).expect("n >= 5");
            checks += 1;
            if nnn <= zero || nnn != corr_lucas(n, 3).expect("valid").exact {
                return FamilyReport::fail(
                    name,
                    checks,
                    format!("n = {n}: next-nearest form {nnn} wrong sign or mismatch"),
                );
            }
        }
    }
    FamilyReport::pass(name, checks)
}
