//! Closed-form densities and pair correlations for both device types, in
//! exact-rational and golden-ratio float form, plus their limits and sign
//! corollaries.
//!
//! Every formula here is checked against [`crate::enumeration`]'s brute
//! force in the test suite; the exact rational path is authoritative and the
//! float values are advisory approximations.

use num_bigint::{BigInt, BigUint};

use crate::device::{PairCounts, Topology};
use crate::error::{Error, Result};
use crate::numbers::{fib_i, lucas, powi, FibIndex, GoldenConstants, MAX_BINET_INDEX};
use crate::rational::{ratio_to_f64, rational, BigRational};

/// Exact correlation with the four closed-form pair counts that produced it
/// and a float rendering of the exact value.
#[derive(Debug, Clone, PartialEq)]
pub struct CorrelationResult {
    pub exact: BigRational,
    pub approx: f64,
    pub counts: PairCounts,
}

/// Per-cell density table for one device.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityProfile {
    pub n: usize,
    pub topology: Topology,
    pub rows: Vec<ProfileRow>,
}

/// One profile row. `approx` is absent when the device is too long for the
/// float evaluation; the exact column has no such limit.
#[derive(Debug, Clone, PartialEq)]
pub struct ProfileRow {
    pub i: usize,
    pub exact: BigRational,
    pub approx: Option<f64>,
}

fn check_device(n: usize) -> Result<()> {
    if n == 0 {
        Err(Error::EmptyDevice)
    } else {
        Ok(())
    }
}

fn check_cell(n: usize, i: usize) -> Result<()> {
    if i == 0 || i > n {
        Err(Error::CellOutOfRange {
            index: i,
            length: n,
        })
    } else {
        Ok(())
    }
}

fn check_binet(index: usize) -> Result<()> {
    if index as u64 > MAX_BINET_INDEX {
        Err(Error::BinetRange {
            n: index as u64,
            max: MAX_BINET_INDEX,
        })
    } else {
        Ok(())
    }
}

/// Occupation density of cell `i` in a chain of `n` cells:
/// `F_i F_{n-i+1} / F_{n+2}`, exact.
pub fn density_fib(n: usize, i: usize) -> Result<BigRational> {
    check_device(n)?;
    check_cell(n, i)?;
    let (n, i) = (n as i64, i as i64);
    let numer = fib_i(i) * fib_i(n - i + 1);
    rational(BigInt::from(numer), BigInt::from(fib_i(n + 2)))
}

/// The chain density evaluated directly through golden-ratio powers:
/// `(alpha^i - beta^i)(alpha^{n-i+1} - beta^{n-i+1}) / (sqrt5 (alpha^{n+2} - beta^{n+2}))`.
pub fn density_fib_float(n: usize, i: usize) -> Result<f64> {
    check_device(n)?;
    check_cell(n, i)?;
    check_binet(n + 2)?;
    let g = GoldenConstants::new();
    let left = powi(g.alpha, i as u64) - powi(g.beta, i as u64);
    let right = powi(g.alpha, (n - i + 1) as u64) - powi(g.beta, (n - i + 1) as u64);
    let denom = g.sqrt5 * (powi(g.alpha, n as u64 + 2) - powi(g.beta, n as u64 + 2));
    Ok(left * right / denom)
}

/// Limit of the chain density at fixed cell `i` as the chain grows without
/// bound: `(1/(alpha sqrt5)) (1 - (beta/alpha)^i)`. Oscillates around the
/// bulk value because `-1 < beta/alpha < 0`.
pub fn limit_density_cell(i: usize) -> f64 {
    let g = GoldenConstants::new();
    (1.0 - powi(g.beta / g.alpha, i as u64)) / (g.alpha * g.sqrt5)
}

/// Density deep inside a long device, `1/(alpha sqrt5)` = 0.2763932022...,
/// the shared limit of both device types.
pub fn bulk_limit_density() -> f64 {
    let g = GoldenConstants::new();
    1.0 / (g.alpha * g.sqrt5)
}

/// Occupation density of every cell of a ring of `n` cells:
/// `F_{n-1} / L_n`, exact. Ring symmetry makes it cell-independent.
pub fn density_lucas(n: usize) -> Result<BigRational> {
    check_device(n)?;
    let numer = fib_i(n as i64 - 1);
    let denom = lucas(FibIndex::new(n as i64)?)?;
    rational(BigInt::from(numer), BigInt::from(denom))
}

/// The ring density through golden-ratio powers:
/// `(alpha^{n-1} - beta^{n-1}) / (sqrt5 (alpha^n + beta^n))`.
pub fn density_lucas_float(n: usize) -> Result<f64> {
    check_device(n)?;
    check_binet(n)?;
    let g = GoldenConstants::new();
    let numer = powi(g.alpha, n as u64 - 1) - powi(g.beta, n as u64 - 1);
    let denom = g.sqrt5 * (powi(g.alpha, n as u64) + powi(g.beta, n as u64));
    Ok(numer / denom)
}

/// Chain pair counts without range policing; `k = l` leans on `F_{-1} = 1`.
fn fib_counts_raw(n: i64, k: i64, l: i64) -> PairCounts {
    PairCounts {
        n00: fib_i(k + 1) * fib_i(l - k + 1) * fib_i(n - l + 2),
        n01: fib_i(k + 1) * fib_i(l - k) * fib_i(n - l + 1),
        n10: fib_i(k) * fib_i(l - k) * fib_i(n - l + 2),
        n11: fib_i(k) * fib_i(l - k - 1) * fib_i(n - l + 1),
    }
}

/// How many chain states put each bit pattern on cells `k < l`:
/// `n00 = F_{k+1} F_{l-k+1} F_{n-l+2}`, `n11 = F_k F_{l-k-1} F_{n-l+1}`,
/// `n01 = F_{k+1} F_{l-k} F_{n-l+1}`, `n10 = F_k F_{l-k} F_{n-l+2}`.
pub fn fib_pair_counts(n: usize, k: usize, l: usize) -> Result<PairCounts> {
    check_device(n)?;
    check_cell(n, k)?;
    check_cell(n, l)?;
    if k >= l {
        return Err(Error::UnorderedPair { k, l });
    }
    Ok(fib_counts_raw(n as i64, k as i64, l as i64))
}

fn correlation_from_counts(counts: PairCounts, total: BigUint) -> Result<CorrelationResult> {
    let agree = BigInt::from(&counts.n00 + &counts.n11);
    let disagree = BigInt::from(&counts.n01 + &counts.n10);
    let exact = rational(agree - disagree, BigInt::from(total))?;
    let approx = ratio_to_f64(&exact);
    Ok(CorrelationResult {
        exact,
        approx,
        counts,
    })
}

/// Pair correlation of chain cells `k <= l`:
/// `(n00 + n11 - n01 - n10) / F_{n+2}` with the closed-form counts.
/// `k = l` gives exactly 1 (the self-correlation), via `F_{-1} = 1`.
pub fn corr_fib(n: usize, k: usize, l: usize) -> Result<CorrelationResult> {
    check_device(n)?;
    check_cell(n, k)?;
    check_cell(n, l)?;
    if k > l {
        return Err(Error::UnorderedPair { k, l });
    }
    let counts = fib_counts_raw(n as i64, k as i64, l as i64);
    correlation_from_counts(counts, fib_i(n as i64 + 2))
}

/// Correlation of chain neighbors `k` and `k+1`, in the reduced form
/// `-(F_k F_{n-k} - F_{k-1} F_{n-k-1}) / F_{n+2}`.
///
/// Never positive. One pair degenerates to exactly zero — the middle pair
/// of the 4-cell chain, where `F_2 F_2 = F_1 F_1` — and every other pair is
/// strictly negative, as brute-force enumeration confirms.
pub fn corr_fib_adjacent(n: usize, k: usize) -> Result<BigRational> {
    check_device(n)?;
    if k == 0 || k >= n {
        return Err(Error::CellOutOfRange {
            index: k,
            length: n - 1,
        });
    }
    let (n, k) = (n as i64, k as i64);
    let numer = BigInt::from(fib_i(k - 1) * fib_i(n - k - 1)) - BigInt::from(fib_i(k) * fib_i(n - k));
    rational(numer, BigInt::from(fib_i(n + 2)))
}

/// The chain correlation measured from the other end:
/// `corr_fib(n, n+1-l, n+1-k)`. Equal to `corr_fib(n, k, l)` by reflection
/// symmetry; exposed so the symmetry can be asserted rather than assumed.
pub fn corr_fib_reflect(n: usize, k: usize, l: usize) -> Result<BigRational> {
    check_device(n)?;
    check_cell(n, k)?;
    check_cell(n, l)?;
    if k > l {
        return Err(Error::UnorderedPair { k, l });
    }
    Ok(corr_fib(n, n + 1 - l, n + 1 - k)?.exact)
}

/// The canonical upper cell index for ring pair statistics: past this,
/// cell pairs repeat by symmetry.
fn ring_half_range(n: usize) -> usize {
    (n + 1).div_ceil(2)
}

/// Ring pair counts without range policing; `k = 1` leans on `F_{-1} = 1`.
fn lucas_counts_raw(n: i64, k: i64) -> PairCounts {
    let cross = fib_i(n - k + 1) * fib_i(k - 1);
    PairCounts {
        n00: fib_i(n - k + 2) * fib_i(k),
        n01: cross.clone(),
        n10: cross,
        n11: fib_i(n - k) * fib_i(k - 2),
    }
}

/// How many ring states put each bit pattern on cells 1 and `k`:
/// `n00 = F_{n-k+2} F_k`, `n11 = F_{n-k} F_{k-2}`,
/// `n01 = n10 = F_{n-k+1} F_{k-1}`, for `k` in the canonical half-range
/// `2 ..= ceil((n+1)/2)`.
pub fn lucas_pair_counts(n: usize, k: usize) -> Result<PairCounts> {
    check_device(n)?;
    let max = ring_half_range(n);
    if k < 2 || k > max {
        return Err(Error::RingHalfRange { k, n, max });
    }
    Ok(lucas_counts_raw(n as i64, k as i64))
}

/// Pair correlation of ring cells 1 and `k`:
/// `(F_{n-k+2} F_k + F_{n-k} F_{k-2} - 2 F_{n-k+1} F_{k-1}) / L_n`.
///
/// Any `k` in `1..=n` is accepted; past the half-range the distance-
/// preserving wrap `k -> n+2-k` reduces to the canonical form. `k = 1` is
/// the self-correlation and gives exactly 1 via `F_{-1} = 1`.
pub fn corr_lucas(n: usize, k: usize) -> Result<CorrelationResult> {
    check_device(n)?;
    check_cell(n, k)?;
    let canonical = if k > ring_half_range(n) { n + 2 - k } else { k };
    let counts = lucas_counts_raw(n as i64, canonical as i64);
    let total = lucas(FibIndex::new(n as i64)?)?;
    correlation_from_counts(counts, total)
}

/// Nearest-neighbor ring correlation `(F_{n-2} - F_{n-1}) / L_n`; negative
/// for every ring large enough for the name to make geometric sense.
pub fn corr_lucas_nn(n: usize) -> Result<BigRational> {
    if n < 4 {
        return Err(Error::RingTooSmall { n, min: 4 });
    }
    let numer =
        BigInt::from(fib_i(n as i64 - 2)) - BigInt::from(fib_i(n as i64 - 1));
    let denom = lucas(FibIndex::new(n as i64)?)?;
    rational(numer, BigInt::from(denom))
}

/// Next-nearest-neighbor ring correlation `3 F_{n-3} / L_n`; positive.
pub fn corr_lucas_nnn(n: usize) -> Result<BigRational> {
    if n < 5 {
        return Err(Error::RingTooSmall { n, min: 5 });
    }
    let numer = BigInt::from(3u32) * BigInt::from(fib_i(n as i64 - 3));
    let denom = lucas(FibIndex::new(n as i64)?)?;
    rational(numer, BigInt::from(denom))
}

/// Full per-cell density table. Chain rows vary with the cell; ring rows
/// are all equal. The float column drops out (None) once the device exceeds
/// the float evaluation range; the exact column never does.
pub fn density_profile(n: usize, topology: Topology) -> Result<DensityProfile> {
    check_device(n)?;
    let float_of = |result: Result<f64>| match result {
        Ok(v) => Ok(Some(v)),
        Err(Error::BinetRange { .. }) => Ok(None),
        Err(e) => Err(e),
    };
    let rows = match topology {
        Topology::Linear => (1..=n)
            .map(|i| {
                Ok(ProfileRow {
                    i,
                    exact: density_fib(n, i)?,
                    approx: float_of(density_fib_float(n, i))?,
                })
            })
            .collect::<Result<Vec<_>>>()?,
        Topology::Circular => {
            let exact = density_lucas(n)?;
            let approx = float_of(density_lucas_float(n))?;
            (1..=n)
                .map(|i| ProfileRow {
                    i,
                    exact: exact.clone(),
                    approx,
                })
                .collect()
        }
    };
    Ok(DensityProfile { n, topology, rows })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> BigRational {
        rational(n, d).unwrap()
    }

    #[test]
    fn chain_density_examples() {
        assert_eq!(density_fib(3, 2).unwrap(), rat(1, 5));
        assert_eq!(density_fib(3, 1).unwrap(), rat(2, 5));
        assert_eq!(density_fib(1, 1).unwrap(), rat(1, 2));
        assert!(density_fib(3, 0).is_err());
        assert!(density_fib(3, 4).is_err());
        assert_eq!(density_fib(0, 1).unwrap_err(), Error::EmptyDevice);
    }

    #[test]
    fn chain_density_float_examples() {
        assert!((density_fib_float(3, 2).unwrap() - 0.2).abs() < 1e-12);
        assert!((density_fib_float(1, 1).unwrap() - 0.5).abs() < 1e-12);
        let exact = ratio_to_f64(&density_fib(80, 40).unwrap());
        assert!((density_fib_float(80, 40).unwrap() - exact).abs() < 1e-9);
        assert!(density_fib_float(1399, 700).is_err());
    }

    #[test]
    fn limit_density_matches_long_chain_oracle() {
        // The long-chain limit at cell i must agree with the exact density
        // of a 60-cell chain to a dozen digits; the exact value is the
        // authority here.
        for i in 1..=10 {
            let oracle = ratio_to_f64(&density_fib(60, i).unwrap());
            let limit = limit_density_cell(i);
            assert!(
                (limit - oracle).abs() < 1e-12,
                "i = {i}: limit {limit} vs oracle {oracle}"
            );
        }
        // Cell 1 in closed form: 1/alpha^2 = (3 - sqrt 5)/2.
        let expected = (3.0 - 5f64.sqrt()) / 2.0;
        assert!((limit_density_cell(1) - expected).abs() < 1e-12);
    }

    #[test]
    fn limit_density_oscillates_toward_bulk() {
        let bulk = bulk_limit_density();
        for i in 1..=10 {
            let delta = limit_density_cell(i) - bulk;
            if i % 2 == 1 {
                assert!(delta > 0.0, "odd cell {i} should sit above the bulk");
            } else {
                assert!(delta < 0.0, "even cell {i} should sit below the bulk");
            }
        }
        assert!((limit_density_cell(200) - bulk).abs() < 1e-12);
    }

    #[test]
    fn bulk_value() {
        let bulk = bulk_limit_density();
        assert!((bulk - 0.2763932022).abs() < 1e-9);
        let sqrt5 = 5f64.sqrt();
        assert!((bulk - (sqrt5 - 1.0) / (2.0 * sqrt5)).abs() < 1e-12);
    }

    #[test]
    fn ring_density_examples() {
        assert_eq!(density_lucas(4).unwrap(), rat(2, 7));
        assert_eq!(density_lucas(1).unwrap(), rat(0, 1));
        assert_eq!(density_lucas(10).unwrap(), rat(34, 123));
        assert!(density_lucas(0).is_err());
    }

    #[test]
    fn ring_density_float_examples() {
        assert!((density_lucas_float(4).unwrap() - 2.0 / 7.0).abs() < 1e-12);
        assert!((density_lucas_float(200).unwrap() - 0.2763932022).abs() < 1e-9);
        assert!(density_lucas_float(1).unwrap().abs() < 1e-12);
    }

    #[test]
    fn chain_pair_count_examples() {
        let counts = fib_pair_counts(3, 1, 2).unwrap();
        assert_eq!(
            (counts.n00, counts.n01, counts.n10, counts.n11),
            (2u32.into(), 1u32.into(), 2u32.into(), BigUint::ZERO)
        );
        for (n, k) in [(5, 2), (9, 4), (12, 1)] {
            assert_eq!(fib_pair_counts(n, k, k + 1).unwrap().n11, BigUint::ZERO);
        }
        let counts = fib_pair_counts(6, 2, 5).unwrap();
        assert_eq!(counts.total(), BigUint::from(21u32));
        assert_eq!(
            fib_pair_counts(6, 3, 3).unwrap_err(),
            Error::UnorderedPair { k: 3, l: 3 }
        );
        assert!(fib_pair_counts(6, 0, 2).is_err());
        assert!(fib_pair_counts(6, 2, 7).is_err());
    }

    #[test]
    fn chain_correlation_examples() {
        let c = corr_fib(3, 1, 2).unwrap();
        assert_eq!(c.exact, rat(-1, 5));
        assert!((c.approx + 0.2).abs() < 1e-15);
        assert_eq!(c.counts.total(), BigUint::from(5u32));

        let self_corr = corr_fib(7, 4, 4).unwrap();
        assert_eq!(self_corr.exact, rat(1, 1));
        assert_eq!(self_corr.counts.n01, BigUint::ZERO);

        assert_eq!(corr_fib(10, 3, 4).unwrap().exact, rat(-1, 8));
        assert_eq!(
            corr_fib(5, 4, 2).unwrap_err(),
            Error::UnorderedPair { k: 4, l: 2 }
        );
    }

    #[test]
    fn adjacent_chain_correlation() {
        assert_eq!(corr_fib_adjacent(3, 1).unwrap(), rat(-1, 5));
        assert_eq!(corr_fib_adjacent(10, 3).unwrap(), rat(-1, 8));
        assert_eq!(corr_fib_adjacent(2, 1).unwrap(), rat(-1, 3));
        // The single non-negative neighbor pair: the 4-chain's middle.
        assert_eq!(corr_fib_adjacent(4, 2).unwrap(), rat(0, 1));
        for n in 2..=12 {
            for k in 1..n {
                assert_eq!(
                    corr_fib_adjacent(n, k).unwrap(),
                    corr_fib(n, k, k + 1).unwrap().exact,
                    "n = {n}, k = {k}"
                );
            }
        }
        assert!(corr_fib_adjacent(5, 5).is_err());
        assert!(corr_fib_adjacent(5, 0).is_err());
    }

    #[test]
    fn reflected_chain_correlation() {
        assert_eq!(
            corr_fib_reflect(5, 1, 3).unwrap(),
            corr_fib(5, 3, 5).unwrap().exact
        );
        assert_eq!(corr_fib_reflect(3, 1, 2).unwrap(), rat(-1, 5));
        assert_eq!(corr_fib_reflect(3, 2, 3).unwrap(), rat(-1, 5));
        // A self-symmetric pair maps to itself.
        assert_eq!(
            corr_fib_reflect(5, 2, 4).unwrap(),
            corr_fib(5, 2, 4).unwrap().exact
        );
    }

    #[test]
    fn ring_pair_count_examples() {
        let counts = lucas_pair_counts(4, 2).unwrap();
        assert_eq!(
            (counts.n00, counts.n01, counts.n10, counts.n11),
            (3u32.into(), 2u32.into(), 2u32.into(), BigUint::ZERO)
        );
        for n in [4, 7, 11] {
            assert_eq!(lucas_pair_counts(n, 2).unwrap().n11, BigUint::ZERO);
        }
        let counts = lucas_pair_counts(7, 4).unwrap();
        assert_eq!(counts.total(), BigUint::from(29u32));
        assert_eq!(
            lucas_pair_counts(9, 1).unwrap_err(),
            Error::RingHalfRange { k: 1, n: 9, max: 5 }
        );
        assert_eq!(
            lucas_pair_counts(9, 6).unwrap_err(),
            Error::RingHalfRange { k: 6, n: 9, max: 5 }
        );
    }

    #[test]
    fn ring_correlation_examples() {
        assert_eq!(corr_lucas(4, 2).unwrap().exact, rat(-1, 7));
        for n in 1..=20 {
            assert_eq!(corr_lucas(n, 1).unwrap().exact, rat(1, 1), "n = {n}");
        }
        assert_eq!(corr_lucas(5, 3).unwrap().exact, rat(3, 11));

        let c = corr_lucas(10, 3).unwrap();
        assert_eq!(c.exact, rat(13, 41));
        assert_eq!(
            (c.counts.n00, c.counts.n01, c.counts.n10, c.counts.n11),
            (68u32.into(), 21u32.into(), 21u32.into(), 13u32.into())
        );
    }

    #[test]
    fn ring_correlation_wraps_past_half_range() {
        // Cells 1 and k sit at the same ring distance as cells 1 and n+2-k.
        for n in 2..=14usize {
            for k in 2..=n {
                let direct = corr_lucas(n, k).unwrap().exact;
                let wrapped = corr_lucas(n, n + 2 - k).unwrap().exact;
                assert_eq!(direct, wrapped, "n = {n}, k = {k}");
            }
        }
        assert!(corr_lucas(10, 11).is_err());
        assert!(corr_lucas(10, 0).is_err());
    }

    #[test]
    fn ring_neighbor_correlations() {
        assert_eq!(corr_lucas_nn(4).unwrap(), rat(-1, 7));
        assert_eq!(corr_lucas_nnn(5).unwrap(), rat(3, 11));
        assert_eq!(corr_lucas_nnn(6).unwrap(), rat(1, 3));
        for n in 4..=14 {
            assert_eq!(corr_lucas_nn(n).unwrap(), corr_lucas(n, 2).unwrap().exact);
        }
        for n in 5..=14 {
            assert_eq!(corr_lucas_nnn(n).unwrap(), corr_lucas(n, 3).unwrap().exact);
        }
        assert_eq!(
            corr_lucas_nn(3).unwrap_err(),
            Error::RingTooSmall { n: 3, min: 4 }
        );
        assert_eq!(
            corr_lucas_nnn(4).unwrap_err(),
            Error::RingTooSmall { n: 4, min: 5 }
        );
    }

    #[test]
    fn profile_shapes() {
        let ring = density_profile(4, Topology::Circular).unwrap();
        assert_eq!(ring.rows.len(), 4);
        for row in &ring.rows {
            assert_eq!(row.exact, rat(2, 7));
            assert!((row.approx.unwrap() - 2.0 / 7.0).abs() < 1e-12);
        }

        let chain = density_profile(80, Topology::Linear).unwrap();
        assert_eq!(chain.rows.len(), 80);
        let bulk = bulk_limit_density();
        for row in &chain.rows[19..60] {
            assert!((row.approx.unwrap() - bulk).abs() < 1e-6, "cell {}", row.i);
        }
        for row in &chain.rows[..10] {
            let delta = row.approx.unwrap() - bulk;
            assert!(if row.i % 2 == 1 { delta > 0.0 } else { delta < 0.0 });
        }
        // Palindromic in the exact column.
        for i in 1..=80 {
            assert_eq!(chain.rows[i - 1].exact, chain.rows[80 - i].exact);
        }
    }

    #[test]
    fn profile_float_column_drops_out_beyond_float_range() {
        let long = density_profile(1500, Topology::Linear).unwrap();
        assert_eq!(long.rows.len(), 1500);
        assert!(long.rows.iter().all(|row| row.approx.is_none()));
        // The exact column still carries the full answer.
        assert!(long.rows[749].exact > rat(1, 4));
        assert!(long.rows[749].exact < rat(1, 2));
    }

    #[test]
    fn profile_float_column_tracks_exact_for_moderate_devices() {
        for n in [1usize, 2, 7, 40, 70] {
            let profile = density_profile(n, Topology::Linear).unwrap();
            for row in &profile.rows {
                let exact = ratio_to_f64(&row.exact);
                assert!(
                    (row.approx.unwrap() - exact).abs() < 1e-9,
                    "n = {n}, i = {}",
                    row.i
                );
            }
        }
    }

    #[test]
    fn correlations_stay_in_unit_interval() {
        for n in 1..=12usize {
            for k in 1..=n {
                for l in k..=n {
                    let c = corr_fib(n, k, l).unwrap();
                    assert!(c.exact <= rat(1, 1) && c.exact >= rat(-1, 1));
                    assert!(c.approx <= 1.0 && c.approx >= -1.0);
                }
                let c = corr_lucas(n, k).unwrap();
                assert!(c.exact <= rat(1, 1) && c.exact >= rat(-1, 1));
            }
        }
    }

    #[test]
    fn densities_stay_below_half() {
        let half = rat(1, 2);
        for n in 1..=14usize {
            for i in 1..=n {
                let d = density_fib(n, i).unwrap();
                assert!(d >= rat(0, 1) && d <= half, "n = {n}, i = {i}");
            }
            let d = density_lucas(n).unwrap();
            assert!(d >= rat(0, 1) && d <= half, "ring n = {n}");
        }
    }

    #[test]
    fn float_density_is_close_to_exact_density() {
        for n in 1..=70usize {
            for i in (1..=n).step_by(7.max(n / 9)) {
                let exact = ratio_to_f64(&density_fib(n, i).unwrap());
                assert!((density_fib_float(n, i).unwrap() - exact).abs() < 1e-9);
            }
            let exact = ratio_to_f64(&density_lucas(n).unwrap());
            assert!((density_lucas_float(n).unwrap() - exact).abs() < 1e-9);
        }
    }
}
