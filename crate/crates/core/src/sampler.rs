//! Exact uniform sampling of admissible states and Monte Carlo estimators
//! for devices too long to enumerate.
//!
//! A draw is an unranked uniform integer, so the distribution over states is
//! uniform by construction — there is no chain to mix and no burn-in. The
//! generator is ChaCha20 seeded directly with the configured 64-bit seed;
//! this choice is part of the output contract (identical config, identical
//! stream, on every platform) and must not change silently.

use num_bigint::BigUint;
use rand_chacha::ChaCha20Rng;
use rand_core::{RngCore, SeedableRng};

use crate::device::{DeviceSpec, StateWord};
use crate::enumeration::Unranker;
use crate::error::{Error, Result};

/// Largest device length the sampler accepts; each draw is O(n) big-integer
/// work and the unranking table grows quadratically in memory.
pub const MAX_SAMPLING_LENGTH: usize = 10000;

/// A reproducible sampling plan: device, number of draws, seed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SampleConfig {
    spec: DeviceSpec,
    sample_count: u64,
    seed: u64,
}

impl SampleConfig {
    pub fn new(spec: DeviceSpec, sample_count: u64, seed: u64) -> Result<Self> {
        if spec.length() > MAX_SAMPLING_LENGTH {
            return Err(Error::SamplingLimit {
                n: spec.length(),
                max: MAX_SAMPLING_LENGTH,
            });
        }
        if sample_count == 0 {
            return Err(Error::EmptySample);
        }
        Ok(SampleConfig {
            spec,
            sample_count,
            seed,
        })
    }

    pub fn spec(&self) -> &DeviceSpec {
        &self.spec
    }

    pub fn sample_count(&self) -> u64 {
        self.sample_count
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }
}

/// The deterministic stream of sampled states for one config.
pub struct SampleStream {
    unranker: Unranker,
    rng: ChaCha20Rng,
    remaining: u64,
    /// 32-bit blocks needed to cover the state count.
    words: usize,
    /// Mask applied to the most significant block.
    top_mask: u32,
}

impl SampleStream {
    fn new(config: &SampleConfig) -> Self {
        let unranker = Unranker::new(*config.spec());
        let bits = unranker.count().bits().max(1);
        let words = bits.div_ceil(32) as usize;
        let top_bits = bits - 32 * (words as u64 - 1);
        let top_mask = if top_bits == 32 {
            u32::MAX
        } else {
            (1u32 << top_bits) - 1
        };
        SampleStream {
            unranker,
            rng: ChaCha20Rng::seed_from_u64(config.seed()),
            remaining: config.sample_count(),
            words,
            top_mask,
        }
    }

    /// A uniform integer in `[0, count)` by rejection from fixed-width
    /// blocks: draw exactly `bits(count)` random bits and retry when the
    /// value lands outside the range. No modulo, hence no bias; the
    /// acceptance probability always exceeds one half.
    fn draw_index(&mut self) -> BigUint {
        let mut blocks = vec![0u32; self.words];
        loop {
            for block in blocks.iter_mut() {
                *block = self.rng.next_u32();
            }
            blocks[self.words - 1] &= self.top_mask;
            let candidate = BigUint::from_slice(&blocks);
            if &candidate < self.unranker.count() {
                return candidate;
            }
        }
    }
}

impl Iterator for SampleStream {
    type Item = StateWord;

    fn next(&mut self) -> Option<StateWord> {
        if self.remaining == 0 {
            return None;
        }
        self.remaining -= 1;
        let index = self.draw_index();
        Some(
            self.unranker
                .state(&index)
                .expect("rejection keeps the index in range"),
        )
    }
}

/// Iterator over the config's draws, in order.
pub fn sample_stream(config: &SampleConfig) -> SampleStream {
    SampleStream::new(config)
}

/// The state produced by draw number `draw_index` (0-based) of the stream.
pub fn sample_state(config: &SampleConfig, draw_index: u64) -> Result<StateWord> {
    if draw_index >= config.sample_count() {
        return Err(Error::DrawIndexOutOfRange {
            index: draw_index,
            count: config.sample_count(),
        });
    }
    Ok(sample_stream(config)
        .nth(draw_index as usize)
        .expect("index checked against sample count"))
}

/// Monte Carlo estimate: sample mean and its standard error.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Estimate {
    pub mean: f64,
    pub std_error: f64,
    pub sample_count: u64,
}

impl Estimate {
    /// For indicator observables (each draw contributes 0 or 1) the sample
    /// variance reduces to `m x(1-x)/(m-1)`; a single draw gets a standard
    /// error of 0 by policy rather than NaN.
    fn from_indicator(successes: u64, count: u64) -> Estimate {
        let m = count as f64;
        let mean = successes as f64 / m;
        let std_error = if count > 1 {
            (mean * (1.0 - mean) / (m - 1.0)).sqrt()
        } else {
            0.0
        };
        Estimate {
            mean,
            std_error,
            sample_count: count,
        }
    }

    /// For agreement observables (each draw contributes +1 or -1) the
    /// sample variance reduces to `m (1 - g^2)/(m-1)` with `g` the mean.
    fn from_agreement(agreements: u64, count: u64) -> Estimate {
        let m = count as f64;
        let mean = (2 * agreements) as f64 / m - 1.0;
        let std_error = if count > 1 {
            // Guard the subtraction: g = +-1 exactly should give 0, not a
            // tiny negative under sqrt.
            ((1.0 - mean * mean).max(0.0) / (m - 1.0)).sqrt()
        } else {
            0.0
        };
        Estimate {
            mean,
            std_error,
            sample_count: count,
        }
    }
}

/// Sampled occupation density of cell `i`.
pub fn estimate_density(config: &SampleConfig, i: usize) -> Result<Estimate> {
    config.spec().check_cell(i)?;
    let occupied = sample_stream(config).filter(|word| word.bit(i)).count() as u64;
    Ok(Estimate::from_indicator(occupied, config.sample_count()))
}

/// Sampled correlation of cells `k` and `l`: the mean of +1 per draw where
/// the bits agree and -1 where they differ.
pub fn estimate_correlation(config: &SampleConfig, k: usize, l: usize) -> Result<Estimate> {
    config.spec().check_cell(k)?;
    config.spec().check_cell(l)?;
    let agreements = sample_stream(config)
        .filter(|word| word.bit(k) == word.bit(l))
        .count() as u64;
    Ok(Estimate::from_agreement(agreements, config.sample_count()))
}
