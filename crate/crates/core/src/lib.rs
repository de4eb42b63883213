//! Exact statistics of bit strings with no two adjacent ones, on linear
//! chains and on rings.
//!
//! An n-cell chain admits F_{n+2} such configurations and an n-cell ring
//! admits L_n, which makes cell occupancies and pair correlations exact
//! ratios of Fibonacci and Lucas numbers. This crate computes those
//! statistics three ways and cross-checks them against each other:
//!
//! - closed forms in exact big-rational arithmetic ([`statistics`]),
//! - exhaustive enumeration of the admissible states ([`enumeration`]),
//! - seeded uniform Monte Carlo sampling via unranking ([`sampler`]).
//!
//! [`verify`] bundles the closed-form-versus-enumeration sweeps into a
//! single report.

pub mod device;
pub mod enumeration;
pub mod error;
pub mod numbers;
pub mod rational;
pub mod sampler;
pub mod statistics;
pub mod verify;

pub use device::{DeviceSpec, PairCounts, StateWord, Topology};
pub use enumeration::{
    brute_correlation, brute_density, brute_pair_counts, count_states, enumerate_states,
    rank_state, unrank_state, StateIter, Unranker, MAX_ENUMERATION_LENGTH,
};
pub use error::{Error, ErrorKind, Result};
pub use numbers::{
    fib, fib_float, fib_iterative, lucas, lucas_float, lucas_iterative, FibIndex, GoldenConstants,
    MAX_BINET_INDEX,
};
pub use rational::{format_ratio, ratio_to_f64, rational, BigRational};
pub use sampler::{
    estimate_correlation, estimate_density, sample_state, sample_stream, Estimate, SampleConfig,
    SampleStream, MAX_SAMPLING_LENGTH,
};
pub use statistics::{
    bulk_limit_density, corr_fib, corr_fib_adjacent, corr_fib_reflect, corr_lucas, corr_lucas_nn,
    corr_lucas_nnn, density_fib, density_fib_float, density_lucas, density_lucas_float,
    density_profile, fib_pair_counts, limit_density_cell, lucas_pair_counts, CorrelationResult,
    DensityProfile, ProfileRow,
};
pub use verify::{FamilyReport, VerifyReport, DEFAULT_MAX_N, VERIFY_HARD_CAP};
