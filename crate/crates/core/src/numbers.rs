//! Arbitrary-precision Fibonacci and Lucas numbers plus their golden-ratio
//! float evaluations.
//!
//! The index domain is extended one step below zero: `F_{-1} = 1` is needed
//! when a pair-count product degenerates (two probes on the same cell, or a
//! ring probe on cell 1). Nothing deeper than -1 is supported.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Largest index accepted by [`fib_float`] and [`lucas_float`]. Powers of the
/// golden ratio overflow `f64` shortly above this; callers needing larger
/// indices must stay on the exact path.
pub const MAX_BINET_INDEX: u64 = 1400;

/// Sequence index, restricted to values >= -1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FibIndex(i64);

impl FibIndex {
    pub const MINUS_ONE: FibIndex = FibIndex(-1);

    pub fn new(value: i64) -> Result<Self> {
        if value < -1 {
            Err(Error::FibIndexBelowMin(value))
        } else {
            Ok(FibIndex(value))
        }
    }

    pub fn value(self) -> i64 {
        self.0
    }
}

impl From<u32> for FibIndex {
    fn from(value: u32) -> Self {
        FibIndex(i64::from(value))
    }
}

impl TryFrom<i64> for FibIndex {
    type Error = Error;

    fn try_from(value: i64) -> Result<Self> {
        FibIndex::new(value)
    }
}

/// `F_n` with `F_0 = 0`, `F_1 = 1` and the single extension `F_{-1} = 1`.
///
/// Runs in O(log n) big-integer multiplications by fast doubling; the
/// straightforward loop lives in [`fib_iterative`] as an independent check.
pub fn fib(n: FibIndex) -> BigUint {
    match n.value() {
        -1 => BigUint::one(),
        v => fib_pair(v as u64).0,
    }
}

/// `(F_n, F_{n+1})` by fast doubling over the bits of `n`, using
/// `F_{2k} = F_k (2 F_{k+1} - F_k)` and `F_{2k+1} = F_k^2 + F_{k+1}^2`.
fn fib_pair(n: u64) -> (BigUint, BigUint) {
    let mut a = BigUint::zero(); // F_k, starting at k = 0
    let mut b = BigUint::one(); // F_{k+1}
    for shift in (0..u64::BITS - n.leading_zeros()).rev() {
        let doubled = &a * ((&b << 1u32) - &a);
        let succ = &a * &a + &b * &b;
        if (n >> shift) & 1 == 0 {
            a = doubled;
            b = succ;
        } else {
            b = doubled + &succ;
            a = succ;
        }
    }
    (a, b)
}

/// `L_n` with `L_0 = 2`, `L_1 = 1`, via `L_n = 2 F_{n+1} - F_n`.
pub fn lucas(n: FibIndex) -> Result<BigUint> {
    if n.value() < 0 {
        return Err(Error::NegativeLucasIndex(n.value()));
    }
    let (f_n, f_succ) = fib_pair(n.value() as u64);
    Ok((f_succ << 1u32) - f_n)
}

/// Crate-internal shorthand: `F_n` for an index already known to be >= -1.
pub(crate) fn fib_i(n: i64) -> BigUint {
    fib(FibIndex::new(n).expect("fib index >= -1"))
}

/// Plain recurrence loop for `F_n`; the oracle the doubling path is tested
/// against.
pub fn fib_iterative(n: FibIndex) -> BigUint {
    if n.value() == -1 {
        return BigUint::one();
    }
    let mut prev = BigUint::zero();
    let mut cur = BigUint::one();
    for _ in 0..n.value() {
        let next = &prev + &cur;
        prev = cur;
        cur = next;
    }
    prev
}

/// Plain recurrence loop for `L_n`.
pub fn lucas_iterative(n: FibIndex) -> Result<BigUint> {
    if n.value() < 0 {
        return Err(Error::NegativeLucasIndex(n.value()));
    }
    let mut prev = BigUint::from(2u32);
    let mut cur = BigUint::one();
    if n.value() == 0 {
        return Ok(prev);
    }
    for _ in 1..n.value() {
        let next = &prev + &cur;
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

/// The golden ratio `alpha = (1 + sqrt 5) / 2`, its conjugate
/// `beta = (1 - sqrt 5) / 2`, and `sqrt 5` itself, all derived from the
/// platform square root so that `F_n = (alpha^n - beta^n) / sqrt 5` and
/// `L_n = alpha^n + beta^n` hold to double precision.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GoldenConstants {
    pub alpha: f64,
    pub beta: f64,
    pub sqrt5: f64,
}

impl GoldenConstants {
    pub fn new() -> Self {
        let sqrt5 = 5f64.sqrt();
        GoldenConstants {
            alpha: (1.0 + sqrt5) / 2.0,
            beta: (1.0 - sqrt5) / 2.0,
            sqrt5,
        }
    }
}

impl Default for GoldenConstants {
    fn default() -> Self {
        GoldenConstants::new()
    }
}

/// Integer power by squaring. `f64::powi` may lower to a libm call on some
/// targets; an explicit multiply chain keeps results bit-identical across
/// platforms, which the byte-stable output formats rely on.
pub(crate) fn powi(base: f64, exp: u64) -> f64 {
    let mut result = 1.0;
    let mut square = base;
    let mut e = exp;
    while e > 0 {
        if e & 1 == 1 {
            result *= square;
        }
        square *= square;
        e >>= 1;
    }
    result
}

/// `F_n` evaluated as `(alpha^n - beta^n) / sqrt 5` in floating point.
pub fn fib_float(n: u64) -> Result<f64> {
    if n > MAX_BINET_INDEX {
        return Err(Error::BinetRange {
            n,
            max: MAX_BINET_INDEX,
        });
    }
    let g = GoldenConstants::new();
    Ok((powi(g.alpha, n) - powi(g.beta, n)) / g.sqrt5)
}

/// `L_n` evaluated as `alpha^n + beta^n` in floating point.
pub fn lucas_float(n: u64) -> Result<f64> {
    if n > MAX_BINET_INDEX {
        return Err(Error::BinetRange {
            n,
            max: MAX_BINET_INDEX,
        });
    }
    let g = GoldenConstants::new();
    Ok(powi(g.alpha, n) + powi(g.beta, n))
}
