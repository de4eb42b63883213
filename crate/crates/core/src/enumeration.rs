//! Exhaustive generation, counting, unranking, and brute-force averaging
//! over admissible states.
//!
//! Everything here works from the constraint definition alone; the closed
//! forms in [`crate::statistics`] are tested against these routines.

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;

use crate::device::{DeviceSpec, PairCounts, StateWord, Topology};
use crate::error::{Error, Result};
use crate::numbers::{fib, lucas, FibIndex};
use crate::rational::{rational, BigRational};

/// Largest device length accepted for exhaustive enumeration. The state
/// count grows like the golden ratio to the n-th power; 40 cells is around
/// 2.6e8 states, the practical desk-scale ceiling.
pub const MAX_ENUMERATION_LENGTH: usize = 40;

/// Number of admissible states, by closed form: `F_{n+2}` for a chain,
/// `L_n` for a ring.
pub fn count_states(spec: &DeviceSpec) -> BigUint {
    let n = spec.length() as i64;
    match spec.topology() {
        Topology::Linear => fib(FibIndex::new(n + 2).expect("n >= 1")),
        Topology::Circular => {
            lucas(FibIndex::new(n).expect("n >= 1")).expect("nonnegative index")
        }
    }
}

/// Streams every admissible state exactly once, ordered by increasing
/// [`StateWord::numeric_value`] (cell 1 most significant).
pub fn enumerate_states(spec: &DeviceSpec) -> Result<StateIter> {
    if spec.length() > MAX_ENUMERATION_LENGTH {
        return Err(Error::EnumerationLimit {
            n: spec.length(),
            max: MAX_ENUMERATION_LENGTH,
        });
    }
    Ok(StateIter {
        spec: *spec,
        next: Some(StateWord::zeros(spec.length())),
    })
}

/// Lazy enumeration stream; does O(n) work per yielded state and never
/// visits an inadmissible word.
#[derive(Debug)]
pub struct StateIter {
    spec: DeviceSpec,
    next: Option<StateWord>,
}

impl Iterator for StateIter {
    type Item = StateWord;

    fn next(&mut self) -> Option<StateWord> {
        let current = self.next.take()?;
        self.next = successor(&self.spec, &current);
        Some(current)
    }
}

/// The numerically next admissible state after `word`, or None at the end.
///
/// Scans from cell n down to cell 1, clearing trailing 1s; the first cell
/// that can be raised from 0 to 1 without breaking the constraint (its left
/// neighbor, and for rings cell 1 when raising cell n) is raised, and the
/// all-zero suffix left behind is the minimal admissible completion.
fn successor(spec: &DeviceSpec, word: &StateWord) -> Option<StateWord> {
    let n = spec.length();
    let mut next = word.clone();
    for i in (1..=n).rev() {
        if next.bit(i) {
            next.set_bit(i, false);
        } else {
            let left_free = i == 1 || !next.bit(i - 1);
            let wrap_free = match spec.topology() {
                Topology::Linear => true,
                // Cells above i are already cleared, so only raising cell n
                // itself can touch the wraparound pair; a 1-cell ring pairs
                // the cell with itself and can never be raised.
                Topology::Circular => i < n || (n > 1 && !next.bit(1)),
            };
            if left_free && wrap_free {
                next.set_bit(i, true);
                return Some(next);
            }
        }
    }
    None
}

/// Bijection between `0..count_states(spec)` and admissible states in
/// enumeration order, in O(n) big-integer work per call.
///
/// Holds a Fibonacci prefix table, so batch callers (the sampler) pay the
/// table cost once.
pub struct Unranker {
    spec: DeviceSpec,
    /// fib[j] = F_j for j = 0 ..= n+2.
    fib: Vec<BigUint>,
    count: BigUint,
}

impl Unranker {
    pub fn new(spec: DeviceSpec) -> Self {
        let n = spec.length();
        let mut table = Vec::with_capacity(n + 3);
        table.push(BigUint::ZERO);
        table.push(BigUint::from(1u32));
        for j in 2..=n + 2 {
            let next = &table[j - 1] + &table[j - 2];
            table.push(next);
        }
        let count = match spec.topology() {
            Topology::Linear => table[n + 2].clone(),
            Topology::Circular => &table[n - 1] + &table[n + 1],
        };
        Unranker {
            spec,
            fib: table,
            count,
        }
    }

    pub fn spec(&self) -> &DeviceSpec {
        &self.spec
    }

    pub fn count(&self) -> &BigUint {
        &self.count
    }

    /// The state at `index` in enumeration order.
    ///
    /// Chain: states with the current cell 0 number `F_{rem+1}` of the
    /// `F_{rem+2}` total (`rem` cells left including this one) and come
    /// first. Ring: condition on cell 1 — the 0-branch is a chain on cells
    /// 2..n (`F_{n+1}` states), the 1-branch forces cells 2 and n to 0 and
    /// leaves a chain on cells 3..n-1 (`F_{n-1}` states).
    pub fn state(&self, index: &BigUint) -> Result<StateWord> {
        if index >= &self.count {
            return Err(Error::StateIndexOutOfRange {
                index: index.clone(),
                count: self.count.clone(),
            });
        }
        let n = self.spec.length();
        let mut word = StateWord::zeros(n);
        let mut index = index.clone();
        match self.spec.topology() {
            Topology::Linear => self.unrank_segment(&mut word, 1, n, &mut index),
            Topology::Circular => {
                if index < self.fib[n + 1] {
                    self.unrank_segment(&mut word, 2, n - 1, &mut index);
                } else {
                    index -= &self.fib[n + 1];
                    word.set_bit(1, true);
                    if n >= 4 {
                        self.unrank_segment(&mut word, 3, n - 3, &mut index);
                    }
                }
            }
        }
        debug_assert!(index.is_zero());
        Ok(word)
    }

    /// Fills cells `start .. start+len` (exclusive end) with the `index`-th
    /// admissible chain configuration, assuming both neighbors outside the
    /// segment are 0. Consumes `index` down to zero.
    fn unrank_segment(
        &self,
        word: &mut StateWord,
        start: usize,
        len: usize,
        index: &mut BigUint,
    ) {
        let mut pos = start;
        let mut remaining = len;
        while remaining > 0 {
            // F_{remaining+1} states keep this cell at 0.
            let zero_block = &self.fib[remaining + 1];
            if &*index < zero_block {
                pos += 1;
                remaining -= 1;
            } else {
                *index -= zero_block;
                word.set_bit(pos, true);
                // The right neighbor is forced to 0.
                pos += 2;
                remaining = remaining.saturating_sub(2);
            }
        }
    }

    /// Position of `word` in enumeration order (inverse of [`Self::state`]).
    pub fn rank(&self, word: &StateWord) -> Result<BigUint> {
        let n = self.spec.length();
        if word.len() != n {
            return Err(Error::LengthMismatch {
                got: word.len(),
                expected: n,
            });
        }
        if !self.spec.admits(word) {
            return Err(Error::InadmissibleState);
        }
        let mut rank = BigUint::ZERO;
        match self.spec.topology() {
            Topology::Linear => self.rank_segment(word, 1, n, &mut rank),
            Topology::Circular => {
                if word.bit(1) {
                    rank += &self.fib[n + 1];
                    if n >= 4 {
                        self.rank_segment(word, 3, n - 3, &mut rank);
                    }
                } else {
                    self.rank_segment(word, 2, n - 1, &mut rank);
                }
            }
        }
        Ok(rank)
    }

    fn rank_segment(&self, word: &StateWord, start: usize, len: usize, rank: &mut BigUint) {
        let mut pos = start;
        let mut remaining = len;
        while remaining > 0 {
            if word.bit(pos) {
                *rank += &self.fib[remaining + 1];
                pos += 2;
                remaining = remaining.saturating_sub(2);
            } else {
                pos += 1;
                remaining -= 1;
            }
        }
    }
}

/// One-shot [`Unranker::state`].
pub fn unrank_state(spec: &DeviceSpec, index: &BigUint) -> Result<StateWord> {
    Unranker::new(*spec).state(index)
}

/// One-shot [`Unranker::rank`].
pub fn rank_state(spec: &DeviceSpec, word: &StateWord) -> Result<BigUint> {
    Unranker::new(*spec).rank(word)
}

/// Fraction of admissible states with cell `i` occupied, by direct tally.
pub fn brute_density(spec: &DeviceSpec, i: usize) -> Result<BigRational> {
    spec.check_cell(i)?;
    let mut occupied = BigUint::ZERO;
    for word in enumerate_states(spec)? {
        if word.bit(i) {
            occupied += 1u32;
        }
    }
    rational(BigInt::from(occupied), BigInt::from(count_states(spec)))
}

/// Tally of the four (cell k, cell l) bit patterns over all admissible
/// states. `k = l` is allowed and lands everything in `n00`/`n11`.
pub fn brute_pair_counts(spec: &DeviceSpec, k: usize, l: usize) -> Result<PairCounts> {
    spec.check_cell(k)?;
    spec.check_cell(l)?;
    let mut counts = [BigUint::ZERO, BigUint::ZERO, BigUint::ZERO, BigUint::ZERO];
    for word in enumerate_states(spec)? {
        let slot = (word.bit(k) as usize) * 2 + word.bit(l) as usize;
        counts[slot] += 1u32;
    }
    let [n00, n01, n10, n11] = counts;
    Ok(PairCounts { n00, n01, n10, n11 })
}

/// Average of the agreement variable (+1 when cells k and l hold equal
/// bits, -1 otherwise) over all admissible states.
pub fn brute_correlation(spec: &DeviceSpec, k: usize, l: usize) -> Result<BigRational> {
    let counts = brute_pair_counts(spec, k, l)?;
    let agree = BigInt::from(&counts.n00 + &counts.n11);
    let disagree = BigInt::from(&counts.n01 + &counts.n10);
    rational(agree - disagree, BigInt::from(counts.total()))
}
