//! Devices (cell arrays with the no-two-adjacent-ones constraint) and their
//! bit-packed configuration words.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use smallvec::{smallvec, SmallVec};

use crate::error::{Error, Result};

/// Cell arrangement: a chain with two ends, or a ring where cell n borders
/// cell 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Topology {
    Linear,
    Circular,
}

/// A device: `length` cells, 1-indexed, under the constraint that no two
/// adjacent cells both hold 1 (with the extra wraparound pair for rings).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DeviceSpec {
    topology: Topology,
    length: usize,
}

impl DeviceSpec {
    pub fn new(topology: Topology, length: usize) -> Result<Self> {
        if length == 0 {
            return Err(Error::EmptyDevice);
        }
        Ok(DeviceSpec { topology, length })
    }

    pub fn linear(length: usize) -> Result<Self> {
        DeviceSpec::new(Topology::Linear, length)
    }

    pub fn circular(length: usize) -> Result<Self> {
        DeviceSpec::new(Topology::Circular, length)
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn topology(&self) -> Topology {
        self.topology
    }

    /// Constraint check, written directly off the definition so it stays
    /// independent of the enumerator's pruning logic.
    ///
    /// On a one-cell ring the wraparound pair is the cell with itself, so
    /// only the all-zero word is admissible there.
    pub fn admits(&self, word: &StateWord) -> bool {
        if word.len() != self.length {
            return false;
        }
        for i in 1..self.length {
            if word.bit(i) && word.bit(i + 1) {
                return false;
            }
        }
        match self.topology {
            Topology::Linear => true,
            Topology::Circular => !(word.bit(self.length) && word.bit(1)),
        }
    }

    /// Bounds check for a 1-indexed cell argument.
    pub fn check_cell(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.length {
            Err(Error::CellOutOfRange {
                index: i,
                length: self.length,
            })
        } else {
            Ok(())
        }
    }
}

/// One 0/1 configuration of a device, cells 1-indexed with cell 1 first.
///
/// Bits are packed into 64-bit blocks; a single block is stored inline, which
/// covers every enumerable device without allocation. Sampled devices may run
/// to thousands of cells and spill to the heap.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StateWord {
    len: usize,
    blocks: SmallVec<[u64; 1]>,
}

impl StateWord {
    /// The all-zero word of `len` cells (admissible under every topology).
    pub fn zeros(len: usize) -> Self {
        let block_count = len.div_ceil(64).max(1);
        StateWord {
            len,
            blocks: smallvec![0; block_count],
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Cell `i` (1-indexed). Panics if `i` is outside `1..=len`.
    pub fn bit(&self, i: usize) -> bool {
        assert!(i >= 1 && i <= self.len, "cell index {i} out of 1..={}", self.len);
        let pos = i - 1;
        (self.blocks[pos / 64] >> (pos % 64)) & 1 == 1
    }

    /// Sets cell `i` (1-indexed). Panics if `i` is outside `1..=len`.
    pub fn set_bit(&mut self, i: usize, value: bool) {
        assert!(i >= 1 && i <= self.len, "cell index {i} out of 1..={}", self.len);
        let pos = i - 1;
        let mask = 1u64 << (pos % 64);
        if value {
            self.blocks[pos / 64] |= mask;
        } else {
            self.blocks[pos / 64] &= !mask;
        }
    }

    /// Number of occupied cells.
    pub fn ones(&self) -> u64 {
        self.blocks.iter().map(|b| u64::from(b.count_ones())).sum()
    }

    /// The integer whose binary digits are the cells, cell 1 most
    /// significant. Enumeration yields states in increasing order of this
    /// value.
    pub fn numeric_value(&self) -> BigUint {
        let mut value = BigUint::ZERO;
        for i in 1..=self.len {
            value <<= 1u32;
            if self.bit(i) {
                value |= BigUint::from(1u32);
            }
        }
        value
    }
}

impl fmt::Display for StateWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 1..=self.len {
            f.write_str(if self.bit(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl FromStr for StateWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.is_empty() {
            return Err(Error::EmptyDevice);
        }
        let mut word = StateWord::zeros(s.chars().count());
        for (pos, ch) in s.chars().enumerate() {
            match ch {
                '0' => {}
                '1' => word.set_bit(pos + 1, true),
                found => {
                    return Err(Error::InvalidStateChar {
                        position: pos + 1,
                        found,
                    })
                }
            }
        }
        Ok(word)
    }
}

/// How many admissible states put each of the four bit patterns on a fixed
/// pair of cells. The correlation of the pair is
/// `(n00 + n11 - n01 - n10) / total`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairCounts {
    pub n00: BigUint,
    pub n01: BigUint,
    pub n10: BigUint,
    pub n11: BigUint,
}

impl PairCounts {
    pub fn total(&self) -> BigUint {
        &self.n00 + &self.n01 + &self.n10 + &self.n11
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn word(s: &str) -> StateWord {
        s.parse().unwrap()
    }

    #[test]
    fn device_requires_positive_length() {
        assert_eq!(DeviceSpec::linear(0).unwrap_err(), Error::EmptyDevice);
        assert_eq!(DeviceSpec::circular(3).unwrap().length(), 3);
        assert_eq!(DeviceSpec::linear(5).unwrap().topology(), Topology::Linear);
    }

    #[test]
    fn bits_round_trip_across_block_boundary() {
        let mut w = StateWord::zeros(130);
        for i in [1, 63, 64, 65, 128, 130] {
            assert!(!w.bit(i));
            w.set_bit(i, true);
            assert!(w.bit(i));
        }
        assert_eq!(w.ones(), 6);
        w.set_bit(64, false);
        assert!(!w.bit(64));
        assert_eq!(w.ones(), 5);
    }

    #[test]
    fn display_and_parse_round_trip() {
        for s in ["0", "1", "0100101", "000"] {
            assert_eq!(word(s).to_string(), s);
        }
        assert_eq!(
            "10x".parse::<StateWord>().unwrap_err(),
            Error::InvalidStateChar {
                position: 3,
                found: 'x'
            }
        );
        assert_eq!("".parse::<StateWord>().unwrap_err(), Error::EmptyDevice);
    }

    #[test]
    fn numeric_value_is_cell1_msb() {
        assert_eq!(word("101").numeric_value(), BigUint::from(5u32));
        assert_eq!(word("0010").numeric_value(), BigUint::from(2u32));
        assert_eq!(word("000").numeric_value(), BigUint::ZERO);
    }

    #[test]
    fn linear_admissibility() {
        let spec = DeviceSpec::linear(3).unwrap();
        assert!(spec.admits(&word("101")));
        assert!(spec.admits(&word("000")));
        assert!(!spec.admits(&word("110")));
        assert!(!spec.admits(&word("011")));
        assert!(!spec.admits(&word("10"))); // wrong length
    }

    #[test]
    fn circular_admissibility_includes_wraparound() {
        let spec = DeviceSpec::circular(3).unwrap();
        assert!(spec.admits(&word("010")));
        assert!(!spec.admits(&word("101"))); // sigma_3 sigma_1 = 1
        let four = DeviceSpec::circular(4).unwrap();
        assert!(four.admits(&word("1010")));
        assert!(!four.admits(&word("1001")));
        let one = DeviceSpec::circular(1).unwrap();
        assert!(one.admits(&word("0")));
        assert!(!one.admits(&word("1")));
    }

    #[test]
    fn cell_bounds() {
        let spec = DeviceSpec::linear(4).unwrap();
        assert!(spec.check_cell(1).is_ok());
        assert!(spec.check_cell(4).is_ok());
        assert_eq!(
            spec.check_cell(0).unwrap_err(),
            Error::CellOutOfRange { index: 0, length: 4 }
        );
        assert!(spec.check_cell(5).is_err());
    }

    #[test]
    fn pair_counts_total() {
        let counts = PairCounts {
            n00: BigUint::from(3u32),
            n01: BigUint::from(2u32),
            n10: BigUint::from(2u32),
            n11: BigUint::ZERO,
        };
        assert_eq!(counts.total(), BigUint::from(7u32));
    }
}
