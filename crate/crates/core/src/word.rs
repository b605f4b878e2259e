use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::{Error, Symbol};

/// A sequence of card faces, leftmost card first.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(Vec<Symbol>);

impl Word {
    pub fn new(symbols: Vec<Symbol>) -> Word {
        Word(symbols)
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Cyclic left shift: `out[i] = self[(i + k) mod m]`.
    pub fn rotate(&self, k: usize) -> Word {
        let m = self.0.len();
        if m == 0 {
            return self.clone();
        }
        let mut symbols = self.0.clone();
        symbols.rotate_left(k % m);
        Word(symbols)
    }

    /// Swaps clubs and hearts.
    pub fn complement(&self) -> Word {
        Word(self.0.iter().map(|s| s.flipped()).collect())
    }

    /// Packs the word into an integer, first card in the most significant
    /// position, so integer order equals lexicographic order for equal
    /// lengths. Returns `None` above 64 cards.
    pub fn to_bits(&self) -> Option<u64> {
        if self.0.len() > 64 {
            return None;
        }
        Some(
            self.0
                .iter()
                .fold(0u64, |acc, s| (acc << 1) | u64::from(s.bit().as_u8())),
        )
    }

    pub fn from_bits(bits: u64, len: usize) -> Word {
        Word(
            (0..len)
                .map(|i| {
                    let bit = (bits >> (len - 1 - i)) & 1 == 1;
                    Symbol::of_bit(bit.into())
                })
                .collect(),
        )
    }
}

impl From<Vec<Symbol>> for Word {
    fn from(symbols: Vec<Symbol>) -> Word {
        Word(symbols)
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Word, Error> {
        s.chars()
            .enumerate()
            .map(|(position, c)| {
                Symbol::from_letter(c).ok_or(Error::InvalidSymbol { position, found: c })
            })
            .collect::<Result<Vec<_>, _>>()
            .map(Word)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.0 {
            write!(f, "{s}")?;
        }
        Ok(())
    }
}
