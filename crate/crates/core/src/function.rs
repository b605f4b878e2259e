use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::{Bit, Error};

/// Largest variable count a truth table may have.
pub const MAX_VARIABLES: usize = 20;

/// Values of the variables, variable 0 first.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Assignment(Vec<Bit>);

impl Assignment {
    pub fn new(bits: Vec<Bit>) -> Assignment {
        Assignment(bits)
    }

    /// The assignment whose big-endian reading (variable 0 most significant)
    /// is `index`.
    pub fn from_index(n: usize, index: usize) -> Assignment {
        Assignment(
            (0..n)
                .map(|i| Bit::new((index >> (n - 1 - i)) & 1 == 1))
                .collect(),
        )
    }

    pub fn index(&self) -> usize {
        self.0
            .iter()
            .fold(0usize, |acc, b| (acc << 1) | b.as_u8() as usize)
    }

    /// All `2^n` assignments in big-endian order.
    pub fn all(n: usize) -> impl Iterator<Item = Assignment> {
        (0..1usize << n).map(move |i| Assignment::from_index(n, i))
    }

    pub fn bits(&self) -> &[Bit] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, var: usize) -> Option<Bit> {
        self.0.get(var).copied()
    }
}

impl FromStr for Assignment {
    type Err = Error;

    fn from_str(s: &str) -> Result<Assignment, Error> {
        s.chars()
            .enumerate()
            .map(|(position, c)| Bit::from_char(c).ok_or(Error::InvalidBit { position, found: c }))
            .collect::<Result<Vec<_>, _>>()
            .map(Assignment)
    }
}

impl fmt::Display for Assignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in &self.0 {
            write!(f, "{b}")?;
        }
        Ok(())
    }
}

/// A function `{0,1}^n -> {0,1}` stored as its truth table, indexed by the
/// big-endian reading of the assignment.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BooleanFunction {
    n: usize,
    table: Vec<Bit>,
}

impl BooleanFunction {
    pub fn from_table(n: usize, table: Vec<Bit>) -> Result<BooleanFunction, Error> {
        if n > MAX_VARIABLES {
            return Err(Error::TooManyVariables {
                n,
                max: MAX_VARIABLES,
            });
        }
        if table.len() != 1 << n {
            return Err(Error::LengthMismatch {
                expected: 1 << n,
                found: table.len(),
            });
        }
        Ok(BooleanFunction { n, table })
    }

    /// Tabulates `f` over all assignments.
    pub fn from_fn(n: usize, f: impl Fn(&[Bit]) -> bool) -> BooleanFunction {
        assert!(n <= MAX_VARIABLES, "too many variables");
        let table = Assignment::all(n).map(|a| Bit::new(f(a.bits()))).collect();
        BooleanFunction { n, table }
    }

    /// The function whose table, read row 0 first as a big-endian integer,
    /// equals `id`. Requires `n <= 6`.
    pub fn from_id(n: usize, id: u64) -> BooleanFunction {
        assert!(n <= 6, "truth table ids only cover n <= 6");
        let rows = 1usize << n;
        let table = (0..rows)
            .map(|r| Bit::new((id >> (rows - 1 - r)) & 1 == 1))
            .collect();
        BooleanFunction { n, table }
    }

    /// Inverse of [`BooleanFunction::from_id`].
    pub fn id(&self) -> Option<u64> {
        (self.n <= 6).then(|| {
            self.table
                .iter()
                .fold(0u64, |acc, b| (acc << 1) | u64::from(b.as_u8()))
        })
    }

    pub fn constant(n: usize, value: Bit) -> BooleanFunction {
        BooleanFunction::from_fn(n, |_| value.as_bool())
    }

    pub fn arity(&self) -> usize {
        self.n
    }

    pub fn table(&self) -> &[Bit] {
        &self.table
    }

    pub fn value_at(&self, index: usize) -> Bit {
        self.table[index]
    }

    pub fn eval(&self, a: &Assignment) -> Result<Bit, Error> {
        if a.len() != self.n {
            return Err(Error::ArityMismatch {
                expected: self.n,
                found: a.len(),
            });
        }
        Ok(self.table[a.index()])
    }

    pub fn is_constant(&self) -> bool {
        self.table.windows(2).all(|w| w[0] == w[1])
    }

    /// Fixes variable `var` to `value`; the remaining variables keep their
    /// relative order.
    pub fn restrict(&self, var: usize, value: Bit) -> Result<BooleanFunction, Error> {
        if var >= self.n {
            return Err(Error::VariableOutOfRange {
                index: var,
                n: self.n,
            });
        }
        let n = self.n - 1;
        let table = Assignment::all(n)
            .map(|a| {
                let mut bits = a.bits().to_vec();
                bits.insert(var, value);
                self.table[Assignment::new(bits).index()]
            })
            .collect();
        Ok(BooleanFunction { n, table })
    }

    /// Number of hex digits in the text form.
    pub fn hex_digits(n: usize) -> usize {
        ((1usize << n) / 4).max(1)
    }

    /// Truth table as lowercase hex, row 0 in the most significant bit.
    pub fn to_hex(&self) -> String {
        let digits = Self::hex_digits(self.n);
        let padded = digits * 4;
        let bits: Vec<u8> = core::iter::repeat_n(0u8, padded - self.table.len())
            .chain(self.table.iter().map(|b| b.as_u8()))
            .collect();
        bits.chunks(4)
            .map(|c| {
                let v = c.iter().fold(0u32, |acc, &b| (acc << 1) | u32::from(b));
                char::from_digit(v, 16).unwrap()
            })
            .collect()
    }

    pub fn from_hex(n: usize, hex: &str) -> Result<BooleanFunction, Error> {
        if n > MAX_VARIABLES {
            return Err(Error::TooManyVariables {
                n,
                max: MAX_VARIABLES,
            });
        }
        let digits = Self::hex_digits(n);
        if hex.chars().count() != digits {
            return Err(Error::InvalidTruthTable { n });
        }
        let mut bits = Vec::with_capacity(digits * 4);
        for c in hex.chars() {
            let v = c.to_digit(16).ok_or(Error::InvalidTruthTable { n })?;
            bits.extend((0..4).rev().map(|s| Bit::new((v >> s) & 1 == 1)));
        }
        let rows = 1usize << n;
        let (pad, table) = bits.split_at(bits.len() - rows);
        if pad.iter().any(|b| b.as_bool()) {
            return Err(Error::InvalidTruthTable { n });
        }
        Ok(BooleanFunction {
            n,
            table: table.to_vec(),
        })
    }
}
