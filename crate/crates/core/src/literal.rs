use alloc::vec::Vec;

use crate::{Assignment, Bit, Error, Symbol, Word};

/// What a single face-down card encodes.
///
/// Literals are totally ordered by [`Literal::code`]:
/// `Constant(0) < Constant(1) < Positive(0) < Negative(0) < Positive(1) < ...`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Literal {
    Constant(Bit),
    Positive(usize),
    Negative(usize),
}

impl Literal {
    pub const fn code(self) -> usize {
        match self {
            Literal::Constant(b) => b as usize,
            Literal::Positive(i) => 2 + 2 * i,
            Literal::Negative(i) => 3 + 2 * i,
        }
    }

    pub const fn from_code(code: usize) -> Literal {
        match code {
            0 => Literal::Constant(Bit::Zero),
            1 => Literal::Constant(Bit::One),
            c if c % 2 == 0 => Literal::Positive((c - 2) / 2),
            c => Literal::Negative((c - 3) / 2),
        }
    }

    pub const fn variable(self) -> Option<usize> {
        match self {
            Literal::Constant(_) => None,
            Literal::Positive(i) | Literal::Negative(i) => Some(i),
        }
    }

    /// Positive and negative swap; constants flip.
    pub const fn complement(self) -> Literal {
        match self {
            Literal::Constant(Bit::Zero) => Literal::Constant(Bit::One),
            Literal::Constant(Bit::One) => Literal::Constant(Bit::Zero),
            Literal::Positive(i) => Literal::Negative(i),
            Literal::Negative(i) => Literal::Positive(i),
        }
    }

    pub fn eval(self, a: &Assignment) -> Result<Bit, Error> {
        let lookup = |i: usize| {
            a.get(i).ok_or(Error::VariableOutOfRange {
                index: i,
                n: a.len(),
            })
        };
        match self {
            Literal::Constant(b) => Ok(b),
            Literal::Positive(i) => lookup(i),
            Literal::Negative(i) => lookup(i).map(|b| !b),
        }
    }
}

impl PartialOrd for Literal {
    fn partial_cmp(&self, other: &Self) -> Option<core::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Literal {
    fn cmp(&self, other: &Self) -> core::cmp::Ordering {
        self.code().cmp(&other.code())
    }
}

/// The input layout of a protocol: which literal each of the `m` cards holds,
/// over `n` variables.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Template {
    n: usize,
    literals: Vec<Literal>,
}

impl Template {
    pub fn new(n: usize, literals: Vec<Literal>) -> Result<Template, Error> {
        if literals.is_empty() {
            return Err(Error::EmptyTemplate);
        }
        if let Some(index) = literals
            .iter()
            .filter_map(|l| l.variable())
            .find(|&i| i >= n)
        {
            return Err(Error::VariableOutOfRange { index, n });
        }
        Ok(Template { n, literals })
    }

    pub fn arity(&self) -> usize {
        self.n
    }

    pub fn literals(&self) -> &[Literal] {
        &self.literals
    }

    /// Card count `m`.
    pub fn len(&self) -> usize {
        self.literals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.literals.is_empty()
    }

    pub fn instantiate(&self, a: &Assignment) -> Result<Word, Error> {
        if a.len() != self.n {
            return Err(Error::ArityMismatch {
                expected: self.n,
                found: a.len(),
            });
        }
        self.literals
            .iter()
            .map(|l| l.eval(a).map(Symbol::of_bit))
            .collect::<Result<Vec<_>, _>>()
            .map(Word::new)
    }

    /// Cyclic left shift of the layout, matching [`Word::rotate`].
    pub fn rotate(&self, k: usize) -> Template {
        let mut literals = self.literals.clone();
        let m = literals.len();
        literals.rotate_left(k % m);
        Template {
            n: self.n,
            literals,
        }
    }

    /// Literal-wise complement; instantiates to the suit-swapped word.
    pub fn complement(&self) -> Template {
        Template {
            n: self.n,
            literals: self.literals.iter().map(|l| l.complement()).collect(),
        }
    }

    /// Number of constant cards.
    pub fn constant_count(&self) -> usize {
        self.literals
            .iter()
            .filter(|l| matches!(l, Literal::Constant(_)))
            .count()
    }

    /// `(positive, negative)` occurrence counts of `var`.
    pub fn occurrences(&self, var: usize) -> (usize, usize) {
        self.literals.iter().fold((0, 0), |(p, q), l| match *l {
            Literal::Positive(i) if i == var => (p + 1, q),
            Literal::Negative(i) if i == var => (p, q + 1),
            _ => (p, q),
        })
    }

    /// Replaces every literal on `var` by the constant it evaluates to under
    /// `value` and re-indexes the variables above `var` down by one.
    pub fn restrict(&self, var: usize, value: Bit) -> Result<Template, Error> {
        if var >= self.n {
            return Err(Error::VariableOutOfRange {
                index: var,
                n: self.n,
            });
        }
        let shift = |i: usize| if i > var { i - 1 } else { i };
        let literals = self
            .literals
            .iter()
            .map(|&l| match l {
                Literal::Positive(i) if i == var => Literal::Constant(value),
                Literal::Negative(i) if i == var => Literal::Constant(!value),
                Literal::Positive(i) => Literal::Positive(shift(i)),
                Literal::Negative(i) => Literal::Negative(shift(i)),
                c @ Literal::Constant(_) => c,
            })
            .collect();
        Ok(Template {
            n: self.n - 1,
            literals,
        })
    }
}
