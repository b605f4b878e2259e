use alloc::vec::Vec;
use core::fmt;

use super::Protocol;
use crate::{Assignment, Bit, BooleanFunction, Error, Word};

/// One line of a correctness table: input bits, `f` value and the input
/// sequence before the cut.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableRow {
    pub assignment: Assignment,
    pub value: Bit,
    pub word: Word,
}

impl fmt::Display for TableRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} | {} | {}", self.assignment, self.value, self.word)
    }
}

/// All `2^n` rows in big-endian input order.
pub fn render_table(p: &Protocol, f: &BooleanFunction) -> Result<Vec<TableRow>, Error> {
    if p.arity() != f.arity() {
        return Err(Error::ArityMismatch {
            expected: f.arity(),
            found: p.arity(),
        });
    }
    Assignment::all(f.arity())
        .map(|a| {
            Ok(TableRow {
                value: f.eval(&a)?,
                word: p.template().instantiate(&a)?,
                assignment: a,
            })
        })
        .collect()
}
