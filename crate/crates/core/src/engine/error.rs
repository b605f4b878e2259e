use core::fmt;

use crate::{Assignment, Bit, Error, Necklace, Word};

/// Invalid output-rule construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RuleError {
    Empty,
    TooManyEntries(usize),
    DuplicateBit(Bit),
    DuplicateNecklace(Necklace),
    LengthMismatch { expected: usize, found: usize },
}

impl fmt::Display for RuleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RuleError::Empty => write!(f, "output rule has no entries"),
            RuleError::TooManyEntries(n) => {
                write!(f, "output rule has {n} entries, at most 2 allowed")
            }
            RuleError::DuplicateBit(b) => write!(f, "output {b} listed twice"),
            RuleError::DuplicateNecklace(n) => write!(f, "necklace {n} assigned to both outputs"),
            RuleError::LengthMismatch { expected, found } => {
                write!(f, "class word has {found} cards, expected {expected}")
            }
        }
    }
}

impl core::error::Error for RuleError {}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EngineError {
    Structural(Error),
    InvalidRule(RuleError),
    /// Two inputs with the same output open to different necklaces.
    NonConstantClass {
        output: Bit,
        first: Assignment,
        second: Assignment,
    },
    /// The 0-inputs and 1-inputs open to the same necklace.
    IndistinguishableClasses {
        necklace: Necklace,
    },
    /// An opened word matches no entry of the rule.
    UnknownClass {
        word: Word,
    },
}

impl fmt::Display for EngineError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EngineError::Structural(e) => e.fmt(f),
            EngineError::InvalidRule(e) => e.fmt(f),
            EngineError::NonConstantClass {
                output,
                first,
                second,
            } => write!(
                f,
                "inputs {first} and {second} both output {output} but open to different necklaces"
            ),
            EngineError::IndistinguishableClasses { necklace } => {
                write!(f, "both outputs open to necklace {necklace}")
            }
            EngineError::UnknownClass { word } => {
                write!(f, "opened word {word} matches no output class")
            }
        }
    }
}

impl core::error::Error for EngineError {}

impl From<Error> for EngineError {
    fn from(e: Error) -> Self {
        EngineError::Structural(e)
    }
}

impl From<RuleError> for EngineError {
    fn from(e: RuleError) -> Self {
        EngineError::InvalidRule(e)
    }
}
