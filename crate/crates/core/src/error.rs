use core::fmt;

/// Structural errors raised by the card model.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// An assignment, template or function disagree on the variable count.
    ArityMismatch {
        expected: usize,
        found: usize,
    },
    /// A literal names a variable outside `0..n`.
    VariableOutOfRange {
        index: usize,
        n: usize,
    },
    EmptyTemplate,
    /// Two words (or a word and a template) disagree on the card count.
    LengthMismatch {
        expected: usize,
        found: usize,
    },
    /// Word text contained something other than `C`/`H`.
    InvalidSymbol {
        position: usize,
        found: char,
    },
    /// Assignment text contained something other than `0`/`1`.
    InvalidBit {
        position: usize,
        found: char,
    },
    /// Truth-table hex of the wrong length or with a non-hex digit.
    InvalidTruthTable {
        n: usize,
    },
    /// Variable counts beyond what a truth table index can address here.
    TooManyVariables {
        n: usize,
        max: usize,
    },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::ArityMismatch { expected, found } => {
                write!(f, "expected {expected} variables, found {found}")
            }
            Error::VariableOutOfRange { index, n } => {
                write!(f, "variable index {index} out of range for {n} variables")
            }
            Error::EmptyTemplate => write!(f, "template must contain at least one card"),
            Error::LengthMismatch { expected, found } => {
                write!(f, "expected {expected} cards, found {found}")
            }
            Error::InvalidSymbol { position, found } => {
                write!(
                    f,
                    "invalid card {found:?} at position {position}, expected C or H"
                )
            }
            Error::InvalidBit { position, found } => {
                write!(
                    f,
                    "invalid bit {found:?} at position {position}, expected 0 or 1"
                )
            }
            Error::InvalidTruthTable { n } => {
                write!(f, "invalid truth table for {n} variables")
            }
            Error::TooManyVariables { n, max } => {
                write!(f, "{n} variables exceeds the supported maximum of {max}")
            }
        }
    }
}

impl core::error::Error for Error {}
