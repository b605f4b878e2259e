//! Function arguments: built-in names, truth-table hex, or `n:hex`.

use scfo_core::engine::fixtures;
use scfo_core::BooleanFunction;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FunctionSpecError {
    #[error("unknown function {0:?}: expected one of {names} or truth-table hex", names = fixtures::FUNCTION_NAMES.join(", "))]
    Unknown(String),
    #[error("function {text:?} has {found} variables, expected {expected}")]
    Arity {
        text: String,
        expected: usize,
        found: usize,
    },
}

/// Resolves a function argument.
///
/// Built-in names win over hex. Plain hex infers `n` from its length
/// (one digit means two variables) unless `arity` pins it; `n:hex` is
/// explicit and is the only way to write one-variable tables.
pub fn resolve_function(
    text: &str,
    arity: Option<usize>,
) -> Result<BooleanFunction, FunctionSpecError> {
    let unknown = || FunctionSpecError::Unknown(text.to_string());
    let check = |f: BooleanFunction| match arity {
        Some(n) if n != f.arity() => Err(FunctionSpecError::Arity {
            text: text.to_string(),
            expected: n,
            found: f.arity(),
        }),
        _ => Ok(f),
    };
    if let Some(f) = fixtures::builtin_function(text) {
        return check(f);
    }
    if let Some((n, hex)) = text.split_once(':') {
        let n: usize = n.parse().map_err(|_| unknown())?;
        return check(BooleanFunction::from_hex(n, hex).map_err(|_| unknown())?);
    }
    let n = match arity {
        Some(n) => n,
        None => {
            let digits = text.chars().count();
            match digits {
                0 => return Err(unknown()),
                1 => 2,
                d if d.is_power_of_two() => (4 * d).trailing_zeros() as usize,
                _ => return Err(unknown()),
            }
        }
    };
    BooleanFunction::from_hex(n, text).map_err(|_| unknown())
}

/// Text form used in reports: `n:hex` below two variables, plain hex otherwise.
pub fn function_text(f: &BooleanFunction) -> String {
    if f.arity() < 2 {
        format!("{}:{}", f.arity(), f.to_hex())
    } else {
        f.to_hex()
    }
}
