//! Protocols, the random-cut simulator and exact verification.
//!
//! A [`Protocol`] is a [`Template`](crate::Template) plus an [`OutputRule`]
//! mapping necklaces to output bits. [`verify`] checks it exhaustively
//! against a [`BooleanFunction`](crate::BooleanFunction): correctness
//! (every input decodes to `f(a)`) and security (the opened sequence's
//! distribution depends only on `f(a)`, which for a uniform cut means all
//! inputs with the same output share one necklace).

mod error;
pub mod fixtures;
mod protocol;
mod rule;
mod simulate;
mod table;
mod verify;

pub use error::{EngineError, RuleError};
pub use protocol::{restrict, Protocol};
pub use rule::{decode, OutputRule};
pub use simulate::{apply_random_cut, run, CutSource, Trace};
pub use table::{render_table, TableRow};
pub use verify::{
    derive_output_rule, security_by_distribution, verify, Failure, VerificationReport,
    VerificationRow,
};
