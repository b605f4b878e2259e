//! Command-line tooling for single-cut full-open card protocols: the
//! `.scfo` document format, function arguments, parallel search and
//! classification reports.

pub mod app;
pub mod dsl;
pub mod functions;
pub mod parallel;
pub mod report;

pub use dsl::{
    parse_protocol, serialize_document, serialize_protocol, ParseError, ParseErrorKind,
    ProtocolDocument,
};
pub use functions::{function_text, resolve_function};
pub use parallel::parallel_search;
