//! Classification report files.
//!
//! One line per function in truth-table order:
//!
//! ```text
//! 6 4 x !x y !y
//! 1 - NONE
//! ```
//!
//! Fields are the truth-table hex, the least card count and the witness
//! template in `.scfo` literal syntax, or `- NONE` when no protocol exists
//! within the card budget.

use std::fmt::Write as _;

use scfo_core::search::ClassificationReport;
use scfo_core::{BooleanFunction, Template};
use thiserror::Error;

use crate::dsl::{default_variable_names, parse_protocol, template_text};
use crate::functions::{function_text, resolve_function};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReportLine {
    pub function: BooleanFunction,
    pub witness: Option<(usize, Template)>,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("line {line}: {message}")]
pub struct ReportError {
    pub line: usize,
    pub message: String,
}

pub fn write_report(report: &ClassificationReport) -> String {
    let names = default_variable_names(report.n);
    let mut out = String::new();
    for r in &report.records {
        let hex = function_text(&r.function);
        match (&r.minimal_cards, &r.witness) {
            (Some(m), Some(p)) => {
                writeln!(out, "{hex} {m} {}", template_text(p.template(), &names)).unwrap()
            }
            _ => writeln!(out, "{hex} - NONE").unwrap(),
        }
    }
    out
}

pub fn read_report(text: &str, n: usize) -> Result<Vec<ReportLine>, ReportError> {
    let names = default_variable_names(n);
    let mut lines = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let fail = |message: String| ReportError {
            line: i + 1,
            message,
        };
        let mut fields = raw.splitn(3, ' ');
        let (Some(hex), Some(m), Some(rest)) = (fields.next(), fields.next(), fields.next()) else {
            return Err(fail("expected three fields".into()));
        };
        let function = resolve_function(hex, Some(n)).map_err(|e| fail(e.to_string()))?;
        let witness = if m == "-" && rest == "NONE" {
            None
        } else {
            let m: usize = m
                .parse()
                .map_err(|_| fail(format!("bad card count {m:?}")))?;
            // reuse the document parser for literal syntax
            let doc = format!(
                "protocol r\nvars {}\ntemplate {rest}\noutput 0: {}\n",
                names.join(" "),
                "C".repeat(m)
            );
            let parsed = parse_protocol(&doc).map_err(|e| fail(e.kind.to_string()))?;
            Some((m, parsed.protocol.template().clone()))
        };
        lines.push(ReportLine { function, witness });
    }
    Ok(lines)
}
