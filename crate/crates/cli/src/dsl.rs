//! The `.scfo` protocol description format.
//!
//! ```text
//! # Protocol 1 style layout for x ⊕ y ⊕ z
//! protocol protocol1
//! vars x y z
//! template x y !x z x !y !x !z
//! output 0: CCHCCHHH
//! output 1: HHCHHCCC
//! function xor3
//! ```
//!
//! Statements come one per line in the order `protocol`, `vars`,
//! `template`, one or two `output`s and an optional `function`. `#` starts
//! a comment; blank lines are ignored. Output words may be any rotation of
//! the class and are stored canonically.

use std::fmt::Write as _;

use scfo_core::engine::{OutputRule, Protocol, RuleError};
use scfo_core::{Bit, BooleanFunction, Literal, Template, Word};
use thiserror::Error;

use crate::functions::{resolve_function, FunctionSpecError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    #[error("expected {expected}, found {found}")]
    Expected { expected: String, found: String },
    #[error("invalid name {0:?}")]
    InvalidName(String),
    #[error("variable {0:?} declared twice")]
    DuplicateVariable(String),
    #[error("unknown variable {0:?}")]
    UnknownVariable(String),
    #[error("invalid class word {0:?}, expected letters C and H")]
    InvalidWord(String),
    #[error("class word has {found} cards, template has {expected}")]
    WrongWordLength { expected: usize, found: usize },
    #[error("output {0} declared twice")]
    DuplicateOutput(Bit),
    #[error("both outputs use the same cyclic class")]
    SameClass,
    #[error(transparent)]
    Function(#[from] FunctionSpecError),
}

impl ParseErrorKind {
    /// Stable identifier for scripts.
    pub fn code(&self) -> &'static str {
        match self {
            ParseErrorKind::Expected { .. } => "syntax",
            ParseErrorKind::InvalidName(_) => "invalid-name",
            ParseErrorKind::DuplicateVariable(_) => "duplicate-variable",
            ParseErrorKind::UnknownVariable(_) => "unknown-variable",
            ParseErrorKind::InvalidWord(_) => "invalid-word",
            ParseErrorKind::WrongWordLength { .. } => "word-length",
            ParseErrorKind::DuplicateOutput(_) => "duplicate-output",
            ParseErrorKind::SameClass => "same-class",
            ParseErrorKind::Function(FunctionSpecError::Unknown(_)) => "unknown-function",
            ParseErrorKind::Function(FunctionSpecError::Arity { .. }) => "function-arity",
        }
    }

    pub fn is_syntax(&self) -> bool {
        matches!(
            self,
            ParseErrorKind::Expected { .. } | ParseErrorKind::InvalidName(_)
        )
    }
}

/// A positioned parse error; line and column are 1-based.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("{line}:{column}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub kind: ParseErrorKind,
}

/// The function named by a `function` line, with its source text.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FunctionRef {
    pub text: String,
    pub function: BooleanFunction,
}

/// A parsed `.scfo` file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProtocolDocument {
    pub variables: Vec<String>,
    pub protocol: Protocol,
    pub function: Option<FunctionRef>,
}

#[derive(Debug, Clone, Copy)]
struct Token<'a> {
    text: &'a str,
    line: usize,
    column: usize,
}

struct Statement<'a> {
    tokens: Vec<Token<'a>>,
    line: usize,
    /// Column just past the last character of the line.
    eol: usize,
}

fn lex(text: &str) -> Vec<Statement<'_>> {
    let mut statements = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("").trim_end();
        let mut tokens = Vec::new();
        let mut start: Option<(usize, usize)> = None; // (byte, column)
        let mut column = 0;
        for (byte, c) in content.char_indices() {
            column += 1;
            let breaks = c.is_whitespace() || c == ':';
            if breaks {
                if let Some((b, col)) = start.take() {
                    tokens.push(Token {
                        text: &content[b..byte],
                        line,
                        column: col,
                    });
                }
                if c == ':' {
                    tokens.push(Token {
                        text: ":",
                        line,
                        column,
                    });
                }
            } else if start.is_none() {
                start = Some((byte, column));
            }
        }
        if let Some((b, col)) = start {
            tokens.push(Token {
                text: &content[b..],
                line,
                column: col,
            });
        }
        if !tokens.is_empty() {
            statements.push(Statement {
                tokens,
                line,
                eol: column + 1,
            });
        }
    }
    statements
}

fn is_name(s: &str) -> bool {
    let mut chars = s.chars();
    chars
        .next()
        .is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '-')
}

fn err(line: usize, column: usize, kind: ParseErrorKind) -> ParseError {
    ParseError { line, column, kind }
}

fn at(token: &Token<'_>, kind: ParseErrorKind) -> ParseError {
    err(token.line, token.column, kind)
}

fn expected(token: &Token<'_>, what: &str) -> ParseError {
    at(
        token,
        ParseErrorKind::Expected {
            expected: what.to_string(),
            found: format!("{:?}", token.text),
        },
    )
}

struct Cursor<'s, 'a> {
    statement: &'s Statement<'a>,
    next: usize,
}

impl<'s, 'a> Cursor<'s, 'a> {
    fn new(statement: &'s Statement<'a>) -> Self {
        Cursor { statement, next: 0 }
    }

    fn peek(&self) -> Option<&'s Token<'a>> {
        self.statement.tokens.get(self.next)
    }

    fn take(&mut self, what: &str) -> Result<&'s Token<'a>, ParseError> {
        match self.statement.tokens.get(self.next) {
            Some(t) => {
                self.next += 1;
                Ok(t)
            }
            None => Err(err(
                self.statement.line,
                self.statement.eol,
                ParseErrorKind::Expected {
                    expected: what.to_string(),
                    found: "end of line".into(),
                },
            )),
        }
    }

    fn keyword(&mut self, kw: &str) -> Result<(), ParseError> {
        let t = self.take(&format!("{kw:?}"))?;
        if t.text != kw {
            return Err(expected(t, &format!("{kw:?}")));
        }
        Ok(())
    }

    fn name(&mut self, what: &str) -> Result<&'s Token<'a>, ParseError> {
        let t = self.take(what)?;
        if !is_name(t.text) {
            return Err(at(t, ParseErrorKind::InvalidName(t.text.to_string())));
        }
        Ok(t)
    }

    fn done(&self) -> Result<(), ParseError> {
        match self.peek() {
            Some(t) => Err(expected(t, "end of line")),
            None => Ok(()),
        }
    }

    fn rest(&mut self) -> &'s [Token<'a>] {
        let rest = &self.statement.tokens[self.next..];
        self.next = self.statement.tokens.len();
        rest
    }
}

struct Statements<'s, 'a> {
    all: &'s [Statement<'a>],
    next: usize,
    /// Position reported for a premature end of input.
    end: (usize, usize),
}

impl<'s, 'a> Statements<'s, 'a> {
    fn take(&mut self, what: &str) -> Result<Cursor<'s, 'a>, ParseError> {
        match self.all.get(self.next) {
            Some(s) => {
                self.next += 1;
                Ok(Cursor::new(s))
            }
            None => Err(err(
                self.end.0,
                self.end.1,
                ParseErrorKind::Expected {
                    expected: what.to_string(),
                    found: "end of input".into(),
                },
            )),
        }
    }

    fn peek_keyword(&self) -> Option<&'a str> {
        self.all.get(self.next).map(|s| s.tokens[0].text)
    }
}

fn parse_literal(t: &Token<'_>, variables: &[String]) -> Result<Literal, ParseError> {
    match t.text {
        "0" => return Ok(Literal::Constant(Bit::Zero)),
        "1" => return Ok(Literal::Constant(Bit::One)),
        _ => {}
    }
    let (negated, name) = match t.text.strip_prefix('!') {
        Some(rest) => (true, rest),
        None => (false, t.text),
    };
    if !is_name(name) {
        return Err(expected(t, "literal (name, !name, 0 or 1)"));
    }
    let index = variables
        .iter()
        .position(|v| v == name)
        .ok_or_else(|| at(t, ParseErrorKind::UnknownVariable(name.to_string())))?;
    Ok(if negated {
        Literal::Negative(index)
    } else {
        Literal::Positive(index)
    })
}

fn parse_output(
    cursor: &mut Cursor<'_, '_>,
    m: usize,
) -> Result<(Bit, Word, Token<'static>), ParseError> {
    cursor.keyword("output")?;
    let bit_token = cursor.take("output bit 0 or 1")?;
    let bit = match bit_token.text {
        "0" => Bit::Zero,
        "1" => Bit::One,
        _ => return Err(expected(bit_token, "output bit 0 or 1")),
    };
    let colon = cursor.take("\":\"")?;
    if colon.text != ":" {
        return Err(expected(colon, "\":\""));
    }
    let word_token = cursor.take("class word")?;
    let word: Word = word_token.text.parse().map_err(|_| {
        at(
            word_token,
            ParseErrorKind::InvalidWord(word_token.text.to_string()),
        )
    })?;
    if word.len() != m {
        return Err(at(
            word_token,
            ParseErrorKind::WrongWordLength {
                expected: m,
                found: word.len(),
            },
        ));
    }
    cursor.done()?;
    let pos = Token {
        text: "",
        line: word_token.line,
        column: word_token.column,
    };
    Ok((bit, word, pos))
}

/// Parses a `.scfo` document.
pub fn parse_protocol(text: &str) -> Result<ProtocolDocument, ParseError> {
    let statements = lex(text);
    let end = (text.lines().count() + 1, 1);
    let mut stmts = Statements {
        all: &statements,
        next: 0,
        end,
    };

    let mut header = stmts.take("\"protocol\"")?;
    header.keyword("protocol")?;
    let name = header.name("protocol name")?.text.to_string();
    header.done()?;

    let mut vars = stmts.take("\"vars\"")?;
    vars.keyword("vars")?;
    let mut variables: Vec<String> = Vec::new();
    let first = vars.name("variable name")?;
    for t in std::iter::once(first).chain(vars.rest().iter()) {
        if !is_name(t.text) || t.text.contains('-') {
            return Err(at(t, ParseErrorKind::InvalidName(t.text.to_string())));
        }
        if variables.iter().any(|v| v == t.text) {
            return Err(at(t, ParseErrorKind::DuplicateVariable(t.text.to_string())));
        }
        variables.push(t.text.to_string());
    }

    let mut tmpl = stmts.take("\"template\"")?;
    tmpl.keyword("template")?;
    let first = tmpl.take("literal")?;
    let literals = std::iter::once(first)
        .chain(tmpl.rest().iter())
        .map(|t| parse_literal(t, &variables))
        .collect::<Result<Vec<_>, _>>()?;
    let template =
        Template::new(variables.len(), literals).expect("literals were resolved against vars");
    let m = template.len();

    let mut classes = vec![parse_output(&mut stmts.take("\"output\"")?, m)?];
    if stmts.peek_keyword() == Some("output") {
        classes.push(parse_output(&mut stmts.take("\"output\"")?, m)?);
    }
    let rule = OutputRule::from_words(classes.iter().map(|(b, w, _)| (*b, w))).map_err(|e| {
        let (_, _, pos) = classes.last().expect("one class parsed");
        let kind = match e {
            RuleError::DuplicateBit(b) => ParseErrorKind::DuplicateOutput(b),
            _ => ParseErrorKind::SameClass,
        };
        err(pos.line, pos.column, kind)
    })?;

    let mut function = None;
    if stmts.peek_keyword() == Some("function") {
        let mut line = stmts.take("\"function\"")?;
        line.keyword("function")?;
        let t = line.take("function name or truth-table hex")?;
        let f = resolve_function(t.text, Some(variables.len())).map_err(|e| at(t, e.into()))?;
        line.done()?;
        function = Some(FunctionRef {
            text: t.text.to_string(),
            function: f,
        });
    }

    if let Some(extra) = statements.get(stmts.next) {
        return Err(expected(&extra.tokens[0], "end of input"));
    }

    let protocol =
        Protocol::new(name, template, rule).expect("word lengths checked against template");
    Ok(ProtocolDocument {
        variables,
        protocol,
        function,
    })
}

/// `x y z w` for up to four variables, `x0 x1 ...` beyond.
pub fn default_variable_names(n: usize) -> Vec<String> {
    if n <= 4 {
        ["x", "y", "z", "w"][..n]
            .iter()
            .map(|s| s.to_string())
            .collect()
    } else {
        (0..n).map(|i| format!("x{i}")).collect()
    }
}

/// A literal in DSL syntax.
pub fn literal_text(l: Literal, names: &[String]) -> String {
    match l {
        Literal::Constant(b) => b.to_string(),
        Literal::Positive(i) => names[i].clone(),
        Literal::Negative(i) => format!("!{}", names[i]),
    }
}

/// A template in DSL syntax, literals separated by single spaces.
pub fn template_text(t: &Template, names: &[String]) -> String {
    t.literals()
        .iter()
        .map(|&l| literal_text(l, names))
        .collect::<Vec<_>>()
        .join(" ")
}

fn write_document(p: &Protocol, names: &[String], function: Option<&str>) -> String {
    let mut out = String::new();
    writeln!(out, "protocol {}", p.name()).unwrap();
    writeln!(out, "vars {}", names.join(" ")).unwrap();
    writeln!(out, "template {}", template_text(p.template(), names)).unwrap();
    for (necklace, bit) in p.rule().entries() {
        writeln!(out, "output {bit}: {necklace}").unwrap();
    }
    if let Some(f) = function {
        writeln!(out, "function {f}").unwrap();
    }
    out
}

/// Canonical document for `p` with default variable names.
pub fn serialize_protocol(p: &Protocol) -> String {
    write_document(p, &default_variable_names(p.arity()), None)
}

/// Canonical form of a parsed document: comments and spacing dropped,
/// class words replaced by their least rotations.
pub fn serialize_document(doc: &ProtocolDocument) -> String {
    write_document(
        &doc.protocol,
        &doc.variables,
        doc.function.as_ref().map(|f| f.text.as_str()),
    )
}
