use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use super::{EngineError, OutputRule, Protocol};
use crate::{
    canonical, open_distribution, Assignment, Bit, BooleanFunction, Error, Necklace, Template, Word,
};

fn check_arity(template: &Template, f: &BooleanFunction) -> Result<(), Error> {
    if template.arity() != f.arity() {
        return Err(Error::ArityMismatch {
            expected: f.arity(),
            found: template.arity(),
        });
    }
    Ok(())
}

/// The unique output rule under which `t` is a correct and secure protocol
/// for `f`, if one exists.
///
/// Each output class is anchored at its first input in big-endian order.
/// Anchors sharing a necklace are reported as
/// [`EngineError::IndistinguishableClasses`]; otherwise the first input
/// whose necklace differs from its class anchor is reported as
/// [`EngineError::NonConstantClass`].
pub fn derive_output_rule(t: &Template, f: &BooleanFunction) -> Result<OutputRule, EngineError> {
    check_arity(t, f)?;
    let mut rows = Vec::with_capacity(1 << f.arity());
    for a in Assignment::all(f.arity()) {
        let necklace = canonical(&t.instantiate(&a)?);
        let output = f.eval(&a)?;
        rows.push((a, output, necklace));
    }
    let anchor = |b: Bit| rows.iter().find(|(_, o, _)| *o == b);
    let anchors = [anchor(Bit::Zero), anchor(Bit::One)];
    if let [Some((_, _, n0)), Some((_, _, n1))] = anchors {
        if n0 == n1 {
            return Err(EngineError::IndistinguishableClasses {
                necklace: n0.clone(),
            });
        }
    }
    for (a, output, necklace) in &rows {
        let (first, _, expected) = anchors[output.as_u8() as usize].expect("class is non-empty");
        if necklace != expected {
            return Err(EngineError::NonConstantClass {
                output: *output,
                first: first.clone(),
                second: a.clone(),
            });
        }
    }
    let entries = anchors
        .iter()
        .flatten()
        .map(|(_, b, n)| (n.clone(), *b))
        .collect();
    Ok(OutputRule::new(entries)?)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationRow {
    pub assignment: Assignment,
    pub word: Word,
    pub necklace: Necklace,
    pub expected: Bit,
    /// `None` when the opened necklace matches no rule entry.
    pub decoded: Option<Bit>,
}

/// One reason a protocol fails verification.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Failure {
    WrongOutput {
        assignment: Assignment,
        expected: Bit,
        decoded: Bit,
    },
    Undecodable {
        assignment: Assignment,
        word: Word,
    },
    /// Same output, different necklaces: the opened sequence leaks input.
    ClassSplit {
        output: Bit,
        first: Assignment,
        second: Assignment,
    },
    /// A necklace reached by inputs of both outputs.
    ClassCollision {
        necklace: Necklace,
        zero: Assignment,
        one: Assignment,
    },
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::WrongOutput {
                assignment,
                expected,
                decoded,
            } => {
                write!(
                    f,
                    "input {assignment} decodes to {decoded}, expected {expected}"
                )
            }
            Failure::Undecodable { assignment, word } => {
                write!(
                    f,
                    "input {assignment} opens to {word}, which matches no output class"
                )
            }
            Failure::ClassSplit {
                output,
                first,
                second,
            } => write!(
                f,
                "inputs {first} and {second} both output {output} but open to different necklaces"
            ),
            Failure::ClassCollision {
                necklace,
                zero,
                one,
            } => write!(
                f,
                "inputs {zero} (output 0) and {one} (output 1) both open to necklace {necklace}"
            ),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub rows: Vec<VerificationRow>,
    pub correct: bool,
    pub secure: bool,
    pub failures: Vec<Failure>,
    /// Constant cards in the template.
    pub constants: usize,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.correct && self.secure
    }

    pub fn failure_reasons(&self) -> Vec<String> {
        use alloc::string::ToString;
        self.failures.iter().map(|f| f.to_string()).collect()
    }
}

/// Exhaustive correctness and security check over all `2^n` inputs.
pub fn verify(p: &Protocol, f: &BooleanFunction) -> Result<VerificationReport, Error> {
    check_arity(p.template(), f)?;
    let mut rows = Vec::with_capacity(1 << f.arity());
    for a in Assignment::all(f.arity()) {
        let word = p.template().instantiate(&a)?;
        let necklace = canonical(&word);
        let decoded = p.rule().lookup(&necklace);
        let expected = f.eval(&a)?;
        rows.push(VerificationRow {
            assignment: a,
            word,
            necklace,
            expected,
            decoded,
        });
    }

    let mut failures = Vec::new();
    let mut correct = true;
    for row in &rows {
        match row.decoded {
            Some(d) if d == row.expected => {}
            Some(d) => {
                correct = false;
                failures.push(Failure::WrongOutput {
                    assignment: row.assignment.clone(),
                    expected: row.expected,
                    decoded: d,
                });
            }
            None => {
                correct = false;
                failures.push(Failure::Undecodable {
                    assignment: row.assignment.clone(),
                    word: row.word.clone(),
                });
            }
        }
    }

    let mut secure = true;
    let mut first_of: [Option<&VerificationRow>; 2] = [None, None];
    for row in &rows {
        let slot = &mut first_of[row.expected.as_u8() as usize];
        match slot {
            None => *slot = Some(row),
            Some(first) if first.necklace != row.necklace => {
                secure = false;
                failures.push(Failure::ClassSplit {
                    output: row.expected,
                    first: first.assignment.clone(),
                    second: row.assignment.clone(),
                });
            }
            Some(_) => {}
        }
    }

    for zero in rows.iter().filter(|r| r.expected == Bit::Zero) {
        if let Some(one) = rows
            .iter()
            .find(|r| r.expected == Bit::One && r.necklace == zero.necklace)
        {
            correct = false;
            failures.push(Failure::ClassCollision {
                necklace: zero.necklace.clone(),
                zero: zero.assignment.clone(),
                one: one.assignment.clone(),
            });
        }
    }

    Ok(VerificationReport {
        rows,
        correct,
        secure,
        failures,
        constants: p.template().constant_count(),
    })
}

/// Security decided by comparing exact opened-sequence distributions of all
/// inputs that share an output, without going through necklaces.
pub fn security_by_distribution(p: &Protocol, f: &BooleanFunction) -> Result<bool, Error> {
    check_arity(p.template(), f)?;
    let mut reference = [None, None];
    for a in Assignment::all(f.arity()) {
        let dist = open_distribution(&p.template().instantiate(&a)?);
        let slot = &mut reference[f.eval(&a)?.as_u8() as usize];
        match slot {
            None => *slot = Some(dist),
            Some(r) if *r != dist => return Ok(false),
            Some(_) => {}
        }
    }
    Ok(true)
}
