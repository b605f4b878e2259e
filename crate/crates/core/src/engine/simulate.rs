use rand::{Rng, RngCore};

use super::{decode, EngineError, Protocol};
use crate::{Assignment, Bit, Word};

/// A source of uniform shifts in `0..m`.
///
/// Any [`RngCore`] is a source; tests can supply a fixed shift.
pub trait CutSource {
    fn draw_shift(&mut self, m: usize) -> usize;
}

impl<R: RngCore + ?Sized> CutSource for R {
    fn draw_shift(&mut self, m: usize) -> usize {
        self.gen_range(0..m)
    }
}

/// One execution of a protocol.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Trace {
    pub assignment: Assignment,
    /// The face-down input sequence; never seen by the players.
    pub hidden: Word,
    /// The cut offset; never seen by the players.
    pub shift: usize,
    pub opened: Word,
    pub output: Bit,
}

/// Applies a random cut. Draws exactly one shift from `source`.
pub fn apply_random_cut<S: CutSource + ?Sized>(word: &Word, source: &mut S) -> (usize, Word) {
    let shift = source.draw_shift(word.len());
    (shift, word.rotate(shift))
}

/// Lays out the input cards, cuts once and decodes the opened sequence.
pub fn run<S: CutSource + ?Sized>(
    p: &Protocol,
    a: &Assignment,
    source: &mut S,
) -> Result<Trace, EngineError> {
    let hidden = p.template().instantiate(a)?;
    let (shift, opened) = apply_random_cut(&hidden, source);
    let output = decode(&opened, p.rule())?;
    Ok(Trace {
        assignment: a.clone(),
        hidden,
        shift,
        opened,
        output,
    })
}
