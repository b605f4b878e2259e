//! Single-cut full-open (SCFO) card protocols.
//!
//! An SCFO protocol lays out face-down cards according to a literal
//! template, applies one random cut (a uniformly random cyclic shift) and
//! then opens every card. The output is read off the cyclic-equivalence
//! class (necklace) of the opened sequence.
//!
//! This crate is `no_std` and only needs `alloc`. It contains
//!
//! - the card model: [`Symbol`], [`Bit`], [`Word`], [`Necklace`],
//!   [`Literal`], [`Template`], [`Assignment`] and [`BooleanFunction`];
//! - [`engine`]: protocols, the random-cut simulator, exact correctness and
//!   security verification, restriction and table rendering;
//! - [`search`]: exhaustive, symmetry-pruned protocol synthesis, a naive
//!   enumeration oracle and a classifier over all `n`-variable functions.
#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

mod distribution;
mod error;
mod function;
mod literal;
mod necklace;
mod symbol;
mod word;

pub mod engine;
pub mod search;

pub use distribution::{open_distribution, Distribution, Probability};
pub use error::Error;
pub use function::{Assignment, BooleanFunction};
pub use literal::{Literal, Template};
pub use necklace::{canonical, least_rotation_index, period, Necklace};
pub use symbol::{Bit, Symbol};
pub use word::Word;
