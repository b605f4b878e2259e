//! The six reference protocols and their target functions.
//!
//! Variables `x, y, z, w` are indices `0, 1, 2, 3`.

use alloc::vec::Vec;

use super::{OutputRule, Protocol};
use crate::{Bit, BooleanFunction, Literal, Template, Word};

use Literal::{Negative as Neg, Positive as Pos};

const X: usize = 0;
const Y: usize = 1;
const Z: usize = 2;
const W: usize = 3;

const ONE: Literal = Literal::Constant(Bit::One);
const ZERO: Literal = Literal::Constant(Bit::Zero);

/// Names accepted by [`builtin_function`].
pub const FUNCTION_NAMES: [&str; 6] = ["xor2", "and2", "eq3", "xor3", "paper-f2", "if-not"];

/// Names accepted by [`builtin_protocol`].
pub const PROTOCOL_NAMES: [&str; 6] = [
    "xor2",
    "five-card-trick",
    "six-card-trick",
    "protocol1",
    "protocol2",
    "protocol3",
];

fn build(name: &str, n: usize, literals: Vec<Literal>, zero: &str, one: &str) -> Protocol {
    let template = Template::new(n, literals).expect("fixture template");
    let zero: Word = zero.parse().expect("fixture word");
    let one: Word = one.parse().expect("fixture word");
    let rule =
        OutputRule::from_words([(Bit::Zero, &zero), (Bit::One, &one)]).expect("fixture rule");
    Protocol::new(name, template, rule).expect("fixture protocol")
}

fn b(bits: &[Bit], i: usize) -> bool {
    bits[i].as_bool()
}

pub fn xor2() -> BooleanFunction {
    BooleanFunction::from_fn(2, |a| b(a, X) ^ b(a, Y))
}

pub fn and2() -> BooleanFunction {
    BooleanFunction::from_fn(2, |a| b(a, X) & b(a, Y))
}

/// 1 iff all three inputs are equal.
pub fn eq3() -> BooleanFunction {
    BooleanFunction::from_fn(3, |a| b(a, X) == b(a, Y) && b(a, Y) == b(a, Z))
}

pub fn xor3() -> BooleanFunction {
    BooleanFunction::from_fn(3, |a| b(a, X) ^ b(a, Y) ^ b(a, Z))
}

/// `x̄yw̄ ∨ ȳzw̄ ∨ xȳw ∨ yz̄w`.
pub fn f2() -> BooleanFunction {
    BooleanFunction::from_fn(4, |a| {
        let (x, y, z, w) = (b(a, X), b(a, Y), b(a, Z), b(a, W));
        (!x && y && !w) || (!y && z && !w) || (x && !y && w) || (y && !z && w)
    })
}

/// `xȳ ∨ yz̄`: `x` when `y = 0`, `z̄` when `y = 1`.
pub fn if_not() -> BooleanFunction {
    BooleanFunction::from_fn(3, |a| {
        let (x, y, z) = (b(a, X), b(a, Y), b(a, Z));
        (x && !y) || (y && !z)
    })
}

pub fn builtin_function(name: &str) -> Option<BooleanFunction> {
    Some(match name {
        "xor2" => xor2(),
        "and2" => and2(),
        "eq3" => eq3(),
        "xor3" => xor3(),
        "paper-f2" | "f2" => f2(),
        "if-not" => if_not(),
        _ => return None,
    })
}

/// `x x̄ y ȳ` for `x ⊕ y`.
pub fn xor2_protocol() -> Protocol {
    build(
        "xor2",
        2,
        alloc::vec![Pos(X), Neg(X), Pos(Y), Neg(Y)],
        "HCHC",
        "HHCC",
    )
}

/// `x̄ x ♥ y ȳ` for `xy`.
pub fn five_card_trick() -> Protocol {
    build(
        "five-card-trick",
        2,
        alloc::vec![Neg(X), Pos(X), ONE, Pos(Y), Neg(Y)],
        "HCHCH",
        "HHHCC",
    )
}

/// `x ȳ z x̄ y z̄` for `(x = y = z)?`. All-equal inputs open to the
/// alternating necklace, so that class outputs 1.
pub fn six_card_trick() -> Protocol {
    build(
        "six-card-trick",
        3,
        alloc::vec![Pos(X), Neg(Y), Pos(Z), Neg(X), Pos(Y), Neg(Z)],
        "HHHCCC",
        "HCHCHC",
    )
}

/// `x y x̄ z x ȳ x̄ z̄` for `x ⊕ y ⊕ z`; uses the `x` pair twice.
pub fn protocol1() -> Protocol {
    build(
        "protocol1",
        3,
        alloc::vec![
            Pos(X),
            Pos(Y),
            Neg(X),
            Pos(Z),
            Pos(X),
            Neg(Y),
            Neg(X),
            Neg(Z)
        ],
        "CCHCCHHH",
        "HHCHHCCC",
    )
}

/// `x y z w x̄ ȳ z̄ w̄` for [`f2`].
pub fn protocol2() -> Protocol {
    build(
        "protocol2",
        4,
        alloc::vec![
            Pos(X),
            Pos(Y),
            Pos(Z),
            Pos(W),
            Neg(X),
            Neg(Y),
            Neg(Z),
            Neg(W)
        ],
        "HHHHCCCC",
        "CCHCHHCH",
    )
}

/// `x y z 1 x̄ ȳ z̄ 0` for [`if_not`]: [`protocol2`] with `w = 1`.
pub fn protocol3() -> Protocol {
    build(
        "protocol3",
        3,
        alloc::vec![Pos(X), Pos(Y), Pos(Z), ONE, Neg(X), Neg(Y), Neg(Z), ZERO],
        "HHHHCCCC",
        "CCHCHHCH",
    )
}

/// A reference protocol together with the function it computes.
pub fn builtin_protocol(name: &str) -> Option<(Protocol, BooleanFunction)> {
    Some(match name {
        "xor2" => (xor2_protocol(), xor2()),
        "five-card-trick" => (five_card_trick(), and2()),
        "six-card-trick" => (six_card_trick(), eq3()),
        "protocol1" => (protocol1(), xor3()),
        "protocol2" => (protocol2(), f2()),
        "protocol3" => (protocol3(), if_not()),
        _ => return None,
    })
}

/// All reference protocols with their functions.
pub fn all() -> Vec<(Protocol, BooleanFunction)> {
    PROTOCOL_NAMES
        .iter()
        .map(|n| builtin_protocol(n).expect("listed fixture"))
        .collect()
}
