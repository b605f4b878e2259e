use core::fmt;
use core::ops::Not;

/// A card face. `Club < Heart` is the order used by every canonical form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Symbol {
    Club,
    Heart,
}

impl Symbol {
    /// Club encodes 0, Heart encodes 1.
    pub const fn of_bit(bit: Bit) -> Symbol {
        match bit {
            Bit::Zero => Symbol::Club,
            Bit::One => Symbol::Heart,
        }
    }

    pub const fn bit(self) -> Bit {
        match self {
            Symbol::Club => Bit::Zero,
            Symbol::Heart => Bit::One,
        }
    }

    /// The letter used by the text formats: `C` or `H`.
    pub const fn letter(self) -> char {
        match self {
            Symbol::Club => 'C',
            Symbol::Heart => 'H',
        }
    }

    pub const fn from_letter(c: char) -> Option<Symbol> {
        match c {
            'C' => Some(Symbol::Club),
            'H' => Some(Symbol::Heart),
            _ => None,
        }
    }

    /// Swaps the suit.
    pub const fn flipped(self) -> Symbol {
        match self {
            Symbol::Club => Symbol::Heart,
            Symbol::Heart => Symbol::Club,
        }
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// A Boolean value as it appears in assignments and truth tables.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Bit {
    Zero,
    One,
}

impl Bit {
    pub const fn new(value: bool) -> Bit {
        if value {
            Bit::One
        } else {
            Bit::Zero
        }
    }

    pub const fn as_bool(self) -> bool {
        matches!(self, Bit::One)
    }

    pub const fn as_u8(self) -> u8 {
        self as u8
    }

    pub const fn from_char(c: char) -> Option<Bit> {
        match c {
            '0' => Some(Bit::Zero),
            '1' => Some(Bit::One),
            _ => None,
        }
    }

    pub const fn to_char(self) -> char {
        match self {
            Bit::Zero => '0',
            Bit::One => '1',
        }
    }
}

impl Not for Bit {
    type Output = Bit;

    fn not(self) -> Bit {
        match self {
            Bit::Zero => Bit::One,
            Bit::One => Bit::Zero,
        }
    }
}

impl From<bool> for Bit {
    fn from(value: bool) -> Bit {
        Bit::new(value)
    }
}

impl From<Bit> for Symbol {
    fn from(bit: Bit) -> Symbol {
        Symbol::of_bit(bit)
    }
}

impl fmt::Display for Bit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_char())
    }
}
