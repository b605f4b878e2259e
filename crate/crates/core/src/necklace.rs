use alloc::vec;
use core::fmt;

use crate::Word;

/// The cyclic-equivalence class of a word, represented by its
/// lexicographically least rotation (`Club < Heart`).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Necklace {
    representative: Word,
    period: usize,
}

impl Necklace {
    pub fn representative(&self) -> &Word {
        &self.representative
    }

    /// Smallest positive shift fixing the word; also the number of distinct
    /// rotations.
    pub fn period(&self) -> usize {
        self.period
    }

    pub fn len(&self) -> usize {
        self.representative.len()
    }

    pub fn is_empty(&self) -> bool {
        self.representative.is_empty()
    }

    /// Whether `word` is a rotation of this necklace.
    pub fn contains(&self, word: &Word) -> bool {
        word.len() == self.len() && canonical(word) == *self
    }
}

impl fmt::Display for Necklace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.representative.fmt(f)
    }
}

/// Start index of the lexicographically least rotation of `s`.
///
/// Two-pointer minimum-expression scan, linear in `s.len()`. Ties between
/// equal rotations resolve to the smallest index.
pub fn least_rotation_index<T: Ord>(s: &[T]) -> usize {
    let m = s.len();
    if m < 2 {
        return 0;
    }
    let (mut i, mut j, mut k) = (0usize, 1usize, 0usize);
    while i < m && j < m && k < m {
        let a = &s[(i + k) % m];
        let b = &s[(j + k) % m];
        if a == b {
            k += 1;
            continue;
        }
        if a > b {
            i += k + 1;
        } else {
            j += k + 1;
        }
        if i == j {
            j += 1;
        }
        k = 0;
    }
    i.min(j)
}

/// Smallest `p > 0` with `rotate(s, p) == s`, via the prefix function.
pub fn period<T: Eq>(s: &[T]) -> usize {
    let m = s.len();
    if m == 0 {
        return 0;
    }
    let mut fail = vec![0usize; m];
    for q in 1..m {
        let mut k = fail[q - 1];
        while k > 0 && s[q] != s[k] {
            k = fail[k - 1];
        }
        if s[q] == s[k] {
            k += 1;
        }
        fail[q] = k;
    }
    let p = m - fail[m - 1];
    if m.is_multiple_of(p) {
        p
    } else {
        m
    }
}

/// Canonical necklace of `word`.
pub fn canonical(word: &Word) -> Necklace {
    let start = least_rotation_index(word.symbols());
    let representative = word.rotate(start);
    let period = period(representative.symbols()).max(1);
    Necklace {
        representative,
        period,
    }
}
