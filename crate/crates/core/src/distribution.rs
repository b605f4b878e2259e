use alloc::collections::BTreeMap;
use num_rational::Ratio;

use crate::Word;

/// An exact probability.
pub type Probability = Ratio<u64>;

/// Exact distribution of opened sequences, keyed by word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Distribution(BTreeMap<Word, Probability>);

impl Distribution {
    pub fn get(&self, word: &Word) -> Probability {
        self.0
            .get(word)
            .copied()
            .unwrap_or_else(|| Ratio::from_integer(0))
    }

    /// Support points in lexicographic order.
    pub fn iter(&self) -> impl Iterator<Item = (&Word, &Probability)> {
        self.0.iter()
    }

    pub fn support_len(&self) -> usize {
        self.0.len()
    }

    pub fn total(&self) -> Probability {
        self.0
            .values()
            .fold(Ratio::from_integer(0), |acc, p| acc + p)
    }
}

/// Distribution of the opened sequence after a uniform random cut of
/// `word`, computed by enumerating all `m` shifts.
pub fn open_distribution(word: &Word) -> Distribution {
    let m = word.len() as u64;
    let mut counts: BTreeMap<Word, u64> = BTreeMap::new();
    for shift in 0..word.len() {
        *counts.entry(word.rotate(shift)).or_default() += 1;
    }
    Distribution(
        counts
            .into_iter()
            .map(|(w, c)| (w, Ratio::new(c, m.max(1))))
            .collect(),
    )
}
