use alloc::vec::Vec;

use super::{EngineError, RuleError};
use crate::{canonical, Bit, Necklace, Word};

/// Maps the necklace of the opened sequence to the output bit.
///
/// Holds one or two entries with distinct bits and distinct necklaces of a
/// common length, sorted by bit.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OutputRule {
    entries: Vec<(Necklace, Bit)>,
}

impl OutputRule {
    pub fn new(mut entries: Vec<(Necklace, Bit)>) -> Result<OutputRule, RuleError> {
        match entries.len() {
            0 => return Err(RuleError::Empty),
            1 | 2 => {}
            n => return Err(RuleError::TooManyEntries(n)),
        }
        entries.sort_by_key(|(_, b)| *b);
        if let [(n0, b0), (n1, b1)] = entries.as_slice() {
            if b0 == b1 {
                return Err(RuleError::DuplicateBit(*b0));
            }
            if n0.len() != n1.len() {
                return Err(RuleError::LengthMismatch {
                    expected: n0.len(),
                    found: n1.len(),
                });
            }
            if n0 == n1 {
                return Err(RuleError::DuplicateNecklace(n0.clone()));
            }
        }
        Ok(OutputRule { entries })
    }

    /// Builds a rule from class words, any rotation accepted.
    pub fn from_words<'a>(
        words: impl IntoIterator<Item = (Bit, &'a Word)>,
    ) -> Result<OutputRule, RuleError> {
        OutputRule::new(words.into_iter().map(|(b, w)| (canonical(w), b)).collect())
    }

    pub fn entries(&self) -> &[(Necklace, Bit)] {
        &self.entries
    }

    /// Card count of the class words.
    pub fn len(&self) -> usize {
        self.entries[0].0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn necklace_for(&self, bit: Bit) -> Option<&Necklace> {
        self.entries.iter().find(|(_, b)| *b == bit).map(|(n, _)| n)
    }

    pub fn lookup(&self, necklace: &Necklace) -> Option<Bit> {
        self.entries
            .iter()
            .find(|(n, _)| n == necklace)
            .map(|(_, b)| *b)
    }

    /// The same classes with output bits exchanged.
    pub fn swapped(&self) -> OutputRule {
        let mut entries: Vec<_> = self.entries.iter().map(|(n, b)| (n.clone(), !*b)).collect();
        entries.sort_by_key(|(_, b)| *b);
        OutputRule { entries }
    }
}

/// Reads the output bit off an opened word.
pub fn decode(opened: &Word, rule: &OutputRule) -> Result<Bit, EngineError> {
    rule.lookup(&canonical(opened))
        .ok_or_else(|| EngineError::UnknownClass {
            word: opened.clone(),
        })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn construction_errors() {
        assert_eq!(OutputRule::new(vec![]), Err(RuleError::Empty));
        let a = w("CHCH");
        let b = w("HCHC");
        assert_eq!(
            OutputRule::from_words([(Bit::Zero, &a), (Bit::One, &b)]),
            Err(RuleError::DuplicateNecklace(canonical(&a)))
        );
        let c = w("CCHH");
        assert_eq!(
            OutputRule::from_words([(Bit::One, &a), (Bit::One, &c)]),
            Err(RuleError::DuplicateBit(Bit::One))
        );
        let d = w("CCH");
        assert!(matches!(
            OutputRule::from_words([(Bit::Zero, &a), (Bit::One, &d)]),
            Err(RuleError::LengthMismatch { .. })
        ));
    }

    #[test]
    fn decode_any_rotation() {
        let zero = w("HCHCH");
        let one = w("HHHCC");
        let rule = OutputRule::from_words([(Bit::Zero, &zero), (Bit::One, &one)]).unwrap();
        assert_eq!(decode(&w("HHHCC"), &rule), Ok(Bit::One));
        assert_eq!(decode(&w("CHCHH"), &rule), Ok(Bit::Zero));
        assert_eq!(
            decode(&w("CCCCC"), &rule),
            Err(EngineError::UnknownClass { word: w("CCCCC") })
        );
        assert_eq!(rule.swapped().lookup(&canonical(&one)), Some(Bit::Zero));
    }
}
