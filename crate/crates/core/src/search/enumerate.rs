use alloc::vec;
use alloc::vec::Vec;

use super::{DeckMode, SearchConfig, SearchError, SearchStats, MAX_VARIABLES};
use crate::{least_rotation_index, Literal, Template};

/// Canonical key of an `m`-bit packed word (first card most significant):
/// the least of its rotations.
pub(crate) fn necklace_key(word: u32, m: usize) -> u32 {
    let mask = if m == 32 { u32::MAX } else { (1u32 << m) - 1 };
    let mut best = word;
    let mut r = word;
    for _ in 1..m {
        r = ((r << 1) | (r >> (m - 1))) & mask;
        best = best.min(r);
    }
    best
}

/// The template space of one search: alphabet, deck limits, symmetry
/// filters and the truth column of every literal.
pub(crate) struct Space {
    pub n: usize,
    pub m: usize,
    deck: DeckMode,
    max_mult: usize,
    constants: usize,
    dedup_rotation: bool,
    dedup_color: bool,
    /// Allowed literal codes, ascending.
    alphabet: Vec<usize>,
    /// Bit `a` of `columns[code]` is the literal's value under assignment `a`.
    columns: Vec<u64>,
}

impl Space {
    pub fn new(n: usize, cfg: &SearchConfig) -> Result<Space, SearchError> {
        cfg.validate()?;
        if n == 0 || n > MAX_VARIABLES {
            return Err(SearchError::UnsupportedArity {
                n,
                max: MAX_VARIABLES,
            });
        }
        let constants = cfg.effective_constants();
        let first = if constants > 0 { 0 } else { 2 };
        let alphabet: Vec<usize> = (first..2 + 2 * n).collect();
        let rows = 1usize << n;
        let columns = (0..2 + 2 * n)
            .map(|code| {
                (0..rows).fold(0u64, |acc, a| {
                    let value = match Literal::from_code(code) {
                        Literal::Constant(b) => b.as_bool(),
                        Literal::Positive(i) => (a >> (n - 1 - i)) & 1 == 1,
                        Literal::Negative(i) => (a >> (n - 1 - i)) & 1 == 0,
                    };
                    acc | (u64::from(value) << a)
                })
            })
            .collect();
        Ok(Space {
            n,
            m: cfg.cards,
            deck: cfg.deck,
            max_mult: cfg.max_pair_multiplicity.unwrap_or(usize::MAX),
            constants,
            dedup_rotation: cfg.dedup_template_rotation,
            dedup_color: cfg.dedup_color_complement,
            alphabet,
            columns,
        })
    }

    pub fn prefix_codes(&self, prefix: &[Literal]) -> Result<Vec<usize>, SearchError> {
        prefix
            .iter()
            .map(|l| {
                let c = l.code();
                if self.alphabet.contains(&c) {
                    Ok(c)
                } else {
                    Err(SearchError::InvalidPrefix)
                }
            })
            .collect()
    }

    pub fn template(&self, codes: &[usize]) -> Template {
        Template::new(
            self.n,
            codes.iter().map(|&c| Literal::from_code(c)).collect(),
        )
        .expect("codes come from the alphabet")
    }

    /// Whether `remaining` more cards can complete the counts into a
    /// template of the space.
    fn completable(&self, pos: &[usize], neg: &[usize], consts: usize, remaining: usize) -> bool {
        let consts_left = self.constants - consts;
        match self.deck {
            DeckMode::Free => {
                if self.max_mult == usize::MAX {
                    return true;
                }
                let room: usize = (0..self.n)
                    .map(|i| 2 * self.max_mult - pos[i] - neg[i])
                    .sum();
                room + consts_left >= remaining
            }
            DeckMode::CommittedPair => {
                let need: usize = (0..self.n).map(|i| pos[i].abs_diff(neg[i])).sum();
                if need > remaining {
                    return false;
                }
                let spare = remaining - need;
                let pair_room = if self.max_mult == usize::MAX {
                    usize::MAX
                } else {
                    (0..self.n)
                        .map(|i| self.max_mult - pos[i].max(neg[i]))
                        .sum()
                };
                (0..=consts_left.min(spare))
                    .any(|c| (spare - c).is_multiple_of(2) && (spare - c) / 2 <= pair_room)
            }
        }
    }

    /// Leaf symmetry filters.
    fn is_representative(&self, codes: &[usize]) -> bool {
        if self.dedup_rotation && least_rotation_index(codes) != 0 {
            return false;
        }
        if self.dedup_color {
            let mut comp: Vec<usize> = codes.iter().map(|c| c ^ 1).collect();
            if self.dedup_rotation {
                let k = least_rotation_index(&comp);
                comp.rotate_left(k);
            }
            if codes > comp.as_slice() {
                return false;
            }
        }
        true
    }
}

/// Why a walk ended.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Stop {
    Exhausted,
    Visitor,
    Budget,
}

/// Depth-first walk over a [`Space`] in lexicographic order.
pub(crate) struct Walker<'s> {
    space: &'s Space,
    codes: Vec<usize>,
    pos: Vec<usize>,
    neg: Vec<usize>,
    consts: usize,
    /// `(m + 1) * 2^n` packed words; block `d` holds every assignment's
    /// first `d` cards.
    words: Vec<u32>,
    rows: usize,
    budget: u64,
    stats: SearchStats,
}

impl<'s> Walker<'s> {
    pub fn new(space: &'s Space, budget: u64) -> Walker<'s> {
        let rows = 1usize << space.n;
        Walker {
            space,
            codes: Vec::with_capacity(space.m),
            pos: vec![0; space.n],
            neg: vec![0; space.n],
            consts: 0,
            words: vec![0; (space.m + 1) * rows],
            rows,
            budget,
            stats: SearchStats::default(),
        }
    }

    pub fn stats(&self) -> SearchStats {
        self.stats
    }

    /// Tries to append `code`; returns false (and leaves state untouched)
    /// when the extended prefix is pruned.
    fn push(&mut self, code: usize) -> bool {
        let s = self.space;
        let depth = self.codes.len();
        if s.dedup_rotation && depth > 0 && code < self.codes[0] {
            return false;
        }
        match Literal::from_code(code) {
            Literal::Constant(_) => {
                if self.consts == s.constants {
                    return false;
                }
                self.consts += 1;
            }
            Literal::Positive(i) => {
                if self.pos[i] == s.max_mult {
                    return false;
                }
                self.pos[i] += 1;
            }
            Literal::Negative(i) => {
                if self.neg[i] == s.max_mult {
                    return false;
                }
                self.neg[i] += 1;
            }
        }
        self.codes.push(code);
        if !s.completable(&self.pos, &self.neg, self.consts, s.m - depth - 1) {
            self.pop();
            return false;
        }
        let col = s.columns[code];
        let (done, next) = self.words.split_at_mut((depth + 1) * self.rows);
        let prev = &done[depth * self.rows..];
        for a in 0..self.rows {
            next[a] = (prev[a] << 1) | ((col >> a) & 1) as u32;
        }
        true
    }

    fn pop(&mut self) {
        match Literal::from_code(self.codes.pop().expect("non-empty prefix")) {
            Literal::Constant(_) => self.consts -= 1,
            Literal::Positive(i) => self.pos[i] -= 1,
            Literal::Negative(i) => self.neg[i] -= 1,
        }
    }

    fn reset(&mut self) {
        while !self.codes.is_empty() {
            self.pop();
        }
    }

    /// Visits every representative template extending `prefix`. The visitor
    /// gets the literal codes and the packed word of every assignment, and
    /// returns true to stop.
    pub fn walk(
        &mut self,
        prefix: &[usize],
        mut visit: impl FnMut(&[usize], &[u32]) -> bool,
    ) -> Stop {
        self.reset();
        for &c in prefix.iter().take(self.space.m) {
            if !self.push(c) {
                self.reset();
                return Stop::Exhausted;
            }
        }
        let stop = self.descend(&mut visit);
        self.reset();
        stop
    }

    fn descend(&mut self, visit: &mut impl FnMut(&[usize], &[u32]) -> bool) -> Stop {
        if self.stats.nodes >= self.budget {
            return Stop::Budget;
        }
        self.stats.nodes += 1;
        let depth = self.codes.len();
        let m = self.space.m;
        if depth == m {
            if !self.space.is_representative(&self.codes) {
                self.stats.pruned += 1;
                return Stop::Exhausted;
            }
            self.stats.examined += 1;
            let words = &self.words[m * self.rows..];
            return if visit(&self.codes, words) {
                Stop::Visitor
            } else {
                Stop::Exhausted
            };
        }
        for idx in 0..self.space.alphabet.len() {
            let code = self.space.alphabet[idx];
            if !self.push(code) {
                self.stats.pruned += 1;
                continue;
            }
            let stop = self.descend(visit);
            self.pop();
            if stop != Stop::Exhausted {
                return stop;
            }
        }
        Stop::Exhausted
    }

    /// Lists feasible prefixes of length `depth`, counting the nodes above
    /// them the way [`Walker::walk`] would.
    pub fn walk_prefixes(&mut self, depth: usize, mut out: impl FnMut(&[usize])) {
        self.reset();
        self.prefixes(depth, &mut out);
    }

    fn prefixes(&mut self, depth: usize, out: &mut impl FnMut(&[usize])) {
        if self.codes.len() == depth {
            out(&self.codes);
            return;
        }
        self.stats.nodes += 1;
        for idx in 0..self.space.alphabet.len() {
            if self.push(self.space.alphabet[idx]) {
                self.prefixes(depth, out);
                self.pop();
            } else {
                self.stats.pruned += 1;
            }
        }
    }
}
