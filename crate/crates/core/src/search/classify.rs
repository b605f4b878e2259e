use alloc::vec;
use alloc::vec::Vec;

use super::enumerate::{necklace_key, Space, Stop, Walker};
use super::{emit, SearchConfig, SearchError, SearchStatus};
use crate::engine::Protocol;
use crate::{BooleanFunction, Template};

/// Largest variable count [`classify`] accepts.
pub const MAX_CLASSIFY_VARIABLES: usize = 4;
/// Largest card budget [`classify`] accepts.
pub const MAX_CLASSIFY_CARDS: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassRecord {
    pub function: BooleanFunction,
    /// Least card count with a protocol, if any up to the budget.
    pub minimal_cards: Option<usize>,
    /// First protocol found at `minimal_cards`, in template order.
    pub witness: Option<Protocol>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassificationReport {
    pub n: usize,
    pub max_cards: usize,
    /// One record per truth table, by truth-table id.
    pub records: Vec<ClassRecord>,
    /// `BudgetExceeded` if some card count was only partially walked.
    pub status: SearchStatus,
}

/// For every function of `n` variables, the least card count `m <= max_cards`
/// at which a protocol exists under `cfg` (whose `cards` field is ignored).
///
/// Each card count is walked once: a template realizes exactly the
/// functions that are constant on each of its (at most two) necklace
/// classes, so all functions are settled in a single pass per `m`.
pub fn classify(
    n: usize,
    max_cards: usize,
    cfg: &SearchConfig,
) -> Result<ClassificationReport, SearchError> {
    if n == 0 || n > MAX_CLASSIFY_VARIABLES {
        return Err(SearchError::UnsupportedArity {
            n,
            max: MAX_CLASSIFY_VARIABLES,
        });
    }
    if max_cards == 0 || max_cards > MAX_CLASSIFY_CARDS {
        return Err(SearchError::UnsupportedCards {
            m: max_cards,
            max: MAX_CLASSIFY_CARDS,
        });
    }
    let rows = 1usize << n;
    let functions = 1usize << rows;
    let all_ones = (functions - 1) as u64;
    // id bit for row r sits at position rows - 1 - r
    let id_of = |set: u64| -> u64 {
        (0..rows).fold(0u64, |acc, r| acc | (((set >> r) & 1) << (rows - 1 - r)))
    };

    let mut found: Vec<Option<(usize, Template)>> = vec![None; functions];
    let mut remaining = functions;
    let mut status = SearchStatus::Complete;

    for m in 1..=max_cards {
        if remaining == 0 {
            break;
        }
        let mut local = cfg.clone();
        local.cards = m;
        local.limit = None;
        let space = Space::new(n, &local)?;
        let mut walker = Walker::new(&space, local.node_budget);
        let stop = walker.walk(&[], |codes, words| {
            let first = necklace_key(words[0], m);
            let mut second = None;
            let mut in_first = 0u64;
            for (a, &w) in words.iter().enumerate().take(rows) {
                let key = necklace_key(w, m);
                if key == first {
                    in_first |= 1 << a;
                } else if second.is_none_or(|s| s == key) {
                    second = Some(key);
                } else {
                    return false;
                }
            }
            let ids = if second.is_none() {
                [0, all_ones]
            } else {
                let one_on_first = id_of(in_first);
                [one_on_first, all_ones ^ one_on_first]
            };
            for id in ids {
                let slot = &mut found[id as usize];
                if slot.is_none() {
                    *slot = Some((m, space.template(codes)));
                    remaining -= 1;
                }
            }
            remaining == 0
        });
        if stop == Stop::Budget {
            status = SearchStatus::BudgetExceeded;
        }
    }

    let records = found
        .into_iter()
        .enumerate()
        .map(|(id, slot)| {
            let function = BooleanFunction::from_id(n, id as u64);
            match slot {
                Some((m, t)) => ClassRecord {
                    witness: Some(emit(&t, &function)),
                    minimal_cards: Some(m),
                    function,
                },
                None => ClassRecord {
                    function,
                    minimal_cards: None,
                    witness: None,
                },
            }
        })
        .collect();
    Ok(ClassificationReport {
        n,
        max_cards,
        records,
        status,
    })
}
