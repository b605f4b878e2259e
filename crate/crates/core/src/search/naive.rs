use alloc::vec;
use alloc::vec::Vec;

use super::{
    canonical_template, check_template, finish, DeckMode, SearchConfig, SearchError, SearchResult,
    SearchStats, SearchStatus, MAX_VARIABLES,
};
use crate::{BooleanFunction, Literal, Template};

/// Most templates the oracle agrees to enumerate.
pub const ORACLE_GUARD: u128 = 10_000_000;

fn deck_ok(t: &Template, cfg: &SearchConfig) -> bool {
    if t.constant_count() > cfg.effective_constants() {
        return false;
    }
    (0..t.arity()).all(|i| {
        let (p, q) = t.occurrences(i);
        let balanced = cfg.deck == DeckMode::Free || p == q;
        let within = cfg.max_pair_multiplicity.is_none_or(|k| p.max(q) <= k);
        balanced && within
    })
}

fn representative(t: &Template, cfg: &SearchConfig) -> bool {
    let canon = |t: &Template| {
        if cfg.dedup_template_rotation {
            canonical_template(t)
        } else {
            t.clone()
        }
    };
    if cfg.dedup_template_rotation && canonical_template(t) != *t {
        return false;
    }
    !cfg.dedup_color_complement || *t <= canon(&t.complement())
}

/// Plain enumeration of every literal tuple, filtered by the deck rules,
/// the symmetry filters and [`check_template`]. Refuses spaces larger than
/// [`ORACLE_GUARD`].
pub fn naive_search(f: &BooleanFunction, cfg: &SearchConfig) -> Result<SearchResult, SearchError> {
    cfg.validate()?;
    let n = f.arity();
    if n == 0 || n > MAX_VARIABLES {
        return Err(SearchError::UnsupportedArity {
            n,
            max: MAX_VARIABLES,
        });
    }
    let alphabet: Vec<Literal> = (0..2 + 2 * n)
        .map(Literal::from_code)
        .filter(|l| cfg.effective_constants() > 0 || !matches!(l, Literal::Constant(_)))
        .collect();
    let radix = alphabet.len();
    let space = (radix as u128)
        .checked_pow(cfg.cards as u32)
        .unwrap_or(u128::MAX);
    if space > ORACLE_GUARD {
        return Err(SearchError::OracleGuard {
            space,
            max: ORACLE_GUARD,
        });
    }

    let mut stats = SearchStats::default();
    let mut protocols = Vec::new();
    let mut digits = vec![0usize; cfg.cards];
    for _ in 0..space {
        stats.nodes += 1;
        let t = Template::new(n, digits.iter().map(|&d| alphabet[d]).collect())
            .expect("alphabet literals are in range");
        if deck_ok(&t, cfg) && representative(&t, cfg) {
            stats.examined += 1;
            if let Some(p) = check_template(&t, f) {
                protocols.push(p);
            }
        } else {
            stats.pruned += 1;
        }
        // odometer, last position fastest
        for d in digits.iter_mut().rev() {
            *d += 1;
            if *d < radix {
                break;
            }
            *d = 0;
        }
    }

    let mut result = SearchResult {
        protocols,
        stats,
        status: SearchStatus::Complete,
    };
    finish(&mut result, cfg.limit);
    Ok(result)
}
