//! Exhaustive synthesis of single-cut full-open protocols.
//!
//! [`search`] walks literal templates of a fixed card count in
//! lexicographic order, pruning prefixes that can no longer satisfy the
//! deck constraints and (optionally) prefixes that cannot be the least
//! rotation of a template. Every accepted template is turned into a
//! protocol through [`derive_output_rule`](crate::engine::derive_output_rule)
//! and re-verified before it is returned. [`naive_search`] is the plain
//! enumeration oracle used to cross-check it, and [`classify`] runs the
//! same walk once per card count to find the smallest protocol for every
//! function of `n` variables.

mod classify;
mod config;
mod enumerate;
mod naive;

use alloc::vec::Vec;
use core::fmt;
use core::time::Duration;

pub use classify::{classify, ClassRecord, ClassificationReport};
pub use config::{DeckMode, SearchConfig, DEFAULT_NODE_BUDGET};
pub use naive::{naive_search, ORACLE_GUARD};

use crate::engine::{derive_output_rule, verify, Protocol};
use crate::{least_rotation_index, BooleanFunction, Literal, Template};
use enumerate::{necklace_key, Space, Stop, Walker};

/// Largest variable count the search handles.
pub const MAX_VARIABLES: usize = 6;
/// Largest card count the search handles.
pub const MAX_CARDS: usize = 24;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchError {
    InvalidConfig(&'static str),
    UnsupportedArity {
        n: usize,
        max: usize,
    },
    UnsupportedCards {
        m: usize,
        max: usize,
    },
    /// The naive oracle would have to enumerate `space` templates.
    OracleGuard {
        space: u128,
        max: u128,
    },
    /// A literal in a partition prefix is outside the search alphabet.
    InvalidPrefix,
}

impl fmt::Display for SearchError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SearchError::InvalidConfig(why) => write!(f, "invalid search configuration: {why}"),
            SearchError::UnsupportedArity { n, max } => {
                write!(f, "{n} variables not supported (1..={max})")
            }
            SearchError::UnsupportedCards { m, max } => {
                write!(f, "{m} cards not supported (1..={max})")
            }
            SearchError::OracleGuard { space, max } => {
                write!(
                    f,
                    "naive enumeration of {space} templates exceeds the guard of {max}"
                )
            }
            SearchError::InvalidPrefix => write!(f, "prefix literal outside the search alphabet"),
        }
    }
}

impl core::error::Error for SearchError {}

/// Whether the walk covered its whole space.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum SearchStatus {
    Complete,
    /// More protocols exist beyond `limit`.
    LimitReached,
    /// The node budget ran out; results are partial.
    BudgetExceeded,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SearchStats {
    /// Complete templates that passed the deck and symmetry filters.
    pub examined: u64,
    /// Prefixes cut plus complete templates dropped as symmetric duplicates.
    pub pruned: u64,
    /// Walk nodes visited, counted against the budget.
    pub nodes: u64,
    /// Filled in by callers that have a clock.
    pub elapsed: Option<Duration>,
}

impl SearchStats {
    /// Adds the counters of `other`; `elapsed` is left alone.
    pub fn absorb(&mut self, other: &SearchStats) {
        self.examined += other.examined;
        self.pruned += other.pruned;
        self.nodes += other.nodes;
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchResult {
    /// Sorted by template.
    pub protocols: Vec<Protocol>,
    pub stats: SearchStats,
    pub status: SearchStatus,
}

/// `Protocol(t, derive_output_rule(t, f))` when that rule exists.
pub fn check_template(t: &Template, f: &BooleanFunction) -> Option<Protocol> {
    let rule = derive_output_rule(t, f).ok()?;
    Protocol::new("candidate", t.clone(), rule).ok()
}

/// Least rotation of the literal list under the literal order.
pub fn canonical_template(t: &Template) -> Template {
    t.rotate(least_rotation_index(t.literals()))
}

/// Protocols for `f` with `cfg.cards` cards.
pub fn search(f: &BooleanFunction, cfg: &SearchConfig) -> Result<SearchResult, SearchError> {
    search_with_prefix(f, cfg, &[])
}

/// [`search`] restricted to templates starting with `prefix`.
///
/// Prefixes from [`partition_prefixes`] split the space into disjoint,
/// lexicographically contiguous parts whose results [`merge_results`]
/// combines into exactly what [`search`] returns.
pub fn search_with_prefix(
    f: &BooleanFunction,
    cfg: &SearchConfig,
    prefix: &[Literal],
) -> Result<SearchResult, SearchError> {
    let space = Space::new(f.arity(), cfg)?;
    let prefix = space.prefix_codes(prefix)?;
    let rows = 1usize << f.arity();
    let outputs: Vec<usize> = f.table().iter().map(|b| b.as_u8() as usize).collect();
    let m = cfg.cards;
    let cap = cfg.limit.map(|l| l.saturating_add(1));

    let mut found: Vec<Template> = Vec::new();
    let mut walker = Walker::new(&space, cfg.node_budget);
    let stop = walker.walk(&prefix, |codes, words| {
        let mut class = [None::<u32>; 2];
        for a in 0..rows {
            let key = necklace_key(words[a], m);
            match class[outputs[a]] {
                None => class[outputs[a]] = Some(key),
                Some(k) if k != key => return false,
                Some(_) => {}
            }
        }
        if let [Some(k0), Some(k1)] = class {
            if k0 == k1 {
                return false;
            }
        }
        found.push(space.template(codes));
        cap.is_some_and(|c| found.len() >= c)
    });

    let status = match stop {
        Stop::Exhausted => SearchStatus::Complete,
        Stop::Visitor => SearchStatus::LimitReached,
        Stop::Budget => SearchStatus::BudgetExceeded,
    };
    let mut result = SearchResult {
        protocols: found.iter().map(|t| emit(t, f)).collect(),
        stats: walker.stats(),
        status,
    };
    finish(&mut result, cfg.limit);
    Ok(result)
}

/// Feasible prefixes of length `depth` in lexicographic order; together they
/// cover every template [`search`] would visit.
pub fn partition_prefixes(
    n: usize,
    cfg: &SearchConfig,
    depth: usize,
) -> Result<Vec<Vec<Literal>>, SearchError> {
    Ok(partition(n, cfg, depth)?.prefixes)
}

/// Prefixes from [`partition_prefixes`] plus the walk counters for the part
/// of the tree above them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Partition {
    pub prefixes: Vec<Vec<Literal>>,
    /// Added to merged part statistics, this gives the counters of an
    /// unpartitioned search that ran to completion.
    pub stats: SearchStats,
}

pub fn partition(n: usize, cfg: &SearchConfig, depth: usize) -> Result<Partition, SearchError> {
    let space = Space::new(n, cfg)?;
    let depth = depth.min(cfg.cards);
    let mut prefixes = Vec::new();
    let mut budgetless = Walker::new(&space, u64::MAX);
    budgetless.walk_prefixes(depth, |codes| {
        prefixes.push(codes.iter().map(|&c| Literal::from_code(c)).collect());
    });
    Ok(Partition {
        prefixes,
        stats: budgetless.stats(),
    })
}

/// Combines partition results (in any order) into the result of a single
/// unpartitioned [`search`].
pub fn merge_results(parts: Vec<SearchResult>, limit: Option<usize>) -> SearchResult {
    let mut merged = SearchResult {
        protocols: Vec::new(),
        stats: SearchStats::default(),
        status: SearchStatus::Complete,
    };
    for part in parts {
        merged.stats.absorb(&part.stats);
        merged.status = merged.status.max(part.status);
        merged.protocols.extend(part.protocols);
    }
    finish(&mut merged, limit);
    merged
}

fn finish(result: &mut SearchResult, limit: Option<usize>) {
    result
        .protocols
        .sort_by(|a, b| a.template().cmp(b.template()));
    if let Some(l) = limit {
        if result.protocols.len() > l {
            result.protocols.truncate(l);
            if result.status == SearchStatus::Complete {
                result.status = SearchStatus::LimitReached;
            }
        }
    }
    let named = core::mem::take(&mut result.protocols);
    result.protocols = named
        .into_iter()
        .enumerate()
        .map(|(i, p)| p.renamed(alloc::format!("found-{}", i + 1)))
        .collect();
}

/// Builds the protocol for an accepted template and re-verifies it.
fn emit(t: &Template, f: &BooleanFunction) -> Protocol {
    let p = check_template(t, f).expect("accepted template must admit an output rule");
    let report = verify(&p, f).expect("arity checked by the walk");
    assert!(report.passed(), "accepted template failed verification");
    p
}
