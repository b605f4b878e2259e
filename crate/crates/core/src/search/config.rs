use super::{SearchError, MAX_CARDS};

/// Default cap on walk nodes per search call.
pub const DEFAULT_NODE_BUDGET: u64 = 100_000_000;

/// How input literals may be combined.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DeckMode {
    /// Every variable appears as whole `(x, x̄)` pairs: equal positive and
    /// negated counts.
    CommittedPair,
    /// Any mix of literals.
    Free,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SearchConfig {
    /// Card count `m`.
    pub cards: usize,
    pub deck: DeckMode,
    /// Bound on `max(#x, #x̄)` per variable; `None` is unlimited.
    pub max_pair_multiplicity: Option<usize>,
    pub allow_constants: bool,
    /// Most constant cards a template may hold when constants are allowed.
    pub constant_budget: usize,
    /// Keep one of each template/complement pair.
    pub dedup_color_complement: bool,
    /// Keep only least rotations of templates.
    pub dedup_template_rotation: bool,
    pub limit: Option<usize>,
    /// Walk nodes allowed before returning a partial result.
    pub node_budget: u64,
}

impl SearchConfig {
    /// Committed pairs, no constants, rotation dedup only.
    pub fn new(cards: usize) -> SearchConfig {
        SearchConfig {
            cards,
            deck: DeckMode::CommittedPair,
            max_pair_multiplicity: None,
            allow_constants: false,
            constant_budget: 0,
            dedup_color_complement: false,
            dedup_template_rotation: true,
            limit: None,
            node_budget: DEFAULT_NODE_BUDGET,
        }
    }

    pub fn free(mut self) -> Self {
        self.deck = DeckMode::Free;
        self
    }

    pub fn with_constants(mut self, budget: usize) -> Self {
        self.allow_constants = budget > 0;
        self.constant_budget = budget;
        self
    }

    pub fn with_max_pairs(mut self, k: usize) -> Self {
        self.max_pair_multiplicity = Some(k);
        self
    }

    pub fn with_cards(mut self, cards: usize) -> Self {
        self.cards = cards;
        self
    }

    /// Constants actually usable by a template.
    pub fn effective_constants(&self) -> usize {
        if self.allow_constants {
            self.constant_budget.min(self.cards)
        } else {
            0
        }
    }

    pub fn validate(&self) -> Result<(), SearchError> {
        if self.cards == 0 || self.cards > MAX_CARDS {
            return Err(SearchError::UnsupportedCards {
                m: self.cards,
                max: MAX_CARDS,
            });
        }
        if self.constant_budget > self.cards {
            return Err(SearchError::InvalidConfig(
                "constant budget exceeds card count",
            ));
        }
        if self.max_pair_multiplicity == Some(0) {
            return Err(SearchError::InvalidConfig(
                "pair multiplicity must be positive",
            ));
        }
        Ok(())
    }
}
