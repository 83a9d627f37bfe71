use std::time::Duration;

use crate::kernel::Derivation;
use crate::syntax::Sequent;

/// Search limits. `max_rule_apps` bounds the rule applications that are
/// neither permutations nor eagerly applied invertible rules.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Budget {
    pub max_rule_apps: usize,
    pub max_antecedent_items: usize,
    pub time_limit: Option<Duration>,
    /// The caller asserts that exhausting this budget decides the sequent.
    /// Without it, `ContrB` is only tried with a single `!`-formula and an
    /// empty Γ.
    pub complete: bool,
}

impl Budget {
    /// `2(n+1)^2 + 2` rule applications and `4n` antecedent items for a goal
    /// of size `n`.
    pub fn for_sequent(s: &Sequent) -> Budget {
        let n = s.size();
        Budget {
            max_rule_apps: quadratic_bound(n),
            max_antecedent_items: (4 * n).max(1),
            time_limit: None,
            complete: false,
        }
    }

    pub fn with_time_limit(mut self, t: Duration) -> Budget {
        self.time_limit = Some(t);
        self
    }
}

pub fn quadratic_bound(n: usize) -> usize {
    2 * (n + 1) * (n + 1) + 2
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ProveResult {
    Derivable(Derivation),
    NotDerivable,
    Exhausted(String),
}

impl ProveResult {
    pub fn derivation(&self) -> Option<&Derivation> {
        match self {
            ProveResult::Derivable(d) => Some(d),
            _ => None,
        }
    }

    pub fn is_derivable(&self) -> bool {
        matches!(self, ProveResult::Derivable(_))
    }

    pub fn verdict(&self) -> &'static str {
        match self {
            ProveResult::Derivable(_) => "derivable",
            ProveResult::NotDerivable => "not derivable",
            ProveResult::Exhausted(_) => "exhausted",
        }
    }
}
