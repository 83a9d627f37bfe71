use std::fmt;

use crate::syntax::Sequent;

use super::rule::RuleId;

/// The four calculi: bracketed with gated contraction, bracket-free with
/// standard contraction, the same plus weakening, and the plain calculus
/// extended by a finite theory of extra axioms.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum System {
    BL1,
    L1Bang,
    L1BangW,
    L1Theory(Vec<Sequent>),
}

impl System {
    pub fn available(&self, rule: RuleId) -> bool {
        use RuleId::*;
        match rule {
            AxId | AxUnit | UnderL | UnderR | OverL | OverR | ProdL | ProdR | UnitL | Cut => true,
            AxTheory(i) => matches!(self, System::L1Theory(t) if i < t.len()),
            DiamondL | DiamondR | BoxInvL | BoxInvR | ContrB => *self == System::BL1,
            BangL | BangR | PermStar => !matches!(self, System::L1Theory(_)),
            Contr => matches!(self, System::L1Bang | System::L1BangW),
            Weak => *self == System::L1BangW,
        }
    }

    pub fn theory(&self) -> &[Sequent] {
        match self {
            System::L1Theory(t) => t,
            _ => &[],
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            System::BL1 => "bl1",
            System::L1Bang => "l1bang",
            System::L1BangW => "l1bangw",
            System::L1Theory(_) => "theory",
        }
    }

    /// Theory axioms must be bracket-free and `!`-free.
    pub fn validate(&self) -> Result<(), String> {
        for (i, ax) in self.theory().iter().enumerate() {
            let bad = ax.ant.bracket_count() > 0
                || ax
                    .formulas()
                    .iter()
                    .any(|f| f.has_bang() || f.has_bracket_modality());
            if bad {
                return Err(format!("theory axiom {i} `{ax}` uses brackets or `!`"));
            }
        }
        Ok(())
    }
}

impl fmt::Display for System {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}
