use std::fmt;
use std::str::FromStr;

use crate::syntax::{Formula, Position};

/// Rule identifiers. The declaration order is the enumeration order used
/// by proof search.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RuleId {
    AxId,
    AxUnit,
    AxTheory(usize),
    UnderL,
    UnderR,
    OverL,
    OverR,
    ProdL,
    ProdR,
    UnitL,
    DiamondL,
    DiamondR,
    BoxInvL,
    BoxInvR,
    BangL,
    BangR,
    ContrB,
    Contr,
    Weak,
    PermStar,
    Cut,
}

impl RuleId {
    pub fn token(&self) -> &'static str {
        use RuleId::*;
        match self {
            AxId => "AxId",
            AxUnit => "AxUnit",
            AxTheory(_) => "AxTheory",
            UnderL => "UnderL",
            UnderR => "UnderR",
            OverL => "OverL",
            OverR => "OverR",
            ProdL => "ProdL",
            ProdR => "ProdR",
            UnitL => "UnitL",
            DiamondL => "DiamondL",
            DiamondR => "DiamondR",
            BoxInvL => "BoxInvL",
            BoxInvR => "BoxInvR",
            BangL => "BangL",
            BangR => "BangR",
            ContrB => "ContrB",
            Contr => "Contr",
            Weak => "Weak",
            PermStar => "PermStar",
            Cut => "Cut",
        }
    }

    pub fn arity(&self) -> usize {
        use RuleId::*;
        match self {
            AxId | AxUnit | AxTheory(_) => 0,
            UnderL | OverL | ProdR | Cut => 2,
            _ => 1,
        }
    }

    pub fn is_axiom(&self) -> bool {
        self.arity() == 0
    }

    /// Rules that only rearrange or copy antecedent material.
    pub fn is_structural(&self) -> bool {
        matches!(self, RuleId::ContrB | RuleId::Contr | RuleId::Weak | RuleId::PermStar)
    }
}

impl fmt::Display for RuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RuleId::AxTheory(i) => write!(f, "AxTheory({i})"),
            other => f.write_str(other.token()),
        }
    }
}

impl FromStr for RuleId {
    type Err = String;

    fn from_str(s: &str) -> Result<RuleId, String> {
        use RuleId::*;
        let all = [
            AxId, AxUnit, UnderL, UnderR, OverL, OverR, ProdL, ProdR, UnitL, DiamondL, DiamondR,
            BoxInvL, BoxInvR, BangL, BangR, ContrB, Contr, Weak, PermStar, Cut,
        ];
        if let Some(r) = all.iter().find(|r| r.token() == s) {
            return Ok(*r);
        }
        if s == "AxTheory" {
            return Ok(AxTheory(0));
        }
        if let Some(n) = s.strip_prefix("AxTheory(").and_then(|r| r.strip_suffix(')')) {
            return n.parse().map(AxTheory).map_err(|e| format!("bad axiom index: {e}"));
        }
        Err(format!("unknown rule `{s}`"))
    }
}

/// A rule together with the parameters that pin down its premises.
///
/// * `at`: principal leaf (`UnderL`, `OverL`, `ProdL`, `UnitL`, `DiamondL`,
///   `BangL`, `Contr`, `Weak`), the bracket item (`BoxInvL`), or the first
///   item of the designated segment (`ContrB`, `Cut`).
/// * `splits`: `UnderL` = [start of Γ]; `OverL` = [end of Γ]; `ProdR` =
///   [top-level split]; `ContrB` = [end of the banged block, end of Γ];
///   `Cut` = [end of the cut segment].
/// * `perm_map`: `PermStar` only; one block per configuration node in
///   preorder, each block mapping premise child index to conclusion child index.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RuleInstance {
    pub rule: RuleId,
    pub at: Position,
    pub splits: Vec<usize>,
    pub perm_map: Vec<usize>,
    pub cut_formula: Option<Formula>,
}

impl RuleInstance {
    pub fn new(rule: RuleId) -> RuleInstance {
        RuleInstance {
            rule,
            at: Position::default(),
            splits: vec![],
            perm_map: vec![],
            cut_formula: None,
        }
    }

    pub fn at(rule: RuleId, at: Position) -> RuleInstance {
        RuleInstance {
            at,
            ..RuleInstance::new(rule)
        }
    }

    pub fn with_splits(mut self, splits: Vec<usize>) -> RuleInstance {
        self.splits = splits;
        self
    }

    pub fn perm(perm_map: Vec<usize>) -> RuleInstance {
        RuleInstance {
            perm_map,
            ..RuleInstance::new(RuleId::PermStar)
        }
    }

    pub fn cut(at: Position, end: usize, formula: Formula) -> RuleInstance {
        RuleInstance {
            at,
            splits: vec![end],
            perm_map: vec![],
            cut_formula: Some(formula),
            rule: RuleId::Cut,
        }
    }
}

impl fmt::Display for RuleInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.rule)
    }
}
