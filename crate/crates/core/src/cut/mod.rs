//! The cut rule on explicit derivations and cut elimination for `BL1`,
//! `L1Bang` and `L1BangW`.

mod frame;
mod reduce;
mod trace;

use std::fmt;

use crate::kernel::{check_derivation, CheckError, Derivation, RuleId, RuleInstance, System};
use crate::syntax::{Position, Sequent};

pub use trace::{trace_bang, Trace, TraceEnd, TraceEndKind};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CutError {
    MalformedInput(CheckError),
    /// The designated leaf is not the succedent of the left premise.
    NotACutFormula,
    NotABang,
    UnsupportedSystem(String),
    Internal(String),
}

impl fmt::Display for CutError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CutError::MalformedInput(e) => write!(f, "malformed input: {e}"),
            CutError::NotACutFormula => write!(f, "designated formula differs from the cut formula"),
            CutError::NotABang => write!(f, "designated formula is not a `!`-formula"),
            CutError::UnsupportedSystem(s) => write!(f, "cut elimination is not available for {s}"),
            CutError::Internal(s) => write!(f, "internal error: {s}"),
        }
    }
}

impl std::error::Error for CutError {}

/// `(kappa, sigma)`: size of the cut formula, rule applications above the cut.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CutMeasure {
    pub kappa: usize,
    pub sigma: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CutCase {
    Axiom,
    LeftNonPrincipal,
    Deep,
    Principal,
    RightNonPrincipal,
}

/// One single-cut reduction. `parent` indexes the step that created this cut.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CutStep {
    pub case: CutCase,
    pub measure: CutMeasure,
    pub parent: Option<usize>,
}

/// Build `Δ(Π) ⇒ C` from `left: Π ⇒ A` and `right: Δ(A) ⇒ C`, where the
/// designated `A` is the antecedent leaf at `at`.
pub fn compose_cut(left: &Derivation, right: &Derivation, at: &Position) -> Result<Derivation, CutError> {
    let a = &left.conclusion.succ;
    if right.conclusion.ant.leaf(at) != Some(a) {
        return Err(CutError::NotACutFormula);
    }
    let pi = left.conclusion.ant.items.clone();
    let n = pi.len();
    let ant = right
        .conclusion
        .ant
        .splice(&at.node, at.index, at.index + 1, pi)
        .expect("leaf position valid");
    let concl = Sequent::new(ant, right.conclusion.succ.clone());
    let inst = RuleInstance::cut(at.clone(), at.index + n, a.clone());
    Ok(Derivation::new(concl, inst, vec![left.clone(), right.clone()]))
}

pub fn eliminate_cuts(d: &Derivation, sys: &System) -> Result<Derivation, CutError> {
    eliminate_cuts_logged(d, sys).map(|(d, _)| d)
}

/// As [`eliminate_cuts`], also returning every reduction step taken.
pub fn eliminate_cuts_logged(
    d: &Derivation,
    sys: &System,
) -> Result<(Derivation, Vec<CutStep>), CutError> {
    if matches!(sys, System::L1Theory(_)) {
        return Err(CutError::UnsupportedSystem(sys.name().to_string()));
    }
    check_derivation(sys, d, true).map_err(CutError::MalformedInput)?;
    let mut r = reduce::Reducer::new(sys);
    let out = walk(&mut r, d)?;
    Ok((out, r.log))
}

fn walk(r: &mut reduce::Reducer<'_>, d: &Derivation) -> Result<Derivation, CutError> {
    let premises = d
        .premises
        .iter()
        .map(|p| walk(r, p))
        .collect::<Result<Vec<_>, _>>()?;
    if d.rule.rule == RuleId::Cut {
        let at = d.rule.at.clone();
        return r.cut(&premises[0], &premises[1], &at);
    }
    Ok(Derivation::new(d.conclusion.clone(), d.rule.clone(), premises))
}

#[cfg(test)]
mod tests;
