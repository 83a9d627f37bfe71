use std::fmt;

use thiserror::Error;

use crate::syntax::Sequent;

use super::derivation::Derivation;
use super::instantiate::{instantiate_backward, KernelError};
use super::rule::RuleId;
use super::system::System;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CheckFault {
    Kernel(KernelError),
    Arity { expected: usize, found: usize },
    Mismatch { expected: Sequent, actual: Sequent },
    CutNotAllowed,
}

impl fmt::Display for CheckFault {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CheckFault::Kernel(e) => write!(f, "{e}"),
            CheckFault::Arity { expected, found } => {
                write!(f, "rule has {expected} premises, derivation gives {found}")
            }
            CheckFault::Mismatch { expected, actual } => {
                write!(f, "premise should be `{expected}`, found `{actual}`")
            }
            CheckFault::CutNotAllowed => write!(f, "cut is not allowed here"),
        }
    }
}

/// A rejected derivation: the offending node (premise indices from the
/// root) and what went wrong there.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("at node {path:?}: {fault}")]
pub struct CheckError {
    pub path: Vec<usize>,
    pub fault: CheckFault,
}

/// Verify every inference of `d` against the rules of `sys`.
pub fn check_derivation(sys: &System, d: &Derivation, allow_cut: bool) -> Result<(), CheckError> {
    for (path, node) in d.nodes() {
        let err = |fault| CheckError {
            path: path.clone(),
            fault,
        };
        if node.rule.rule == RuleId::Cut && !allow_cut {
            return Err(err(CheckFault::CutNotAllowed));
        }
        let expected = instantiate_backward(sys, &node.conclusion, &node.rule)
            .map_err(|e| err(CheckFault::Kernel(e)))?;
        if expected.len() != node.premises.len() {
            return Err(err(CheckFault::Arity {
                expected: expected.len(),
                found: node.premises.len(),
            }));
        }
        for (e, p) in expected.into_iter().zip(&node.premises) {
            if e != p.conclusion {
                return Err(err(CheckFault::Mismatch {
                    expected: e,
                    actual: p.conclusion.clone(),
                }));
            }
        }
    }
    Ok(())
}

/// Every cut has a theory axiom as one of its premises.
pub fn cut_normalized(d: &Derivation) -> bool {
    d.nodes().iter().all(|(_, n)| {
        n.rule.rule != RuleId::Cut
            || n
                .premises
                .iter()
                .any(|p| matches!(p.rule.rule, RuleId::AxTheory(_)))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::RuleInstance;
    use crate::syntax::{parse_sequent, Position};

    fn s(t: &str) -> Sequent {
        parse_sequent(t).unwrap()
    }

    fn verb() -> Derivation {
        let ax = |t: &str| Derivation::leaf(s(t), RuleInstance::new(RuleId::AxId));
        let inner = Derivation::new(
            s("N, N\\S => S"),
            RuleInstance::at(RuleId::UnderL, Position::top(1)).with_splits(vec![0]),
            vec![ax("N => N"), ax("S => S")],
        );
        Derivation::new(
            s("N, (N\\S)/N, N => S"),
            RuleInstance::at(RuleId::OverL, Position::top(1)).with_splits(vec![3]),
            vec![ax("N => N"), inner],
        )
    }

    #[test]
    fn accepts_and_round_trips() {
        let d = verb();
        check_derivation(&System::BL1, &d, false).unwrap();
        assert_eq!(d.size(), 5);
        assert_eq!(Derivation::from_json(&d.to_json()).unwrap(), d);
        assert_eq!(Derivation::parse_rendered(&d.render()).unwrap(), d);
    }

    #[test]
    fn reports_path_of_bad_node() {
        let mut d = verb();
        d.premises[1].premises[1].conclusion = s("S => N");
        let e = check_derivation(&System::BL1, &d, false).unwrap_err();
        assert_eq!(e.path, vec![1]);
        assert!(matches!(e.fault, CheckFault::Mismatch { .. }));
    }

    #[test]
    fn cut_gate() {
        let ax = |t: &str| Derivation::leaf(s(t), RuleInstance::new(RuleId::AxId));
        let d = Derivation::new(
            s("p => p"),
            RuleInstance::cut(Position::top(0), 1, crate::syntax::Formula::atom("p")),
            vec![ax("p => p"), ax("p => p")],
        );
        assert!(check_derivation(&System::BL1, &d, true).is_ok());
        let e = check_derivation(&System::BL1, &d, false).unwrap_err();
        assert_eq!(e.fault, CheckFault::CutNotAllowed);
        assert!(!cut_normalized(&d));
    }
}
