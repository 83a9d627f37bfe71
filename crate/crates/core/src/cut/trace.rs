use crate::kernel::{instantiate_backward, Derivation, RuleId, RuleInstance, System};
use crate::syntax::{Config, Item, Position, Sequent};

use super::frame::{self, bang_marker};
use super::CutError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TraceEndKind {
    BangL,
    Weak,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceEnd {
    pub path: Vec<usize>,
    pub kind: TraceEndKind,
}

/// Nodes that carry a copy of a designated `!A`. Axioms `!A ⇒ !A` on the
/// trace are rewritten to `BangR` over `BangL` over `A ⇒ A` in `derivation`,
/// so every branch ends in `BangL` (or `Weak`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Trace {
    pub derivation: Derivation,
    pub nodes: Vec<Vec<usize>>,
    pub ends: Vec<TraceEnd>,
}

impl Trace {
    pub fn branch_count(&self) -> usize {
        self.ends.len()
    }
}

pub fn trace_bang(d: &Derivation, sys: &System, at: &Position) -> Result<Trace, CutError> {
    let f = d.conclusion.ant.leaf(at).ok_or(CutError::NotABang)?;
    if !f.is_bang() {
        return Err(CutError::NotABang);
    }
    let m = bang_marker();
    let marked = Sequent::new(
        d.conclusion
            .ant
            .splice(&at.node, at.index, at.index + 1, vec![Item::Leaf(m)])
            .expect("leaf position valid"),
        d.conclusion.succ.clone(),
    );
    let mut t = Trace {
        derivation: d.clone(),
        nodes: Vec::new(),
        ends: Vec::new(),
    };
    t.derivation = walk(sys, d, &marked, &mut vec![], &mut t)?;
    Ok(t)
}

fn walk(
    sys: &System,
    d: &Derivation,
    marked: &Sequent,
    path: &mut Vec<usize>,
    t: &mut Trace,
) -> Result<Derivation, CutError> {
    let m = bang_marker();
    if !frame::contains(&marked.ant, &m) {
        return Ok(d.clone());
    }
    t.nodes.push(path.clone());
    let inst = &d.rule;
    let on_marker = marked.ant.leaf(&inst.at) == Some(&m);
    match inst.rule {
        RuleId::AxId => {
            let bang = d.conclusion.succ.clone();
            let a = bang.bang_body().expect("traced axiom is `!A => !A`").clone();
            let ax = Derivation::leaf(Sequent::new(Config::leaves([a.clone()]), a.clone()), RuleInstance::new(RuleId::AxId));
            let bl = Derivation::new(
                Sequent::new(Config::leaves([bang.clone()]), a),
                RuleInstance::at(RuleId::BangL, Position::top(0)),
                vec![ax],
            );
            path.push(0);
            t.nodes.push(path.clone());
            t.ends.push(TraceEnd {
                path: path.clone(),
                kind: TraceEndKind::BangL,
            });
            path.pop();
            Ok(Derivation::new(
                d.conclusion.clone(),
                RuleInstance::new(RuleId::BangR),
                vec![bl],
            ))
        }
        RuleId::BangL | RuleId::Weak if on_marker => {
            let kind = if inst.rule == RuleId::BangL {
                TraceEndKind::BangL
            } else {
                TraceEndKind::Weak
            };
            t.ends.push(TraceEnd {
                path: path.clone(),
                kind,
            });
            Ok(d.clone())
        }
        _ => {
            let prems = instantiate_backward(sys, marked, inst)
                .map_err(|e| CutError::Internal(e.to_string()))?;
            let mut out = Vec::new();
            for (i, (p, mp)) in d.premises.iter().zip(&prems).enumerate() {
                path.push(i);
                out.push(walk(sys, p, mp, path, t)?);
                path.pop();
            }
            Ok(Derivation::new(d.conclusion.clone(), inst.clone(), out))
        }
    }
}
