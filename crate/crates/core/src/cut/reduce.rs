//! One-cut reduction by case analysis on the last rules of both premises.
//! Both premises are cut-free; so is the result.

use crate::kernel::{build, instantiate_backward, perm, Derivation, RuleId, RuleInstance, System};
use crate::syntax::{Config, Item, Position, Sequent};

use super::frame::{self, bang_marker, plain_marker};
use super::{CutCase, CutError, CutMeasure, CutStep};

pub(crate) struct Reducer<'a> {
    pub sys: &'a System,
    pub log: Vec<CutStep>,
    parent: Option<usize>,
}

fn replace_leaf(x: &Config, p: &Position, with: Vec<Item>) -> Config {
    x.splice(&p.node, p.index, p.index + 1, with)
        .expect("leaf position valid")
}

fn is_left_rule(r: RuleId) -> bool {
    use RuleId::*;
    matches!(
        r,
        UnderL | OverL | ProdL | UnitL | DiamondL | BoxInvL | BangL | ContrB | Contr | Weak | PermStar
    )
}

/// Does the last rule of `d` decompose the formula at `pos`?
fn principal_on(d: &Derivation, pos: &Position) -> bool {
    use RuleId::*;
    let inst = &d.rule;
    match inst.rule {
        UnderL | OverL | ProdL | UnitL | DiamondL | BangL => inst.at == *pos,
        BoxInvL => {
            let mut node = inst.at.node.clone();
            node.push(inst.at.index);
            pos.node == node && pos.index == 0
        }
        _ => false,
    }
}

impl<'a> Reducer<'a> {
    pub fn new(sys: &'a System) -> Reducer<'a> {
        Reducer {
            sys,
            log: Vec::new(),
            parent: None,
        }
    }

    /// Cut `left` (Π ⇒ A) into the occurrence of `A` at `pos` in `right`.
    pub fn cut(
        &mut self,
        left: &Derivation,
        right: &Derivation,
        pos: &Position,
    ) -> Result<Derivation, CutError> {
        let a = &left.conclusion.succ;
        if right.conclusion.ant.leaf(pos) != Some(a) {
            return Err(CutError::NotACutFormula);
        }
        let measure = CutMeasure {
            kappa: a.size(),
            sigma: left.size() + right.size(),
        };
        let case = self.classify(left, right, pos);
        self.log.push(CutStep {
            case,
            measure,
            parent: self.parent,
        });
        let me = self.log.len() - 1;
        let saved = self.parent.replace(me);
        let out = match case {
            CutCase::Axiom => Ok(if left.rule.rule == RuleId::AxId {
                right.clone()
            } else {
                left.clone()
            }),
            CutCase::LeftNonPrincipal => self.left_non_principal(left, right, pos),
            CutCase::Deep => self.deep_start(left, right, pos),
            CutCase::Principal => self.principal(left, right, pos),
            CutCase::RightNonPrincipal => self.right_non_principal(left, right, pos),
        };
        self.parent = saved;
        out
    }

    fn classify(&self, left: &Derivation, right: &Derivation, pos: &Position) -> CutCase {
        if left.rule.rule == RuleId::AxId
            || (right.rule.rule == RuleId::AxId && *pos == Position::top(0))
        {
            CutCase::Axiom
        } else if is_left_rule(left.rule.rule) {
            CutCase::LeftNonPrincipal
        } else if left.rule.rule == RuleId::BangR {
            CutCase::Deep
        } else if principal_on(right, pos) {
            CutCase::Principal
        } else {
            CutCase::RightNonPrincipal
        }
    }

    fn target(left: &Derivation, right: &Derivation, pos: &Position) -> Sequent {
        Sequent::new(
            replace_leaf(&right.conclusion.ant, pos, left.conclusion.ant.items.clone()),
            right.conclusion.succ.clone(),
        )
    }

    fn left_non_principal(
        &mut self,
        left: &Derivation,
        right: &Derivation,
        pos: &Position,
    ) -> Result<Derivation, CutError> {
        let concl = Self::target(left, right, pos);
        let major = if matches!(left.rule.rule, RuleId::UnderL | RuleId::OverL) { 1 } else { 0 };
        let sub = self.cut(&left.premises[major], right, pos)?;
        let inst = if left.rule.rule == RuleId::PermStar {
            let blocks = perm::between(&concl.ant, &sub.conclusion.ant)
                .ok_or_else(|| CutError::Internal("lifted permutation not found".into()))?;
            if perm::is_identity(&blocks) {
                return Ok(sub);
            }
            RuleInstance::perm(perm::flatten(&blocks))
        } else {
            frame::lift(&left.rule, pos)
        };
        let mut premises = left.premises.clone();
        premises[major] = sub;
        self.checked(concl, inst, premises)
    }

    fn checked(
        &self,
        concl: Sequent,
        inst: RuleInstance,
        premises: Vec<Derivation>,
    ) -> Result<Derivation, CutError> {
        build::checked_node(self.sys, concl, inst, premises).map_err(CutError::Internal)
    }

    fn principal(
        &mut self,
        left: &Derivation,
        right: &Derivation,
        pos: &Position,
    ) -> Result<Derivation, CutError> {
        use RuleId::*;
        let inst = &right.rule;
        match (left.rule.rule, inst.rule) {
            (UnderR, UnderL) => {
                // Δ(Φ, A\B): [Φ ⇒ A, Δ(B)]; left: A, Π ⇒ B.
                let s = inst.splits[0];
                let at_b = Position::new(pos.node.clone(), s);
                let inner = self.cut(&left.premises[0], &right.premises[1], &at_b)?;
                self.cut(&right.premises[0], &inner, &at_b)
            }
            (OverR, OverL) => {
                // Δ(B/A, Φ): [Φ ⇒ A, Δ(B)]; left: Π, A ⇒ B.
                let inner = self.cut(&left.premises[0], &right.premises[1], pos)?;
                let at_a = Position::new(pos.node.clone(), pos.index + left.conclusion.ant.len());
                self.cut(&right.premises[0], &inner, &at_a)
            }
            (ProdR, ProdL) => {
                let inner = self.cut(&left.premises[0], &right.premises[0], pos)?;
                let k = left.premises[0].conclusion.ant.len();
                let at_b = Position::new(pos.node.clone(), pos.index + k);
                self.cut(&left.premises[1], &inner, &at_b)
            }
            (AxUnit, UnitL) => Ok(right.premises[0].clone()),
            (BoxInvR, BoxInvL) => {
                let host = Position::new(inst.at.node.clone(), inst.at.index);
                self.cut(&left.premises[0], &right.premises[0], &host)
            }
            (DiamondR, DiamondL) => {
                let inside = Position::new(pos.child_node(), 0);
                let inner = &right.premises[0];
                // left: [Π] ⇒ ◇A from Π ⇒ A; right premise holds A inside the new bracket.
                self.cut(&left.premises[0], inner, &inside)
            }
            (l, r) => Err(CutError::Internal(format!(
                "no principal reduction for {l} against {r}"
            ))),
        }
    }

    fn right_non_principal(
        &mut self,
        left: &Derivation,
        right: &Derivation,
        pos: &Position,
    ) -> Result<Derivation, CutError> {
        let m = plain_marker();
        let marked = Sequent::new(
            replace_leaf(&right.conclusion.ant, pos, vec![Item::Leaf(m.clone())]),
            right.conclusion.succ.clone(),
        );
        let with = left.conclusion.ant.items.clone();
        let r = frame::reframe(self.sys, &marked, &right.rule, &m, &with)?;
        let mut premises = Vec::with_capacity(right.premises.len());
        for (prem, mp) in right.premises.iter().zip(&r.marked_premises) {
            match frame::find(&mp.ant, &m) {
                Some(q) => premises.push(self.cut(left, prem, &q)?),
                None => premises.push(prem.clone()),
            }
        }
        if r.inst.rule == RuleId::PermStar {
            let blocks = perm::split(&r.concl.ant, &r.inst.perm_map).map_err(CutError::Internal)?;
            if perm::is_identity(&blocks) {
                return Ok(premises.pop().expect("one premise"));
            }
        }
        self.checked(r.concl, r.inst, premises)
    }

    fn deep_start(
        &mut self,
        left: &Derivation,
        right: &Derivation,
        pos: &Position,
    ) -> Result<Derivation, CutError> {
        let m = bang_marker();
        let marked = Sequent::new(
            replace_leaf(&right.conclusion.ant, pos, vec![Item::Leaf(m.clone())]),
            right.conclusion.succ.clone(),
        );
        self.deep(left, right, &marked)
    }

    /// Replace every marked copy of the traced `!A` in `right` by the
    /// antecedent of `left` (`!Π ⇒ !A`); each `BangL` on a copy turns into a
    /// cut on `A` against the premise of `left`.
    fn deep(
        &mut self,
        left: &Derivation,
        right: &Derivation,
        marked: &Sequent,
    ) -> Result<Derivation, CutError> {
        let m = bang_marker();
        if !frame::contains(&marked.ant, &m) {
            return Ok(right.clone());
        }
        let with = left.conclusion.ant.items.clone();
        let k = with.len();
        let a = left.premises[0].conclusion.succ.clone();
        let inst = &right.rule;
        let on_marker = || marked.ant.leaf(&inst.at) == Some(&m);
        let concl = frame::expand_seq(marked, &m, &with);
        match inst.rule {
            RuleId::AxId if marked.ant.items.len() == 1 && on_marker() => Ok(left.clone()),
            RuleId::BangL if on_marker() => {
                let prem = Sequent::new(
                    replace_leaf(&marked.ant, &inst.at, vec![Item::Leaf(a)]),
                    marked.succ.clone(),
                );
                let sub = self.deep(left, &right.premises[0], &prem)?;
                let q = frame::map_position(&marked.ant, &inst.at, &m, k);
                self.cut(&left.premises[0], &sub, &q)
            }
            RuleId::Weak if on_marker() => {
                let prem = Sequent::new(
                    replace_leaf(&marked.ant, &inst.at, vec![]),
                    marked.succ.clone(),
                );
                let mut cur = self.deep(left, &right.premises[0], &prem)?;
                let q = frame::map_position(&marked.ant, &inst.at, &m, k);
                // concl has the block at q..q+k; weaken its items one by one.
                for j in 1..=k {
                    let c = Sequent::new(
                        concl
                            .ant
                            .splice(&q.node, q.index, q.index + k - j, vec![])
                            .expect("block in range"),
                        concl.succ.clone(),
                    );
                    cur = self.checked(c, RuleInstance::at(RuleId::Weak, q.clone()), vec![cur])?;
                }
                Ok(cur)
            }
            RuleId::Contr if on_marker() => {
                let prem = instantiate_backward(self.sys, marked, inst)
                    .map_err(|e| CutError::Internal(e.to_string()))?
                    .remove(0);
                let sub = self.deep(left, &right.premises[0], &prem)?;
                let q = frame::map_position(&marked.ant, &inst.at, &m, k);
                build::contract_block(self.sys, &concl, &q, k, sub).map_err(CutError::Internal)
            }
            _ => {
                let r = frame::reframe(self.sys, marked, inst, &m, &with)?;
                let mut premises = Vec::with_capacity(right.premises.len());
                for (prem, mp) in right.premises.iter().zip(&r.marked_premises) {
                    premises.push(self.deep(left, prem, mp)?);
                }
                if r.inst.rule == RuleId::PermStar {
                    let blocks =
                        perm::split(&r.concl.ant, &r.inst.perm_map).map_err(CutError::Internal)?;
                    if perm::is_identity(&blocks) {
                        return Ok(premises.pop().expect("one premise"));
                    }
                }
                self.checked(r.concl, r.inst, premises)
            }
        }
    }
}
