use crate::kernel::build::{checked_node, permute_to};
use crate::kernel::{instantiate_backward, perm, Derivation, RuleId, RuleInstance, System};
use crate::syntax::{Config, Formula, Item, Position, Sequent};

use super::encode::encode;
use super::grammar::Grammar;
use super::rewrite::RewriteTrace;
use super::BridgeError;

fn shape(e: String) -> BridgeError {
    BridgeError::Shape(e)
}

/// Apply single-premise-on-the-right instances from `concl` upward. Every
/// premise but the last is closed by `side`; the last premise of the last
/// instance is closed by `top`.
pub(crate) fn chain(
    sys: &System,
    concl: &Sequent,
    insts: &[RuleInstance],
    side: &mut dyn FnMut(&Sequent) -> Result<Derivation, BridgeError>,
    top: impl FnOnce(&Sequent) -> Result<Derivation, BridgeError>,
) -> Result<Derivation, BridgeError> {
    let mut levels: Vec<(Sequent, RuleInstance, Vec<Derivation>)> = Vec::new();
    let mut cur = concl.clone();
    for inst in insts {
        let mut prems = instantiate_backward(sys, &cur, inst).map_err(|e| shape(e.to_string()))?;
        let main = prems.pop().ok_or_else(|| shape(format!("{} has no premise", inst.rule)))?;
        let sides = prems.iter().map(&mut *side).collect::<Result<Vec<_>, _>>()?;
        levels.push((cur, inst.clone(), sides));
        cur = main;
    }
    let mut d = top(&cur)?;
    if d.conclusion != cur {
        return Err(shape(format!("expected {cur}, got {}", d.conclusion)));
    }
    while let Some((c, inst, mut sides)) = levels.pop() {
        sides.push(d);
        d = checked_node(sys, c, inst, sides).map_err(shape)?;
    }
    Ok(d)
}

fn axiom(s: &Sequent) -> Result<Derivation, BridgeError> {
    let inst = RuleInstance::new(RuleId::AxId);
    checked_node(&System::BL1, s.clone(), inst, vec![]).map_err(shape)
}

/// `v₁, …, v_m => v₁·(…·v_m)` by `ProdR` over axioms.
pub(crate) fn product_right(sys: &System, s: &Sequent) -> Result<Derivation, BridgeError> {
    if s.ant.len() <= 1 {
        return axiom(s);
    }
    let inst = RuleInstance::new(RuleId::ProdR).with_splits(vec![1]);
    let prems = instantiate_backward(sys, s, &inst).map_err(|e| shape(e.to_string()))?;
    let subs = prems
        .iter()
        .map(|p| product_right(sys, p))
        .collect::<Result<Vec<_>, _>>()?;
    checked_node(sys, s.clone(), inst, subs).map_err(shape)
}

/// From `Δ₁, ![]-1A, Δ₂, A, Δ₃ ⇒ C` to `Δ₁, ![]-1A, Δ₂, Δ₃ ⇒ C` (root items
/// `bang_at < a_at`): `PermStar, ContrB, PermStar, BangL, BoxInvL`.
pub fn inst_macro(d: &Derivation, bang_at: usize, a_at: usize) -> Result<Derivation, BridgeError> {
    let sys = System::BL1;
    let top = &d.conclusion;
    let items = &top.ant.items;
    let bang = items
        .get(bang_at)
        .and_then(Item::formula)
        .cloned()
        .ok_or_else(|| shape("no leaf at the `!` position".into()))?;
    let a = match bang.bang_body() {
        Some(Formula::BoxInv(a)) => (**a).clone(),
        _ => return Err(shape(format!("{bang} is not `![]-1A`"))),
    };
    if bang_at >= a_at || items.get(a_at).and_then(Item::formula) != Some(&a) {
        return Err(shape(format!("no `{a}` after the `!` formula")));
    }
    let with = |v: Vec<Item>| Sequent::new(Config::new(v), top.succ.clone());
    let mut c0 = items.clone();
    c0.remove(a_at);
    let mut c1 = c0.clone();
    let moved = c1.remove(bang_at);
    c1.insert(a_at - 1, moved.clone());
    let mut c3 = c0.clone();
    c3.insert(a_at, Item::Bracket(Config::new(vec![moved])));
    let (c0, c1, c3) = (with(c0), with(c1), with(c3));

    let boxinv = RuleInstance::at(RuleId::BoxInvL, Position::top(a_at));
    let c4 = with({
        let mut v = items.clone();
        v[a_at] = Item::Bracket(Config::leaves([Formula::box_inv(a)]));
        v
    });
    let n4 = checked_node(&sys, c4.clone(), boxinv, vec![d.clone()]).map_err(shape)?;
    let n3 = checked_node(
        &sys,
        c3.clone(),
        RuleInstance::at(RuleId::BangL, Position::new(vec![a_at], 0)),
        vec![n4],
    )
    .map_err(shape)?;
    let contr = RuleInstance::at(RuleId::ContrB, Position::top(a_at - 1)).with_splits(vec![a_at, a_at]);
    let c2 = instantiate_backward(&sys, &c1, &contr)
        .map_err(|e| shape(e.to_string()))?
        .remove(0);
    let n2 = forced_perm(&sys, &c2, n3)?;
    let n1 = checked_node(&sys, c1, contr, vec![n2]).map_err(shape)?;
    forced_perm(&sys, &c0, n1)
}

/// A `PermStar` node even when it is the identity, so (inst) always adds
/// the same number of rule applications.
fn forced_perm(sys: &System, concl: &Sequent, sub: Derivation) -> Result<Derivation, BridgeError> {
    let blocks = perm::between(&concl.ant, &sub.conclusion.ant)
        .ok_or_else(|| shape(format!("no permutation from {concl} to {}", sub.conclusion)))?;
    let inst = RuleInstance::perm(perm::flatten(&blocks));
    checked_node(sys, concl.clone(), inst, vec![sub]).map_err(shape)
}

/// Base case: `Φ̃, Γ̃, s => s`.
fn base(g: &Grammar) -> Result<Derivation, BridgeError> {
    let sys = System::BL1;
    let e = encode(g);
    let s = Formula::atom(g.start.as_str());
    let mut items: Vec<Item> = e.phi_tilde.items.iter().chain(&e.gamma_tilde.items).cloned().collect();
    items.push(Item::Leaf(s.clone()));
    let concl = Sequent::new(Config::new(items), s);
    let n = e.b_list.len();
    let mut inter = Vec::new();
    for (p, q) in e.phi_tilde.items.iter().zip(&e.gamma_tilde.items) {
        inter.push(p.clone());
        inter.push(q.clone());
    }
    inter.push(Item::Leaf(concl.succ.clone()));
    let inter = Sequent::new(Config::new(inter), concl.succ.clone());
    let mut insts = Vec::new();
    insts.extend((0..n).map(|i| RuleInstance::at(RuleId::BangL, Position::top(2 * i))));
    insts.extend((0..n).map(|i| RuleInstance::at(RuleId::OverL, Position::top(i)).with_splits(vec![i + 2])));
    insts.extend((0..n).map(|_| RuleInstance::at(RuleId::UnitL, Position::top(0))));
    let tower = chain(&sys, &inter, &insts, &mut |s| axiom(s), axiom)?;
    permute_to(&sys, &concl, tower).map_err(shape)
}

/// Direction 1⇒2: a `BL1` derivation of `Φ̃, Γ̃, w => s` from a rewriting
/// trace `s ⇒* w`.
pub fn build_bracketed_derivation(g: &Grammar, t: &RewriteTrace) -> Result<Derivation, BridgeError> {
    if t.start != [g.start.clone()] {
        return Err(BridgeError::InvalidTrace("trace does not start at the start symbol".into()));
    }
    let words = t
        .replay(g)
        .map_err(|e| BridgeError::InvalidTrace(e.to_string()))?;
    if words.last() != Some(&t.end) {
        return Err(BridgeError::InvalidTrace("trace does not end at its end word".into()));
    }
    let sys = System::BL1;
    let e = encode(g);
    let n = e.b_list.len();
    let prefix: Vec<Item> = e.phi_tilde.items.iter().chain(&e.gamma_tilde.items).cloned().collect();
    let s = Formula::atom(g.start.as_str());
    let seq = |w: Vec<Item>| {
        let mut v = prefix.clone();
        v.extend(w);
        Sequent::new(Config::new(v), s.clone())
    };
    let leaves = |w: &[String]| -> Vec<Item> { w.iter().map(|x| Item::Leaf(Formula::atom(x.as_str()))).collect() };
    let mut d = base(g)?;
    for (step, before) in t.steps.iter().zip(&words) {
        let p = &g.productions[step.production];
        let eta = &before[..step.position];
        let theta = &before[step.position + p.lhs.len()..];
        let at = 2 * n + eta.len();
        let b = e.b_list[step.production].clone();
        let mut ov = leaves(eta);
        ov.push(Item::Leaf(b));
        ov.extend(leaves(&p.rhs));
        ov.extend(leaves(theta));
        let ov = seq(ov);
        let mut insts = vec![RuleInstance::at(RuleId::OverL, Position::top(at)).with_splits(vec![at + 1 + p.rhs.len()])];
        insts.extend((0..p.lhs.len() - 1).map(|j| RuleInstance::at(RuleId::ProdL, Position::top(at + j))));
        let prev = d;
        let over = chain(&sys, &ov, &insts, &mut |x| product_right(&sys, x), move |_| Ok(prev))?;
        d = inst_macro(&over, n + step.production, at)?;
    }
    Ok(d)
}
