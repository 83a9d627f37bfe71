//! Small constructors for derivation fragments that several transformations
//! share.

use crate::syntax::{Position, Sequent};

use super::{instantiate_backward, perm, Derivation, RuleId, RuleInstance, System};

/// A node whose premises are checked against backward instantiation.
pub fn checked_node(
    sys: &System,
    concl: Sequent,
    inst: RuleInstance,
    premises: Vec<Derivation>,
) -> Result<Derivation, String> {
    let want = instantiate_backward(sys, &concl, &inst)
        .map_err(|e| format!("{} on {concl}: {e}", inst.rule))?;
    if want.len() != premises.len() || want.iter().zip(&premises).any(|(w, p)| *w != p.conclusion) {
        return Err(format!("{} on {concl}: premise mismatch", inst.rule));
    }
    Ok(Derivation::new(concl, inst, premises))
}

/// `PermStar` from `concl` down to `sub`, or `sub` itself when nothing moves.
pub fn permute_to(sys: &System, concl: &Sequent, sub: Derivation) -> Result<Derivation, String> {
    if concl.ant == sub.conclusion.ant {
        return Ok(sub);
    }
    let blocks = perm::between(&concl.ant, &sub.conclusion.ant)
        .ok_or_else(|| format!("no permutation from {concl} to {}", sub.conclusion))?;
    checked_node(sys, concl.clone(), RuleInstance::perm(perm::flatten(&blocks)), vec![sub])
}

/// Derive `concl` (with `!`-leaves `B₁…B_k` at `at`) from `sub`, whose
/// antecedent has the block doubled (`B₁…B_k, B₁…B_k`): one `Contr` per leaf,
/// then one `PermStar`.
pub fn contract_block(
    sys: &System,
    concl: &Sequent,
    at: &Position,
    k: usize,
    sub: Derivation,
) -> Result<Derivation, String> {
    let mut chain = vec![concl.clone()];
    let mut insts = Vec::new();
    for j in (0..k).rev() {
        let ci = RuleInstance::at(RuleId::Contr, Position::new(at.node.clone(), at.index + j));
        let next = instantiate_backward(sys, chain.last().expect("nonempty"), &ci)
            .map_err(|e| e.to_string())?
            .remove(0);
        insts.push(ci);
        chain.push(next);
    }
    let top = chain.pop().expect("nonempty");
    let mut cur = permute_to(sys, &top, sub)?;
    while let (Some(c), Some(ci)) = (chain.pop(), insts.pop()) {
        cur = checked_node(sys, c, ci, vec![cur])?;
    }
    Ok(cur)
}
