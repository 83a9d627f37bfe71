use crate::cut::compose_cut;
use crate::kernel::build::{checked_node, contract_block, permute_to};
use crate::kernel::{Derivation, RuleId, RuleInstance, System};
use crate::syntax::{bfp_sequent, Config, Formula, Position, Sequent};

use super::BridgeError;

fn shape(e: String) -> BridgeError {
    BridgeError::Shape(e)
}

/// `!bL1` to `!L1` by erasing brackets and bracket modalities node by node:
/// the four bracket-modality rules vanish, `ContrB` becomes `Contr`s plus a
/// permutation.
pub fn translate_bfp_derivation(d: &Derivation) -> Result<Derivation, BridgeError> {
    let sys = System::L1Bang;
    let concl = bfp_sequent(&d.conclusion);
    let inst = &d.rule;
    let ant = &d.conclusion.ant;
    let subs = || {
        d.premises
            .iter()
            .map(translate_bfp_derivation)
            .collect::<Result<Vec<_>, _>>()
    };
    let flat = |b: usize| ant.flat_offset(&inst.at.node, b);
    match inst.rule {
        RuleId::DiamondL | RuleId::DiamondR | RuleId::BoxInvL | RuleId::BoxInvR => {
            translate_bfp_derivation(&d.premises[0])
        }
        RuleId::ContrB => {
            let sub = subs()?.remove(0);
            let k = inst.splits[0] - inst.at.index;
            contract_block(&sys, &concl, &Position::top(flat(inst.at.index)), k, sub).map_err(shape)
        }
        RuleId::PermStar => permute_to(&sys, &concl, subs()?.remove(0)).map_err(shape),
        RuleId::Contr | RuleId::Weak | RuleId::AxTheory(_) => {
            Err(shape(format!("{} does not occur in BL1", inst.rule)))
        }
        _ => {
            let mut out = inst.clone();
            out.at = Position::top(flat(inst.at.index));
            out.splits = inst.splits.iter().map(|&b| flat(b)).collect();
            out.cut_formula = inst.cut_formula.as_ref().map(crate::syntax::bfp_formula);
            checked_node(&sys, concl, out, subs()?).map_err(shape)
        }
    }
}

/// `Λ => !(1/!B)` by `Weak`, `OverR`, `BangR` over `Λ => 1`.
fn unit_promotion(bang_b: &Formula) -> Result<Derivation, BridgeError> {
    let sys = System::L1BangW;
    let one = Derivation::leaf(Sequent::new(Config::empty(), Formula::Unit), RuleInstance::new(RuleId::AxUnit));
    let weak = checked_node(
        &sys,
        Sequent::new(Config::leaves([bang_b.clone()]), Formula::Unit),
        RuleInstance::at(RuleId::Weak, Position::top(0)),
        vec![one],
    )
    .map_err(shape)?;
    let over = Formula::over(Formula::Unit, bang_b.clone());
    let over_r = checked_node(
        &sys,
        Sequent::new(Config::empty(), over.clone()),
        RuleInstance::new(RuleId::OverR),
        vec![weak],
    )
    .map_err(shape)?;
    checked_node(
        &sys,
        Sequent::new(Config::empty(), Formula::bang(over)),
        RuleInstance::new(RuleId::BangR),
        vec![over_r],
    )
    .map_err(shape)
}

fn phi_body(f: &Formula) -> Option<&Formula> {
    match f.bang_body()? {
        Formula::Over(one, b) if **one == Formula::Unit && b.is_bang() => Some(b),
        _ => None,
    }
}

/// Direction 3⇒4: cut every leading `!(1/!B)` of the antecedent against
/// `Λ => !(1/!B)`. The result uses `Cut` and lives in `L1BangW`.
pub fn translate_to_weak(d: &Derivation) -> Result<Derivation, BridgeError> {
    let mut out = d.clone();
    loop {
        let first = out.conclusion.ant.items.first().and_then(|it| it.formula());
        let Some(b) = first.and_then(phi_body).cloned() else {
            break;
        };
        let aux = unit_promotion(&b)?;
        out = compose_cut(&aux, &out, &Position::top(0)).map_err(|e| shape(e.to_string()))?;
    }
    Ok(out)
}
