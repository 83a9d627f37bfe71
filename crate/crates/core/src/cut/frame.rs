//! Re-indexing rule instances when a marked leaf is replaced by a list of
//! items, or when a derivation is moved into a larger context.

use crate::kernel::{instantiate_backward, perm, RuleId, RuleInstance, System};
use crate::syntax::{Config, Formula, Item, Position, Sequent};

use super::CutError;

/// Stand-in for the cut formula in the right premise (never a parsed atom).
pub(crate) fn plain_marker() -> Formula {
    Formula::atom("#cut")
}

/// Stand-in for a traced `!A`; a `!`-formula so the structural rules accept it.
pub(crate) fn bang_marker() -> Formula {
    Formula::bang(Formula::atom("#bang"))
}

fn markers_before(node: &Config, end: usize, m: &Formula) -> usize {
    node.items[..end.min(node.len())]
        .iter()
        .filter(|it| it.formula() == Some(m))
        .count()
}

fn shift(i: usize, count: usize, k: usize) -> usize {
    (i + count * k) - count
}

/// Index `i` (item or boundary) of node `path` after expansion.
fn map_index(x: &Config, path: &[usize], i: usize, m: &Formula, k: usize) -> usize {
    let node = x.node(path).expect("instance node exists");
    shift(i, markers_before(node, i, m), k)
}

fn map_path(x: &Config, path: &[usize], m: &Formula, k: usize) -> Vec<usize> {
    (0..path.len())
        .map(|d| map_index(x, &path[..d], path[d], m, k))
        .collect()
}

pub(crate) fn map_position(x: &Config, p: &Position, m: &Formula, k: usize) -> Position {
    Position::new(map_path(x, &p.node, m, k), map_index(x, &p.node, p.index, m, k))
}

/// Replace every leaf equal to `m` by `with`.
pub(crate) fn expand(x: &Config, m: &Formula, with: &[Item]) -> Config {
    let mut items = Vec::new();
    for it in &x.items {
        match it {
            Item::Leaf(f) if f == m => items.extend(with.iter().cloned()),
            Item::Leaf(_) => items.push(it.clone()),
            Item::Bracket(c) => items.push(Item::Bracket(expand(c, m, with))),
        }
    }
    Config::new(items)
}

pub(crate) fn expand_seq(s: &Sequent, m: &Formula, with: &[Item]) -> Sequent {
    Sequent::new(expand(&s.ant, m, with), s.succ.clone())
}

pub(crate) fn contains(x: &Config, m: &Formula) -> bool {
    x.flat_formulas().into_iter().any(|f| f == m)
}

pub(crate) fn find(x: &Config, m: &Formula) -> Option<Position> {
    x.leaf_positions().into_iter().find(|p| x.leaf(p) == Some(m))
}

/// The instance of `inst` (valid on the marked conclusion) for the
/// expanded conclusion. `PermStar` is recomputed from the two expanded sides.
pub(crate) struct Reframed {
    pub concl: Sequent,
    pub inst: RuleInstance,
    pub marked_premises: Vec<Sequent>,
}

pub(crate) fn reframe(
    sys: &System,
    marked: &Sequent,
    inst: &RuleInstance,
    m: &Formula,
    with: &[Item],
) -> Result<Reframed, CutError> {
    let k = with.len();
    let marked_premises = instantiate_backward(sys, marked, inst)
        .map_err(|e| CutError::Internal(format!("marked instance failed: {e}")))?;
    let concl = expand_seq(marked, m, with);
    let new_inst = if inst.rule == RuleId::PermStar {
        let to = expand(&marked_premises[0].ant, m, with);
        let blocks = perm::between(&concl.ant, &to)
            .ok_or_else(|| CutError::Internal("expanded permutation not found".into()))?;
        RuleInstance::perm(perm::flatten(&blocks))
    } else {
        let x = &marked.ant;
        let mut out = inst.clone();
        out.at = map_position(x, &inst.at, m, k);
        out.splits = inst
            .splits
            .iter()
            .map(|&b| map_index(x, &inst.at.node, b, m, k))
            .collect();
        out
    };
    let expect: Vec<Sequent> = marked_premises
        .iter()
        .map(|p| expand_seq(p, m, with))
        .collect();
    let got = instantiate_backward(sys, &concl, &new_inst)
        .map_err(|e| CutError::Internal(format!("reframed instance failed: {e}")))?;
    if got != expect {
        return Err(CutError::Internal(format!(
            "reframed {} gives {:?}, expected {:?}",
            inst.rule,
            got.iter().map(|s| s.to_string()).collect::<Vec<_>>(),
            expect.iter().map(|s| s.to_string()).collect::<Vec<_>>()
        )));
    }
    Ok(Reframed {
        concl,
        inst: new_inst,
        marked_premises,
    })
}

/// Move an instance that acts on the antecedent `Π` into `Δ(Π)`, where the
/// top-level items of `Π` start at `pos`.
pub(crate) fn lift(inst: &RuleInstance, pos: &Position) -> RuleInstance {
    let mut out = inst.clone();
    if inst.at.node.is_empty() {
        out.at = Position::new(pos.node.clone(), pos.index + inst.at.index);
        out.splits = inst.splits.iter().map(|b| b + pos.index).collect();
    } else {
        let mut node = pos.node.clone();
        node.push(pos.index + inst.at.node[0]);
        node.extend(&inst.at.node[1..]);
        out.at = Position::new(node, inst.at.index);
    }
    out
}
