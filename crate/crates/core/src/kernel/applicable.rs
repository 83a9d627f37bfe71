use std::collections::HashSet;

use crate::syntax::{Config, Item, Position, Sequent};

use super::instantiate::instantiate_backward;
use super::perm;
use super::rule::{RuleId, RuleInstance};
use super::system::System;

/// Leaves plus bracket nodes.
pub fn item_count(c: &Config) -> usize {
    c.leaf_count() + c.bracket_count()
}

fn item_positions(c: &Config) -> Vec<Position> {
    let mut out = Vec::new();
    for node in c.node_paths() {
        let n = c.node(&node).expect("node path");
        for i in 0..n.len() {
            out.push(Position::new(node.clone(), i));
        }
    }
    out.sort_by(|a, b| {
        let fa = c.flat_offset(&a.node, a.index);
        let fb = c.flat_offset(&b.node, b.index);
        fa.cmp(&fb).then(a.node.len().cmp(&b.node.len()))
    });
    out
}

const PLAIN_ORDER: [RuleId; 19] = [
    RuleId::AxId,
    RuleId::AxUnit,
    RuleId::UnderL,
    RuleId::UnderR,
    RuleId::OverL,
    RuleId::OverR,
    RuleId::ProdL,
    RuleId::ProdR,
    RuleId::UnitL,
    RuleId::DiamondL,
    RuleId::DiamondR,
    RuleId::BoxInvL,
    RuleId::BoxInvR,
    RuleId::BangL,
    RuleId::BangR,
    RuleId::ContrB,
    RuleId::Contr,
    RuleId::Weak,
    RuleId::PermStar,
];

fn candidates(s: &Sequent, sys: &System, rule: RuleId) -> Vec<RuleInstance> {
    use RuleId::*;
    let ant = &s.ant;
    match rule {
        AxId | AxUnit | UnderR | OverR | DiamondR | BoxInvR | BangR => vec![RuleInstance::new(rule)],
        ProdR => (0..=ant.len())
            .map(|k| RuleInstance::new(rule).with_splits(vec![k]))
            .collect(),
        UnderL | OverL | ProdL | UnitL | DiamondL | BangL | Contr | Weak => {
            let mut out = Vec::new();
            for pos in ant.leaf_positions() {
                let len = ant.node(&pos.node).map_or(0, |n| n.len());
                match rule {
                    UnderL => out.extend(
                        (0..=pos.index)
                            .map(|k| RuleInstance::at(rule, pos.clone()).with_splits(vec![k])),
                    ),
                    OverL => out.extend(
                        (pos.index + 1..=len)
                            .map(|k| RuleInstance::at(rule, pos.clone()).with_splits(vec![k])),
                    ),
                    _ => out.push(RuleInstance::at(rule, pos)),
                }
            }
            out
        }
        BoxInvL => item_positions(ant)
            .into_iter()
            .filter(|p| matches!(ant.item(p), Some(Item::Bracket(_))))
            .map(|p| RuleInstance::at(rule, p))
            .collect(),
        ContrB => {
            let mut out = Vec::new();
            for pos in item_positions(ant) {
                let len = ant.node(&pos.node).map_or(0, |n| n.len());
                for mid in pos.index + 1..=len {
                    for end in mid..=len {
                        out.push(RuleInstance::at(rule, pos.clone()).with_splits(vec![mid, end]));
                    }
                }
            }
            out
        }
        AxTheory(_) => (0..sys.theory().len())
            .map(|i| RuleInstance::new(AxTheory(i)))
            .collect(),
        PermStar | Cut => vec![],
    }
}

fn plain_instances(s: &Sequent, sys: &System, bound: usize, first_only: bool) -> Vec<RuleInstance> {
    let mut out = Vec::new();
    let mut rules: Vec<RuleId> = PLAIN_ORDER[..PLAIN_ORDER.len() - 1].to_vec();
    rules.insert(2, RuleId::AxTheory(0));
    for rule in rules {
        if !matches!(rule, RuleId::AxTheory(_)) && !sys.available(rule) {
            continue;
        }
        for inst in candidates(s, sys, rule) {
            let Ok(prem) = instantiate_backward(sys, s, &inst) else {
                continue;
            };
            if rule == RuleId::ContrB && item_count(&prem[0].ant) > bound {
                continue;
            }
            out.push(inst);
            if first_only {
                return out;
            }
        }
    }
    out
}

/// Orders of one node's children that keep every non-`!` item in place
/// relative to the others; each is a map from new position to old.
fn node_arrangements(node: &Config) -> Vec<Vec<usize>> {
    let fixed: Vec<usize> = (0..node.len()).filter(|&i| !node.items[i].is_bang_leaf()).collect();
    let bangs: Vec<usize> = (0..node.len()).filter(|&i| node.items[i].is_bang_leaf()).collect();
    let mut out = Vec::new();
    let mut cur = Vec::new();
    let mut used = vec![false; bangs.len()];
    arrange(&fixed, 0, &bangs, &mut used, &mut cur, &mut out);
    out
}

fn arrange(
    fixed: &[usize],
    next: usize,
    bangs: &[usize],
    used: &mut Vec<bool>,
    cur: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if next == fixed.len() && used.iter().all(|u| *u) {
        out.push(cur.clone());
        return;
    }
    if next < fixed.len() {
        cur.push(fixed[next]);
        arrange(fixed, next + 1, bangs, used, cur, out);
        cur.pop();
    }
    for k in 0..bangs.len() {
        if !used[k] {
            used[k] = true;
            cur.push(bangs[k]);
            arrange(fixed, next, bangs, used, cur, out);
            cur.pop();
            used[k] = false;
        }
    }
}

/// Every permutation map of `ant` (one block per node, preorder).
pub fn all_perm_maps(ant: &Config) -> Vec<Vec<usize>> {
    let mut per_node = Vec::new();
    for path in ant.node_paths() {
        per_node.push(node_arrangements(ant.node(&path).expect("node path")));
    }
    let mut out: Vec<Vec<usize>> = vec![vec![]];
    for options in per_node {
        let mut next = Vec::with_capacity(out.len() * options.len());
        for prefix in &out {
            for o in &options {
                let mut v = prefix.clone();
                v.extend(o);
                next.push(v);
            }
        }
        out = next;
    }
    out
}

/// All cut-free rule instances whose backward instantiation succeeds on `s`.
/// `PermStar` instances are listed only when they change the sequent and the
/// permuted sequent admits some other rule; permutations yielding the same
/// premise are listed once. `bound` caps the antecedent size produced by
/// `ContrB`.
pub fn applicable_instances(s: &Sequent, sys: &System, bound: usize) -> Vec<RuleInstance> {
    let mut out = plain_instances(s, sys, bound, false);
    if sys.available(RuleId::PermStar) {
        out.extend(enabling_perms(s, sys, bound));
    }
    out
}

fn enabling_perms(s: &Sequent, sys: &System, bound: usize) -> Vec<RuleInstance> {
    let mut out = Vec::new();
    let mut seen = HashSet::new();
    seen.insert(s.ant.clone());
    for flat in all_perm_maps(&s.ant) {
        let blocks = perm::split(&s.ant, &flat).expect("generated map fits");
        let prem = perm::apply(&s.ant, &blocks).expect("generated map is valid");
        if !seen.insert(prem.clone()) {
            continue;
        }
        let ps = Sequent::new(prem, s.succ.clone());
        if !plain_instances(&ps, sys, bound, true).is_empty() {
            out.push(RuleInstance::perm(flat));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::parse_sequent;

    fn rules(t: &str) -> Vec<String> {
        let s = parse_sequent(t).unwrap();
        applicable_instances(&s, &System::BL1, 16)
            .iter()
            .map(|i| match i.splits.as_slice() {
                [] => i.rule.to_string(),
                sp => format!("{}{:?}", i.rule, sp),
            })
            .collect()
    }

    #[test]
    fn axioms_only() {
        assert_eq!(rules("p => p"), vec!["AxId"]);
        assert_eq!(rules("=> 1"), vec!["AxUnit"]);
    }

    #[test]
    fn product_splits() {
        assert_eq!(rules("p, q => p*q"), vec!["ProdR[0]", "ProdR[1]", "ProdR[2]"]);
    }

    #[test]
    fn permutations_are_deduplicated() {
        let s = parse_sequent("!p, !p, a => a").unwrap();
        let perms: Vec<_> = applicable_instances(&s, &System::BL1, 16)
            .into_iter()
            .filter(|i| i.rule == RuleId::PermStar)
            .collect();
        // !p,a,!p and a,!p,!p
        assert_eq!(perms.len(), 2);
        assert_eq!(all_perm_maps(&s.ant).len(), 6);
    }
}
