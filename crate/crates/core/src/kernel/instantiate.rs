use thiserror::Error;

use crate::syntax::{Config, Formula, Item, Sequent};

use super::perm;
use super::rule::{RuleId, RuleInstance};
use super::system::System;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum KernelError {
    #[error("rule {rule} is not available in {system}")]
    RuleUnavailable { rule: RuleId, system: String },
    #[error("invalid position or parameters: {0}")]
    PathInvalid(String),
    #[error("rule does not match the sequent: {0}")]
    ShapeMismatch(String),
}

fn shape<T>(msg: impl Into<String>) -> Result<T, KernelError> {
    Err(KernelError::ShapeMismatch(msg.into()))
}

fn path<T>(msg: impl Into<String>) -> Result<T, KernelError> {
    Err(KernelError::PathInvalid(msg.into()))
}

fn node<'a>(ant: &'a Config, inst: &RuleInstance) -> Result<&'a Config, KernelError> {
    match ant.node(&inst.at.node) {
        Some(n) => Ok(n),
        None => path(format!("no node at {:?}", inst.at.node)),
    }
}

fn leaf<'a>(ant: &'a Config, inst: &RuleInstance) -> Result<&'a Formula, KernelError> {
    match node(ant, inst)?.items.get(inst.at.index) {
        Some(Item::Leaf(f)) => Ok(f),
        Some(Item::Bracket(_)) => path("position designates a bracket, not a formula"),
        None => path(format!("index {} out of range", inst.at.index)),
    }
}

fn split(inst: &RuleInstance, k: usize) -> Result<usize, KernelError> {
    match inst.splits.get(k) {
        Some(&s) => Ok(s),
        None => path(format!("{} needs {} split indices", inst.rule, k + 1)),
    }
}

fn replace_leaf(ant: &Config, inst: &RuleInstance, with: Vec<Item>) -> Config {
    ant.splice(&inst.at.node, inst.at.index, inst.at.index + 1, with)
        .expect("position already validated")
}

fn leaves(fs: &[&Formula]) -> Vec<Item> {
    fs.iter().map(|f| Item::Leaf((*f).clone())).collect()
}

/// Premises of `concl` under `inst`, read bottom-up.
pub fn instantiate_backward(
    sys: &System,
    concl: &Sequent,
    inst: &RuleInstance,
) -> Result<Vec<Sequent>, KernelError> {
    use RuleId::*;
    if !sys.available(inst.rule) {
        return Err(KernelError::RuleUnavailable {
            rule: inst.rule,
            system: sys.to_string(),
        });
    }
    let ant = &concl.ant;
    let succ = &concl.succ;
    let seq = |a: Config, s: &Formula| Sequent::new(a, s.clone());
    match inst.rule {
        AxId => match ant.items.as_slice() {
            [Item::Leaf(f)] if f == succ => Ok(vec![]),
            _ => shape("identity axiom needs `A => A`"),
        },
        AxUnit => {
            if ant.is_empty() && *succ == Formula::Unit {
                Ok(vec![])
            } else {
                shape("unit axiom needs `=> 1`")
            }
        }
        AxTheory(i) => {
            if sys.theory().get(i) == Some(concl) {
                Ok(vec![])
            } else {
                shape(format!("sequent is not theory axiom {i}"))
            }
        }
        UnderL => {
            let Formula::Under(a, c) = leaf(ant, inst)? else {
                return shape("principal formula is not `A\\C`");
            };
            let s = split(inst, 0)?;
            if s > inst.at.index {
                return path("Γ must end before the principal formula");
            }
            let n = node(ant, inst)?;
            let gamma = Config::new(n.items[s..inst.at.index].to_vec());
            let rest = ant
                .splice(&inst.at.node, s, inst.at.index + 1, leaves(&[c]))
                .expect("validated");
            Ok(vec![seq(gamma, a), seq(rest, succ)])
        }
        OverL => {
            let Formula::Over(c, b) = leaf(ant, inst)? else {
                return shape("principal formula is not `C/B`");
            };
            let e = split(inst, 0)?;
            let n = node(ant, inst)?;
            if e <= inst.at.index || e > n.len() {
                return path("Γ must start right after the principal formula");
            }
            let gamma = Config::new(n.items[inst.at.index + 1..e].to_vec());
            let rest = ant
                .splice(&inst.at.node, inst.at.index, e, leaves(&[c]))
                .expect("validated");
            Ok(vec![seq(gamma, b), seq(rest, succ)])
        }
        UnderR => {
            let Formula::Under(a, c) = succ else {
                return shape("succedent is not `A\\C`");
            };
            let mut items = leaves(&[a]);
            items.extend(ant.items.iter().cloned());
            Ok(vec![seq(Config::new(items), c)])
        }
        OverR => {
            let Formula::Over(c, b) = succ else {
                return shape("succedent is not `C/B`");
            };
            let mut items = ant.items.clone();
            items.extend(leaves(&[b]));
            Ok(vec![seq(Config::new(items), c)])
        }
        ProdL => {
            let Formula::Prod(a, b) = leaf(ant, inst)? else {
                return shape("principal formula is not a product");
            };
            Ok(vec![seq(replace_leaf(ant, inst, leaves(&[a, b])), succ)])
        }
        ProdR => {
            let Formula::Prod(a, b) = succ else {
                return shape("succedent is not a product");
            };
            let k = split(inst, 0)?;
            if k > ant.len() {
                return path("split beyond the antecedent");
            }
            Ok(vec![
                seq(Config::new(ant.items[..k].to_vec()), a),
                seq(Config::new(ant.items[k..].to_vec()), b),
            ])
        }
        UnitL => {
            if *leaf(ant, inst)? != Formula::Unit {
                return shape("principal formula is not `1`");
            }
            Ok(vec![seq(replace_leaf(ant, inst, vec![]), succ)])
        }
        DiamondL => {
            let Formula::Diamond(a) = leaf(ant, inst)? else {
                return shape("principal formula is not `<>A`");
            };
            let br = Item::Bracket(Config::leaves([(**a).clone()]));
            Ok(vec![seq(replace_leaf(ant, inst, vec![br]), succ)])
        }
        DiamondR => {
            let Formula::Diamond(a) = succ else {
                return shape("succedent is not `<>A`");
            };
            match ant.items.as_slice() {
                [Item::Bracket(inner)] => Ok(vec![seq(inner.clone(), a)]),
                _ => shape("antecedent must be a single bracket"),
            }
        }
        BoxInvL => {
            let n = node(ant, inst)?;
            let Some(Item::Bracket(inner)) = n.items.get(inst.at.index) else {
                return path("position does not designate a bracket");
            };
            let [Item::Leaf(Formula::BoxInv(a))] = inner.items.as_slice() else {
                return shape("bracket does not hold exactly one `[]-1A`");
            };
            Ok(vec![seq(replace_leaf(ant, inst, leaves(&[a])), succ)])
        }
        BoxInvR => {
            let Formula::BoxInv(a) = succ else {
                return shape("succedent is not `[]-1A`");
            };
            Ok(vec![seq(Config::new(vec![Item::Bracket(ant.clone())]), a)])
        }
        BangL => {
            let Formula::Bang(a) = leaf(ant, inst)? else {
                return shape("principal formula is not `!A`");
            };
            Ok(vec![seq(replace_leaf(ant, inst, leaves(&[a])), succ)])
        }
        BangR => {
            let Formula::Bang(a) = succ else {
                return shape("succedent is not `!A`");
            };
            if !ant.items.iter().all(|it| it.is_bang_leaf()) {
                return shape("antecedent must consist of `!`-formulae only");
            }
            if *sys == System::BL1 && ant.is_empty() {
                return shape("antecedent must be nonempty");
            }
            Ok(vec![seq(ant.clone(), a)])
        }
        ContrB => {
            let n = node(ant, inst)?;
            let start = inst.at.index;
            let mid = split(inst, 0)?;
            let end = split(inst, 1)?;
            if !(start < mid && mid <= end && end <= n.len()) {
                return path("need start < mid <= end <= node length");
            }
            let block = &n.items[start..mid];
            if !block.iter().all(|it| it.is_bang_leaf()) {
                return shape("contracted block must consist of `!`-formulae");
            }
            let mut inner = block.to_vec();
            inner.extend(n.items[mid..end].iter().cloned());
            let prem = ant
                .splice(&inst.at.node, mid, end, vec![Item::Bracket(Config::new(inner))])
                .expect("validated");
            Ok(vec![seq(prem, succ)])
        }
        Contr => {
            let f = leaf(ant, inst)?;
            if !f.is_bang() {
                return shape("principal formula is not `!A`");
            }
            Ok(vec![seq(replace_leaf(ant, inst, leaves(&[f, f])), succ)])
        }
        Weak => {
            if !leaf(ant, inst)?.is_bang() {
                return shape("principal formula is not `!A`");
            }
            Ok(vec![seq(replace_leaf(ant, inst, vec![]), succ)])
        }
        PermStar => {
            let blocks = perm::split(ant, &inst.perm_map).map_err(KernelError::PathInvalid)?;
            let prem = perm::apply(ant, &blocks).map_err(KernelError::ShapeMismatch)?;
            Ok(vec![seq(prem, succ)])
        }
        Cut => {
            let Some(a) = &inst.cut_formula else {
                return path("cut needs a cut formula");
            };
            let n = node(ant, inst)?;
            let start = inst.at.index;
            let end = split(inst, 0)?;
            if start > end || end > n.len() {
                return path("cut segment out of range");
            }
            let pi = Config::new(n.items[start..end].to_vec());
            let rest = ant
                .splice(&inst.at.node, start, end, leaves(&[a]))
                .expect("validated");
            Ok(vec![seq(pi, a), seq(rest, succ)])
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::{parse_sequent, Position};

    fn prem(sys: &System, s: &str, inst: RuleInstance) -> Result<Vec<String>, KernelError> {
        let c = parse_sequent(s).unwrap();
        instantiate_backward(sys, &c, &inst).map(|v| v.iter().map(|p| p.to_string()).collect())
    }

    #[test]
    fn over_left_on_transitive_verb() {
        let inst = RuleInstance::at(RuleId::OverL, Position::top(1)).with_splits(vec![3]);
        assert_eq!(
            prem(&System::BL1, "N, (N\\S)/N, N => S", inst).unwrap(),
            vec!["N => N", "N, N\\S => S"]
        );
    }

    #[test]
    fn bang_right_and_emptiness() {
        let inst = RuleInstance::new(RuleId::BangR);
        assert_eq!(prem(&System::BL1, "!p => !p", inst.clone()).unwrap(), vec!["!p => p"]);
        assert!(prem(&System::BL1, "=> !1", inst.clone()).is_err());
        assert_eq!(prem(&System::L1BangW, "=> !1", inst.clone()).unwrap(), vec!["=> 1"]);
        assert!(prem(&System::BL1, "q, !p => !p", inst).is_err());
    }

    #[test]
    fn availability() {
        let inst = RuleInstance::at(RuleId::Contr, Position::top(0));
        assert!(matches!(
            prem(&System::BL1, "!p => p", inst.clone()),
            Err(KernelError::RuleUnavailable { .. })
        ));
        assert_eq!(prem(&System::L1Bang, "!p => p", inst).unwrap(), vec!["!p, !p => p"]);
    }

    #[test]
    fn bracket_rules() {
        let dl = RuleInstance::at(RuleId::DiamondL, Position::top(1));
        assert_eq!(prem(&System::BL1, "a, <>b => c", dl).unwrap(), vec!["a, [b] => c"]);
        let bl = RuleInstance::at(RuleId::BoxInvL, Position::top(0));
        assert_eq!(prem(&System::BL1, "[[]-1b], c => d", bl).unwrap(), vec!["b, c => d"]);
        let br = RuleInstance::new(RuleId::BoxInvR);
        assert_eq!(prem(&System::BL1, "a, b => []-1c", br).unwrap(), vec!["[a, b] => c"]);
        let dr = RuleInstance::new(RuleId::DiamondR);
        assert_eq!(prem(&System::BL1, "[a] => <>a", dr).unwrap(), vec!["a => a"]);
    }

    #[test]
    fn gated_contraction() {
        let inst = RuleInstance::at(RuleId::ContrB, Position::top(1)).with_splits(vec![3, 4]);
        assert_eq!(
            prem(&System::BL1, "a, !p, !q, b, c => d", inst).unwrap(),
            vec!["a, !p, !q, [!p, !q, b], c => d"]
        );
        let bad = RuleInstance::at(RuleId::ContrB, Position::top(0)).with_splits(vec![1, 1]);
        assert!(prem(&System::BL1, "a, !p => d", bad).is_err());
    }

    #[test]
    fn left_rules_and_cut() {
        let ul = RuleInstance::at(RuleId::UnderL, Position::top(2)).with_splits(vec![1]);
        assert_eq!(
            prem(&System::BL1, "x, n, n\\s, y => t", ul).unwrap(),
            vec!["n => n", "x, s, y => t"]
        );
        let pr = RuleInstance::new(RuleId::ProdR).with_splits(vec![1]);
        assert_eq!(prem(&System::BL1, "a, b => a*b", pr).unwrap(), vec!["a => a", "b => b"]);
        let cut = RuleInstance::cut(Position::top(0), 2, Formula::atom("m"));
        assert_eq!(prem(&System::BL1, "a, b, c => d", cut).unwrap(), vec!["a, b => m", "m, c => d"]);
        let perm = RuleInstance::perm(vec![1, 0]);
        assert_eq!(prem(&System::BL1, "a, !p => d", perm).unwrap(), vec!["!p, a => d"]);
    }
}
