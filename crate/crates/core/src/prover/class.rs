//! Sequents modulo `PermStar`: in every node the non-`!` items keep their
//! order and the `!`-leaves form a sorted multiset.

use crate::syntax::{Config, Formula, Item, Sequent};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub(crate) enum CItem {
    Leaf(Formula),
    Bracket(CNode),
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub(crate) struct CNode {
    pub fixed: Vec<CItem>,
    pub bangs: Vec<Formula>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub(crate) struct Goal {
    pub ant: CNode,
    pub succ: Formula,
}

impl CItem {
    pub fn to_item(&self) -> Item {
        match self {
            CItem::Leaf(f) => Item::Leaf(f.clone()),
            CItem::Bracket(n) => Item::Bracket(n.to_config()),
        }
    }
}

impl CNode {
    pub fn from_config(c: &Config) -> CNode {
        let mut fixed = Vec::new();
        let mut bangs = Vec::new();
        for it in &c.items {
            match it {
                Item::Leaf(f) if f.is_bang() => bangs.push(f.clone()),
                Item::Leaf(f) => fixed.push(CItem::Leaf(f.clone())),
                Item::Bracket(inner) => fixed.push(CItem::Bracket(CNode::from_config(inner))),
            }
        }
        bangs.sort();
        CNode { fixed, bangs }
    }

    /// Canonical layout: `!`-leaves first, then the fixed items.
    pub fn to_config(&self) -> Config {
        Config::new(self.layout_items())
    }

    pub fn layout_items(&self) -> Vec<Item> {
        let mut items: Vec<Item> = self.bangs.iter().cloned().map(Item::Leaf).collect();
        items.extend(self.fixed.iter().map(CItem::to_item));
        items
    }

    pub fn len(&self) -> usize {
        self.fixed.len() + self.bangs.len()
    }

    /// Every node with its path of fixed-item indices, preorder.
    pub fn nodes(&self) -> Vec<(Vec<usize>, &CNode)> {
        let mut out = vec![(vec![], self)];
        for (i, it) in self.fixed.iter().enumerate() {
            if let CItem::Bracket(n) = it {
                for (mut p, m) in n.nodes() {
                    p.insert(0, i);
                    out.push((p, m));
                }
            }
        }
        out
    }

    /// Canonical layout everywhere except node `path`, whose children are
    /// given by `custom`. Also returns the concrete path of that node.
    pub fn layout_with(&self, path: &[usize], custom: Vec<Item>) -> (Config, Vec<usize>) {
        let Some((&first, rest)) = path.split_first() else {
            return (Config::new(custom), vec![]);
        };
        let mut items: Vec<Item> = self.bangs.iter().cloned().map(Item::Leaf).collect();
        let mut concrete = vec![];
        for (i, it) in self.fixed.iter().enumerate() {
            match it {
                CItem::Bracket(n) if i == first => {
                    let (inner, sub) = n.layout_with(rest, custom.clone());
                    concrete = vec![items.len()];
                    concrete.extend(sub);
                    items.push(Item::Bracket(inner));
                }
                other => items.push(other.to_item()),
            }
        }
        (Config::new(items), concrete)
    }
}

impl Goal {
    pub fn from_sequent(s: &Sequent) -> Goal {
        Goal {
            ant: CNode::from_config(&s.ant),
            succ: s.succ.clone(),
        }
    }

    pub fn to_sequent(&self) -> Sequent {
        Sequent::new(self.ant.to_config(), self.succ.clone())
    }
}

/// Sub-multisets of a sorted list, as sorted lists, smallest first.
pub(crate) fn submultisets(sorted: &[Formula]) -> Vec<Vec<Formula>> {
    let mut groups: Vec<(&Formula, usize)> = Vec::new();
    for f in sorted {
        match groups.last_mut() {
            Some((g, n)) if *g == f => *n += 1,
            _ => groups.push((f, 1)),
        }
    }
    let mut out: Vec<Vec<Formula>> = vec![vec![]];
    for (f, n) in groups {
        let mut next = Vec::new();
        for prefix in &out {
            for k in 0..=n {
                let mut v = prefix.clone();
                v.extend(std::iter::repeat_n(f.clone(), k));
                next.push(v);
            }
        }
        out = next;
    }
    out.sort_by_key(|v| v.len());
    out
}

/// `whole` minus `part`, both sorted.
pub(crate) fn minus(whole: &[Formula], part: &[Formula]) -> Vec<Formula> {
    let mut out = whole.to_vec();
    for f in part {
        if let Some(i) = out.iter().position(|g| g == f) {
            out.remove(i);
        }
    }
    out
}
