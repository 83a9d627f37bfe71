use std::fmt;

use super::formula::Formula;

/// One child of a configuration node.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Item {
    Leaf(Formula),
    Bracket(Config),
}

impl Item {
    pub fn formula(&self) -> Option<&Formula> {
        match self {
            Item::Leaf(f) => Some(f),
            Item::Bracket(_) => None,
        }
    }

    /// True for a leaf of the form `!A`; those are the items the
    /// permutation rule may move.
    pub fn is_bang_leaf(&self) -> bool {
        matches!(self, Item::Leaf(f) if f.is_bang())
    }
}

/// Bracketed antecedent structure (meta-formula). The empty list is Λ.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Config {
    pub items: Vec<Item>,
}

/// A node inside a configuration (`node`, a path of bracket-child indices)
/// together with a child index in that node. Depending on the rule the index
/// designates an item or a boundary between items.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Position {
    pub node: Vec<usize>,
    pub index: usize,
}

impl Position {
    pub fn new(node: Vec<usize>, index: usize) -> Position {
        Position { node, index }
    }

    pub fn top(index: usize) -> Position {
        Position { node: vec![], index }
    }

    /// Path of the node designated by this position when its item is a bracket.
    pub fn child_node(&self) -> Vec<usize> {
        let mut n = self.node.clone();
        n.push(self.index);
        n
    }
}

impl Config {
    pub fn new(items: Vec<Item>) -> Config {
        Config { items }
    }

    pub fn empty() -> Config {
        Config::default()
    }

    pub fn leaves(formulas: impl IntoIterator<Item = Formula>) -> Config {
        Config {
            items: formulas.into_iter().map(Item::Leaf).collect(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn node(&self, path: &[usize]) -> Option<&Config> {
        let mut cur = self;
        for &i in path {
            match cur.items.get(i)? {
                Item::Bracket(c) => cur = c,
                Item::Leaf(_) => return None,
            }
        }
        Some(cur)
    }

    pub fn node_mut(&mut self, path: &[usize]) -> Option<&mut Config> {
        let mut cur = self;
        for &i in path {
            match cur.items.get_mut(i)? {
                Item::Bracket(c) => cur = c,
                Item::Leaf(_) => return None,
            }
        }
        Some(cur)
    }

    pub fn item(&self, pos: &Position) -> Option<&Item> {
        self.node(&pos.node)?.items.get(pos.index)
    }

    pub fn leaf(&self, pos: &Position) -> Option<&Formula> {
        self.item(pos)?.formula()
    }

    /// Replace `items[start..end]` of the node at `node` by `with`.
    pub fn splice(&self, node: &[usize], start: usize, end: usize, with: Vec<Item>) -> Option<Config> {
        let mut out = self.clone();
        let n = out.node_mut(node)?;
        if start > end || end > n.items.len() {
            return None;
        }
        n.items.splice(start..end, with);
        Some(out)
    }

    /// All formula leaves in left-to-right order (brackets forgotten).
    pub fn flat_formulas(&self) -> Vec<&Formula> {
        let mut out = Vec::new();
        for it in &self.items {
            match it {
                Item::Leaf(f) => out.push(f),
                Item::Bracket(c) => out.extend(c.flat_formulas()),
            }
        }
        out
    }

    /// Positions of every leaf, left to right.
    pub fn leaf_positions(&self) -> Vec<Position> {
        let mut out = Vec::new();
        self.collect_leaf_positions(&mut vec![], &mut out);
        out
    }

    fn collect_leaf_positions(&self, path: &mut Vec<usize>, out: &mut Vec<Position>) {
        for (i, it) in self.items.iter().enumerate() {
            match it {
                Item::Leaf(_) => out.push(Position::new(path.clone(), i)),
                Item::Bracket(c) => {
                    path.push(i);
                    c.collect_leaf_positions(path, out);
                    path.pop();
                }
            }
        }
    }

    /// Paths of every node (root first), preorder.
    pub fn node_paths(&self) -> Vec<Vec<usize>> {
        let mut out = vec![vec![]];
        self.collect_node_paths(&mut vec![], &mut out);
        out
    }

    fn collect_node_paths(&self, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        for (i, it) in self.items.iter().enumerate() {
            if let Item::Bracket(c) = it {
                path.push(i);
                out.push(path.clone());
                c.collect_node_paths(path, out);
                path.pop();
            }
        }
    }

    pub fn leaf_count(&self) -> usize {
        self.items
            .iter()
            .map(|it| match it {
                Item::Leaf(_) => 1,
                Item::Bracket(c) => c.leaf_count(),
            })
            .sum()
    }

    pub fn bracket_count(&self) -> usize {
        self.items
            .iter()
            .map(|it| match it {
                Item::Leaf(_) => 0,
                Item::Bracket(c) => 1 + c.bracket_count(),
            })
            .sum()
    }

    /// Number of leaves strictly before item `index` of node `node`, in
    /// left-to-right order over the whole configuration.
    pub fn flat_offset(&self, node: &[usize], index: usize) -> usize {
        let mut count = 0;
        let mut cur = self;
        for &step in node {
            count += Config::new(cur.items[..step].to_vec()).leaf_count();
            cur = match &cur.items[step] {
                Item::Bracket(c) => c,
                Item::Leaf(_) => return count,
            };
        }
        count + Config::new(cur.items[..index.min(cur.items.len())].to_vec()).leaf_count()
    }

    pub fn size(&self) -> usize {
        self.items
            .iter()
            .map(|it| match it {
                Item::Leaf(f) => f.size(),
                Item::Bracket(c) => 1 + c.size(),
            })
            .sum()
    }
}

impl fmt::Display for Config {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, it) in self.items.iter().enumerate() {
            if i > 0 {
                write!(out, ", ")?;
            }
            match it {
                Item::Leaf(f) => write!(out, "{f}")?,
                Item::Bracket(c) => write!(out, "[{c}]")?,
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Sequent {
    pub ant: Config,
    pub succ: Formula,
}

impl Sequent {
    pub fn new(ant: Config, succ: Formula) -> Sequent {
        Sequent { ant, succ }
    }

    /// Total atom/unit/connective node count plus bracket-node count.
    pub fn size(&self) -> usize {
        self.ant.size() + self.succ.size()
    }

    pub fn formulas(&self) -> Vec<&Formula> {
        let mut out = self.ant.flat_formulas();
        out.push(&self.succ);
        out
    }
}

impl fmt::Display for Sequent {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.ant.is_empty() {
            write!(out, "=> {}", self.succ)
        } else {
            write!(out, "{} => {}", self.ant, self.succ)
        }
    }
}
