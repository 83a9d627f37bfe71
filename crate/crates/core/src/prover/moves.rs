//! Rule applications generated per class. Each move fixes a concrete layout
//! of the class and a rule instance on that layout; the engine inserts a
//! `PermStar` whenever the sequent in hand is laid out differently.

use crate::kernel::{item_count, RuleId, RuleInstance, System};
use crate::syntax::{Config, Formula, Item, Position};

use super::class::{minus, submultisets, CItem, CNode, Goal};

#[derive(Clone, Debug)]
pub(crate) struct Move {
    pub ant: Config,
    pub inst: RuleInstance,
    /// Invertible rule applied eagerly; it does not count against the budget.
    pub eager: bool,
    /// Further single-premise instances applied to the premise in turn.
    pub then: Vec<RuleInstance>,
}

fn bang_items(fs: &[Formula]) -> Vec<Item> {
    fs.iter().cloned().map(Item::Leaf).collect()
}

fn fixed_items(fs: &[CItem]) -> Vec<Item> {
    fs.iter().map(CItem::to_item).collect()
}

fn distinct(fs: &[Formula]) -> Vec<&Formula> {
    let mut out: Vec<&Formula> = Vec::new();
    for f in fs {
        if out.last() != Some(&f) {
            out.push(f);
        }
    }
    out
}

struct Gen<'a> {
    goal: &'a Goal,
    sys: &'a System,
    bound: usize,
    out: Vec<Move>,
    /// Some move was withheld (item bound, narrow mode, skipped theory cuts).
    partial: bool,
}

impl Gen<'_> {
    fn push(&mut self, ant: Config, inst: RuleInstance) {
        self.out.push(Move {
            ant,
            inst,
            eager: false,
            then: vec![],
        });
    }

    fn canonical(&self) -> Config {
        self.goal.ant.to_config()
    }

    fn at_node(&self, path: &[usize], custom: Vec<Item>) -> (Config, Vec<usize>) {
        self.goal.ant.layout_with(path, custom)
    }

    fn axioms(&mut self) {
        let root = &self.goal.ant;
        let succ = &self.goal.succ;
        if root.len() == 1 {
            let only = root
                .bangs
                .first()
                .cloned()
                .or_else(|| match &root.fixed[0] {
                    CItem::Leaf(f) => Some(f.clone()),
                    CItem::Bracket(_) => None,
                });
            if only.as_ref() == Some(succ) {
                self.push(self.canonical(), RuleInstance::new(RuleId::AxId));
            }
        }
        if root.len() == 0 && *succ == Formula::Unit {
            self.push(self.canonical(), RuleInstance::new(RuleId::AxUnit));
        }
        let seq = self.goal.to_sequent();
        for (i, ax) in self.sys.theory().iter().enumerate() {
            if *ax == seq {
                self.push(self.canonical(), RuleInstance::new(RuleId::AxTheory(i)));
            }
        }
    }

    fn divisions_left(&mut self, want_under: bool) {
        let nodes: Vec<(Vec<usize>, CNode)> =
            self.goal.ant.nodes().into_iter().map(|(p, n)| (p, n.clone())).collect();
        for (path, node) in nodes {
            let f = &node.fixed;
            for i in 0..f.len() {
                let CItem::Leaf(formula) = &f[i] else { continue };
                let is_under = matches!(formula, Formula::Under(..));
                let is_over = matches!(formula, Formula::Over(..));
                if (want_under && !is_under) || (!want_under && !is_over) {
                    continue;
                }
                for g in submultisets(&node.bangs) {
                    let rest = minus(&node.bangs, &g);
                    if want_under {
                        for s in 0..=i {
                            let mut custom = bang_items(&rest);
                            custom.extend(fixed_items(&f[..s]));
                            custom.extend(bang_items(&g));
                            custom.extend(fixed_items(&f[s..]));
                            let (ant, cp) = self.at_node(&path, custom);
                            let at = rest.len() + g.len() + i;
                            self.push(
                                ant,
                                RuleInstance::at(RuleId::UnderL, Position::new(cp, at))
                                    .with_splits(vec![rest.len() + s]),
                            );
                        }
                    } else {
                        for e in i + 1..=f.len() {
                            let mut custom = bang_items(&rest);
                            custom.extend(fixed_items(&f[..e]));
                            custom.extend(bang_items(&g));
                            custom.extend(fixed_items(&f[e..]));
                            let (ant, cp) = self.at_node(&path, custom);
                            self.push(
                                ant,
                                RuleInstance::at(RuleId::OverL, Position::new(cp, rest.len() + i))
                                    .with_splits(vec![rest.len() + e + g.len()]),
                            );
                        }
                    }
                }
            }
        }
    }

    fn product_right(&mut self) {
        let root = self.goal.ant.clone();
        for k in 0..=root.fixed.len() {
            for l in submultisets(&root.bangs) {
                let rest = minus(&root.bangs, &l);
                let mut items = bang_items(&l);
                items.extend(fixed_items(&root.fixed[..k]));
                items.extend(bang_items(&rest));
                items.extend(fixed_items(&root.fixed[k..]));
                self.push(
                    Config::new(items),
                    RuleInstance::new(RuleId::ProdR).with_splits(vec![l.len() + k]),
                );
            }
        }
    }

    fn diamond_right(&mut self) {
        let root = &self.goal.ant;
        if root.bangs.is_empty() && root.fixed.len() == 1 && matches!(root.fixed[0], CItem::Bracket(_)) {
            self.push(self.canonical(), RuleInstance::new(RuleId::DiamondR));
        }
    }

    fn box_inv_left(&mut self) {
        let nodes: Vec<(Vec<usize>, CNode)> =
            self.goal.ant.nodes().into_iter().map(|(p, n)| (p, n.clone())).collect();
        for (path, node) in nodes {
            for (i, it) in node.fixed.iter().enumerate() {
                let CItem::Bracket(inner) = it else { continue };
                if inner.bangs.is_empty()
                    && matches!(inner.fixed.as_slice(), [CItem::Leaf(Formula::BoxInv(_))])
                {
                    let (ant, cp) = self.at_node(&path, node.layout_items());
                    self.push(
                        ant,
                        RuleInstance::at(RuleId::BoxInvL, Position::new(cp, node.bangs.len() + i)),
                    );
                }
            }
        }
    }

    fn bang_left(&mut self) {
        let nodes: Vec<(Vec<usize>, CNode)> =
            self.goal.ant.nodes().into_iter().map(|(p, n)| (p, n.clone())).collect();
        for (path, node) in nodes {
            for b in distinct(&node.bangs) {
                let rest = minus(&node.bangs, std::slice::from_ref(b));
                let body = b.bang_body().expect("bang");
                let gaps = if body.is_bang() { 0..=0 } else { 0..=node.fixed.len() };
                for g in gaps {
                    let mut custom = bang_items(&rest);
                    custom.extend(fixed_items(&node.fixed[..g]));
                    let at = custom.len();
                    custom.push(Item::Leaf(b.clone()));
                    custom.extend(fixed_items(&node.fixed[g..]));
                    let (ant, cp) = self.at_node(&path, custom);
                    self.push(ant, RuleInstance::at(RuleId::BangL, Position::new(cp, at)));
                }
            }
        }
    }

    fn bang_right(&mut self) {
        let root = &self.goal.ant;
        if root.fixed.is_empty() && !(*self.sys == System::BL1 && root.bangs.is_empty()) {
            self.push(self.canonical(), RuleInstance::new(RuleId::BangR));
        }
    }

    fn gated_contraction(&mut self) {
        let total = item_count(&self.canonical());
        let nodes: Vec<(Vec<usize>, CNode)> =
            self.goal.ant.nodes().into_iter().map(|(p, n)| (p, n.clone())).collect();
        for (path, node) in nodes {
            let f = &node.fixed;
            for block in submultisets(&node.bangs).into_iter().skip(1) {
                // the premise gains a bracket and a copy of the block
                if total + 1 + block.len() > self.bound {
                    self.partial = true;
                    continue;
                }
                let others = minus(&node.bangs, &block);
                for g in submultisets(&others) {
                    let rest = minus(&others, &g);
                    for s in 0..=f.len() {
                        for e in s..=f.len() {
                            let mut custom = bang_items(&rest);
                            custom.extend(fixed_items(&f[..s]));
                            let start = custom.len();
                            custom.extend(bang_items(&block));
                            custom.extend(bang_items(&g));
                            custom.extend(fixed_items(&f[s..]));
                            let mid = start + block.len();
                            let end = mid + g.len() + (e - s);
                            let (ant, cp) = self.at_node(&path, custom);
                            self.push(
                                ant,
                                RuleInstance::at(RuleId::ContrB, Position::new(cp, start))
                                    .with_splits(vec![mid, end]),
                            );
                        }
                    }
                }
            }
        }
    }

    /// `ContrB; BangL; BoxInvL` on a single `![]-1D` with empty Γ: places a
    /// copy of `D` into any gap of the node holding `![]-1D`.
    fn instantiation(&mut self) {
        let total = item_count(&self.canonical());
        self.partial |= self.goal.ant.nodes().iter().any(|(_, n)| !n.bangs.is_empty());
        if total + 2 > self.bound {
            return;
        }
        let nodes: Vec<(Vec<usize>, CNode)> =
            self.goal.ant.nodes().into_iter().map(|(p, n)| (p, n.clone())).collect();
        for (path, node) in nodes {
            for b in distinct(&node.bangs) {
                if !matches!(b.bang_body(), Some(Formula::BoxInv(_))) {
                    continue;
                }
                let rest = minus(&node.bangs, std::slice::from_ref(b));
                for g in 0..=node.fixed.len() {
                    let mut custom = bang_items(&rest);
                    custom.extend(fixed_items(&node.fixed[..g]));
                    let start = custom.len();
                    custom.push(Item::Leaf(b.clone()));
                    custom.extend(fixed_items(&node.fixed[g..]));
                    let (ant, cp) = self.at_node(&path, custom);
                    let mut inner = cp.clone();
                    inner.push(start + 1);
                    self.out.push(Move {
                        ant,
                        inst: RuleInstance::at(RuleId::ContrB, Position::new(cp.clone(), start))
                            .with_splits(vec![start + 1, start + 1]),
                        eager: false,
                        then: vec![
                            RuleInstance::at(RuleId::BangL, Position::new(inner, 0)),
                            RuleInstance::at(RuleId::BoxInvL, Position::new(cp, start + 1)),
                        ],
                    });
                }
            }
        }
    }

    fn plain_contraction(&mut self, rule: RuleId) {
        if rule == RuleId::Contr && item_count(&self.canonical()) + 1 > self.bound {
            self.partial |= self.goal.ant.nodes().iter().any(|(_, n)| !n.bangs.is_empty());
            return;
        }
        let nodes: Vec<(Vec<usize>, CNode)> =
            self.goal.ant.nodes().into_iter().map(|(p, n)| (p, n.clone())).collect();
        for (path, node) in nodes {
            for b in distinct(&node.bangs) {
                let at = node.bangs.iter().position(|x| x == b).expect("present");
                let (ant, cp) = self.at_node(&path, node.layout_items());
                self.push(ant, RuleInstance::at(rule, Position::new(cp, at)));
            }
        }
    }

    /// Cuts against a theory axiom, in either premise position.
    fn theory_cuts(&mut self) {
        let root = self.goal.ant.clone();
        let leaves: Option<Vec<Formula>> = root
            .fixed
            .iter()
            .map(|it| match it {
                CItem::Leaf(f) => Some(f.clone()),
                CItem::Bracket(_) => None,
            })
            .collect();
        let Some(leaves) = leaves.filter(|_| root.bangs.is_empty()) else {
            self.partial = true;
            return;
        };
        for ax in self.sys.theory().to_vec() {
            let pi: Vec<Formula> = ax.ant.flat_formulas().into_iter().cloned().collect();
            // an axiom `=> B` could be cut in anywhere; not searched
            self.partial |= pi.is_empty();
            if !pi.is_empty() && pi.len() <= leaves.len() {
                for s in 0..=leaves.len() - pi.len() {
                    if leaves[s..s + pi.len()] == pi[..] {
                        self.push(
                            self.canonical(),
                            RuleInstance::cut(Position::top(s), s + pi.len(), ax.succ.clone()),
                        );
                    }
                }
            }
            if ax.succ == self.goal.succ && pi.len() <= leaves.len() + 1 {
                for j in 0..pi.len() {
                    let tail = pi.len() - 1 - j;
                    if leaves.len() >= j + tail
                        && leaves[..j] == pi[..j]
                        && leaves[leaves.len() - tail..] == pi[j + 1..]
                    {
                        self.push(
                            self.canonical(),
                            RuleInstance::cut(Position::top(j), leaves.len() - tail, pi[j].clone()),
                        );
                    }
                }
            }
        }
    }

    /// An invertible rule, if one applies: right rules for the divisions and
    /// `[]-1`, left rules for products, units and `<>`.
    fn eager(&self) -> Option<Move> {
        let sys = self.sys;
        let right = match &self.goal.succ {
            Formula::Under(..) => Some(RuleId::UnderR),
            Formula::Over(..) => Some(RuleId::OverR),
            Formula::BoxInv(_) if sys.available(RuleId::BoxInvR) => Some(RuleId::BoxInvR),
            _ => None,
        };
        if let Some(rule) = right {
            return Some(Move {
                ant: self.canonical(),
                inst: RuleInstance::new(rule),
                eager: true,
                then: vec![],
            });
        }
        for (path, node) in self.goal.ant.nodes() {
            for (i, it) in node.fixed.iter().enumerate() {
                let rule = match it {
                    CItem::Leaf(Formula::Prod(..)) => RuleId::ProdL,
                    CItem::Leaf(Formula::Unit) => RuleId::UnitL,
                    CItem::Leaf(Formula::Diamond(_)) if sys.available(RuleId::DiamondL) => {
                        RuleId::DiamondL
                    }
                    _ => continue,
                };
                let (ant, cp) = self.at_node(&path, node.layout_items());
                return Some(Move {
                    ant,
                    inst: RuleInstance::at(rule, Position::new(cp, node.bangs.len() + i)),
                    eager: true,
                    then: vec![],
                });
            }
        }
        None
    }
}

/// Candidate moves for `goal`, and whether some were withheld.
pub(crate) fn moves(goal: &Goal, sys: &System, bound: usize, narrow: bool) -> (Vec<Move>, bool) {
    let mut g = Gen {
        goal,
        sys,
        bound,
        out: Vec::new(),
        partial: false,
    };
    if let Some(m) = g.eager() {
        return (vec![m], false);
    }
    g.axioms();
    match &goal.succ {
        Formula::Prod(..) => g.product_right(),
        Formula::Diamond(_) if sys.available(RuleId::DiamondR) => g.diamond_right(),
        Formula::Bang(_) if sys.available(RuleId::BangR) => g.bang_right(),
        _ => {}
    }
    g.divisions_left(true);
    g.divisions_left(false);
    if sys.available(RuleId::BoxInvL) {
        g.box_inv_left();
    }
    if sys.available(RuleId::BangL) {
        g.bang_left();
    }
    if sys.available(RuleId::ContrB) {
        if narrow {
            g.instantiation();
        } else {
            g.gated_contraction();
        }
    }
    if sys.available(RuleId::Contr) {
        g.plain_contraction(RuleId::Contr);
    }
    if sys.available(RuleId::Weak) {
        g.plain_contraction(RuleId::Weak);
    }
    if !sys.theory().is_empty() {
        g.theory_cuts();
    }
    (g.out, g.partial)
}
