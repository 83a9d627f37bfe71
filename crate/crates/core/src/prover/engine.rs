use std::collections::HashMap;
use std::time::Instant;

use crate::kernel::{instantiate_backward, perm, Derivation, RuleInstance, System};
use crate::syntax::{Formula, Sequent};

use super::budget::{Budget, ProveResult};
use super::class::Goal;
use super::moves::{moves, Move};
use super::prune::hopeless;

#[derive(Default)]
struct Entry {
    proven: Option<(usize, Move)>,
    /// No derivation of cost at most this value exists; `usize::MAX` when
    /// the failure involved no cut-off at all.
    failed_upto: Option<usize>,
}

struct Timeout;

/// Memoized depth-bounded search over sequent classes.
pub(crate) struct Engine<'a> {
    sys: &'a System,
    budget: &'a Budget,
    memo: HashMap<Goal, Entry>,
    deadline: Option<Instant>,
    calls: u64,
    /// Some branch was cut off by the limits rather than exhausted.
    pub truncated: bool,
}

impl<'a> Engine<'a> {
    pub fn new(sys: &'a System, budget: &'a Budget) -> Engine<'a> {
        Engine {
            sys,
            budget,
            memo: HashMap::new(),
            deadline: budget.time_limit.map(|t| Instant::now() + t),
            calls: 0,
            truncated: false,
        }
    }

    fn solve(&mut self, goal: &Goal, limit: usize) -> Result<Option<usize>, Timeout> {
        if let Some(e) = self.memo.get(goal) {
            if let Some((c, _)) = &e.proven {
                if *c <= limit {
                    return Ok(Some(*c));
                }
            }
            if let Some(f) = e.failed_upto.filter(|f| *f >= limit) {
                self.truncated |= f != usize::MAX;
                return Ok(None);
            }
        }
        self.calls += 1;
        if self.calls.is_multiple_of(512) {
            if let Some(d) = self.deadline {
                if Instant::now() >= d {
                    return Err(Timeout);
                }
            }
        }
        let seq = goal.to_sequent();
        if hopeless(&seq, self.sys) {
            self.memo.entry(goal.clone()).or_default().failed_upto = Some(usize::MAX);
            return Ok(None);
        }
        let outer = std::mem::replace(&mut self.truncated, false);
        let found = self.try_moves(goal, limit);
        let cut_off = self.truncated;
        self.truncated |= outer;
        if let Ok(None) = found {
            let e = self.memo.entry(goal.clone()).or_default();
            let reach = if cut_off { limit } else { usize::MAX };
            e.failed_upto = Some(e.failed_upto.map_or(reach, |f| f.max(reach)));
        }
        found
    }

    fn try_moves(&mut self, goal: &Goal, limit: usize) -> Result<Option<usize>, Timeout> {
        let (candidates, partial) = moves(
            goal,
            self.sys,
            self.budget.max_antecedent_items,
            !self.budget.complete,
        );
        self.truncated |= partial;
        for m in candidates {
            let own = if m.eager { 0 } else { 1 + m.then.len() };
            let premises = self.premises(&m, &goal.succ);
            if own + premises.len() > limit {
                self.truncated = true;
                continue;
            }
            let mut total = own;
            let mut ok = true;
            for (j, p) in premises.iter().enumerate() {
                let reserve = premises.len() - j - 1;
                let lim = limit - total - reserve;
                match self.solve(&Goal::from_sequent(p), lim)? {
                    Some(c) if total + c + reserve <= limit => total += c,
                    _ => {
                        ok = false;
                        break;
                    }
                }
            }
            if ok {
                // a cheaper proof may have been recorded by a nested call
                // (cycles through Contr/Weak); keep it so rebuild terminates
                let e = self.memo.entry(goal.clone()).or_default();
                match &e.proven {
                    Some((c, _)) if *c <= total => return Ok(Some(*c)),
                    _ => e.proven = Some((total, m)),
                }
                return Ok(Some(total));
            }
        }
        Ok(None)
    }

    fn premises(&self, m: &Move, succ: &Formula) -> Vec<Sequent> {
        let concl = Sequent::new(m.ant.clone(), succ.clone());
        let mut premises =
            instantiate_backward(self.sys, &concl, &m.inst).expect("generated moves instantiate");
        for inst in &m.then {
            premises = instantiate_backward(self.sys, &premises[0], inst)
                .expect("generated moves instantiate");
        }
        premises
    }

    /// Rebuild a concrete derivation of `s` from the memo table.
    fn rebuild(&self, s: &Sequent) -> Derivation {
        let goal = Goal::from_sequent(s);
        let (_, m) = self.memo[&goal].proven.as_ref().expect("proven goal");
        let concl = Sequent::new(m.ant.clone(), s.succ.clone());
        let mut chain = vec![(concl.clone(), m.inst.clone())];
        for inst in &m.then {
            let (c, i) = chain.last().expect("nonempty");
            let next = instantiate_backward(self.sys, c, i).expect("valid move").remove(0);
            chain.push((next, inst.clone()));
        }
        let (last_concl, last_inst) = chain.pop().expect("nonempty");
        let premises =
            instantiate_backward(self.sys, &last_concl, &last_inst).expect("valid move");
        let mut node = Derivation::new(
            last_concl,
            last_inst,
            premises.iter().map(|p| self.rebuild(p)).collect(),
        );
        while let Some((c, inst)) = chain.pop() {
            node = Derivation::new(c, inst, vec![node]);
        }
        if s.ant == m.ant {
            return node;
        }
        let blocks = perm::between(&s.ant, &m.ant).expect("same class");
        Derivation::new(s.clone(), RuleInstance::perm(perm::flatten(&blocks)), vec![node])
    }

    /// Iterative deepening: limits double up to the budget.
    pub fn run(&mut self, s: &Sequent) -> ProveResult {
        let goal = Goal::from_sequent(s);
        let max = self.budget.max_rule_apps;
        let mut limit = 8.min(max);
        loop {
            self.truncated = false;
            match self.solve(&goal, limit) {
                Err(Timeout) => return ProveResult::Exhausted("time limit reached".into()),
                Ok(Some(_)) => return ProveResult::Derivable(self.rebuild(s)),
                // nothing was cut off: the search space is exhausted
                Ok(None) if !self.truncated => return ProveResult::NotDerivable,
                Ok(None) if limit >= max => break,
                Ok(None) => limit = (limit * 2).min(max),
            }
        }
        if self.budget.complete {
            ProveResult::NotDerivable
        } else {
            ProveResult::Exhausted(format!(
                "no derivation within {max} rule applications and {} antecedent items",
                self.budget.max_antecedent_items
            ))
        }
    }
}
