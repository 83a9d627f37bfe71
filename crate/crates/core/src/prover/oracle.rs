//! Exhaustive enumeration of normal cut-free derivations on concrete
//! sequents. Used as a reference for the class-based search.

use std::collections::HashMap;

use crate::kernel::{applicable_instances, instantiate_backward, Derivation, RuleId, System};
use crate::syntax::{polarity_occurrences, Formula, Polarity, Sequent};

/// Each antecedent bracket is eventually removed by a distinct negative
/// `[]-1` or positive `<>` occurrence, unless such occurrences can be copied.
fn too_many_brackets(s: &Sequent) -> bool {
    let occ = polarity_occurrences(s);
    let copyable: Vec<_> = occ
        .iter()
        .filter(|(_, f, p)| matches!(f, Formula::Bang(_)) && *p == Polarity::Negative)
        .collect();
    let mut removers = 0;
    for (path, f, p) in &occ {
        let r = matches!(f, Formula::BoxInv(_)) && *p == Polarity::Negative
            || matches!(f, Formula::Diamond(_)) && *p == Polarity::Positive;
        if r {
            if copyable.iter().any(|(b, _, _)| path.is_inside(b)) {
                return false;
            }
            removers += 1;
        }
    }
    s.ant.bracket_count() > removers
}

#[derive(Clone, Copy, Default)]
struct Known {
    min: Option<usize>,
    none_upto: usize,
}

struct Oracle<'a> {
    sys: &'a System,
    bound: usize,
    /// Keyed by sequent and whether the node sits right above a `PermStar`.
    memo: HashMap<(Sequent, bool), Known>,
}

impl Oracle<'_> {
    /// Exact minimal size of a normal derivation if it is at most `limit`.
    fn min_size(&mut self, s: &Sequent, after_perm: bool, limit: usize) -> Option<usize> {
        if limit == 0 {
            return None;
        }
        let key = (s.clone(), after_perm);
        if let Some(k) = self.memo.get(&key) {
            if let Some(m) = k.min {
                return (m <= limit).then_some(m);
            }
            if k.none_upto >= limit {
                return None;
            }
        }
        let mut best: Option<usize> = None;
        if !too_many_brackets(s) {
            for inst in applicable_instances(s, self.sys, self.bound) {
                if after_perm && inst.rule == RuleId::PermStar {
                    continue;
                }
                let cap = best.map_or(limit, |b| b - 1).min(limit);
                let prem = instantiate_backward(self.sys, s, &inst).expect("applicable");
                if 1 + prem.len() > cap {
                    continue;
                }
                let mut total = 1;
                let mut ok = true;
                for (j, p) in prem.iter().enumerate() {
                    let reserve = prem.len() - j - 1;
                    let room = cap - total - reserve;
                    match self.min_size(p, inst.rule == RuleId::PermStar, room) {
                        Some(c) => total += c,
                        None => {
                            ok = false;
                            break;
                        }
                    }
                }
                if ok {
                    best = Some(total);
                }
            }
        }
        let k = self.memo.entry(key).or_default();
        match best {
            Some(m) => k.min = Some(m),
            None => k.none_upto = k.none_upto.max(limit),
        }
        best
    }

    fn all(&mut self, s: &Sequent, after_perm: bool, max: usize) -> Vec<Derivation> {
        if self.min_size(s, after_perm, max).is_none() {
            return vec![];
        }
        let mut out = Vec::new();
        for inst in applicable_instances(s, self.sys, self.bound) {
            if after_perm && inst.rule == RuleId::PermStar {
                continue;
            }
            let prem = instantiate_backward(self.sys, s, &inst).expect("applicable");
            let mut partial: Vec<(usize, Vec<Derivation>)> = vec![(1, vec![])];
            for p in &prem {
                let mut next = Vec::new();
                for (used, done) in &partial {
                    if *used >= max {
                        continue;
                    }
                    for d in self.all(p, inst.rule == RuleId::PermStar, max - used) {
                        let mut v = done.clone();
                        let size = d.size();
                        v.push(d);
                        next.push((used + size, v));
                    }
                }
                partial = next;
            }
            for (used, premises) in partial {
                if used <= max {
                    out.push(Derivation::new(s.clone(), inst.clone(), premises));
                }
            }
        }
        out
    }
}

/// Size of a smallest normal cut-free derivation, if one has at most
/// `max_size` rule applications. Backward `ContrB` and `Contr` steps may not
/// push the antecedent beyond `max_items` leaves and brackets.
pub fn min_derivation_size(s: &Sequent, sys: &System, max_size: usize, max_items: usize) -> Option<usize> {
    Oracle {
        sys,
        bound: max_items,
        memo: HashMap::new(),
    }
    .min_size(s, false, max_size)
}

/// Every normal cut-free derivation of `s` with at most `max_size` rule
/// applications, in the deterministic rule order.
pub fn enumerate_derivations(s: &Sequent, sys: &System, max_size: usize) -> impl Iterator<Item = Derivation> {
    let bound = (4 * s.size()).max(1);
    let mut o = Oracle {
        sys,
        bound,
        memo: HashMap::new(),
    };
    o.all(s, false, max_size).into_iter()
}
