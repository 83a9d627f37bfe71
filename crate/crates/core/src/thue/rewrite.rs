use std::collections::{HashMap, VecDeque};

use super::grammar::{Grammar, GrammarError, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RewriteStep {
    pub production: usize,
    /// Length of the prefix η left untouched.
    pub position: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RewriteTrace {
    pub start: Word,
    pub steps: Vec<RewriteStep>,
    pub end: Word,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("step {step}: production {production} does not apply at {position}")]
pub struct ReplayError {
    pub step: usize,
    pub production: usize,
    pub position: usize,
}

/// Apply one production at `pos`, if its left side occurs there.
pub fn apply_at(g: &Grammar, w: &[String], production: usize, pos: usize) -> Option<Word> {
    let p = g.productions.get(production)?;
    let end = pos + p.lhs.len();
    if end > w.len() || w[pos..end] != p.lhs[..] {
        return None;
    }
    let mut out = w[..pos].to_vec();
    out.extend(p.rhs.iter().cloned());
    out.extend(w[end..].iter().cloned());
    Some(out)
}

impl RewriteTrace {
    pub fn empty(start: Word) -> RewriteTrace {
        RewriteTrace {
            end: start.clone(),
            start,
            steps: vec![],
        }
    }

    /// Every intermediate word, starting with `start`.
    pub fn replay(&self, g: &Grammar) -> Result<Vec<Word>, ReplayError> {
        let mut words = vec![self.start.clone()];
        for (i, s) in self.steps.iter().enumerate() {
            let next = apply_at(g, words.last().expect("nonempty"), s.production, s.position)
                .ok_or(ReplayError {
                    step: i,
                    production: s.production,
                    position: s.position,
                })?;
            words.push(next);
        }
        Ok(words)
    }

    pub fn is_valid(&self, g: &Grammar) -> bool {
        self.replay(g)
            .is_ok_and(|ws| ws.last() == Some(&self.end))
    }

    /// From `α₁ ⇒* β₁` and `α₂ ⇒* β₂`, a trace of `α₁α₂ ⇒* β₁β₂`.
    pub fn concat(&self, other: &RewriteTrace) -> RewriteTrace {
        let mut start = self.start.clone();
        start.extend(other.start.iter().cloned());
        let mut end = self.end.clone();
        end.extend(other.end.iter().cloned());
        let mut steps = self.steps.clone();
        steps.extend(other.steps.iter().map(|s| RewriteStep {
            production: s.production,
            position: s.position + self.end.len(),
        }));
        RewriteTrace { start, steps, end }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Derivability {
    Yes(RewriteTrace),
    /// The closure under the caps was exhausted and the caps cannot hide the target.
    No { max_len: usize },
    /// Caps reached before a decision.
    Exhausted { max_len: usize, max_steps: usize },
}

/// Breadth-first search from the start symbol over words of length at most
/// `max_len`, expanding at most `max_steps` words.
pub fn derives(
    g: &Grammar,
    target: &[String],
    max_len: usize,
    max_steps: usize,
) -> Result<Derivability, GrammarError> {
    g.check_terminal_word(target)?;
    let start = vec![g.start.clone()];
    let mut parent: HashMap<Word, Option<(Word, RewriteStep)>> = HashMap::new();
    parent.insert(start.clone(), None);
    let mut queue = VecDeque::from([start.clone()]);
    let mut pruned = false;
    let mut expanded = 0;
    while let Some(w) = queue.pop_front() {
        if w == target {
            let mut steps = Vec::new();
            let mut cur = w.clone();
            while let Some(Some((prev, step))) = parent.get(&cur) {
                steps.push(*step);
                cur = prev.clone();
            }
            steps.reverse();
            return Ok(Derivability::Yes(RewriteTrace {
                start,
                steps,
                end: w,
            }));
        }
        if expanded == max_steps {
            return Ok(Derivability::Exhausted { max_len, max_steps });
        }
        expanded += 1;
        let mut next: Vec<(Word, RewriteStep)> = Vec::new();
        for (pi, p) in g.productions.iter().enumerate() {
            for pos in 0..=w.len().saturating_sub(p.lhs.len()) {
                if let Some(n) = apply_at(g, &w, pi, pos) {
                    next.push((n, RewriteStep { production: pi, position: pos }));
                }
            }
        }
        next.sort();
        for (n, step) in next {
            if n.len() > max_len {
                pruned = true;
                continue;
            }
            if !parent.contains_key(&n) {
                parent.insert(n.clone(), Some((w.clone(), step)));
                queue.push_back(n);
            }
        }
    }
    let sound = !pruned || (g.is_noncontracting() && max_len >= target.len());
    Ok(if sound {
        Derivability::No { max_len }
    } else {
        Derivability::Exhausted { max_len, max_steps }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(text: &str) -> Grammar {
        Grammar::parse(text).unwrap()
    }

    fn w(s: &str) -> Word {
        s.chars().map(|c| c.to_string()).collect()
    }

    #[test]
    fn one_and_two_steps() {
        let g1 = g("start: s\nnonterminals: s\nterminals: a b\ns -> a b\n");
        let Derivability::Yes(t) = derives(&g1, &w("ab"), 6, 1000).unwrap() else {
            panic!()
        };
        assert_eq!(t.steps.len(), 1);
        assert!(t.is_valid(&g1));
        let g2 = g("start: s\nnonterminals: s\nterminals: a b\ns -> a b\na b -> b a\n");
        let Derivability::Yes(t) = derives(&g2, &w("ba"), 6, 1000).unwrap() else {
            panic!()
        };
        assert_eq!(t.steps.len(), 2);
        assert_eq!(t.replay(&g2).unwrap().last().unwrap(), &w("ba"));
        assert_eq!(derives(&g1, &w("ba"), 6, 1000).unwrap(), Derivability::No { max_len: 6 });
    }

    #[test]
    fn caps_are_reported() {
        let g3 = g("start: s\nnonterminals: s t\nterminals: a\ns -> a t\nt -> t t\nt t t -> a\n");
        assert!(matches!(
            derives(&g3, &w("aa"), 3, 100000).unwrap(),
            Derivability::Exhausted { .. } | Derivability::Yes(_)
        ));
        assert!(matches!(
            derives(&g3, &w("aaaa"), 8, 3).unwrap(),
            Derivability::Exhausted { max_steps: 3, .. }
        ));
        assert!(derives(&g3, &w("x"), 3, 10).is_err());
    }

    #[test]
    fn concatenation() {
        let g1 = g("start: s\nnonterminals: s\nterminals: a b\ns -> a b\n");
        let t = RewriteTrace {
            start: w("s"),
            steps: vec![RewriteStep { production: 0, position: 0 }],
            end: w("ab"),
        };
        let both = t.concat(&t);
        assert_eq!(both.start, w("ss"));
        assert_eq!(both.end, w("abab"));
        assert!(both.is_valid(&g1));
    }
}
