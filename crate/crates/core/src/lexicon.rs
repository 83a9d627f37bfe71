//! Categorial-grammar lexicons and sentence parsing by derivability.
//!
//! Lexicon files have one entry per line, `word : formula`, optionally
//! followed by the flag `island`; `#` starts a comment. A word may have
//! several entries.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::kernel::{Derivation, System};
use crate::prover::{prove as prove_routed, Budget, ProveResult};
use crate::syntax::{parse_formula, Config, Formula, Item, Sequent, SyntaxError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LexiconError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("line {line}: {source}")]
    Formula { line: usize, source: SyntaxError },
    #[error("unknown word {0}")]
    UnknownWord(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Entry {
    pub formula: Formula,
    /// The word opens a bracketed island.
    pub island: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lexicon {
    pub entries: BTreeMap<String, Vec<Entry>>,
    pub sentence_type: Formula,
}

impl Lexicon {
    pub fn parse(text: &str) -> Result<Lexicon, LexiconError> {
        let mut entries: BTreeMap<String, Vec<Entry>> = BTreeMap::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let Some((word, rest)) = line.split_once(':') else {
                return Err(LexiconError::Parse {
                    line: i + 1,
                    msg: "expected `word : formula`".into(),
                });
            };
            let word = word.trim();
            if word.is_empty() || word.contains(char::is_whitespace) {
                return Err(LexiconError::Parse {
                    line: i + 1,
                    msg: "a word is a single token".into(),
                });
            }
            let rest = rest.trim();
            let (ftext, island) = match rest.strip_suffix("island") {
                Some(f) if f.ends_with(char::is_whitespace) => (f.trim(), true),
                _ => (rest, false),
            };
            let formula = parse_formula(ftext).map_err(|source| LexiconError::Formula {
                line: i + 1,
                source,
            })?;
            entries
                .entry(word.to_string())
                .or_default()
                .push(Entry { formula, island });
        }
        Ok(Lexicon {
            entries,
            sentence_type: Formula::atom("S"),
        })
    }

    pub fn lookup(&self, word: &str) -> Result<&[Entry], LexiconError> {
        self.entries
            .get(word)
            .map(Vec::as_slice)
            .ok_or_else(|| LexiconError::UnknownWord(word.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Grammatical(Derivation),
    Ungrammatical,
    Unknown(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseJudgment {
    pub tokens: Vec<String>,
    /// The assignment and bracketing of the first success, or of the last
    /// sequent tried.
    pub sequent: Option<Sequent>,
    pub verdict: Verdict,
    pub tried: usize,
}

#[derive(Debug, Clone)]
pub struct ParseOptions {
    pub target: Option<Formula>,
    pub max_assignments: usize,
    pub time_limit: Option<std::time::Duration>,
}

impl Default for ParseOptions {
    fn default() -> Self {
        ParseOptions {
            target: None,
            max_assignments: 256,
            time_limit: None,
        }
    }
}

/// Bracket spans `[start, end)` for island words: for each island word
/// either no bracket or one starting at the word. Crossing spans are skipped.
pub fn island_spans(n: usize, islands: &[usize]) -> Vec<Vec<(usize, usize)>> {
    let mut out: Vec<Vec<(usize, usize)>> = vec![vec![]];
    for &i in islands {
        let mut next = Vec::new();
        for spans in &out {
            next.push(spans.clone());
            for end in i + 1..=n {
                let crosses = spans
                    .iter()
                    .any(|&(s, e)| (s < i && i < e && e < end) || (i < s && s < end && end < e));
                if !crosses {
                    let mut v = spans.clone();
                    v.push((i, end));
                    next.push(v);
                }
            }
        }
        out = next;
    }
    out
}

fn bracketed(formulas: &[Formula], spans: &[(usize, usize)]) -> Config {
    fn build(fs: &[Formula], from: usize, to: usize, spans: &[(usize, usize)]) -> Vec<Item> {
        let mut items = Vec::new();
        let mut i = from;
        while i < to {
            // the widest span opening here that fits
            let open = spans
                .iter()
                .filter(|&&(s, e)| s == i && e <= to)
                .map(|&(_, e)| e)
                .max();
            match open {
                Some(e) => {
                    let inner: Vec<(usize, usize)> =
                        spans.iter().copied().filter(|&sp| sp != (i, e)).collect();
                    items.push(Item::Bracket(Config::new(build(fs, i, e, &inner))));
                    i = e;
                }
                None => {
                    items.push(Item::Leaf(fs[i].clone()));
                    i += 1;
                }
            }
        }
        items
    }
    Config::new(build(formulas, 0, formulas.len(), spans))
}

fn prove(s: &Sequent, opts: &ParseOptions) -> ProveResult {
    let mut b = Budget::for_sequent(s);
    if let Some(t) = opts.time_limit {
        b = b.with_time_limit(t);
    }
    prove_routed(s, &System::BL1, &b).1
}

/// Try every type assignment (up to the cap) and every island bracketing;
/// the first derivable sequent wins.
pub fn parse_sentence(
    lex: &Lexicon,
    sentence: &str,
    opts: &ParseOptions,
) -> Result<ParseJudgment, LexiconError> {
    let tokens: Vec<String> = sentence.split_whitespace().map(str::to_string).collect();
    let choices = tokens
        .iter()
        .map(|t| lex.lookup(t))
        .collect::<Result<Vec<_>, _>>()?;
    let target = opts.target.clone().unwrap_or_else(|| lex.sentence_type.clone());
    let total: usize = choices.iter().map(|c| c.len()).product();
    let mut unknown = None;
    let mut last = None;
    let mut tried = 0;
    for k in 0..total.min(opts.max_assignments) {
        let mut rest = k;
        let picked: Vec<&Entry> = choices
            .iter()
            .map(|c| {
                let e = &c[rest % c.len()];
                rest /= c.len();
                e
            })
            .collect();
        let formulas: Vec<Formula> = picked.iter().map(|e| e.formula.clone()).collect();
        let islands: Vec<usize> = (0..picked.len()).filter(|&i| picked[i].island).collect();
        for spans in island_spans(formulas.len(), &islands) {
            let s = Sequent::new(bracketed(&formulas, &spans), target.clone());
            tried += 1;
            match prove(&s, opts) {
                ProveResult::Derivable(d) => {
                    return Ok(ParseJudgment {
                        tokens,
                        sequent: Some(s),
                        verdict: Verdict::Grammatical(d),
                        tried,
                    })
                }
                ProveResult::NotDerivable => {}
                ProveResult::Exhausted(why) => unknown = Some(why),
            }
            last = Some(s);
        }
    }
    if total > opts.max_assignments {
        unknown = Some(format!(
            "only {} of {total} type assignments tried",
            opts.max_assignments
        ));
    }
    Ok(ParseJudgment {
        tokens,
        sequent: last,
        verdict: match unknown {
            Some(why) => Verdict::Unknown(why),
            None => Verdict::Ungrammatical,
        },
        tried,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_entries() {
        let lex = Lexicon::parse("John : N\n# comment\nwithout : []-1((N\\S)\\(N\\S))/(N\\S) island\nJohn: N/N\n").unwrap();
        assert_eq!(lex.lookup("John").unwrap().len(), 2);
        assert!(lex.lookup("without").unwrap()[0].island);
        assert!(lex.lookup("Mary").is_err());
        assert!(Lexicon::parse("two words : N").is_err());
        assert!(Lexicon::parse("x : (N").is_err());
    }

    #[test]
    fn spans_and_brackets() {
        assert_eq!(island_spans(3, &[1]), vec![vec![], vec![(1, 2)], vec![(1, 3)]]);
        let fs: Vec<Formula> = ["a", "b", "c"].iter().map(|x| Formula::atom(*x)).collect();
        assert_eq!(bracketed(&fs, &[(1, 3)]).to_string(), "a, [b, c]");
        assert_eq!(bracketed(&fs, &[(0, 3), (1, 2)]).to_string(), "[a, [b], c]");
    }
}
