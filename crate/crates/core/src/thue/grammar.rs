use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

pub type Word = Vec<String>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GrammarError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("terminal and nonterminal alphabets share {0}")]
    NotDisjoint(String),
    #[error("start symbol {0} is not a nonterminal")]
    BadStart(String),
    #[error("production {0} has an empty side")]
    EmptySide(usize),
    #[error("unknown symbol {0}")]
    UnknownSymbol(String),
    #[error("symbol {0} is not a valid atom name")]
    BadSymbol(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Production {
    pub lhs: Word,
    pub rhs: Word,
}

/// A generative (semi-Thue) grammar with a start symbol.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Grammar {
    pub nonterminals: BTreeSet<String>,
    pub terminals: BTreeSet<String>,
    pub start: String,
    pub productions: Vec<Production>,
}

fn valid_symbol(s: &str) -> bool {
    let mut cs = s.chars();
    cs.next().is_some_and(|c| c.is_ascii_alphabetic())
        && cs.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl Grammar {
    pub fn new(
        nonterminals: impl IntoIterator<Item = String>,
        terminals: impl IntoIterator<Item = String>,
        start: impl Into<String>,
        productions: Vec<Production>,
    ) -> Result<Grammar, GrammarError> {
        let g = Grammar {
            nonterminals: nonterminals.into_iter().collect(),
            terminals: terminals.into_iter().collect(),
            start: start.into(),
            productions,
        };
        g.validate()?;
        Ok(g)
    }

    fn validate(&self) -> Result<(), GrammarError> {
        for s in self.nonterminals.iter().chain(&self.terminals) {
            if !valid_symbol(s) {
                return Err(GrammarError::BadSymbol(s.clone()));
            }
        }
        if let Some(s) = self.nonterminals.intersection(&self.terminals).next() {
            return Err(GrammarError::NotDisjoint(s.clone()));
        }
        if !self.nonterminals.contains(&self.start) {
            return Err(GrammarError::BadStart(self.start.clone()));
        }
        for (i, p) in self.productions.iter().enumerate() {
            if p.lhs.is_empty() || p.rhs.is_empty() {
                return Err(GrammarError::EmptySide(i));
            }
            self.check_word(&p.lhs)?;
            self.check_word(&p.rhs)?;
        }
        Ok(())
    }

    pub fn is_symbol(&self, s: &str) -> bool {
        self.nonterminals.contains(s) || self.terminals.contains(s)
    }

    pub fn check_word(&self, w: &[String]) -> Result<(), GrammarError> {
        match w.iter().find(|s| !self.is_symbol(s)) {
            Some(s) => Err(GrammarError::UnknownSymbol(s.clone())),
            None => Ok(()),
        }
    }

    pub fn check_terminal_word(&self, w: &[String]) -> Result<(), GrammarError> {
        match w.iter().find(|s| !self.terminals.contains(*s)) {
            Some(s) => Err(GrammarError::UnknownSymbol(s.clone())),
            None => Ok(()),
        }
    }

    /// No production shortens a word.
    pub fn is_noncontracting(&self) -> bool {
        self.productions.iter().all(|p| p.lhs.len() <= p.rhs.len())
    }

    /// Whitespace-separated symbols; a single token that is not a symbol is
    /// read one character per symbol (`ab` for `a b`).
    pub fn parse_word(&self, text: &str) -> Result<Word, GrammarError> {
        let toks: Vec<&str> = text.split_whitespace().collect();
        let w: Word = if toks.len() == 1 && !self.is_symbol(toks[0]) {
            toks[0].chars().map(|c| c.to_string()).collect()
        } else {
            toks.iter().map(|s| s.to_string()).collect()
        };
        self.check_word(&w)?;
        Ok(w)
    }

    /// Header lines `start: s`, `terminals: a b`, `nonterminals: s t`, then
    /// one production `lhs -> rhs` per line; `#` starts a comment.
    pub fn parse(text: &str) -> Result<Grammar, GrammarError> {
        let mut start = None;
        let mut terminals = Vec::new();
        let mut nonterminals = Vec::new();
        let mut productions = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let err = |msg: &str| GrammarError::Parse {
                line: i + 1,
                msg: msg.to_string(),
            };
            if let Some((lhs, rhs)) = line.split_once("->") {
                let side = |s: &str| s.split_whitespace().map(str::to_string).collect::<Word>();
                productions.push(Production {
                    lhs: side(lhs),
                    rhs: side(rhs),
                });
            } else if let Some((key, val)) = line.split_once(':') {
                let syms = val.split_whitespace().map(str::to_string);
                match key.trim() {
                    "start" => {
                        let v: Vec<String> = syms.collect();
                        if v.len() != 1 {
                            return Err(err("start needs exactly one symbol"));
                        }
                        start = v.into_iter().next();
                    }
                    "terminals" => terminals.extend(syms),
                    "nonterminals" => nonterminals.extend(syms),
                    _ => return Err(err("unknown header")),
                }
            } else {
                return Err(err("expected `key: symbols` or `lhs -> rhs`"));
            }
        }
        let start = start.ok_or(GrammarError::Parse {
            line: 0,
            msg: "missing start".into(),
        })?;
        Grammar::new(nonterminals, terminals, start, productions)
    }
}

impl fmt::Display for Grammar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |s: &BTreeSet<String>| s.iter().cloned().collect::<Vec<_>>().join(" ");
        writeln!(f, "start: {}", self.start)?;
        writeln!(f, "nonterminals: {}", join(&self.nonterminals))?;
        writeln!(f, "terminals: {}", join(&self.terminals))?;
        for p in &self.productions {
            writeln!(f, "{} -> {}", p.lhs.join(" "), p.rhs.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print() {
        let g = Grammar::parse("start: s\nnonterminals: s\nterminals: a b\ns -> a b # base\nb -> b b\n").unwrap();
        assert_eq!(g.productions.len(), 2);
        assert_eq!(Grammar::parse(&g.to_string()).unwrap(), g);
        assert_eq!(g.parse_word("ab").unwrap(), vec!["a", "b"]);
        assert_eq!(g.parse_word("a b b").unwrap().len(), 3);
    }

    #[test]
    fn rejects_bad_grammars() {
        assert!(matches!(
            Grammar::parse("start: s\nnonterminals: s a\nterminals: a\n"),
            Err(GrammarError::NotDisjoint(_))
        ));
        assert!(matches!(
            Grammar::parse("start: s\nnonterminals: s\nterminals: a\ns ->\n"),
            Err(GrammarError::EmptySide(0))
        ));
        assert!(matches!(
            Grammar::parse("start: s\nnonterminals: s\nterminals: a\ns -> c\n"),
            Err(GrammarError::UnknownSymbol(_))
        ));
        assert!(matches!(
            Grammar::parse("start: t\nnonterminals: s\nterminals: a\n"),
            Err(GrammarError::BadStart(_))
        ));
    }
}
