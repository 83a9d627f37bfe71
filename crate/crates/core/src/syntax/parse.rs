//! Text syntax for formulae and sequents.
//!
//! ```text
//! sequent  := config "=>" formula
//! config   := ε | "/\" | item ("," item)*
//! item     := "[" config "]" | formula
//! formula  := product (("\" | "/") product)?      -- non-associative
//! product  := prefix ("*" product)?                -- right-associative
//! prefix   := ("!" | "<>" | "[]-1") prefix | atom | "1" | "(" formula ")"
//! ```

use thiserror::Error;

use super::config::{Config, Item, Sequent};
use super::formula::Formula;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("syntax error at byte {pos}: found {found}, expected one of: {}", expected.join(", "))]
pub struct SyntaxError {
    pub pos: usize,
    pub found: String,
    pub expected: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Atom(String),
    One,
    Under,
    Over,
    Star,
    Bang,
    Diamond,
    BoxInv,
    LParen,
    RParen,
    LBrack,
    RBrack,
    Comma,
    Arrow,
    Lambda,
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Atom(a) => format!("atom `{a}`"),
            Tok::One => "`1`".into(),
            Tok::Under => "`\\`".into(),
            Tok::Over => "`/`".into(),
            Tok::Star => "`*`".into(),
            Tok::Bang => "`!`".into(),
            Tok::Diamond => "`<>`".into(),
            Tok::BoxInv => "`[]-1`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::LBrack => "`[`".into(),
            Tok::RBrack => "`]`".into(),
            Tok::Comma => "`,`".into(),
            Tok::Arrow => "`=>`".into(),
            Tok::Lambda => "`/\\`".into(),
            Tok::End => "end of input".into(),
        }
    }
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>, SyntaxError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let rest = &text[i..];
        let (tok, len) = if rest.starts_with("[]-1") {
            (Tok::BoxInv, 4)
        } else if rest.starts_with("<>") {
            (Tok::Diamond, 2)
        } else if rest.starts_with("=>") {
            (Tok::Arrow, 2)
        } else if rest.starts_with("/\\") {
            (Tok::Lambda, 2)
        } else if c.is_ascii_alphabetic() {
            let len = rest
                .bytes()
                .take_while(|b| b.is_ascii_alphanumeric() || *b == b'_')
                .count();
            (Tok::Atom(rest[..len].to_string()), len)
        } else {
            let t = match c {
                b'1' => Tok::One,
                b'\\' => Tok::Under,
                b'/' => Tok::Over,
                b'*' => Tok::Star,
                b'!' => Tok::Bang,
                b'(' => Tok::LParen,
                b')' => Tok::RParen,
                b'[' => Tok::LBrack,
                b']' => Tok::RBrack,
                b',' => Tok::Comma,
                _ => {
                    let ch = rest.chars().next().unwrap_or('?');
                    return Err(SyntaxError {
                        pos: i,
                        found: format!("character `{ch}`"),
                        expected: vec!["a formula token".into()],
                    });
                }
            };
            (t, 1)
        };
        out.push((tok, i));
        i += len;
    }
    out.push((Tok::End, text.len()));
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    at: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn pos(&self) -> usize {
        self.toks[self.at].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.at].0.clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn fail<T>(&self, expected: &[&str]) -> Result<T, SyntaxError> {
        Err(SyntaxError {
            pos: self.pos(),
            found: self.peek().describe(),
            expected: expected.iter().map(|s| s.to_string()).collect(),
        })
    }

    fn expect(&mut self, tok: Tok) -> Result<(), SyntaxError> {
        if *self.peek() == tok {
            self.bump();
            Ok(())
        } else {
            self.fail(&[&tok.describe()])
        }
    }

    fn formula(&mut self) -> Result<Formula, SyntaxError> {
        let left = self.product()?;
        let f = match self.peek() {
            Tok::Under => {
                self.bump();
                Formula::under(left, self.product()?)
            }
            Tok::Over => {
                self.bump();
                Formula::over(left, self.product()?)
            }
            _ => return Ok(left),
        };
        if matches!(self.peek(), Tok::Under | Tok::Over) {
            return Err(SyntaxError {
                pos: self.pos(),
                found: self.peek().describe(),
                expected: vec!["parentheses around the inner division".into()],
            });
        }
        Ok(f)
    }

    fn product(&mut self) -> Result<Formula, SyntaxError> {
        let left = self.prefix()?;
        if *self.peek() == Tok::Star {
            self.bump();
            let right = self.product()?;
            return Ok(Formula::prod(left, right));
        }
        Ok(left)
    }

    fn prefix(&mut self) -> Result<Formula, SyntaxError> {
        match self.peek().clone() {
            Tok::Bang => {
                self.bump();
                Ok(Formula::bang(self.prefix()?))
            }
            Tok::Diamond => {
                self.bump();
                Ok(Formula::diamond(self.prefix()?))
            }
            Tok::BoxInv => {
                self.bump();
                Ok(Formula::box_inv(self.prefix()?))
            }
            Tok::Atom(a) => {
                self.bump();
                Ok(Formula::Atom(a))
            }
            Tok::One => {
                self.bump();
                Ok(Formula::Unit)
            }
            Tok::LParen => {
                self.bump();
                let f = self.formula()?;
                self.expect(Tok::RParen)?;
                Ok(f)
            }
            _ => self.fail(&["atom", "`1`", "`(`", "`!`", "`<>`", "`[]-1`"]),
        }
    }

    fn config(&mut self, closing: &Tok) -> Result<Config, SyntaxError> {
        let mut items = Vec::new();
        if *self.peek() == Tok::Lambda {
            self.bump();
            return Ok(Config::empty());
        }
        if self.peek() == closing {
            return Ok(Config::empty());
        }
        loop {
            if *self.peek() == Tok::LBrack {
                self.bump();
                let inner = self.config(&Tok::RBrack)?;
                self.expect(Tok::RBrack)?;
                items.push(Item::Bracket(inner));
            } else {
                items.push(Item::Leaf(self.formula()?));
            }
            if *self.peek() == Tok::Comma {
                self.bump();
            } else {
                return Ok(Config::new(items));
            }
        }
    }
}

pub fn parse_formula(text: &str) -> Result<Formula, SyntaxError> {
    let mut p = Parser { toks: lex(text)?, at: 0 };
    let f = p.formula()?;
    if *p.peek() != Tok::End {
        return p.fail(&["end of input"]);
    }
    Ok(f)
}

pub fn parse_config(text: &str) -> Result<Config, SyntaxError> {
    let mut p = Parser { toks: lex(text)?, at: 0 };
    let c = p.config(&Tok::End)?;
    if *p.peek() != Tok::End {
        return p.fail(&["`,`", "end of input"]);
    }
    Ok(c)
}

pub fn parse_sequent(text: &str) -> Result<Sequent, SyntaxError> {
    let mut p = Parser { toks: lex(text)?, at: 0 };
    let ant = p.config(&Tok::Arrow)?;
    p.expect(Tok::Arrow)?;
    let succ = p.formula()?;
    if *p.peek() != Tok::End {
        return p.fail(&["end of input"]);
    }
    Ok(Sequent::new(ant, succ))
}
