use serde::{Deserialize, Serialize};

use super::config::{Position, Sequent};
use super::formula::Formula;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Polarity {
    Positive,
    Negative,
}

impl Polarity {
    pub fn flip(self) -> Polarity {
        match self {
            Polarity::Positive => Polarity::Negative,
            Polarity::Negative => Polarity::Positive,
        }
    }
}

/// Where a formula occurrence lives inside a sequent.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Site {
    Antecedent(Position),
    Succedent,
}

/// A subformula occurrence: a top-level formula site plus a child-index path
/// into that formula.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OccPath {
    pub site: Site,
    pub sub: Vec<usize>,
}

impl OccPath {
    pub fn is_inside(&self, outer: &OccPath) -> bool {
        self.site == outer.site
            && self.sub.len() > outer.sub.len()
            && self.sub.starts_with(&outer.sub)
    }
}

fn walk<'a>(
    f: &'a Formula,
    pol: Polarity,
    site: &Site,
    sub: &mut Vec<usize>,
    out: &mut Vec<(OccPath, &'a Formula, Polarity)>,
) {
    out.push((
        OccPath {
            site: site.clone(),
            sub: sub.clone(),
        },
        f,
        pol,
    ));
    let children: Vec<(usize, &Formula, Polarity)> = match f {
        Formula::Atom(_) | Formula::Unit => vec![],
        Formula::Under(den, num) => vec![(0, den, pol.flip()), (1, num, pol)],
        Formula::Over(num, den) => vec![(0, num, pol), (1, den, pol.flip())],
        Formula::Prod(a, b) => vec![(0, a, pol), (1, b, pol)],
        Formula::Diamond(a) | Formula::BoxInv(a) | Formula::Bang(a) => vec![(0, a, pol)],
    };
    for (k, c, p) in children {
        sub.push(k);
        walk(c, p, site, sub, out);
        sub.pop();
    }
}

/// Every subformula occurrence of the sequent with its polarity. The
/// succedent is positive, antecedent formulae negative, and descending into a
/// division denominator flips the sign.
pub fn polarity_occurrences(s: &Sequent) -> Vec<(OccPath, &Formula, Polarity)> {
    let mut out = Vec::new();
    for pos in s.ant.leaf_positions() {
        let f = s.ant.leaf(&pos).expect("leaf position");
        walk(f, Polarity::Negative, &Site::Antecedent(pos), &mut vec![], &mut out);
    }
    walk(&s.succ, Polarity::Positive, &Site::Succedent, &mut vec![], &mut out);
    out
}

/// A bracket-modality occurrence that breaks the bracket non-negative
/// condition, together with the enclosing negative `!A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BnncViolation {
    pub bang: OccPath,
    pub offending: OccPath,
}

/// Reading adopted here: inside a sequent-negative `!A`, a `[]-1C` must not be
/// sequent-negative and a `<>C` must not be sequent-positive (equivalently,
/// polarities measured relative to `A`).
pub fn check_bnnc(s: &Sequent) -> Result<(), Vec<BnncViolation>> {
    let occ = polarity_occurrences(s);
    let mut violations = Vec::new();
    for (bang_path, f, pol) in &occ {
        if !f.is_bang() || *pol != Polarity::Negative {
            continue;
        }
        for (inner, g, q) in &occ {
            if !inner.is_inside(bang_path) {
                continue;
            }
            let bad = match g {
                Formula::BoxInv(_) => *q == Polarity::Negative,
                Formula::Diamond(_) => *q == Polarity::Positive,
                _ => false,
            };
            if bad {
                violations.push(BnncViolation {
                    bang: bang_path.clone(),
                    offending: inner.clone(),
                });
            }
        }
    }
    if violations.is_empty() {
        Ok(())
    } else {
        Err(violations)
    }
}

/// The subformula an occurrence path points at.
pub fn occurrence<'a>(s: &'a Sequent, p: &OccPath) -> Option<&'a Formula> {
    let top = match &p.site {
        Site::Antecedent(pos) => s.ant.leaf(pos)?,
        Site::Succedent => &s.succ,
    };
    top.at(&p.sub)
}

pub fn is_bnnc(s: &Sequent) -> bool {
    check_bnnc(s).is_ok()
}
