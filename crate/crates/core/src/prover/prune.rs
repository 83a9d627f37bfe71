//! Cheap necessary conditions for derivability.

use std::collections::BTreeMap;

use crate::kernel::System;
use crate::syntax::{polarity_occurrences, Formula, Polarity, Sequent, Site};

/// Occurrences that can remove an antecedent bracket: negative `[]-1` and
/// positive `<>`. Returns `None` when some copyable (negative `!`) formula
/// contains one, because then the supply is unbounded.
pub(crate) fn bracket_removers(s: &Sequent) -> Option<usize> {
    let occ = polarity_occurrences(s);
    let bangs: Vec<_> = occ
        .iter()
        .filter(|(_, f, p)| f.is_bang() && *p == Polarity::Negative)
        .map(|(path, _, _)| path)
        .collect();
    let mut count = 0;
    for (path, f, p) in &occ {
        let remover = matches!(
            (f, p),
            (Formula::BoxInv(_), Polarity::Negative) | (Formula::Diamond(_), Polarity::Positive)
        );
        if remover {
            if bangs.iter().any(|b| path.is_inside(b)) {
                return None;
            }
            count += 1;
        }
    }
    Some(count)
}

/// Atom balance: without copyable formulae every atom occurs as often
/// positively as negatively in a derivable sequent.
pub(crate) fn atoms_balanced(s: &Sequent) -> bool {
    let mut balance: BTreeMap<&str, i64> = BTreeMap::new();
    for (_, f, p) in polarity_occurrences(s) {
        match f {
            Formula::Bang(_) if p == Polarity::Negative => return true,
            Formula::Atom(a) => {
                *balance.entry(a.as_str()).or_default() += match p {
                    Polarity::Positive => 1,
                    Polarity::Negative => -1,
                }
            }
            _ => {}
        }
    }
    balance.values().all(|v| *v == 0)
}

/// A bracket is removed either by `BoxInvL`, which needs a negative `[]-1`
/// among the formulae inside it, or by `DiamondR`, which needs a positive
/// `<>` somewhere in the sequent.
pub(crate) fn dead_bracket(s: &Sequent) -> bool {
    let occ = polarity_occurrences(s);
    if occ
        .iter()
        .any(|(_, f, p)| matches!(f, Formula::Diamond(_)) && *p == Polarity::Positive)
    {
        return false;
    }
    let mut live: Vec<&[usize]> = Vec::new();
    for (path, f, p) in &occ {
        if let (Site::Antecedent(pos), Formula::BoxInv(_), Polarity::Negative) = (&path.site, f, p) {
            live.push(&pos.node);
        }
    }
    s.ant
        .node_paths()
        .iter()
        .skip(1)
        .any(|b| !live.iter().any(|n| n.starts_with(b)))
}

pub(crate) fn hopeless(s: &Sequent, sys: &System) -> bool {
    if let Some(r) = bracket_removers(s) {
        if s.ant.bracket_count() > r {
            return true;
        }
    }
    if s.ant.bracket_count() > 0 && dead_bracket(s) {
        return true;
    }
    sys.theory().is_empty() && !atoms_balanced(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::parse_sequent;

    fn seq(t: &str) -> Sequent {
        parse_sequent(t).unwrap()
    }

    #[test]
    fn removers() {
        assert_eq!(bracket_removers(&seq("[[]-1p] => p")), Some(1));
        assert_eq!(bracket_removers(&seq("[p] => <>p")), Some(1));
        assert_eq!(bracket_removers(&seq("![]-1p, p => p")), None);
        assert!(hopeless(&seq("[p] => p"), &System::BL1));
    }

    #[test]
    fn dead_brackets() {
        assert!(dead_bracket(&seq("![]-1p, [!q, a] => a")));
        assert!(!dead_bracket(&seq("![]-1p, [![]-1p, a] => a")));
        assert!(!dead_bracket(&seq("[!q, a] => <>a")));
        assert!(dead_bracket(&seq("[[]-1p, [a]] => a")));
    }

    #[test]
    fn balance() {
        assert!(atoms_balanced(&seq("p, p\\q => q")));
        assert!(!atoms_balanced(&seq("p => q")));
        assert!(atoms_balanced(&seq("!p => p*p")));
        assert!(!atoms_balanced(&seq("=> !p")));
    }
}
