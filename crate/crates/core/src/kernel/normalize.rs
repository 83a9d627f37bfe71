use super::derivation::Derivation;
use super::perm;
use super::rule::RuleId;

/// Merge chains of `PermStar` into one and drop identity permutations.
pub fn normalize_perms(d: &Derivation) -> Derivation {
    let premises: Vec<Derivation> = d.premises.iter().map(normalize_perms).collect();
    if d.rule.rule != RuleId::PermStar {
        return Derivation::new(d.conclusion.clone(), d.rule.clone(), premises);
    }
    let Ok(mut blocks) = perm::split(&d.conclusion.ant, &d.rule.perm_map) else {
        return Derivation::new(d.conclusion.clone(), d.rule.clone(), premises);
    };
    let mut above = premises.into_iter().next().expect("PermStar has one premise");
    while above.rule.rule == RuleId::PermStar {
        let Ok(upper) = perm::split(&above.conclusion.ant, &above.rule.perm_map) else {
            break;
        };
        blocks = perm::compose(&blocks, &upper);
        above = above.premises.into_iter().next().expect("PermStar has one premise");
    }
    if perm::is_identity(&blocks) {
        return above;
    }
    let mut rule = d.rule.clone();
    rule.perm_map = perm::flatten(&blocks);
    Derivation::new(d.conclusion.clone(), rule, vec![above])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::{check_derivation, RuleInstance, System};
    use crate::syntax::{parse_sequent, Position};

    #[test]
    fn collapses_permutation_chains() {
        let s = |t: &str| parse_sequent(t).unwrap();
        let ax = Derivation::leaf(s("a => a"), RuleInstance::new(RuleId::AxId));
        let weak = Derivation::new(
            s("a, !p => a"),
            RuleInstance::at(RuleId::Weak, Position::top(1)),
            vec![ax],
        );
        let mut d = weak;
        for concl in ["!p, a => a", "a, !p => a", "!p, a => a"] {
            d = Derivation::new(s(concl), RuleInstance::perm(vec![1, 0]), vec![d]);
        }
        check_derivation(&System::L1BangW, &d, false).unwrap();
        let n = normalize_perms(&d);
        assert_eq!(n.size(), 3);
        assert_eq!(n.rule.perm_map, vec![1, 0]);
        check_derivation(&System::L1BangW, &n, false).unwrap();
        let id = Derivation::new(s("a, !p => a"), RuleInstance::perm(vec![0, 1]), vec![n.premises[0].clone()]);
        assert_eq!(normalize_perms(&id).rule.rule, RuleId::Weak);
    }
}
