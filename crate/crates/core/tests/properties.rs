use std::time::Duration;

use proptest::prelude::*;

use sublam::cut::eliminate_cuts;
use sublam::kernel::{
    applicable_instances, check_derivation, instantiate_backward, normalize_perms, Derivation,
    RuleId, RuleInstance, System,
};
use sublam::prover::{decide_bnnc, Budget};
use sublam::syntax::{
    bfp_config, bfp_formula, bfp_sequent, check_bnnc, is_bnnc, is_bracket_free, parse_config,
    parse_formula, parse_sequent, polarity_occurrences, Config, Formula, Item, Polarity, Sequent,
};
use sublam::thue::{derives, encode, Derivability, Grammar};

fn atom() -> impl Strategy<Value = Formula> {
    prop_oneof![
        4 => prop::sample::select(vec!["p", "q", "r"]).prop_map(Formula::atom),
        1 => Just(Formula::Unit),
    ]
}

fn formula(depth: u32) -> impl Strategy<Value = Formula> {
    atom().prop_recursive(depth, 16, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::prod(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::under(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::over(a, b)),
            inner.clone().prop_map(Formula::bang),
            inner.clone().prop_map(Formula::diamond),
            inner.prop_map(Formula::box_inv),
        ]
    })
}

fn config(depth: u32) -> impl Strategy<Value = Config> {
    let leaf = prop::collection::vec(formula(2).prop_map(Item::Leaf), 0..3).prop_map(Config::new);
    leaf.prop_recursive(depth, 8, 3, |inner| {
        prop::collection::vec(
            prop_oneof![
                3 => formula(2).prop_map(Item::Leaf),
                1 => inner.prop_map(Item::Bracket),
            ],
            0..4,
        )
        .prop_map(Config::new)
    })
}

fn sequent() -> impl Strategy<Value = Sequent> {
    (config(2), formula(2)).prop_map(|(a, s)| Sequent::new(a, s))
}

fn small_sequent() -> impl Strategy<Value = Sequent> {
    (config(1), formula(2)).prop_filter("small", |(a, s)| a.size() + s.size() <= 9)
        .prop_map(|(a, s)| Sequent::new(a, s))
}

/// The product of the items, brackets read as `<>`.
fn mirror(c: &Config) -> Formula {
    let parts: Vec<Formula> = c
        .items
        .iter()
        .map(|it| match it {
            Item::Leaf(f) => f.clone(),
            Item::Bracket(c) => Formula::diamond(mirror(c)),
        })
        .collect();
    Formula::prod_of(&parts).unwrap_or(Formula::Unit)
}

/// Mostly derivable: the succedent is the antecedent read as a product,
/// sometimes wrapped in a division the antecedent can supply.
fn likely_derivable() -> impl Strategy<Value = Sequent> {
    (config(1), prop::bool::ANY)
        .prop_filter("small", |(a, _)| a.size() <= 6)
        .prop_map(|(a, wrap)| {
            let succ = mirror(&a);
            match (wrap, a.items.first()) {
                (true, Some(Item::Leaf(f))) => {
                    let rest = Config::new(a.items[1..].to_vec());
                    Sequent::new(rest, Formula::under(f.clone(), succ))
                }
                _ => Sequent::new(a, succ),
            }
        })
}

fn derivation_of(s: &Sequent) -> Option<Derivation> {
    if !is_bnnc(s) {
        return None;
    }
    let b = Budget::for_sequent(s).with_time_limit(Duration::from_millis(500));
    decide_bnnc(s, &b).ok()?.derivation().cloned()
}

/// Rebuild the conclusion of `inst` from its premises. `None` for axioms
/// and `Weak`, whose conclusion is not determined by the premises.
fn forward(inst: &RuleInstance, premises: &[Sequent]) -> Option<Sequent> {
    use RuleId::*;
    let node = &inst.at.node;
    let i = inst.at.index;
    let leaf_at = |c: &Config, k: usize| match &c.node(node)?.items.get(k)? {
        Item::Leaf(f) => Some(f.clone()),
        Item::Bracket(_) => None,
    };
    let p = premises;
    let done = |ant: Config, succ: &Formula| Some(Sequent::new(ant, succ.clone()));
    match inst.rule {
        AxId | AxUnit | AxTheory(_) | Weak => None,
        UnderL => {
            let s = inst.splits[0];
            let c = leaf_at(&p[1].ant, s)?;
            let mut with = p[0].ant.items.clone();
            with.push(Item::Leaf(Formula::under(p[0].succ.clone(), c)));
            done(p[1].ant.splice(node, s, s + 1, with)?, &p[1].succ)
        }
        OverL => {
            let c = leaf_at(&p[1].ant, i)?;
            let mut with = vec![Item::Leaf(Formula::over(c, p[0].succ.clone()))];
            with.extend(p[0].ant.items.clone());
            done(p[1].ant.splice(node, i, i + 1, with)?, &p[1].succ)
        }
        UnderR => {
            let a = leaf_at(&p[0].ant, 0)?;
            let rest = Config::new(p[0].ant.items[1..].to_vec());
            done(rest, &Formula::under(a, p[0].succ.clone()))
        }
        OverR => {
            let n = p[0].ant.len();
            let b = leaf_at(&p[0].ant, n.checked_sub(1)?)?;
            let rest = Config::new(p[0].ant.items[..n - 1].to_vec());
            done(rest, &Formula::over(p[0].succ.clone(), b))
        }
        ProdL => {
            let (a, b) = (leaf_at(&p[0].ant, i)?, leaf_at(&p[0].ant, i + 1)?);
            let ant = p[0].ant.splice(node, i, i + 2, vec![Item::Leaf(Formula::prod(a, b))])?;
            done(ant, &p[0].succ)
        }
        ProdR => {
            let mut items = p[0].ant.items.clone();
            items.extend(p[1].ant.items.clone());
            done(Config::new(items), &Formula::prod(p[0].succ.clone(), p[1].succ.clone()))
        }
        UnitL => done(p[0].ant.splice(node, i, i, vec![Item::Leaf(Formula::Unit)])?, &p[0].succ),
        DiamondL => {
            let Item::Bracket(inner) = p[0].ant.node(node)?.items.get(i)? else {
                return None;
            };
            let [Item::Leaf(a)] = inner.items.as_slice() else {
                return None;
            };
            let ant = p[0].ant.splice(node, i, i + 1, vec![Item::Leaf(Formula::diamond(a.clone()))])?;
            done(ant, &p[0].succ)
        }
        DiamondR => done(
            Config::new(vec![Item::Bracket(p[0].ant.clone())]),
            &Formula::diamond(p[0].succ.clone()),
        ),
        BoxInvL => {
            let a = leaf_at(&p[0].ant, i)?;
            let br = Item::Bracket(Config::leaves([Formula::box_inv(a)]));
            done(p[0].ant.splice(node, i, i + 1, vec![br])?, &p[0].succ)
        }
        BoxInvR => {
            let [Item::Bracket(inner)] = p[0].ant.items.as_slice() else {
                return None;
            };
            done(inner.clone(), &Formula::box_inv(p[0].succ.clone()))
        }
        BangL => {
            let a = leaf_at(&p[0].ant, i)?;
            done(p[0].ant.splice(node, i, i + 1, vec![Item::Leaf(Formula::bang(a))])?, &p[0].succ)
        }
        BangR => done(p[0].ant.clone(), &Formula::bang(p[0].succ.clone())),
        ContrB => {
            let mid = inst.splits[0];
            let Item::Bracket(inner) = p[0].ant.node(node)?.items.get(mid)? else {
                return None;
            };
            let k = mid - i;
            let outside = &p[0].ant.node(node)?.items[i..mid];
            if inner.items.get(..k)? != outside {
                return None;
            }
            done(p[0].ant.splice(node, mid, mid + 1, inner.items[k..].to_vec())?, &p[0].succ)
        }
        Contr => {
            let a = leaf_at(&p[0].ant, i)?;
            if leaf_at(&p[0].ant, i + 1)? != a {
                return None;
            }
            done(p[0].ant.splice(node, i, i + 2, vec![Item::Leaf(a)])?, &p[0].succ)
        }
        PermStar => {
            let mut flat = inst.perm_map.iter().copied();
            done(unpermute(&p[0].ant, &mut flat)?, &p[0].succ)
        }
        Cut => {
            let with = p[0].ant.items.clone();
            done(p[1].ant.splice(node, i, i + 1, with)?, &p[1].succ)
        }
    }
}

/// Place premise child `j` at conclusion slot `map[j]`, node by node in
/// preorder.
fn unpermute(c: &Config, flat: &mut impl Iterator<Item = usize>) -> Option<Config> {
    let map: Vec<usize> = flat.take(c.len()).collect();
    let mut slots: Vec<Option<Item>> = vec![None; c.len()];
    for (j, it) in c.items.iter().enumerate() {
        let it = match it {
            Item::Bracket(inner) => Item::Bracket(unpermute(inner, flat)?),
            leaf => leaf.clone(),
        };
        *slots.get_mut(*map.get(j)?)? = Some(it);
    }
    slots.into_iter().collect::<Option<Vec<_>>>().map(Config::new)
}

fn substitute(s: &Sequent, name: &str, by: &Formula) -> Sequent {
    fn conf(c: &Config, name: &str, by: &Formula) -> Config {
        Config::new(
            c.items
                .iter()
                .map(|it| match it {
                    Item::Leaf(f) => Item::Leaf(f.substitute(name, by)),
                    Item::Bracket(b) => Item::Bracket(conf(b, name, by)),
                })
                .collect(),
        )
    }
    Sequent::new(conf(&s.ant, name, by), s.succ.substitute(name, by))
}

fn grammar() -> impl Strategy<Value = Grammar> {
    let word = prop::collection::vec(prop::sample::select(vec!["s", "t", "a", "b"]), 1..4);
    prop::collection::vec((word.clone(), word), 0..4).prop_map(|ps| {
        let mut text = String::from("start: s\nnonterminals: s t\nterminals: a b\n");
        for (l, r) in ps {
            text.push_str(&format!("{} -> {}\n", l.join(" "), r.join(" ")));
        }
        Grammar::parse(&text).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn formula_round_trip(f in formula(4)) {
        prop_assert_eq!(parse_formula(&f.to_string()).unwrap(), f);
    }

    #[test]
    fn sequent_round_trip(s in sequent()) {
        prop_assert_eq!(parse_sequent(&s.to_string()).unwrap(), s.clone());
        prop_assert_eq!(parse_config(&s.ant.to_string()).unwrap(), s.ant);
    }

    #[test]
    fn polarity_bookkeeping(s in sequent()) {
        let occ = polarity_occurrences(&s);
        let total: usize = s.formulas().iter().map(|f| f.size()).sum();
        prop_assert_eq!(occ.len(), total);
        let mut paths: Vec<_> = occ.iter().map(|(p, _, _)| p.clone()).collect();
        paths.sort();
        paths.dedup();
        prop_assert_eq!(paths.len(), total);
        for (_, _, p) in &occ {
            prop_assert_eq!(p.flip().flip(), *p);
        }
        prop_assert!(occ.iter().any(|(p, f, pol)| p.sub.is_empty() && **f == s.succ && *pol == Polarity::Positive));
    }

    #[test]
    fn bfp_is_idempotent(s in sequent()) {
        let once = bfp_sequent(&s);
        prop_assert_eq!(bfp_sequent(&once), once.clone());
        prop_assert!(is_bracket_free(&once));
        prop_assert_eq!(once.ant.bracket_count(), 0);
        prop_assert!(once.formulas().iter().all(|f| !f.has_bracket_modality()));
        prop_assert_eq!(bfp_config(&s.ant).leaf_count(), s.ant.leaf_count());
        prop_assert_eq!(bfp_formula(&s.succ), once.succ);
    }

    #[test]
    fn bnnc_survives_plain_substitution(s in sequent(), by in formula(2), x in prop::sample::select(vec!["p", "q", "r"])) {
        prop_assume!(is_bnnc(&s) && !by.has_bracket_modality());
        prop_assert!(check_bnnc(&substitute(&s, x, &by)).is_ok());
    }

    #[test]
    fn backward_then_forward(s in small_sequent()) {
        for sys in [System::BL1, System::L1Bang, System::L1BangW] {
            for inst in applicable_instances(&s, &sys, 2 * s.ant.leaf_count() + 2) {
                let premises = instantiate_backward(&sys, &s, &inst).unwrap();
                prop_assert_eq!(premises.len(), inst.rule.arity());
                if let Some(back) = forward(&inst, &premises) {
                    prop_assert_eq!(back, s.clone(), "{:?}", inst);
                }
            }
        }
    }

    #[test]
    fn found_derivations(s in prop_oneof![small_sequent(), likely_derivable()]) {
        let Some(d) = derivation_of(&s) else { return Ok(()); };
        check_derivation(&System::BL1, &d, false).unwrap();

        // subformula property
        let goal: Vec<&Formula> = s.formulas().iter().flat_map(|f| f.subformulas()).collect();
        for (_, n) in d.nodes() {
            for f in n.conclusion.formulas() {
                prop_assert!(goal.contains(&f), "{} in {} is not a subformula of {}", f, n.conclusion, s);
            }
            // polarity respect
            prop_assert!(is_bnnc(&n.conclusion));
        }

        // serialization
        prop_assert_eq!(Derivation::from_json(&d.to_json()).unwrap(), d.clone());
        prop_assert_eq!(Derivation::parse_rendered(&d.render()).unwrap(), d.clone());

        // permutation normal form
        let n = normalize_perms(&d);
        check_derivation(&System::BL1, &n, false).unwrap();
        let non_perm = |d: &Derivation| d.count_rule(&|r| r != RuleId::PermStar);
        prop_assert_eq!(non_perm(&n), non_perm(&d));
        for (_, node) in n.nodes() {
            if node.rule.rule == RuleId::PermStar {
                prop_assert!(node.premises[0].rule.rule != RuleId::PermStar);
            }
        }

        // cut elimination leaves cut-free input alone
        prop_assert_eq!(eliminate_cuts(&d, &System::BL1).unwrap(), n);
    }

    #[test]
    fn encoding_projects(g in grammar()) {
        let e = encode(&g);
        prop_assert_eq!(bfp_config(&e.gamma_tilde), e.gamma);
        prop_assert_eq!(bfp_config(&e.phi_tilde), e.phi);
        prop_assert_eq!(e.theory.len(), g.productions.len());
    }

    #[test]
    fn rewrite_traces_replay(g in grammar(), w in prop::collection::vec(prop::sample::select(vec!["a", "b"]), 0..4)) {
        let w: Vec<String> = w.into_iter().map(String::from).collect();
        if let Derivability::Yes(t) = derives(&g, &w, 5, 2_000).unwrap() {
            prop_assert!(t.is_valid(&g));
            let words = t.replay(&g).unwrap();
            prop_assert_eq!(words.last().unwrap(), &w);
            prop_assert_eq!(&t.end, &w);
        }
    }
}
