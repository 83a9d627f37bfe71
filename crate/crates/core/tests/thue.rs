use sublam::cut::eliminate_cuts;
use sublam::kernel::{check_derivation, RuleId, System};
use sublam::prover::{search, Budget};
use sublam::syntax::{bfp_sequent, parse_sequent};
use sublam::thue::{
    build_bracketed_derivation, derives, goal_sequent, inst_macro, translate_bfp_derivation,
    translate_to_weak, Derivability, Grammar, Variant,
};

fn grammar(text: &str) -> Grammar {
    Grammar::parse(text).unwrap()
}

const G1: &str = "start: s\nnonterminals: s\nterminals: a b\ns -> a b\n";
const G2: &str = "start: s\nnonterminals: s\nterminals: a b\ns -> a b\nb -> b b\n";

fn all_directions(g: &Grammar, word: &str) -> usize {
    let w = g.parse_word(word).unwrap();
    let Derivability::Yes(t) = derives(g, &w, 8, 10_000).unwrap() else {
        panic!("{word} not derivable")
    };
    let d = build_bracketed_derivation(g, &t).unwrap();
    let (goal, _) = goal_sequent(g, &w, Variant::Bracketed).unwrap();
    assert_eq!(d.conclusion, goal);
    check_derivation(&System::BL1, &d, false).unwrap();

    let plain = translate_bfp_derivation(&d).unwrap();
    let (goal, _) = goal_sequent(g, &w, Variant::Plain).unwrap();
    assert_eq!(plain.conclusion, goal);
    assert_eq!(plain.conclusion, bfp_sequent(&d.conclusion));
    check_derivation(&System::L1Bang, &plain, false).unwrap();

    let weak = translate_to_weak(&plain).unwrap();
    let (goal, _) = goal_sequent(g, &w, Variant::Weak).unwrap();
    assert_eq!(weak.conclusion, goal);
    assert_eq!(weak.cut_count(), g.productions.len());
    check_derivation(&System::L1BangW, &weak, true).unwrap();
    let free = eliminate_cuts(&weak, &System::L1BangW).unwrap();
    check_derivation(&System::L1BangW, &free, false).unwrap();
    d.size()
}

#[test]
fn one_production() {
    // regression value for the builder's output size
    assert_eq!(all_directions(&grammar(G1), "ab"), 14);
}

#[test]
fn overlapping_steps() {
    let g = grammar(G2);
    for w in ["ab", "abb", "abbb"] {
        all_directions(&g, w);
    }
}

#[test]
fn base_case_tower() {
    let g = grammar(G2);
    let t = sublam::thue::RewriteTrace::empty(vec!["s".into()]);
    let d = build_bracketed_derivation(&g, &t).unwrap();
    let want = "!(1/![]-1(s/(a*b))), !(1/![]-1(b/(b*b))), ![]-1(s/(a*b)), ![]-1(b/(b*b)), s => s";
    assert_eq!(d.conclusion, parse_sequent(want).unwrap());
    check_derivation(&System::BL1, &d, false).unwrap();
    assert!(!d.uses(RuleId::ContrB));
}

#[test]
fn invalid_trace_rejected() {
    let g = grammar(G1);
    let mut t = sublam::thue::RewriteTrace::empty(vec!["s".into()]);
    t.steps.push(sublam::thue::RewriteStep { production: 0, position: 1 });
    assert!(build_bracketed_derivation(&g, &t).is_err());
}

fn prove_bl1(text: &str) -> sublam::kernel::Derivation {
    let s = parse_sequent(text).unwrap();
    let mut b = Budget::for_sequent(&s);
    b.complete = true;
    search(&s, &System::BL1, &b).derivation().cloned().unwrap()
}

#[test]
fn inst_rule_fixtures() {
    let d = prove_bl1("!(1/![]-1p), ![]-1p, p => p");
    let out = inst_macro(&d, 1, 2).unwrap();
    assert_eq!(out.conclusion.to_string(), "!(1/![]-1p), ![]-1p => p");
    assert_eq!(out.size(), d.size() + 5);
    check_derivation(&System::BL1, &out, false).unwrap();

    let d = prove_bl1("![]-1p, !(1/![]-1p), p => p");
    let out = inst_macro(&d, 0, 2).unwrap();
    check_derivation(&System::BL1, &out, false).unwrap();

    assert!(inst_macro(&d, 1, 2).is_err());
}

#[test]
fn weak_translation_without_productions() {
    let g = grammar("start: s\nnonterminals: s\nterminals: a\n");
    let (goal, _) = goal_sequent(&g, &[], Variant::Plain).unwrap();
    assert_eq!(goal.to_string(), "=> s");
    let ax = prove_bl1("s => s");
    assert_eq!(translate_to_weak(&ax).unwrap(), ax);
}
