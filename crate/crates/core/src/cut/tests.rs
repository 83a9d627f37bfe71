use super::*;
use crate::kernel::check_derivation;
use crate::prover::{search, Budget};
use crate::syntax::parse_sequent;

fn prove(s: &str, sys: &System) -> Derivation {
    let s = parse_sequent(s).unwrap();
    let mut b = Budget::for_sequent(&s);
    b.complete = true;
    search(&s, sys, &b)
        .derivation()
        .cloned()
        .unwrap_or_else(|| panic!("no derivation for {s}"))
}

fn run(d: &Derivation, sys: &System) -> Derivation {
    check_derivation(sys, d, true).unwrap();
    let (out, log) = eliminate_cuts_logged(d, sys).unwrap();
    assert_eq!(out.conclusion, d.conclusion);
    check_derivation(sys, &out, false).unwrap();
    assert!(out.is_cut_free());
    for s in &log {
        if let Some(p) = s.parent {
            let parent = &log[p];
            if parent.case == CutCase::Deep {
                assert!(s.measure.kappa < parent.measure.kappa);
            } else {
                assert!(s.measure < parent.measure, "{:?} under {:?}", s, parent);
            }
        }
    }
    out
}

#[test]
fn axiom_cuts_disappear() {
    let ax = prove("p => p", &System::BL1);
    let d = compose_cut(&ax, &ax, &Position::top(0)).unwrap();
    assert_eq!(d.conclusion.to_string(), "p => p");
    let out = run(&d, &System::BL1);
    assert_eq!(out.rule.rule, RuleId::AxId);
}

#[test]
fn unit_cut() {
    let one = prove("=> 1", &System::BL1);
    let right = prove("1, q => q", &System::BL1);
    let d = compose_cut(&one, &right, &Position::top(0)).unwrap();
    assert_eq!(d.conclusion.to_string(), "q => q");
    assert_eq!(run(&d, &System::BL1).size(), 1);
}

#[test]
fn wrong_formula_rejected() {
    let ax = prove("p => p", &System::BL1);
    let right = prove("q => q", &System::BL1);
    assert_eq!(
        compose_cut(&ax, &right, &Position::top(0)),
        Err(CutError::NotACutFormula)
    );
}

#[test]
fn principal_cases() {
    let sys = System::BL1;
    for (l, r, at) in [
        ("p, q => p*q", "p*q => p*q", 0),
        ("q => p\\(p*q)", "p, p\\(p*q) => p*q", 1),
        ("p => (p*q)/q", "(p*q)/q, q => p*q", 0),
        ("[p] => <>p", "<>p => <>p", 0),
    ] {
        let left = prove(l, &sys);
        let right = prove(r, &sys);
        let d = compose_cut(&left, &right, &Position::top(at)).unwrap();
        run(&d, &sys);
    }
}

#[test]
fn box_inverse_principal() {
    let sys = System::BL1;
    // left: p => []-1<>p from [p] => <>p
    let left = prove("p => []-1<>p", &sys);
    let right = prove("[[]-1<>p] => <>p", &sys);
    let d = compose_cut(&left, &right, &Position::new(vec![0], 0)).unwrap();
    assert_eq!(d.conclusion.to_string(), "[p] => <>p");
    run(&d, &sys);
}

#[test]
fn deep_case_widens_contraction_block() {
    let sys = System::BL1;
    let left = prove("!p, !q => !(p*q)", &sys);
    assert_eq!(left.rule.rule, RuleId::BangR);
    let right = prove("!(p*q) => (p*q) * <>(p*q)", &sys);
    assert!(right.uses(RuleId::ContrB));
    let t = trace_bang(&right, &sys, &Position::top(0)).unwrap();
    assert_eq!(t.branch_count(), 2);
    let d = compose_cut(&left, &right, &Position::top(0)).unwrap();
    let out = run(&d, &sys);
    assert_eq!(out.conclusion.to_string(), "!p, !q => (p*q)*<>(p*q)");
    assert!(out.uses(RuleId::ContrB));
}

#[test]
fn deep_case_on_axiom() {
    let sys = System::BL1;
    let left = prove("!p => !p", &sys);
    let right = prove("!p => !p", &sys);
    let t = trace_bang(&right, &sys, &Position::top(0)).unwrap();
    assert_eq!(t.branch_count(), 1);
    assert_eq!(t.derivation.rule.rule, RuleId::BangR);
    check_derivation(&sys, &t.derivation, false).unwrap();
    let d = compose_cut(&left, &right, &Position::top(0)).unwrap();
    run(&d, &sys);
}

#[test]
fn deep_case_with_contraction_and_weakening() {
    let left = prove("!p, !q => !(p*q)", &System::L1Bang);
    let right = prove("!(p*q) => (p*q)*(p*q)", &System::L1Bang);
    let d = compose_cut(&left, &right, &Position::top(0)).unwrap();
    run(&d, &System::L1Bang);

    let sys = System::L1BangW;
    let left = prove("!p, !q => !(p*q)", &sys);
    let right = prove("!(p*q), r => r", &sys);
    let d = compose_cut(&left, &right, &Position::top(0)).unwrap();
    let out = run(&d, &sys);
    assert_eq!(out.count_rule(&|r| r == RuleId::Weak), 2);
}

#[test]
fn left_and_right_permutations() {
    let sys = System::BL1;
    let left = prove("p*q => p*q", &sys);
    let right = prove("r, p*q => r*(p*q)", &sys);
    let d = compose_cut(&left, &right, &Position::top(1)).unwrap();
    run(&d, &sys);
    let left = prove("s, s\\(p*q) => p*q", &sys);
    let d = compose_cut(&left, &right, &Position::top(1)).unwrap();
    run(&d, &sys);
}

#[test]
fn nested_cuts_topmost_first() {
    let sys = System::BL1;
    let ax = prove("p*q => p*q", &sys);
    let inner = compose_cut(&ax, &ax, &Position::top(0)).unwrap();
    let right = prove("r, p*q => r*(p*q)", &sys);
    let d = compose_cut(&inner, &right, &Position::top(1)).unwrap();
    assert_eq!(d.cut_count(), 2);
    run(&d, &sys);
}

#[test]
fn theory_rejected() {
    let ax = prove("p => p", &System::BL1);
    assert!(matches!(
        eliminate_cuts(&ax, &System::L1Theory(vec![])),
        Err(CutError::UnsupportedSystem(_))
    ));
}
