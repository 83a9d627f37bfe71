use std::time::{Duration, Instant};

use sublam::kernel::{check_derivation, RuleId, System};
use sublam::prover::{decide_bnnc, enumerate_derivations, search, Budget, ProveResult};
use sublam::syntax::{parse_sequent, Sequent};

fn seq(t: &str) -> Sequent {
    parse_sequent(t).unwrap()
}

fn decide(t: &str) -> ProveResult {
    let s = seq(t);
    let r = decide_bnnc(&s, &Budget::for_sequent(&s)).unwrap();
    if let ProveResult::Derivable(d) = &r {
        check_derivation(&System::BL1, d, false).unwrap();
        assert_eq!(d.conclusion, s);
    }
    r
}

#[test]
fn transitive_sentence_is_a_theorem() {
    assert!(decide("N, (N\\S)/N, N => S").is_derivable());
}

#[test]
fn distinct_atoms_are_not_derivable() {
    assert_eq!(decide("p => q"), ProveResult::NotDerivable);
}

#[test]
fn island_blocks_extraction() {
    let island = "N/CN, CN, (CN\\CN)/(S/N), N, N\\S, [ []-1((N\\S)\\(N\\S))/(N\\S), (N\\S)/N ] => N";
    assert_eq!(decide(island), ProveResult::NotDerivable);
}

#[test]
fn medial_extraction() {
    let s = "N/CN, CN, (CN\\CN)/(S/!N), N, (N\\S)/N, (N\\S)\\(N\\S) => N";
    assert!(decide(s).is_derivable());
}

#[test]
fn non_bnnc_is_rejected() {
    let s = seq("![]-1p, p => p");
    assert!(decide_bnnc(&s, &Budget::for_sequent(&s)).is_err());
}

#[test]
fn contraction_depends_on_system() {
    let s = seq("!p => p*p");
    let b = Budget::for_sequent(&s);
    let r = search(&s, &System::L1Bang, &b);
    let d = r.derivation().expect("derivable with plain contraction");
    check_derivation(&System::L1Bang, d, false).unwrap();
    // Contr, ProdR, two BangL and two axioms
    assert_eq!(d.size(), 6);
    assert!(d.uses(RuleId::Contr));
    assert!(matches!(search(&s, &System::BL1, &b), ProveResult::Exhausted(_)));
}

#[test]
fn encoding_sequent_is_found() {
    let s = seq("!(1/![]-1(s/(a*b))), ![]-1(s/(a*b)), a, b => s");
    let b = Budget::for_sequent(&s).with_time_limit(Duration::from_secs(60));
    let t = Instant::now();
    let r = search(&s, &System::BL1, &b);
    let d = r.derivation().unwrap_or_else(|| panic!("{r:?} after {:?}", t.elapsed()));
    check_derivation(&System::BL1, d, false).unwrap();
    eprintln!("encoding sequent: {} steps in {:?}", d.size(), t.elapsed());
}

#[test]
fn oracle_examples() {
    let count = |t: &str, n| enumerate_derivations(&seq(t), &System::BL1, n).count();
    assert_eq!(count("p => p", 3), 1);
    assert_eq!(count("=> 1*1", 4), 1);
    assert_eq!(count("1 => 1", 4), 2);
}

#[test]
fn finite_theory_search_refutes() {
    let theory = vec![seq("a, b => s")];
    let sys = System::L1Theory(theory);
    let s = seq("b, a => s");
    assert_eq!(search(&s, &sys, &Budget::for_sequent(&s)), ProveResult::NotDerivable);
    let s = seq("a, b => s");
    assert!(search(&s, &sys, &Budget::for_sequent(&s)).is_derivable());
}
