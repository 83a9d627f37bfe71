use std::path::Path;
use std::time::Duration;

use serde_json::json;
use sublam::cut::eliminate_cuts;
use sublam::kernel::{check_derivation, Derivation, System};
use sublam::lexicon::{parse_sentence, Lexicon, ParseOptions, Verdict};
use sublam::prover::{prove as run_prover, Budget, ProveResult, Route};
use sublam::syntax::{bfp_sequent, check_bnnc, occurrence, parse_formula, parse_sequent, Sequent};
use sublam::thue::{build_bracketed_derivation, derives, encode as encode_grammar, Derivability, Grammar};

use crate::{BudgetArgs, SystemArgs, EXIT_EXHAUSTED, EXIT_NO};

type Outcome = Result<u8, String>;

fn read(path: &Path) -> Result<String, String> {
    std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn sequent(text: &str) -> Result<Sequent, String> {
    parse_sequent(text).map_err(|e| e.to_string())
}

fn system(args: &SystemArgs) -> Result<System, String> {
    let sys = match args.system.as_str() {
        "bl1" => System::BL1,
        "l1bang" => System::L1Bang,
        "l1bangw" => System::L1BangW,
        "theory" => {
            let path = args
                .theory_file
                .as_ref()
                .ok_or("--system theory needs --theory-file")?;
            let axioms = read(path)?
                .lines()
                .map(|l| l.split('#').next().unwrap_or("").trim())
                .filter(|l| !l.is_empty())
                .map(sequent)
                .collect::<Result<Vec<_>, _>>()?;
            System::L1Theory(axioms)
        }
        other => return Err(format!("unknown system {other}")),
    };
    sys.validate().map_err(|e| e.to_string())?;
    Ok(sys)
}

fn budget(s: &Sequent, args: &BudgetArgs) -> Budget {
    let mut b = Budget::for_sequent(s);
    if let Some(n) = args.budget {
        b.max_rule_apps = n;
    }
    if let Some(n) = args.max_items {
        b.max_antecedent_items = n;
    }
    if let Some(t) = args.time_limit {
        b = b.with_time_limit(Duration::from_secs_f64(t));
    }
    b
}

fn read_derivation(path: &Path) -> Result<Derivation, String> {
    let text = read(path)?;
    if text.trim_start().starts_with('{') {
        let v: serde_json::Value = serde_json::from_str(&text).map_err(|e| e.to_string())?;
        Derivation::from_json(&v)
    } else {
        Derivation::parse_rendered(&text)
    }
}

fn print_derivation(d: &Derivation, json: bool) {
    if json {
        println!("{}", d.to_json());
    } else {
        print!("{}", d.render());
    }
}

pub fn prove(text: &str, sys_args: &SystemArgs, b_args: &BudgetArgs, json: bool) -> Outcome {
    let s = sequent(text)?;
    let sys = system(sys_args)?;
    let (route, r) = run_prover(&s, &sys, &budget(&s, b_args));
    let route = match route {
        Route::Decision => "bnnc decision",
        Route::Search => "bounded search",
    };
    if json {
        let mut out = json!({ "route": route, "system": sys.name(), "verdict": r.verdict() });
        match &r {
            ProveResult::Derivable(d) => out["derivation"] = d.to_json(),
            ProveResult::Exhausted(why) => out["reason"] = json!(why),
            ProveResult::NotDerivable => {}
        }
        println!("{out}");
    } else {
        println!("{}: {} ({route}, {sys})", s, r.verdict());
        match &r {
            ProveResult::Derivable(d) => print!("{}", d.render()),
            ProveResult::Exhausted(why) => println!("{why}"),
            ProveResult::NotDerivable => {}
        }
    }
    Ok(match r {
        ProveResult::Derivable(_) => 0,
        ProveResult::NotDerivable => EXIT_NO,
        ProveResult::Exhausted(_) => EXIT_EXHAUSTED,
    })
}

pub fn parse(
    lexicon: &Path,
    sentence: &str,
    target: Option<&str>,
    max_assignments: usize,
    b_args: &BudgetArgs,
    json: bool,
) -> Outcome {
    let lex = Lexicon::parse(&read(lexicon)?).map_err(|e| e.to_string())?;
    let opts = ParseOptions {
        target: target
            .map(|t| parse_formula(t).map_err(|e| e.to_string()))
            .transpose()?,
        max_assignments,
        time_limit: b_args.time_limit.map(Duration::from_secs_f64),
    };
    let j = parse_sentence(&lex, sentence, &opts).map_err(|e| e.to_string())?;
    let (verdict, code) = match &j.verdict {
        Verdict::Grammatical(_) => ("grammatical", 0),
        Verdict::Ungrammatical => ("ungrammatical", EXIT_NO),
        Verdict::Unknown(_) => ("unknown", EXIT_EXHAUSTED),
    };
    if json {
        let mut out = json!({
            "tokens": j.tokens,
            "verdict": verdict,
            "tried": j.tried,
            "sequent": j.sequent.as_ref().map(|s| s.to_string()),
        });
        match &j.verdict {
            Verdict::Grammatical(d) => out["derivation"] = d.to_json(),
            Verdict::Unknown(why) => out["reason"] = json!(why),
            Verdict::Ungrammatical => {}
        }
        println!("{out}");
    } else {
        let noun = if j.tried == 1 { "sequent" } else { "sequents" };
        println!("{verdict} ({} {noun} tried)", j.tried);
        match &j.verdict {
            Verdict::Grammatical(d) => print!("{}", d.render()),
            Verdict::Unknown(why) => println!("{why}"),
            Verdict::Ungrammatical => {}
        }
    }
    Ok(code)
}

pub fn bnnc(text: &str) -> Outcome {
    let s = sequent(text)?;
    match check_bnnc(&s) {
        Ok(()) => {
            println!("bnnc: yes");
            Ok(0)
        }
        Err(vs) => {
            println!("bnnc: no");
            for v in vs {
                let show = |p| occurrence(&s, p).map_or("?".to_string(), |f| f.to_string());
                println!("  {} inside {}", show(&v.offending), show(&v.bang));
            }
            Ok(EXIT_NO)
        }
    }
}

pub fn bfp(text: &str) -> Outcome {
    println!("{}", bfp_sequent(&sequent(text)?));
    Ok(0)
}

fn grammar(path: &Path) -> Result<Grammar, String> {
    Grammar::parse(&read(path)?).map_err(|e| e.to_string())
}

pub fn encode(path: &Path, json: bool) -> Outcome {
    let e = encode_grammar(&grammar(path)?);
    let b: Vec<String> = e.b_list.iter().map(|f| f.to_string()).collect();
    let theory: Vec<String> = e.theory.iter().map(|s| s.to_string()).collect();
    if json {
        println!(
            "{}",
            json!({
                "b": b,
                "gamma": e.gamma.to_string(),
                "phi": e.phi.to_string(),
                "gamma_tilde": e.gamma_tilde.to_string(),
                "phi_tilde": e.phi_tilde.to_string(),
                "theory": theory,
            })
        );
    } else {
        println!("B: {}", b.join(", "));
        println!("Gamma: {}", e.gamma);
        println!("Phi: {}", e.phi);
        println!("GammaTilde: {}", e.gamma_tilde);
        println!("PhiTilde: {}", e.phi_tilde);
        for t in theory {
            println!("theory: {t}");
        }
    }
    Ok(0)
}

pub fn rewrite(path: &Path, word: &str, max_len: usize, max_steps: usize, derivation: bool, json: bool) -> Outcome {
    let g = grammar(path)?;
    let w = g.parse_word(word).map_err(|e| e.to_string())?;
    let r = derives(&g, &w, max_len, max_steps).map_err(|e| e.to_string())?;
    match r {
        Derivability::Yes(t) => {
            let words: Vec<String> = t
                .replay(&g)
                .map_err(|e| e.to_string())?
                .iter()
                .map(|w| w.join(" "))
                .collect();
            let d = if derivation {
                Some(build_bracketed_derivation(&g, &t).map_err(|e| e.to_string())?)
            } else {
                None
            };
            if json {
                let steps: Vec<_> = t
                    .steps
                    .iter()
                    .map(|s| json!({"production": s.production, "position": s.position}))
                    .collect();
                let mut out = json!({"verdict": "yes", "steps": steps, "words": words});
                if let Some(d) = &d {
                    out["derivation"] = d.to_json();
                }
                println!("{out}");
            } else {
                println!("yes: {}", words.join(" => "));
                if let Some(d) = &d {
                    print!("{}", d.render());
                }
            }
            Ok(0)
        }
        Derivability::No { max_len } => {
            println!("no (words up to length {max_len})");
            Ok(EXIT_NO)
        }
        Derivability::Exhausted { max_len, max_steps } => {
            println!("exhausted (length cap {max_len}, {max_steps} expansions)");
            Ok(EXIT_EXHAUSTED)
        }
    }
}

pub fn check(path: &Path, sys_args: &SystemArgs, allow_cut: bool) -> Outcome {
    let d = read_derivation(path)?;
    let sys = system(sys_args)?;
    match check_derivation(&sys, &d, allow_cut) {
        Ok(()) => {
            println!("ok: {} ({} rule applications, {sys})", d.conclusion, d.size());
            Ok(0)
        }
        Err(e) => {
            println!("invalid: {e}");
            Ok(EXIT_NO)
        }
    }
}

pub fn elim_cut(path: &Path, sys_args: &SystemArgs, json: bool) -> Outcome {
    let d = read_derivation(path)?;
    let sys = system(sys_args)?;
    match eliminate_cuts(&d, &sys) {
        Ok(out) => {
            print_derivation(&out, json);
            Ok(0)
        }
        Err(sublam::cut::CutError::MalformedInput(e)) => {
            println!("invalid: {e}");
            Ok(EXIT_NO)
        }
        Err(e) => Err(e.to_string()),
    }
}
