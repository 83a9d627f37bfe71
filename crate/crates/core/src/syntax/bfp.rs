//! Bracket-forgetting projection: erase brackets and the two bracket modalities.

use super::config::{Config, Sequent};
use super::formula::Formula;

pub fn bfp_formula(f: &Formula) -> Formula {
    match f {
        Formula::Atom(_) | Formula::Unit => f.clone(),
        Formula::Under(a, b) => Formula::under(bfp_formula(a), bfp_formula(b)),
        Formula::Over(a, b) => Formula::over(bfp_formula(a), bfp_formula(b)),
        Formula::Prod(a, b) => Formula::prod(bfp_formula(a), bfp_formula(b)),
        Formula::Diamond(a) | Formula::BoxInv(a) => bfp_formula(a),
        Formula::Bang(a) => Formula::bang(bfp_formula(a)),
    }
}

/// Flat list of projected formulae.
pub fn bfp_config(c: &Config) -> Config {
    Config::leaves(c.flat_formulas().into_iter().map(bfp_formula))
}

pub fn bfp_sequent(s: &Sequent) -> Sequent {
    Sequent::new(bfp_config(&s.ant), bfp_formula(&s.succ))
}

pub fn is_bracket_free(s: &Sequent) -> bool {
    s.ant.bracket_count() == 0 && s.formulas().iter().all(|f| !f.has_bracket_modality())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::parse::{parse_formula, parse_sequent};

    #[test]
    fn projection_examples() {
        assert_eq!(
            bfp_formula(&parse_formula("![]-1B").unwrap()),
            parse_formula("!B").unwrap()
        );
        assert_eq!(
            bfp_sequent(&parse_sequent("[a, [b]] => c").unwrap()),
            parse_sequent("a, b => c").unwrap()
        );
        assert_eq!(
            bfp_sequent(&parse_sequent("[p], <>q => q").unwrap()).to_string(),
            "p, q => q"
        );
        let plain = parse_sequent("p, !q => p*q").unwrap();
        assert_eq!(bfp_sequent(&plain), plain);
        let flat = bfp_config(&parse_sequent("[[a]], b => c").unwrap().ant);
        assert!(flat.items.iter().all(|it| it.formula().is_some()));
    }
}
