//! Object-language syntax: formulae, bracketed configurations, text format,
//! polarity, the bracket non-negative condition and the bracket-forgetting
//! projection.

mod bfp;
mod config;
mod formula;
mod parse;
mod polarity;

pub use bfp::{bfp_config, bfp_formula, bfp_sequent, is_bracket_free};
pub use config::{Config, Item, Position, Sequent};
pub use formula::Formula;
pub use parse::{parse_config, parse_formula, parse_sequent, SyntaxError};
pub use polarity::{
    check_bnnc, is_bnnc, occurrence, polarity_occurrences, BnncViolation, OccPath, Polarity, Site,
};

/// Sequent size as used by the proof-size budget.
pub fn sequent_size(s: &Sequent) -> usize {
    s.size()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes() {
        assert_eq!(sequent_size(&parse_sequent("p => p").unwrap()), 2);
        assert_eq!(sequent_size(&parse_sequent("=> 1").unwrap()), 1);
        assert_eq!(sequent_size(&parse_sequent("[p], q => p*q").unwrap()), 6);
    }
}
