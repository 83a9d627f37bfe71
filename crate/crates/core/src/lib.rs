//! Lambek calculus with unit, brackets and a bracket-aware subexponential.
//!
//! * [`syntax`]: formulae, configurations, parsing, polarity, BNNC, BFP.
//! * [`kernel`]: rule catalogue, backward instantiation, derivation checking.
//! * [`prover`]: cut-free proof search and the exhaustive oracle.
//! * [`cut`]: cut composition and elimination.
//! * [`thue`]: semi-Thue grammars and their encoding into sequents.
//! * [`lexicon`]: categorial-grammar sentence parsing.

pub mod cut;
pub mod kernel;
pub mod lexicon;
pub mod prover;
pub mod syntax;
pub mod thue;
