//! Semi-Thue grammars, bounded rewriting, their encoding into sequents and
//! the derivation translations between the encodings.

mod build;
mod encode;
mod grammar;
mod rewrite;
mod translate;

use thiserror::Error;

pub use build::{build_bracketed_derivation, inst_macro};
pub use encode::{encode, goal_sequent, EncodingBundle, Variant};
pub use grammar::{Grammar, GrammarError, Production, Word};
pub use rewrite::{apply_at, derives, Derivability, ReplayError, RewriteStep, RewriteTrace};
pub use translate::{translate_bfp_derivation, translate_to_weak};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BridgeError {
    #[error(transparent)]
    Grammar(GrammarError),
    #[error("invalid trace: {0}")]
    InvalidTrace(String),
    #[error("shape mismatch: {0}")]
    Shape(String),
}
