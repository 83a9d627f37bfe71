//! Cut-free backward proof search.
//!
//! The search runs over sequents modulo reordering of `!`-formulae inside
//! each bracket node; permutation steps are inserted when a concrete
//! derivation is rebuilt. Invertible rules are applied eagerly.

mod budget;
mod class;
mod engine;
mod moves;
mod oracle;
mod prune;

use thiserror::Error;

use crate::kernel::System;
use crate::syntax::{is_bnnc, Sequent};

pub use budget::{quadratic_bound, Budget, ProveResult};
pub use oracle::{enumerate_derivations, min_derivation_size};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ProverError {
    #[error("sequent violates the bracket non-negative condition; use bounded search")]
    NotBnnc,
}

/// Decide a sequent of the bracket non-negative fragment in BL1.
pub fn decide_bnnc(s: &Sequent, b: &Budget) -> Result<ProveResult, ProverError> {
    if !is_bnnc(s) {
        return Err(ProverError::NotBnnc);
    }
    let b = Budget {
        complete: true,
        ..b.clone()
    };
    Ok(engine::Engine::new(&System::BL1, &b).run(s))
}

/// Bounded search in any system.
pub fn search(s: &Sequent, sys: &System, b: &Budget) -> ProveResult {
    engine::Engine::new(sys, b).run(s)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Route {
    /// The BNNC decision procedure: `NotDerivable` is a definite answer.
    Decision,
    /// Bounded search.
    Search,
}

/// `decide_bnnc` for BNNC sequents in BL1, `search` otherwise.
pub fn prove(s: &Sequent, sys: &System, b: &Budget) -> (Route, ProveResult) {
    if *sys == System::BL1 && is_bnnc(s) {
        (Route::Decision, decide_bnnc(s, b).expect("checked BNNC"))
    } else {
        (Route::Search, search(s, sys, b))
    }
}
