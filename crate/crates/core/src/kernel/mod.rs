//! Proof kernel: systems, rule instances, backward instantiation and
//! derivation checking.

mod applicable;
pub mod build;
mod check;
mod derivation;
mod instantiate;
mod normalize;
pub mod perm;
mod rule;
mod system;

pub use applicable::{all_perm_maps, applicable_instances, item_count};
pub use check::{check_derivation, cut_normalized, CheckError, CheckFault};
pub use derivation::Derivation;
pub use instantiate::{instantiate_backward, KernelError};
pub use normalize::normalize_perms;
pub use rule::{RuleId, RuleInstance};
pub use system::System;
