//! The Heisenberg-type family in the loop presentation: Cartan currents,
//! the family elements, the claimed central values, the intermediate
//! expansions of the bracket computation and the claim checks.

mod currents;
mod expansion;
mod family;
mod verify;

pub use currents::{partitions, phi, psi};
pub use expansion::{
    expand_general_commutator, expand_specialized_commutator, general_display_fixture, BracketParams, GeneralExpansion,
};
pub use family::{central_c, family_e, family_e_neg, family_e_pos, FamilyParams, Sign};
pub use verify::{
    check_index_reflection_identity, check_omega_family_identity, verify_claim, Claim, ClaimParams, Convention,
    Verdict, VerdictReport,
};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DrinfeldError {
    #[error("index n must be nonnegative, got {0}")]
    NegativeIndex(i64),
    #[error("{claim}: parameters outside the claim's regime: {reason}")]
    Regime { claim: &'static str, reason: String },
}
