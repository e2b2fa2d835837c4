//! Words, linear combinations and normal ordering in the loop presentation.

mod element;
mod omega;
mod rewrite;
mod word;

pub use element::{el_mul, project_x_free, Element};
pub use omega::omega;
pub use rewrite::{
    centrality_probes, commutator, cross_commutator, deformed_commutator, equals, heisenberg_central, is_central,
    is_normal, normal_form, normal_form_with, redex_positions, Leftmost, RedexSelector, Reducer, RelationMode,
    Rightmost,
};
pub use word::{Generator, Monomial};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("a_0 is not a generator")]
    ZeroHeisenbergIndex,
}
