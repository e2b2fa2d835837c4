//! Exact symbolic computation in `U_q(sl2-hat)`, loop (Drinfeld) presentation.
//!
//! * [`coeff`]: rational functions in `q` and `u = γ^{1/2}`.
//! * [`algebra`]: words in `x±_k`, `a_n` and `K`, with normal ordering.
//! * [`drinfeld`]: the Heisenberg-type family and checks of its brackets.

pub mod algebra;
pub mod coeff;
pub mod drinfeld;

pub use algebra::{
    commutator, deformed_commutator, el_mul, equals, is_central, normal_form, omega, project_x_free, Element,
    Generator, Monomial, RelationMode,
};
pub use coeff::{qint, LaurentPoly, RatFunc};
pub use drinfeld::{
    central_c, family_e, phi, psi, Claim, ClaimParams, Convention, FamilyParams, Sign, Verdict, VerdictReport,
};
