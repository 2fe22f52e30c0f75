//! B-model periods of the one-parameter Dwork mirror family.
//!
//! The coordinate is `z` with the conifold at `z = N^{-N}`; the holomorphic
//! period is `sum_m (Nm)!/(m!)^N z^m`. Solutions at the maximally unipotent
//! point come from the Frobenius method in a nilpotent deformation ring.

mod frobenius;
mod indicial;
mod monodromy;
mod operator;

pub use frobenius::{annihilation_residuals, frobenius_basis, normalized_solution, verify_basis, FrobeniusBasis};
pub use indicial::{conifold_point, indicial_exponents, rational_roots, IndicialData, Location};
pub use monodromy::{formal_monodromy, is_invariant, MonodromyReport};
pub use operator::{holomorphic_period, pf_operator, ThetaOperator};
