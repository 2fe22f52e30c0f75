//! Exact-arithmetic engine for one-parameter mirror symmetry computations.
//!
//! The crate is organised bottom-up:
//!
//! - [`exact_series`]: truncated power series, logarithmic series and
//!   Laurent elements over exact rationals.
//! - [`intersection`]: Schubert calculus, Chern classes of symmetric powers,
//!   classical curve counts and lattice polytope polarity.
//! - [`quantum`]: quantum cohomology rings over semigroup and Novikov
//!   coefficient rings, flops and the A-model connection.
//! - [`periods`]: Picard–Fuchs operators of the Dwork family and their
//!   Frobenius solutions.
//! - [`yukawa`]: mirror map, distinguished-basis reduction, Yukawa couplings
//!   and instanton numbers.

pub mod error;
pub mod exact_series;
pub mod intersection;
pub mod matrix;
pub mod periods;
pub mod quantum;
pub mod yukawa;

pub use error::{Error, Result};
pub use exact_series::{ExactRational, LogSeries, PowerSeries, Variable};
