//! Arithmetic kernel: exact rationals, truncated power series, logarithmic
//! series, nilpotent deformation rings and Laurent elements.
//!
//! Truncation is part of every value. Binary operations return the smaller
//! of the two operand orders; nothing is silently extended.

mod lambert;
mod laurent;
mod log_series;
mod nilpotent;
mod rational;
mod series;

pub use lambert::{lambert_expand, lambert_invert, lambert_synthesize, LambertInversion};
pub use laurent::{LaurentElement, LaurentFraction};
pub use log_series::LogSeries;
pub use nilpotent::NilpotentPoly;
pub use rational::{format_rational, int, parse_rational, rat, ExactRational};
pub use series::{PowerSeries, Variable};
