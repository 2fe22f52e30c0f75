//! Quantum cohomology rings over semigroup and Novikov coefficient rings.
//!
//! Gromov–Witten invariants are inputs, validated against the dimension
//! rule; products, correlators, flops and the A-model connection are
//! computed from them exactly.

mod coeff;
mod connection;
mod examples;
mod flop;
mod ring;
mod table;

pub use coeff::{Coefficient, CoefficientRingPolicy, CurveClass};
pub use connection::{avhs_connection, check_flatness, Connection, FlatnessReport};
pub use examples::{cpn_ring, cy3_correlation, cy3_ring, cy_ring};
pub use flop::{check_flop_invariance, flop_identity_holds, flop_transform, synthetic_flop_model, Cy3Model};
pub use ring::{check_associativity, correlation, quantum_product, DefectReport, QuantumElement, QuantumRing};
pub use table::{GWClass, GWTable};
