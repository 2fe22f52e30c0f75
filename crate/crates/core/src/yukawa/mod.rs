//! Mirror map, distinguished three-point functions and instanton numbers of
//! the one-parameter family of degree-`(n+2)` Calabi–Yau hypersurfaces.

mod closed_form;
mod instantons;
mod mirror_map;
mod reduction;

pub use closed_form::{quintic_yukawa_z, yukawa_closed_form_check, yukawa_from_operator, ClosedFormCheck};
pub use instantons::{
    degree_power, extract_instantons, require_integral, resynthesize, InstantonEntry, InstantonTable,
};
pub use mirror_map::{flat_coordinate, mirror_map, MirrorMap};
pub use reduction::{distinguished_reduction, normalization, npoint_function, secondary_coupling, CouplingSet};

use crate::error::{Error, Result};
use crate::periods::frobenius_basis;

/// Default truncation order of the `q` expansions for dimension `n`.
pub fn default_order(dimension: usize) -> usize {
    match dimension {
        3 => 12,
        4 => 8,
        _ => 6,
    }
}

/// Runs the full pipeline for dimension `n`: Frobenius basis, mirror map,
/// reduction, and (for `n = 6`) the secondary coupling.
pub fn compute_couplings(dimension: usize, order: usize) -> Result<CouplingSet> {
    if dimension < 1 {
        return Err(Error::Precondition("dimension must be positive".into()));
    }
    let basis = frobenius_basis(dimension as u32 + 2, order)?;
    let map = mirror_map(&basis, order)?;
    let set = distinguished_reduction(&basis, &map, order)?;
    set.check_invariants()?;
    if dimension == 6 {
        let y22 = secondary_coupling(&set)?;
        return Ok(set.with_secondary(y22));
    }
    Ok(set)
}
