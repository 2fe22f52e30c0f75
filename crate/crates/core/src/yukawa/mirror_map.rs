use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact_series::{ExactRational, LogSeries, PowerSeries, Variable};
use crate::periods::{normalized_solution, FrobeniusBasis};

/// Canonical coordinate `q = exp(e_1/e_0)` and its inverse `z(q)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MirrorMap {
    /// `q` as a series in `z`.
    pub q_of_z: PowerSeries,
    /// `z` as a series in `q`.
    pub z_of_q: PowerSeries,
}

impl MirrorMap {
    pub fn order(&self) -> usize {
        self.q_of_z.order()
    }

    /// Pulls a `z`-chart series back to the `q` chart.
    pub fn to_q(&self, f: &PowerSeries) -> Result<PowerSeries> {
        if f.var() != Variable::Z {
            return Err(Error::VariableMismatch(Variable::Z, f.var()));
        }
        f.compose(&self.z_of_q)
    }
}

/// The flat coordinate `t = e_1/e_0 = log z + h(z)/e_0(z)`.
pub fn flat_coordinate(basis: &FrobeniusBasis) -> Result<LogSeries> {
    normalized_solution(basis, 1)
}

/// Mirror map through `order` (at most the basis order).
pub fn mirror_map(basis: &FrobeniusBasis, order: usize) -> Result<MirrorMap> {
    let e0 = basis.holomorphic();
    if !e0.coeff(0).is_one() {
        return Err(Error::Precondition("e_0 must have constant term 1".into()));
    }
    let t = flat_coordinate(basis)?;
    if t.max_log_degree() != 1 || !t.log_coefficient(1).sub(&PowerSeries::one(Variable::Z, t.order()))?.is_zero() {
        return Err(Error::Invariant("e_1/e_0 is not log z plus a single-valued series".into()));
    }
    let single_valued = t.log_coefficient(0).truncate(order)?;
    debug_assert!(single_valued.coeff(0).is_zero());
    // q = z exp(s(z)); the exp factor is needed only through order - 1.
    let factor = if order == 0 {
        PowerSeries::one(Variable::Z, 0)
    } else {
        single_valued.truncate(order - 1)?.exp()?
    };
    let mut coeffs = vec![ExactRational::zero()];
    coeffs.extend(factor.into_coeffs());
    let q_of_z = PowerSeries::new(Variable::Z, coeffs);
    let z_of_q = q_of_z.revert(Variable::Q)?;
    Ok(MirrorMap { q_of_z, z_of_q })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_series::int;
    use crate::periods::frobenius_basis;

    #[test]
    fn quintic_mirror_map_prefix() {
        let b = frobenius_basis(5, 6).unwrap();
        let m = mirror_map(&b, 6).unwrap();
        assert_eq!(m.q_of_z.coeff(0), &int(0));
        assert_eq!(m.q_of_z.coeff(1), &int(1));
        assert_eq!(m.q_of_z.coeff(2), &int(770));
        assert_eq!(m.z_of_q.coeff(2), &int(-770));
    }

    #[test]
    fn mirror_map_roundtrip() {
        let b = frobenius_basis(6, 7).unwrap();
        let m = mirror_map(&b, 7).unwrap();
        assert_eq!(m.q_of_z.compose(&m.z_of_q).unwrap(), PowerSeries::identity(Variable::Q, 7));
        assert_eq!(m.z_of_q.compose(&m.q_of_z).unwrap(), PowerSeries::identity(Variable::Z, 7));
        // the independent reversion oracle: revert the q-series back to z(q)^{-1}
        assert_eq!(m.z_of_q.revert(Variable::Z).unwrap(), m.q_of_z);
    }
}
