use num_traits::Zero;

use super::mirror_map::{flat_coordinate, MirrorMap};
use super::reduction::CouplingSet;
use crate::error::{Error, Result};
use crate::exact_series::{int, ExactRational, PowerSeries, Variable};
use crate::periods::{pf_operator, FrobeniusBasis};

/// Yukawa coupling in the `z` chart for a fourth-order operator
/// `sum_k p_k(z) theta^k`: the solution of `theta Y = -(1/2)(p_3/p_4) Y`
/// with `Y(0) = y0`.
pub fn yukawa_from_operator(p3: &[ExactRational], p4: &[ExactRational], y0: ExactRational, order: usize) -> Result<PowerSeries> {
    let series = |p: &[ExactRational]| PowerSeries::new(Variable::Z, (0..=order).map(|i| p.get(i).cloned().unwrap_or_else(ExactRational::zero)).collect());
    let ratio = series(p3).div(&series(p4))?;
    if !ratio.coeff(0).is_zero() {
        return Err(Error::Precondition("theta^3 coefficient must vanish at z = 0".into()));
    }
    let half = int(1) / int(2);
    let mut y = vec![y0];
    for k in 1..=order {
        let s: ExactRational = (1..=k).map(|i| ratio.coeff(i) * &y[k - i]).sum();
        y.push(-&half * s / int(k as i64));
    }
    Ok(PowerSeries::new(Variable::Z, y))
}

/// The quintic's `z`-chart coupling `5 / (1 - 5^5 z)`.
pub fn quintic_yukawa_z(order: usize) -> Result<PowerSeries> {
    let den = PowerSeries::one(Variable::Z, order).sub(&PowerSeries::monomial(Variable::Z, 1, int(3125), order))?;
    PowerSeries::constant(Variable::Z, int(5), order).div(&den)
}

/// Outcome of comparing the reduced coupling with the closed form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosedFormCheck {
    /// `Y_z / (e_0^2 (theta t)^3)` pulled back to `q`.
    pub closed_form: PowerSeries,
    /// `Y^1_1` from the reduction.
    pub reduced: PowerSeries,
}

impl ClosedFormCheck {
    pub fn agrees(&self) -> bool {
        self.closed_form == self.reduced
    }
}

/// For `n = 3`: the Yukawa coupling obtained from the first-order equation
/// implied by the Picard–Fuchs operator, converted to the `q` chart, must
/// equal `Y^1_1`.
pub fn yukawa_closed_form_check(basis: &FrobeniusBasis, map: &MirrorMap, couplings: &CouplingSet) -> Result<ClosedFormCheck> {
    if basis.dimension() != 3 || couplings.dimension() != 3 {
        return Err(Error::Precondition("the closed-form check applies to n = 3".into()));
    }
    let order = couplings.order().min(map.order()).min(basis.order());
    let l = pf_operator(basis.degree())?;
    let yz = yukawa_from_operator(l.coefficient(3), l.coefficient(4), int(5), order)?;
    if yz != quintic_yukawa_z(order)? {
        return Err(Error::Invariant("Yukawa equation does not give 5/(1 - 5^5 z)".into()));
    }
    let e0 = basis.holomorphic().truncate(order)?;
    let dt = flat_coordinate(basis)?
        .theta()
        .into_series()
        .map_err(|_| Error::Invariant("theta t is not single-valued".into()))?
        .truncate(order)?;
    let denom = e0.mul(&e0)?.mul(&dt.pow(3))?;
    let closed_form = map.to_q(&yz.div(&denom)?)?;
    let reduced = couplings.y1(1).truncate(order)?;
    Ok(ClosedFormCheck { closed_form, reduced })
}
