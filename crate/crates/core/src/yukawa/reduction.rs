use num_traits::Zero;

use super::mirror_map::{flat_coordinate, MirrorMap};
use crate::error::{Error, Result};
use crate::exact_series::{int, ExactRational, LogSeries, PowerSeries};
use crate::periods::{normalized_solution, FrobeniusBasis};

/// Three-point functions `Y^1_j(q)`, `j = 0..n-1`, of an `n`-dimensional
/// one-parameter family, plus the secondary coupling `Y^2_2` when defined.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CouplingSet {
    dimension: usize,
    primary: Vec<PowerSeries>,
    secondary: Option<PowerSeries>,
}

impl CouplingSet {
    pub fn new(dimension: usize, primary: Vec<PowerSeries>) -> Result<Self> {
        if primary.len() != dimension {
            return Err(Error::Precondition(format!(
                "dimension {dimension} needs {dimension} couplings, got {}",
                primary.len()
            )));
        }
        Ok(CouplingSet { dimension, primary, secondary: None })
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    /// `Y^1_j`.
    pub fn y1(&self, j: usize) -> &PowerSeries {
        &self.primary[j]
    }

    pub fn primary(&self) -> &[PowerSeries] {
        &self.primary
    }

    /// `Y^2_2`, computed by [`secondary_coupling`] and attached with
    /// [`with_secondary`](Self::with_secondary).
    pub fn secondary(&self) -> Option<&PowerSeries> {
        self.secondary.as_ref()
    }

    pub fn with_secondary(mut self, y22: PowerSeries) -> Self {
        self.secondary = Some(y22);
        self
    }

    pub fn order(&self) -> usize {
        self.primary.iter().map(PowerSeries::order).min().unwrap_or(0)
    }

    /// `Y^1_0 = n + 2` exactly, every constant term equals `n + 2`, and
    /// `Y^1_j = Y^1_{n-1-j}`.
    pub fn check_invariants(&self) -> Result<()> {
        let n = self.dimension;
        let top = int(n as i64 + 2);
        let y0 = &self.primary[0];
        if y0.coeffs().iter().enumerate().any(|(k, c)| if k == 0 { c != &top } else { !c.is_zero() }) {
            return Err(Error::Invariant(format!("Y^1_0 is not the constant {top}")));
        }
        for (j, y) in self.primary.iter().enumerate() {
            if y.coeff(0) != &top {
                return Err(Error::Invariant(format!("constant term of Y^1_{j} is not {top}")));
            }
            if y != &self.primary[n - 1 - j] {
                return Err(Error::Invariant(format!("Y^1_{j} != Y^1_{}", n - 1 - j)));
            }
        }
        Ok(())
    }
}

/// Row reduction of the period matrix to the distinguished basis.
///
/// Start from `b_0 = (n+2)(1, e_1/e_0, ..., e_n/e_0)` and the `q`-chart
/// derivative `D = (theta t)^{-1} theta` computed in the `z` chart. Then
/// `D b_j` vanishes in entries `0..=j` and its entry `j+1` is the
/// single-valued coupling `y_j`; the next row is `(n+2) D b_j / y_j`.
/// Finally `Y^1_j(q) = y_j(z(q))`.
pub fn distinguished_reduction(basis: &FrobeniusBasis, map: &MirrorMap, order: usize) -> Result<CouplingSet> {
    let n = basis.dimension();
    let scale = int(n as i64 + 2);
    let t = flat_coordinate(basis)?;
    let dt = t
        .theta()
        .into_series()
        .map_err(|_| Error::Invariant("theta t is not single-valued".into()))?
        .truncate(order)?;
    let dt_inv = dt.inverse()?;
    let derive = |v: &LogSeries| -> Result<LogSeries> { v.theta().mul_series(&dt_inv) };

    let mut row: Vec<LogSeries> = (0..=n)
        .map(|j| Ok(trunc(&normalized_solution(basis, j)?, order)?.scale(&scale)))
        .collect::<Result<_>>()?;
    let mut couplings = Vec::with_capacity(n);
    for j in 0..n {
        let r: Vec<LogSeries> = row.iter().map(|v| derive(v)).collect::<Result<_>>()?;
        if let Some(k) = (0..=j).find(|&k| !r[k].is_zero()) {
            return Err(Error::Invariant(format!("entry {k} of D b_{j} does not vanish")));
        }
        let y = r[j + 1]
            .clone()
            .into_series()
            .map_err(|_| Error::Invariant(format!("log terms do not cancel in y_{j}")))?;
        let factor = y.inverse()?.scale(&scale);
        row = r.iter().map(|v| v.mul_series(&factor)).collect::<Result<_>>()?;
        couplings.push(map.to_q(&y)?);
    }
    CouplingSet::new(n, couplings)
}

fn trunc(s: &LogSeries, order: usize) -> Result<LogSeries> {
    LogSeries::new(s.terms().iter().map(|t| t.truncate(order)).collect::<Result<Vec<_>>>()?)
}

/// `prod_j Y^1_j / (n+2)^{n-1}`, the `n`-point function.
pub fn npoint_function(couplings: &CouplingSet) -> Result<PowerSeries> {
    let n = couplings.dimension();
    let mut acc = couplings.y1(0).clone();
    for j in 1..n {
        acc = acc.mul(couplings.y1(j))?;
    }
    let denom = int(n as i64 + 2).pow(n as i32 - 1);
    Ok(acc.scale(&denom.recip()))
}

/// `Y^2_2 = (Y^1_2)^2 / Y^1_1`, defined for `n = 6`.
pub fn secondary_coupling(couplings: &CouplingSet) -> Result<PowerSeries> {
    let n = couplings.dimension();
    if n != 6 {
        return Err(Error::Precondition(format!("Y^2_2 is not defined in dimension {n} (indices out of range)")));
    }
    couplings.y1(2).mul(couplings.y1(2))?.div(couplings.y1(1))
}

/// `n + 2` as an exact rational.
pub fn normalization(dimension: usize) -> ExactRational {
    int(dimension as i64 + 2)
}
