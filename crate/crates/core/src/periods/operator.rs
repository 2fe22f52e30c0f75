use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact_series::{format_rational, int, parse_rational, ExactRational, LogSeries, PowerSeries};

/// Differential operator `sum_k p_k(z) theta^k` with `theta = z d/dz` and
/// polynomial coefficients `p_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThetaOperator {
    /// `coeffs[k][i]` is the coefficient of `z^i theta^k`.
    coeffs: Vec<Vec<ExactRational>>,
}

impl ThetaOperator {
    pub fn new(coeffs: Vec<Vec<ExactRational>>) -> Result<Self> {
        let mut coeffs: Vec<Vec<ExactRational>> = coeffs.into_iter().map(trim_poly).collect();
        while coeffs.len() > 1 && coeffs.last().is_some_and(Vec::is_empty) {
            coeffs.pop();
        }
        if coeffs.last().map_or(true, Vec::is_empty) {
            return Err(Error::Precondition("operator has no nonzero coefficient".into()));
        }
        Ok(ThetaOperator { coeffs })
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Polynomial coefficient of `theta^k` as a list in ascending powers of `z`.
    pub fn coefficient(&self, k: usize) -> &[ExactRational] {
        self.coeffs.get(k).map_or(&[], Vec::as_slice)
    }

    /// Largest power of `z` occurring in any coefficient.
    pub fn z_degree(&self) -> usize {
        self.coeffs.iter().map(|p| p.len().saturating_sub(1)).max().unwrap_or(0)
    }

    /// Regroups the operator as `sum_j z^j P_j(theta)`; entry `j` lists the
    /// coefficients of `P_j` in ascending powers of `theta`.
    pub fn theta_polynomials(&self) -> Vec<Vec<ExactRational>> {
        let deg = self.z_degree();
        (0..=deg)
            .map(|j| {
                trim_poly(
                    self.coeffs
                        .iter()
                        .map(|p| p.get(j).cloned().unwrap_or_else(ExactRational::zero))
                        .collect(),
                )
            })
            .collect()
    }

    pub fn apply(&self, f: &PowerSeries) -> PowerSeries {
        let var = f.var();
        let order = f.order();
        let mut out = PowerSeries::zero(var, order);
        let mut th = f.clone();
        for p in &self.coeffs {
            let poly = PowerSeries::new(var, pad(p, order));
            out = out.add(&poly.mul(&th).expect("same chart")).expect("same chart");
            th = th.theta();
        }
        out
    }

    pub fn apply_log(&self, f: &LogSeries) -> Result<LogSeries> {
        let var = f.var();
        let order = f.order();
        let mut out = LogSeries::from_series(PowerSeries::zero(var, order));
        let mut th = f.clone();
        for p in &self.coeffs {
            let poly = PowerSeries::new(var, pad(p, order));
            out = out.add(&th.mul_series(&poly)?)?;
            th = th.theta();
        }
        Ok(out)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let repr = OperatorRepr {
            order: self.order(),
            coefficients: self.coeffs.iter().map(|p| p.iter().map(format_rational).collect()).collect(),
        };
        serde_json::to_value(repr).expect("operator serialises")
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let repr: OperatorRepr =
            serde_json::from_value(v.clone()).map_err(|e| Error::Malformed(format!("operator JSON: {e}")))?;
        let coeffs = repr
            .coefficients
            .iter()
            .map(|p| p.iter().map(|c| parse_rational(c)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        let op = Self::new(coeffs)?;
        if op.order() != repr.order {
            return Err(Error::Malformed(format!("declared order {} but found {}", repr.order, op.order())));
        }
        Ok(op)
    }
}

#[derive(Serialize, Deserialize)]
struct OperatorRepr {
    order: usize,
    coefficients: Vec<Vec<String>>,
}

pub(crate) fn trim_poly(mut p: Vec<ExactRational>) -> Vec<ExactRational> {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

fn pad(p: &[ExactRational], order: usize) -> Vec<ExactRational> {
    let mut v: Vec<ExactRational> = p.iter().take(order + 1).cloned().collect();
    v.resize(order + 1, ExactRational::zero());
    v
}

/// Multiplies polynomials given by ascending coefficient lists.
pub(crate) fn poly_mul(a: &[ExactRational], b: &[ExactRational]) -> Vec<ExactRational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![ExactRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn check_degree(degree: u32) -> Result<()> {
    if degree < 3 {
        return Err(Error::Precondition(format!(
            "degree N = {degree} does not define a Calabi-Yau hypersurface family (need N >= 3)"
        )));
    }
    Ok(())
}

/// Picard–Fuchs operator of the one-parameter mirror family of degree-`N`
/// hypersurfaces: `theta^{N-1} - N z prod_{k=1}^{N-1} (N theta + k)`.
pub fn pf_operator(degree: u32) -> Result<ThetaOperator> {
    check_degree(degree)?;
    let n = degree as i64;
    let mut prod = vec![ExactRational::one()];
    for k in 1..n {
        prod = poly_mul(&prod, &[int(k), int(n)]);
    }
    let order = (degree - 1) as usize;
    let mut coeffs = vec![vec![ExactRational::zero(); 2]; order + 1];
    coeffs[order][0] = ExactRational::one();
    for (k, c) in prod.iter().enumerate() {
        coeffs[k][1] = -int(n) * c;
    }
    ThetaOperator::new(coeffs)
}

/// Fundamental period `sum_m (N m)! / (m!)^N z^m` through `z^order`.
pub fn holomorphic_period(degree: u32, order: usize) -> Result<PowerSeries> {
    check_degree(degree)?;
    let n = BigInt::from(degree);
    let mut coeffs = Vec::with_capacity(order + 1);
    let mut a = BigInt::one();
    coeffs.push(ExactRational::from_integer(a.clone()));
    for m in 1..=order {
        let m_big = BigInt::from(m);
        let base = &n * BigInt::from(m - 1);
        let mut num = BigInt::one();
        for k in 1..=degree {
            num *= &base + BigInt::from(k);
        }
        let den = num_traits::pow(m_big, degree as usize);
        a = a * num / den;
        coeffs.push(ExactRational::from_integer(a.clone()));
    }
    Ok(PowerSeries::new(crate::exact_series::Variable::Z, coeffs))
}
