use num_traits::{One, Zero};

use super::rational::{int, ExactRational};
use crate::error::{Error, Result};

/// Element of `Q[rho] / (rho^depth)`.
///
/// Used as the deformation parameter of the Frobenius method: the exponent
/// shift `rho` is nilpotent of the order of the local system's unipotency.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NilpotentPoly {
    coeffs: Vec<ExactRational>,
}

impl NilpotentPoly {
    pub fn zero(depth: usize) -> Self {
        assert!(depth > 0, "nilpotency depth must be positive");
        NilpotentPoly { coeffs: vec![ExactRational::zero(); depth] }
    }

    pub fn constant(depth: usize, c: ExactRational) -> Self {
        let mut p = Self::zero(depth);
        p.coeffs[0] = c;
        p
    }

    /// `a + b * rho`.
    pub fn linear(depth: usize, a: ExactRational, b: ExactRational) -> Self {
        let mut p = Self::constant(depth, a);
        if depth > 1 {
            p.coeffs[1] = b;
        }
        p
    }

    pub fn from_coeffs(depth: usize, coeffs: &[ExactRational]) -> Self {
        let mut p = Self::zero(depth);
        for (slot, c) in p.coeffs.iter_mut().zip(coeffs) {
            *slot = c.clone();
        }
        p
    }

    pub fn depth(&self) -> usize {
        self.coeffs.len()
    }

    /// Coefficient of `rho^k`.
    pub fn coeff(&self, k: usize) -> &ExactRational {
        &self.coeffs[k]
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.depth(), other.depth());
        NilpotentPoly { coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect() }
    }

    pub fn scale(&self, c: &ExactRational) -> Self {
        NilpotentPoly { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.depth(), other.depth());
        let m = self.depth();
        let mut out = vec![ExactRational::zero(); m];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(m - i) {
                out[i + j] += a * b;
            }
        }
        NilpotentPoly { coeffs: out }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut r = Self::constant(self.depth(), ExactRational::one());
        for _ in 0..e {
            r = r.mul(self);
        }
        r
    }

    /// Inverse of a unit (nonzero constant term), by the geometric series of
    /// the nilpotent part.
    pub fn inverse(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(Error::NonInvertible);
        }
        let m = self.depth();
        let inv0 = c0.recip();
        let mut out = vec![ExactRational::zero(); m];
        out[0] = inv0.clone();
        for n in 1..m {
            let mut acc = ExactRational::zero();
            for k in 1..=n {
                acc += &self.coeffs[k] * &out[n - k];
            }
            out[n] = -acc * &inv0;
        }
        Ok(NilpotentPoly { coeffs: out })
    }

    /// `(a + rho)` for integer `a`.
    pub fn shifted(depth: usize, a: i64) -> Self {
        Self::linear(depth, int(a), ExactRational::one())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_series::rat;

    #[test]
    fn truncates_at_depth() {
        let rho = NilpotentPoly::linear(3, ExactRational::zero(), ExactRational::one());
        assert_eq!(rho.pow(3), NilpotentPoly::zero(3));
        assert_eq!(rho.pow(2).coeff(2), &ExactRational::one());
    }

    #[test]
    fn inverse_of_one_plus_rho() {
        let p = NilpotentPoly::shifted(4, 1);
        let inv = p.inverse().unwrap();
        assert_eq!(inv.coeffs, vec![int(1), int(-1), int(1), int(-1)]);
        assert_eq!(p.mul(&inv), NilpotentPoly::constant(4, int(1)));
        let half = NilpotentPoly::shifted(2, 2).inverse().unwrap();
        assert_eq!(half.coeffs, vec![rat(1, 2), rat(-1, 4)]);
    }

    #[test]
    fn non_unit_rejected() {
        assert!(NilpotentPoly::shifted(3, 0).inverse().is_err());
    }
}
