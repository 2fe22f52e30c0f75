use num_traits::Zero;

use super::coeff::{CoefficientRingPolicy, CurveClass};
use super::ring::QuantumRing;
use super::table::GWTable;
use crate::error::{Error, Result};
use crate::exact_series::{int, ExactRational, PowerSeries, Variable};

/// `QH*(CP^n)` on the basis `1, z, ..., z^n`: the classical product plus
/// the line class `L` with `-K.L = n + 1` and
/// `Phi_L(z^a, z^b, z^c) = 1` exactly when `a + b + c = 2n + 1`.
pub fn cpn_ring(n: usize) -> Result<QuantumRing> {
    if n == 0 {
        return Err(Error::Precondition("need n >= 1".into()));
    }
    let mut table = GWTable::new(n, (0..=n as u32).map(|k| 2 * k).collect(), 1)?;
    let line = CurveClass(vec![1]);
    let mut classical = Vec::new();
    for a in 0..=n {
        for b in a..=n {
            for c in b..=n {
                if a + b + c == n {
                    classical.push(([a, b, c], int(1)));
                }
                if a >= 1 && a + b + c == 2 * n + 1 {
                    table.set(&line, n as i64 + 1, a, b, c, int(1))?;
                }
            }
        }
    }
    QuantumRing::new(table, classical, CoefficientRingPolicy::Polynomial)
}

/// Rank-one Calabi–Yau `n`-fold ring on `1, H, ..., H^n` with
/// `H^n = kappa`. Each entry `((a, b, c), n_d)` with `a + b + c = n` and
/// `a, b, c >= 1` sets `Phi_d(H^a, H^b, H^c) = n_d d^l`, where `l` counts the
/// ones among `a, b, c`; `numbers[d - 1]` is `n_d`. Coefficients live in
/// `Q[[q]]` through `q^order`.
pub fn cy_ring(
    dimension: usize,
    kappa: &ExactRational,
    entries: &[([usize; 3], Vec<ExactRational>)],
    order: usize,
) -> Result<QuantumRing> {
    if kappa.is_zero() {
        return Err(Error::Precondition("H^n must be nonzero".into()));
    }
    let mut table = GWTable::new(dimension, (0..=dimension as u32).map(|k| 2 * k).collect(), 1)?;
    for ([a, b, c], numbers) in entries {
        let l = [a, b, c].iter().filter(|&&&x| x == 1).count() as u32;
        for (i, n) in numbers.iter().enumerate() {
            let d = i as i64 + 1;
            table.set(&CurveClass(vec![d]), 0, *a, *b, *c, n * int(d).pow(l as i32))?;
        }
    }
    let mut classical = Vec::new();
    for a in 0..=dimension {
        for b in a..=dimension - a {
            let c = dimension - a - b;
            if c >= b {
                classical.push(([a, b, c], kappa.clone()));
            }
        }
    }
    QuantumRing::new(table, classical, CoefficientRingPolicy::power_series(order))
}

/// The threefold case: `Phi_d(H, H, H) = n_d d^3`.
pub fn cy3_ring(kappa: &ExactRational, numbers: &[ExactRational], order: usize) -> Result<QuantumRing> {
    cy_ring(3, kappa, &[([1, 1, 1], numbers.to_vec())], order)
}

/// `<D1 D2 D3> = (D1 D2 D3)[M] + sum_d (D1.d)(D2.d)(D3.d) n_d q^d / (1 - q^d)`
/// through `q^order`, for divisors and curve classes in a rank-one lattice.
pub fn cy3_correlation(
    divisors: &[Vec<i64>; 3],
    cup: &ExactRational,
    numbers: &[(CurveClass, ExactRational)],
    order: usize,
) -> Result<PowerSeries> {
    if divisors.iter().any(|d| d.len() != 1) || numbers.iter().any(|(eta, _)| eta.rank() != 1) {
        return Err(Error::Precondition("the series form of the correlator needs a rank-one class lattice".into()));
    }
    let mut coeffs = vec![ExactRational::zero(); order + 1];
    coeffs[0] = cup.clone();
    for (eta, n) in numbers {
        let d = eta.0[0];
        if d <= 0 {
            return Err(Error::Precondition(format!("curve degree {d} must be positive")));
        }
        let weight = n * int(divisors[0][0] * d) * int(divisors[1][0] * d) * int(divisors[2][0] * d);
        for m in (d as usize..=order).step_by(d as usize) {
            coeffs[m] += &weight;
        }
    }
    Ok(PowerSeries::new(Variable::Q, coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quantum::ring::quantum_product;

    #[test]
    fn cpn_case_law() {
        let r = cpn_ring(2).unwrap();
        let z = r.basis(1);
        let z2 = r.basis(2);
        let q = CurveClass(vec![1]);
        assert_eq!(quantum_product(&z, &z2, &r).unwrap(), r.q_power(&q).unwrap());
        let expected = r.q_power(&q).unwrap();
        let qz = quantum_product(&expected, &z, &r).unwrap();
        assert_eq!(quantum_product(&z2, &z2, &r).unwrap(), qz);
        let r1 = cpn_ring(1).unwrap();
        assert_eq!(quantum_product(&r1.basis(1), &r1.basis(1), &r1).unwrap(), r1.q_power(&q).unwrap());
    }

    #[test]
    fn synthetic_cover() {
        let s = cy3_correlation(&[vec![1], vec![1], vec![1]], &int(5), &[(CurveClass(vec![1]), int(1))], 4).unwrap();
        assert_eq!(s, PowerSeries::from_ints(Variable::Q, &[5, 1, 1, 1, 1]));
        assert!(cy3_correlation(&[vec![1, 0], vec![1], vec![1]], &int(5), &[], 4).is_err());
    }
}
