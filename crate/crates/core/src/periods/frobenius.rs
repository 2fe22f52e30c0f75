use num_traits::Zero;

use super::operator::{holomorphic_period, pf_operator};
use crate::error::{Error, Result};
use crate::exact_series::{int, ExactRational, LogSeries, NilpotentPoly, PowerSeries, Variable};

/// Solutions `e_0, ..., e_n` of the Picard–Fuchs equation at the maximally
/// unipotent point `z = 0`, for degree `N = n + 2`.
///
/// `e_j` has log degree exactly `j`, and its `(log z)^j` coefficient is
/// `e_0 / j!`.
#[derive(Clone, Debug)]
pub struct FrobeniusBasis {
    degree: u32,
    solutions: Vec<LogSeries>,
}

impl FrobeniusBasis {
    /// Degree `N` of the hypersurface.
    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// Complex dimension `n = N - 2`.
    pub fn dimension(&self) -> usize {
        self.degree as usize - 2
    }

    pub fn order(&self) -> usize {
        self.solutions[0].order()
    }

    pub fn solutions(&self) -> &[LogSeries] {
        &self.solutions
    }

    pub fn solution(&self, j: usize) -> &LogSeries {
        &self.solutions[j]
    }

    /// The holomorphic solution `e_0`.
    pub fn holomorphic(&self) -> PowerSeries {
        self.solutions[0].log_coefficient(0)
    }
}

/// Series coefficients `c_m(rho)` of the deformed solution
/// `z^rho sum_m c_m(rho) z^m`, in `Q[rho]/(rho^{N-1})`.
///
/// The recurrence is `(m + rho)^{N-1} c_m = N prod_{k=1}^{N-1} (N(m-1+rho) + k) c_{m-1}`.
fn deformed_coefficients(degree: u32, order: usize) -> Result<Vec<NilpotentPoly>> {
    let depth = degree as usize - 1;
    let n = degree as i64;
    let mut out = Vec::with_capacity(order + 1);
    out.push(NilpotentPoly::constant(depth, int(1)));
    for m in 1..=order as i64 {
        let mut num = NilpotentPoly::constant(depth, int(n));
        for k in 1..n {
            num = num.mul(&NilpotentPoly::linear(depth, int(n * (m - 1) + k), int(n)));
        }
        let den = NilpotentPoly::shifted(depth, m).pow(depth as u32);
        let next = out.last().expect("nonempty").mul(&num).mul(&den.inverse()?);
        out.push(next);
    }
    Ok(out)
}

/// Frobenius basis through `z^order`.
///
/// With `C_k(z) = sum_m [rho^k] c_m(rho) z^m`, the basis is
/// `e_j = sum_{i=0}^{j} (log z)^i / i! * C_{j-i}(z)`, the `rho^j` coefficient
/// of `z^rho c(z; rho)`.
pub fn frobenius_basis(degree: u32, order: usize) -> Result<FrobeniusBasis> {
    pf_operator(degree)?;
    let depth = degree as usize - 1;
    let cs = deformed_coefficients(degree, order)?;
    let components: Vec<PowerSeries> = (0..depth)
        .map(|k| PowerSeries::new(Variable::Z, cs.iter().map(|c| c.coeff(k).clone()).collect()))
        .collect();
    let mut inv_fact = vec![ExactRational::from_integer(1.into())];
    for i in 1..depth {
        let prev = inv_fact[i - 1].clone();
        inv_fact.push(prev / int(i as i64));
    }
    let mut solutions = Vec::with_capacity(depth);
    for j in 0..depth {
        let terms: Vec<PowerSeries> = (0..=j).map(|i| components[j - i].scale(&inv_fact[i])).collect();
        solutions.push(LogSeries::new(terms)?);
    }
    let basis = FrobeniusBasis { degree, solutions };
    debug_assert_eq!(basis.holomorphic(), holomorphic_period(degree, order)?);
    Ok(basis)
}

/// Residual of the Picard–Fuchs operator on every basis element; all must be
/// identically zero through the truncation order.
pub fn annihilation_residuals(basis: &FrobeniusBasis) -> Result<Vec<LogSeries>> {
    let l = pf_operator(basis.degree)?;
    basis.solutions.iter().map(|e| l.apply_log(e)).collect()
}

/// Checks the structural invariants of the basis: exact log degrees, unit
/// constant term of `e_0`, divided-power top coefficients, annihilation.
pub fn verify_basis(basis: &FrobeniusBasis) -> Result<()> {
    let e0 = basis.holomorphic();
    if e0.coeff(0) != &int(1) {
        return Err(Error::Invariant("e_0 must have constant term 1".into()));
    }
    let mut fact = int(1);
    for (j, e) in basis.solutions.iter().enumerate() {
        if j > 0 {
            fact *= int(j as i64);
        }
        if e.max_log_degree() != j {
            return Err(Error::Invariant(format!("e_{j} has log degree {}", e.max_log_degree())));
        }
        if e.log_coefficient(j) != e0.scale(&fact.recip()) {
            return Err(Error::Invariant(format!("top log coefficient of e_{j} is not e_0/{j}!")));
        }
    }
    for (j, r) in annihilation_residuals(basis)?.iter().enumerate() {
        if !r.is_zero() {
            return Err(Error::Invariant(format!("Picard-Fuchs operator does not annihilate e_{j}")));
        }
    }
    Ok(())
}

/// The ratio `e_j / e_0` as a log series; `e_0` is invertible.
pub fn normalized_solution(basis: &FrobeniusBasis, j: usize) -> Result<LogSeries> {
    basis.solutions[j].div_series(&basis.holomorphic())
}

pub(crate) fn is_constant(s: &PowerSeries) -> bool {
    s.coeffs().iter().skip(1).all(Zero::is_zero)
}
