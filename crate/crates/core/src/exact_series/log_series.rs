use num_traits::Zero;

use super::rational::{int, ExactRational};
use super::series::{PowerSeries, Variable};
use crate::error::{Error, Result};

/// Finite sum `sum_i (log x)^i * f_i(x)` with power-series coefficients `f_i`.
///
/// Plain powers of the logarithm are stored (not divided powers). All
/// coefficient series share one variable and one truncation order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LogSeries {
    terms: Vec<PowerSeries>,
}

impl LogSeries {
    /// Builds from coefficients of `(log x)^0, (log x)^1, ...`; trailing zero
    /// coefficients are dropped.
    pub fn new(terms: Vec<PowerSeries>) -> Result<Self> {
        let first = terms
            .first()
            .ok_or_else(|| Error::Precondition("log series needs at least one term".into()))?;
        let var = first.var();
        let order = terms.iter().map(PowerSeries::order).min().unwrap_or(0);
        let mut out = Vec::with_capacity(terms.len());
        for t in terms {
            if t.var() != var {
                return Err(Error::VariableMismatch(var, t.var()));
            }
            out.push(t.truncate(order)?);
        }
        Ok(Self::normalized(out))
    }

    fn normalized(mut terms: Vec<PowerSeries>) -> Self {
        while terms.len() > 1 && terms.last().is_some_and(PowerSeries::is_zero) {
            terms.pop();
        }
        LogSeries { terms }
    }

    pub fn from_series(s: PowerSeries) -> Self {
        LogSeries { terms: vec![s] }
    }

    /// `(log x)^k`.
    pub fn log_power(var: Variable, k: usize, order: usize) -> Self {
        let mut terms = vec![PowerSeries::zero(var, order); k + 1];
        terms[k] = PowerSeries::one(var, order);
        LogSeries { terms }
    }

    pub fn var(&self) -> Variable {
        self.terms[0].var()
    }

    pub fn order(&self) -> usize {
        self.terms[0].order()
    }

    pub fn max_log_degree(&self) -> usize {
        self.terms.len() - 1
    }

    /// Coefficient of `(log x)^i`; zero beyond the top degree.
    pub fn log_coefficient(&self, i: usize) -> PowerSeries {
        self.terms
            .get(i)
            .cloned()
            .unwrap_or_else(|| PowerSeries::zero(self.var(), self.order()))
    }

    pub fn terms(&self) -> &[PowerSeries] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.iter().all(PowerSeries::is_zero)
    }

    /// True when no logarithm survives.
    pub fn is_single_valued(&self) -> bool {
        self.terms.len() == 1
    }

    /// The single-valued series, or an error when log terms remain.
    pub fn into_series(self) -> Result<PowerSeries> {
        if !self.is_single_valued() {
            return Err(Error::Invariant(format!(
                "expected a single-valued series, found log degree {}",
                self.max_log_degree()
            )));
        }
        Ok(self.terms.into_iter().next().expect("nonempty"))
    }

    fn zip(&self, other: &Self, f: impl Fn(&PowerSeries, &PowerSeries) -> Result<PowerSeries>) -> Result<Self> {
        if self.var() != other.var() {
            return Err(Error::VariableMismatch(self.var(), other.var()));
        }
        let n = self.terms.len().max(other.terms.len());
        let terms = (0..n)
            .map(|i| f(&self.log_coefficient(i), &other.log_coefficient(i)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::normalized(terms))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip(other, PowerSeries::add)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.zip(other, PowerSeries::sub)
    }

    pub fn scale(&self, c: &ExactRational) -> Self {
        Self::normalized(self.terms.iter().map(|t| t.scale(c)).collect())
    }

    pub fn mul_series(&self, s: &PowerSeries) -> Result<Self> {
        let terms = self.terms.iter().map(|t| t.mul(s)).collect::<Result<Vec<_>>>()?;
        Ok(Self::normalized(terms))
    }

    pub fn div_series(&self, s: &PowerSeries) -> Result<Self> {
        let inv = s.inverse()?;
        self.mul_series(&inv)
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.var() != other.var() {
            return Err(Error::VariableMismatch(self.var(), other.var()));
        }
        let order = self.order().min(other.order());
        let mut terms = vec![PowerSeries::zero(self.var(), order); self.terms.len() + other.terms.len() - 1];
        for (i, a) in self.terms.iter().enumerate() {
            for (j, b) in other.terms.iter().enumerate() {
                terms[i + j] = terms[i + j].add(&a.mul(b)?)?;
            }
        }
        Ok(Self::normalized(terms))
    }

    /// `x d/dx`, using `theta(log x) = 1` and the product rule.
    pub fn theta(&self) -> Self {
        let var = self.var();
        let order = self.order();
        let mut terms: Vec<PowerSeries> = self.terms.iter().map(PowerSeries::theta).collect();
        for i in 1..self.terms.len() {
            let extra = self.terms[i].scale(&int(i as i64));
            terms[i - 1] = terms[i - 1].add(&extra).expect("same chart and order");
        }
        debug_assert!(terms.iter().all(|t| t.var() == var && t.order() == order));
        Self::normalized(terms)
    }

    /// Substitutes `log x -> log x + shift` (the formal monodromy action).
    pub fn shift_log(&self, shift: &ExactRational) -> Self {
        let var = self.var();
        let order = self.order();
        let mut terms = vec![PowerSeries::zero(var, order); self.terms.len()];
        for (i, f) in self.terms.iter().enumerate() {
            // (L + s)^i = sum_k binom(i, k) s^(i-k) L^k
            let mut binom = ExactRational::from_integer(1.into());
            for k in (0..=i).rev() {
                let c = &binom * pow(shift, i - k);
                if !c.is_zero() {
                    terms[k] = terms[k].add(&f.scale(&c)).expect("same chart and order");
                }
                if k > 0 {
                    binom = binom * int(k as i64) / int((i - k + 1) as i64);
                }
            }
        }
        Self::normalized(terms)
    }
}

fn pow(x: &ExactRational, e: usize) -> ExactRational {
    let mut r = ExactRational::from_integer(1.into());
    for _ in 0..e {
        r *= x;
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    const Z: Variable = Variable::Z;

    #[test]
    fn theta_of_log_is_one() {
        let l = LogSeries::log_power(Z, 1, 4);
        let t = l.theta();
        assert!(t.is_single_valued());
        assert_eq!(t.into_series().unwrap(), PowerSeries::one(Z, 4));
    }

    #[test]
    fn theta_product_rule_on_log_squared_times_z() {
        // theta((log z)^2 z) = 2 (log z) z + (log z)^2 z
        let zs = PowerSeries::identity(Z, 4);
        let f = LogSeries::log_power(Z, 2, 4).mul_series(&zs).unwrap();
        let expected = LogSeries::new(vec![PowerSeries::zero(Z, 4), zs.scale(&int(2)), zs.clone()]).unwrap();
        assert_eq!(f.theta(), expected);
    }

    #[test]
    fn trailing_zero_logs_are_dropped() {
        let l = LogSeries::log_power(Z, 2, 3);
        let d = l.sub(&l).unwrap();
        assert_eq!(d.max_log_degree(), 0);
        assert!(d.is_zero());
    }

    #[test]
    fn shift_log_binomial() {
        // (L + 1)^2 = L^2 + 2L + 1
        let s = LogSeries::log_power(Z, 2, 2).shift_log(&int(1));
        assert_eq!(s.log_coefficient(0), PowerSeries::one(Z, 2));
        assert_eq!(s.log_coefficient(1), PowerSeries::constant(Z, int(2), 2));
        assert_eq!(s.log_coefficient(2), PowerSeries::one(Z, 2));
    }

    #[test]
    fn into_series_rejects_logs() {
        assert!(LogSeries::log_power(Z, 1, 2).into_series().is_err());
    }

    #[test]
    fn mul_adds_log_degrees() {
        let a = LogSeries::log_power(Z, 1, 3);
        let b = LogSeries::log_power(Z, 2, 3);
        assert_eq!(a.mul(&b).unwrap(), LogSeries::log_power(Z, 3, 3));
    }
}
