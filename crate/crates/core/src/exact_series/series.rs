use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::rational::{format_rational, int, parse_rational, ExactRational};
use crate::error::{precondition, Error, Result};

/// Which chart a series lives in. Mixing charts is rejected; crossing from one
/// to another only happens through [`PowerSeries::compose`] or
/// [`PowerSeries::revert`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Variable {
    Z,
    Q,
    W,
}

impl fmt::Display for Variable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Variable::Z => "z",
            Variable::Q => "q",
            Variable::W => "w",
        };
        f.write_str(s)
    }
}

/// Truncated power series `c_0 + c_1 x + ... + c_T x^T + O(x^{T+1})`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerSeries {
    var: Variable,
    coeffs: Vec<ExactRational>,
}

impl PowerSeries {
    /// Builds a series from its coefficients; the truncation order is
    /// `coeffs.len() - 1`. An empty vector is treated as the zero series at
    /// order 0.
    pub fn new(var: Variable, mut coeffs: Vec<ExactRational>) -> Self {
        if coeffs.is_empty() {
            coeffs.push(ExactRational::zero());
        }
        PowerSeries { var, coeffs }
    }

    pub fn from_ints(var: Variable, coeffs: &[i64]) -> Self {
        Self::new(var, coeffs.iter().map(|&c| int(c)).collect())
    }

    pub fn zero(var: Variable, order: usize) -> Self {
        PowerSeries { var, coeffs: vec![ExactRational::zero(); order + 1] }
    }

    pub fn one(var: Variable, order: usize) -> Self {
        Self::constant(var, ExactRational::one(), order)
    }

    pub fn constant(var: Variable, c: ExactRational, order: usize) -> Self {
        let mut s = Self::zero(var, order);
        s.coeffs[0] = c;
        s
    }

    /// `c * x^k`, which is the zero series when `k` exceeds the order.
    pub fn monomial(var: Variable, k: usize, c: ExactRational, order: usize) -> Self {
        let mut s = Self::zero(var, order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    /// The series `x` itself.
    pub fn identity(var: Variable, order: usize) -> Self {
        Self::monomial(var, 1, ExactRational::one(), order)
    }

    pub fn var(&self) -> Variable {
        self.var
    }

    /// Largest exponent whose coefficient is known.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[ExactRational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<ExactRational> {
        self.coeffs
    }

    /// Coefficient of `x^k`; zero above the truncation order is not implied,
    /// so callers must stay within [`order`](Self::order).
    pub fn coeff(&self, k: usize) -> &ExactRational {
        &self.coeffs[k]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Re-labels the chart without touching coefficients.
    pub fn with_var(mut self, var: Variable) -> Self {
        self.var = var;
        self
    }

    /// Drops coefficients above `order`; asking for a higher order than is
    /// known is an error.
    pub fn truncate(&self, order: usize) -> Result<Self> {
        if order > self.order() {
            return precondition(format!(
                "cannot extend series of order {} to {}",
                self.order(),
                order
            ));
        }
        Ok(PowerSeries { var: self.var, coeffs: self.coeffs[..=order].to_vec() })
    }

    fn check(&self, other: &Self) -> Result<usize> {
        if self.var != other.var {
            return Err(Error::VariableMismatch(self.var, other.var));
        }
        Ok(self.order().min(other.order()))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        let t = self.check(other)?;
        let coeffs = (0..=t).map(|k| &self.coeffs[k] + &other.coeffs[k]).collect();
        Ok(PowerSeries { var: self.var, coeffs })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        let t = self.check(other)?;
        let coeffs = (0..=t).map(|k| &self.coeffs[k] - &other.coeffs[k]).collect();
        Ok(PowerSeries { var: self.var, coeffs })
    }

    pub fn neg(&self) -> Self {
        PowerSeries { var: self.var, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn scale(&self, c: &ExactRational) -> Self {
        PowerSeries { var: self.var, coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    pub fn add_constant(&self, c: &ExactRational) -> Self {
        let mut s = self.clone();
        s.coeffs[0] += c;
        s
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        let t = self.check(other)?;
        Ok(PowerSeries { var: self.var, coeffs: convolve(&self.coeffs, &other.coeffs, t) })
    }

    /// Multiplicative inverse; requires a nonzero constant term.
    pub fn inverse(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(Error::NonInvertible);
        }
        let inv0 = c0.recip();
        let t = self.order();
        let mut out: Vec<ExactRational> = Vec::with_capacity(t + 1);
        out.push(inv0.clone());
        for n in 1..=t {
            let mut acc = ExactRational::zero();
            for k in 1..=n {
                if !self.coeffs[k].is_zero() {
                    acc += &self.coeffs[k] * &out[n - k];
                }
            }
            out.push(-acc * &inv0);
        }
        Ok(PowerSeries { var: self.var, coeffs: out })
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        if other.coeffs[0].is_zero() {
            return Err(Error::NonInvertible);
        }
        self.mul(&other.inverse()?)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut result = Self::one(self.var, self.order());
        for _ in 0..e {
            result = PowerSeries {
                var: self.var,
                coeffs: convolve(&result.coeffs, &self.coeffs, self.order()),
            };
        }
        result
    }

    /// Logarithmic derivative `x d/dx`: multiplies the `k`-th coefficient by `k`.
    pub fn theta(&self) -> Self {
        let coeffs = self.coeffs.iter().enumerate().map(|(k, c)| c * int(k as i64)).collect();
        PowerSeries { var: self.var, coeffs }
    }

    /// Ordinary derivative `d/dx`; loses one order of truncation.
    pub fn derivative(&self) -> Self {
        if self.order() == 0 {
            return Self::zero(self.var, 0);
        }
        let coeffs = (1..=self.order()).map(|k| &self.coeffs[k] * int(k as i64)).collect();
        PowerSeries { var: self.var, coeffs }
    }

    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return precondition("exp requires a zero constant term");
        }
        let t = self.order();
        let mut out = vec![ExactRational::one()];
        for n in 1..=t {
            let mut acc = ExactRational::zero();
            for k in 1..=n {
                if !self.coeffs[k].is_zero() {
                    acc += &self.coeffs[k] * int(k as i64) * &out[n - k];
                }
            }
            out.push(acc / int(n as i64));
        }
        Ok(PowerSeries { var: self.var, coeffs: out })
    }

    pub fn log(&self) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return precondition("log requires constant term 1");
        }
        let t = self.order();
        let mut out = vec![ExactRational::zero()];
        for n in 1..=t {
            let mut acc = &self.coeffs[n] * int(n as i64);
            for k in 1..n {
                if !out[k].is_zero() {
                    acc -= &out[k] * int(k as i64) * &self.coeffs[n - k];
                }
            }
            out.push(acc / int(n as i64));
        }
        Ok(PowerSeries { var: self.var, coeffs: out })
    }

    /// Substitutes `inner` for the variable: returns `self(inner(y))` in the
    /// chart of `inner`. Requires `inner` to have zero constant term.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        if !inner.coeffs[0].is_zero() {
            return precondition("composition requires inner series with zero constant term");
        }
        let t = self.order().min(inner.order());
        let inner = inner.truncate(t)?;
        // Horner from the top coefficient.
        let mut acc = Self::constant(inner.var, self.coeffs[t].clone(), t);
        for k in (0..t).rev() {
            acc = PowerSeries { var: inner.var, coeffs: convolve(&acc.coeffs, &inner.coeffs, t) };
            acc.coeffs[0] += &self.coeffs[k];
        }
        Ok(acc)
    }

    /// Compositional inverse by Lagrange inversion, in the chart `target`.
    ///
    /// Requires `f(0) = 0` and `f'(0) = 1`; then `[y^k] g = (1/k) [x^{k-1}] (x/f)^k`.
    pub fn revert(&self, target: Variable) -> Result<Self> {
        let t = self.order();
        if t == 0 {
            return precondition("reversion needs at least order 1");
        }
        if !self.coeffs[0].is_zero() || !self.coeffs[1].is_one() {
            return precondition("reversion requires f(0) = 0 and f'(0) = 1");
        }
        // f / x, known through order t - 1.
        let shifted = PowerSeries { var: self.var, coeffs: self.coeffs[1..].to_vec() };
        let h = shifted.inverse()?;
        let mut out = vec![ExactRational::zero(); t + 1];
        let mut hk = Self::one(self.var, t - 1);
        for k in 1..=t {
            hk = hk.mul(&h)?;
            out[k] = hk.coeffs[k - 1].clone() / int(k as i64);
        }
        Ok(PowerSeries { var: target, coeffs: out })
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(SeriesRepr::from(self)).expect("series serialises")
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let repr: SeriesRepr = serde_json::from_value(v.clone())
            .map_err(|e| Error::Malformed(format!("series JSON: {e}")))?;
        repr.try_into()
    }
}

pub(crate) fn convolve(a: &[ExactRational], b: &[ExactRational], t: usize) -> Vec<ExactRational> {
    let mut out = vec![ExactRational::zero(); t + 1];
    for (i, ai) in a.iter().enumerate().take(t + 1) {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate().take(t + 1 - i) {
            if !bj.is_zero() {
                out[i + j] += ai * bj;
            }
        }
    }
    out
}

#[derive(Serialize, Deserialize)]
struct SeriesRepr {
    variable: Variable,
    truncation: usize,
    coefficients: Vec<String>,
}

impl From<&PowerSeries> for SeriesRepr {
    fn from(s: &PowerSeries) -> Self {
        SeriesRepr {
            variable: s.var,
            truncation: s.order(),
            coefficients: s.coeffs.iter().map(format_rational).collect(),
        }
    }
}

impl TryFrom<SeriesRepr> for PowerSeries {
    type Error = Error;

    fn try_from(r: SeriesRepr) -> Result<Self> {
        if r.coefficients.len() != r.truncation + 1 {
            return Err(Error::Malformed(format!(
                "truncation {} needs {} coefficients, got {}",
                r.truncation,
                r.truncation + 1,
                r.coefficients.len()
            )));
        }
        let coeffs = r.coefficients.iter().map(|c| parse_rational(c)).collect::<Result<_>>()?;
        Ok(PowerSeries::new(r.variable, coeffs))
    }
}

impl Serialize for PowerSeries {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        SeriesRepr::from(self).serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for PowerSeries {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = SeriesRepr::deserialize(deserializer)?;
        repr.try_into().map_err(serde::de::Error::custom)
    }
}

impl fmt::Display for PowerSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let s = format_rational(c);
            let (sign, body) = match s.strip_prefix('-') {
                Some(rest) => ("-", rest.to_string()),
                None => ("+", s.clone()),
            };
            if first {
                if sign == "-" {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            match k {
                0 => f.write_str(&body)?,
                1 if body == "1" => write!(f, "{}", self.var)?,
                1 => write!(f, "{body}*{}", self.var)?,
                _ if body == "1" => write!(f, "{}^{k}", self.var)?,
                _ => write!(f, "{body}*{}^{k}", self.var)?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O({}^{})", self.var, self.order() + 1)
    }
}
