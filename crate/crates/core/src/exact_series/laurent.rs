use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use super::rational::{format_rational, ExactRational};
use crate::error::{Error, Result};

/// Finite Laurent polynomial `sum_k c_k x^k` with possibly negative `k`.
///
/// Zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LaurentElement {
    terms: BTreeMap<i64, ExactRational>,
}

impl LaurentElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, ExactRational::one())
    }

    pub fn monomial(exp: i64, c: ExactRational) -> Self {
        let mut e = Self::zero();
        e.add_term(exp, c);
        e
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (i64, ExactRational)>) -> Self {
        let mut e = Self::zero();
        for (k, c) in terms {
            e.add_term(k, c);
        }
        e
    }

    fn add_term(&mut self, exp: i64, c: ExactRational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(exp).or_insert_with(ExactRational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn coeff(&self, exp: i64) -> ExactRational {
        self.terms.get(&exp).cloned().unwrap_or_else(ExactRational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &ExactRational)> {
        self.terms.iter().map(|(k, c)| (*k, c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(*k, c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        Self { terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, s: &ExactRational) -> Self {
        Self::from_terms(self.terms.iter().map(|(k, c)| (*k, c * s)))
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (i, a) in &self.terms {
            for (j, b) in &other.terms {
                out.add_term(i + j, a * b);
            }
        }
        out
    }

    /// `x -> x^{-1}`.
    pub fn invert_variable(&self) -> Self {
        Self { terms: self.terms.iter().map(|(k, c)| (-k, c.clone())).collect() }
    }
}

impl fmt::Display for LaurentElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(k, c)| match k {
                0 => format_rational(c),
                _ => format!("{}*x^{}", format_rational(c), k),
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

/// Quotient of Laurent polynomials; equality is decided by cross
/// multiplication, so no gcd normal form is needed.
#[derive(Clone, Debug)]
pub struct LaurentFraction {
    num: LaurentElement,
    den: LaurentElement,
}

impl LaurentFraction {
    pub fn new(num: LaurentElement, den: LaurentElement) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::NonInvertible);
        }
        Ok(LaurentFraction { num, den })
    }

    pub fn from_element(e: LaurentElement) -> Self {
        LaurentFraction { num: e, den: LaurentElement::one() }
    }

    /// `x^k / (1 - x^k)`, the multiple-cover weight of a class of exponent `k`.
    pub fn multiple_cover(k: i64) -> Self {
        let num = LaurentElement::monomial(k, ExactRational::one());
        let den = LaurentElement::one().sub(&num);
        LaurentFraction { num, den }
    }

    pub fn add(&self, other: &Self) -> Self {
        LaurentFraction {
            num: self.num.mul(&other.den).add(&other.num.mul(&self.den)),
            den: self.den.mul(&other.den),
        }
    }

    pub fn neg(&self) -> Self {
        LaurentFraction { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, s: &ExactRational) -> Self {
        LaurentFraction { num: self.num.scale(s), den: self.den.clone() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        LaurentFraction { num: self.num.mul(&other.num), den: self.den.mul(&other.den) }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn equals(&self, other: &Self) -> bool {
        self.num.mul(&other.den) == other.num.mul(&self.den)
    }

    pub fn numerator(&self) -> &LaurentElement {
        &self.num
    }

    pub fn denominator(&self) -> &LaurentElement {
        &self.den
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_series::int;

    #[test]
    fn no_zero_coefficients_stored() {
        let a = LaurentElement::from_terms([(-2, int(3)), (1, int(0)), (4, int(1))]);
        assert_eq!(a.terms().count(), 2);
        assert!(a.sub(&a).is_zero());
    }

    #[test]
    fn negative_exponents_multiply() {
        let x = LaurentElement::monomial(1, int(1));
        let xinv = LaurentElement::monomial(-1, int(1));
        assert_eq!(x.mul(&xinv), LaurentElement::one());
        assert_eq!(x.invert_variable(), xinv);
    }

    #[test]
    fn multiple_cover_reflection_identity() {
        // x/(1-x) + 1/(x-1) = -1
        let lhs = LaurentFraction::multiple_cover(1).add(
            &LaurentFraction::new(
                LaurentElement::one(),
                LaurentElement::from_terms([(1, int(1)), (0, int(-1))]),
            )
            .unwrap(),
        );
        assert!(lhs.equals(&LaurentFraction::from_element(LaurentElement::monomial(0, int(-1)))));
        // and x^{-1}/(1-x^{-1}) is the same rational function as 1/(x-1)
        let refl = LaurentFraction::multiple_cover(-1);
        let direct = LaurentFraction::new(
            LaurentElement::one(),
            LaurentElement::from_terms([(1, int(1)), (0, int(-1))]),
        )
        .unwrap();
        assert!(refl.equals(&direct));
    }

    #[test]
    fn zero_denominator_rejected() {
        assert!(LaurentFraction::new(LaurentElement::one(), LaurentElement::zero()).is_err());
    }
}
