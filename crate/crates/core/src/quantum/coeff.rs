use std::collections::BTreeMap;
use std::fmt;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact_series::{format_rational, int, ExactRational, PowerSeries, Variable};

/// A class in `H_2(M, Z)` modulo torsion, in a fixed lattice basis.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CurveClass(pub Vec<i64>);

impl CurveClass {
    pub fn zero(rank: usize) -> Self {
        CurveClass(vec![0; rank])
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    pub fn add(&self, other: &Self) -> Self {
        CurveClass(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn neg(&self) -> Self {
        CurveClass(self.0.iter().map(|a| -a).collect())
    }

    pub fn times(&self, k: i64) -> Self {
        CurveClass(self.0.iter().map(|a| a * k).collect())
    }

    /// Primitive in the lattice: entries have gcd 1.
    pub fn is_primitive(&self) -> bool {
        self.0.iter().fold(0i64, |g, &x| g.gcd(&x)) == 1
    }

    /// First nonzero entry is negative.
    pub fn is_negative(&self) -> bool {
        self.0.iter().find(|&&x| x != 0).is_some_and(|&x| x < 0)
    }

    pub fn pair(&self, omega: &[ExactRational]) -> ExactRational {
        self.0.iter().zip(omega).map(|(&a, w)| int(a) * w).sum()
    }
}

impl fmt::Display for CurveClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(i64::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// How the formal symbols `q^eta` are given meaning.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CoefficientRingPolicy {
    /// Finite sums only; multiple-cover series are rejected.
    Polynomial,
    /// Power series over the semigroup generated by `generators`; `grading`
    /// is positive on every generator (so every element has finitely many
    /// decompositions) and terms of grading above `max_degree` are dropped.
    FormalSemigroup { generators: Vec<CurveClass>, grading: Vec<ExactRational>, max_degree: ExactRational },
    /// Generalized Laurent series: only terms with `omega . eta < cutoff`.
    Novikov { omega: Vec<ExactRational>, cutoff: ExactRational },
}

impl CoefficientRingPolicy {
    /// Rank-one formal power series in `q` through `q^order`.
    pub fn power_series(order: usize) -> Self {
        CoefficientRingPolicy::FormalSemigroup {
            generators: vec![CurveClass(vec![1])],
            grading: vec![int(1)],
            max_degree: int(order as i64),
        }
    }

    pub fn validate(&self, rank: usize) -> Result<()> {
        match self {
            CoefficientRingPolicy::Polynomial => Ok(()),
            CoefficientRingPolicy::FormalSemigroup { generators, grading, .. } => {
                if grading.len() != rank || generators.iter().any(|g| g.rank() != rank) {
                    return Err(Error::Policy(format!("semigroup data must have rank {rank}")));
                }
                if generators.is_empty() {
                    return Err(Error::Policy("empty generating set".into()));
                }
                // a grading positive on the generators certifies a strongly
                // convex cone, hence the finite partition property
                if let Some(g) = generators.iter().find(|g| !g.pair(grading).is_positive()) {
                    return Err(Error::Policy(format!("grading is not positive on generator {g}")));
                }
                Ok(())
            }
            CoefficientRingPolicy::Novikov { omega, .. } => {
                if omega.len() != rank {
                    return Err(Error::Policy(format!("Novikov functional must have rank {rank}")));
                }
                Ok(())
            }
        }
    }

    /// The functional used to truncate and to measure degrees.
    pub fn degree(&self, eta: &CurveClass) -> ExactRational {
        match self {
            CoefficientRingPolicy::Polynomial => eta.0.iter().map(|&a| int(a)).sum(),
            CoefficientRingPolicy::FormalSemigroup { grading, .. } => eta.pair(grading),
            CoefficientRingPolicy::Novikov { omega, .. } => eta.pair(omega),
        }
    }

    /// Whether a term `q^eta` survives truncation.
    pub fn keeps(&self, eta: &CurveClass) -> bool {
        match self {
            CoefficientRingPolicy::Polynomial => true,
            CoefficientRingPolicy::FormalSemigroup { max_degree, .. } => &self.degree(eta) <= max_degree,
            CoefficientRingPolicy::Novikov { cutoff, .. } => &self.degree(eta) < cutoff,
        }
    }

    /// Membership of `eta` in the coefficient semigroup.
    pub fn contains(&self, eta: &CurveClass) -> bool {
        match self {
            CoefficientRingPolicy::Polynomial => true,
            CoefficientRingPolicy::Novikov { omega, .. } => eta.is_zero() || eta.pair(omega).is_positive(),
            CoefficientRingPolicy::FormalSemigroup { generators, grading, .. } => in_semigroup(eta, generators, grading),
        }
    }

    /// `c q^eta`, or an error if `eta` is outside the coefficient semigroup.
    pub fn monomial(&self, eta: &CurveClass, c: ExactRational) -> Result<Coefficient> {
        if !self.contains(eta) {
            return Err(Error::Policy(format!("q^{eta} lies outside the coefficient semigroup")));
        }
        let mut out = Coefficient::zero();
        if self.keeps(eta) {
            out.add_term(eta.clone(), c);
        }
        Ok(out)
    }

    /// `c q^eta / (1 - q^eta) = c sum_{k>=1} q^{k eta}`, as far as the
    /// truncation allows.
    pub fn lambert(&self, eta: &CurveClass, c: ExactRational) -> Result<Coefficient> {
        match self {
            CoefficientRingPolicy::Polynomial => {
                Err(Error::Policy(format!("q^{eta}/(1-q^{eta}) is not a polynomial; use a semigroup or Novikov ring")))
            }
            _ => {
                if !self.contains(eta) || !self.degree(eta).is_positive() {
                    return Err(Error::Policy(format!("q^{eta}/(1-q^{eta}) does not converge in this coefficient ring")));
                }
                let mut out = Coefficient::zero();
                let mut k = 1;
                loop {
                    let term = eta.times(k);
                    if !self.keeps(&term) {
                        break;
                    }
                    out.add_term(term, c.clone());
                    k += 1;
                }
                Ok(out)
            }
        }
    }
}

/// Nonnegative integer combination of the generators, found by bounded
/// search: the grading bounds the number of generators used.
fn in_semigroup(eta: &CurveClass, generators: &[CurveClass], grading: &[ExactRational]) -> bool {
    if eta.is_zero() {
        return true;
    }
    let deg = eta.pair(grading);
    if !deg.is_positive() {
        return false;
    }
    generators.iter().enumerate().any(|(i, g)| {
        let rest = CurveClass(eta.0.iter().zip(&g.0).map(|(a, b)| a - b).collect());
        in_semigroup(&rest, &generators[i..], grading)
    })
}

/// Element of the coefficient ring: finite sum of `c_eta q^eta` with
/// nonzero `c_eta`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Coefficient {
    terms: BTreeMap<CurveClass, ExactRational>,
}

impl Coefficient {
    pub fn zero() -> Self {
        Coefficient { terms: BTreeMap::new() }
    }

    pub fn constant(rank: usize, c: ExactRational) -> Self {
        let mut out = Self::zero();
        out.add_term(CurveClass::zero(rank), c);
        out
    }

    pub fn terms(&self) -> impl Iterator<Item = (&CurveClass, &ExactRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, eta: &CurveClass) -> ExactRational {
        self.terms.get(eta).cloned().unwrap_or_else(ExactRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, eta: CurveClass, c: ExactRational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(eta.clone()).or_insert_with(ExactRational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&eta);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-ExactRational::one()))
    }

    pub fn scale(&self, s: &ExactRational) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        Coefficient { terms: self.terms.iter().map(|(e, c)| (e.clone(), c * s)).collect() }
    }

    /// Product, truncated according to the policy.
    pub fn mul(&self, other: &Self, policy: &CoefficientRingPolicy) -> Self {
        let mut out = Self::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e = ea.add(eb);
                if policy.keeps(&e) {
                    out.add_term(e, ca * cb);
                }
            }
        }
        out
    }

    /// Largest absolute coefficient among terms of degree at most `t`.
    pub fn max_norm(&self, policy: &CoefficientRingPolicy, t: &ExactRational) -> ExactRational {
        self.terms
            .iter()
            .filter(|(e, _)| &policy.degree(e) <= t)
            .map(|(_, c)| c.abs())
            .max()
            .unwrap_or_else(ExactRational::zero)
    }

    /// Rank-one coefficients as a power series in `q` through `q^order`.
    pub fn to_series(&self, order: usize) -> Result<PowerSeries> {
        let mut coeffs = vec![ExactRational::zero(); order + 1];
        for (e, c) in &self.terms {
            if e.rank() != 1 {
                return Err(Error::Precondition("power-series view needs a rank-one class lattice".into()));
            }
            let d = e.0[0];
            if d < 0 {
                return Err(Error::Precondition(format!("negative degree {d} in a power series")));
            }
            if (d as usize) <= order {
                coeffs[d as usize] += c;
            }
        }
        Ok(PowerSeries::new(Variable::Q, coeffs))
    }
}

impl fmt::Display for Coefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(e, c)| if e.is_zero() { format_rational(c) } else { format!("{}*q^{e}", format_rational(c)) })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}
