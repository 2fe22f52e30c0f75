use std::sync::Arc;

use num_traits::Zero;

use super::chern::{invert_total, ChernVector, GradedRing};
use super::grassmann::{integrate, GrassmannClass};
use crate::error::{Error, Result};
use crate::exact_series::{int, ExactRational};

/// `P(E) -> Gr(k, n)`, the bundle of lines in `E`, with
/// `xi = c_1(O_{P(E)}(1))`.
#[derive(Clone, Debug, PartialEq)]
pub struct ProjBundle {
    chern: ChernVector<GrassmannClass>,
}

impl ProjBundle {
    pub fn new(e: ChernVector<GrassmannClass>) -> Arc<Self> {
        Arc::new(ProjBundle { chern: e })
    }

    pub fn rank(&self) -> usize {
        self.chern.rank()
    }

    pub fn base(&self) -> GrassmannClass {
        self.chern.class(0)
    }

    pub fn dimension(&self) -> usize {
        self.base().dimension() + self.rank() - 1
    }

    pub fn chern(&self) -> &ChernVector<GrassmannClass> {
        &self.chern
    }

    /// Segre classes `s_i(E)`, the components of `c(E)^{-1}`; these are the
    /// pushforwards `pi_* xi^{r-1+i}`.
    pub fn segre(&self) -> Vec<GrassmannClass> {
        let s = invert_total(&self.chern.total());
        (0..=s.top_degree()).map(|d| s.part(d)).collect()
    }
}

/// A class on `P(E)` in normal form `sum_{i<r} xi^i pi^* a_i`, using
/// `xi^r = -(c_1 xi^{r-1} + ... + c_r)`.
#[derive(Clone, Debug)]
pub struct ProjBundleClass {
    bundle: Arc<ProjBundle>,
    coeffs: Vec<GrassmannClass>,
}

impl PartialEq for ProjBundleClass {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs
    }
}

impl ProjBundleClass {
    /// Reduces an arbitrary polynomial in `xi` with base coefficients.
    pub fn from_polynomial(bundle: &Arc<ProjBundle>, mut coeffs: Vec<GrassmannClass>) -> Self {
        let r = bundle.rank();
        let zero = bundle.base().zero_like();
        for p in (r..coeffs.len()).rev() {
            let a = std::mem::replace(&mut coeffs[p], zero.clone());
            if a.is_zero() {
                continue;
            }
            for i in 1..=r {
                let t = a.times(&bundle.chern.class(i)).scale(&int(-1));
                coeffs[p - i] = coeffs[p - i].plus(&t);
            }
        }
        coeffs.resize(r, zero);
        ProjBundleClass { bundle: bundle.clone(), coeffs }
    }

    pub fn from_base(bundle: &Arc<ProjBundle>, a: &GrassmannClass) -> Self {
        Self::from_polynomial(bundle, vec![a.clone()])
    }

    pub fn xi(bundle: &Arc<ProjBundle>) -> Self {
        let base = bundle.base();
        Self::from_polynomial(bundle, vec![base.zero_like(), base])
    }

    pub fn bundle(&self) -> &Arc<ProjBundle> {
        &self.bundle
    }

    /// Coefficient of `xi^i` in normal form.
    pub fn coefficient(&self, i: usize) -> &GrassmannClass {
        &self.coeffs[i]
    }

    /// `int_{P(E)}`: only `xi^{r-1}` pushes forward to the fundamental
    /// class of the base.
    pub fn integrate(&self) -> ExactRational {
        integrate(&self.coeffs[self.bundle.rank() - 1])
    }
}

impl GradedRing for ProjBundleClass {
    fn zero_like(&self) -> Self {
        ProjBundleClass::from_polynomial(&self.bundle, vec![])
    }
    fn one_like(&self) -> Self {
        ProjBundleClass::from_base(&self.bundle, &self.bundle.base())
    }
    fn plus(&self, other: &Self) -> Self {
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a.plus(b)).collect();
        ProjBundleClass { bundle: self.bundle.clone(), coeffs }
    }
    fn times(&self, other: &Self) -> Self {
        let r = self.bundle.rank();
        let zero = self.bundle.base().zero_like();
        let mut prod = vec![zero; 2 * r - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                prod[i + j] = prod[i + j].plus(&a.times(b));
            }
        }
        ProjBundleClass::from_polynomial(&self.bundle, prod)
    }
    fn scaled(&self, s: &ExactRational) -> Self {
        ProjBundleClass { bundle: self.bundle.clone(), coeffs: self.coeffs.iter().map(|a| a.scale(s)).collect() }
    }
    fn vanishes(&self) -> bool {
        self.coeffs.iter().all(GrassmannClass::is_zero)
    }
    fn top_degree(&self) -> usize {
        self.bundle.dimension()
    }
    fn part(&self, d: usize) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, a)| if i <= d { a.part(d - i) } else { a.zero_like() })
            .collect();
        ProjBundleClass { bundle: self.bundle.clone(), coeffs }
    }
}

/// `int_{P(E)} sum_p xi^p pi^* a_p` computed without the Grothendieck
/// relation, from `pi_* xi^{r-1+i} = s_i(E)`.
pub fn segre_pushforward(bundle: &ProjBundle, coeffs: &[GrassmannClass]) -> Result<ExactRational> {
    let r = bundle.rank();
    let segre = bundle.segre();
    let mut acc = ExactRational::zero();
    for (p, a) in coeffs.iter().enumerate() {
        if p + 1 < r || a.is_zero() {
            continue;
        }
        let Some(s) = segre.get(p + 1 - r) else { continue };
        if a.ambient() != s.ambient() {
            let (k1, n1) = a.ambient();
            let (k2, n2) = s.ambient();
            return Err(Error::AmbientMismatch(k1, n1, k2, n2));
        }
        acc += integrate(&a.times(s));
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::intersection::chern::dual_tautological;

    #[test]
    fn projective_space_over_a_point() {
        // Gr(1, 1) is a point; P(C^4) = P^3 and int xi^3 = 1
        let trivial = ChernVector::new(4, vec![GrassmannClass::zero(1, 1); 4]).unwrap();
        let b = ProjBundle::new(trivial);
        let xi = ProjBundleClass::xi(&b);
        let top = xi.times(&xi).times(&xi);
        assert_eq!(top.integrate(), int(1));
        assert!(top.times(&xi).vanishes());
        assert_eq!(segre_pushforward(&b, &[b.base().zero_like(), b.base().zero_like(), b.base().zero_like(), b.base()]).unwrap(), int(1));
    }

    #[test]
    fn relation_and_segre_agree() {
        let b = ProjBundle::new(dual_tautological(2, 4));
        // int xi^3 sigma_2 = int s_2(U^*) sigma_2 = int sigma_2^2 = 1
        let s2 = GrassmannClass::special(2, 4, 2);
        let xi = ProjBundleClass::xi(&b);
        let acc = xi.times(&xi).times(&xi).times(&ProjBundleClass::from_base(&b, &s2));
        let mut raw = vec![b.base().zero_like(); 3];
        raw.push(s2);
        assert_eq!(acc.integrate(), int(1));
        assert_eq!(acc.integrate(), segre_pushforward(&b, &raw).unwrap());
    }
}
