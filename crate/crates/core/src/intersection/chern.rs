use std::fmt::Debug;

use super::grassmann::{GrassmannClass, Partition};
use super::poly::{compositions, MPoly};
use crate::error::{Error, Result};
use crate::exact_series::{int, ExactRational};

/// Commutative graded `Q`-algebra, zero above `top_degree`, in which
/// Chern-class arithmetic takes place.
pub trait GradedRing: Clone + PartialEq + Debug {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn plus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn scaled(&self, s: &ExactRational) -> Self;
    fn vanishes(&self) -> bool;
    fn top_degree(&self) -> usize;
    fn part(&self, d: usize) -> Self;
}

impl GradedRing for GrassmannClass {
    fn zero_like(&self) -> Self {
        let (k, n) = self.ambient();
        GrassmannClass::zero(k, n)
    }
    fn one_like(&self) -> Self {
        let (k, n) = self.ambient();
        GrassmannClass::one(k, n)
    }
    fn plus(&self, other: &Self) -> Self {
        self.add(other).expect("same Grassmannian")
    }
    fn times(&self, other: &Self) -> Self {
        self.mul(other).expect("same Grassmannian")
    }
    fn scaled(&self, s: &ExactRational) -> Self {
        self.scale(s)
    }
    fn vanishes(&self) -> bool {
        self.is_zero()
    }
    fn top_degree(&self) -> usize {
        self.dimension()
    }
    fn part(&self, d: usize) -> Self {
        self.homogeneous_part(d as u32)
    }
}

/// Polynomial ring truncated above a fixed total degree; the free model in
/// which splitting-principle identities can be checked directly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedPoly {
    pub poly: MPoly,
    pub max_degree: usize,
}

impl TruncatedPoly {
    pub fn new(poly: MPoly, max_degree: usize) -> Self {
        let mut out = MPoly::zero(poly.nvars());
        for (e, c) in poly.terms() {
            if e.iter().sum::<u32>() as usize <= max_degree {
                out.add_term(e.clone(), c.clone());
            }
        }
        TruncatedPoly { poly: out, max_degree }
    }
}

impl GradedRing for TruncatedPoly {
    fn zero_like(&self) -> Self {
        TruncatedPoly { poly: MPoly::zero(self.poly.nvars()), max_degree: self.max_degree }
    }
    fn one_like(&self) -> Self {
        TruncatedPoly { poly: MPoly::one(self.poly.nvars()), max_degree: self.max_degree }
    }
    fn plus(&self, other: &Self) -> Self {
        TruncatedPoly { poly: self.poly.add(&other.poly), max_degree: self.max_degree }
    }
    fn times(&self, other: &Self) -> Self {
        TruncatedPoly { poly: self.poly.mul_truncated(&other.poly, self.max_degree as u32), max_degree: self.max_degree }
    }
    fn scaled(&self, s: &ExactRational) -> Self {
        TruncatedPoly { poly: self.poly.scale(s), max_degree: self.max_degree }
    }
    fn vanishes(&self) -> bool {
        self.poly.is_zero()
    }
    fn top_degree(&self) -> usize {
        self.max_degree
    }
    fn part(&self, d: usize) -> Self {
        TruncatedPoly { poly: self.poly.homogeneous_part(d as u32), max_degree: self.max_degree }
    }
}

/// Chern classes `c_1, ..., c_rank` of a vector bundle.
#[derive(Clone, Debug, PartialEq)]
pub struct ChernVector<R> {
    rank: usize,
    classes: Vec<R>,
}

impl<R: GradedRing> ChernVector<R> {
    pub fn new(rank: usize, classes: Vec<R>) -> Result<Self> {
        if classes.len() != rank {
            return Err(Error::Precondition(format!("rank {rank} bundle needs {rank} Chern classes, got {}", classes.len())));
        }
        if rank == 0 {
            return Err(Error::Precondition("rank-0 bundle has no ring to live in".into()));
        }
        Ok(ChernVector { rank, classes })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn classes(&self) -> &[R] {
        &self.classes
    }

    /// `c_i`, with `c_0 = 1` and `c_i = 0` above the rank.
    pub fn class(&self, i: usize) -> R {
        match i {
            0 => self.classes[0].one_like(),
            i if i <= self.rank => self.classes[i - 1].clone(),
            _ => self.classes[0].zero_like(),
        }
    }

    pub fn top(&self) -> R {
        self.class(self.rank)
    }

    /// Total Chern class `1 + c_1 + ... + c_rank`.
    pub fn total(&self) -> R {
        self.classes.iter().fold(self.classes[0].one_like(), |acc, c| acc.plus(c))
    }

    /// Splits a total class into components `1..=rank`; anything above the
    /// rank must vanish.
    pub fn from_total(rank: usize, total: &R) -> Result<Self> {
        for d in rank + 1..=total.top_degree() {
            if !total.part(d).vanishes() {
                return Err(Error::Invariant(format!("rank {rank} bundle has nonzero c_{d}")));
            }
        }
        Self::new(rank, (1..=rank).map(|d| total.part(d)).collect())
    }

    /// Applies a ring map (e.g. a pullback) to every class.
    pub fn map<S: GradedRing>(&self, f: impl Fn(&R) -> S) -> ChernVector<S> {
        ChernVector { rank: self.rank, classes: self.classes.iter().map(f).collect() }
    }

    /// Dual bundle: `c_i -> (-1)^i c_i`.
    pub fn dual(&self) -> Self {
        let classes = self.classes.iter().enumerate().map(|(i, c)| if i % 2 == 0 { c.scaled(&int(-1)) } else { c.clone() }).collect();
        ChernVector { rank: self.rank, classes }
    }
}

/// `c(A + B) = c(A) c(B)`.
pub fn direct_sum<R: GradedRing>(a: &ChernVector<R>, b: &ChernVector<R>) -> Result<ChernVector<R>> {
    ChernVector::from_total(a.rank + b.rank, &a.total().times(&b.total()))
}

/// Inverse of a class with constant term 1 in a truncated graded ring.
pub fn invert_total<R: GradedRing>(c: &R) -> R {
    let one = c.one_like();
    let nil = c.plus(&one.scaled(&int(-1)));
    let neg = nil.scaled(&int(-1));
    // (1 + x)^{-1} = sum (-x)^j, finite since x is nilpotent
    let mut term = one.clone();
    let mut acc = one;
    for _ in 0..c.top_degree() {
        term = term.times(&neg);
        if term.vanishes() {
            break;
        }
        acc = acc.plus(&term);
    }
    acc
}

/// Chern classes of the quotient `A / B` of a subbundle `B` of `A`.
pub fn quotient<R: GradedRing>(a: &ChernVector<R>, b: &ChernVector<R>) -> Result<ChernVector<R>> {
    if b.rank >= a.rank {
        return Err(Error::Precondition(format!("cannot quotient rank {} by rank {}", a.rank, b.rank)));
    }
    ChernVector::from_total(a.rank - b.rank, &a.total().times(&invert_total(&b.total())))
}

/// `c(V (x) L)` for a line bundle with first Chern class `l`:
/// `c_k = sum_i binom(r - i, k - i) c_i(V) l^{k-i}`.
pub fn twist<R: GradedRing>(v: &ChernVector<R>, l: &R) -> Result<ChernVector<R>> {
    let r = v.rank;
    let mut powers = vec![l.one_like()];
    for i in 1..=r {
        powers.push(powers[i - 1].times(l));
    }
    let classes = (1..=r)
        .map(|k| {
            (0..=k).fold(l.zero_like(), |acc, i| acc.plus(&v.class(i).times(&powers[k - i]).scaled(&binomial(r - i, k - i))))
        })
        .collect();
    ChernVector::new(r, classes)
}

fn binomial(n: usize, k: usize) -> ExactRational {
    if k > n {
        return int(0);
    }
    (0..k).fold(int(1), |acc, i| acc * int((n - i) as i64) / int(i as i64 + 1))
}

/// Chern classes of `Sym^k V`: expand `prod (1 + sum m_i y_i)` over
/// exponent vectors `|m| = k` in formal roots `y`, rewrite each graded
/// piece in elementary symmetric functions of the roots and substitute
/// `e_i -> c_i(V)`.
pub fn chern_sym_power<R: GradedRing>(c: &ChernVector<R>, k: u32) -> Result<ChernVector<R>> {
    if k == 0 {
        return Err(Error::Precondition("symmetric power index must be at least 1".into()));
    }
    let r = c.rank;
    let new_rank: usize = binomial(r + k as usize - 1, k as usize).to_integer().try_into().expect("rank fits in usize");
    let cap = new_rank.min(c.classes[0].top_degree());
    let mut total = MPoly::one(r);
    for m in compositions(r, k) {
        let root: Vec<ExactRational> = m.iter().map(|&x| int(x as i64)).collect();
        total = total.mul_truncated(&MPoly::one(r).add(&MPoly::linear(&root)), cap as u32);
    }
    let zero = c.classes[0].zero_like();
    let classes = (1..=new_rank)
        .map(|d| {
            if d > cap {
                return Ok(zero.clone());
            }
            let e = total
                .homogeneous_part(d as u32)
                .to_elementary()
                .ok_or_else(|| Error::Invariant("symmetric power class is not symmetric".into()))?;
            Ok(e.evaluate(
                c.classes(),
                zero.one_like(),
                |a, b| a.plus(b),
                |a, b| a.times(b),
                |a, s| a.scaled(s),
                zero.clone(),
            ))
        })
        .collect::<Result<Vec<R>>>()?;
    ChernVector::new(new_rank, classes)
}

/// `c(U^*) = 1 + sigma_1 + sigma_{11} + ... + sigma_{1^k}` on `Gr(k, n)`.
pub fn dual_tautological(k: usize, n: usize) -> ChernVector<GrassmannClass> {
    let classes =
        (1..=k).map(|i| GrassmannClass::schubert(k, n, Partition::column(i)).unwrap_or_else(|_| GrassmannClass::zero(k, n))).collect();
    ChernVector::new(k, classes).expect("k classes")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::intersection::grassmann::integrate;

    #[test]
    fn sym_power_one_is_identity() {
        let u = dual_tautological(2, 5);
        assert_eq!(chern_sym_power(&u, 1).unwrap(), u);
    }

    #[test]
    fn twenty_seven_and_2875() {
        let c = chern_sym_power(&dual_tautological(2, 4), 3).unwrap();
        assert_eq!(c.rank(), 4);
        assert_eq!(integrate(&c.top()), int(27));
        let c = chern_sym_power(&dual_tautological(2, 5), 5).unwrap();
        assert_eq!(c.rank(), 6);
        assert_eq!(integrate(&c.top()), int(2875));
    }

    #[test]
    fn twisting_by_trivial_line() {
        let u = dual_tautological(3, 5);
        let zero = GrassmannClass::zero(3, 5);
        assert_eq!(twist(&u, &zero).unwrap(), u);
    }

    #[test]
    fn quotient_inverts_direct_sum() {
        let u = dual_tautological(2, 5);
        let s = chern_sym_power(&u, 2).unwrap();
        let sum = direct_sum(&u, &s).unwrap();
        assert_eq!(quotient(&sum, &s).unwrap(), u);
    }
}
