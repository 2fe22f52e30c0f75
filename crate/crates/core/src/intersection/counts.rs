use super::chern::{chern_sym_power, dual_tautological, quotient, twist, ChernVector, GradedRing};
use super::grassmann::{integrate, GrassmannClass};
use super::projective::{segre_pushforward, ProjBundle, ProjBundleClass};
use crate::error::{Error, Result};
use crate::exact_series::{int, ExactRational};

/// Lines on a generic degree-`d` hypersurface in `P^m`: the zeros of the
/// section of `Sym^d U^*` on `Gr(2, m+1)` induced by its equation.
pub fn count_lines_on_hypersurface(d: u32, m: usize) -> Result<ExactRational> {
    if d == 0 || m == 0 {
        return Err(Error::Precondition("need d >= 1 and m >= 1".into()));
    }
    let rank = d as usize + 1;
    let dimension = 2 * (m - 1);
    if rank != dimension {
        return Err(Error::DimensionMismatch { rank, dimension });
    }
    let c = chern_sym_power(&dual_tautological(2, m + 1), d)?;
    Ok(integrate(&c.top()))
}

/// Integers describing the conic count on the quintic threefold.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConicCount {
    pub rank: usize,
    pub dimension: usize,
    /// `int c_11(B)` reduced with the Grothendieck relation.
    pub via_relation: ExactRational,
    /// The same integral from Segre-class pushforward.
    pub via_segre: ExactRational,
}

/// Conics on a generic quintic threefold. A conic spans a plane
/// `V in Gr(3, 5)` and is cut out by a quadric `q in P(Sym^2 V^*)`; the
/// quintic restricts to a section of
/// `B = Sym^5 U^* / (Sym^3 U^* (x) O(-1))` on `P(Sym^2 U^*)`.
pub fn conic_count() -> Result<ConicCount> {
    let u = dual_tautological(3, 5);
    let e = chern_sym_power(&u, 2)?;
    let bundle = ProjBundle::new(e);
    let sym5 = chern_sym_power(&u, 5)?;
    let sym3 = chern_sym_power(&u, 3)?;
    let rank = sym5.rank() - sym3.rank();
    let dimension = bundle.dimension();
    if rank != dimension {
        return Err(Error::DimensionMismatch { rank, dimension });
    }

    let minus_xi = ProjBundleClass::xi(&bundle).scaled(&int(-1));
    let sub = twist(&pullback(&bundle, &sym3), &minus_xi)?;
    let b = quotient(&pullback(&bundle, &sym5), &sub)?;
    let via_relation = b.top().integrate();

    let base = bundle.base();
    let lift = |a: &GrassmannClass| XiPoly::constant(a, dimension);
    let minus_xi = XiPoly { coeffs: vec![base.zero_like(), base.scale(&int(-1))], max_degree: dimension };
    let sub = twist(&sym3.map(lift), &minus_xi)?;
    let b = quotient(&sym5.map(lift), &sub)?;
    let via_segre = segre_pushforward(&bundle, &b.top().coeffs)?;

    Ok(ConicCount { rank, dimension, via_relation, via_segre })
}

/// `609250`, checked two ways.
pub fn count_conics_on_quintic() -> Result<ExactRational> {
    let c = conic_count()?;
    if c.via_relation != c.via_segre {
        return Err(Error::Verification(format!(
            "Grothendieck relation gives {} but Segre pushforward gives {}",
            c.via_relation, c.via_segre
        )));
    }
    Ok(c.via_relation)
}

/// Polynomials in `xi` over the base with no relation imposed, truncated
/// by total degree.
#[derive(Clone, Debug, PartialEq)]
struct XiPoly {
    coeffs: Vec<GrassmannClass>,
    max_degree: usize,
}

impl XiPoly {
    fn constant(a: &GrassmannClass, max_degree: usize) -> Self {
        XiPoly { coeffs: vec![a.clone()], max_degree }
    }

    fn coeff(&self, i: usize) -> GrassmannClass {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.coeffs[0].zero_like())
    }
}

impl GradedRing for XiPoly {
    fn zero_like(&self) -> Self {
        XiPoly { coeffs: vec![self.coeffs[0].zero_like()], max_degree: self.max_degree }
    }
    fn one_like(&self) -> Self {
        XiPoly { coeffs: vec![self.coeffs[0].one_like()], max_degree: self.max_degree }
    }
    fn plus(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        XiPoly { coeffs: (0..len).map(|i| self.coeff(i).plus(&other.coeff(i))).collect(), max_degree: self.max_degree }
    }
    fn times(&self, other: &Self) -> Self {
        let len = (self.coeffs.len() + other.coeffs.len() - 1).min(self.max_degree + 1);
        let mut coeffs = vec![self.coeffs[0].zero_like(); len];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                if i + j < len && !a.is_zero() && !b.is_zero() {
                    coeffs[i + j] = coeffs[i + j].plus(&a.times(b));
                }
            }
        }
        XiPoly { coeffs, max_degree: self.max_degree }.truncated()
    }
    fn scaled(&self, s: &ExactRational) -> Self {
        XiPoly { coeffs: self.coeffs.iter().map(|a| a.scale(s)).collect(), max_degree: self.max_degree }
    }
    fn vanishes(&self) -> bool {
        self.coeffs.iter().all(GrassmannClass::is_zero)
    }
    fn top_degree(&self) -> usize {
        self.max_degree
    }
    fn part(&self, d: usize) -> Self {
        let coeffs = (0..self.coeffs.len()).map(|i| if i <= d { self.coeffs[i].part(d - i) } else { self.coeffs[i].zero_like() }).collect();
        XiPoly { coeffs, max_degree: self.max_degree }
    }
}

impl XiPoly {
    fn truncated(mut self) -> Self {
        for (i, a) in self.coeffs.iter_mut().enumerate() {
            let keep = self.max_degree.saturating_sub(i);
            let mut t = a.zero_like();
            for d in 0..=keep.min(a.dimension()) {
                t = t.plus(&a.part(d));
            }
            *a = t;
        }
        self
    }
}

/// `(h^0, h^1, chi)` of `O(a_1) + ... + O(a_k)` on `P^1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SplittingCohomology {
    pub h0: i64,
    pub h1: i64,
    pub chi: i64,
}

pub fn splitting_cohomology(a: &[i64]) -> SplittingCohomology {
    let h0 = a.iter().map(|&x| (1 + x).max(0)).sum();
    let h1 = a.iter().map(|&x| (-1 - x).max(0)).sum();
    let chi = a.len() as i64 + a.iter().sum::<i64>();
    SplittingCohomology { h0, h1, chi }
}

/// `c_n` of the cotangent bundle of `P^n`: the coefficient of `h^n` in
/// `(1 - h)^{n+1}`.
pub fn projective_space_cotangent_top(n: usize) -> Result<ExactRational> {
    if n == 0 {
        return Err(Error::Precondition("need n >= 1".into()));
    }
    // expand (1 - h)^{n+1} one factor at a time
    let mut poly = vec![int(1)];
    for _ in 0..=n {
        let mut next = vec![int(0); poly.len() + 1];
        for (i, c) in poly.iter().enumerate() {
            next[i] += c;
            next[i + 1] -= c;
        }
        poly = next;
    }
    Ok(poly[n].clone())
}

/// Chern vector of the pullback of a base bundle to `P(E)`.
pub fn pullback(bundle: &std::sync::Arc<ProjBundle>, c: &ChernVector<GrassmannClass>) -> ChernVector<ProjBundleClass> {
    c.map(|a| ProjBundleClass::from_base(bundle, a))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lines() {
        assert_eq!(count_lines_on_hypersurface(3, 3).unwrap(), int(27));
        assert_eq!(count_lines_on_hypersurface(5, 4).unwrap(), int(2875));
        assert_eq!(count_lines_on_hypersurface(1, 1), Err(Error::DimensionMismatch { rank: 2, dimension: 0 }));
    }

    #[test]
    fn conics() {
        let c = conic_count().unwrap();
        assert_eq!((c.rank, c.dimension), (11, 11));
        assert_eq!(c.via_relation, int(609250));
        assert_eq!(c.via_segre, int(609250));
    }

    #[test]
    fn cohomology_of_splittings() {
        assert_eq!(splitting_cohomology(&[2, -1, -1]), SplittingCohomology { h0: 3, h1: 0, chi: 3 });
        assert_eq!(splitting_cohomology(&[6, -3, -3]), SplittingCohomology { h0: 7, h1: 4, chi: 3 });
        assert_eq!(splitting_cohomology(&[]), SplittingCohomology { h0: 0, h1: 0, chi: 0 });
    }

    #[test]
    fn cotangent_tops() {
        assert_eq!(projective_space_cotangent_top(2).unwrap(), int(3));
        assert_eq!(projective_space_cotangent_top(5).unwrap(), int(-6));
        assert_eq!(projective_space_cotangent_top(1).unwrap(), int(-2));
    }
}
