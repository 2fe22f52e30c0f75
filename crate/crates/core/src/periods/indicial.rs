use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::operator::{poly_mul, trim_poly, ThetaOperator};
use crate::error::{Error, Result};
use crate::exact_series::{int, ExactRational};

/// Where the local exponents are computed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Location {
    Zero,
    Finite(ExactRational),
    Infinity,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndicialData {
    pub location: Location,
    /// Indicial polynomial in ascending powers of the exponent.
    pub polynomial: Vec<ExactRational>,
    /// Roots with multiplicity, sorted ascending.
    pub exponents: Vec<ExactRational>,
}

/// Conifold point `z = N^{-N}` of the degree-`N` family.
pub fn conifold_point(degree: u32) -> ExactRational {
    int(degree as i64).pow(degree as i32).recip()
}

/// Local exponents of `op` at `location`, with the Fuchs condition checked.
pub fn indicial_exponents(op: &ThetaOperator, location: &Location) -> Result<IndicialData> {
    let polynomial = match location {
        Location::Zero => theta_indicial(&theta_coefficients(op))?,
        Location::Infinity => {
            // w = 1/z: theta_z = -theta_w and p_k(z) = w^{-D} (w^D p_k(1/w)).
            let d = op.z_degree();
            let coeffs: Vec<Vec<ExactRational>> = (0..=op.order())
                .map(|k| {
                    let p = op.coefficient(k);
                    let sign = if k % 2 == 0 { int(1) } else { int(-1) };
                    (0..=d)
                        .map(|i| p.get(d - i).map_or_else(ExactRational::zero, |c| c * &sign))
                        .collect()
                })
                .collect();
            theta_indicial(&coeffs)?
        }
        Location::Finite(z0) if z0.is_zero() => theta_indicial(&theta_coefficients(op))?,
        Location::Finite(z0) => finite_indicial(op, z0)?,
    };
    let exponents = rational_roots(&polynomial)?;
    Ok(IndicialData { location: location.clone(), polynomial, exponents })
}

fn theta_coefficients(op: &ThetaOperator) -> Vec<Vec<ExactRational>> {
    (0..=op.order()).map(|k| op.coefficient(k).to_vec()).collect()
}

fn valuation(p: &[ExactRational]) -> Option<usize> {
    p.iter().position(|c| !c.is_zero())
}

/// Indicial polynomial at the origin of `sum_k p_k(x) theta_x^k`.
fn theta_indicial(coeffs: &[Vec<ExactRational>]) -> Result<Vec<ExactRational>> {
    let order = coeffs.len() - 1;
    let lead = valuation(&coeffs[order]).ok_or_else(|| Error::IrregularPoint("zero leading coefficient".into()))?;
    for (k, p) in coeffs.iter().enumerate() {
        if let Some(v) = valuation(p) {
            if v < lead {
                return Err(Error::IrregularPoint(format!("coefficient of theta^{k} vanishes to lower order")));
            }
        }
    }
    Ok(trim_poly(
        coeffs.iter().map(|p| p.get(lead).cloned().unwrap_or_else(ExactRational::zero)).collect(),
    ))
}

/// Indicial polynomial at a finite nonzero point, after rewriting
/// `theta^k = sum_i S(k, i) z^i D^i` with `D = d/dz` and translating to
/// `s = z - z0`.
fn finite_indicial(op: &ThetaOperator, z0: &ExactRational) -> Result<Vec<ExactRational>> {
    let order = op.order();
    let stirling = stirling2(order);
    // a_i(z) = sum_k p_k(z) S(k, i) z^i
    let mut d_coeffs: Vec<Vec<ExactRational>> = vec![Vec::new(); order + 1];
    for (k, row) in stirling.iter().enumerate() {
        for (i, s) in row.iter().enumerate() {
            if s.is_zero() {
                continue;
            }
            let mut zi = vec![ExactRational::zero(); i + 1];
            zi[i] = int(1);
            let term: Vec<ExactRational> = poly_mul(op.coefficient(k), &zi).iter().map(|c| c * s).collect();
            d_coeffs[i] = add_poly(&d_coeffs[i], &term);
        }
    }
    let shifted: Vec<Vec<ExactRational>> = d_coeffs.iter().map(|p| translate(p, z0)).collect();
    // Fuchs: ord(a_i) - i is minimal at i = order.
    let v_top = valuation(&shifted[order])
        .ok_or_else(|| Error::IrregularPoint("leading coefficient vanishes identically".into()))?
        as i64
        - order as i64;
    let mut poly = vec![ExactRational::zero(); order + 1];
    for (i, a) in shifted.iter().enumerate() {
        let Some(v) = valuation(a) else { continue };
        let v = v as i64 - i as i64;
        if v < v_top {
            return Err(Error::IrregularPoint(format!("coefficient of D^{i} violates the Fuchs condition")));
        }
        if v == v_top {
            // rho (rho - 1) ... (rho - i + 1)
            let mut falling = vec![int(1)];
            for r in 0..i as i64 {
                falling = poly_mul(&falling, &[int(-r), int(1)]);
            }
            let lc = &a[(v + i as i64) as usize];
            poly = add_poly(&poly, &falling.iter().map(|c| c * lc).collect::<Vec<_>>());
        }
    }
    Ok(trim_poly(poly))
}

fn add_poly(a: &[ExactRational], b: &[ExactRational]) -> Vec<ExactRational> {
    let n = a.len().max(b.len());
    (0..n)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_else(ExactRational::zero);
            let y = b.get(i).cloned().unwrap_or_else(ExactRational::zero);
            x + y
        })
        .collect()
}

/// `p(s + z0)` as a polynomial in `s`.
fn translate(p: &[ExactRational], z0: &ExactRational) -> Vec<ExactRational> {
    let mut out: Vec<ExactRational> = Vec::new();
    for c in p.iter().rev() {
        out = poly_mul(&out, &[z0.clone(), int(1)]);
        if out.is_empty() {
            out.push(ExactRational::zero());
        }
        out[0] += c;
    }
    out
}

fn stirling2(n: usize) -> Vec<Vec<ExactRational>> {
    let mut s = vec![vec![ExactRational::zero(); n + 1]; n + 1];
    s[0][0] = int(1);
    for k in 1..=n {
        for i in 1..=k {
            s[k][i] = &s[k - 1][i - 1] + int(i as i64) * &s[k - 1][i];
        }
    }
    s
}

/// All roots of a polynomial over Q, with multiplicity, provided every root
/// is rational. Uses the rational root test with repeated deflation.
pub fn rational_roots(poly: &[ExactRational]) -> Result<Vec<ExactRational>> {
    let mut p = integer_primitive(poly);
    let mut roots = Vec::new();
    while p.first().is_some_and(Zero::is_zero) && p.len() > 1 {
        p.remove(0);
        roots.push(ExactRational::zero());
    }
    while p.len() > 1 {
        let lead = p.last().expect("nonempty").abs();
        let constant = p[0].abs();
        let mut found = None;
        'search: for q in divisors(&lead) {
            for num in divisors(&constant) {
                for sign in [1, -1] {
                    let cand = ExactRational::new(&num * BigInt::from(sign), q.clone());
                    if evaluate_int(&p, &cand).is_zero() {
                        found = Some(cand);
                        break 'search;
                    }
                }
            }
        }
        let Some(r) = found else {
            return Err(Error::IrrationalExponents);
        };
        p = deflate(&p, &r);
        roots.push(r);
    }
    roots.sort();
    Ok(roots)
}

fn integer_primitive(poly: &[ExactRational]) -> Vec<BigInt> {
    let poly = trim_poly(poly.to_vec());
    let lcm = poly.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = poly.iter().map(|c| (c * ExactRational::from_integer(lcm.clone())).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if g.is_zero() {
        return ints;
    }
    ints.into_iter().map(|c| c / &g).collect()
}

fn evaluate_int(p: &[BigInt], x: &ExactRational) -> ExactRational {
    p.iter().rev().fold(ExactRational::zero(), |acc, c| acc * x + ExactRational::from_integer(c.clone()))
}

/// Divides by `(q x - p)` for the root `x = p/q`, keeping integer coefficients.
fn deflate(poly: &[BigInt], root: &ExactRational) -> Vec<BigInt> {
    let rq: Vec<ExactRational> = poly.iter().map(|c| ExactRational::from_integer(c.clone())).collect();
    let n = rq.len() - 1;
    let mut out = vec![ExactRational::zero(); n];
    let mut carry = ExactRational::zero();
    for i in (0..=n).rev() {
        let v = &rq[i] + &carry * root;
        if i > 0 {
            out[i - 1] = v.clone();
        }
        carry = v;
    }
    integer_primitive(&out)
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    if n.is_zero() {
        return vec![BigInt::one()];
    }
    let mut factors: Vec<(BigInt, u32)> = Vec::new();
    let mut rest = n.clone();
    let mut d = BigInt::from(2);
    while &d * &d <= rest {
        let mut e = 0;
        while (&rest % &d).is_zero() {
            rest /= &d;
            e += 1;
        }
        if e > 0 {
            factors.push((d.clone(), e));
        }
        d += 1;
        if d.to_u64().is_none() {
            break;
        }
    }
    if rest > BigInt::one() {
        factors.push((rest, 1));
    }
    let mut divs = vec![BigInt::one()];
    for (p, e) in factors {
        let mut next = Vec::with_capacity(divs.len() * (e as usize + 1));
        for d in &divs {
            let mut pk = BigInt::one();
            for _ in 0..=e {
                next.push(d * &pk);
                pk *= &p;
            }
        }
        divs = next;
    }
    divs.sort();
    debug_assert!(divs.iter().all(|d| d.sign() == Sign::Plus));
    divs
}
