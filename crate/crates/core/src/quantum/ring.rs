use std::collections::BTreeMap;
use std::sync::Mutex;

use num_traits::Zero;

use super::coeff::{Coefficient, CoefficientRingPolicy, CurveClass};
use super::table::{sorted, GWTable};
use crate::error::{Error, Result};
use crate::exact_series::ExactRational;
use crate::matrix::Matrix;

/// `sum_i c_i z_i` with coefficients in the coefficient ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuantumElement {
    coeffs: Vec<Coefficient>,
}

impl QuantumElement {
    pub fn zero(size: usize) -> Self {
        QuantumElement { coeffs: vec![Coefficient::zero(); size] }
    }

    pub fn from_coeffs(coeffs: Vec<Coefficient>) -> Self {
        QuantumElement { coeffs }
    }

    pub fn coeffs(&self) -> &[Coefficient] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &Coefficient {
        &self.coeffs[i]
    }

    pub fn add(&self, other: &Self) -> Self {
        QuantumElement { coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a.add(b)).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        QuantumElement { coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a.sub(b)).collect() }
    }

    pub fn scale(&self, c: &Coefficient, policy: &CoefficientRingPolicy) -> Self {
        QuantumElement { coeffs: self.coeffs.iter().map(|a| a.mul(c, policy)).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Coefficient::is_zero)
    }
}

/// Quantum cohomology ring: classical triple intersections, GW invariants
/// and a coefficient-ring policy.
#[derive(Debug)]
pub struct QuantumRing {
    table: GWTable,
    classical: BTreeMap<[usize; 3], ExactRational>,
    pairing: Matrix,
    inverse_pairing: Matrix,
    policy: CoefficientRingPolicy,
    identity: usize,
    products: Mutex<BTreeMap<(usize, usize), QuantumElement>>,
}

impl Clone for QuantumRing {
    fn clone(&self) -> Self {
        QuantumRing {
            table: self.table.clone(),
            classical: self.classical.clone(),
            pairing: self.pairing.clone(),
            inverse_pairing: self.inverse_pairing.clone(),
            policy: self.policy.clone(),
            identity: self.identity,
            products: Mutex::new(BTreeMap::new()),
        }
    }
}

impl QuantumRing {
    /// `classical` lists triple intersections `(z_i z_j z_k)[M]` by any one
    /// ordering of the indices. The basis must contain exactly one class of
    /// degree 0 (the identity), and the cup pairing must be nondegenerate.
    pub fn new(
        table: GWTable,
        classical: impl IntoIterator<Item = ([usize; 3], ExactRational)>,
        policy: CoefficientRingPolicy,
    ) -> Result<Self> {
        policy.validate(table.rank())?;
        let degrees = table.degrees().to_vec();
        let b = degrees.len();
        let n2 = 2 * table.dimension() as u32;
        let mut cl = BTreeMap::new();
        for ([i, j, k], v) in classical {
            if i >= b || j >= b || k >= b {
                return Err(Error::Malformed(format!("classical index out of range in ({i}, {j}, {k})")));
            }
            if v.is_zero() {
                continue;
            }
            if degrees[i] + degrees[j] + degrees[k] != n2 {
                return Err(Error::Grading(format!("classical ({i}, {j}, {k}) has total degree != 2n")));
            }
            cl.insert(sorted(i, j, k), v);
        }
        let units: Vec<usize> = (0..b).filter(|&i| degrees[i] == 0).collect();
        let [identity] = units[..] else {
            return Err(Error::Malformed("basis needs exactly one degree-0 class".into()));
        };
        for c in table.classes() {
            if !policy.contains(&c.eta) {
                return Err(Error::Policy(format!("class {} lies outside the coefficient semigroup", c.eta)));
            }
        }
        let pairing = Matrix::from_rows(
            (0..b)
                .map(|i| (0..b).map(|j| cl.get(&sorted(identity, i, j)).cloned().unwrap_or_else(ExactRational::zero)).collect())
                .collect(),
        );
        let inverse_pairing =
            pairing.inverse().map_err(|_| Error::Invariant("cup pairing is degenerate (not a Frobenius algebra)".into()))?;
        Ok(QuantumRing { table, classical: cl, pairing, inverse_pairing, policy, identity, products: Mutex::new(BTreeMap::new()) })
    }

    pub fn table(&self) -> &GWTable {
        &self.table
    }

    pub fn policy(&self) -> &CoefficientRingPolicy {
        &self.policy
    }

    pub fn size(&self) -> usize {
        self.table.degrees().len()
    }

    pub fn rank(&self) -> usize {
        self.table.rank()
    }

    pub fn pairing(&self) -> &Matrix {
        &self.pairing
    }

    pub fn classical(&self, i: usize, j: usize, k: usize) -> ExactRational {
        self.classical.get(&sorted(i, j, k)).cloned().unwrap_or_else(ExactRational::zero)
    }

    pub fn identity_index(&self) -> usize {
        self.identity
    }

    pub fn basis(&self, i: usize) -> QuantumElement {
        let mut e = QuantumElement::zero(self.size());
        e.coeffs[i] = Coefficient::constant(self.rank(), ExactRational::from_integer(1.into()));
        e
    }

    pub fn identity(&self) -> QuantumElement {
        self.basis(self.identity)
    }

    /// `q^eta` times the identity.
    pub fn q_power(&self, eta: &CurveClass) -> Result<QuantumElement> {
        let mut e = QuantumElement::zero(self.size());
        e.coeffs[self.identity] = self.policy.monomial(eta, ExactRational::from_integer(1.into()))?;
        Ok(e)
    }

    /// `<z_i z_j z_k> = (z_i z_j z_k)[M] + sum_eta Phi_eta(z_i, z_j, z_k) w_eta`
    /// with `w_eta = q^eta` if `-K.eta > 0` and `q^eta / (1 - q^eta)` if
    /// `-K.eta = 0`.
    pub fn correlator(&self, i: usize, j: usize, k: usize) -> Result<Coefficient> {
        let mut out = Coefficient::constant(self.rank(), self.classical(i, j, k));
        for c in self.table.classes() {
            let phi = self.table.get(&c.eta, i, j, k);
            if phi.is_zero() {
                continue;
            }
            let w = if c.minus_k > 0 { self.policy.monomial(&c.eta, phi)? } else { self.policy.lambert(&c.eta, phi)? };
            out = out.add(&w);
        }
        Ok(out)
    }

    /// `z_i * z_j = sum_{a,b} <z_i z_j z_a> g^{ab} z_b`.
    pub fn basis_product(&self, i: usize, j: usize) -> Result<QuantumElement> {
        let key = (i.min(j), i.max(j));
        if let Some(p) = self.products.lock().expect("poisoned").get(&key) {
            return Ok(p.clone());
        }
        let b = self.size();
        let mut out = QuantumElement::zero(b);
        for a in 0..b {
            let corr = self.correlator(i, j, a)?;
            if corr.is_zero() {
                continue;
            }
            for (t, slot) in out.coeffs.iter_mut().enumerate() {
                let g = &self.inverse_pairing[(a, t)];
                if !g.is_zero() {
                    *slot = slot.add(&corr.scale(g));
                }
            }
        }
        self.products.lock().expect("poisoned").insert(key, out.clone());
        Ok(out)
    }

    pub fn power(&self, x: &QuantumElement, k: u32) -> Result<QuantumElement> {
        let mut acc = self.identity();
        for _ in 0..k {
            acc = quantum_product(&acc, x, self)?;
        }
        Ok(acc)
    }

    /// `epsilon(x) = <x 1 1>`, the expectation function.
    pub fn expectation(&self, x: &QuantumElement) -> Result<Coefficient> {
        let mut out = Coefficient::zero();
        for (i, c) in x.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            out = out.add(&c.mul(&self.correlator(i, self.identity, self.identity)?, &self.policy));
        }
        Ok(out)
    }

    /// Bilinear cup pairing extended over the coefficient ring.
    pub fn pair(&self, x: &QuantumElement, y: &QuantumElement) -> Coefficient {
        let mut out = Coefficient::zero();
        for (i, a) in x.coeffs.iter().enumerate() {
            for (j, b) in y.coeffs.iter().enumerate() {
                let g = &self.pairing[(i, j)];
                if !g.is_zero() && !a.is_zero() && !b.is_zero() {
                    out = out.add(&a.mul(b, &self.policy).scale(g));
                }
            }
        }
        out
    }
}

pub fn quantum_product(x: &QuantumElement, y: &QuantumElement, ring: &QuantumRing) -> Result<QuantumElement> {
    let b = ring.size();
    if x.coeffs.len() != b || y.coeffs.len() != b {
        return Err(Error::Precondition(format!("elements must have {b} components")));
    }
    let mut out = QuantumElement::zero(b);
    for (i, a) in x.coeffs.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        for (j, c) in y.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let scalar = a.mul(c, &ring.policy);
            out = out.add(&ring.basis_product(i, j)?.scale(&scalar, &ring.policy));
        }
    }
    Ok(out)
}

/// `<x y z>`, trilinear extension of the basis correlators.
pub fn correlation(x: &QuantumElement, y: &QuantumElement, z: &QuantumElement, ring: &QuantumRing) -> Result<Coefficient> {
    let mut out = Coefficient::zero();
    let p = &ring.policy;
    for (i, a) in x.coeffs.iter().enumerate() {
        for (j, b) in y.coeffs.iter().enumerate() {
            for (k, c) in z.coeffs.iter().enumerate() {
                if a.is_zero() || b.is_zero() || c.is_zero() {
                    continue;
                }
                let s = a.mul(b, p).mul(c, p);
                out = out.add(&ring.correlator(i, j, k)?.mul(&s, p));
            }
        }
    }
    Ok(out)
}

/// Largest coefficient of `(x*y)*z - x*(y*z)` over basis triples, among
/// terms of degree at most `truncation`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DefectReport {
    pub max_norm: ExactRational,
    pub worst: Option<[usize; 3]>,
    pub truncation: ExactRational,
}

impl DefectReport {
    pub fn is_zero(&self) -> bool {
        self.max_norm.is_zero()
    }
}

pub fn check_associativity(ring: &QuantumRing, truncation: &ExactRational) -> Result<DefectReport> {
    let b = ring.size();
    let mut report = DefectReport { max_norm: ExactRational::zero(), worst: None, truncation: truncation.clone() };
    for i in 0..b {
        for j in 0..b {
            let ij = ring.basis_product(i, j)?;
            for k in 0..b {
                let left = quantum_product(&ij, &ring.basis(k), ring)?;
                let right = quantum_product(&ring.basis(i), &ring.basis_product(j, k)?, ring)?;
                let diff = left.sub(&right);
                for c in diff.coeffs() {
                    let m = c.max_norm(&ring.policy, truncation);
                    if m > report.max_norm {
                        report.max_norm = m;
                        report.worst = Some([i, j, k]);
                    }
                }
            }
        }
    }
    Ok(report)
}
