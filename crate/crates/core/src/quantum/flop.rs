use std::collections::BTreeMap;

use num_traits::Zero;

use super::coeff::CurveClass;
use super::table::sorted;
use crate::error::{Error, Result};
use crate::exact_series::{int, ExactRational, LaurentElement, LaurentFraction};

/// Calabi–Yau threefold data over divisors `D_0..D_{r-1}` whose dual basis
/// is the curve lattice: triple intersections and instanton numbers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cy3Model {
    rank: usize,
    kappa: BTreeMap<[usize; 3], ExactRational>,
    instantons: BTreeMap<CurveClass, ExactRational>,
}

impl Cy3Model {
    pub fn new(
        rank: usize,
        kappa: impl IntoIterator<Item = ([usize; 3], ExactRational)>,
        instantons: impl IntoIterator<Item = (CurveClass, ExactRational)>,
    ) -> Result<Self> {
        let mut model = Cy3Model { rank, kappa: BTreeMap::new(), instantons: BTreeMap::new() };
        for ([i, j, k], v) in kappa {
            if i.max(j).max(k) >= rank {
                return Err(Error::Malformed(format!("divisor index out of range in ({i}, {j}, {k})")));
            }
            if !v.is_zero() {
                model.kappa.insert(sorted(i, j, k), v);
            }
        }
        for (eta, n) in instantons {
            if eta.rank() != rank || eta.is_zero() {
                return Err(Error::Malformed(format!("curve class {eta} is not a nonzero class of rank {rank}")));
            }
            if !n.is_zero() {
                model.instantons.insert(eta, n);
            }
        }
        Ok(model)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn kappa(&self, i: usize, j: usize, k: usize) -> ExactRational {
        self.kappa.get(&sorted(i, j, k)).cloned().unwrap_or_else(ExactRational::zero)
    }

    pub fn instantons(&self) -> &BTreeMap<CurveClass, ExactRational> {
        &self.instantons
    }

    /// `<D_i D_j D_k>` written as a constant plus multiples of
    /// `L(eta) = q^eta / (1 - q^eta)` with every `eta` lexicographically
    /// positive, using `L(-eta) = -1 - L(eta)`.
    pub fn canonical_correlator(&self, i: usize, j: usize, k: usize) -> (ExactRational, BTreeMap<CurveClass, ExactRational>) {
        let mut constant = self.kappa(i, j, k);
        let mut terms: BTreeMap<CurveClass, ExactRational> = BTreeMap::new();
        for (eta, n) in &self.instantons {
            let c = n * int(eta.0[i]) * int(eta.0[j]) * int(eta.0[k]);
            if c.is_zero() {
                continue;
            }
            let (key, c) = if eta.is_negative() {
                constant -= &c;
                (eta.neg(), -c)
            } else {
                (eta.clone(), c)
            };
            let slot = terms.entry(key.clone()).or_insert_with(ExactRational::zero);
            *slot += c;
            if slot.is_zero() {
                terms.remove(&key);
            }
        }
        (constant, terms)
    }
}

/// Flop along a primitive `(-1,-1)` class `gamma`: triple intersections
/// shift by `-(D_i.g)(D_j.g)(D_k.g) n_gamma` and the instanton stored at
/// `gamma` moves to `-gamma`.
pub fn flop_transform(model: &Cy3Model, gamma: &CurveClass, n_gamma: &ExactRational) -> Result<Cy3Model> {
    if gamma.rank() != model.rank {
        return Err(Error::Malformed(format!("class {gamma} does not have rank {}", model.rank)));
    }
    if !gamma.is_primitive() {
        return Err(Error::NotPrimitive(gamma.0.clone()));
    }
    let r = model.rank;
    let mut kappa = Vec::new();
    for i in 0..r {
        for j in i..r {
            for k in j..r {
                let shift = n_gamma * int(gamma.0[i] * gamma.0[j] * gamma.0[k]);
                kappa.push(([i, j, k], model.kappa(i, j, k) - shift));
            }
        }
    }
    let mut instantons = model.instantons.clone();
    if let Some(n) = instantons.remove(gamma) {
        instantons.insert(gamma.neg(), n);
    }
    Cy3Model::new(r, kappa, instantons)
}

/// Whether every divisor correlator of `model` equals that of its flop,
/// compared exactly as rational functions in canonical form.
pub fn check_flop_invariance(model: &Cy3Model, gamma: &CurveClass, n_gamma: &ExactRational) -> Result<bool> {
    if !flop_identity_holds() {
        return Err(Error::Invariant("q/(1-q) + 1/(q-1) != -1".into()));
    }
    let flopped = flop_transform(model, gamma, n_gamma)?;
    let r = model.rank;
    for i in 0..r {
        for j in i..r {
            for k in j..r {
                if model.canonical_correlator(i, j, k) != flopped.canonical_correlator(i, j, k) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// `q/(1-q) + 1/(q-1) = -1` as an identity of rational functions; this is
/// the rewriting behind [`Cy3Model::canonical_correlator`].
pub fn flop_identity_holds() -> bool {
    let one = ExactRational::from_integer(1.into());
    let q = LaurentElement::monomial(1, one.clone());
    let second = LaurentFraction::new(LaurentElement::one(), q.sub(&LaurentElement::one())).expect("q - 1 is nonzero");
    let lhs = LaurentFraction::multiple_cover(1).add(&second);
    let rhs = LaurentFraction::from_element(LaurentElement::monomial(0, -one.clone()));
    // the same identity in the flopped chart: L(-1) = -1 - L(1)
    let flipped = LaurentFraction::multiple_cover(-1);
    let expected = rhs.sub(&LaurentFraction::multiple_cover(1));
    lhs.equals(&rhs) && flipped.equals(&expected)
}

/// Three-divisor model with the flopping class `(a, b, -c)` carrying
/// `n_gamma`, plus a few Gamma-independent classes.
pub fn synthetic_flop_model(a: i64, b: i64, c: i64, n_gamma: &ExactRational) -> Result<(Cy3Model, CurveClass)> {
    let gamma = CurveClass(vec![a, b, -c]);
    let kappa = [
        ([0, 0, 0], int(5)),
        ([0, 0, 1], int(2)),
        ([0, 1, 2], int(1)),
        ([1, 1, 2], int(3)),
        ([2, 2, 2], int(-4)),
    ];
    let instantons = [
        (gamma.clone(), n_gamma.clone()),
        (CurveClass(vec![1, 0, 0]), int(2875)),
        (CurveClass(vec![0, 1, 1]), int(-2)),
        (CurveClass(vec![2, 1, 0]), int(7)),
    ];
    Ok((Cy3Model::new(3, kappa, instantons)?, gamma))
}
