use std::collections::BTreeMap;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::coeff::CurveClass;
use crate::error::{Error, Result};
use crate::exact_series::{format_rational, parse_rational, ExactRational};

/// Invariants `Phi_eta(z_i, z_j, z_k)` of one curve class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GWClass {
    pub eta: CurveClass,
    /// `-K . eta`.
    pub minus_k: i64,
    entries: BTreeMap<[usize; 3], ExactRational>,
}

impl GWClass {
    pub fn entries(&self) -> impl Iterator<Item = (&[usize; 3], &ExactRational)> {
        self.entries.iter()
    }
}

/// Genus-zero three-point Gromov–Witten invariants on a graded basis,
/// filtered by the dimension rule.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GWTable {
    dimension: usize,
    degrees: Vec<u32>,
    rank: usize,
    classes: Vec<GWClass>,
}

pub(crate) fn sorted(i: usize, j: usize, k: usize) -> [usize; 3] {
    let mut key = [i, j, k];
    key.sort_unstable();
    key
}

impl GWTable {
    /// Empty table for complex dimension `n`, basis real degrees `degrees`
    /// and class lattice of rank `rank`.
    pub fn new(dimension: usize, degrees: Vec<u32>, rank: usize) -> Result<Self> {
        if let Some(d) = degrees.iter().find(|&&d| d as usize > 2 * dimension) {
            return Err(Error::Grading(format!("basis degree {d} exceeds 2n = {}", 2 * dimension)));
        }
        Ok(GWTable { dimension, degrees, rank, classes: Vec::new() })
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn classes(&self) -> &[GWClass] {
        &self.classes
    }

    fn class_index(&mut self, eta: &CurveClass, minus_k: i64) -> Result<usize> {
        if eta.rank() != self.rank {
            return Err(Error::Malformed(format!("class {eta} does not have rank {}", self.rank)));
        }
        if eta.is_zero() {
            return Err(Error::Grading("the zero class carries the classical product, not a GW entry".into()));
        }
        if minus_k > 2 * self.dimension as i64 {
            return Err(Error::Grading(format!("-K.eta = {minus_k} exceeds 2n = {}", 2 * self.dimension)));
        }
        if let Some(i) = self.classes.iter().position(|c| &c.eta == eta) {
            if self.classes[i].minus_k != minus_k {
                return Err(Error::Malformed(format!("conflicting -K.eta for class {eta}")));
            }
            return Ok(i);
        }
        self.classes.push(GWClass { eta: eta.clone(), minus_k, entries: BTreeMap::new() });
        Ok(self.classes.len() - 1)
    }

    /// Records `Phi_eta(z_i, z_j, z_k) = value` (and its permutations).
    /// Nonzero values must satisfy `l_i + l_j + l_k = 2n + 2(-K.eta)` with
    /// every `l >= 2`.
    pub fn set(&mut self, eta: &CurveClass, minus_k: i64, i: usize, j: usize, k: usize, value: ExactRational) -> Result<()> {
        let b = self.degrees.len();
        if i >= b || j >= b || k >= b {
            return Err(Error::Malformed(format!("basis index out of range in ({i}, {j}, {k})")));
        }
        let idx = self.class_index(eta, minus_k)?;
        if value.is_zero() {
            self.classes[idx].entries.remove(&sorted(i, j, k));
            return Ok(());
        }
        let l = [self.degrees[i], self.degrees[j], self.degrees[k]];
        if l.iter().any(|&x| x < 2) {
            return Err(Error::Grading(format!("Phi_{eta} on ({i}, {j}, {k}) involves a class of degree < 2")));
        }
        let expected = 2 * self.dimension as i64 + 2 * minus_k;
        if l.iter().map(|&x| x as i64).sum::<i64>() != expected {
            return Err(Error::Grading(format!(
                "Phi_{eta} on ({i}, {j}, {k}): degrees sum to {}, need {expected}",
                l.iter().sum::<u32>()
            )));
        }
        self.classes[idx].entries.insert(sorted(i, j, k), value);
        Ok(())
    }

    pub fn get(&self, eta: &CurveClass, i: usize, j: usize, k: usize) -> ExactRational {
        self.classes
            .iter()
            .find(|c| &c.eta == eta)
            .and_then(|c| c.entries.get(&sorted(i, j, k)).cloned())
            .unwrap_or_else(ExactRational::zero)
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let repr: TableRepr = serde_json::from_value(v.clone()).map_err(|e| Error::Malformed(e.to_string()))?;
        let rank = repr.classes.first().map_or(0, |c| c.eta.len());
        let mut table = GWTable::new(repr.dimension, repr.basis.iter().map(|b| b.degree).collect(), rank)?;
        for c in repr.classes {
            let eta = CurveClass(c.eta);
            table.class_index(&eta, c.minus_k_dot)?;
            for (i, j, k, v) in c.entries {
                table.set(&eta, c.minus_k_dot, i, j, k, parse_rational(&v)?)?;
            }
        }
        Ok(table)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let repr = TableRepr {
            dimension: self.dimension,
            basis: self.degrees.iter().map(|&degree| BasisRepr { degree }).collect(),
            classes: self
                .classes
                .iter()
                .map(|c| ClassRepr {
                    eta: c.eta.0.clone(),
                    minus_k_dot: c.minus_k,
                    entries: c.entries.iter().map(|(&[i, j, k], v)| (i, j, k, format_rational(v))).collect(),
                })
                .collect(),
        };
        serde_json::to_value(repr).expect("table serializes")
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TableRepr {
    dimension: usize,
    basis: Vec<BasisRepr>,
    classes: Vec<ClassRepr>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct BasisRepr {
    degree: u32,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ClassRepr {
    eta: Vec<i64>,
    #[serde(rename = "minusK_dot")]
    minus_k_dot: i64,
    entries: Vec<(usize, usize, usize, String)>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_series::int;

    #[test]
    fn grading_filter() {
        let mut t = GWTable::new(2, vec![0, 2, 4], 1).unwrap();
        let line = CurveClass(vec![1]);
        // CP^2: Phi_L(z, z^2, z^2) = 1 with -K.L = 3
        t.set(&line, 3, 1, 2, 2, int(1)).unwrap();
        assert_eq!(t.get(&line, 2, 1, 2), int(1));
        assert!(matches!(t.set(&line, 3, 1, 1, 2, int(1)), Err(Error::Grading(_))));
        assert!(matches!(t.set(&line, 3, 0, 2, 2, int(1)), Err(Error::Grading(_))));
        assert!(matches!(t.set(&CurveClass(vec![2]), 6, 2, 2, 2, int(1)), Err(Error::Grading(_))));
    }

    #[test]
    fn json_roundtrip() {
        let v = serde_json::json!({
            "dimension": 3,
            "basis": [{"degree": 0}, {"degree": 2}, {"degree": 4}, {"degree": 6}],
            "classes": [{"eta": [1], "minusK_dot": 0, "entries": [[1, 1, 1, "2875"]]}]
        });
        let t = GWTable::from_json(&v).unwrap();
        assert_eq!(t.get(&CurveClass(vec![1]), 1, 1, 1), int(2875));
        assert_eq!(GWTable::from_json(&t.to_json()).unwrap(), t);
        let bad = serde_json::json!({
            "dimension": 3,
            "basis": [{"degree": 0}, {"degree": 2}],
            "classes": [{"eta": [1], "minusK_dot": 0, "entries": [[0, 1, 1, "1"]]}]
        });
        assert!(GWTable::from_json(&bad).is_err());
    }
}
