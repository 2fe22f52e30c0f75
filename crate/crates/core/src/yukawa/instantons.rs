use super::reduction::{normalization, CouplingSet};
use crate::error::{Error, Result};
use crate::exact_series::{lambert_invert, lambert_synthesize, ExactRational, LambertInversion, PowerSeries};

/// Instanton numbers extracted from one coupling `Y^a_b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InstantonEntry {
    pub a: usize,
    pub b: usize,
    pub inversion: LambertInversion,
}

impl InstantonEntry {
    pub fn label(&self) -> String {
        format!("Y^{}_{}", self.a, self.b)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InstantonTable {
    pub dimension: usize,
    pub entries: Vec<InstantonEntry>,
}

impl InstantonTable {
    pub fn all_integral(&self) -> bool {
        self.entries.iter().all(|e| e.inversion.integral)
    }

    pub fn entry(&self, a: usize, b: usize) -> Option<&InstantonEntry> {
        self.entries.iter().find(|e| e.a == a && e.b == b)
    }

    /// Triples `(a, b, n - a - b)` with their numbers, the A-model input
    /// for a rank-one quantum ring on `1, H, ..., H^n`.
    pub fn gw_entries(&self) -> Vec<([usize; 3], Vec<ExactRational>)> {
        self.entries
            .iter()
            .map(|e| {
                let mut key = [e.a, e.b, self.dimension - e.a - e.b];
                key.sort_unstable();
                (key, e.inversion.numbers.clone())
            })
            .collect()
    }
}

/// Number of 1's among `{a, b, n - a - b}`: each codimension-one linear
/// section meets a degree-`d` curve in `d` points.
pub fn degree_power(dimension: usize, a: usize, b: usize) -> u32 {
    let c = dimension as i64 - a as i64 - b as i64;
    [a as i64, b as i64, c].iter().filter(|&&x| x == 1).count() as u32
}

/// Inverts every independent coupling: `Y^1_j` for `1 <= j <= (n-1)/2`
/// (the rest follow by symmetry) and `Y^2_2` when present.
pub fn extract_instantons(couplings: &CouplingSet) -> Result<InstantonTable> {
    let n = couplings.dimension();
    let mut targets: Vec<(usize, usize, &PowerSeries)> = (1..=(n - 1) / 2).map(|j| (1, j, couplings.y1(j))).collect();
    if let Some(y22) = couplings.secondary() {
        targets.push((2, 2, y22));
    }
    let shift = normalization(n);
    let mut entries = Vec::with_capacity(targets.len());
    for (a, b, y) in targets {
        let c = y.add_constant(&-shift.clone());
        let inversion = lambert_invert(&c, degree_power(n, a, b))?;
        entries.push(InstantonEntry { a, b, inversion });
    }
    Ok(InstantonTable { dimension: n, entries })
}

/// Rebuilds `(n+2) + sum_d n_d d^l q^d/(1-q^d)` for an entry.
pub fn resynthesize(dimension: usize, entry: &InstantonEntry) -> PowerSeries {
    let inv = &entry.inversion;
    lambert_synthesize(&inv.numbers, inv.degree_power, inv.numbers.len()).add_constant(&normalization(dimension))
}

/// Fails with a diagnostic on the first non-integral instanton number.
pub fn require_integral(table: &InstantonTable) -> Result<()> {
    for e in &table.entries {
        if let Some((i, n)) = e.inversion.numbers.iter().enumerate().find(|(_, n)| !n.is_integer()) {
            return Err(Error::Invariant(format!("{} has non-integral n_{} = {}", e.label(), i + 1, n)));
        }
    }
    Ok(())
}
