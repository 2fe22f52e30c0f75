use num_traits::Zero;

use super::coeff::{Coefficient, CoefficientRingPolicy};
use super::ring::QuantumRing;
use crate::error::{Error, Result};
use crate::exact_series::{int, ExactRational, PowerSeries};
use crate::matrix::Matrix;

type CoeffMatrix = Vec<Vec<Coefficient>>;

/// Quantum multiplication operators of a ring. `matrix(a)[r][c]` is the
/// coefficient of `z_c` in `z_a * z_r`; the operators attached to the
/// divisor classes (degree 2) are the connection matrices
/// `C_j = ad(e^j) + sum_eta Gamma_eta`.
#[derive(Clone, Debug)]
pub struct Connection {
    degrees: Vec<u32>,
    divisors: Vec<usize>,
    matrices: Vec<CoeffMatrix>,
    policy: CoefficientRingPolicy,
}

/// The divisor classes must form the basis dual to the curve lattice, so
/// that `d/dt_j q^eta = eta_j q^eta`.
pub fn avhs_connection(ring: &QuantumRing) -> Result<Connection> {
    let degrees = ring.table().degrees().to_vec();
    let divisors: Vec<usize> = (0..degrees.len()).filter(|&i| degrees[i] == 2).collect();
    if divisors.len() != ring.rank() {
        return Err(Error::Precondition(format!(
            "{} divisor classes cannot be dual to a curve lattice of rank {}",
            divisors.len(),
            ring.rank()
        )));
    }
    let size = ring.size();
    let matrices = (0..size)
        .map(|a| {
            (0..size)
                .map(|r| ring.basis_product(a, r).map(|p| p.coeffs().to_vec()))
                .collect::<Result<CoeffMatrix>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Connection { degrees, divisors, matrices, policy: ring.policy().clone() })
}

impl Connection {
    pub fn size(&self) -> usize {
        self.degrees.len()
    }

    pub fn divisors(&self) -> &[usize] {
        &self.divisors
    }

    /// `C_j` for the `j`-th divisor class.
    pub fn divisor_matrix(&self, j: usize) -> &CoeffMatrix {
        &self.matrices[self.divisors[j]]
    }

    pub fn operator(&self, a: usize) -> &CoeffMatrix {
        &self.matrices[a]
    }

    /// Entries `(r, r + 1)` of `C_j`.
    pub fn superdiagonal(&self, j: usize) -> Vec<Coefficient> {
        let m = self.divisor_matrix(j);
        (0..self.size().saturating_sub(1)).map(|r| m[r][r + 1].clone()).collect()
    }

    /// Superdiagonal of `C_j` as power series through `q^order` (rank one).
    pub fn superdiagonal_series(&self, j: usize, order: usize) -> Result<Vec<PowerSeries>> {
        self.superdiagonal(j).iter().map(|c| c.to_series(order)).collect()
    }

    /// Classical part of `C_j`: the cup-product matrix `ad(e^j)`.
    pub fn at_q_zero(&self, j: usize) -> Matrix {
        let m = self.divisor_matrix(j);
        let rank = self.divisors.len();
        Matrix::from_rows(m.iter().map(|row| row.iter().map(|c| c.coeff(&super::CurveClass::zero(rank))).collect()).collect())
    }

    /// Smallest `k` with `(sum_j (j+1) C_j(0))^k = 0`.
    pub fn nilpotency_index(&self) -> Option<u32> {
        let size = self.size();
        let mut n = Matrix::zeros(size, size);
        for j in 0..self.divisors.len() {
            let c = self.at_q_zero(j);
            for r in 0..size {
                for s in 0..size {
                    n[(r, s)] += &c[(r, s)] * int(j as i64 + 1);
                }
            }
        }
        let mut p = Matrix::identity(size);
        for k in 1..=size as u32 + 1 {
            p = p.mul(&n);
            if p.is_zero() {
                return Some(k);
            }
        }
        None
    }

    /// Each `C_j` raises cohomological degree by exactly 2 (Hodge blocks
    /// shifted by one).
    pub fn is_transversal(&self) -> bool {
        self.divisors.iter().all(|&a| {
            self.matrices[a].iter().enumerate().all(|(r, row)| {
                row.iter().enumerate().all(|(c, x)| x.is_zero() || self.degrees[c] == self.degrees[r] + 2)
            })
        })
    }
}

fn mat_mul(a: &CoeffMatrix, b: &CoeffMatrix, policy: &CoefficientRingPolicy) -> CoeffMatrix {
    let n = a.len();
    let mut out = vec![vec![Coefficient::zero(); n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..n {
                if !b[k][j].is_zero() {
                    out[i][j] = out[i][j].add(&a[i][k].mul(&b[k][j], policy));
                }
            }
        }
    }
    out
}

fn derivative(c: &Coefficient, j: usize) -> Coefficient {
    let mut out = Coefficient::zero();
    for (eta, x) in c.terms() {
        out.add_term(eta.clone(), x * int(eta.0[j]));
    }
    out
}

fn max_norm(m: &CoeffMatrix, policy: &CoefficientRingPolicy, t: &ExactRational) -> ExactRational {
    m.iter().flatten().map(|c| c.max_norm(policy, t)).max().unwrap_or_else(ExactRational::zero)
}

/// Curvature of `d - sum_j C_j dt_j` over pairs of divisors, and the
/// commutators `[M_a, M_b]` of all multiplication operators (which vanish
/// exactly when the product is associative), among terms of degree at
/// most `truncation`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlatnessReport {
    pub curvature: ExactRational,
    pub commutator: ExactRational,
    pub worst: Option<(usize, usize)>,
    pub truncation: ExactRational,
}

impl FlatnessReport {
    pub fn is_flat(&self) -> bool {
        self.curvature.is_zero() && self.commutator.is_zero()
    }
}

pub fn check_flatness(connection: &Connection, truncation: &ExactRational) -> FlatnessReport {
    let p = &connection.policy;
    let size = connection.size();
    let mut report =
        FlatnessReport { curvature: ExactRational::zero(), commutator: ExactRational::zero(), worst: None, truncation: truncation.clone() };
    for a in 0..size {
        for b in a + 1..size {
            let (ma, mb) = (&connection.matrices[a], &connection.matrices[b]);
            let ab = mat_mul(ma, mb, p);
            let ba = mat_mul(mb, ma, p);
            let comm: CoeffMatrix =
                ab.iter().zip(&ba).map(|(x, y)| x.iter().zip(y).map(|(u, v)| u.sub(v)).collect()).collect();
            let norm = max_norm(&comm, p, truncation);
            if norm > report.commutator {
                report.commutator = norm;
                report.worst = Some((a, b));
            }
            let (Some(i), Some(j)) =
                (connection.divisors.iter().position(|&d| d == a), connection.divisors.iter().position(|&d| d == b))
            else {
                continue;
            };
            let curv: CoeffMatrix = (0..size)
                .map(|r| {
                    (0..size)
                        .map(|c| derivative(&ma[r][c], j).sub(&derivative(&mb[r][c], i)).sub(&comm[r][c]))
                        .collect()
                })
                .collect();
            let norm = max_norm(&curv, p, truncation);
            if norm > report.curvature {
                report.curvature = norm;
                report.worst = Some((a, b));
            }
        }
    }
    report
}
