use num_traits::One;

use super::frobenius::{is_constant, FrobeniusBasis};
use crate::error::{Error, Result};
use crate::exact_series::{int, ExactRational, LogSeries};
use crate::matrix::Matrix;

/// Formal monodromy of the Frobenius basis around `z = 0`.
#[derive(Clone, Debug)]
pub struct MonodromyReport {
    /// Column `j` expresses the transported `e_j` in the basis.
    pub matrix: Matrix,
    /// Smallest `k` with `(M - I)^k = 0`.
    pub nilpotency_index: usize,
    /// `rank (M - I)^k` for `k = 0, 1, ..., nilpotency_index`.
    pub ranks: Vec<usize>,
}

impl MonodromyReport {
    /// Maximal unipotency: `(M - I)^n != 0` and `(M - I)^{n+1} = 0` for an
    /// `(n+1)`-dimensional local system.
    pub fn is_maximally_unipotent(&self) -> bool {
        self.nilpotency_index == self.matrix.rows()
    }

    /// A single Jordan block gives one-dimensional graded pieces of the weight
    /// filtration in even degrees `0, 2, ..., 2n`.
    pub fn weight_graded_degrees(&self) -> Vec<usize> {
        let n = self.matrix.rows();
        let single_block = self.ranks.iter().enumerate().all(|(k, &r)| r == n - k.min(n));
        if single_block {
            (0..n).map(|k| 2 * k).collect()
        } else {
            Vec::new()
        }
    }
}

/// Applies `log z -> log z + 1` to each `e_j` and re-expands in the basis.
pub fn formal_monodromy(basis: &FrobeniusBasis) -> Result<MonodromyReport> {
    let sols = basis.solutions();
    let dim = sols.len();
    let e0 = basis.holomorphic();
    let mut matrix = Matrix::zeros(dim, dim);
    for (j, e) in sols.iter().enumerate() {
        let mut residual = e.shift_log(&ExactRational::one());
        let mut factorial = (1..=residual.max_log_degree() as i64).fold(int(1), |a, k| a * int(k));
        loop {
            if residual.is_zero() {
                break;
            }
            let d = residual.max_log_degree();
            // top log coefficient of e_d is e_0 / d!
            let ratio = residual.log_coefficient(d).div(&e0)?.scale(&factorial);
            if !is_constant(&ratio) {
                return Err(Error::Invariant(format!("transport of e_{j} leaves the solution span")));
            }
            let c = ratio.coeff(0).clone();
            matrix[(d, j)] = c.clone();
            residual = residual.sub(&sols[d].scale(&c))?;
            if residual.is_zero() {
                break;
            }
            if residual.max_log_degree() >= d {
                return Err(Error::Invariant(format!("log degree did not drop while expanding e_{j}")));
            }
            factorial = (1..=residual.max_log_degree() as i64).fold(int(1), |a, k| a * int(k));
        }
    }
    let nil = matrix.sub(&Matrix::identity(dim));
    let mut ranks = vec![dim];
    let mut power = Matrix::identity(dim);
    let mut nilpotency_index = 0;
    for k in 1..=dim + 1 {
        power = power.mul(&nil);
        ranks.push(power.rank());
        if power.is_zero() {
            nilpotency_index = k;
            break;
        }
    }
    if nilpotency_index == 0 {
        return Err(Error::Invariant("monodromy is not unipotent".into()));
    }
    Ok(MonodromyReport { matrix, nilpotency_index, ranks })
}

/// Whether a solution is fixed by the monodromy.
pub fn is_invariant(e: &LogSeries) -> bool {
    &e.shift_log(&ExactRational::one()) == e
}
