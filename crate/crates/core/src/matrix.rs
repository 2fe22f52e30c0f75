//! Small dense matrices over exact rationals.

use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact_series::{format_rational, ExactRational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<ExactRational>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![ExactRational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = ExactRational::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<ExactRational>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix");
        Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[ExactRational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "shape mismatch");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] += a * &other[(k, j)];
                }
            }
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut r = Self::identity(self.rows);
        for _ in 0..e {
            r = r.mul(self);
        }
        r
    }

    /// Row-echelon rank.
    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        let mut rank = 0;
        for col in 0..m.cols {
            let Some(p) = (rank..m.rows).find(|&r| !m[(r, col)].is_zero()) else {
                continue;
            };
            m.swap_rows(rank, p);
            let pivot = m[(rank, col)].clone();
            for r in 0..m.rows {
                if r != rank && !m[(r, col)].is_zero() {
                    let f = &m[(r, col)] / &pivot;
                    for c in col..m.cols {
                        let v = &f * &m[(rank, c)];
                        m[(r, c)] -= v;
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// Gauss–Jordan inverse of a square matrix.
    pub fn inverse(&self) -> Result<Self> {
        if self.rows != self.cols {
            return Err(Error::Precondition("inverse of a non-square matrix".into()));
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Self::identity(n);
        for col in 0..n {
            let p = (col..n).find(|&r| !a[(r, col)].is_zero()).ok_or(Error::NonInvertible)?;
            a.swap_rows(col, p);
            inv.swap_rows(col, p);
            let pivot = a[(col, col)].recip();
            for c in 0..n {
                a[(col, c)] *= &pivot;
                inv[(col, c)] *= &pivot;
            }
            for r in 0..n {
                if r == col || a[(r, col)].is_zero() {
                    continue;
                }
                let f = a[(r, col)].clone();
                for c in 0..n {
                    let (x, y) = (&f * &a[(col, c)], &f * &inv[(col, c)]);
                    a[(r, c)] -= x;
                    inv[(r, c)] -= y;
                }
            }
        }
        Ok(inv)
    }

    /// Basis of the right kernel, from the reduced row-echelon form.
    pub fn nullspace(&self) -> Vec<Vec<ExactRational>> {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut rank = 0;
        for col in 0..m.cols {
            let Some(p) = (rank..m.rows).find(|&r| !m[(r, col)].is_zero()) else {
                continue;
            };
            m.swap_rows(rank, p);
            let inv = m[(rank, col)].recip();
            for c in 0..m.cols {
                m[(rank, c)] *= &inv;
            }
            for r in 0..m.rows {
                if r != rank && !m[(r, col)].is_zero() {
                    let f = m[(r, col)].clone();
                    for c in 0..m.cols {
                        let v = &f * &m[(rank, c)];
                        m[(r, c)] -= v;
                    }
                }
            }
            pivots.push(col);
            rank += 1;
        }
        (0..m.cols)
            .filter(|c| !pivots.contains(c))
            .map(|free| {
                let mut v = vec![ExactRational::zero(); m.cols];
                v[free] = ExactRational::one();
                for (r, &pc) in pivots.iter().enumerate() {
                    v[pc] = -m[(r, free)].clone();
                }
                v
            })
            .collect()
    }

    /// Unique solution of `self * x = b`, or `None` when singular.
    pub fn solve(&self, b: &[ExactRational]) -> Option<Vec<ExactRational>> {
        let inv = self.inverse().ok()?;
        Some(
            (0..self.rows)
                .map(|i| (0..self.cols).fold(ExactRational::zero(), |acc, j| acc + &inv[(i, j)] * &b[j]))
                .collect(),
        )
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = ExactRational;

    fn index(&self, (r, c): (usize, usize)) -> &ExactRational {
        &self.data[r * self.cols + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut ExactRational {
        &mut self.data[r * self.cols + c]
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let cells: Vec<String> = self.row(r).iter().map(format_rational).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_series::{int, rat};

    #[test]
    fn inverse_and_rank() {
        let m = Matrix::from_rows(vec![vec![int(2), int(1)], vec![int(1), int(1)]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Matrix::identity(2));
        assert_eq!(m.rank(), 2);
        let s = Matrix::from_rows(vec![vec![int(1), int(2)], vec![int(2), int(4)]]);
        assert_eq!(s.rank(), 1);
        assert!(s.inverse().is_err());
        let k = s.nullspace();
        assert_eq!(k, vec![vec![int(-2), int(1)]]);
        assert_eq!(m.solve(&[int(3), int(2)]).unwrap(), vec![int(1), int(1)]);
        let h = Matrix::from_rows(vec![vec![rat(1, 2), int(0)], vec![int(0), int(3)]]);
        assert_eq!(h.inverse().unwrap()[(0, 0)], int(2));
    }
}
