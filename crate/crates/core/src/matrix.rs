//! Small dense matrices over the rationals.

use std::ops::Mul;

use num_traits::{One, Zero};

use crate::weight::{Rational, Weight};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Rational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = Rational::one();
        }
        m
    }

    pub fn diagonal(diag: &[Rational]) -> Self {
        let n = diag.len();
        let mut m = Self::zeros(n, n);
        for (i, d) in diag.iter().enumerate() {
            m.data[i * n + i] = d.clone();
        }
        m
    }

    /// Builds the matrix whose columns are the given vectors.
    pub fn from_columns(rows: usize, columns: &[Weight]) -> Self {
        let cols = columns.len();
        let mut m = Self::zeros(rows, cols);
        for (j, c) in columns.iter().enumerate() {
            assert_eq!(c.rank(), rows);
            for i in 0..rows {
                m.data[i * cols + j] = c.coords()[i].clone();
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        t
    }

    pub fn apply(&self, v: &Weight) -> Weight {
        assert_eq!(v.rank(), self.cols);
        Weight::new(
            (0..self.rows)
                .map(|i| {
                    self.row(i)
                        .iter()
                        .zip(v.coords())
                        .filter(|(a, _)| !a.is_zero())
                        .fold(Rational::zero(), |acc, (a, x)| acc + a * x)
                })
                .collect(),
        )
    }

    /// Gauss-Jordan inverse; `None` when singular.
    pub fn inverse(&self) -> Option<Matrix> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Self::identity(n);
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a.get(r, col).is_zero())?;
            if pivot != col {
                for j in 0..n {
                    a.data.swap(pivot * n + j, col * n + j);
                    inv.data.swap(pivot * n + j, col * n + j);
                }
            }
            let p = a.get(col, col).clone();
            for j in 0..n {
                a.data[col * n + j] = &a.data[col * n + j] / &p;
                inv.data[col * n + j] = &inv.data[col * n + j] / &p;
            }
            for r in 0..n {
                if r == col || a.get(r, col).is_zero() {
                    continue;
                }
                let factor = a.get(r, col).clone();
                for j in 0..n {
                    let da = &factor * a.get(col, j);
                    let di = &factor * inv.get(col, j);
                    a.data[r * n + j] -= da;
                    inv.data[r * n + j] -= di;
                }
            }
        }
        Some(inv)
    }

    /// True when every entry is 0 or ±1 with exactly one nonzero per row and column.
    pub fn is_signed_permutation(&self) -> bool {
        if self.rows != self.cols {
            return false;
        }
        let one = Rational::one();
        let row_ok = (0..self.rows).all(|i| {
            let nz: Vec<_> = self.row(i).iter().filter(|x| !x.is_zero()).collect();
            nz.len() == 1 && (*nz[0] == one || *nz[0] == -one.clone())
        });
        let col_ok = (0..self.cols).all(|j| (0..self.rows).filter(|&i| !self.get(i, j).is_zero()).count() == 1);
        row_ok && col_ok
    }
}

impl Mul for &Matrix {
    type Output = Matrix;

    fn mul(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows);
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        out.data[i * rhs.cols + j] += a * b;
                    }
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weight::{int, rat};

    #[test]
    fn inverse_round_trip() {
        let m = Matrix::from_columns(2, &[Weight::from_ints(&[2, 1]), Weight::from_ints(&[1, 1])]);
        let inv = m.inverse().unwrap();
        assert_eq!(&m * &inv, Matrix::identity(2));
        assert_eq!(*inv.get(0, 0), int(1));
        let singular = Matrix::from_columns(2, &[Weight::from_ints(&[1, 1]), Weight::from_ints(&[2, 2])]);
        assert!(singular.inverse().is_none());
    }

    #[test]
    fn apply_and_transpose() {
        let m = Matrix::from_columns(2, &[Weight::from_ints(&[0, 1]), Weight::from_ints(&[1, 0])]);
        assert_eq!(m.apply(&Weight::from_ratios(&[(5, 2), (1, 2)])), Weight::from_ratios(&[(1, 2), (5, 2)]));
        assert_eq!(m.transpose(), m);
        assert!(m.is_signed_permutation());
        assert!(!Matrix::diagonal(&[rat(1, 2), int(1)]).is_signed_permutation());
    }
}
