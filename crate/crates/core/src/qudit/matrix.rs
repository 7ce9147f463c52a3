use std::fmt;

use crate::error::{Error, Result};
use crate::exactnum::AmplitudeQ2;

/// Dense row-major matrix over [`AmplitudeQ2`].
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct AmpMatrix {
    rows: usize,
    cols: usize,
    data: Vec<AmplitudeQ2>,
}

impl AmpMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        AmpMatrix {
            rows,
            cols,
            data: vec![AmplitudeQ2::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = AmplitudeQ2::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<AmplitudeQ2>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch {
                left: cols,
                right: bad.len(),
            });
        }
        Ok(AmpMatrix {
            rows: rows.len(),
            cols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub(crate) fn from_fn(
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> AmplitudeQ2,
    ) -> Self {
        let data = (0..rows)
            .flat_map(|i| (0..cols).map(move |j| (i, j)))
            .map(|(i, j)| f(i, j))
            .collect();
        AmpMatrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &AmplitudeQ2 {
        assert!(
            i < self.rows && j < self.cols,
            "index ({i}, {j}) out of bounds"
        );
        &self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[AmplitudeQ2] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn iter_rows(&self) -> impl Iterator<Item = &[AmplitudeQ2]> {
        (0..self.rows).map(move |i| self.row(i))
    }

    pub fn matmul(&self, rhs: &AmpMatrix) -> Result<AmpMatrix> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch {
                left: self.cols,
                right: rhs.rows,
            });
        }
        // Row-by-row accumulation that skips zero entries on both sides.
        let mut out = AmpMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for (k, a) in self.row(i).iter().enumerate().filter(|(_, a)| !a.is_zero()) {
                for (j, b) in rhs.row(k).iter().enumerate().filter(|(_, b)| !b.is_zero()) {
                    let cell = &mut out.data[i * rhs.cols + j];
                    *cell = &*cell + &(a * b);
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[AmplitudeQ2]) -> Result<Vec<AmplitudeQ2>> {
        if self.cols != v.len() {
            return Err(Error::DimensionMismatch {
                left: self.cols,
                right: v.len(),
            });
        }
        Ok(self
            .iter_rows()
            .map(|row| row.iter().zip(v).map(|(m, x)| m * x).sum())
            .collect())
    }

    pub fn add(&self, rhs: &AmpMatrix) -> Result<AmpMatrix> {
        if (self.rows, self.cols) != (rhs.rows, rhs.cols) {
            return Err(Error::DimensionMismatch {
                left: self.rows * self.cols,
                right: rhs.rows * rhs.cols,
            });
        }
        Ok(AmpMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> AmpMatrix {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).conj())
    }

    /// Kronecker product; the left factor indexes the high-order block.
    pub fn kron(&self, rhs: &AmpMatrix) -> AmpMatrix {
        Self::from_fn(self.rows * rhs.rows, self.cols * rhs.cols, |i, j| {
            self.get(i / rhs.rows, j / rhs.cols) * rhs.get(i % rhs.rows, j % rhs.cols)
        })
    }

    pub fn trace(&self) -> AmplitudeQ2 {
        (0..self.rows.min(self.cols))
            .map(|i| self.get(i, i).clone())
            .sum()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(AmplitudeQ2::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == Self::identity(self.rows)
    }

    pub fn is_hermitian(&self) -> bool {
        self.is_square() && *self == self.adjoint()
    }

    pub fn is_diagonal(&self) -> bool {
        self.is_square()
            && (0..self.rows)
                .flat_map(|i| (0..self.cols).map(move |j| (i, j)))
                .all(|(i, j)| i == j || self.get(i, j).is_zero())
    }

    pub fn diagonal(&self) -> Vec<AmplitudeQ2> {
        (0..self.rows.min(self.cols))
            .map(|i| self.get(i, i).clone())
            .collect()
    }
}

impl fmt::Debug for AmpMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list()
            .entries(
                self.iter_rows()
                    .map(|r| r.iter().map(ToString::to_string).collect::<Vec<_>>()),
            )
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> AmpMatrix {
        AmpMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| AmplitudeQ2::from(v)).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn product_and_kron() {
        let a = m(&[&[1, 2], &[3, 4]]);
        let b = m(&[&[0, 1], &[1, 0]]);
        assert_eq!(a.matmul(&b).unwrap(), m(&[&[2, 1], &[4, 3]]));
        assert_eq!(
            b.kron(&AmpMatrix::identity(2)),
            m(&[&[0, 0, 1, 0], &[0, 0, 0, 1], &[1, 0, 0, 0], &[0, 1, 0, 0]])
        );
        assert_eq!(a.trace(), AmplitudeQ2::from(5));
        assert!(a.matmul(&AmpMatrix::zeros(3, 3)).is_err());
    }

    #[test]
    fn adjoint_conjugates() {
        let a = AmpMatrix::from_rows(vec![
            vec![AmplitudeQ2::one(), AmplitudeQ2::i()],
            vec![AmplitudeQ2::zero(), AmplitudeQ2::sqrt2()],
        ])
        .unwrap();
        let adj = a.adjoint();
        assert_eq!(adj.get(1, 0), &-AmplitudeQ2::i());
        assert_eq!(adj.get(0, 1), &AmplitudeQ2::zero());
        assert!(!a.is_hermitian());
        assert!(AmpMatrix::from_rows(vec![vec![AmplitudeQ2::one()], vec![]]).is_err());
    }
}
