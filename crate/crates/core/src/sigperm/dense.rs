//! Dense integer matrices, the brute-force oracle for the signed-permutation
//! kernel. Quadratic storage and cubic products; meant for dimensions up to
//! a few hundred.

use std::ops::{Mul, Neg};

use super::{Sign, SignedPerm};
use crate::error::{Error, Result};

/// Square matrix with exact integer entries, row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DenseMatrix {
    dim: usize,
    entries: Vec<i64>,
}

impl DenseMatrix {
    pub fn zeros(dim: usize) -> Self {
        Self {
            dim,
            entries: vec![0; dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut d = Self::zeros(dim);
        for i in 0..dim {
            d.set(i, i, 1);
        }
        d
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let dim = rows.len();
        let mut d = Self::zeros(dim);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    actual: row.len(),
                });
            }
            d.entries[i * dim..(i + 1) * dim].copy_from_slice(row);
        }
        Ok(d)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> i64 {
        self.entries[row * self.dim + col]
    }

    pub fn set(&mut self, row: usize, col: usize, v: i64) {
        self.entries[row * self.dim + col] = v;
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.entries
            .chunks(self.dim.max(1))
            .map(<[i64]>::to_vec)
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&x| x == 0)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    pub fn neg(&self) -> Self {
        Self {
            dim: self.dim,
            entries: self.entries.iter().map(|x| -x).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_dim(other.dim)?;
        Ok(Self {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    /// Plain triple-loop product.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_dim(other.dim)?;
        let n = self.dim;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = 0i64;
                for k in 0..n {
                    acc += self.get(i, k) * other.get(k, j);
                }
                out.set(i, j, acc);
            }
        }
        Ok(out)
    }

    /// Matrix-vector product over any ring the entries embed into.
    pub fn apply<T>(&self, v: &[T]) -> Result<Vec<T>>
    where
        T: Clone + From<i64> + Mul<Output = T> + std::ops::Add<Output = T>,
    {
        self.check_dim(v.len())?;
        Ok((0..self.dim)
            .map(|i| {
                (0..self.dim).fold(T::from(0), |acc, k| {
                    acc + T::from(self.get(i, k)) * v[k].clone()
                })
            })
            .collect())
    }

    /// Same as [`apply`](Self::apply) for `i64`, writing into `out`.
    pub fn apply_into(&self, v: &[i64], out: &mut [i64]) -> Result<()> {
        self.check_dim(v.len())?;
        self.check_dim(out.len())?;
        for (i, o) in out.iter_mut().enumerate() {
            let row = &self.entries[i * self.dim..(i + 1) * self.dim];
            *o = row.iter().zip(v).map(|(a, b)| a * b).sum();
        }
        Ok(())
    }

    pub fn diag_ext(&self, n: usize) -> Self {
        let m = self.dim;
        let mut out = Self::zeros(m * n);
        for b in 0..n {
            for i in 0..m {
                for j in 0..m {
                    out.set(b * m + i, b * m + j, self.get(i, j));
                }
            }
        }
        out
    }

    pub fn block_ext(&self, n: usize) -> Self {
        let m = self.dim;
        let mut out = Self::zeros(m * n);
        for i in 0..m {
            for j in 0..m {
                for k in 0..n {
                    out.set(i * n + k, j * n + k, self.get(i, j));
                }
            }
        }
        out
    }

    /// Recovers the signed permutation, failing unless every column holds
    /// exactly one `+-1` and nothing else.
    pub fn to_signed_perm(&self) -> Result<SignedPerm> {
        let n = self.dim;
        let mut image = Vec::with_capacity(n);
        let mut sign = Vec::with_capacity(n);
        for j in 0..n {
            let nonzero: Vec<usize> = (0..n).filter(|&i| self.get(i, j) != 0).collect();
            let [i] = nonzero[..] else {
                return Err(Error::NotASignedPermutation(format!(
                    "column {j} has {} nonzero entries",
                    nonzero.len()
                )));
            };
            let s = Sign::from_i64(self.get(i, j)).ok_or_else(|| {
                Error::NotASignedPermutation(format!("entry ({i},{j}) is not +-1"))
            })?;
            image.push(i);
            sign.push(s);
        }
        SignedPerm::new(image, sign)
    }

    fn check_dim(&self, actual: usize) -> Result<()> {
        if actual != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                actual,
            });
        }
        Ok(())
    }
}

impl Neg for &DenseMatrix {
    type Output = DenseMatrix;

    fn neg(self) -> DenseMatrix {
        DenseMatrix::neg(self)
    }
}
