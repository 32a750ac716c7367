//! Signed permutation (monomial +-1) matrices.
//!
//! A [`SignedPerm`] of dimension `m` stores, for every column `j`, the row
//! `image[j]` holding the column's only nonzero entry and its sign. Applying
//! one to a vector is a scatter of `m` moves, composition is `O(m)`.
//!
//! Besides the group operations this module carries the extension operators
//! used to lift matrices to larger dimensions:
//!
//! * [`SignedPerm::diag_ext`]`(n)`: `n` copies of `A` along the diagonal, i.e.
//!   `A` acting on `(R^m)^n`;
//! * [`SignedPerm::block_ext`]`(n)`: each entry `a` of `A` replaced by `a Id_n`,
//!   i.e. `A` acting on `(R^n)^m`;
//!
//! and the sign-flip conjugations built from them ([`conj_base`],
//! [`conj_level`], [`conj_total`]).

use std::fmt;
use std::ops::{Mul, Neg};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

mod dense;

pub use dense::DenseMatrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Pos,
    Neg,
}

impl Sign {
    pub fn to_i8(self) -> i8 {
        match self {
            Sign::Pos => 1,
            Sign::Neg => -1,
        }
    }

    pub fn from_i64(v: i64) -> Option<Self> {
        match v {
            1 => Some(Sign::Pos),
            -1 => Some(Sign::Neg),
            _ => None,
        }
    }

    #[inline]
    pub fn apply<T: Neg<Output = T>>(self, v: T) -> T {
        match self {
            Sign::Pos => v,
            Sign::Neg => -v,
        }
    }
}

impl Neg for Sign {
    type Output = Sign;

    fn neg(self) -> Sign {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }
}

impl Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Pos
        } else {
            Sign::Neg
        }
    }
}

impl Serialize for Sign {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_i8(self.to_i8())
    }
}

impl<'de> Deserialize<'de> for Sign {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = i64::deserialize(d)?;
        Sign::from_i64(v)
            .ok_or_else(|| serde::de::Error::custom(format!("sign must be 1 or -1, got {v}")))
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SignedPerm {
    image: Vec<usize>,
    sign: Vec<Sign>,
}

impl fmt::Debug for SignedPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SignedPerm[")?;
        for (j, (&r, &s)) in self.image.iter().zip(&self.sign).enumerate() {
            if j > 0 {
                write!(f, " ")?;
            }
            let c = if s == Sign::Neg { "-" } else { "" };
            write!(f, "{c}{}", r + 1)?;
        }
        write!(f, "]")
    }
}

impl SignedPerm {
    /// Builds the matrix with `M[image[j], j] = sign[j]`, checking that
    /// `image` is a permutation.
    pub fn new(image: Vec<usize>, sign: Vec<Sign>) -> Result<Self> {
        if image.len() != sign.len() {
            return Err(Error::DimensionMismatch {
                expected: image.len(),
                actual: sign.len(),
            });
        }
        if image.is_empty() {
            return Err(Error::NotASignedPermutation(
                "dimension must be positive".into(),
            ));
        }
        let mut seen = vec![false; image.len()];
        for (j, &r) in image.iter().enumerate() {
            if r >= image.len() {
                return Err(Error::NotASignedPermutation(format!(
                    "column {j} maps to row {r}, outside 0..{}",
                    image.len()
                )));
            }
            if std::mem::replace(&mut seen[r], true) {
                return Err(Error::NotASignedPermutation(format!("row {r} hit twice")));
            }
        }
        Ok(Self { image, sign })
    }

    pub fn identity(m: usize) -> Self {
        assert!(m > 0, "dimension must be positive");
        Self {
            image: (0..m).collect(),
            sign: vec![Sign::Pos; m],
        }
    }

    /// Diagonal matrix with the given signs.
    pub fn diagonal(sign: Vec<Sign>) -> Result<Self> {
        Self::new((0..sign.len()).collect(), sign)
    }

    pub fn dim(&self) -> usize {
        self.image.len()
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    pub fn sign(&self) -> &[Sign] {
        &self.sign
    }

    /// Entry `M[row][col]` as -1, 0 or 1.
    pub fn entry(&self, row: usize, col: usize) -> i8 {
        if self.image[col] == row {
            self.sign[col].to_i8()
        } else {
            0
        }
    }

    pub fn negate(&self) -> Self {
        Self {
            image: self.image.clone(),
            sign: self.sign.iter().map(|&s| -s).collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        let m = self.dim();
        let mut image = vec![0; m];
        let mut sign = vec![Sign::Pos; m];
        for j in 0..m {
            image[self.image[j]] = j;
            sign[self.image[j]] = self.sign[j];
        }
        Self { image, sign }
    }

    /// The matrix product `self * other`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        self.check_dim(other.dim())?;
        let (image, sign) = other
            .image
            .iter()
            .zip(&other.sign)
            .map(|(&r, &s)| (self.image[r], self.sign[r] * s))
            .unzip();
        Ok(Self { image, sign })
    }

    /// `self * v`.
    pub fn apply<T: Clone + Neg<Output = T>>(&self, v: &[T]) -> Result<Vec<T>> {
        self.check_dim(v.len())?;
        let mut out: Vec<Option<T>> = vec![None; v.len()];
        for (j, x) in v.iter().enumerate() {
            out[self.image[j]] = Some(self.sign[j].apply(x.clone()));
        }
        Ok(out
            .into_iter()
            .map(|x| x.expect("image is a bijection"))
            .collect())
    }

    /// `out = self * v` without allocating.
    pub fn apply_into<T: Copy + Neg<Output = T>>(&self, v: &[T], out: &mut [T]) -> Result<()> {
        self.check_dim(v.len())?;
        self.check_dim(out.len())?;
        for ((&x, &r), &s) in v.iter().zip(&self.image).zip(&self.sign) {
            out[r] = s.apply(x);
        }
        Ok(())
    }

    pub fn is_skew(&self) -> bool {
        // M^T = -M: column j's entry at row i must be mirrored by column i's
        // entry at row j with the opposite sign (forces a zero diagonal).
        self.image
            .iter()
            .enumerate()
            .all(|(j, &i)| i != j && self.image[i] == j && self.sign[i] == -self.sign[j])
    }

    pub fn is_symmetric(&self) -> bool {
        self.image
            .iter()
            .enumerate()
            .all(|(j, &i)| self.image[i] == j && self.sign[i] == self.sign[j])
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(j, &i)| i == j)
            && self.sign.iter().all(|&s| s == Sign::Pos)
    }

    pub fn squares_to_minus_id(&self) -> bool {
        self.image
            .iter()
            .enumerate()
            .all(|(j, &i)| self.image[i] == j && self.sign[i] * self.sign[j] == Sign::Neg)
    }

    pub fn squares_to_id(&self) -> bool {
        self.image
            .iter()
            .enumerate()
            .all(|(j, &i)| self.image[i] == j && self.sign[i] == self.sign[j])
    }

    /// `AB == -BA`.
    pub fn anticommutes(&self, other: &Self) -> Result<bool> {
        self.check_dim(other.dim())?;
        Ok(self.products_relate(other, Sign::Neg))
    }

    /// `AB == BA`.
    pub fn commutes(&self, other: &Self) -> Result<bool> {
        self.check_dim(other.dim())?;
        Ok(self.products_relate(other, Sign::Pos))
    }

    fn products_relate(&self, other: &Self, rel: Sign) -> bool {
        (0..self.dim()).all(|j| {
            let (ab_row, ab_sign) = (
                self.image[other.image[j]],
                self.sign[other.image[j]] * other.sign[j],
            );
            let (ba_row, ba_sign) = (
                other.image[self.image[j]],
                other.sign[self.image[j]] * self.sign[j],
            );
            ab_row == ba_row && ab_sign == rel * ba_sign
        })
    }

    /// `diag_{m,n}(A)`: `n` copies of `A` along the diagonal.
    pub fn diag_ext(&self, n: usize) -> Result<Self> {
        let m = self.dim();
        let total = checked_dim(m, n, "diag")?;
        let mut image = Vec::with_capacity(total);
        let mut sign = Vec::with_capacity(total);
        for b in 0..n {
            image.extend(self.image.iter().map(|&r| b * m + r));
            sign.extend_from_slice(&self.sign);
        }
        Ok(Self { image, sign })
    }

    /// `block_{m,n}(A)`: each entry `a` replaced by `a Id_n`.
    pub fn block_ext(&self, n: usize) -> Result<Self> {
        let total = checked_dim(self.dim(), n, "block")?;
        let mut image = Vec::with_capacity(total);
        let mut sign = Vec::with_capacity(total);
        for (&r, &s) in self.image.iter().zip(&self.sign) {
            image.extend((0..n).map(|k| r * n + k));
            sign.extend(std::iter::repeat_n(s, n));
        }
        Ok(Self { image, sign })
    }

    pub fn to_dense(&self) -> DenseMatrix {
        let m = self.dim();
        let mut d = DenseMatrix::zeros(m);
        for j in 0..m {
            d.set(self.image[j], j, self.sign[j].to_i8().into());
        }
        d
    }

    /// Sparse JSON: `{"dim": m, "cols": [{"row": r, "sign": s}, ...]}` with
    /// columns in order and 1-based rows.
    pub fn to_sparse_json(&self) -> String {
        serde_json::to_string(&SparseMatrix::from(self)).expect("sparse matrix serializes")
    }

    pub fn from_sparse_json(text: &str) -> Result<Self> {
        let sparse: SparseMatrix =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        sparse.try_into()
    }

    /// `m` lines of `m` comma-separated entries in `{-1, 0, 1}`.
    pub fn to_dense_csv(&self) -> String {
        let m = self.dim();
        let mut out = String::with_capacity(m * (2 * m + 1));
        let mut row = vec!["0"; m];
        // rows of M are the columns of M^T
        let t = self.transpose();
        for i in 0..m {
            let j = t.image[i];
            row[j] = if t.sign[i] == Sign::Pos { "1" } else { "-1" };
            out.push_str(&row.join(","));
            out.push('\n');
            row[j] = "0";
        }
        out
    }

    fn check_dim(&self, actual: usize) -> Result<()> {
        if actual != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                actual,
            });
        }
        Ok(())
    }
}

/// Panics on dimension mismatch; use [`SignedPerm::compose`] to get an error instead.
impl Mul for &SignedPerm {
    type Output = SignedPerm;

    fn mul(self, rhs: &SignedPerm) -> SignedPerm {
        self.compose(rhs)
            .expect("signed perm product: dimension mismatch")
    }
}

impl Neg for &SignedPerm {
    type Output = SignedPerm;

    fn neg(self) -> SignedPerm {
        self.negate()
    }
}

fn checked_dim(m: usize, n: usize, what: &'static str) -> Result<usize> {
    if n == 0 {
        return Err(Error::InvalidParameter(format!(
            "{what} extension factor must be >= 1"
        )));
    }
    m.checked_mul(n).ok_or(Error::Overflow(what))
}

/// Serialized form of a [`SignedPerm`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SparseMatrix {
    pub dim: usize,
    pub cols: Vec<SparseCol>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SparseCol {
    /// 1-based row index.
    pub row: usize,
    pub sign: Sign,
}

impl From<&SignedPerm> for SparseMatrix {
    fn from(a: &SignedPerm) -> Self {
        SparseMatrix {
            dim: a.dim(),
            cols: a
                .image
                .iter()
                .zip(&a.sign)
                .map(|(&r, &sign)| SparseCol { row: r + 1, sign })
                .collect(),
        }
    }
}

impl TryFrom<SparseMatrix> for SignedPerm {
    type Error = Error;

    fn try_from(s: SparseMatrix) -> Result<Self> {
        if s.cols.len() != s.dim {
            return Err(Error::DimensionMismatch {
                expected: s.dim,
                actual: s.cols.len(),
            });
        }
        let mut image = Vec::with_capacity(s.dim);
        for (j, c) in s.cols.iter().enumerate() {
            if c.row == 0 {
                return Err(Error::Parse(format!("column {}: rows are 1-based", j + 1)));
            }
            image.push(c.row - 1);
        }
        SignedPerm::new(image, s.cols.iter().map(|c| c.sign).collect())
    }
}

fn sixteen_pow(s: u32) -> Result<usize> {
    16usize.checked_pow(s).ok_or(Error::Overflow("conjugation"))
}

/// `C_s = block_{2, 16^s/2}(diag(1, -1))`: negates the last half of `R^{16^s}`.
pub fn conj_base(s: u32) -> Result<SignedPerm> {
    if s == 0 {
        return Err(Error::InvalidParameter("conj_base needs s >= 1".into()));
    }
    let c = SignedPerm::diagonal(vec![Sign::Pos, Sign::Neg])?;
    c.block_ext(sixteen_pow(s)? / 2)
}

/// `C^q_t = diag_{16^t, 16^(q-t)}(C_t)` on `R^{16^q}`, for `1 <= t <= q`
/// (`t = q` gives `C_q` itself).
pub fn conj_level(q: u32, t: u32) -> Result<SignedPerm> {
    if t == 0 || t > q {
        return Err(Error::InvalidParameter(format!(
            "conj_level needs 1 <= t <= q, got q={q} t={t}"
        )));
    }
    conj_base(t)?.diag_ext(sixteen_pow(q - t)?)
}

/// `Ĉ_t`: `Id_16` for `t = 1`, otherwise the product of `C^t_s` for `s < t`.
pub fn conj_total(t: u32) -> Result<SignedPerm> {
    if t == 0 {
        return Err(Error::InvalidParameter("conj_total needs t >= 1".into()));
    }
    let mut acc = SignedPerm::identity(sixteen_pow(t)?);
    for s in 1..t {
        acc = acc.compose(&conj_level(t, s)?)?;
    }
    Ok(acc)
}
