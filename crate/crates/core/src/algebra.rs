//! Cayley–Dickson algebras over the rationals.
//!
//! Level `n` is the `2^n`-dimensional algebra obtained from the rationals by
//! `n` doublings: level 1 is the complex numbers, 2 the quaternions, 3 the
//! octonions and 4 the sedenions. Doubling uses
//!
//! ```text
//! (a, b)(c, d) = (ac - d*b, da + bc*),    (a, b)* = (a*, -b)
//! ```
//!
//! Basis elements are indexed in the recursive order, so that at level 3 the
//! indices `0..8` are `1, i, j, k, e, f, g, h` and at level 4 the indices
//! `0..16` are `1, e1, ..., e15`.

use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::sigperm::{Sign, SignedPerm};

pub type Scalar = BigRational;

/// Largest level for which [`mul_table`] will build a full table (256 x 256).
pub const MAX_TABLE_LEVEL: u32 = 8;

const UNIT_LETTERS: [&str; 8] = ["1", "i", "j", "k", "e", "f", "g", "h"];

/// An element of the level-`n` Cayley–Dickson algebra.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CdElement {
    level: u32,
    coords: Vec<Scalar>,
}

impl CdElement {
    pub fn new(level: u32, coords: Vec<Scalar>) -> Result<Self> {
        let dim = dim_of(level)?;
        if coords.len() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                actual: coords.len(),
            });
        }
        Ok(Self { level, coords })
    }

    pub fn from_ints(level: u32, coords: &[i64]) -> Result<Self> {
        Self::new(
            level,
            coords
                .iter()
                .map(|&c| Scalar::from_integer(c.into()))
                .collect(),
        )
    }

    pub fn zero(level: u32) -> Self {
        let dim = 1usize << level;
        Self {
            level,
            coords: vec![Scalar::zero(); dim],
        }
    }

    pub fn one(level: u32) -> Self {
        Self::basis(level, 0).expect("index 0 always exists")
    }

    /// The basis unit `e_index`.
    pub fn basis(level: u32, index: usize) -> Result<Self> {
        let dim = dim_of(level)?;
        check_index(index, dim)?;
        let mut e = Self::zero(level);
        e.coords[index] = Scalar::one();
        Ok(e)
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_level(other)?;
        Ok(self.zip_with(other, |a, b| a + b))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.same_level(other)?;
        Ok(self.zip_with(other, |a, b| a - b))
    }

    pub fn neg(&self) -> Self {
        Self {
            level: self.level,
            coords: self.coords.iter().map(|c| -c).collect(),
        }
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        Self {
            level: self.level,
            coords: self.coords.iter().map(|c| c * s).collect(),
        }
    }

    /// Cayley–Dickson product `self * other`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_level(other)?;
        Ok(Self {
            level: self.level,
            coords: mul_slices(&self.coords, &other.coords),
        })
    }

    pub fn conj(&self) -> Self {
        Self {
            level: self.level,
            coords: conj_slice(&self.coords),
        }
    }

    /// Real part, i.e. the coefficient of the unit.
    pub fn re(&self) -> Scalar {
        self.coords[0].clone()
    }

    /// Euclidean inner product of the coordinate vectors.
    pub fn inner(&self, other: &Self) -> Result<Scalar> {
        self.same_level(other)?;
        Ok(self
            .coords
            .iter()
            .zip(&other.coords)
            .fold(Scalar::zero(), |acc, (a, b)| acc + a * b))
    }

    /// The associator `(ab)c - a(bc)`.
    pub fn associator(&self, b: &Self, c: &Self) -> Result<Self> {
        let left = self.mul(b)?.mul(c)?;
        let right = self.mul(&b.mul(c)?)?;
        left.sub(&right)
    }

    fn same_level(&self, other: &Self) -> Result<()> {
        if self.level != other.level {
            return Err(Error::LevelMismatch {
                left: self.level,
                right: other.level,
            });
        }
        Ok(())
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&Scalar, &Scalar) -> Scalar) -> Self {
        Self {
            level: self.level,
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| f(a, b))
                .collect(),
        }
    }
}

fn conj_slice(a: &[Scalar]) -> Vec<Scalar> {
    if a.len() == 1 {
        return a.to_vec();
    }
    let h = a.len() / 2;
    let mut out = conj_slice(&a[..h]);
    out.extend(a[h..].iter().map(|x| -x));
    out
}

fn mul_slices(x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
    if x.len() == 1 {
        return vec![&x[0] * &y[0]];
    }
    let h = x.len() / 2;
    let (a, b) = x.split_at(h);
    let (c, d) = y.split_at(h);
    let ac = mul_slices(a, c);
    let d_star_b = mul_slices(&conj_slice(d), b);
    let da = mul_slices(d, a);
    let b_c_star = mul_slices(b, &conj_slice(c));
    ac.into_iter()
        .zip(d_star_b)
        .map(|(p, q)| p - q)
        .chain(da.into_iter().zip(b_c_star).map(|(p, q)| p + q))
        .collect()
}

fn dim_of(level: u32) -> Result<usize> {
    1usize
        .checked_shl(level)
        .filter(|_| level < usize::BITS - 1)
        .ok_or(Error::Overflow("Cayley-Dickson"))
}

fn check_index(index: usize, bound: usize) -> Result<()> {
    if index >= bound {
        return Err(Error::IndexOutOfRange { index, bound });
    }
    Ok(())
}

/// `e_a * e_b = sign * e_index`, computed combinatorially from the doubling
/// formula.
pub fn basis_product(level: u32, a: usize, b: usize) -> Result<(usize, Sign)> {
    let dim = dim_of(level)?;
    check_index(a, dim)?;
    check_index(b, dim)?;
    Ok(basis_product_unchecked(level, a, b))
}

fn basis_product_unchecked(level: u32, a: usize, b: usize) -> (usize, Sign) {
    if level == 0 {
        return (0, Sign::Pos);
    }
    let h = 1usize << (level - 1);
    // conjugation of a basis unit: fixes 1, negates the rest
    let conj_sign = |u: usize| if u == 0 { Sign::Pos } else { Sign::Neg };
    match (a < h, b < h) {
        // (x,0)(y,0) = (xy, 0)
        (true, true) => basis_product_unchecked(level - 1, a, b),
        // (x,0)(0,y) = (0, yx)
        (true, false) => {
            let (i, s) = basis_product_unchecked(level - 1, b - h, a);
            (i + h, s)
        }
        // (0,x)(y,0) = (0, x y*)
        (false, true) => {
            let (i, s) = basis_product_unchecked(level - 1, a - h, b);
            (i + h, s * conj_sign(b))
        }
        // (0,x)(0,y) = (-y* x, 0)
        (false, false) => {
            let (i, s) = basis_product_unchecked(level - 1, b - h, a - h);
            (i, -(s * conj_sign(b - h)))
        }
    }
}

/// Display name of a basis unit: letters up to the octonions, `e<n>` above.
pub fn basis_name(level: u32, index: usize) -> String {
    if level <= 3 {
        UNIT_LETTERS[index].to_string()
    } else if index == 0 {
        "1".to_string()
    } else {
        format!("e{index}")
    }
}

/// One cell of a multiplication table.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct TableEntry {
    pub index: usize,
    pub sign: Sign,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MulTable {
    level: u32,
    entries: Vec<TableEntry>,
}

/// A cell where a reference table disagrees with the generated one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableMismatch {
    pub row: usize,
    pub col: usize,
    pub expected: String,
    pub found: String,
}

impl fmt::Display for TableMismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "row {} col {}: generated {}, reference {}",
            self.row, self.col, self.expected, self.found
        )
    }
}

impl MulTable {
    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn dim(&self) -> usize {
        1 << self.level
    }

    pub fn entry(&self, a: usize, b: usize) -> TableEntry {
        self.entries[a * self.dim() + b]
    }

    pub fn cell_name(&self, a: usize, b: usize) -> String {
        let e = self.entry(a, b);
        let name = basis_name(self.level, e.index);
        match e.sign {
            Sign::Pos => name,
            Sign::Neg => format!("-{name}"),
        }
    }

    /// CSV in the layout of a printed table: the row for `1` doubles as the
    /// header and the left factor labels the row, so cell `(a, b)` is the
    /// name of `e_a * e_b`.
    pub fn to_csv(&self) -> String {
        let n = self.dim();
        let mut out = String::new();
        for a in 0..n {
            let row: Vec<String> = (0..n).map(|b| self.cell_name(a, b)).collect();
            out.push_str(&row.join(","));
            out.push('\n');
        }
        out
    }

    /// JSON array of rows, each an array of `{"index": .., "sign": ..}`.
    pub fn to_json(&self) -> String {
        let rows: Vec<&[TableEntry]> = self.entries.chunks(self.dim()).collect();
        serde_json::to_string(&rows).expect("table entries serialize")
    }

    /// Compares against a reference table in the CSV layout of [`to_csv`].
    /// Every differing cell is reported; nothing is corrected.
    ///
    /// [`to_csv`]: MulTable::to_csv
    pub fn diff_csv(&self, reference: &str) -> Result<Vec<TableMismatch>> {
        let n = self.dim();
        let rows: Vec<&str> = reference.lines().filter(|l| !l.trim().is_empty()).collect();
        if rows.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                actual: rows.len(),
            });
        }
        let mut mismatches = Vec::new();
        for (a, line) in rows.iter().enumerate() {
            let cells: Vec<&str> = line.split(',').map(str::trim).collect();
            if cells.len() != n {
                return Err(Error::Parse(format!(
                    "row {} has {} cells, expected {n}",
                    a + 1,
                    cells.len()
                )));
            }
            for (b, cell) in cells.iter().enumerate() {
                let expected = self.cell_name(a, b);
                if *cell != expected {
                    mismatches.push(TableMismatch {
                        row: a,
                        col: b,
                        expected,
                        found: cell.to_string(),
                    });
                }
            }
        }
        Ok(mismatches)
    }
}

pub fn mul_table(level: u32) -> Result<MulTable> {
    if level > MAX_TABLE_LEVEL {
        return Err(Error::InvalidParameter(format!(
            "table level {level} exceeds cap {MAX_TABLE_LEVEL}"
        )));
    }
    let n = 1usize << level;
    let entries = (0..n)
        .flat_map(|a| (0..n).map(move |b| (a, b)))
        .map(|(a, b)| {
            let (index, sign) = basis_product_unchecked(level, a, b);
            TableEntry { index, sign }
        })
        .collect();
    Ok(MulTable { level, entries })
}

/// Matrix of `x -> e_unit * x`.
pub fn left_mult_matrix(level: u32, unit: usize) -> Result<SignedPerm> {
    mult_matrix(level, unit, |u, col| basis_product_unchecked(level, u, col))
}

/// Matrix of `x -> x * e_unit`.
pub fn right_mult_matrix(level: u32, unit: usize) -> Result<SignedPerm> {
    mult_matrix(level, unit, |u, col| basis_product_unchecked(level, col, u))
}

fn mult_matrix(
    level: u32,
    unit: usize,
    product: impl Fn(usize, usize) -> (usize, Sign),
) -> Result<SignedPerm> {
    let dim = dim_of(level)?;
    check_index(unit, dim)?;
    let (image, sign) = (0..dim).map(|col| product(unit, col)).unzip();
    SignedPerm::new(image, sign)
}
