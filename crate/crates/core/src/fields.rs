//! Maximal systems of orthonormal tangent vector fields on `S^{m-1}`.
//!
//! Write `m = (2k+1) 2^p 16^q` with `0 <= p <= 3`. The system has
//! `sigma(m) = 2^p + 8q - 1` fields, every one a signed permutation matrix:
//!
//! * for each level `t = 1..q` and each complex structure `J_alpha`, the
//!   level field `diag(Ĉ_t block_{16,16^(t-1)}(J_alpha))` extended diagonally
//!   to dimension `m`;
//! * for each left multiplication `G` by an imaginary unit of the complex
//!   numbers (`p = 1`), quaternions (`p = 2`) or octonions (`p = 3`), the
//!   field `diag_{16^q,2^p}(Ĉ_q C_q) block_{2^p,16^q}(G)` extended
//!   diagonally by `2k+1`.
//!
//! For `q = 0` only the second family exists, with no conjugation.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::algebra::left_mult_matrix;
use crate::error::{Error, Result};
use crate::sigperm::{conj_base, conj_total, SignedPerm, SparseMatrix};
use crate::spin9::{complex_structure, complex_structure_pair, generator, COMPLEX_STRUCTURE_COUNT};

const UNIT_NAMES: [&str; 7] = ["i", "j", "k", "e", "f", "g", "h"];

/// `m = (2k+1) 2^p 16^q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Decomposition {
    pub k: usize,
    pub p: u32,
    pub q: u32,
}

impl Decomposition {
    pub fn m(&self) -> usize {
        (2 * self.k + 1) << (self.p + 4 * self.q)
    }

    /// `2^p + 8q - 1`.
    pub fn sigma(&self) -> usize {
        (1usize << self.p) + 8 * self.q as usize - 1
    }
}

impl fmt::Display for Decomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "k={} p={} q={}", self.k, self.p, self.q)
    }
}

pub fn decompose(m: usize) -> Result<Decomposition> {
    if m == 0 {
        return Err(Error::InvalidParameter("m must be positive".into()));
    }
    let v = m.trailing_zeros();
    Ok(Decomposition {
        k: (m >> v) / 2,
        p: v % 4,
        q: v / 4,
    })
}

/// Number of fields in a maximal system on `S^{m-1}`; zero for odd `m`.
pub fn sigma(m: usize) -> Result<usize> {
    decompose(m).map(|d| d.sigma())
}

/// Where a field came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Label {
    /// Level `t` field built from `J_alpha` (or from `I_alpha I_beta` in a pair system).
    Level { t: u32, alpha: usize },
    /// Left multiplication by imaginary unit number `unit` (1 = i, ..., 7 = h).
    LeftMult { unit: usize },
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Label::Level { t, alpha } => write!(f, "B({t},{alpha})"),
            Label::LeftMult { unit } => write!(f, "L({})", UNIT_NAMES[unit - 1]),
        }
    }
}

impl FromStr for Label {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("bad field label {s:?}"));
        let inner = |prefix: &str| {
            s.strip_prefix(prefix)
                .and_then(|r| r.strip_suffix(')'))
                .ok_or_else(bad)
        };
        if s.starts_with("B(") {
            let (t, alpha) = inner("B(")?.split_once(',').ok_or_else(bad)?;
            Ok(Label::Level {
                t: t.trim().parse().map_err(|_| bad())?,
                alpha: alpha.trim().parse().map_err(|_| bad())?,
            })
        } else if s.starts_with("L(") {
            let name = inner("L(")?;
            let unit = UNIT_NAMES.iter().position(|&u| u == name).ok_or_else(bad)? + 1;
            Ok(Label::LeftMult { unit })
        } else {
            Err(bad())
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Field {
    pub label: Label,
    pub matrix: SignedPerm,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldSystem {
    m: usize,
    decomposition: Decomposition,
    fields: Vec<Field>,
}

impl FieldSystem {
    pub fn new(m: usize, fields: Vec<Field>) -> Result<Self> {
        let decomposition = decompose(m)?;
        if let Some(f) = fields.iter().find(|f| f.matrix.dim() != m) {
            return Err(Error::DimensionMismatch {
                expected: m,
                actual: f.matrix.dim(),
            });
        }
        Ok(Self {
            m,
            decomposition,
            fields,
        })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn decomposition(&self) -> Decomposition {
        self.decomposition
    }

    pub fn fields(&self) -> &[Field] {
        &self.fields
    }

    pub fn matrices(&self) -> impl Iterator<Item = &SignedPerm> {
        self.fields.iter().map(|f| &f.matrix)
    }

    pub fn len(&self) -> usize {
        self.fields.len()
    }

    pub fn is_empty(&self) -> bool {
        self.fields.is_empty()
    }

    /// Replaces one field's matrix, keeping its label.
    pub fn with_field_replaced(&self, index: usize, matrix: SignedPerm) -> Result<Self> {
        let mut fields = self.fields.clone();
        let slot = fields.get_mut(index).ok_or(Error::IndexOutOfRange {
            index,
            bound: self.fields.len(),
        })?;
        slot.matrix = matrix;
        Self::new(self.m, fields)
    }

    pub fn to_json(&self) -> String {
        let doc = SystemJson {
            m: self.m,
            sigma: self.fields.len(),
            decomposition: self.decomposition,
            fields: self
                .fields
                .iter()
                .map(|f| FieldJson {
                    label: f.label.to_string(),
                    matrix: SparseMatrix::from(&f.matrix),
                })
                .collect(),
        };
        serde_json::to_string(&doc).expect("field system serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: SystemJson =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let sys = Self::new(
            doc.m,
            doc.fields
                .into_iter()
                .map(|f| {
                    Ok(Field {
                        label: f.label.parse()?,
                        matrix: f.matrix.try_into()?,
                    })
                })
                .collect::<Result<_>>()?,
        )?;
        if sys.decomposition != doc.decomposition || sys.fields.len() != doc.sigma {
            return Err(Error::Parse(format!(
                "header (sigma={}, {}) inconsistent with m={} and {} fields",
                doc.sigma,
                doc.decomposition,
                doc.m,
                sys.fields.len()
            )));
        }
        Ok(sys)
    }

    /// One block per field: a `# label` line followed by the dense CSV rows,
    /// blocks separated by a blank line.
    pub fn to_dense_csv(&self) -> String {
        self.fields
            .iter()
            .map(|f| format!("# {}\n{}", f.label, f.matrix.to_dense_csv()))
            .collect::<Vec<_>>()
            .join("\n")
    }

    /// Human-readable action of every field on a normal vector, one line per
    /// field, e.g. `B(1,1) N = (-y1, -y2, ..., x8)` for `m = 16`.
    pub fn display(&self) -> String {
        let names: Vec<String> = (0..self.m).map(|i| coordinate_name(self.m, i)).collect();
        let mut out = String::new();
        for f in &self.fields {
            let t = f.matrix.transpose();
            let row: Vec<String> = (0..self.m)
                .map(|i| {
                    let j = t.image()[i];
                    match t.sign()[i] {
                        crate::sigperm::Sign::Pos => names[j].clone(),
                        crate::sigperm::Sign::Neg => format!("-{}", names[j]),
                    }
                })
                .collect();
            out.push_str(&format!("{} N = ({})\n", f.label, row.join(", ")));
        }
        out
    }
}

fn coordinate_name(m: usize, i: usize) -> String {
    if !m.is_multiple_of(16) {
        return format!("n{}", i + 1);
    }
    let (block, w) = (i / 16 + 1, i % 16);
    let part = if w < 8 { 'x' } else { 'y' };
    if m == 16 {
        format!("{part}{}", w % 8 + 1)
    } else {
        format!("{part}^{block}_{}", w % 8 + 1)
    }
}

#[derive(Serialize, Deserialize)]
struct SystemJson {
    m: usize,
    sigma: usize,
    decomposition: Decomposition,
    fields: Vec<FieldJson>,
}

#[derive(Serialize, Deserialize)]
struct FieldJson {
    label: String,
    matrix: SparseMatrix,
}

fn pow16(e: u32) -> Result<usize> {
    16usize.checked_pow(e).ok_or(Error::Overflow("field"))
}

/// `diag_{16^t, outer}(Ĉ_t block_{16,16^(t-1)}(j))`.
fn twisted_level(j: &SignedPerm, t: u32, outer: usize) -> Result<SignedPerm> {
    conj_total(t)?
        .compose(&j.block_ext(pow16(t - 1)?)?)?
        .diag_ext(outer)
}

/// `B^q(t, J_alpha)` on `R^{16^q}`.
pub fn level_field(q: u32, t: u32, alpha: usize) -> Result<SignedPerm> {
    if t == 0 || t > q {
        return Err(Error::InvalidParameter(format!(
            "level must satisfy 1 <= t <= q, got q={q} t={t}"
        )));
    }
    twisted_level(&complex_structure(alpha)?, t, pow16(q - t)?)
}

/// The generating left multiplications for `p`: none, `L_i` on `C`,
/// `L_i, L_j, L_k` on `H`, or `L_i..L_h` on `O`. Entry `n` is unit `n + 1`.
pub fn g_set(p: u32) -> Result<Vec<SignedPerm>> {
    if p > 3 {
        return Err(Error::InvalidParameter(format!(
            "p must be in 0..=3, got {p}"
        )));
    }
    (1..(1usize << p)).map(|u| left_mult_matrix(p, u)).collect()
}

/// Which conjugation precedes the block-extended left multiplication.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LMultTwist {
    /// `Ĉ_q C_q`; the one that yields an orthonormal system.
    Full,
    /// `Ĉ_q` alone. For `q >= 2` the result commutes with the top-level
    /// fields instead of anticommuting, so it is kept only as a counterexample.
    TotalOnly,
}

/// `L^{k,p,q}(G) = diag_{2^p 16^q, 2k+1}(diag_{16^q, 2^p}(Ĉ_q C_q) block_{2^p, 16^q}(G))`.
pub fn lmult_field(k: usize, p: u32, q: u32, g: &SignedPerm) -> Result<SignedPerm> {
    lmult_field_twisted(k, p, q, g, LMultTwist::Full)
}

pub fn lmult_field_twisted(
    k: usize,
    p: u32,
    q: u32,
    g: &SignedPerm,
    twist: LMultTwist,
) -> Result<SignedPerm> {
    if q == 0 || !(1..=3).contains(&p) {
        return Err(Error::InvalidParameter(format!(
            "left multiplication field needs q >= 1 and 1 <= p <= 3, got p={p} q={q}"
        )));
    }
    if g.dim() != 1 << p {
        return Err(Error::DimensionMismatch {
            expected: 1 << p,
            actual: g.dim(),
        });
    }
    let mut conj = conj_total(q)?;
    if twist == LMultTwist::Full {
        conj = conj.compose(&conj_base(q)?)?;
    }
    conj.diag_ext(1 << p)?
        .compose(&g.block_ext(pow16(q)?)?)?
        .diag_ext(2 * k + 1)
}

/// The maximal system for `S^{m-1}`. Level fields come first, ordered by
/// `(t, alpha)`, then left multiplications in unit order. Odd `m` gives an
/// empty system.
pub fn build_system(m: usize) -> Result<FieldSystem> {
    let d = decompose(m)?;
    let mut fields = Vec::with_capacity(d.sigma());
    let lower = (2 * d.k + 1) << d.p;
    for t in 1..=d.q {
        let outer = lower
            .checked_mul(pow16(d.q - t)?)
            .ok_or(Error::Overflow("field"))?;
        for alpha in 1..=COMPLEX_STRUCTURE_COUNT {
            fields.push(Field {
                label: Label::Level { t, alpha },
                matrix: twisted_level(&complex_structure(alpha)?, t, outer)?,
            });
        }
    }
    for (n, g) in g_set(d.p)?.iter().enumerate() {
        let matrix = if d.q == 0 {
            g.diag_ext(2 * d.k + 1)?
        } else {
            lmult_field(d.k, d.p, d.q, g)?
        };
        fields.push(Field {
            label: Label::LeftMult { unit: n + 1 },
            matrix,
        });
    }
    FieldSystem::new(m, fields)
}

/// The system built from `I_alpha I_beta` (`alpha != beta`) in place of the
/// `J_alpha`, on `R^16` or `R^256`. On `R^256` the second level is
/// `diag(I_beta) block(I_alpha I_beta)`: `I_beta` anticommutes with every
/// `I_alpha I_beta`, while the sedenion conjugation `diag(I_9)` only does so
/// for `beta = 9`. For `beta = 9` this is [`build_system`].
pub fn pair_system(m: usize, beta: usize) -> Result<FieldSystem> {
    let levels = match m {
        16 => 1,
        256 => 2,
        _ => {
            return Err(Error::InvalidParameter(format!(
                "pair systems are defined for m = 16 or 256, got {m}"
            )))
        }
    };
    if !(1..=9).contains(&beta) {
        return Err(Error::IndexOutOfRange {
            index: beta,
            bound: 10,
        });
    }
    let twist = generator(beta)?.diag_ext(16)?;
    let mut fields = Vec::with_capacity(8 * levels as usize);
    for t in 1..=levels {
        for alpha in (1..=9).filter(|&a| a != beta) {
            let j = if alpha < beta {
                complex_structure_pair(alpha, beta)?
            } else {
                // I_a I_b = -I_b I_a
                complex_structure_pair(beta, alpha)?.negate()
            };
            let matrix = match (levels, t) {
                (1, _) => j,
                (_, 1) => j.diag_ext(16)?,
                _ => twist.compose(&j.block_ext(16)?)?,
            };
            fields.push(Field {
                label: Label::Level { t, alpha },
                matrix,
            });
        }
    }
    FieldSystem::new(m, fields)
}
