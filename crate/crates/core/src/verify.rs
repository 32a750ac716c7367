//! Exact verification of field systems.
//!
//! A family of skew matrices `A_1..A_s` gives orthonormal tangent fields
//! `A_i N` on the unit sphere exactly when every `A_i^2 = -Id` and every
//! pair anticommutes. [`verify_system`] checks those relations on the
//! signed-permutation kernel; [`tangency_check`] and [`gram_check`] re-check
//! the consequences on concrete rational normal vectors, and
//! [`oracle_compare`] re-derives the kernel results with dense matrices.

use std::fmt;
use std::time::{Duration, Instant};

use num_rational::BigRational;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::Scalar;
use crate::error::{Error, Result};
use crate::fields::FieldSystem;
use crate::sigperm::{DenseMatrix, SignedPerm};

/// Largest dimension accepted by [`oracle_compare`].
pub const ORACLE_MAX_DIM: usize = 256;

/// Above this dimension [`VerifyMode::Auto`] switches to sampled pair checks.
pub const EXHAUSTIVE_MAX_DIM: usize = 65536;

/// Pairs checked by [`VerifyMode::Auto`] when it falls back to sampling.
pub const DEFAULT_SAMPLED_PAIRS: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Property {
    Count,
    Skew,
    UnitSquare,
    Anticommute,
    Tangency,
    Gram,
    Oracle,
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Property::Count => "count",
            Property::Skew => "skew",
            Property::UnitSquare => "unit-square",
            Property::Anticommute => "anticommute",
            Property::Tangency => "tangency",
            Property::Gram => "gram",
            Property::Oracle => "oracle",
        })
    }
}

/// One violated relation. Field indices are 0-based positions in the system.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Failure {
    pub first: usize,
    pub second: Option<usize>,
    pub property: Property,
    pub detail: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Coverage {
    Exhaustive,
    Sampled,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub m: usize,
    pub sigma_expected: usize,
    pub fields: usize,
    pub coverage: Coverage,
    pub skew_checks: usize,
    pub square_checks: usize,
    pub pair_checks: usize,
    pub pairs_total: usize,
    pub oracle_checks: usize,
    pub tangent_vectors: usize,
    pub failures: Vec<Failure>,
    /// Wall time of the run; left out of the JSON and the summary so that
    /// both are byte-stable.
    #[serde(skip)]
    pub elapsed: Duration,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    pub fn summary(&self) -> String {
        let mut s = format!(
            "m = {}, expected sigma = {}, fields = {}\n",
            self.m, self.sigma_expected, self.fields
        );
        s += &format!(
            "skew: {}, unit-square: {}, anticommuting pairs: {}/{} ({})\n",
            self.skew_checks,
            self.square_checks,
            self.pair_checks,
            self.pairs_total,
            match self.coverage {
                Coverage::Exhaustive => "exhaustive",
                Coverage::Sampled => "sampled",
            }
        );
        if self.oracle_checks > 0 {
            s += &format!("dense oracle: {} fields\n", self.oracle_checks);
        }
        if self.tangent_vectors > 0 {
            s += &format!("tangent frames: {} normal vectors\n", self.tangent_vectors);
        }
        for f in &self.failures {
            match f.second {
                Some(b) => {
                    s += &format!(
                        "FAIL {} fields {} and {}: {}\n",
                        f.property, f.first, b, f.detail
                    )
                }
                None => s += &format!("FAIL {} field {}: {}\n", f.property, f.first, f.detail),
            }
        }
        s += &format!(
            "result: {} ({} failures)\n",
            if self.passed() { "PASS" } else { "FAIL" },
            self.failures.len()
        );
        s
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VerifyMode {
    /// Exhaustive up to [`EXHAUSTIVE_MAX_DIM`], sampled beyond.
    Auto,
    Exhaustive,
    /// Checks `pairs` distinct pairs chosen from `seed`.
    Sampled {
        pairs: usize,
        seed: u64,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyOptions {
    pub mode: VerifyMode,
    /// Number of sampled normal vectors for the tangent-frame checks.
    pub normals: usize,
    pub normal_seed: u64,
    /// Run [`oracle_compare`] on every field (requires `m <= ORACLE_MAX_DIM`).
    pub oracle: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self {
            mode: VerifyMode::Auto,
            normals: 0,
            normal_seed: 0,
            oracle: false,
        }
    }
}

pub fn verify_system(sys: &FieldSystem) -> VerifyReport {
    verify_system_with(sys, &VerifyOptions::default()).expect("default options cannot fail")
}

pub fn verify_system_with(sys: &FieldSystem, opts: &VerifyOptions) -> Result<VerifyReport> {
    let start = Instant::now();
    let m = sys.m();
    if opts.oracle && m > ORACLE_MAX_DIM {
        return Err(Error::OracleBound {
            dim: m,
            bound: ORACLE_MAX_DIM,
        });
    }
    let mats: Vec<&SignedPerm> = sys.matrices().collect();
    let n = mats.len();
    let sigma_expected = sys.decomposition().sigma();
    let mut failures = Vec::new();

    if n != sigma_expected {
        failures.push(Failure {
            first: 0,
            second: None,
            property: Property::Count,
            detail: format!("system has {n} fields, expected {sigma_expected}"),
        });
    }

    for (i, a) in mats.iter().enumerate() {
        if !a.is_skew() {
            failures.push(Failure {
                first: i,
                second: None,
                property: Property::Skew,
                detail: "A^T != -A".into(),
            });
        }
        if !a.squares_to_minus_id() {
            failures.push(Failure {
                first: i,
                second: None,
                property: Property::UnitSquare,
                detail: "A^2 != -Id".into(),
            });
        }
    }

    let all_pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    let pairs_total = all_pairs.len();
    let (coverage, pairs) = match opts.mode {
        VerifyMode::Exhaustive => (Coverage::Exhaustive, all_pairs),
        VerifyMode::Auto if m <= EXHAUSTIVE_MAX_DIM => (Coverage::Exhaustive, all_pairs),
        VerifyMode::Auto => sample_pairs(all_pairs, DEFAULT_SAMPLED_PAIRS, 0),
        VerifyMode::Sampled { pairs, seed } => sample_pairs(all_pairs, pairs, seed),
    };

    failures.extend(
        pairs
            .par_iter()
            .filter_map(|&(i, j)| {
                let ok = mats[i]
                    .anticommutes(mats[j])
                    .expect("fields share a dimension");
                (!ok).then(|| Failure {
                    first: i,
                    second: Some(j),
                    property: Property::Anticommute,
                    detail: "AB + BA != 0".into(),
                })
            })
            .collect::<Vec<_>>(),
    );

    let mut oracle_checks = 0;
    if opts.oracle {
        for (i, a) in mats.iter().enumerate() {
            oracle_checks += 1;
            if !oracle_compare(a)? {
                failures.push(Failure {
                    first: i,
                    second: None,
                    property: Property::Oracle,
                    detail: "dense recomputation disagrees with the kernel".into(),
                });
            }
        }
    }

    let normals = sample_normals(m, opts.normals, opts.normal_seed);
    for (v, normal) in normals.iter().enumerate() {
        for mut f in frame_failures(sys, normal, &pairs)? {
            f.detail = format!("normal #{v}: {}", f.detail);
            failures.push(f);
        }
    }

    failures.sort();
    Ok(VerifyReport {
        m,
        sigma_expected,
        fields: n,
        coverage,
        skew_checks: n,
        square_checks: n,
        pair_checks: pairs.len(),
        pairs_total,
        oracle_checks,
        tangent_vectors: normals.len(),
        failures,
        elapsed: start.elapsed(),
    })
}

fn sample_pairs(
    all: Vec<(usize, usize)>,
    count: usize,
    seed: u64,
) -> (Coverage, Vec<(usize, usize)>) {
    if count >= all.len() {
        return (Coverage::Exhaustive, all);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut picked = rand::seq::index::sample(&mut rng, all.len(), count).into_vec();
    picked.sort_unstable();
    (
        Coverage::Sampled,
        picked.into_iter().map(|i| all[i]).collect(),
    )
}

/// A nonzero rational vector standing in for the outward normal. Unit length
/// is not required: all frame checks are homogeneous in `N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalVector(Vec<Scalar>);

impl NormalVector {
    pub fn new(coords: Vec<Scalar>) -> Result<Self> {
        if coords.iter().all(Zero::is_zero) {
            return Err(Error::ZeroVector);
        }
        Ok(Self(coords))
    }

    pub fn from_ints(coords: &[i64]) -> Result<Self> {
        Self::new(
            coords
                .iter()
                .map(|&c| BigRational::from_integer(c.into()))
                .collect(),
        )
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }
}

/// `count` seed-determined normals with integer coordinates in `[-9, 9]`.
pub fn sample_normals(m: usize, count: usize, seed: u64) -> Vec<NormalVector> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let mut c: Vec<i64> = (0..m).map(|_| rng.gen_range(-9..=9)).collect();
            if c.iter().all(|&x| x == 0) {
                c[0] = 1;
            }
            NormalVector::from_ints(&c).expect("nonzero by construction")
        })
        .collect()
}

fn dot(a: &[Scalar], b: &[Scalar]) -> Scalar {
    a.iter()
        .zip(b)
        .fold(Scalar::zero(), |acc, (x, y)| acc + x * y)
}

fn frame(sys: &FieldSystem, n: &NormalVector) -> Result<Vec<Vec<Scalar>>> {
    if n.dim() != sys.m() {
        return Err(Error::DimensionMismatch {
            expected: sys.m(),
            actual: n.dim(),
        });
    }
    sys.matrices().map(|a| a.apply(n.coords())).collect()
}

fn frame_failures(
    sys: &FieldSystem,
    n: &NormalVector,
    pairs: &[(usize, usize)],
) -> Result<Vec<Failure>> {
    let vs = frame(sys, n)?;
    let nn = dot(n.coords(), n.coords());
    let mut out = Vec::new();
    for (i, v) in vs.iter().enumerate() {
        let t = dot(v, n.coords());
        if !t.is_zero() {
            out.push(Failure {
                first: i,
                second: None,
                property: Property::Tangency,
                detail: format!("<AN, N> = {t}"),
            });
        }
        let g = dot(v, v);
        if g != nn {
            out.push(Failure {
                first: i,
                second: None,
                property: Property::Gram,
                detail: format!("<AN, AN> = {g}, <N, N> = {nn}"),
            });
        }
    }
    out.extend(
        pairs
            .par_iter()
            .filter_map(|&(i, j)| {
                let g = dot(&vs[i], &vs[j]);
                (!g.is_zero()).then(|| Failure {
                    first: i,
                    second: Some(j),
                    property: Property::Gram,
                    detail: format!("<A_i N, A_j N> = {g}"),
                })
            })
            .collect::<Vec<_>>(),
    );
    Ok(out)
}

/// `<A_i N, N> = 0` for every field.
pub fn tangency_check(sys: &FieldSystem, n: &NormalVector) -> Result<bool> {
    let nv = n.coords();
    Ok(frame(sys, n)?.iter().all(|v| dot(v, nv).is_zero()))
}

/// `<A_i N, A_j N> = delta_ij <N, N>` for every pair of fields.
pub fn gram_check(sys: &FieldSystem, n: &NormalVector) -> Result<bool> {
    let vs = frame(sys, n)?;
    let nn = dot(n.coords(), n.coords());
    Ok((0..vs.len()).all(|i| {
        (i..vs.len()).all(|j| {
            let g = dot(&vs[i], &vs[j]);
            if i == j {
                g == nn
            } else {
                g.is_zero()
            }
        })
    }))
}

/// Recomputes the kernel's answers with dense matrices: reconstruction,
/// transpose, square, `A A^T`, and the skew / square predicates.
pub fn oracle_compare(a: &SignedPerm) -> Result<bool> {
    let m = a.dim();
    if m > ORACLE_MAX_DIM {
        return Err(Error::OracleBound {
            dim: m,
            bound: ORACLE_MAX_DIM,
        });
    }
    let d = a.to_dense();
    let dt = d.transpose();
    let sq = d.mul(&d)?;
    let id = DenseMatrix::identity(m);
    Ok(d.to_signed_perm()? == *a
        && dt == a.transpose().to_dense()
        && sq == a.compose(a)?.to_dense()
        && d.mul(&dt)? == id
        && a.is_skew() == d.add(&dt)?.is_zero()
        && a.squares_to_minus_id() == (sq == id.neg()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fields::build_system;

    #[test]
    fn s15_passes() {
        let r = verify_system(&build_system(16).unwrap());
        assert!(r.passed(), "{}", r.summary());
        assert_eq!((r.fields, r.pair_checks, r.pairs_total), (8, 28, 28));
        assert_eq!(r.coverage, Coverage::Exhaustive);
    }

    #[test]
    fn identity_field_fails_skewness() {
        let sys = build_system(16).unwrap();
        let broken = sys
            .with_field_replaced(3, SignedPerm::identity(16))
            .unwrap();
        let r = verify_system(&broken);
        assert!(!r.passed());
        assert!(r
            .failures
            .iter()
            .any(|f| f.property == Property::Skew && f.first == 3));
        assert!(r
            .failures
            .iter()
            .all(|f| f.first == 3 || f.second == Some(3)));
    }

    #[test]
    fn missing_field_is_a_count_failure() {
        let sys = build_system(32).unwrap();
        let short = FieldSystem::new(32, sys.fields()[..8].to_vec()).unwrap();
        let r = verify_system(&short);
        assert_eq!(r.failures.len(), 1);
        assert_eq!(r.failures[0].property, Property::Count);
    }

    #[test]
    fn sampled_mode_reports_coverage() {
        let sys = build_system(512).unwrap();
        let opts = VerifyOptions {
            mode: VerifyMode::Sampled { pairs: 10, seed: 3 },
            ..Default::default()
        };
        let r = verify_system_with(&sys, &opts).unwrap();
        assert!(r.passed());
        assert_eq!(r.coverage, Coverage::Sampled);
        assert_eq!((r.pair_checks, r.pairs_total), (10, 136));
        let again = verify_system_with(&sys, &opts).unwrap();
        assert_eq!(r.pair_checks, again.pair_checks);
    }

    #[test]
    fn first_basis_vector_frame() {
        let sys = build_system(16).unwrap();
        let mut e1 = vec![0i64; 16];
        e1[0] = 1;
        let n = NormalVector::from_ints(&e1).unwrap();
        assert!(tangency_check(&sys, &n).unwrap());
        assert!(gram_check(&sys, &n).unwrap());
    }

    #[test]
    fn frame_errors() {
        let sys = build_system(16).unwrap();
        assert_eq!(NormalVector::from_ints(&[0, 0]), Err(Error::ZeroVector));
        let n = NormalVector::from_ints(&[1, 2, 3]).unwrap();
        assert!(tangency_check(&sys, &n).is_err());
        assert!(gram_check(&sys, &n).is_err());
    }

    #[test]
    fn normals_are_deterministic() {
        let a = sample_normals(16, 3, 0);
        assert_eq!(a, sample_normals(16, 3, 0));
        assert_eq!(a.len(), 3);
        assert_ne!(a, sample_normals(16, 3, 1));
        for n in &a {
            assert!(n
                .coords()
                .iter()
                .all(|c| c.is_integer() && c.numer().magnitude() <= &9u32.into()));
        }
    }

    #[test]
    fn oracle_bounds() {
        assert!(oracle_compare(&SignedPerm::identity(16)).unwrap());
        assert!(oracle_compare(&SignedPerm::identity(257)).is_err());
        let sys = build_system(512).unwrap();
        let opts = VerifyOptions {
            oracle: true,
            ..Default::default()
        };
        assert!(verify_system_with(&sys, &opts).is_err());
    }

    #[test]
    fn report_serializes() {
        let r = verify_system(&build_system(2).unwrap());
        let json = r.to_json();
        assert!(json.starts_with(r#"{"m":2,"sigma_expected":1,"fields":1,"coverage":"exhaustive""#));
        assert!(r.summary().contains("result: PASS"));
    }
}
