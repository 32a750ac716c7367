//! Wall-clock comparison of the signed-permutation kernel against dense
//! matrix application. Timings use the best of several trials so that
//! background load inflates them as little as possible.

use std::hint::black_box;
use std::time::{Duration, Instant};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::fields::build_system;
use crate::sigperm::SignedPerm;
use crate::verify::sample_normals;

/// Largest dimension for the dense column (an `m x m` matrix of `i64`).
pub const DENSE_BENCH_MAX_DIM: usize = 4096;

const TRIALS: usize = 5;

#[derive(Clone, Debug, Serialize)]
pub struct BenchRow {
    pub op: &'static str,
    pub m: usize,
    pub reps: usize,
    /// Best per-operation time over the trials, in nanoseconds.
    pub ns_per_op: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct BenchTable {
    pub m: usize,
    pub rows: Vec<BenchRow>,
    /// Dense apply time over signed-perm apply time, when both were measured.
    pub dense_over_sparse: Option<f64>,
}

impl BenchTable {
    pub fn row(&self, op: &str) -> Option<&BenchRow> {
        self.rows.iter().find(|r| r.op == op)
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("{:<16} {:>8} {:>8} {:>14}\n", "op", "m", "reps", "ns/op");
        for r in &self.rows {
            s += &format!(
                "{:<16} {:>8} {:>8} {:>14.1}\n",
                r.op, r.m, r.reps, r.ns_per_op
            );
        }
        match self.dense_over_sparse {
            Some(x) => s += &format!("dense/sparse apply ratio: {x:.1}\n"),
            None => s += &format!("dense/sparse apply ratio: n/a (m > {DENSE_BENCH_MAX_DIM})\n"),
        }
        s
    }
}

/// A representative operator of dimension `m`: the last field of the
/// maximal system, or a cyclic shift with alternating signs when `m` is odd.
pub fn sample_operator(m: usize) -> Result<SignedPerm> {
    if m == 0 {
        return Err(Error::InvalidParameter("m must be positive".into()));
    }
    if let Some(f) = build_system(m)?.fields().last() {
        return Ok(f.matrix.clone());
    }
    let image = (0..m).map(|j| (j + 1) % m).collect();
    let sign = (0..m)
        .map(|j| {
            if j % 2 == 0 {
                crate::sigperm::Sign::Pos
            } else {
                crate::sigperm::Sign::Neg
            }
        })
        .collect();
    SignedPerm::new(image, sign)
}

fn sample_vector(m: usize) -> Vec<i64> {
    sample_normals(m, 1, 7)[0]
        .coords()
        .iter()
        .map(|c| i64::try_from(c.to_integer()).expect("small integer"))
        .collect()
}

fn best_of(reps: usize, mut f: impl FnMut()) -> f64 {
    let reps = reps.max(1);
    (0..TRIALS)
        .map(|_| {
            let start = Instant::now();
            for _ in 0..reps {
                f();
            }
            start.elapsed()
        })
        .min()
        .unwrap_or(Duration::ZERO)
        .as_nanos() as f64
        / reps as f64
}

/// Best per-call time of signed-perm application at dimension `m`, in ns.
pub fn time_sparse_apply(m: usize, reps: usize) -> Result<f64> {
    let a = sample_operator(m)?;
    let v = sample_vector(m);
    let mut out = vec![0i64; m];
    Ok(best_of(reps, || {
        a.apply_into(black_box(&v), &mut out).expect("dims match");
        black_box(&out);
    }))
}

/// Times signed-perm apply, signed-perm compose and (for
/// `m <= DENSE_BENCH_MAX_DIM`) dense apply of the same operator.
pub fn bench(m: usize, reps: usize) -> Result<BenchTable> {
    let a = sample_operator(m)?;
    let v = sample_vector(m);
    let mut out = vec![0i64; m];
    let mut rows = vec![BenchRow {
        op: "sparse-apply",
        m,
        reps,
        ns_per_op: best_of(reps, || {
            a.apply_into(black_box(&v), &mut out).expect("dims match");
            black_box(&out);
        }),
    }];
    rows.push(BenchRow {
        op: "sparse-compose",
        m,
        reps,
        ns_per_op: best_of(reps, || {
            black_box(a.compose(black_box(&a)).expect("dims match"));
        }),
    });
    let mut ratio = None;
    if m <= DENSE_BENCH_MAX_DIM {
        let d = a.to_dense();
        // dense application is ~m times slower; scale reps down to match
        let dense_reps = (reps / m.max(1)).max(3);
        let dense = best_of(dense_reps, || {
            d.apply_into(black_box(&v), &mut out).expect("dims match");
            black_box(&out);
        });
        ratio = Some(dense / rows[0].ns_per_op.max(f64::MIN_POSITIVE));
        rows.push(BenchRow {
            op: "dense-apply",
            m,
            reps: dense_reps,
            ns_per_op: dense,
        });
    }
    Ok(BenchTable {
        m,
        rows,
        dense_over_sparse: ratio,
    })
}
