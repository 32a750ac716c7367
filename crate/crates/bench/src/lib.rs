//! Inputs shared by the criterion benches.

use spinfields::perf::sample_operator;
use spinfields::{sample_normals, SignedPerm};

/// The representative operator on `R^m` and a fixed integer vector for it.
pub fn workload(m: usize) -> (SignedPerm, Vec<i64>) {
    let a = sample_operator(m).expect("m > 0");
    let v = sample_normals(m, 1, 11)[0]
        .coords()
        .iter()
        .map(|c| i64::try_from(c.to_integer()).expect("small entries"))
        .collect();
    (a, v)
}
