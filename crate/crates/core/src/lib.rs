//! Maximal systems of orthonormal tangent vector fields on spheres, built
//! from the Spin(9) structure of `R^16` and Cayley–Dickson multiplication,
//! represented as signed permutation matrices and verified exactly.
//!
//! ```
//! use spinfields::{build_system, verify_system};
//!
//! let sys = build_system(512).unwrap();
//! assert_eq!(sys.len(), 17);
//! assert!(verify_system(&sys).passed());
//! ```

pub mod algebra;
pub mod error;
pub mod fields;
pub mod perf;
pub mod sigperm;
pub mod spin9;
pub mod verify;

pub use algebra::{
    basis_product, left_mult_matrix, mul_table, right_mult_matrix, CdElement, MulTable, Scalar,
};
pub use error::{Error, Result};
pub use fields::{
    build_system, decompose, g_set, level_field, lmult_field, pair_system, sigma, Decomposition,
    Field, FieldSystem, Label,
};
pub use sigperm::{conj_base, conj_level, conj_total, DenseMatrix, Sign, SignedPerm};
pub use spin9::{
    complex_structure, complex_structure_pair, complex_structure_triple, generator, Spin9Basis,
};
pub use verify::{
    gram_check, oracle_compare, sample_normals, tangency_check, verify_system, verify_system_with,
    NormalVector, VerifyOptions, VerifyReport,
};
