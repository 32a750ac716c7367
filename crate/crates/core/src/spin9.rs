//! The nine symmetric generators `I_1..I_9` of the Spin(9) structure on
//! `R^16 = O^2`, and the complex structures composed from them.
//!
//! `I_1`..`I_8` come from `(x, y) -> (R_{u*} y, R_u x)` for `u = 1, i, ..., h`
//! and `I_9` from `(x, y) -> (x, -y)`. Every generator is built from the
//! octonion right multiplications of [`crate::algebra`] with the diag/block
//! calculus; nothing here is typed in by hand.

use crate::algebra::right_mult_matrix;
use crate::error::{Error, Result};
use crate::sigperm::{Sign, SignedPerm};

pub const GENERATOR_COUNT: usize = 9;
pub const COMPLEX_STRUCTURE_COUNT: usize = 8;

/// The ordered generators `I_1..I_9`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Spin9Basis {
    generators: Vec<SignedPerm>,
}

impl Spin9Basis {
    pub fn new() -> Self {
        Self {
            generators: (1..=GENERATOR_COUNT)
                .map(|a| generator(a).expect("index in range"))
                .collect(),
        }
    }

    pub fn generators(&self) -> &[SignedPerm] {
        &self.generators
    }

    /// `I_alpha`, 1-based.
    pub fn get(&self, alpha: usize) -> Option<&SignedPerm> {
        alpha.checked_sub(1).and_then(|i| self.generators.get(i))
    }
}

impl Default for Spin9Basis {
    fn default() -> Self {
        Self::new()
    }
}

fn two_by_two(image: [usize; 2], sign: [Sign; 2]) -> SignedPerm {
    SignedPerm::new(image.to_vec(), sign.to_vec()).expect("valid 2x2 signed perm")
}

/// `I_alpha` for `1 <= alpha <= 9`.
pub fn generator(alpha: usize) -> Result<SignedPerm> {
    match alpha {
        // (0, Id; Id, 0)
        1 => two_by_two([1, 0], [Sign::Pos, Sign::Pos]).block_ext(8),
        // (0, -R_u; R_u, 0) = (0, -Id; Id, 0) diag(R_u, R_u)
        2..=8 => {
            let rot = two_by_two([1, 0], [Sign::Pos, Sign::Neg]).block_ext(8)?;
            let r = right_mult_matrix(3, alpha - 1)?.diag_ext(2)?;
            rot.compose(&r)
        }
        // (Id, 0; 0, -Id)
        9 => two_by_two([0, 1], [Sign::Pos, Sign::Neg]).block_ext(8),
        _ => Err(Error::IndexOutOfRange {
            index: alpha,
            bound: GENERATOR_COUNT + 1,
        }),
    }
}

/// `J_alpha = I_alpha I_9` for `1 <= alpha <= 8`.
pub fn complex_structure(alpha: usize) -> Result<SignedPerm> {
    if !(1..=COMPLEX_STRUCTURE_COUNT).contains(&alpha) {
        return Err(Error::IndexOutOfRange {
            index: alpha,
            bound: COMPLEX_STRUCTURE_COUNT + 1,
        });
    }
    generator(alpha)?.compose(&generator(9)?)
}

/// `J_{alpha beta} = I_alpha I_beta` for `1 <= alpha < beta <= 9`.
pub fn complex_structure_pair(alpha: usize, beta: usize) -> Result<SignedPerm> {
    check_increasing(&[alpha, beta])?;
    generator(alpha)?.compose(&generator(beta)?)
}

/// `J_{alpha beta gamma} = I_alpha I_beta I_gamma` for
/// `1 <= alpha < beta < gamma <= 9`.
pub fn complex_structure_triple(alpha: usize, beta: usize, gamma: usize) -> Result<SignedPerm> {
    check_increasing(&[alpha, beta, gamma])?;
    generator(alpha)?
        .compose(&generator(beta)?)?
        .compose(&generator(gamma)?)
}

fn check_increasing(idx: &[usize]) -> Result<()> {
    let ok = idx.first().is_some_and(|&a| a >= 1)
        && idx.last().is_some_and(|&z| z <= GENERATOR_COUNT)
        && idx.windows(2).all(|w| w[0] < w[1]);
    if !ok {
        return Err(Error::InvalidParameter(format!(
            "generator indices must satisfy 1 <= ... strictly increasing ... <= 9, got {idx:?}"
        )));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relations_hold() {
        let basis = Spin9Basis::new();
        let g = basis.generators();
        for (a, ia) in g.iter().enumerate() {
            assert!(ia.is_symmetric(), "I_{} symmetric", a + 1);
            assert!(ia.squares_to_id(), "I_{}^2 = Id", a + 1);
            for ib in &g[a + 1..] {
                assert!(ia.anticommutes(ib).unwrap());
            }
        }
        assert_eq!(basis.get(9), Some(&generator(9).unwrap()));
        assert_eq!(basis.get(0), None);
    }

    #[test]
    fn i9_flips_second_octonion() {
        let v: Vec<i64> = (1..=16).collect();
        let expected: Vec<i64> = (1..=8).chain((9..=16).map(|y| -y)).collect();
        assert_eq!(generator(9).unwrap().apply(&v).unwrap(), expected);
    }

    #[test]
    fn j1_is_standard_rotation() {
        let j = complex_structure(1).unwrap();
        for col in 0..16 {
            let expected = if col < 8 {
                (col + 8, Sign::Pos)
            } else {
                (col - 8, Sign::Neg)
            };
            assert_eq!((j.image()[col], j.sign()[col]), expected);
        }
    }

    #[test]
    fn complex_structures_square_to_minus_id() {
        for a in 1..=8 {
            let j = complex_structure(a).unwrap();
            assert!(j.squares_to_minus_id());
            assert!(j.is_skew());
            assert_eq!(complex_structure_pair(a, 9).unwrap(), j);
        }
    }

    #[test]
    fn pair_and_triple_counts() {
        let mut pairs = 0;
        let mut triples = 0;
        for a in 1..=9 {
            for b in a + 1..=9 {
                assert!(complex_structure_pair(a, b).unwrap().squares_to_minus_id());
                pairs += 1;
                for c in b + 1..=9 {
                    assert!(complex_structure_triple(a, b, c)
                        .unwrap()
                        .squares_to_minus_id());
                    triples += 1;
                }
            }
        }
        assert_eq!((pairs, triples), (36, 84));
    }

    #[test]
    fn index_errors() {
        assert!(generator(0).is_err());
        assert!(generator(10).is_err());
        assert!(complex_structure(9).is_err());
        assert!(complex_structure_pair(2, 2).is_err());
        assert!(complex_structure_pair(3, 2).is_err());
        assert!(complex_structure_pair(0, 2).is_err());
        assert!(complex_structure_triple(1, 2, 10).is_err());
    }
}
