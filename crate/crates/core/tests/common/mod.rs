//! Hand-transcribed reference data and small dense builders shared by the
//! integration tests. Nothing in here calls into the kernel except to wrap
//! a finished dense matrix as a signed permutation.
#![allow(dead_code)]

use spinfields::{DenseMatrix, SignedPerm};

/// Rows of `J_alpha N` on `R^16`, coordinates `x1..x8, y1..y8`.
pub const OTTO: [&str; 8] = [
    "-y_1,-y_2,-y_3,-y_4,-y_5,-y_6,-y_7,-y_8,x_1,x_2,x_3,x_4,x_5,x_6,x_7,x_8",
    "-y_2,y_1,y_4,-y_3,y_6,-y_5,-y_8,y_7,-x_2,x_1,x_4,-x_3,x_6,-x_5,-x_8,x_7",
    "-y_3,-y_4,y_1,y_2,y_7,y_8,-y_5,-y_6,-x_3,-x_4,x_1,x_2,x_7,x_8,-x_5,-x_6",
    "-y_4,y_3,-y_2,y_1,y_8,-y_7,y_6,-y_5,-x_4,x_3,-x_2,x_1,x_8,-x_7,x_6,-x_5",
    "-y_5,-y_6,-y_7,-y_8,y_1,y_2,y_3,y_4,-x_5,-x_6,-x_7,-x_8,x_1,x_2,x_3,x_4",
    "-y_6,y_5,-y_8,y_7,-y_2,y_1,-y_4,y_3,-x_6,x_5,-x_8,x_7,-x_2,x_1,-x_4,x_3",
    "-y_7,y_8,y_5,-y_6,-y_3,y_4,y_1,-y_2,-x_7,x_8,x_5,-x_6,-x_3,x_4,x_1,-x_2",
    "-y_8,-y_7,y_6,y_5,-y_4,-y_3,y_2,y_1,-x_8,-x_7,x_6,x_5,-x_4,-x_3,x_2,x_1",
];

/// Rows of `(L_u x, L_u y)` on `R^16` for `u = i..h`.
pub const HOPF: [&str; 7] = [
    "-x_2,x_1,-x_4,x_3,-x_6,x_5,x_8,-x_7,-y_2,y_1,-y_4,y_3,-y_6,y_5,y_8,-y_7",
    "-x_3,x_4,x_1,-x_2,-x_7,-x_8,x_5,x_6,-y_3,y_4,y_1,-y_2,-y_7,-y_8,y_5,y_6",
    "-x_4,-x_3,x_2,x_1,-x_8,x_7,-x_6,x_5,-y_4,-y_3,y_2,y_1,-y_8,y_7,-y_6,y_5",
    "-x_5,x_6,x_7,x_8,x_1,-x_2,-x_3,-x_4,-y_5,y_6,y_7,y_8,y_1,-y_2,-y_3,-y_4",
    "-x_6,-x_5,x_8,-x_7,x_2,x_1,x_4,-x_3,-y_6,-y_5,y_8,-y_7,y_2,y_1,y_4,-y_3",
    "-x_7,-x_8,-x_5,x_6,x_3,-x_4,x_1,x_2,-y_7,-y_8,-y_5,y_6,y_3,-y_4,y_1,y_2",
    "-x_8,x_7,-x_6,-x_5,x_4,x_3,-x_2,x_1,-y_8,y_7,-y_6,-y_5,y_4,y_3,-y_2,y_1",
];

/// Rows of `D(block(J_alpha) N)` on `R^256`, coordinates `x^a, y^a` (octonion blocks).
pub const B_PRIME: [&str; 8] = [
    "-x^9,y^9,-x^10,y^10,-x^11,y^11,-x^12,y^12,-x^13,y^13,-x^14,y^14,-x^15,y^15,-x^16,y^16,x^1,-y^1,x^2,-y^2,x^3,-y^3,x^4,-y^4,x^5,-y^5,x^6,-y^6,x^7,-y^7,x^8,-y^8",
    "-x^10,y^10,x^9,-y^9,x^12,-y^12,-x^11,y^11,x^14,-y^14,-x^13,y^13,-x^16,y^16,x^15,-y^15,-x^2,y^2,x^1,-y^1,x^4,-y^4,-x^3,y^3,x^6,-y^6,-x^5,y^5,-x^8,y^8,x^7,-y^7",
    "-x^11,y^11,-x^12,y^12,x^9,-y^9,x^10,-y^10,x^15,-y^15,x^16,-y^16,-x^13,y^13,-x^14,y^14,-x^3,y^3,-x^4,y^4,x^1,-y^1,x^2,-y^2,x^7,-y^7,x^8,-y^8,-x^5,y^5,-x^6,y^6",
    "-x^12,y^12,x^11,-y^11,-x^10,y^10,x^9,-y^9,x^16,-y^16,-x^15,y^15,x^14,-y^14,-x^13,y^13,-x^4,y^4,x^3,-y^3,-x^2,y^2,x^1,-y^1,x^8,-y^8,-x^7,y^7,x^6,-y^6,-x^5,y^5",
    "-x^13,y^13,-x^14,y^14,-x^15,y^15,-x^16,y^16,x^9,-y^9,x^10,-y^10,x^11,-y^11,x^12,-y^12,-x^5,y^5,-x^6,y^6,-x^7,y^7,-x^8,y^8,x^1,-y^1,x^2,-y^2,x^3,-y^3,x^4,-y^4",
    "-x^14,y^14,x^13,-y^13,-x^16,y^16,x^15,-y^15,-x^10,y^10,x^9,-y^9,-x^12,y^12,x^11,-y^11,-x^6,y^6,x^5,-y^5,-x^8,y^8,x^7,-y^7,-x^2,y^2,x^1,-y^1,-x^4,y^4,x^3,-y^3",
    "-x^15,y^15,x^16,-y^16,x^13,-y^13,-x^14,y^14,-x^11,y^11,x^12,-y^12,x^9,-y^9,-x^10,y^10,-x^7,y^7,x^8,-y^8,x^5,-y^5,-x^6,y^6,-x^3,y^3,x^4,-y^4,x^1,-y^1,-x^2,y^2",
    "-x^16,y^16,-x^15,y^15,x^14,-y^14,x^13,-y^13,-x^12,y^12,-x^11,y^11,x^10,-y^10,x^9,-y^9,-x^8,y^8,-x^7,y^7,x^6,-y^6,x^5,-y^5,-x^4,y^4,-x^3,y^3,x^2,-y^2,x^1,-y^1",
];

/// `D(L_i N)` on `R^32`, octonion blocks.
pub const DL_C: [&str; 1] = ["-x^2,y^2,x^1,-y^1"];

/// `D(L_u N)` on `R^64` for `u = i, j, k`, octonion blocks.
pub const DL_H: [&str; 3] = [
    "-x^2,y^2,x^1,-y^1,-x^4,y^4,x^3,-y^3",
    "-x^3,y^3,x^4,-y^4,x^1,-y^1,-x^2,y^2",
    "-x^4,y^4,-x^3,y^3,x^2,-y^2,x^1,-y^1",
];

/// Formal left multiplications on sedenion tuples, complex case.
pub const FORMAL_C: [&str; 1] = ["-s^2+is^1"];

/// Formal left multiplications on sedenion tuples, quaternionic case.
pub const FORMAL_H: [&str; 3] = [
    "-s^2+is^1-js^4+ks^3",
    "-s^3+is^4+js^1-ks^2",
    "-s^4-is^3+js^2+ks^1",
];

/// Formal left multiplications on sedenion tuples, octonionic case. The
/// `L_e` row reads `+k s^8`; with `+k s^6` the map is not a signed
/// permutation (two `s^6` terms, no `s^8`), and `e k = -h` in the table
/// forces the coefficient of `k` to be `s^8`.
pub const FORMAL_O: [&str; 7] = [
    "-s^2+is^1-js^4+ks^3-es^6+fs^5+gs^8-hs^7",
    "-s^3+is^4+js^1-ks^2-es^7-fs^8+gs^5+hs^6",
    "-s^4-is^3+js^2+ks^1-es^8+fs^7-gs^6+hs^5",
    "-s^5+is^6+js^7+ks^8+es^1-fs^2-gs^3-hs^4",
    "-s^6-is^5+js^8-ks^7+es^2+fs^1+gs^4-hs^3",
    "-s^7-is^8-js^5+ks^6+es^3-fs^4+gs^1+hs^2",
    "-s^8+is^7-js^6-ks^5+es^4+fs^3-gs^2+hs^1",
];

/// The misprinted `L_e` row, kept to show it is rejected.
pub const FORMAL_O_E_AS_PRINTED: &str = "-s^5+is^6+js^7+ks^6+es^1-fs^2-gs^3-hs^4";

pub const RH: [[[i64; 4]; 4]; 3] = [
    [[0, -1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 1], [0, 0, -1, 0]],
    [[0, 0, -1, 0], [0, 0, 0, -1], [1, 0, 0, 0], [0, 1, 0, 0]],
    [[0, 0, 0, -1], [0, 0, 1, 0], [0, -1, 0, 0], [1, 0, 0, 0]],
];

pub const LH: [[[i64; 4]; 4]; 3] = [
    [[0, -1, 0, 0], [1, 0, 0, 0], [0, 0, 0, -1], [0, 0, 1, 0]],
    [[0, 0, -1, 0], [0, 0, 0, 1], [1, 0, 0, 0], [0, -1, 0, 0]],
    [[0, 0, 0, -1], [0, 0, -1, 0], [0, 1, 0, 0], [1, 0, 0, 0]],
];

pub const TABLE_OCTONIONS: &str = include_str!("../fixtures/table_octonions.csv");
pub const TABLE_SEDENIONS: &str = include_str!("../fixtures/table_sedenions.csv");

pub fn dense4(rows: &[[i64; 4]; 4]) -> DenseMatrix {
    DenseMatrix::from_rows(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
}

/// `(a, b; c, d)` from four equal square blocks.
pub fn blocks(a: &DenseMatrix, b: &DenseMatrix, c: &DenseMatrix, d: &DenseMatrix) -> DenseMatrix {
    let n = a.dim();
    let mut out = DenseMatrix::zeros(2 * n);
    for (bi, bj, m) in [(0, 0, a), (0, 1, b), (1, 0, c), (1, 1, d)] {
        for i in 0..n {
            for j in 0..n {
                out.set(bi * n + i, bj * n + j, m.get(i, j));
            }
        }
    }
    out
}

/// `R^O_u` for `u = 1..7` (`i..h`) assembled from the quaternionic blocks.
pub fn octonion_right(u: usize) -> DenseMatrix {
    let z = DenseMatrix::zeros(4);
    let id = DenseMatrix::identity(4);
    match u {
        1..=3 => {
            let r = dense4(&RH[u - 1]);
            blocks(&r, &z, &z, &r.neg())
        }
        4 => blocks(&z, &id.neg(), &id, &z),
        5..=7 => {
            let l = dense4(&LH[u - 5]);
            blocks(&z, &l, &l, &z)
        }
        _ => panic!("unit out of range"),
    }
}

/// `I_alpha` assembled from octonion right multiplications.
pub fn dense_generator(alpha: usize) -> DenseMatrix {
    let z = DenseMatrix::zeros(8);
    let id = DenseMatrix::identity(8);
    match alpha {
        1 => blocks(&z, &id, &id, &z),
        2..=8 => {
            let r = octonion_right(alpha - 1);
            blocks(&z, &r.neg(), &r, &z)
        }
        9 => blocks(&id, &z, &z, &id.neg()),
        _ => panic!("generator out of range"),
    }
}

/// `J_alpha` in block form: `(0, -Id; Id, 0)` and `(0, R_u; R_u, 0)`.
pub fn dense_complex_structure(alpha: usize) -> DenseMatrix {
    let z = DenseMatrix::zeros(8);
    let id = DenseMatrix::identity(8);
    match alpha {
        1 => blocks(&z, &id.neg(), &id, &z),
        2..=8 => {
            let r = octonion_right(alpha - 1);
            blocks(&z, &r, &r, &z)
        }
        _ => panic!("complex structure out of range"),
    }
}

fn split_sign(tok: &str) -> (i64, &str) {
    match tok.strip_prefix('-') {
        Some(rest) => (-1, rest),
        None => (1, tok.strip_prefix('+').unwrap_or(tok)),
    }
}

/// A row of coordinate expressions on `R^16`, `x_n` / `y_n` tokens, read as
/// "output coordinate r equals sign times input coordinate".
pub fn parse_r16(row: &str) -> SignedPerm {
    let mut d = DenseMatrix::zeros(16);
    for (r, tok) in row.split(',').enumerate() {
        let (s, body) = split_sign(tok);
        let (var, n) = body.split_once('_').expect("x_n or y_n");
        let n: usize = n.parse().unwrap();
        let col = n - 1 + if var == "y" { 8 } else { 0 };
        d.set(r, col, s);
    }
    d.to_signed_perm()
        .expect("golden row is a signed permutation")
}

/// A row of octonion-block expressions `x^a` / `y^a`; `x^a` is block
/// `2(a-1)` and `y^a` block `2a-1`, each 8 coordinates wide.
pub fn parse_octonion_blocks(row: &str) -> SignedPerm {
    let toks: Vec<&str> = row.split(',').collect();
    let dim = 8 * toks.len();
    let mut d = DenseMatrix::zeros(dim);
    for (r, tok) in toks.iter().enumerate() {
        let (s, body) = split_sign(tok);
        let (var, a) = body.split_once('^').expect("x^a or y^a");
        let a: usize = a.parse().unwrap();
        let src = 2 * (a - 1) + usize::from(var == "y");
        for c in 0..8 {
            d.set(8 * r + c, 8 * src + c, s);
        }
    }
    d.to_signed_perm()
        .expect("golden row is a signed permutation")
}

/// Terms `(sign, unit slot, source sedenion)` of a formal expression such as
/// `-s^2+is^1-js^4+ks^3`; the unit slot is 0 for the real part and the
/// position of the letter in `ijkefgh` plus one otherwise.
pub fn formal_terms(expr: &str) -> Vec<(i64, usize, usize)> {
    let mut terms = Vec::new();
    let mut rest = expr;
    while !rest.is_empty() {
        let (sign, after) = match rest.as_bytes()[0] {
            b'-' => (-1, &rest[1..]),
            b'+' => (1, &rest[1..]),
            _ => (1, rest),
        };
        let end = after[1..].find(['+', '-']).map_or(after.len(), |e| e + 1);
        let term = &after[..end];
        let (unit, sterm) = match term.strip_prefix("s^") {
            Some(_) => (0, term),
            None => {
                let letter = term.chars().next().unwrap();
                let slot = "ijkefgh".find(letter).expect("unit letter") + 1;
                (slot, &term[1..])
            }
        };
        let n: usize = sterm.strip_prefix("s^").unwrap().parse().unwrap();
        terms.push((sign, unit, n));
        rest = &after[end..];
    }
    terms
}

/// `D(L N)` on `R^{16 n}` for a formal expression over `n` sedenions.
/// `D` negates the second octonion of every sedenion.
pub fn formal_to_dense(expr: &str, n: usize) -> DenseMatrix {
    let mut d = DenseMatrix::zeros(16 * n);
    for (s, slot, src) in formal_terms(expr) {
        for c in 0..16 {
            let flip = if c < 8 { 1 } else { -1 };
            d.set(16 * slot + c, 16 * (src - 1) + c, s * flip);
        }
    }
    d
}
