#![allow(dead_code)]

use osdrazin::gen::{conjugate, jordan_matrix, random_invertible, random_unit, trial_rng};
use osdrazin::{Scalar, ScalarKind, SquareMatrix};
use proptest::prelude::*;

pub const Q: ScalarKind = ScalarKind::Rational;

pub fn rat(n: i64, d: i64) -> Scalar {
    Scalar::from_ratio(Q, n, d).unwrap()
}

pub fn m2(rows: [[i64; 2]; 2]) -> SquareMatrix {
    SquareMatrix::from_ints(Q, rows)
}

/// `[[0, 1], [0, 0]]`
pub fn nil2() -> SquareMatrix {
    m2([[0, 1], [0, 0]])
}

pub fn id(n: usize) -> SquareMatrix {
    SquareMatrix::identity(n, Q)
}

/// Integer matrix of size `n` with entries in `[-3, 3]`.
pub fn int_matrix(n: usize) -> impl Strategy<Value = SquareMatrix> {
    proptest::collection::vec(-3i64..=3, n * n).prop_map(move |v| {
        SquareMatrix::from_fn(n, Q, |i, j| Scalar::from_i64(Q, v[i * n + j]))
    })
}

pub fn sized_int_matrix(max: usize) -> impl Strategy<Value = SquareMatrix> {
    (1..=max).prop_flat_map(int_matrix)
}

pub fn mod_matrix(n: usize, m: u64) -> impl Strategy<Value = SquareMatrix> {
    let kind = ScalarKind::Mod(m);
    proptest::collection::vec(0..m as i64, n * n).prop_map(move |v| {
        SquareMatrix::from_fn(n, kind, |i, j| Scalar::from_i64(kind, v[i * n + j]))
    })
}

/// `S diag(J_k(0), D) S^-1` together with its Drazin inverse
/// `S diag(0, D^-1) S^-1`, both known by construction.
pub fn planted_with_inverse(seed: u64, n: usize, k: usize) -> (SquareMatrix, SquareMatrix) {
    let mut rng = trial_rng(seed, 0);
    let units: Vec<Scalar> = (k..n).map(|_| random_unit(&mut rng, Q)).collect();
    let mut blocks = Vec::new();
    let mut inv_blocks = Vec::new();
    if k > 0 {
        blocks.push((Scalar::zero(Q), k));
        inv_blocks.extend((0..k).map(|_| (Scalar::zero(Q), 1)));
    }
    for u in &units {
        blocks.push((u.clone(), 1));
        inv_blocks.push((u.inv().unwrap(), 1));
    }
    let s = random_invertible(&mut rng, n, Q);
    let a = conjugate(&s, &jordan_matrix(Q, &blocks).unwrap());
    let x = conjugate(&s, &jordan_matrix(Q, &inv_blocks).unwrap());
    (a, x)
}
