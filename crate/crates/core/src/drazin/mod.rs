//! Drazin indices, canonical Drazin and group inverses, witness predicates
//! and the constructions that produce one-sided witnesses from others.

mod constructions;
mod predicates;

pub use constructions::{
    azumaya, azumaya_left, azumaya_right, index_search_bound, intertwine_check, normalize_left_gdrazin,
    normalize_right_gdrazin, prop_1_4_check, reverse_order, reverse_order_left,
    reverse_order_right, ReverseFlavor,
};
pub use predicates::*;

use crate::error::{Error, Result};
use crate::matrix::SquareMatrix;
use crate::report::Side;

/// Smallest `k` with `rank(A^k) = rank(A^(k+1))`; zero iff `A` is invertible.
pub fn drazin_index(a: &SquareMatrix) -> Result<usize> {
    let mut prev = a.dim();
    let mut power = SquareMatrix::identity(a.dim(), a.kind());
    for k in 0..=a.dim() {
        power = &power * a;
        let r = power.rank()?;
        if r == prev {
            return Ok(k);
        }
        prev = r;
    }
    unreachable!("rank of powers stabilises by the dimension")
}

/// The canonical Drazin inverse `A^k G A^k`, where `k` is the Drazin index and
/// `G` is an inner inverse of `A^(2k+1)`.
pub fn drazin_inverse(a: &SquareMatrix) -> Result<(SquareMatrix, usize)> {
    let k = drazin_index(a)?;
    let ak = a.pow(k as u32);
    let g = a.pow(2 * k as u32 + 1).inner_inverse()?;
    Ok((&(&ak * &g) * &ak, k))
}

pub fn group_inverse(a: &SquareMatrix) -> Result<SquareMatrix> {
    let (x, k) = drazin_inverse(a)?;
    if k > 1 {
        return Err(Error::IndexTooLarge { index: k });
    }
    Ok(x)
}

/// One-sided Drazin predicate, dispatched on `side`.
pub fn verify_drazin_side(side: Side, a: &SquareMatrix, x: &SquareMatrix, j: usize) -> bool {
    match side {
        Side::Left => verify_left_drazin(a, x, j),
        Side::Right => verify_right_drazin(a, x, j),
    }
}

pub fn verify_gdrazin_side(side: Side, a: &SquareMatrix, x: &SquareMatrix) -> bool {
    match side {
        Side::Left => verify_left_gdrazin(a, x),
        Side::Right => verify_right_gdrazin(a, x),
    }
}

pub fn verify_regular_side(side: Side, a: &SquareMatrix, x: &SquareMatrix) -> bool {
    match side {
        Side::Left => verify_left_regular(a, x),
        Side::Right => verify_right_regular(a, x),
    }
}

pub fn verify_pi_regular_side(side: Side, a: &SquareMatrix, x: &SquareMatrix, n: usize) -> bool {
    match side {
        Side::Left => verify_left_pi_regular(a, x, n),
        Side::Right => verify_right_pi_regular(a, x, n),
    }
}

pub fn verify_strongly_pi_side(side: Side, a: &SquareMatrix, x: &SquareMatrix, p: usize) -> bool {
    match side {
        Side::Left => verify_left_strongly_pi(a, x, p),
        Side::Right => verify_right_strongly_pi(a, x, p),
    }
}

/// Smallest `j <= max` at which `x` is a one-sided Drazin inverse of `a`.
pub fn witness_index(side: Side, a: &SquareMatrix, x: &SquareMatrix, max: usize) -> Option<usize> {
    (0..=max).find(|&j| verify_drazin_side(side, a, x, j))
}
