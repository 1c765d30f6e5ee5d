//! Exact witness predicates.
//!
//! Every predicate returns `false` (rather than erroring) when the operands do
//! not share a shape and scalar ring.

use crate::matrix::SquareMatrix;

fn compatible(a: &SquareMatrix, x: &SquareMatrix) -> bool {
    a.same_shape(x)
}

fn exp(k: usize) -> u32 {
    u32::try_from(k).expect("exponent fits in u32")
}

/// `a x a = x a^2`, the skew identity shared by the left-sided notions.
fn left_skew(a: &SquareMatrix, x: &SquareMatrix) -> bool {
    &(a * x) * a == x * &(a * a)
}

/// `a y a = a^2 y`.
fn right_skew(a: &SquareMatrix, y: &SquareMatrix) -> bool {
    &(a * y) * a == &(a * a) * y
}

/// `x^2 a = x`.
fn left_outer(a: &SquareMatrix, x: &SquareMatrix) -> bool {
    &(x * x) * a == *x
}

/// `a y^2 = y`.
fn right_outer(a: &SquareMatrix, y: &SquareMatrix) -> bool {
    a * &(y * y) == *y
}

/// Left Drazin inverse with index `j`: `axa = xa^2`, `x^2 a = x`,
/// `x a^(j+1) = a^j`.
pub fn verify_left_drazin(a: &SquareMatrix, x: &SquareMatrix, j: usize) -> bool {
    compatible(a, x)
        && left_skew(a, x)
        && left_outer(a, x)
        && x * &a.pow(exp(j + 1)) == a.pow(exp(j))
}

/// Right Drazin inverse with index `j`: `aya = a^2 y`, `a y^2 = y`,
/// `a^(j+1) y = a^j`.
pub fn verify_right_drazin(a: &SquareMatrix, y: &SquareMatrix, j: usize) -> bool {
    compatible(a, y)
        && right_skew(a, y)
        && right_outer(a, y)
        && &a.pow(exp(j + 1)) * y == a.pow(exp(j))
}

/// Classical (two-sided) Drazin inverse with index `j`.
pub fn verify_drazin(a: &SquareMatrix, x: &SquareMatrix, j: usize) -> bool {
    compatible(a, x)
        && a * x == x * a
        && left_outer(a, x)
        && &a.pow(exp(j + 1)) * x == a.pow(exp(j))
}

/// Left generalized Drazin inverse; the defect `axa - a` must be nilpotent.
pub fn verify_left_gdrazin(a: &SquareMatrix, x: &SquareMatrix) -> bool {
    compatible(a, x)
        && left_skew(a, x)
        && left_outer(a, x)
        && (&(&(a * x) * a) - a).is_nilpotent()
}

pub fn verify_right_gdrazin(a: &SquareMatrix, y: &SquareMatrix) -> bool {
    compatible(a, y)
        && right_skew(a, y)
        && right_outer(a, y)
        && (&(&(a * y) * a) - a).is_nilpotent()
}

/// Two-sided generalized Drazin inverse: `ax = xa`, `x^2 a = x`, `a - axa`
/// nilpotent.
pub fn verify_gdrazin(a: &SquareMatrix, x: &SquareMatrix) -> bool {
    compatible(a, x) && a * x == x * a && left_outer(a, x) && (&(&(a * x) * a) - a).is_nilpotent()
}

/// `x a^2 = a`.
pub fn verify_left_regular(a: &SquareMatrix, x: &SquareMatrix) -> bool {
    compatible(a, x) && x * &(a * a) == *a
}

/// `a^2 x = a`.
pub fn verify_right_regular(a: &SquareMatrix, x: &SquareMatrix) -> bool {
    compatible(a, x) && &(a * a) * x == *a
}

/// `x a^(2n) = a^n`.
pub fn verify_left_pi_regular(a: &SquareMatrix, x: &SquareMatrix, n: usize) -> bool {
    compatible(a, x) && x * &a.pow(exp(2 * n)) == a.pow(exp(n))
}

/// `a^(2n) x = a^n`.
pub fn verify_right_pi_regular(a: &SquareMatrix, x: &SquareMatrix, n: usize) -> bool {
    compatible(a, x) && &a.pow(exp(2 * n)) * x == a.pow(exp(n))
}

/// Left inner inverse: `axa = xa^2` and `x a^(p+1) = a^p`.
pub fn verify_left_strongly_pi(a: &SquareMatrix, x: &SquareMatrix, p: usize) -> bool {
    compatible(a, x) && left_skew(a, x) && x * &a.pow(exp(p + 1)) == a.pow(exp(p))
}

/// Right inner inverse: `aya = a^2 y` and `a^(q+1) y = a^q`.
pub fn verify_right_strongly_pi(a: &SquareMatrix, y: &SquareMatrix, q: usize) -> bool {
    compatible(a, y) && right_skew(a, y) && &a.pow(exp(q + 1)) * y == a.pow(exp(q))
}

/// Strengthened left system `aba = ba^2`, `bab = b^2 a = b`, `aba - a`
/// nilpotent, satisfied by normalized left generalized Drazin inverses.
pub fn verify_left_gdrazin_normalized(a: &SquareMatrix, b: &SquareMatrix) -> bool {
    compatible(a, b)
        && left_skew(a, b)
        && &(b * a) * b == *b
        && left_outer(a, b)
        && (&(&(a * b) * a) - a).is_nilpotent()
}

/// Strengthened right system `aca = a^2 c`, `cac = a c^2 = c`, `aca - a`
/// nilpotent.
pub fn verify_right_gdrazin_normalized(a: &SquareMatrix, c: &SquareMatrix) -> bool {
    compatible(a, c)
        && right_skew(a, c)
        && &(c * a) * c == *c
        && right_outer(a, c)
        && (&(&(a * c) * a) - a).is_nilpotent()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{Scalar, ScalarKind};

    const Q: ScalarKind = ScalarKind::Rational;

    fn n2() -> SquareMatrix {
        SquareMatrix::from_ints(Q, [[0, 1], [0, 0]])
    }

    fn diag(a: (i64, i64), b: (i64, i64)) -> SquareMatrix {
        SquareMatrix::diag(&[
            Scalar::from_ratio(Q, a.0, a.1).unwrap(),
            Scalar::from_ratio(Q, b.0, b.1).unwrap(),
        ])
        .unwrap()
    }

    #[test]
    fn left_drazin_examples() {
        let i = SquareMatrix::identity(2, Q);
        let z = SquareMatrix::zeros(2, Q);
        assert!(verify_left_drazin(&i, &i, 0));
        assert!(verify_left_drazin(&n2(), &z, 2));
        assert!(!verify_left_drazin(&n2(), &z, 1));
    }

    #[test]
    fn right_drazin_examples() {
        let i = SquareMatrix::identity(2, Q);
        let z = SquareMatrix::zeros(2, Q);
        assert!(verify_right_drazin(&i, &i, 0));
        assert!(verify_right_drazin(&n2(), &z, 2));
        assert!(verify_right_drazin(&diag((2, 1), (0, 1)), &diag((1, 2), (0, 1)), 1));
    }

    #[test]
    fn gdrazin_examples() {
        let i = SquareMatrix::identity(2, Q);
        let z = SquareMatrix::zeros(2, Q);
        assert!(verify_left_gdrazin(&i, &i));
        assert!(verify_left_gdrazin(&n2(), &z));
        assert!(!verify_left_gdrazin(&i, &z));
        assert!(verify_right_gdrazin(&i, &i));
        assert!(verify_right_gdrazin(&n2(), &z));
        let e = diag((1, 1), (0, 1));
        assert!(verify_right_gdrazin(&e, &e));
    }

    #[test]
    fn regular_examples() {
        let i = SquareMatrix::identity(2, Q);
        let z = SquareMatrix::zeros(2, Q);
        let any = SquareMatrix::from_ints(Q, [[3, -1], [2, 7]]);
        assert!(verify_left_regular(&i, &i));
        assert!(verify_left_regular(&z, &any));
        assert!(verify_right_regular(&z, &any));
    }

    #[test]
    fn nilpotent_jordan_block_is_not_regular_over_z2() {
        // exhaust every x in M2(Z2)
        let k = ScalarKind::Mod(2);
        let n = SquareMatrix::from_ints(k, [[0, 1], [0, 0]]);
        for bits in 0..16i64 {
            let x = SquareMatrix::from_fn(2, k, |i, j| Scalar::from_i64(k, (bits >> (2 * i + j)) & 1));
            assert!(!verify_left_regular(&n, &x));
            assert!(!verify_right_regular(&n, &x));
        }
    }

    #[test]
    fn strongly_pi_examples() {
        let i = SquareMatrix::identity(2, Q);
        let z = SquareMatrix::zeros(2, Q);
        assert!(verify_left_strongly_pi(&i, &i, 0));
        assert!(verify_left_strongly_pi(&n2(), &z, 2));
        assert!(verify_left_strongly_pi(&diag((2, 1), (0, 1)), &diag((1, 2), (0, 1)), 1));
        assert!(verify_right_strongly_pi(&diag((2, 1), (0, 1)), &diag((1, 2), (0, 1)), 1));
    }

    #[test]
    fn shape_mismatch_is_false() {
        let i2 = SquareMatrix::identity(2, Q);
        let i3 = SquareMatrix::identity(3, Q);
        assert!(!verify_left_drazin(&i2, &i3, 0));
        assert!(!verify_left_gdrazin(&i2, &SquareMatrix::identity(2, ScalarKind::Mod(3))));
    }
}
