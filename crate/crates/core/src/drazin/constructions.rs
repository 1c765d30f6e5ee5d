use super::predicates::*;
use super::{verify_drazin_side, verify_gdrazin_side, verify_strongly_pi_side, witness_index};
use crate::error::{Error, Result};
use crate::matrix::SquareMatrix;
use crate::report::{Side, Witness, WitnessKind};
use crate::scalar::ScalarKind;

/// Largest index any exhaustive or verifying search needs to try. Over a field
/// nilpotency index never exceeds the dimension; over `Z/m` it can reach
/// `dim * log2(m)`.
pub fn index_search_bound(dim: usize, kind: ScalarKind) -> usize {
    match kind {
        ScalarKind::Mod(m) if !kind.is_field() => {
            let log = 64 - (m - 1).leading_zeros() as usize;
            dim * log + dim
        }
        _ => dim,
    }
}

/// Turns a one-sided strongly pi-regular witness into a one-sided Drazin
/// inverse with the same index: `x^(p+1) a^p` on the left, `a^p x^(p+1)` on
/// the right.
pub fn azumaya(side: Side, a: &SquareMatrix, x: &SquareMatrix, p: usize) -> Result<Witness> {
    if !verify_strongly_pi_side(side, a, x, p) {
        return Err(Error::precondition(format!(
            "not a {} strongly pi-regular witness at index {p}",
            side.name()
        )));
    }
    let xp = x.pow(p as u32 + 1);
    let ap = a.pow(p as u32);
    let c = match side {
        Side::Left => &xp * &ap,
        Side::Right => &ap * &xp,
    };
    if !verify_drazin_side(side, a, &c, p) {
        return Err(Error::InvariantViolation(format!(
            "{} Azumaya realization failed at index {p}",
            side.name()
        )));
    }
    Witness::new(c, side, WitnessKind::Drazin, Some(p))
}

pub fn azumaya_left(a: &SquareMatrix, x: &SquareMatrix, p: usize) -> Result<Witness> {
    azumaya(Side::Left, a, x, p)
}

pub fn azumaya_right(a: &SquareMatrix, y: &SquareMatrix, q: usize) -> Result<Witness> {
    azumaya(Side::Right, a, y, q)
}

/// `b = xax`, which satisfies `aba = ba^2`, `bab = b^2 a = b`.
pub fn normalize_left_gdrazin(a: &SquareMatrix, x: &SquareMatrix) -> Result<SquareMatrix> {
    if !verify_left_gdrazin(a, x) {
        return Err(Error::precondition("not a left generalized Drazin inverse"));
    }
    let b = &(x * a) * x;
    if !verify_left_gdrazin_normalized(a, &b) {
        return Err(Error::InvariantViolation("xax fails the strengthened left system".into()));
    }
    Ok(b)
}

/// `c = yay`, which satisfies `aca = a^2 c`, `cac = ac^2 = c`.
pub fn normalize_right_gdrazin(a: &SquareMatrix, y: &SquareMatrix) -> Result<SquareMatrix> {
    if !verify_right_gdrazin(a, y) {
        return Err(Error::precondition("not a right generalized Drazin inverse"));
    }
    let c = &(y * a) * y;
    if !verify_right_gdrazin_normalized(a, &c) {
        return Err(Error::InvariantViolation("yay fails the strengthened right system".into()));
    }
    Ok(c)
}

/// Given `az = zb`, a left generalized Drazin inverse `x` of `a` and a right
/// one `y` of `b`, reports whether `xz = zy`.
pub fn intertwine_check(
    a: &SquareMatrix,
    b: &SquareMatrix,
    z: &SquareMatrix,
    x: &SquareMatrix,
    y: &SquareMatrix,
) -> Result<bool> {
    if !a.same_shape(b) || !a.same_shape(z) || a * z != z * b {
        return Err(Error::precondition("az != zb"));
    }
    if !verify_left_gdrazin(a, x) {
        return Err(Error::precondition("x is not a left generalized Drazin inverse of a"));
    }
    if !verify_right_gdrazin(b, y) {
        return Err(Error::precondition("y is not a right generalized Drazin inverse of b"));
    }
    Ok(x * z == z * y)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReverseFlavor {
    Drazin,
    Generalized,
}

/// For `a` in the double commutant of `b`, with `x` the two-sided (generalized)
/// Drazin inverse of `a` and `y` a one-sided one of `b`, returns `yx` as a
/// one-sided (generalized) Drazin inverse of `ab` on the same side.
pub fn reverse_order(
    side: Side,
    flavor: ReverseFlavor,
    a: &SquareMatrix,
    b: &SquareMatrix,
    x: &SquareMatrix,
    y: &SquareMatrix,
) -> Result<Witness> {
    if !a.same_shape(b) {
        return Err(Error::precondition("a and b differ in shape"));
    }
    let bound = index_search_bound(a.dim(), a.kind());
    match flavor {
        ReverseFlavor::Drazin => {
            if !(0..=bound).any(|j| verify_drazin(a, x, j)) {
                return Err(Error::precondition("x is not a Drazin inverse of a"));
            }
            if witness_index(side, b, y, bound).is_none() {
                return Err(Error::precondition(format!("y is not a {} Drazin inverse of b", side.name())));
            }
        }
        ReverseFlavor::Generalized => {
            if !verify_gdrazin(a, x) {
                return Err(Error::precondition("x is not a generalized Drazin inverse of a"));
            }
            if !verify_gdrazin_side(side, b, y) {
                return Err(Error::precondition(format!(
                    "y is not a {} generalized Drazin inverse of b",
                    side.name()
                )));
            }
        }
    }
    if !a.in_double_commutant(b)? {
        return Err(Error::precondition("a is not in the double commutant of b"));
    }
    let ab = a * b;
    let w = y * x;
    match flavor {
        ReverseFlavor::Drazin => match witness_index(side, &ab, &w, 2 * bound) {
            Some(j) => Witness::new(w, side, WitnessKind::Drazin, Some(j)),
            None => Err(Error::InvariantViolation(format!(
                "yx is not a {} Drazin inverse of ab",
                side.name()
            ))),
        },
        ReverseFlavor::Generalized => {
            if !verify_gdrazin_side(side, &ab, &w) {
                return Err(Error::InvariantViolation(format!(
                    "yx is not a {} generalized Drazin inverse of ab",
                    side.name()
                )));
            }
            Witness::new(w, side, WitnessKind::GeneralizedDrazin, None)
        }
    }
}

pub fn reverse_order_left(
    flavor: ReverseFlavor,
    a: &SquareMatrix,
    b: &SquareMatrix,
    x: &SquareMatrix,
    y: &SquareMatrix,
) -> Result<Witness> {
    reverse_order(Side::Left, flavor, a, b, x, y)
}

pub fn reverse_order_right(
    flavor: ReverseFlavor,
    a: &SquareMatrix,
    b: &SquareMatrix,
    x: &SquareMatrix,
    y: &SquareMatrix,
) -> Result<Witness> {
    reverse_order(Side::Right, flavor, a, b, x, y)
}

/// With `x` a left Drazin inverse of minimal index `j` and `y` a right one of
/// minimal index `k`, reports whether `x = y` and `j = k`.
pub fn prop_1_4_check(a: &SquareMatrix, x: &SquareMatrix, j: usize, y: &SquareMatrix, k: usize) -> Result<bool> {
    let minimal = |side: Side, w: &SquareMatrix, i: usize| {
        verify_drazin_side(side, a, w, i) && (i == 0 || !verify_drazin_side(side, a, w, i - 1))
    };
    if !minimal(Side::Left, x, j) {
        return Err(Error::precondition(format!("x is not a left Drazin inverse of minimal index {j}")));
    }
    if !minimal(Side::Right, y, k) {
        return Err(Error::precondition(format!("y is not a right Drazin inverse of minimal index {k}")));
    }
    Ok(x == y && j == k)
}

impl From<ReverseFlavor> for WitnessKind {
    fn from(f: ReverseFlavor) -> Self {
        match f {
            ReverseFlavor::Drazin => WitnessKind::Drazin,
            ReverseFlavor::Generalized => WitnessKind::GeneralizedDrazin,
        }
    }
}
