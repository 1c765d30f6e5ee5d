//! Dense square matrices over an exact scalar ring.
//!
//! Rank, solving and inner inverses need a field and return
//! [`Error::UnsupportedRing`] otherwise. Everything else, including the
//! characteristic polynomial and unit-determinant inversion, works over any
//! of the supported rings.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::scalar::{Scalar, ScalarKind};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SquareMatrix {
    dim: usize,
    kind: ScalarKind,
    data: Vec<Scalar>,
}

impl SquareMatrix {
    pub fn from_fn(dim: usize, kind: ScalarKind, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        assert!(dim > 0, "matrices must have positive dimension");
        let mut data = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                let s = f(i, j);
                assert_eq!(s.kind(), kind, "entry ({i},{j}) has the wrong scalar kind");
                data.push(s);
            }
        }
        SquareMatrix { dim, kind, data }
    }

    pub fn zeros(dim: usize, kind: ScalarKind) -> Self {
        Self::from_fn(dim, kind, |_, _| Scalar::zero(kind))
    }

    pub fn identity(dim: usize, kind: ScalarKind) -> Self {
        Self::scalar(dim, Scalar::one(kind))
    }

    /// `s * I`.
    pub fn scalar(dim: usize, s: Scalar) -> Self {
        let kind = s.kind();
        Self::from_fn(dim, kind, |i, j| if i == j { s.clone() } else { Scalar::zero(kind) })
    }

    pub fn diag(entries: &[Scalar]) -> Result<Self> {
        let kind = entries.first().ok_or(Error::EmptyMatrix)?.kind();
        if let Some(bad) = entries.iter().find(|s| s.kind() != kind) {
            return Err(Error::ScalarMismatch { left: kind, right: bad.kind() });
        }
        Ok(Self::from_fn(entries.len(), kind, |i, j| {
            if i == j {
                entries[i].clone()
            } else {
                Scalar::zero(kind)
            }
        }))
    }

    /// Builds a matrix from rows, checking squareness and scalar uniformity.
    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let dim = rows.len();
        if dim == 0 {
            return Err(Error::EmptyMatrix);
        }
        let kind = rows[0].first().ok_or(Error::EmptyMatrix)?.kind();
        let mut data = Vec::with_capacity(dim * dim);
        for row in rows {
            if row.len() != dim {
                return Err(Error::DimensionMismatch { left: dim, right: row.len() });
            }
            for s in row {
                if s.kind() != kind {
                    return Err(Error::ScalarMismatch { left: kind, right: s.kind() });
                }
                data.push(s);
            }
        }
        Ok(SquareMatrix { dim, kind, data })
    }

    /// Integer-entry constructor, mostly for tests and fixed examples.
    pub fn from_ints<const N: usize>(kind: ScalarKind, rows: [[i64; N]; N]) -> Self {
        Self::from_fn(N, kind, |i, j| Scalar::from_i64(kind, rows[i][j]))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn kind(&self) -> ScalarKind {
        self.kind
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.dim + j]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Scalar]> {
        self.data.chunks(self.dim)
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.dim, self.kind)
    }

    pub fn compatible(&self, o: &SquareMatrix) -> Result<()> {
        if self.dim != o.dim {
            return Err(Error::DimensionMismatch { left: self.dim, right: o.dim });
        }
        if self.kind != o.kind {
            return Err(Error::ScalarMismatch { left: self.kind, right: o.kind });
        }
        Ok(())
    }

    pub fn same_shape(&self, o: &SquareMatrix) -> bool {
        self.compatible(o).is_ok()
    }

    pub fn mat_mul(&self, o: &SquareMatrix) -> Result<Self> {
        self.compatible(o)?;
        let n = self.dim;
        let mut data = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = Scalar::zero(self.kind);
                for k in 0..n {
                    let a = &self.data[i * n + k];
                    if a.is_zero() {
                        continue;
                    }
                    acc = &acc + &(a * &o.data[k * n + j]);
                }
                data.push(acc);
            }
        }
        Ok(SquareMatrix { dim: n, kind: self.kind, data })
    }

    pub fn try_add(&self, o: &SquareMatrix) -> Result<Self> {
        self.compatible(o)?;
        Ok(self.zip(o, |a, b| a + b))
    }

    pub fn try_sub(&self, o: &SquareMatrix) -> Result<Self> {
        self.compatible(o)?;
        Ok(self.zip(o, |a, b| a - b))
    }

    fn zip(&self, o: &SquareMatrix, f: impl Fn(&Scalar, &Scalar) -> Scalar) -> Self {
        SquareMatrix {
            dim: self.dim,
            kind: self.kind,
            data: self.data.iter().zip(&o.data).map(|(a, b)| f(a, b)).collect(),
        }
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        assert_eq!(s.kind(), self.kind, "scalar kind mismatch");
        SquareMatrix {
            dim: self.dim,
            kind: self.kind,
            data: self.data.iter().map(|a| a * s).collect(),
        }
    }

    /// `I - self`.
    pub fn one_minus(&self) -> Self {
        &Self::identity(self.dim, self.kind) - self
    }

    /// `A^k` by repeated squaring; `A^0 = I`.
    pub fn pow(&self, mut k: u32) -> Self {
        let mut result = Self::identity(self.dim, self.kind);
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        result
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.dim, self.kind, |i, j| self.get(j, i).clone())
    }

    /// Reinterprets a rational matrix over the Gaussian rationals.
    pub fn to_gaussian(&self) -> Self {
        match self.kind {
            ScalarKind::Rational => Self::from_fn(self.dim, ScalarKind::Gaussian, |i, j| self.get(i, j).to_gaussian()),
            _ => self.clone(),
        }
    }

    /// Evaluates `sum coeffs[i] * A^i`.
    pub fn eval_poly(&self, coeffs: &[Scalar]) -> Self {
        // Horner
        let mut acc = Self::zeros(self.dim, self.kind);
        for c in coeffs.iter().rev() {
            acc = &(&acc * self) + &Self::scalar(self.dim, c.clone());
        }
        acc
    }

    pub(crate) fn to_rows(&self) -> Vec<Vec<Scalar>> {
        self.rows().map(<[Scalar]>::to_vec).collect()
    }

    pub fn require_field(&self) -> Result<()> {
        if self.kind.is_field() {
            Ok(())
        } else {
            Err(Error::UnsupportedRing(self.kind))
        }
    }

    pub fn rank(&self) -> Result<usize> {
        self.require_field()?;
        let mut rows = self.to_rows();
        Ok(rref(&mut rows, self.dim).len())
    }

    /// Some `X` with `X * self = b`, free parameters set to zero.
    pub fn solve_left(&self, b: &SquareMatrix) -> Result<Option<Self>> {
        Ok(self.transpose().solve_right(&b.transpose())?.map(|x| x.transpose()))
    }

    /// Some `X` with `self * X = b`, free parameters set to zero.
    pub fn solve_right(&self, b: &SquareMatrix) -> Result<Option<Self>> {
        self.compatible(b)?;
        self.require_field()?;
        let rows = self.to_rows();
        let rhs = b.to_rows();
        Ok(solve_linear(rows, rhs, self.dim).map(|x| SquareMatrix {
            dim: self.dim,
            kind: self.kind,
            data: x.into_iter().flatten().collect(),
        }))
    }

    /// Two-sided inverse, or `None` when singular. Over `Z/m` with composite
    /// `m` a matrix is invertible exactly when its determinant is a unit.
    pub fn inverse(&self) -> Option<Self> {
        if self.kind.is_field() {
            let x = self
                .solve_right(&Self::identity(self.dim, self.kind))
                .expect("field kind checked")?;
            return (&x * self).is_identity().then_some(x);
        }
        // Cayley-Hamilton: p(A) = 0 with p(t) = t^n + c1 t^(n-1) + ... + cn,
        // so A * q(A) = -cn I where q(t) = t^(n-1) + c1 t^(n-2) + ... + c(n-1).
        let p = self.charpoly();
        let n = self.dim;
        let cn = p.coeff(0);
        let cn_inv = cn.inv()?;
        let q: Vec<Scalar> = (1..=n).map(|i| p.coeff(i)).collect();
        let adj_like = self.eval_poly(&q);
        Some(adj_like.scale(&-&cn_inv))
    }

    pub fn determinant(&self) -> Scalar {
        let c0 = self.charpoly().coeff(0);
        if self.dim % 2 == 1 {
            -&c0
        } else {
            c0
        }
    }

    /// `A^dim == 0`. In finite dimension this is the exact form of having
    /// spectral radius zero.
    pub fn is_nilpotent(&self) -> bool {
        self.pow(self.dim as u32).is_zero()
    }

    /// An inner inverse `G` with `A G A = A`, read off an exact rank
    /// factorisation `E A = R` (`R` in reduced row echelon form).
    pub fn inner_inverse(&self) -> Result<Self> {
        self.require_field()?;
        let n = self.dim;
        let mut aug: Vec<Vec<Scalar>> = self
            .rows()
            .enumerate()
            .map(|(i, row)| {
                let mut r = row.to_vec();
                r.extend((0..n).map(|j| Scalar::from_i64(self.kind, (i == j) as i64)));
                r
            })
            .collect();
        let pivots = rref(&mut aug, n);
        let mut g = vec![Scalar::zero(self.kind); n * n];
        for (i, &p) in pivots.iter().enumerate() {
            for j in 0..n {
                g[p * n + j] = aug[i][n + j].clone();
            }
        }
        Ok(SquareMatrix { dim: n, kind: self.kind, data: g })
    }

    /// Characteristic polynomial `det(tI - A)` by Berkowitz's division-free
    /// algorithm, valid over every supported ring.
    pub fn charpoly(&self) -> Poly {
        let n = self.dim;
        let zero = Scalar::zero(self.kind);
        let one = Scalar::one(self.kind);
        // v holds coefficients from the leading one downwards
        let mut v = vec![one.clone()];
        for r in 0..n {
            let a = self.get(r, r);
            let mut t = Vec::with_capacity(r + 2);
            t.push(one.clone());
            t.push(-a);
            // w = M^k R with M the leading r x r block, R the column above a
            let mut w: Vec<Scalar> = (0..r).map(|i| self.get(i, r).clone()).collect();
            for _ in 0..r {
                let dot = (0..r).fold(zero.clone(), |acc, j| &acc + &(self.get(r, j) * &w[j]));
                t.push(-&dot);
                w = (0..r)
                    .map(|i| (0..r).fold(zero.clone(), |acc, j| &acc + &(self.get(i, j) * &w[j])))
                    .collect();
            }
            // lower-triangular Toeplitz product
            let next: Vec<Scalar> = (0..r + 2)
                .map(|i| {
                    (0..=i.min(r)).fold(zero.clone(), |acc, j| &acc + &(&t[i - j] * &v[j]))
                })
                .collect();
            v = next;
        }
        v.reverse();
        Poly::new(self.kind, v)
    }

    /// A basis of `{z : z b = b z}` for `b = self`.
    pub fn commutant_basis(&self) -> Result<Vec<Self>> {
        self.require_field()?;
        let n = self.dim;
        // unknown z[i][k] at column i*n + k; equation for entry (i, j)
        let zero = Scalar::zero(self.kind);
        let mut rows = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let mut row = vec![zero.clone(); n * n];
                for k in 0..n {
                    // (z b)_{ij} = sum_k z_{ik} b_{kj}
                    row[i * n + k] = &row[i * n + k] + self.get(k, j);
                    // (b z)_{ij} = sum_k b_{ik} z_{kj}
                    row[k * n + j] = &row[k * n + j] - self.get(i, k);
                }
                rows.push(row);
            }
        }
        Ok(nullspace(rows, n * n)
            .into_iter()
            .map(|v| SquareMatrix { dim: n, kind: self.kind, data: v })
            .collect())
    }

    /// Whether `self` commutes with every matrix that commutes with `b`.
    pub fn in_double_commutant(&self, b: &SquareMatrix) -> Result<bool> {
        self.compatible(b)?;
        Ok(b.commutant_basis()?.iter().all(|z| &(self * z) == &(z * self)))
    }
}

/// Row-reduces `rows` to reduced echelon form, pivoting only within the first
/// `pivot_cols` columns, and returns the pivot columns. Requires field scalars.
pub(crate) fn rref(rows: &mut [Vec<Scalar>], pivot_cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..pivot_cols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].inv().expect("nonzero pivot in a field");
        for v in rows[r].iter_mut() {
            *v = &*v * &inv;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (v, pv) in row.iter_mut().zip(&pivot_row) {
                if !pv.is_zero() {
                    *v = &*v - &(&f * pv);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Solves `A X = B` for rectangular `A` (`rows x unknowns`) and several
/// right-hand columns; free unknowns are set to zero. `None` if inconsistent.
pub(crate) fn solve_linear(a: Vec<Vec<Scalar>>, b: Vec<Vec<Scalar>>, unknowns: usize) -> Option<Vec<Vec<Scalar>>> {
    let rhs_cols = b.first().map_or(0, Vec::len);
    let kind = a.first().and_then(|r| r.first()).map(Scalar::kind)?;
    let mut aug: Vec<Vec<Scalar>> = a
        .into_iter()
        .zip(b)
        .map(|(mut r, rb)| {
            r.extend(rb);
            r
        })
        .collect();
    let pivots = rref(&mut aug, unknowns);
    let consistent = aug[pivots.len()..]
        .iter()
        .all(|row| row[unknowns..].iter().all(Scalar::is_zero));
    if !consistent {
        return None;
    }
    let mut x = vec![vec![Scalar::zero(kind); rhs_cols]; unknowns];
    for (i, &p) in pivots.iter().enumerate() {
        x[p] = aug[i][unknowns..].to_vec();
    }
    Some(x)
}

/// Basis of the right null space of `a` (`rows x cols`), one vector per free
/// column.
pub(crate) fn nullspace(mut a: Vec<Vec<Scalar>>, cols: usize) -> Vec<Vec<Scalar>> {
    let Some(kind) = a.first().and_then(|r| r.first()).map(Scalar::kind) else {
        return Vec::new();
    };
    let pivots = rref(&mut a, cols);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Scalar::zero(kind); cols];
            v[f] = Scalar::one(kind);
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = -&a[i][f];
            }
            v
        })
        .collect()
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&SquareMatrix> for &SquareMatrix {
            type Output = SquareMatrix;
            fn $method(self, o: &SquareMatrix) -> SquareMatrix {
                match self.$checked(o) {
                    Ok(m) => m,
                    Err(e) => panic!("{e}"),
                }
            }
        }
        impl $trait<SquareMatrix> for SquareMatrix {
            type Output = SquareMatrix;
            fn $method(self, o: SquareMatrix) -> SquareMatrix {
                (&self).$method(&o)
            }
        }
        impl $trait<&SquareMatrix> for SquareMatrix {
            type Output = SquareMatrix;
            fn $method(self, o: &SquareMatrix) -> SquareMatrix {
                (&self).$method(o)
            }
        }
        impl $trait<SquareMatrix> for &SquareMatrix {
            type Output = SquareMatrix;
            fn $method(self, o: SquareMatrix) -> SquareMatrix {
                self.$method(&o)
            }
        }
    };
}

forward_binop!(Mul, mul, mat_mul);
forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);

impl Neg for &SquareMatrix {
    type Output = SquareMatrix;
    fn neg(self) -> SquareMatrix {
        SquareMatrix {
            dim: self.dim,
            kind: self.kind,
            data: self.data.iter().map(|a| -a).collect(),
        }
    }
}

impl fmt::Display for SquareMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, row) in self.rows().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            f.write_str("[")?;
            for (j, s) in row.iter().enumerate() {
                if j > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{s}")?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: ScalarKind = ScalarKind::Rational;

    fn q(n: i64, d: i64) -> Scalar {
        Scalar::from_ratio(Q, n, d).unwrap()
    }

    fn n2() -> SquareMatrix {
        SquareMatrix::from_ints(Q, [[0, 1], [0, 0]])
    }

    #[test]
    fn multiplication_examples() {
        let a = SquareMatrix::from_ints(Q, [[1, 2], [3, 4]]);
        let i = SquareMatrix::identity(2, Q);
        assert_eq!(&i * &a, a);
        assert!((&SquareMatrix::zeros(2, Q) * &a).is_zero());
        assert!((&n2() * &n2()).is_zero());
        assert!(matches!(
            a.mat_mul(&SquareMatrix::identity(3, Q)),
            Err(Error::DimensionMismatch { .. })
        ));
        assert!(matches!(
            a.mat_mul(&SquareMatrix::identity(2, ScalarKind::Mod(5))),
            Err(Error::ScalarMismatch { .. })
        ));
    }

    #[test]
    fn power_examples() {
        let a = SquareMatrix::from_ints(Q, [[1, 2], [3, 4]]);
        assert!(a.pow(0).is_identity());
        assert!(n2().pow(2).is_zero());
        let two = SquareMatrix::from_ints(Q, [[2]]);
        assert_eq!(two.pow(3), SquareMatrix::from_ints(Q, [[8]]));
        assert_eq!(a.pow(5), &(&(&(&a * &a) * &a) * &a) * &a);
    }

    #[test]
    fn rank_examples() {
        assert_eq!(SquareMatrix::identity(3, Q).rank().unwrap(), 3);
        assert_eq!(SquareMatrix::zeros(3, Q).rank().unwrap(), 0);
        assert_eq!(n2().rank().unwrap(), 1);
        let composite = SquareMatrix::identity(2, ScalarKind::Mod(6));
        assert_eq!(composite.rank(), Err(Error::UnsupportedRing(ScalarKind::Mod(6))));
    }

    #[test]
    fn solve_left_examples() {
        let b = SquareMatrix::from_ints(Q, [[1, 2], [3, 4]]);
        assert_eq!(SquareMatrix::identity(2, Q).solve_left(&b).unwrap(), Some(b.clone()));
        assert_eq!(SquareMatrix::zeros(2, Q).solve_left(&b).unwrap(), None);
        let e = SquareMatrix::from_ints(Q, [[1, 0], [0, 0]]);
        let x = e.solve_left(&e).unwrap().unwrap();
        assert_eq!(&x * &e, e);
        assert_eq!(x, e);
    }

    #[test]
    fn inverse_examples() {
        assert!(SquareMatrix::identity(3, Q).inverse().unwrap().is_identity());
        assert_eq!(SquareMatrix::from_ints(Q, [[2]]).inverse(), Some(SquareMatrix::from_fn(1, Q, |_, _| q(1, 2))));
        assert_eq!(n2().inverse(), None);
    }

    #[test]
    fn inverse_over_composite_modulus() {
        let m = ScalarKind::Mod(6);
        // det = 1*5 - 2*3 = -1, a unit
        let a = SquareMatrix::from_ints(m, [[1, 2], [3, 5]]);
        let x = a.inverse().unwrap();
        assert!((&a * &x).is_identity());
        assert!((&x * &a).is_identity());
        // det = 2, not a unit mod 6
        assert_eq!(SquareMatrix::from_ints(m, [[2, 0], [0, 1]]).inverse(), None);
    }

    #[test]
    fn nilpotency_examples() {
        assert!(SquareMatrix::zeros(2, Q).is_nilpotent());
        assert!(!SquareMatrix::identity(2, Q).is_nilpotent());
        assert!(SquareMatrix::from_ints(Q, [[0, 1, 0], [0, 0, 1], [0, 0, 0]]).is_nilpotent());
    }

    #[test]
    fn charpoly_of_companion_like() {
        // [[1,2],[3,4]] -> t^2 - 5t - 2
        let p = SquareMatrix::from_ints(Q, [[1, 2], [3, 4]]).charpoly();
        assert_eq!(p.coeffs(), &[q(-2, 1), q(-5, 1), q(1, 1)]);
        let d = SquareMatrix::from_ints(Q, [[2, 1, 0], [0, 2, 0], [0, 0, 5]]);
        assert_eq!(d.determinant(), q(20, 1));
    }

    #[test]
    fn inner_inverse_satisfies_aga() {
        let a = SquareMatrix::from_ints(Q, [[1, 2, 3], [2, 4, 6], [1, 0, 1]]);
        let g = a.inner_inverse().unwrap();
        assert_eq!(&(&a * &g) * &a, a);
    }

    #[test]
    fn double_commutant_of_polynomials() {
        let b = SquareMatrix::from_ints(Q, [[1, 1, 0], [0, 1, 0], [0, 0, 2]]);
        let a = b.eval_poly(&[q(1, 1), q(3, 1), q(1, 1)]);
        assert!(a.in_double_commutant(&b).unwrap());
        // does not even commute with b
        let e = SquareMatrix::from_ints(Q, [[0, 0, 0], [1, 0, 0], [0, 0, 0]]);
        assert!(!e.in_double_commutant(&b).unwrap());
    }
}
