//! Jacobson-type transfers between `alpha = 1 - ac` and `beta = 1 - bd` for
//! quads with `acd = dbd` and `dba = aca`.
//!
//! Every forward formula maps a witness for `alpha` to one for `beta`; the
//! reverse formulas go back. The same formula serves both sides: only the
//! predicate checked before and after changes.

use crate::drazin::{
    verify_drazin_side, verify_gdrazin_side, verify_pi_regular_side, verify_regular_side,
    verify_strongly_pi_side,
};
use crate::error::{Error, Result};
use crate::matrix::{solve_linear, SquareMatrix};
use crate::report::{Side, Witness, WitnessKind};
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JacobsonQuad {
    a: SquareMatrix,
    b: SquareMatrix,
    c: SquareMatrix,
    d: SquareMatrix,
}

impl JacobsonQuad {
    /// Checks shapes and both defining identities.
    pub fn new(a: SquareMatrix, b: SquareMatrix, c: SquareMatrix, d: SquareMatrix) -> Result<Self> {
        for m in [&b, &c, &d] {
            a.compatible(m)?;
        }
        if &(&a * &c) * &d != &(&d * &b) * &d {
            return Err(Error::InvariantViolation("acd != dbd".into()));
        }
        if &(&d * &b) * &a != &(&a * &c) * &a {
            return Err(Error::InvariantViolation("dba != aca".into()));
        }
        Ok(JacobsonQuad { a, b, c, d })
    }

    pub fn a(&self) -> &SquareMatrix {
        &self.a
    }

    pub fn b(&self) -> &SquareMatrix {
        &self.b
    }

    pub fn c(&self) -> &SquareMatrix {
        &self.c
    }

    pub fn d(&self) -> &SquareMatrix {
        &self.d
    }

    pub fn dim(&self) -> usize {
        self.a.dim()
    }

    pub fn ac(&self) -> SquareMatrix {
        &self.a * &self.c
    }

    pub fn bd(&self) -> SquareMatrix {
        &self.b * &self.d
    }

    pub fn bac(&self) -> SquareMatrix {
        &self.b * &self.ac()
    }

    pub fn dbac(&self) -> SquareMatrix {
        &self.d * &self.bac()
    }

    pub fn alpha(&self) -> SquareMatrix {
        self.ac().one_minus()
    }

    pub fn beta(&self) -> SquareMatrix {
        self.bd().one_minus()
    }

    pub fn into_parts(self) -> [SquareMatrix; 4] {
        [self.a, self.b, self.c, self.d]
    }
}

/// The classical quad `(a, c, c, a)`, for which `beta = 1 - ca`.
pub fn quad_from_classical(a: &SquareMatrix, c: &SquareMatrix) -> Result<JacobsonQuad> {
    JacobsonQuad::new(a.clone(), c.clone(), c.clone(), a.clone())
}

/// Solves `acd = dbd`, `aca = dba` for `c`, which enters linearly. Free
/// entries of `c` are set to zero.
pub fn quad_solve(a: &SquareMatrix, d: &SquareMatrix, b: &SquareMatrix) -> Result<Option<JacobsonQuad>> {
    a.compatible(d)?;
    a.compatible(b)?;
    if !a.kind().is_field() {
        return Err(Error::UnsupportedRing(a.kind()));
    }
    let n = a.dim();
    let kind = a.kind();
    let mut rows = Vec::with_capacity(2 * n * n);
    let mut rhs = Vec::with_capacity(2 * n * n);
    // (a c m)_{ij} = sum_{k,l} a_{ik} c_{kl} m_{lj}, with unknown c_{kl} at k*n + l
    for (m, target) in [(d, &(&(d * b) * d)), (a, &(&(d * b) * a))] {
        for i in 0..n {
            for j in 0..n {
                let mut row = Vec::with_capacity(n * n);
                for k in 0..n {
                    for l in 0..n {
                        row.push(a.get(i, k) * m.get(l, j));
                    }
                }
                rows.push(row);
                rhs.push(vec![target.get(i, j).clone()]);
            }
        }
    }
    let Some(sol) = solve_linear(rows, rhs, n * n) else {
        return Ok(None);
    };
    let c = SquareMatrix::from_fn(n, kind, |k, l| sol[k * n + l][0].clone());
    JacobsonQuad::new(a.clone(), b.clone(), c, d.clone()).map(Some)
}

fn one(m: &SquareMatrix) -> SquareMatrix {
    SquareMatrix::identity(m.dim(), m.kind())
}

/// `1 - x m` on the left, `1 - m x` on the right: the spectral idempotent
/// complementary to the witness.
fn complement(side: Side, x: &SquareMatrix, m: &SquareMatrix) -> SquareMatrix {
    match side {
        Side::Left => (x * m).one_minus(),
        Side::Right => (m * x).one_minus(),
    }
}

/// `sum_{j<k} (1 - e^2)^j`, zero when `k = 0`.
fn geometric(e: &SquareMatrix, k: usize) -> SquareMatrix {
    let step = (e * e).one_minus();
    let mut term = one(e);
    let mut sum = SquareMatrix::zeros(e.dim(), e.kind());
    for _ in 0..k {
        sum = &sum + &term;
        term = &term * &step;
    }
    sum
}

fn post(side: Side, ok: bool, what: &str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::InvariantViolation(format!("{} {what}", side.name())))
    }
}

fn pre(side: Side, ok: bool, what: &str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::precondition(format!("{} {what}", side.name())))
    }
}

/// `y = 1 + bd + bacxd`.
fn simple_forward(q: &JacobsonQuad, x: &SquareMatrix) -> SquareMatrix {
    &(&one(x) + &q.bd()) + &(&(&q.bac() * x) * q.d())
}

/// `x = 1 + ac + dybac`.
fn simple_reverse(q: &JacobsonQuad, y: &SquareMatrix) -> SquareMatrix {
    &(&one(y) + &q.ac()) + &(&(q.d() * y) * &q.bac())
}

/// Regular witness for `beta` from one for `alpha`: `y = 1 + bd + bacxd`.
pub fn regular_transfer(side: Side, q: &JacobsonQuad, x: &SquareMatrix) -> Result<Witness> {
    pre(side, verify_regular_side(side, &q.alpha(), x), "regularity of alpha")?;
    let y = simple_forward(q, x);
    post(side, verify_regular_side(side, &q.beta(), &y), "regularity of beta")?;
    Witness::new(y, side, WitnessKind::Regular, None)
}

pub fn left_regular_transfer(q: &JacobsonQuad, x: &SquareMatrix) -> Result<Witness> {
    regular_transfer(Side::Left, q, x)
}

pub fn right_regular_transfer(q: &JacobsonQuad, x: &SquareMatrix) -> Result<Witness> {
    regular_transfer(Side::Right, q, x)
}

/// Regular witness for `alpha` from one for `beta`: `x = 1 + ac + dybac`.
pub fn reverse_regular_transfer(side: Side, q: &JacobsonQuad, y: &SquareMatrix) -> Result<Witness> {
    pre(side, verify_regular_side(side, &q.beta(), y), "regularity of beta")?;
    let x = simple_reverse(q, y);
    post(side, verify_regular_side(side, &q.alpha(), &x), "regularity of alpha")?;
    Witness::new(x, side, WitnessKind::Regular, None)
}

fn binomial(n: usize, i: usize) -> i64 {
    (0..i).fold(1i64, |acc, t| acc * (n - t) as i64 / (t + 1) as i64)
}

/// `b_n = sum_i C(n,i) (-1)^(i+1) (bd)^(i-1) b` and
/// `c_n = sum_i C(n,i) (-1)^(i+1) c (ac)^(i-1)` for `i = 1..=n`, so that
/// `(1 - bd)^n = 1 - b_n d` and `(1 - ac)^n = 1 - a c_n`.
pub fn binomial_elements(q: &JacobsonQuad, n: usize) -> Result<(SquareMatrix, SquareMatrix)> {
    if n == 0 {
        return Err(Error::precondition("binomial elements need n >= 1"));
    }
    let kind = q.a().kind();
    let (bd, ac) = (q.bd(), q.ac());
    let mut bn = SquareMatrix::zeros(q.dim(), kind);
    let mut cn = bn.clone();
    let mut bd_pow = one(&bd);
    let mut ac_pow = one(&ac);
    for i in 1..=n {
        let sign = if i % 2 == 1 { 1 } else { -1 };
        let coef = Scalar::from_i64(kind, sign * binomial(n, i));
        bn = &bn + &(&bd_pow * q.b()).scale(&coef);
        cn = &cn + &(q.c() * &ac_pow).scale(&coef);
        bd_pow = &bd_pow * &bd;
        ac_pow = &ac_pow * &ac;
    }
    Ok((bn, cn))
}

/// Outcome of expanding the binomial elements for one `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BinomialProbe {
    /// `(1 - bd)^n = 1 - b_n d`
    pub beta_power: bool,
    /// `(1 - ac)^n = 1 - a c_n`
    pub alpha_power: bool,
    /// `a c_n d = d b_n d`
    pub acnd_dbnd: bool,
    /// `d b_n a = a c_n a`
    pub dbna_acna: bool,
}

impl BinomialProbe {
    pub fn all(&self) -> bool {
        self.beta_power && self.alpha_power && self.acnd_dbnd && self.dbna_acna
    }
}

pub fn binomial_probe(q: &JacobsonQuad, n: usize) -> Result<BinomialProbe> {
    let (bn, cn) = binomial_elements(q, n)?;
    let (a, d) = (q.a(), q.d());
    let acn = a * &cn;
    let dbn = d * &bn;
    Ok(BinomialProbe {
        beta_power: q.beta().pow(n as u32) == (&bn * d).one_minus(),
        alpha_power: q.alpha().pow(n as u32) == acn.one_minus(),
        acnd_dbnd: &acn * d == &dbn * d,
        dbna_acna: &dbn * a == &acn * a,
    })
}

/// The quad `(a, b_n, c_n, d)`, whose `alpha` and `beta` are the `n`-th powers
/// of the original ones.
pub fn power_quad(q: &JacobsonQuad, n: usize) -> Result<JacobsonQuad> {
    let (bn, cn) = binomial_elements(q, n)?;
    JacobsonQuad::new(q.a().clone(), bn, cn, q.d().clone())
}

/// pi-regular transfer: a regular transfer on the power quad, since
/// `x alpha^(2n) = alpha^n` says `x` is a regular witness for `alpha^n`.
pub fn pi_regular_transfer(side: Side, q: &JacobsonQuad, x: &SquareMatrix, n: usize) -> Result<Witness> {
    pre(side, verify_pi_regular_side(side, &q.alpha(), x, n), "pi-regularity of alpha")?;
    let qn = power_quad(q, n)?;
    let y = simple_forward(&qn, x);
    post(side, verify_pi_regular_side(side, &q.beta(), &y, n), "pi-regularity of beta")?;
    Witness::new(y, side, WitnessKind::PiRegular, Some(n))
}

pub fn reverse_pi_regular_transfer(side: Side, q: &JacobsonQuad, y: &SquareMatrix, n: usize) -> Result<Witness> {
    pre(side, verify_pi_regular_side(side, &q.beta(), y, n), "pi-regularity of beta")?;
    let qn = power_quad(q, n)?;
    let x = simple_reverse(&qn, y);
    post(side, verify_pi_regular_side(side, &q.alpha(), &x, n), "pi-regularity of alpha")?;
    Witness::new(x, side, WitnessKind::PiRegular, Some(n))
}

/// Strongly pi-regular transfer, `y = 1 + bd + bacxd` at the same index.
pub fn strong_pi_transfer(side: Side, q: &JacobsonQuad, x: &SquareMatrix, p: usize) -> Result<Witness> {
    pre(side, verify_strongly_pi_side(side, &q.alpha(), x, p), "strong pi-regularity of alpha")?;
    let y = simple_forward(q, x);
    post(side, verify_strongly_pi_side(side, &q.beta(), &y, p), "strong pi-regularity of beta")?;
    Witness::new(y, side, WitnessKind::StronglyPiRegular, Some(p))
}

pub fn reverse_strong_pi_transfer(side: Side, q: &JacobsonQuad, y: &SquareMatrix, p: usize) -> Result<Witness> {
    pre(side, verify_strongly_pi_side(side, &q.beta(), y, p), "strong pi-regularity of beta")?;
    let x = simple_reverse(q, y);
    post(side, verify_strongly_pi_side(side, &q.alpha(), &x, p), "strong pi-regularity of alpha")?;
    Witness::new(x, side, WitnessKind::StronglyPiRegular, Some(p))
}

/// `y = (1 - bac p r d)(1 + bd) + bacxd` with `r = sum_{j<k} (1 - (ac)^2)^j`
/// and `p` the complement of `x alpha`.
fn drazin_forward(side: Side, q: &JacobsonQuad, x: &SquareMatrix, k: usize) -> SquareMatrix {
    let (bac, d) = (q.bac(), q.d());
    let p = complement(side, x, &q.alpha());
    let r = geometric(&q.ac(), k);
    let correction = (&(&(&bac * &p) * &r) * d).one_minus();
    &(&correction * &(&one(x) + &q.bd())) + &(&(&bac * x) * d)
}

/// `x = (1 - d p' r' bac)(1 + ac) + dybac` with `r' = sum_{j<k} (1 - (bd)^2)^j`.
fn drazin_reverse(side: Side, q: &JacobsonQuad, y: &SquareMatrix, k: usize) -> SquareMatrix {
    let (bac, d) = (q.bac(), q.d());
    let p = complement(side, y, &q.beta());
    let r = geometric(&q.bd(), k);
    let correction = (&(&(d * &p) * &r) * &bac).one_minus();
    &(&correction * &(&one(y) + &q.ac())) + &(&(d * y) * &bac)
}

/// One-sided Drazin transfer at index `k`.
pub fn drazin_transfer(side: Side, q: &JacobsonQuad, x: &SquareMatrix, k: usize) -> Result<Witness> {
    pre(side, verify_drazin_side(side, &q.alpha(), x, k), "Drazin inverse of alpha")?;
    let y = drazin_forward(side, q, x, k);
    post(side, verify_drazin_side(side, &q.beta(), &y, k), "Drazin transfer to beta")?;
    Witness::new(y, side, WitnessKind::Drazin, Some(k))
}

pub fn reverse_drazin_transfer(side: Side, q: &JacobsonQuad, y: &SquareMatrix, k: usize) -> Result<Witness> {
    pre(side, verify_drazin_side(side, &q.beta(), y, k), "Drazin inverse of beta")?;
    let x = drazin_reverse(side, q, y, k);
    post(side, verify_drazin_side(side, &q.alpha(), &x, k), "Drazin transfer to alpha")?;
    Witness::new(x, side, WitnessKind::Drazin, Some(k))
}

/// Group transfer: the Drazin transfer at index one, where `r = 1`.
pub fn group_transfer(side: Side, q: &JacobsonQuad, x: &SquareMatrix) -> Result<Witness> {
    let w = drazin_transfer(side, q, x, 1)?;
    Witness::new(w.candidate, side, WitnessKind::Group, Some(1))
}

pub fn reverse_group_transfer(side: Side, q: &JacobsonQuad, y: &SquareMatrix) -> Result<Witness> {
    let w = reverse_drazin_transfer(side, q, y, 1)?;
    Witness::new(w.candidate, side, WitnessKind::Group, Some(1))
}

/// Which factor closes the resolvent bracket in the reverse generalized
/// transfer: `1 - p' beta (1 + bd)` or the printed `1 - p' beta (1 + ac)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReverseBracket {
    Beta,
    AsPrinted,
}

/// `(1 - bac p B^(-1) d)(1 + bd) + bacxd` with `B = 1 - p alpha (1 + ac)`.
/// Returns the witness and the bracket `B`.
pub fn gdrazin_transfer(side: Side, q: &JacobsonQuad, x: &SquareMatrix) -> Result<(Witness, SquareMatrix)> {
    let alpha = q.alpha();
    pre(side, verify_gdrazin_side(side, &alpha, x), "generalized Drazin inverse of alpha")?;
    let p = complement(side, x, &alpha);
    let one_ac = &one(x) + &q.ac();
    let bracket = (&(&p * &alpha) * &one_ac).one_minus();
    let inv = bracket
        .inverse()
        .ok_or_else(|| Error::SingularResolvent(format!("{} 1 - p alpha (1 + ac)", side.name())))?;
    let (bac, d) = (q.bac(), q.d());
    let correction = (&(&(&bac * &p) * &inv) * d).one_minus();
    let y = &(&correction * &(&one(x) + &q.bd())) + &(&(&bac * x) * d);
    let beta = q.beta();
    post(side, verify_gdrazin_side(side, &beta, &y), "generalized Drazin transfer to beta")?;
    Ok((Witness::new(y, side, WitnessKind::GeneralizedDrazin, None)?, bracket))
}

/// `(1 - d p' B'^(-1) bac)(1 + ac) + dybac`; see [`ReverseBracket`] for `B'`.
pub fn reverse_gdrazin_transfer(
    side: Side,
    q: &JacobsonQuad,
    y: &SquareMatrix,
    which: ReverseBracket,
) -> Result<(Witness, SquareMatrix)> {
    let beta = q.beta();
    pre(side, verify_gdrazin_side(side, &beta, y), "generalized Drazin inverse of beta")?;
    let p = complement(side, y, &beta);
    let tail = match which {
        ReverseBracket::Beta => &one(y) + &q.bd(),
        ReverseBracket::AsPrinted => &one(y) + &q.ac(),
    };
    let bracket = (&(&p * &beta) * &tail).one_minus();
    let inv = bracket
        .inverse()
        .ok_or_else(|| Error::SingularResolvent(format!("{} 1 - p' beta (..)", side.name())))?;
    let (bac, d) = (q.bac(), q.d());
    let correction = (&(&(d * &p) * &inv) * &bac).one_minus();
    let x = &(&correction * &(&one(y) + &q.ac())) + &(&(d * y) * &bac);
    post(side, verify_gdrazin_side(side, &q.alpha(), &x), "generalized Drazin transfer to alpha")?;
    Ok((Witness::new(x, side, WitnessKind::GeneralizedDrazin, None)?, bracket))
}

/// From a one-sided Drazin inverse `x` of `ac` with index `k`, the element
/// `y = c x^2 a` is one of `ca` with index `k + 1`. The left case needs `c`
/// invertible, the right case `a`.
pub fn cline_partial(side: Side, a: &SquareMatrix, c: &SquareMatrix, x: &SquareMatrix, k: usize) -> Result<Witness> {
    a.compatible(c)?;
    let ac = a * c;
    pre(side, verify_drazin_side(side, &ac, x, k), "Drazin inverse of ac")?;
    let needs_unit = match side {
        Side::Left => c,
        Side::Right => a,
    };
    pre(side, needs_unit.inverse().is_some(), "Cline case needs an invertible factor")?;
    let y = &(c * &(x * x)) * a;
    post(side, verify_drazin_side(side, &(c * a), &y, k + 1), "Drazin inverse of ca")?;
    Witness::new(y, side, WitnessKind::Drazin, Some(k + 1))
}

pub fn cline_partial_left(a: &SquareMatrix, c: &SquareMatrix, x: &SquareMatrix, k: usize) -> Result<Witness> {
    cline_partial(Side::Left, a, c, x, k)
}

pub fn cline_partial_right(a: &SquareMatrix, c: &SquareMatrix, x: &SquareMatrix, k: usize) -> Result<Witness> {
    cline_partial(Side::Right, a, c, x, k)
}
