//! Transfers between `1 - a` and `1 - b` for pairs with `ab^n = b^(n+1)` and
//! `ba^n = a^(n+1)`.
//!
//! Useful identities behind the formulas: `(1 - a) b^n = b^n (1 - b)`,
//! `(1 - b) a^n = a^n (1 - a)`, `a^n b^n = b^(2n)` and `b^n a^n = a^(2n)`.

use rand::Rng;

use crate::drazin::{
    verify_drazin_side, verify_gdrazin_side, verify_regular_side, verify_strongly_pi_side,
};
use crate::error::{Error, Result};
use crate::gen::{conjugate, jordan_matrix, random_invertible, random_matrix, random_unit};
use crate::matrix::SquareMatrix;
use crate::report::{Side, Witness, WitnessKind};
use crate::ringlab::FiniteRingSpec;
use crate::scalar::{Scalar, ScalarKind};

/// Pair enumeration is capped at this many candidate pairs.
pub const PAIR_BUDGET: u128 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntertwinePair {
    a: SquareMatrix,
    b: SquareMatrix,
    n: usize,
}

impl IntertwinePair {
    pub fn new(a: SquareMatrix, b: SquareMatrix, n: usize) -> Result<Self> {
        if !Self::holds(&a, &b, n)? {
            return Err(Error::InvariantViolation(format!("ab^{n} != b^{} or ba^{n} != a^{}", n + 1, n + 1)));
        }
        Ok(IntertwinePair { a, b, n })
    }

    /// Whether `ab^n = b^(n+1)` and `ba^n = a^(n+1)`.
    pub fn holds(a: &SquareMatrix, b: &SquareMatrix, n: usize) -> Result<bool> {
        a.compatible(b)?;
        if n == 0 {
            return Err(Error::precondition("pair exponent must be positive"));
        }
        let an = a.pow(n as u32);
        let bn = b.pow(n as u32);
        Ok(a * &bn == b * &bn && b * &an == a * &an)
    }

    pub fn a(&self) -> &SquareMatrix {
        &self.a
    }

    pub fn b(&self) -> &SquareMatrix {
        &self.b
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn one_minus_a(&self) -> SquareMatrix {
        self.a.one_minus()
    }

    pub fn one_minus_b(&self) -> SquareMatrix {
        self.b.one_minus()
    }

    /// The same pair with the roles of `a` and `b` exchanged.
    pub fn swapped(&self) -> Self {
        IntertwinePair { a: self.b.clone(), b: self.a.clone(), n: self.n }
    }
}

/// `1 + m + ... + m^(2n-1)`.
fn power_sum(m: &SquareMatrix, n: usize) -> SquareMatrix {
    let mut sum = SquareMatrix::identity(m.dim(), m.kind());
    let mut term = sum.clone();
    for _ in 1..2 * n {
        term = &term * m;
        sum = &sum + &term;
    }
    sum
}

fn complement(side: Side, x: &SquareMatrix, m: &SquareMatrix) -> SquareMatrix {
    match side {
        Side::Left => (x * m).one_minus(),
        Side::Right => (m * x).one_minus(),
    }
}

/// `sum_{i<k} (1 - m^(2n))^i`, zero when `k = 0`.
fn geometric(m2n: &SquareMatrix, k: usize) -> SquareMatrix {
    let step = m2n.one_minus();
    let mut term = SquareMatrix::identity(m2n.dim(), m2n.kind());
    let mut sum = SquareMatrix::zeros(m2n.dim(), m2n.kind());
    for _ in 0..k {
        sum = &sum + &term;
        term = &term * &step;
    }
    sum
}

fn check(ok: bool, err: impl FnOnce() -> Error) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(err())
    }
}

/// Maps a witness for `1 - a` to one for `1 - b`. The reverse direction is
/// the same map applied to the swapped pair.
struct Transfer<'p> {
    pair: &'p IntertwinePair,
    side: Side,
}

impl Transfer<'_> {
    fn an(&self) -> SquareMatrix {
        self.pair.a.pow(self.pair.n as u32)
    }

    fn bn(&self) -> SquareMatrix {
        self.pair.b.pow(self.pair.n as u32)
    }

    /// `1 + sum_{i=1}^{2n-1} b^i + a^n x b^n`
    fn simple(&self, x: &SquareMatrix) -> SquareMatrix {
        &power_sum(&self.pair.b, self.pair.n) + &(&(&self.an() * x) * &self.bn())
    }

    /// `(1 - a^n r p b^n)(1 + sum b^i) + a^n x b^n`, also checking that the
    /// order of `r` and `p` does not matter.
    fn drazin(&self, x: &SquareMatrix, k: usize) -> Result<SquareMatrix> {
        let (an, bn) = (self.an(), self.bn());
        let p = complement(self.side, x, &self.pair.one_minus_a());
        let r = geometric(&(&an * &an), k);
        let rp = &(&(&an * &r) * &p) * &bn;
        let pr = &(&(&an * &p) * &r) * &bn;
        check(rp == pr, || Error::InvariantViolation("a^n r p b^n != a^n p r b^n".into()))?;
        Ok(&(&rp.one_minus() * &power_sum(&self.pair.b, self.pair.n)) + &(&(&an * x) * &bn))
    }

    /// `(1 - a^n B^-1 p b^n)(1 + sum b^i) + a^n x b^n` with
    /// `B = 1 - p (1 - a^(2n))`; returns the witness and `B`.
    fn gdrazin(&self, x: &SquareMatrix) -> Result<(SquareMatrix, SquareMatrix)> {
        let (an, bn) = (self.an(), self.bn());
        let p = complement(self.side, x, &self.pair.one_minus_a());
        let bracket = (&p * &(&an * &an).one_minus()).one_minus();
        let inv = bracket
            .inverse()
            .ok_or_else(|| Error::SingularResolvent(format!("{} 1 - p (1 - a^2n)", self.side.name())))?;
        let corr = (&(&(&an * &inv) * &p) * &bn).one_minus();
        let y = &(&corr * &power_sum(&self.pair.b, self.pair.n)) + &(&(&an * x) * &bn);
        Ok((y, bracket))
    }
}

fn oriented(pair: &IntertwinePair, reverse: bool) -> IntertwinePair {
    if reverse {
        pair.swapped()
    } else {
        pair.clone()
    }
}

fn label(side: Side, reverse: bool) -> String {
    format!("{}{}", side.name(), if reverse { " reverse" } else { "" })
}

fn regular_impl(side: Side, pair: &IntertwinePair, x: &SquareMatrix, reverse: bool) -> Result<Witness> {
    let p = oriented(pair, reverse);
    let l = label(side, reverse);
    check(verify_regular_side(side, &p.one_minus_a(), x), || Error::precondition(format!("{l}: source not regular")))?;
    let y = Transfer { pair: &p, side }.simple(x);
    check(verify_regular_side(side, &p.one_minus_b(), &y), || {
        Error::InvariantViolation(format!("{l}: transferred regular witness fails"))
    })?;
    Witness::new(y, side, WitnessKind::Regular, None)
}

/// Regular witness for `1 - b` from one for `1 - a`.
pub fn regular_transfer_4(side: Side, pair: &IntertwinePair, x: &SquareMatrix) -> Result<Witness> {
    regular_impl(side, pair, x, false)
}

/// Regular witness for `1 - a` from one for `1 - b`: `1 + sum a^i + b^n y a^n`.
pub fn reverse_regular_transfer_4(side: Side, pair: &IntertwinePair, y: &SquareMatrix) -> Result<Witness> {
    regular_impl(side, pair, y, true)
}

fn strong_pi_impl(side: Side, pair: &IntertwinePair, x: &SquareMatrix, idx: usize, reverse: bool) -> Result<Witness> {
    let p = oriented(pair, reverse);
    let l = label(side, reverse);
    check(verify_strongly_pi_side(side, &p.one_minus_a(), x, idx), || {
        Error::precondition(format!("{l}: source not strongly pi-regular at {idx}"))
    })?;
    let y = Transfer { pair: &p, side }.simple(x);
    check(verify_strongly_pi_side(side, &p.one_minus_b(), &y, idx), || {
        Error::InvariantViolation(format!("{l}: transferred strongly pi-regular witness fails"))
    })?;
    Witness::new(y, side, WitnessKind::StronglyPiRegular, Some(idx))
}

pub fn strong_pi_transfer_4(side: Side, pair: &IntertwinePair, x: &SquareMatrix, idx: usize) -> Result<Witness> {
    strong_pi_impl(side, pair, x, idx, false)
}

pub fn reverse_strong_pi_transfer_4(side: Side, pair: &IntertwinePair, y: &SquareMatrix, idx: usize) -> Result<Witness> {
    strong_pi_impl(side, pair, y, idx, true)
}

fn drazin_impl(side: Side, pair: &IntertwinePair, x: &SquareMatrix, k: usize, reverse: bool) -> Result<Witness> {
    let p = oriented(pair, reverse);
    let l = label(side, reverse);
    check(verify_drazin_side(side, &p.one_minus_a(), x, k), || {
        Error::precondition(format!("{l}: source not a Drazin inverse at {k}"))
    })?;
    let y = Transfer { pair: &p, side }.drazin(x, k)?;
    check(verify_drazin_side(side, &p.one_minus_b(), &y, k), || {
        Error::InvariantViolation(format!("{l}: transferred Drazin inverse fails at {k}"))
    })?;
    Witness::new(y, side, WitnessKind::Drazin, Some(k))
}

pub fn drazin_transfer_4(side: Side, pair: &IntertwinePair, x: &SquareMatrix, k: usize) -> Result<Witness> {
    drazin_impl(side, pair, x, k, false)
}

/// `(1 - b^n p' r' a^n)(1 + sum a^i) + b^n y a^n`.
pub fn reverse_drazin_transfer_4(side: Side, pair: &IntertwinePair, y: &SquareMatrix, k: usize) -> Result<Witness> {
    drazin_impl(side, pair, y, k, true)
}

pub fn group_transfer_4(side: Side, pair: &IntertwinePair, x: &SquareMatrix) -> Result<Witness> {
    let w = drazin_impl(side, pair, x, 1, false)?;
    Witness::new(w.candidate, side, WitnessKind::Group, Some(1))
}

pub fn reverse_group_transfer_4(side: Side, pair: &IntertwinePair, y: &SquareMatrix) -> Result<Witness> {
    let w = drazin_impl(side, pair, y, 1, true)?;
    Witness::new(w.candidate, side, WitnessKind::Group, Some(1))
}

fn gdrazin_impl(side: Side, pair: &IntertwinePair, x: &SquareMatrix, reverse: bool) -> Result<(Witness, SquareMatrix)> {
    let p = oriented(pair, reverse);
    let l = label(side, reverse);
    check(verify_gdrazin_side(side, &p.one_minus_a(), x), || {
        Error::precondition(format!("{l}: source not a generalized Drazin inverse"))
    })?;
    let (y, bracket) = Transfer { pair: &p, side }.gdrazin(x)?;
    check(verify_gdrazin_side(side, &p.one_minus_b(), &y), || {
        Error::InvariantViolation(format!("{l}: transferred generalized Drazin inverse fails"))
    })?;
    Ok((Witness::new(y, side, WitnessKind::GeneralizedDrazin, None)?, bracket))
}

/// Returns the witness for `1 - b` and the bracket `1 - p(1 - a^(2n))`.
pub fn gdrazin_transfer_4(side: Side, pair: &IntertwinePair, x: &SquareMatrix) -> Result<(Witness, SquareMatrix)> {
    gdrazin_impl(side, pair, x, false)
}

pub fn reverse_gdrazin_transfer_4(side: Side, pair: &IntertwinePair, y: &SquareMatrix) -> Result<(Witness, SquareMatrix)> {
    gdrazin_impl(side, pair, y, true)
}

/// `(ac, db)` as a pair when `ac(db)^n = (db)^(n+1)` and `db(ac)^n = (ac)^(n+1)`.
pub fn quad_to_pair(
    a: &SquareMatrix,
    b: &SquareMatrix,
    c: &SquareMatrix,
    d: &SquareMatrix,
    n: usize,
) -> Result<Option<IntertwinePair>> {
    let ac = a * c;
    let db = d * b;
    if IntertwinePair::holds(&ac, &db, n)? {
        IntertwinePair::new(ac, db, n).map(Some)
    } else {
        Ok(None)
    }
}

/// Two idempotents with the same range: `a = S diag(I_r, 0) S^-1` and
/// `b = S [[I_r, X], [0, 0]] S^-1`, so `ab = b = b^2` and `ba = a = a^2`.
pub fn pair_idempotent_family(rng: &mut impl Rng, r: usize, m: usize, kind: ScalarKind) -> Result<IntertwinePair> {
    if r > m || m == 0 {
        return Err(Error::precondition(format!("rank {r} out of range for dimension {m}")));
    }
    let s = random_invertible(rng, m, kind);
    let x = random_matrix(rng, m, kind);
    let a = SquareMatrix::from_fn(m, kind, |i, j| Scalar::from_i64(kind, (i == j && i < r) as i64));
    let b = SquareMatrix::from_fn(m, kind, |i, j| {
        if i >= r {
            Scalar::zero(kind)
        } else if j < r {
            Scalar::from_i64(kind, (i == j) as i64)
        } else {
            x.get(i, j).clone()
        }
    });
    IntertwinePair::new(conjugate(&s, &a), conjugate(&s, &b), 1)
}

/// `a = S diag(A, 0) S^-1`, `b = S [[A, AX], [0, 0]] S^-1` with `A` of size
/// `r` carrying a `J_k(1)` block, so `1 - a` has Drazin index `k`. Valid for
/// every exponent `n`.
pub fn pair_planted_family(
    rng: &mut impl Rng,
    dim: usize,
    k: usize,
    n: usize,
    kind: ScalarKind,
) -> Result<IntertwinePair> {
    if k > dim || dim == 0 {
        return Err(Error::precondition(format!("index {k} out of range for dimension {dim}")));
    }
    let r = rng.gen_range(k.max(1)..=dim);
    let mut blocks = Vec::new();
    if k > 0 {
        blocks.push((Scalar::one(kind), k));
    }
    let one = Scalar::one(kind);
    for _ in k..r {
        let mut u = random_unit(rng, kind);
        while u == one {
            u = random_unit(rng, kind);
        }
        blocks.push((u, 1));
    }
    let inner = jordan_matrix(kind, &blocks)?;
    let x = random_matrix(rng, dim, kind);
    let a = SquareMatrix::from_fn(dim, kind, |i, j| {
        if i < r && j < r {
            inner.get(i, j).clone()
        } else {
            Scalar::zero(kind)
        }
    });
    // (A X) block: rows < r, columns >= r
    let ax = SquareMatrix::from_fn(dim, kind, |i, j| {
        if i < r && j >= r {
            (0..r).fold(Scalar::zero(kind), |acc, t| &acc + &(inner.get(i, t) * x.get(t, j)))
        } else {
            Scalar::zero(kind)
        }
    });
    let b = &a + &ax;
    let s = random_invertible(rng, dim, kind);
    IntertwinePair::new(conjugate(&s, &a), conjugate(&s, &b), n)
}

/// Every pair in `ring` satisfying the intertwining identities with exponent
/// `n`, in lexicographic order of `(a, b)`.
pub fn pair_exhaustive(ring: &FiniteRingSpec, n: usize) -> Result<Vec<IntertwinePair>> {
    let count = ring.element_count();
    let pairs = count.saturating_mul(count);
    if pairs > PAIR_BUDGET {
        return Err(Error::BudgetExceeded { elements: pairs, budget: PAIR_BUDGET });
    }
    if n == 0 {
        return Err(Error::precondition("pair exponent must be positive"));
    }
    let elems: Vec<SquareMatrix> = ring.elements().collect();
    let powers: Vec<(SquareMatrix, SquareMatrix)> = elems
        .iter()
        .map(|e| {
            let en = e.pow(n as u32);
            let en1 = e * &en;
            (en, en1)
        })
        .collect();
    let found = crate::par::map_trials(count as u64, |i| {
        let a = &elems[i as usize];
        let (an, an1) = &powers[i as usize];
        elems
            .iter()
            .zip(&powers)
            .filter(|(b, (bn, bn1))| &(a * bn) == bn1 && &(*b * an) == an1)
            .map(|(b, _)| IntertwinePair { a: a.clone(), b: b.clone(), n })
            .collect::<Vec<_>>()
    });
    Ok(found.into_iter().flatten().collect())
}
