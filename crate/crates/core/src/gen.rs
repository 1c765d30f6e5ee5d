//! Seeded random instance generators.
//!
//! Every generator takes an explicit RNG; [`trial_rng`] derives an
//! independent stream per trial so campaigns are reproducible regardless of
//! scheduling.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::matrix::{nullspace, SquareMatrix};
use crate::scalar::{Gaussian, Scalar, ScalarKind};
use crate::transfer::{quad_from_classical, quad_solve, JacobsonQuad};

pub type TrialRng = ChaCha8Rng;

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Independent stream for trial `trial` of a campaign seeded with `seed`.
pub fn trial_rng(seed: u64, trial: u64) -> TrialRng {
    ChaCha8Rng::seed_from_u64(splitmix64(seed ^ splitmix64(trial)))
}

/// Small random entry: integers in `[-3, 3]` over the rationals, real and
/// imaginary parts in `[-2, 2]` over the Gaussian rationals, any residue mod m.
pub fn random_scalar(rng: &mut impl Rng, kind: ScalarKind) -> Scalar {
    match kind {
        ScalarKind::Rational => Scalar::from_i64(kind, rng.gen_range(-3..=3)),
        ScalarKind::Gaussian => Gaussian::from_ints(rng.gen_range(-2..=2), rng.gen_range(-2..=2)).into(),
        ScalarKind::Mod(m) => Scalar::from_i64(kind, rng.gen_range(0..m) as i64),
    }
}

pub fn random_unit(rng: &mut impl Rng, kind: ScalarKind) -> Scalar {
    loop {
        let s = random_scalar(rng, kind);
        if s.is_unit() {
            return s;
        }
    }
}

pub fn random_matrix(rng: &mut impl Rng, n: usize, kind: ScalarKind) -> SquareMatrix {
    SquareMatrix::from_fn(n, kind, |_, _| random_scalar(rng, kind))
}

/// `L U` with unit lower `L` and upper `U` carrying a unit diagonal entry in
/// every position, so invertible over every supported ring.
pub fn random_invertible(rng: &mut impl Rng, n: usize, kind: ScalarKind) -> SquareMatrix {
    let l = SquareMatrix::from_fn(n, kind, |i, j| match i.cmp(&j) {
        std::cmp::Ordering::Greater => random_scalar(rng, kind),
        std::cmp::Ordering::Equal => Scalar::one(kind),
        std::cmp::Ordering::Less => Scalar::zero(kind),
    });
    let u = SquareMatrix::from_fn(n, kind, |i, j| match i.cmp(&j) {
        std::cmp::Ordering::Less => random_scalar(rng, kind),
        std::cmp::Ordering::Equal => random_unit(rng, kind),
        std::cmp::Ordering::Greater => Scalar::zero(kind),
    });
    &l * &u
}

/// Block-diagonal matrix of Jordan blocks `J_size(value)`.
pub fn jordan_matrix(kind: ScalarKind, blocks: &[(Scalar, usize)]) -> Result<SquareMatrix> {
    let n: usize = blocks.iter().map(|b| b.1).sum();
    if n == 0 {
        return Err(Error::EmptyMatrix);
    }
    let mut data = vec![vec![Scalar::zero(kind); n]; n];
    let mut at = 0;
    for (value, size) in blocks {
        if value.kind() != kind {
            return Err(Error::ScalarMismatch { left: kind, right: value.kind() });
        }
        for i in 0..*size {
            data[at + i][at + i] = value.clone();
            if i + 1 < *size {
                data[at + i][at + i + 1] = Scalar::one(kind);
            }
        }
        at += size;
    }
    SquareMatrix::from_rows(data)
}

pub fn conjugate(s: &SquareMatrix, m: &SquareMatrix) -> SquareMatrix {
    let inv = s.inverse().expect("conjugating matrix is invertible");
    &(s * m) * &inv
}

/// `S diag(J_k(0), D) S^-1` with `D` a random unit diagonal: Drazin index
/// exactly `k`.
pub fn planted_index(rng: &mut impl Rng, n: usize, kind: ScalarKind, k: usize) -> SquareMatrix {
    assert!(k <= n, "index {k} exceeds dimension {n}");
    let mut blocks = Vec::new();
    if k > 0 {
        blocks.push((Scalar::zero(kind), k));
    }
    for _ in k..n {
        blocks.push((random_unit(rng, kind), 1));
    }
    let j = jordan_matrix(kind, &blocks).expect("blocks fill the dimension");
    conjugate(&random_invertible(rng, n, kind), &j)
}

/// Random matrix with planted Drazin index drawn from `0..=n`.
pub fn random_planted(rng: &mut impl Rng, n: usize, kind: ScalarKind) -> (SquareMatrix, usize) {
    let k = rng.gen_range(0..=n);
    (planted_index(rng, n, kind, k), k)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum QuadFamily {
    /// `a = d`, `b = c`
    Classical,
    /// `a = d`, `b = 1`, `aca = a^2`
    CaseTwo,
    /// general quads, `c` solved from the two identities
    Solved,
}

impl QuadFamily {
    pub const ALL: [QuadFamily; 3] = [QuadFamily::Classical, QuadFamily::CaseTwo, QuadFamily::Solved];

    pub fn name(self) -> &'static str {
        match self {
            QuadFamily::Classical => "classical",
            QuadFamily::CaseTwo => "case-ii",
            QuadFamily::Solved => "solved",
        }
    }
}

impl std::str::FromStr for QuadFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "classical" | "classical-quad" => Ok(QuadFamily::Classical),
            "case-ii" | "case-II" | "case-II-quad" | "case-ii-quad" => Ok(QuadFamily::CaseTwo),
            "solved" | "solved-quad" => Ok(QuadFamily::Solved),
            _ => Err(Error::Parse(format!("unknown quad family `{s}`"))),
        }
    }
}

/// `(a, c, c, a)` with `a` invertible and `1 - ac` carrying a planted index.
pub fn classical_quad(rng: &mut impl Rng, n: usize, kind: ScalarKind) -> JacobsonQuad {
    let a = random_invertible(rng, n, kind);
    let (alpha, _) = random_planted(rng, n, kind);
    let c = &a.inverse().expect("invertible by construction") * &alpha.one_minus();
    quad_from_classical(&a, &c).expect("classical quads always satisfy the identities")
}

/// `(a, 1, c, a)` with `a = S diag(J_k(1), 0, units) S^-1` and `c = 1 + z`
/// where `aza = 0`, so that `aca = a^2`.
pub fn case_two_quad(rng: &mut impl Rng, n: usize, kind: ScalarKind) -> JacobsonQuad {
    let k = rng.gen_range(0..=n);
    let mut blocks = Vec::new();
    if k > 0 {
        blocks.push((Scalar::one(kind), k));
    }
    if k < n {
        blocks.push((Scalar::zero(kind), 1));
    }
    for _ in k + 1..n {
        blocks.push((random_scalar(rng, kind), 1));
    }
    let s = random_invertible(rng, n, kind);
    let a = conjugate(&s, &jordan_matrix(kind, &blocks).expect("blocks fill the dimension"));
    // z -> aza is linear in the n^2 entries of z
    let zero = Scalar::zero(kind);
    let mut rows = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let mut row = vec![zero.clone(); n * n];
            for p in 0..n {
                for q in 0..n {
                    row[p * n + q] = a.get(i, p) * a.get(q, j);
                }
            }
            rows.push(row);
        }
    }
    let basis = nullspace(rows, n * n);
    let mut z = SquareMatrix::zeros(n, kind);
    for v in &basis {
        let coef = random_scalar(rng, kind);
        z = &z + &SquareMatrix::from_fn(n, kind, |p, q| &v[p * n + q] * &coef);
    }
    let c = &SquareMatrix::identity(n, kind) + &z;
    JacobsonQuad::new(a.clone(), SquareMatrix::identity(n, kind), c, a).expect("aza = 0 forces aca = a^2")
}

/// General quad: `d` invertible, `b = d^-1 (1 - N)` with `N` of planted index,
/// `c` solved from the identities. One draw in three instead takes `a`
/// singular and `d = a e`.
pub fn solved_quad(rng: &mut impl Rng, n: usize, kind: ScalarKind) -> JacobsonQuad {
    loop {
        let (a, d) = if rng.gen_range(0..3) == 0 {
            let k = rng.gen_range(1..=n);
            let a = planted_index(rng, n, kind, k);
            let e = random_invertible(rng, n, kind);
            let d = &a * &e;
            (a, d)
        } else {
            (random_invertible(rng, n, kind), random_invertible(rng, n, kind))
        };
        let (nil, _) = random_planted(rng, n, kind);
        let b = match d.inverse() {
            Some(dinv) => &dinv * &nil.one_minus(),
            None => random_matrix(rng, n, kind),
        };
        if let Ok(Some(q)) = quad_solve(&a, &d, &b) {
            return q;
        }
    }
}

pub fn quad(rng: &mut impl Rng, family: QuadFamily, n: usize, kind: ScalarKind) -> JacobsonQuad {
    match family {
        QuadFamily::Classical => classical_quad(rng, n, kind),
        QuadFamily::CaseTwo => case_two_quad(rng, n, kind),
        QuadFamily::Solved => solved_quad(rng, n, kind),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::drazin::drazin_index;

    const Q: ScalarKind = ScalarKind::Rational;

    #[test]
    fn trial_streams_are_reproducible_and_distinct() {
        let a: u64 = trial_rng(7, 3).gen();
        let b: u64 = trial_rng(7, 3).gen();
        let c: u64 = trial_rng(7, 4).gen();
        assert_eq!(a, b);
        assert_ne!(a, c);
    }

    #[test]
    fn invertible_over_every_ring() {
        let mut rng = trial_rng(1, 0);
        for kind in [Q, ScalarKind::Gaussian, ScalarKind::Mod(6), ScalarKind::Mod(7)] {
            for n in 1..=4 {
                assert!(random_invertible(&mut rng, n, kind).inverse().is_some());
            }
        }
    }

    #[test]
    fn planted_index_is_exact() {
        let mut rng = trial_rng(2, 0);
        for n in 1..=5 {
            for k in 0..=n {
                assert_eq!(drazin_index(&planted_index(&mut rng, n, Q, k)).unwrap(), k);
            }
        }
    }

    #[test]
    fn jordan_example() {
        let j = jordan_matrix(Q, &[(Scalar::one(Q), 2)]).unwrap();
        assert_eq!(j, SquareMatrix::from_ints(Q, [[1, 1], [0, 1]]));
    }

    #[test]
    fn quad_families_satisfy_identities() {
        let mut rng = trial_rng(3, 0);
        for family in QuadFamily::ALL {
            for n in 1..=4 {
                let q = quad(&mut rng, family, n, Q);
                let [a, b, c, d] = q.into_parts();
                JacobsonQuad::new(a, b, c, d).unwrap();
            }
        }
    }
}
