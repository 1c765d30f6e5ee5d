//! Univariate polynomials over exact scalars and exact root detection.
//!
//! Roots are only ever *certified*: a candidate is accepted when the
//! polynomial evaluates to exactly zero there. Candidates come from caller
//! hints, the rational root theorem, and its Gaussian-integer analogue.

use std::fmt;

use num::integer::Integer;
use num::{BigInt, BigRational, One, Signed, ToPrimitive, Zero};

use crate::scalar::{Gaussian, Scalar, ScalarKind};

/// Largest integer whose divisors are enumerated during root search.
const DIVISOR_CAP: u64 = 1_000_000_000_000;
/// Largest Gaussian norm whose divisors are enumerated.
const GAUSSIAN_NORM_CAP: u64 = 100_000_000;

/// Polynomial with coefficients stored from the constant term upwards,
/// without trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    kind: ScalarKind,
    coeffs: Vec<Scalar>,
}

impl Poly {
    pub fn new(kind: ScalarKind, mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().is_some_and(Scalar::is_zero) {
            coeffs.pop();
        }
        Poly { kind, coeffs }
    }

    pub fn kind(&self) -> ScalarKind {
        self.kind
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    /// Coefficient of `t^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> Scalar {
        self.coeffs.get(i).cloned().unwrap_or_else(|| Scalar::zero(self.kind))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with the zero polynomial reported as 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        self.coeffs
            .iter()
            .rev()
            .fold(Scalar::zero(self.kind), |acc, c| &(&acc * x) + c)
    }

    /// Synthetic division by `t - root`: returns the quotient and remainder.
    pub fn div_linear(&self, root: &Scalar) -> (Poly, Scalar) {
        if self.coeffs.is_empty() {
            return (self.clone(), Scalar::zero(self.kind));
        }
        let mut quot = vec![Scalar::zero(self.kind); self.coeffs.len() - 1];
        let mut carry = Scalar::zero(self.kind);
        for i in (0..self.coeffs.len()).rev() {
            let v = &self.coeffs[i] + &(&carry * root);
            if i == 0 {
                return (Poly::new(self.kind, quot), v);
            }
            quot[i - 1] = v.clone();
            carry = v;
        }
        unreachable!()
    }

    /// Maps a rational polynomial into the Gaussian rationals.
    pub fn to_gaussian(&self) -> Poly {
        Poly::new(ScalarKind::Gaussian, self.coeffs.iter().map(Scalar::to_gaussian).collect())
    }

    /// Whether every coefficient is a real rational.
    fn is_real(&self) -> bool {
        self.coeffs.iter().all(|c| c.as_gaussian().is_some_and(|g| g.is_real()))
    }

    /// Finds every certifiable root with its multiplicity, returning the
    /// roots and the residual factor that holds the undetected ones.
    pub fn find_roots(&self, hints: &[Gaussian]) -> (Vec<(Gaussian, usize)>, Poly) {
        let mut found: Vec<(Gaussian, usize)> = Vec::new();
        let mut rest = self.clone();
        if rest.is_zero() || matches!(self.kind, ScalarKind::Mod(_)) {
            return (found, rest);
        }
        let push = |found: &mut Vec<(Gaussian, usize)>, g: Gaussian, m: usize| {
            if m > 0 {
                found.push((g, m));
            }
        };
        for h in hints {
            if rest.kind == ScalarKind::Rational && !h.is_real() {
                continue;
            }
            let mut tmp = rest.clone();
            let m = deflate(&mut tmp, h);
            rest = tmp;
            push(&mut found, h.clone(), m);
        }
        loop {
            if rest.degree() == 0 {
                break;
            }
            let cand = if rest.is_real() {
                rational_root_candidate(&rest)
            } else {
                None
            };
            let cand = cand.or_else(|| {
                (rest.kind == ScalarKind::Gaussian)
                    .then(|| gaussian_root_candidate(&rest))
                    .flatten()
            });
            match cand {
                Some(g) => {
                    let m = deflate(&mut rest, &g);
                    push(&mut found, g, m);
                }
                None => break,
            }
        }
        // merge repeated entries (a hint may coincide with a searched root)
        let mut merged: Vec<(Gaussian, usize)> = Vec::new();
        for (g, m) in found {
            match merged.iter_mut().find(|(h, _)| *h == g) {
                Some(e) => e.1 += m,
                None => merged.push((g, m)),
            }
        }
        (merged, rest)
    }
}

fn as_root(kind: ScalarKind, g: &Gaussian) -> Scalar {
    if kind == ScalarKind::Rational {
        Scalar::Rational(g.re.clone())
    } else {
        Scalar::Gaussian(g.clone())
    }
}

/// Divides out `t - g` as often as possible, returning the multiplicity.
fn deflate(p: &mut Poly, g: &Gaussian) -> usize {
    let root = as_root(p.kind, g);
    let mut mult = 0;
    while p.degree() > 0 {
        let (q, r) = p.div_linear(&root);
        if !r.is_zero() {
            break;
        }
        *p = q;
        mult += 1;
    }
    mult
}

fn lcm_of_denominators<'a>(qs: impl Iterator<Item = &'a BigRational>) -> BigInt {
    qs.fold(BigInt::one(), |acc, q| acc.lcm(q.denom()))
}

/// Positive divisors of `n`, or `None` when `n` is beyond the search cap.
fn divisors(n: &BigInt) -> Option<Vec<u64>> {
    let n = n.abs().to_u64()?;
    if n == 0 || n > DIVISOR_CAP {
        return None;
    }
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d != n / d {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    Some(small)
}

/// Floating-point screen run before the exact evaluation. A true root leaves
/// only rounding error, far below the margin, so it is never screened out.
fn near_root(p: &Poly, re: f64, im: f64) -> bool {
    let (mut vr, mut vi, mut scale) = (0.0f64, 0.0f64, 0.0f64);
    let modulus = re.hypot(im);
    for c in p.coeffs.iter().rev() {
        let g = c.as_gaussian().expect("root search runs over Q or Q(i)");
        let (cr, ci) = (g.re.to_f64().unwrap_or(f64::INFINITY), g.im.to_f64().unwrap_or(f64::INFINITY));
        let nr = vr * re - vi * im + cr;
        vi = vr * im + vi * re + ci;
        vr = nr;
        scale = scale * modulus + cr.hypot(ci);
    }
    !scale.is_finite() || vr.hypot(vi) <= 1e-6 * scale
}

/// One rational root of a real-rational polynomial, if any exists.
fn rational_root_candidate(p: &Poly) -> Option<Gaussian> {
    let reals: Vec<BigRational> = p.coeffs.iter().map(|c| c.as_gaussian().unwrap().re).collect();
    if reals[0].is_zero() {
        return Some(Gaussian::zero());
    }
    let scale = BigRational::from_integer(lcm_of_denominators(reals.iter()));
    let ints: Vec<BigInt> = reals.iter().map(|q| (q * &scale).to_integer()).collect();
    let num_divs = divisors(&ints[0])?;
    let den_divs = divisors(ints.last().unwrap())?;
    for &u in &num_divs {
        for &v in &den_divs {
            if BigInt::from(u).gcd(&BigInt::from(v)) != BigInt::one() {
                continue;
            }
            for sign in [1i64, -1] {
                if !near_root(p, sign as f64 * u as f64 / v as f64, 0.0) {
                    continue;
                }
                let cand = BigRational::new(BigInt::from(u) * sign, BigInt::from(v));
                let g = Gaussian::real(cand);
                if p.eval(&as_root(p.kind, &g)).is_zero() {
                    return Some(g);
                }
            }
        }
    }
    None
}

fn isqrt(n: u64) -> u64 {
    let mut r = (n as f64).sqrt() as u64;
    while r * r > n {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    r
}

/// All Gaussian integers dividing `g`, associates included.
fn gaussian_divisors(g: &(BigInt, BigInt)) -> Option<Vec<(i64, i64)>> {
    let norm = &g.0 * &g.0 + &g.1 * &g.1;
    let n = norm.to_u64()?;
    if n == 0 || n > GAUSSIAN_NORM_CAP {
        return None;
    }
    let mut out = Vec::new();
    for m in divisors(&norm)? {
        let bound = isqrt(m) as i64;
        for x in -bound..=bound {
            let rem = m as i64 - x * x;
            let y = isqrt(rem as u64) as i64;
            if y * y != rem {
                continue;
            }
            for y in if y == 0 { vec![0] } else { vec![y, -y] } {
                // g / (x + iy) = g (x - iy) / m must be a Gaussian integer
                let re = &g.0 * x + &g.1 * y;
                let im = &g.1 * x - &g.0 * y;
                if (&re % m as i64).is_zero() && (&im % m as i64).is_zero() {
                    out.push((x, y));
                }
            }
        }
    }
    Some(out)
}

/// One Gaussian-rational root of a polynomial over `Q(i)`, if the Gaussian
/// rational root theorem can find it within the search caps.
fn gaussian_root_candidate(p: &Poly) -> Option<Gaussian> {
    let gs: Vec<Gaussian> = p.coeffs.iter().map(|c| c.as_gaussian().unwrap()).collect();
    if gs[0].is_zero() {
        return Some(Gaussian::zero());
    }
    let scale = BigRational::from_integer(lcm_of_denominators(gs.iter().flat_map(|g| [&g.re, &g.im])));
    let to_int = |g: &Gaussian| ((&g.re * &scale).to_integer(), (&g.im * &scale).to_integer());
    let nums = gaussian_divisors(&to_int(&gs[0]))?;
    let dens = gaussian_divisors(&to_int(gs.last().unwrap()))?;
    for &(ux, uy) in &nums {
        for &(vx, vy) in &dens {
            let u = Gaussian::from_ints(ux, uy);
            let v = Gaussian::from_ints(vx, vy);
            let nv = (vx * vx + vy * vy) as f64;
            let (cr, ci) = ((ux * vx + uy * vy) as f64 / nv, (uy * vx - ux * vy) as f64 / nv);
            if !near_root(p, cr, ci) {
                continue;
            }
            let cand = &u * &v.inv()?;
            if p.eval(&Scalar::Gaussian(cand.clone())).is_zero() {
                return Some(cand);
            }
        }
    }
    None
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})t")?,
                _ => write!(f, "({c})t^{i}")?,
            }
        }
        Ok(())
    }
}
