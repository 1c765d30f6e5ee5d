//! Exact scalars: rationals, Gaussian rationals and integers modulo `m`.
//!
//! Scalars of different kinds never mix. The arithmetic operators panic on a
//! kind mismatch, the same way slice indexing panics out of bounds; matrices
//! check kinds once at construction so their inner loops never hit that path.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num::{BigInt, BigRational, One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The ring a scalar lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ScalarKind {
    Rational,
    Gaussian,
    /// Integers modulo `m`, `m >= 2`.
    Mod(u64),
}

impl ScalarKind {
    /// Whether every nonzero element is invertible.
    pub fn is_field(self) -> bool {
        match self {
            ScalarKind::Rational | ScalarKind::Gaussian => true,
            ScalarKind::Mod(m) => is_prime(m),
        }
    }
}

impl fmt::Display for ScalarKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ScalarKind::Rational => f.write_str("rational"),
            ScalarKind::Gaussian => f.write_str("gaussian"),
            ScalarKind::Mod(m) => write!(f, "mod:{m}"),
        }
    }
}

impl FromStr for ScalarKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "rational" => Ok(ScalarKind::Rational),
            "gaussian" => Ok(ScalarKind::Gaussian),
            other => {
                let m = other
                    .strip_prefix("mod:")
                    .ok_or_else(|| Error::Parse(format!("unknown scalar kind `{other}`")))?;
                let m: u64 = m
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad modulus in `{other}`")))?;
                if m < 2 {
                    return Err(Error::Parse(format!("modulus must be >= 2, got {m}")));
                }
                if m > u32::MAX as u64 {
                    return Err(Error::Parse(format!("modulus {m} too large")));
                }
                Ok(ScalarKind::Mod(m))
            }
        }
    }
}

impl Serialize for ScalarKind {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for ScalarKind {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

pub(crate) fn is_prime(m: u64) -> bool {
    if m < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= m {
        if m % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Exact complex number with rational real and imaginary parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Gaussian {
    pub re: BigRational,
    pub im: BigRational,
}

impl Gaussian {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Gaussian { re, im }
    }

    pub fn from_ints(re: i64, im: i64) -> Self {
        Gaussian::new(BigRational::from_integer(re.into()), BigRational::from_integer(im.into()))
    }

    pub fn real(re: BigRational) -> Self {
        Gaussian::new(re, BigRational::zero())
    }

    pub fn zero() -> Self {
        Gaussian::new(BigRational::zero(), BigRational::zero())
    }

    pub fn one() -> Self {
        Gaussian::new(BigRational::one(), BigRational::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Gaussian::new(self.re.clone(), -&self.im)
    }

    /// Squared modulus `re^2 + im^2`.
    pub fn norm(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm();
        Some(Gaussian::new(&self.re / &n, -&self.im / &n))
    }
}

impl Add for &Gaussian {
    type Output = Gaussian;
    fn add(self, o: &Gaussian) -> Gaussian {
        Gaussian::new(&self.re + &o.re, &self.im + &o.im)
    }
}

impl Sub for &Gaussian {
    type Output = Gaussian;
    fn sub(self, o: &Gaussian) -> Gaussian {
        Gaussian::new(&self.re - &o.re, &self.im - &o.im)
    }
}

impl Mul for &Gaussian {
    type Output = Gaussian;
    fn mul(self, o: &Gaussian) -> Gaussian {
        Gaussian::new(
            &self.re * &o.re - &self.im * &o.im,
            &self.re * &o.im + &self.im * &o.re,
        )
    }
}

impl Neg for &Gaussian {
    type Output = Gaussian;
    fn neg(self) -> Gaussian {
        Gaussian::new(-&self.re, -&self.im)
    }
}

impl fmt::Display for Gaussian {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", self.re);
        }
        if self.im.is_negative() {
            write!(f, "{}-{} i", self.re, -&self.im)
        } else {
            write!(f, "{}+{} i", self.re, self.im)
        }
    }
}

/// Residue class modulo `modulus`, stored as its least non-negative
/// representative.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ModInt {
    value: u64,
    modulus: u64,
}

impl ModInt {
    pub fn new(value: i128, modulus: u64) -> Self {
        assert!(modulus >= 2, "modulus must be >= 2");
        let m = modulus as i128;
        ModInt {
            value: value.rem_euclid(m) as u64,
            modulus,
        }
    }

    pub fn value(self) -> u64 {
        self.value
    }

    pub fn modulus(self) -> u64 {
        self.modulus
    }

    fn check(self, o: ModInt) {
        assert_eq!(self.modulus, o.modulus, "modulus mismatch");
    }

    pub fn inv(self) -> Option<Self> {
        // extended Euclid on (value, modulus)
        let (mut r0, mut r1) = (self.modulus as i128, self.value as i128);
        let (mut t0, mut t1) = (0i128, 1i128);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        (r0 == 1).then(|| ModInt::new(t0, self.modulus))
    }
}

impl Add for ModInt {
    type Output = ModInt;
    fn add(self, o: ModInt) -> ModInt {
        self.check(o);
        ModInt::new(self.value as i128 + o.value as i128, self.modulus)
    }
}

impl Sub for ModInt {
    type Output = ModInt;
    fn sub(self, o: ModInt) -> ModInt {
        self.check(o);
        ModInt::new(self.value as i128 - o.value as i128, self.modulus)
    }
}

impl Mul for ModInt {
    type Output = ModInt;
    fn mul(self, o: ModInt) -> ModInt {
        self.check(o);
        ModInt::new(self.value as i128 * o.value as i128, self.modulus)
    }
}

impl Neg for ModInt {
    type Output = ModInt;
    fn neg(self) -> ModInt {
        ModInt::new(-(self.value as i128), self.modulus)
    }
}

/// An exact ring element.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Gaussian(Gaussian),
    Mod(ModInt),
}

impl Scalar {
    pub fn kind(&self) -> ScalarKind {
        match self {
            Scalar::Rational(_) => ScalarKind::Rational,
            Scalar::Gaussian(_) => ScalarKind::Gaussian,
            Scalar::Mod(z) => ScalarKind::Mod(z.modulus),
        }
    }

    pub fn from_i64(kind: ScalarKind, v: i64) -> Self {
        match kind {
            ScalarKind::Rational => Scalar::Rational(BigRational::from_integer(v.into())),
            ScalarKind::Gaussian => Scalar::Gaussian(Gaussian::from_ints(v, 0)),
            ScalarKind::Mod(m) => Scalar::Mod(ModInt::new(v as i128, m)),
        }
    }

    /// `num / den` in the given ring; `None` when `den` is not invertible there.
    pub fn from_ratio(kind: ScalarKind, num: i64, den: i64) -> Option<Self> {
        let d = Scalar::from_i64(kind, den).inv()?;
        Some(&Scalar::from_i64(kind, num) * &d)
    }

    pub fn zero(kind: ScalarKind) -> Self {
        Scalar::from_i64(kind, 0)
    }

    pub fn one(kind: ScalarKind) -> Self {
        Scalar::from_i64(kind, 1)
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_zero(),
            Scalar::Gaussian(g) => g.is_zero(),
            Scalar::Mod(z) => z.value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_one(),
            Scalar::Gaussian(g) => g.re.is_one() && g.im.is_zero(),
            Scalar::Mod(z) => z.value == 1,
        }
    }

    /// Multiplicative inverse, or `None` for non-units.
    pub fn inv(&self) -> Option<Self> {
        match self {
            Scalar::Rational(q) => (!q.is_zero()).then(|| Scalar::Rational(q.recip())),
            Scalar::Gaussian(g) => g.inv().map(Scalar::Gaussian),
            Scalar::Mod(z) => z.inv().map(Scalar::Mod),
        }
    }

    pub fn is_unit(&self) -> bool {
        match self {
            Scalar::Mod(z) => z.inv().is_some(),
            _ => !self.is_zero(),
        }
    }

    /// Embeds a rational scalar into the Gaussian rationals; other kinds are
    /// returned unchanged.
    pub fn to_gaussian(&self) -> Self {
        match self {
            Scalar::Rational(q) => Scalar::Gaussian(Gaussian::real(q.clone())),
            other => other.clone(),
        }
    }

    pub fn as_gaussian(&self) -> Option<Gaussian> {
        match self {
            Scalar::Rational(q) => Some(Gaussian::real(q.clone())),
            Scalar::Gaussian(g) => Some(g.clone()),
            Scalar::Mod(_) => None,
        }
    }

    /// Parses an entry string in the given ring.
    ///
    /// Rationals are written `p` or `p/q`; Gaussian rationals `p/q+r/s i`
    /// (either part may be omitted); residues as decimal integers, reduced
    /// modulo `m`.
    pub fn parse(kind: ScalarKind, s: &str) -> Result<Self> {
        let s = s.trim();
        match kind {
            ScalarKind::Rational => parse_rational(s).map(Scalar::Rational),
            ScalarKind::Gaussian => parse_gaussian(s).map(Scalar::Gaussian),
            ScalarKind::Mod(m) => {
                let v: BigInt = s
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad residue `{s}`")))?;
                let r = ((v % BigInt::from(m)) + BigInt::from(m)) % BigInt::from(m);
                let r: i128 = r.try_into().expect("reduced residue fits");
                Ok(Scalar::Mod(ModInt::new(r, m)))
            }
        }
    }
}

fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || Error::Parse(format!("bad rational `{s}`"));
    let s = s.strip_prefix('+').unwrap_or(s);
    match s.split_once('/') {
        None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(Error::Parse(format!("zero denominator in `{s}`")));
            }
            Ok(BigRational::new(n, d))
        }
    }
}

fn parse_gaussian(s: &str) -> Result<Gaussian> {
    let Some(body) = s.strip_suffix('i') else {
        return parse_rational(s).map(Gaussian::real);
    };
    let body = body.trim_end();
    // split at the last sign that is not the leading one
    let split = body
        .char_indices()
        .filter(|&(i, c)| i > 0 && (c == '+' || c == '-'))
        .map(|(i, _)| i)
        .last();
    let (re, im) = match split {
        Some(i) => (parse_rational(body[..i].trim())?, &body[i..]),
        None => (BigRational::zero(), body),
    };
    let im = match im.trim() {
        "" | "+" => BigRational::one(),
        "-" => -BigRational::one(),
        t => parse_rational(&t.replace(' ', ""))?,
    };
    Ok(Gaussian::new(re, im))
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(q) => write!(f, "{q}"),
            Scalar::Gaussian(g) => write!(f, "{g}"),
            Scalar::Mod(z) => write!(f, "{}", z.value),
        }
    }
}

fn mismatch(a: &Scalar, b: &Scalar) -> ! {
    panic!("scalar kind mismatch: {} vs {}", a.kind(), b.kind())
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, o: &Scalar) -> Scalar {
        match (self, o) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Gaussian(a), Scalar::Gaussian(b)) => Scalar::Gaussian(a + b),
            (Scalar::Mod(a), Scalar::Mod(b)) if a.modulus == b.modulus => Scalar::Mod(*a + *b),
            _ => mismatch(self, o),
        }
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, o: &Scalar) -> Scalar {
        match (self, o) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a - b),
            (Scalar::Gaussian(a), Scalar::Gaussian(b)) => Scalar::Gaussian(a - b),
            (Scalar::Mod(a), Scalar::Mod(b)) if a.modulus == b.modulus => Scalar::Mod(*a - *b),
            _ => mismatch(self, o),
        }
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, o: &Scalar) -> Scalar {
        match (self, o) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Gaussian(a), Scalar::Gaussian(b)) => Scalar::Gaussian(a * b),
            (Scalar::Mod(a), Scalar::Mod(b)) if a.modulus == b.modulus => Scalar::Mod(*a * *b),
            _ => mismatch(self, o),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Gaussian(a) => Scalar::Gaussian(-a),
            Scalar::Mod(a) => Scalar::Mod(-*a),
        }
    }
}

impl From<Gaussian> for Scalar {
    fn from(g: Gaussian) -> Self {
        Scalar::Gaussian(g)
    }
}

impl From<BigRational> for Scalar {
    fn from(q: BigRational) -> Self {
        Scalar::Rational(q)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn rationals_are_reduced() {
        let s = Scalar::parse(ScalarKind::Rational, "6/-4").unwrap();
        assert_eq!(s, Scalar::Rational(q(-3, 2)));
        assert_eq!(s.to_string(), "-3/2");
        assert!(Scalar::parse(ScalarKind::Rational, "1/0").is_err());
    }

    #[test]
    fn gaussian_parse_forms() {
        let k = ScalarKind::Gaussian;
        let cases = [
            ("1/2+3/4 i", Gaussian::new(q(1, 2), q(3, 4))),
            ("-2-1/3 i", Gaussian::new(q(-2, 1), q(-1, 3))),
            ("5 i", Gaussian::new(q(0, 1), q(5, 1))),
            ("-i", Gaussian::new(q(0, 1), q(-1, 1))),
            ("3+i", Gaussian::new(q(3, 1), q(1, 1))),
            ("7/3", Gaussian::new(q(7, 3), q(0, 1))),
        ];
        for (text, want) in cases {
            assert_eq!(Scalar::parse(k, text).unwrap(), Scalar::Gaussian(want), "{text}");
        }
    }

    #[test]
    fn gaussian_inverse() {
        let g = Gaussian::from_ints(3, 4);
        let prod = &g * &g.inv().unwrap();
        assert_eq!(prod, Gaussian::one());
        assert!(Gaussian::zero().inv().is_none());
    }

    #[test]
    fn modint_units() {
        let six = ScalarKind::Mod(6);
        assert!(Scalar::from_i64(six, 5).is_unit());
        assert!(!Scalar::from_i64(six, 2).is_unit());
        assert_eq!(Scalar::from_i64(six, 5).inv(), Some(Scalar::from_i64(six, 5)));
        assert_eq!(Scalar::parse(six, "-1").unwrap(), Scalar::from_i64(six, 5));
        assert_eq!(Scalar::from_ratio(ScalarKind::Mod(7), 1, 2), Some(Scalar::from_i64(ScalarKind::Mod(7), 4)));
    }

    #[test]
    fn kind_round_trip() {
        for k in [ScalarKind::Rational, ScalarKind::Gaussian, ScalarKind::Mod(12)] {
            assert_eq!(k.to_string().parse::<ScalarKind>().unwrap(), k);
        }
        assert!("mod:1".parse::<ScalarKind>().is_err());
        assert!(ScalarKind::Mod(13).is_field());
        assert!(!ScalarKind::Mod(6).is_field());
    }

    #[test]
    #[should_panic(expected = "mismatch")]
    fn mixing_kinds_panics() {
        let _ = &Scalar::from_i64(ScalarKind::Rational, 1) + &Scalar::from_i64(ScalarKind::Mod(3), 1);
    }
}
