//! Exact spectra of matrices: point indices, group spectra, and the product
//! and intertwining spectral identities.
//!
//! In a matrix algebra `lambda - A` is always Drazin invertible, so the
//! one-sided Drazin and generalized Drazin spectra are empty and both
//! one-sided group spectra equal `{lambda : point_index(A, lambda) >= 2}`.
//! Eigenvalues are detected exactly as Gaussian-rational roots of the
//! characteristic polynomial; whatever does not split is kept as a residual.

use std::fmt;
use std::str::FromStr;

use num::{BigRational, Zero};
use rand::Rng;
use serde::{Serialize, Serializer};

use crate::drazin::{drazin_index, drazin_inverse, verify_drazin_side};
use crate::error::{Error, Result};
use crate::gen::{jordan_matrix, random_invertible};
use crate::intertwine::IntertwinePair;
use crate::matrix::SquareMatrix;
use crate::poly::Poly;
use crate::report::{Side, VerificationReport};
use crate::scalar::{Gaussian, Scalar, ScalarKind};

/// Jordan blocks `(eigenvalue, size)` of a planted matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JordanSpec {
    blocks: Vec<(Gaussian, usize)>,
}

impl JordanSpec {
    pub fn new(blocks: Vec<(Gaussian, usize)>) -> Result<Self> {
        if blocks.is_empty() {
            return Err(Error::EmptyMatrix);
        }
        if blocks.iter().any(|b| b.1 == 0) {
            return Err(Error::precondition("Jordan block sizes must be positive"));
        }
        Ok(JordanSpec { blocks })
    }

    pub fn blocks(&self) -> &[(Gaussian, usize)] {
        &self.blocks
    }

    pub fn dim(&self) -> usize {
        self.blocks.iter().map(|b| b.1).sum()
    }

    /// Rational when every eigenvalue is real, Gaussian otherwise.
    pub fn kind(&self) -> ScalarKind {
        if self.blocks.iter().all(|b| b.0.is_real()) {
            ScalarKind::Rational
        } else {
            ScalarKind::Gaussian
        }
    }

    /// Distinct eigenvalues in the order they first appear.
    pub fn eigenvalues(&self) -> Vec<Gaussian> {
        let mut out: Vec<Gaussian> = Vec::new();
        for (v, _) in &self.blocks {
            if !out.contains(v) {
                out.push(v.clone());
            }
        }
        out
    }

    /// Largest block at `lambda`, zero when `lambda` is not an eigenvalue.
    pub fn largest_block(&self, lambda: &Gaussian) -> usize {
        self.blocks.iter().filter(|b| &b.0 == lambda).map(|b| b.1).max().unwrap_or(0)
    }

    /// `prod (t - lambda)^size`, over [`Self::kind`].
    pub fn charpoly(&self) -> Poly {
        let kind = self.kind();
        let mut p = Poly::new(kind, vec![Scalar::one(kind)]);
        for (v, size) in &self.blocks {
            let root = to_scalar(kind, v);
            for _ in 0..*size {
                p = mul_linear(&p, &root);
            }
        }
        p
    }

    /// The block-diagonal Jordan matrix itself.
    pub fn matrix(&self) -> SquareMatrix {
        let kind = self.kind();
        let blocks: Vec<(Scalar, usize)> = self.blocks.iter().map(|(v, s)| (to_scalar(kind, v), *s)).collect();
        jordan_matrix(kind, &blocks).expect("spec is non-empty")
    }
}

/// Parses `value:size` items separated by commas, e.g. `2:2,0:1,1+2i:1`.
impl FromStr for JordanSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut blocks = Vec::new();
        for item in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let (v, size) = item
                .rsplit_once(':')
                .ok_or_else(|| Error::Parse(format!("Jordan block `{item}` is not value:size")))?;
            let value = Scalar::parse(ScalarKind::Gaussian, v.trim())?
                .as_gaussian()
                .expect("parsed as Gaussian");
            let size = size
                .trim()
                .parse::<usize>()
                .map_err(|e| Error::Parse(format!("Jordan block size `{size}`: {e}")))?;
            blocks.push((value, size));
        }
        JordanSpec::new(blocks)
    }
}

impl fmt::Display for JordanSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (v, s)) in self.blocks.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}:{s}")?;
        }
        Ok(())
    }
}

fn to_scalar(kind: ScalarKind, g: &Gaussian) -> Scalar {
    match kind {
        ScalarKind::Rational => Scalar::Rational(g.re.clone()),
        _ => Scalar::Gaussian(g.clone()),
    }
}

fn lift_scalar(kind: ScalarKind, x: &Scalar) -> Scalar {
    if kind == ScalarKind::Gaussian {
        x.to_gaussian()
    } else {
        x.clone()
    }
}

/// Spectra live over the rationals or the Gaussian rationals only.
fn require_complex(a: &SquareMatrix) -> Result<()> {
    match a.kind() {
        ScalarKind::Mod(_) => Err(Error::UnsupportedRing(a.kind())),
        _ => Ok(()),
    }
}

/// `p(t) (t - root)`.
fn mul_linear(p: &Poly, root: &Scalar) -> Poly {
    let kind = p.kind();
    let mut out = vec![Scalar::zero(kind); p.degree() + 2];
    for (i, c) in p.coeffs().iter().enumerate() {
        out[i + 1] = &out[i + 1] + c;
        out[i] = &out[i] - &(c * root);
    }
    Poly::new(kind, out)
}

/// `S J S^-1` for a given invertible `S` over the rationals or Gaussians.
pub fn jordan_realize_with(spec: &JordanSpec, s: &SquareMatrix) -> Result<SquareMatrix> {
    if s.dim() != spec.dim() {
        return Err(Error::DimensionMismatch { left: s.dim(), right: spec.dim() });
    }
    require_complex(s)?;
    let j = spec.matrix();
    let (s, j) = if s.kind() == ScalarKind::Gaussian || j.kind() == ScalarKind::Gaussian {
        (s.to_gaussian(), j.to_gaussian())
    } else {
        (s.clone(), j)
    };
    let inv = s.inverse().ok_or_else(|| Error::precondition("conjugating matrix is singular"))?;
    Ok(&(&s * &j) * &inv)
}

/// `S J S^-1` with a random invertible rational `S`.
pub fn jordan_realize(spec: &JordanSpec, rng: &mut impl Rng) -> SquareMatrix {
    let s = random_invertible(rng, spec.dim(), ScalarKind::Rational);
    jordan_realize_with(spec, &s).expect("random_invertible is invertible")
}

/// Random spec of total size `dim`: blocks of size up to 3, eigenvalues drawn
/// from a small pool so repeats (and so nontrivial indices) are common.
pub fn random_jordan_spec(rng: &mut impl Rng, dim: usize, kind: ScalarKind) -> JordanSpec {
    let mut blocks = Vec::new();
    let mut left = dim;
    while left > 0 {
        let size = rng.gen_range(1..=left.min(3));
        let value = match kind {
            ScalarKind::Gaussian => Gaussian::from_ints(rng.gen_range(-2..=2), rng.gen_range(-1..=1)),
            _ => Gaussian::from_ints(rng.gen_range(-2..=3), 0),
        };
        blocks.push((value, size));
        left -= size;
    }
    JordanSpec::new(blocks).expect("dim is positive")
}

/// `drazin_index(lambda I - A)`: zero exactly when `lambda` is not an
/// eigenvalue, otherwise the size of the largest Jordan block at `lambda`.
pub fn point_index(a: &SquareMatrix, lambda: &Gaussian) -> Result<usize> {
    require_complex(a)?;
    let a = if a.kind() == ScalarKind::Rational && !lambda.is_real() { a.to_gaussian() } else { a.clone() };
    let shifted = &SquareMatrix::scalar(a.dim(), to_scalar(a.kind(), lambda)) - &a;
    drazin_index(&shifted)
}

/// The one-sided spectra of a matrix, by name.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OneSidedSpectrum {
    LeftDrazin,
    RightDrazin,
    LeftGroup,
    RightGroup,
    LeftGeneralizedDrazin,
    RightGeneralizedDrazin,
}

impl OneSidedSpectrum {
    pub const ALL: [OneSidedSpectrum; 6] = [
        OneSidedSpectrum::LeftDrazin,
        OneSidedSpectrum::RightDrazin,
        OneSidedSpectrum::LeftGroup,
        OneSidedSpectrum::RightGroup,
        OneSidedSpectrum::LeftGeneralizedDrazin,
        OneSidedSpectrum::RightGeneralizedDrazin,
    ];

    pub fn name(self) -> &'static str {
        match self {
            OneSidedSpectrum::LeftDrazin => "ld",
            OneSidedSpectrum::RightDrazin => "rd",
            OneSidedSpectrum::LeftGroup => "lg",
            OneSidedSpectrum::RightGroup => "rg",
            OneSidedSpectrum::LeftGeneralizedDrazin => "lgd",
            OneSidedSpectrum::RightGeneralizedDrazin => "rgd",
        }
    }
}

/// Detected eigenvalues of a matrix with their point indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectrumReport {
    /// Sorted by real part, then imaginary part.
    pub eigenvalues: Vec<Gaussian>,
    /// Parallel to `eigenvalues`.
    pub point_indices: Vec<usize>,
    pub group_spectrum: Vec<Gaussian>,
    /// Factor of the characteristic polynomial with no detected root;
    /// constant when everything split.
    pub residual: Poly,
    /// Whether `lambda - A` passed both one-sided Drazin predicates at its
    /// point index for every detected eigenvalue.
    pub drazin_invertible_everywhere: bool,
}

impl SpectrumReport {
    pub fn point_index(&self, lambda: &Gaussian) -> usize {
        self.eigenvalues.iter().position(|e| e == lambda).map_or(0, |i| self.point_indices[i])
    }

    pub fn is_split(&self) -> bool {
        self.residual.degree() == 0
    }

    /// The named spectrum restricted to detected eigenvalues.
    pub fn spectrum(&self, which: OneSidedSpectrum) -> Vec<Gaussian> {
        match which {
            OneSidedSpectrum::LeftGroup | OneSidedSpectrum::RightGroup => self.group_spectrum.clone(),
            _ => Vec::new(),
        }
    }

    /// Group spectrum with `0` removed.
    pub fn group_spectrum_nonzero(&self) -> Vec<Gaussian> {
        self.group_spectrum.iter().filter(|g| !g.is_zero()).cloned().collect()
    }
}

#[derive(Serialize)]
struct EigenDoc {
    eigenvalue: String,
    point_index: usize,
}

#[derive(Serialize)]
struct SpectrumDoc {
    eigenvalues: Vec<EigenDoc>,
    group_spectrum: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    residual_factor: Option<String>,
    drazin_invertible_everywhere: bool,
}

impl Serialize for SpectrumReport {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        SpectrumDoc {
            eigenvalues: self
                .eigenvalues
                .iter()
                .zip(&self.point_indices)
                .map(|(e, i)| EigenDoc { eigenvalue: e.to_string(), point_index: *i })
                .collect(),
            group_spectrum: self.group_spectrum.iter().map(ToString::to_string).collect(),
            residual_factor: (!self.is_split()).then(|| self.residual.to_string()),
            drazin_invertible_everywhere: self.drazin_invertible_everywhere,
        }
        .serialize(ser)
    }
}

fn sort_key(g: &Gaussian) -> (BigRational, BigRational) {
    (g.re.clone(), g.im.clone())
}

pub fn group_spectrum(a: &SquareMatrix) -> Result<SpectrumReport> {
    group_spectrum_hinted(a, &[])
}

/// Like [`group_spectrum`], trying `hints` as roots before searching.
pub fn group_spectrum_hinted(a: &SquareMatrix, hints: &[Gaussian]) -> Result<SpectrumReport> {
    require_complex(a)?;
    let (roots, residual) = a.charpoly().to_gaussian().find_roots(hints);
    let mut eigenvalues: Vec<Gaussian> = roots.into_iter().map(|r| r.0).collect();
    eigenvalues.sort_by_key(sort_key);
    let mut point_indices = Vec::with_capacity(eigenvalues.len());
    let mut drazin_ok = true;
    for lambda in &eigenvalues {
        let base = if lambda.is_real() { a.clone() } else { a.to_gaussian() };
        let shifted = &SquareMatrix::scalar(base.dim(), to_scalar(base.kind(), lambda)) - &base;
        let (x, k) = drazin_inverse(&shifted)?;
        if k == 0 {
            return Err(Error::InvariantViolation(format!("detected eigenvalue {lambda} has point index 0")));
        }
        drazin_ok &= verify_drazin_side(Side::Left, &shifted, &x, k) && verify_drazin_side(Side::Right, &shifted, &x, k);
        point_indices.push(k);
    }
    let group_spectrum =
        eigenvalues.iter().zip(&point_indices).filter(|(_, k)| **k >= 2).map(|(e, _)| e.clone()).collect();
    Ok(SpectrumReport { eigenvalues, point_indices, group_spectrum, residual, drazin_invertible_everywhere: drazin_ok })
}

/// Nonzero eigenvalues with their point indices.
fn nonzero_indices(r: &SpectrumReport) -> Vec<(Gaussian, usize)> {
    r.eigenvalues.iter().zip(&r.point_indices).filter(|(e, _)| !e.is_zero()).map(|(e, k)| (e.clone(), *k)).collect()
}

fn record_spectra(report: &mut VerificationReport, left: (&str, &SpectrumReport), right: (&str, &SpectrumReport)) {
    for (name, s) in [left, right] {
        report.index(format!("eigenvalues-{name}"), s.eigenvalues.len());
        report.index(format!("group-spectrum-{name}"), s.group_spectrum.len());
        report.index(format!("residual-degree-{name}"), s.residual.degree());
    }
    let (l, r) = (left.1, right.1);
    report
        .check("group-spectrum-nonzero", l.group_spectrum_nonzero() == r.group_spectrum_nonzero())
        .check("point-indices-nonzero", nonzero_indices(l) == nonzero_indices(r))
        .check("drazin-spectra-empty", l.drazin_invertible_everywhere && r.drazin_invertible_everywhere);
}

pub fn product_identity_check(a: &SquareMatrix, c: &SquareMatrix) -> Result<VerificationReport> {
    product_identity_check_hinted(a, c, &[])
}

/// For `AC` and `CA`: equal characteristic polynomials, equal group spectra
/// and point indices away from zero, and
/// `drazin_index(I - AC) = drazin_index(I - CA)`.
pub fn product_identity_check_hinted(a: &SquareMatrix, c: &SquareMatrix, hints: &[Gaussian]) -> Result<VerificationReport> {
    a.compatible(c)?;
    require_complex(a)?;
    let (ac, ca) = (a * c, c * a);
    let mut report = VerificationReport::new("product-spectrum");
    report.input("a", a).input("c", c);
    report.check("charpoly", ac.charpoly() == ca.charpoly());
    let (s_ac, s_ca) = (group_spectrum_hinted(&ac, hints)?, group_spectrum_hinted(&ca, hints)?);
    record_spectra(&mut report, ("ac", &s_ac), ("ca", &s_ca));
    let (k_ac, k_ca) = (drazin_index(&ac.one_minus())?, drazin_index(&ca.one_minus())?);
    report.check("index-one-minus", k_ac == k_ca).index("index-1-ac", k_ac).index("index-1-ca", k_ca);
    Ok(report)
}

/// For an intertwining pair: equal group spectra and point indices away from
/// zero, and `drazin_index(1 - a) = drazin_index(1 - b)`.
pub fn intertwine_identity_check(pair: &IntertwinePair, hints: &[Gaussian]) -> Result<VerificationReport> {
    let (a, b) = (pair.a(), pair.b());
    require_complex(a)?;
    let mut report = VerificationReport::new(format!("intertwine-spectrum n={}", pair.n()));
    report.input("a", a).input("b", b);
    let (s_a, s_b) = (group_spectrum_hinted(a, hints)?, group_spectrum_hinted(b, hints)?);
    record_spectra(&mut report, ("a", &s_a), ("b", &s_b));
    let (k_a, k_b) = (drazin_index(&pair.one_minus_a())?, drazin_index(&pair.one_minus_b())?);
    report.check("index-one-minus", k_a == k_b).index("index-1-a", k_a).index("index-1-b", k_b);
    Ok(report)
}

/// `A = S P U` and `C = U^-1 (J + e_n r^T) S^-1`, with `P = diag(1, ..., 1, 0)`
/// and `J` the Jordan matrix of `spec`, whose last block must be at zero.
/// Then `AC = S J S^-1` exactly while `CA` is similar to `(J + e_n r^T) P`.
pub fn planted_product_with(
    spec: &JordanSpec,
    s: &SquareMatrix,
    u: &SquareMatrix,
    r: &[Scalar],
) -> Result<(SquareMatrix, SquareMatrix)> {
    if !spec.blocks.last().is_some_and(|b| b.0.is_zero()) {
        return Err(Error::precondition("planted product needs a trailing zero block"));
    }
    let n = spec.dim();
    if r.len() != n {
        return Err(Error::DimensionMismatch { left: r.len(), right: n });
    }
    let kind = spec.kind();
    let lift = |m: &SquareMatrix| if kind == ScalarKind::Gaussian { m.to_gaussian() } else { m.clone() };
    let (s, u) = (lift(s), lift(u));
    s.compatible(&u)?;
    let s_inv = s.inverse().ok_or_else(|| Error::precondition("S is singular"))?;
    let u_inv = u.inverse().ok_or_else(|| Error::precondition("U is singular"))?;
    let p = SquareMatrix::from_fn(n, kind, |i, j| Scalar::from_i64(kind, (i == j && i + 1 < n) as i64));
    let j = spec.matrix();
    let bumped = SquareMatrix::from_fn(n, kind, |i, col| {
        if i + 1 == n {
            j.get(i, col) + &lift_scalar(kind, &r[col])
        } else {
            j.get(i, col).clone()
        }
    });
    Ok((&(&s * &p) * &u, &(&u_inv * &bumped) * &s_inv))
}

/// Random planted product pair of size `dim`, returned with its spec.
pub fn planted_product(rng: &mut impl Rng, dim: usize, kind: ScalarKind) -> (JordanSpec, SquareMatrix, SquareMatrix) {
    let zero_size = rng.gen_range(1..=dim.min(2));
    let mut blocks = if dim > zero_size {
        random_jordan_spec(rng, dim - zero_size, kind).blocks
    } else {
        Vec::new()
    };
    blocks.push((Gaussian::zero(), zero_size));
    let spec = JordanSpec::new(blocks).expect("dim is positive");
    let s = random_invertible(rng, dim, ScalarKind::Rational);
    let u = random_invertible(rng, dim, ScalarKind::Rational);
    let r: Vec<Scalar> = (0..dim).map(|_| Scalar::from_i64(ScalarKind::Rational, rng.gen_range(-2..=2))).collect();
    let (a, c) = planted_product_with(&spec, &s, &u, &r).expect("generated inputs satisfy the preconditions");
    (spec, a, c)
}

/// Commuting pair `S J_1 S^-1`, `S J_2 S^-1` where `J_1`, `J_2` share their
/// block sizes and have nonzero eigenvalues. Checks that the pair commutes,
/// that the eigenvalues of the product are exactly the paired products, and
/// `max |lambda mu|^2 <= max |lambda|^2 max |mu|^2`.
pub fn commuting_radius_check(first: &JordanSpec, second: &JordanSpec, s: &SquareMatrix) -> Result<VerificationReport> {
    let sizes = |j: &JordanSpec| j.blocks.iter().map(|b| b.1).collect::<Vec<_>>();
    if sizes(first) != sizes(second) {
        return Err(Error::precondition("commuting specs must share block sizes"));
    }
    if first.blocks.iter().chain(&second.blocks).any(|b| b.0.is_zero()) {
        return Err(Error::precondition("commuting specs must avoid the eigenvalue 0"));
    }
    let kind = if first.kind() == ScalarKind::Gaussian { ScalarKind::Gaussian } else { second.kind() };
    let to_kind = |m: SquareMatrix| if kind == ScalarKind::Gaussian { m.to_gaussian() } else { m };
    let a = to_kind(jordan_realize_with(first, s)?);
    let b = to_kind(jordan_realize_with(second, s)?);
    let ab = &a * &b;
    let products: Vec<Gaussian> =
        first.blocks.iter().zip(&second.blocks).map(|((l, _), (m, _))| l * m).collect();
    let mut report = VerificationReport::new("commuting-radius");
    report.input("a", &a).input("b", &b);
    report.check("commute", ab == &b * &a);
    let spec_ab = group_spectrum_hinted(&ab, &products)?;
    let mut expected = products.clone();
    expected.sort_by_key(sort_key);
    expected.dedup();
    report.check("product-eigenvalues", spec_ab.is_split() && spec_ab.eigenvalues == expected);
    let max_norm = |vs: &mut dyn Iterator<Item = &Gaussian>| vs.map(Gaussian::norm).max().unwrap_or_else(BigRational::zero);
    let r_ab = max_norm(&mut spec_ab.eigenvalues.iter());
    let r_a = max_norm(&mut first.blocks.iter().map(|b| &b.0));
    let r_b = max_norm(&mut second.blocks.iter().map(|b| &b.0));
    report.check("radius-submultiplicative", r_ab <= &r_a * &r_b);
    Ok(report)
}
