//! Exhaustive witness search over small matrix rings `M_k(Z/m)`.
//!
//! Elements are ordered lexicographically: entries compared in row-major
//! order, smaller residues first. Searches scan indices upwards and, for each
//! index, elements in that order, so the reported witness is the first one
//! at the smallest index.

use crate::drazin::{azumaya, verify_drazin_side, verify_strongly_pi_side};
use crate::error::{Error, Result};
use crate::matrix::SquareMatrix;
use crate::par;
use crate::report::{Side, VerificationReport};
use crate::scalar::{Scalar, ScalarKind};

pub const DEFAULT_BUDGET: u128 = 10_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FiniteRingSpec {
    dim: usize,
    modulus: u64,
}

impl FiniteRingSpec {
    pub fn new(dim: usize, modulus: u64) -> Result<Self> {
        Self::with_budget(dim, modulus, DEFAULT_BUDGET)
    }

    pub fn with_budget(dim: usize, modulus: u64, budget: u128) -> Result<Self> {
        if dim == 0 {
            return Err(Error::EmptyMatrix);
        }
        if modulus < 2 {
            return Err(Error::Parse(format!("modulus {modulus} must be at least 2")));
        }
        let spec = FiniteRingSpec { dim, modulus };
        let elements = spec.element_count();
        if elements > budget {
            return Err(Error::BudgetExceeded { elements, budget });
        }
        Ok(spec)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn kind(&self) -> ScalarKind {
        ScalarKind::Mod(self.modulus)
    }

    /// `m^(k^2)`, saturating.
    pub fn element_count(&self) -> u128 {
        let e = (self.dim * self.dim) as u32;
        (self.modulus as u128).checked_pow(e).unwrap_or(u128::MAX)
    }

    /// `k * ceil(log2 m) + k`, above any nilpotency index in the ring.
    pub fn index_bound(&self) -> usize {
        let log = 64 - (self.modulus - 1).leading_zeros() as usize;
        self.dim * log + self.dim
    }

    /// The `idx`-th element in lexicographic order.
    pub fn element(&self, idx: u128) -> SquareMatrix {
        let n = self.dim * self.dim;
        let m = self.modulus as u128;
        let mut digits = vec![0u64; n];
        let mut rest = idx;
        for slot in digits.iter_mut().rev() {
            *slot = (rest % m) as u64;
            rest /= m;
        }
        let kind = self.kind();
        SquareMatrix::from_fn(self.dim, kind, |i, j| Scalar::from_i64(kind, digits[i * self.dim + j] as i64))
    }

    pub fn elements(&self) -> impl Iterator<Item = SquareMatrix> + '_ {
        (0..self.element_count()).map(|i| self.element(i))
    }

    fn owns(&self, a: &SquareMatrix) -> Result<()> {
        if a.dim() != self.dim || a.kind() != self.kind() {
            return Err(Error::precondition(format!(
                "element is not in M_{}(Z/{})",
                self.dim, self.modulus
            )));
        }
        Ok(())
    }
}

fn search(
    ring: &FiniteRingSpec,
    a: &SquareMatrix,
    max: usize,
    pred: impl Fn(&SquareMatrix, usize) -> bool,
) -> Result<Option<(SquareMatrix, usize)>> {
    ring.owns(a)?;
    for j in 0..=max {
        if let Some(x) = ring.elements().find(|x| pred(x, j)) {
            return Ok(Some((x, j)));
        }
    }
    Ok(None)
}

/// First `(x, p)` with `axa = xa^2`, `x a^(p+1) = a^p` (left) or the mirror
/// identities (right), minimal `p` first.
pub fn search_strongly_pi(
    side: Side,
    ring: &FiniteRingSpec,
    a: &SquareMatrix,
    p_max: usize,
) -> Result<Option<(SquareMatrix, usize)>> {
    search(ring, a, p_max, |x, p| verify_strongly_pi_side(side, a, x, p))
}

pub fn search_drazin(
    side: Side,
    ring: &FiniteRingSpec,
    a: &SquareMatrix,
    j_max: usize,
) -> Result<Option<(SquareMatrix, usize)>> {
    search(ring, a, j_max, |x, j| verify_drazin_side(side, a, x, j))
}

pub fn search_left_strongly_pi(ring: &FiniteRingSpec, a: &SquareMatrix, p_max: usize) -> Result<Option<(SquareMatrix, usize)>> {
    search_strongly_pi(Side::Left, ring, a, p_max)
}

pub fn search_right_strongly_pi(ring: &FiniteRingSpec, a: &SquareMatrix, q_max: usize) -> Result<Option<(SquareMatrix, usize)>> {
    search_strongly_pi(Side::Right, ring, a, q_max)
}

pub fn search_left_drazin(ring: &FiniteRingSpec, a: &SquareMatrix, j_max: usize) -> Result<Option<(SquareMatrix, usize)>> {
    search_drazin(Side::Left, ring, a, j_max)
}

pub fn search_right_drazin(ring: &FiniteRingSpec, a: &SquareMatrix, j_max: usize) -> Result<Option<(SquareMatrix, usize)>> {
    search_drazin(Side::Right, ring, a, j_max)
}

/// Per-element outcome of the audit, on one side.
#[derive(Debug, Clone, PartialEq, Eq)]
struct SideAudit {
    equivalent: bool,
    azumaya_ok: bool,
    index: Option<usize>,
}

fn audit_side(side: Side, ring: &FiniteRingSpec, a: &SquareMatrix) -> Result<SideAudit> {
    let bound = ring.index_bound();
    let spi = search_strongly_pi(side, ring, a, bound)?;
    let dz = search_drazin(side, ring, a, bound)?;
    let azumaya_ok = match &spi {
        Some((x, p)) => match azumaya(side, a, x, *p) {
            Ok(w) => verify_drazin_side(side, a, &w.candidate, *p),
            Err(_) => false,
        },
        None => true,
    };
    Ok(SideAudit { equivalent: spi.is_some() == dz.is_some(), azumaya_ok, index: dz.map(|d| d.1) })
}

/// For every element: a one-sided strongly pi-regular witness exists iff a
/// one-sided Drazin inverse does, and the Azumaya realization of the former
/// passes the Drazin predicate at the same index. Both sides are audited.
pub fn theorem_2_7_audit(ring: &FiniteRingSpec) -> Result<VerificationReport> {
    let count = ring.element_count() as u64;
    let results = par::map_trials(count, |i| {
        let a = ring.element(i as u128);
        let left = audit_side(Side::Left, ring, &a)?;
        let right = audit_side(Side::Right, ring, &a)?;
        Ok((a, left, right))
    });
    let mut report = VerificationReport::new(format!("ring-audit M{}(Z{})", ring.dim, ring.modulus));
    let mut counterexamples = 0usize;
    let mut max_index = 0usize;
    let (mut eq_l, mut eq_r, mut az_l, mut az_r) = (true, true, true, true);
    for r in results {
        let (a, left, right): (SquareMatrix, SideAudit, SideAudit) = r?;
        eq_l &= left.equivalent;
        eq_r &= right.equivalent;
        az_l &= left.azumaya_ok;
        az_r &= right.azumaya_ok;
        max_index = max_index.max(left.index.unwrap_or(0)).max(right.index.unwrap_or(0));
        if !(left.equivalent && right.equivalent && left.azumaya_ok && right.azumaya_ok) {
            counterexamples += 1;
            report.note(format!("counterexample a = {a}: left {left:?}, right {right:?}"));
        }
    }
    report
        .check("left-equivalence", eq_l)
        .check("right-equivalence", eq_r)
        .check("left-azumaya", az_l)
        .check("right-azumaya", az_r)
        .index("elements", count)
        .index("counterexamples", counterexamples)
        .index("max-index", max_index);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::drazin::{drazin_index, drazin_inverse};

    #[test]
    fn spec_and_budget() {
        let r = FiniteRingSpec::new(2, 2).unwrap();
        assert_eq!(r.element_count(), 16);
        assert_eq!(r.index_bound(), 4);
        assert_eq!(FiniteRingSpec::new(2, 3).unwrap().index_bound(), 6);
        assert_eq!(FiniteRingSpec::new(1, 6).unwrap().index_bound(), 4);
        assert!(matches!(FiniteRingSpec::new(3, 3), Err(Error::BudgetExceeded { .. })));
        assert!(FiniteRingSpec::new(2, 1).is_err());
    }

    #[test]
    fn lexicographic_order() {
        let r = FiniteRingSpec::new(2, 3).unwrap();
        let k = r.kind();
        assert!(r.element(0).is_zero());
        assert_eq!(r.element(1), SquareMatrix::from_ints(k, [[0, 0], [0, 1]]));
        assert_eq!(r.element(27), SquareMatrix::from_ints(k, [[1, 0], [0, 0]]));
        assert_eq!(r.element(80), SquareMatrix::from_ints(k, [[2, 2], [2, 2]]));
    }

    #[test]
    fn search_examples() {
        let r = FiniteRingSpec::new(2, 2).unwrap();
        let k = r.kind();
        let i = SquareMatrix::identity(2, k);
        let (x, p) = search_left_strongly_pi(&r, &i, 4).unwrap().unwrap();
        assert_eq!(p, 0);
        assert_eq!(x, i);
        let n = SquareMatrix::from_ints(k, [[0, 1], [0, 0]]);
        let (x, p) = search_left_strongly_pi(&r, &n, 4).unwrap().unwrap();
        assert!(x.is_zero());
        assert_eq!(p, 2);
        let (x, j) = search_right_drazin(&r, &n, 4).unwrap().unwrap();
        assert!(x.is_zero());
        assert_eq!(j, 2);
        assert!(search_left_drazin(&r, &n, 1).unwrap().is_none());
        assert!(r.elements().all(|a| search_left_strongly_pi(&r, &a, 4).unwrap().is_some()));
    }

    #[test]
    fn prime_field_search_agrees_with_canonical_inverse() {
        for m in [2, 3] {
            let r = FiniteRingSpec::new(2, m).unwrap();
            for a in r.elements() {
                let (x, j) = search_left_drazin(&r, &a, r.index_bound()).unwrap().unwrap();
                let (xd, k) = drazin_inverse(&a).unwrap();
                assert_eq!((x, j), (xd, k));
                assert_eq!(k, drazin_index(&a).unwrap());
            }
        }
    }

    #[test]
    fn audit_small_rings() {
        for (dim, m, count) in [(2, 2, 16), (1, 6, 6), (1, 4, 4)] {
            let r = FiniteRingSpec::new(dim, m).unwrap();
            let rep = theorem_2_7_audit(&r).unwrap();
            assert!(rep.passed(), "{rep}");
            assert_eq!(rep.indices["elements"], count);
            assert_eq!(rep.indices["counterexamples"], 0);
        }
    }

    #[test]
    fn z4_nilpotent_index() {
        // 2 is nilpotent of index 2 in Z/4, beyond what the dimension alone suggests
        let r = FiniteRingSpec::new(1, 4).unwrap();
        let two = r.element(2);
        let (x, j) = search_left_drazin(&r, &two, r.index_bound()).unwrap().unwrap();
        assert!(x.is_zero());
        assert_eq!(j, 2);
    }
}
