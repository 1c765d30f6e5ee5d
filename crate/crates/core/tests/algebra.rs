mod common;

use common::*;
use osdrazin::io::{matrix_from_json, matrix_to_json, Instance};
use osdrazin::{Gaussian, Scalar, ScalarKind, SquareMatrix};
use proptest::prelude::*;

/// Leibniz expansion over all permutations.
fn leibniz(a: &SquareMatrix) -> Scalar {
    fn perms(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in perms(n - 1) {
            for pos in 0..=p.len() {
                let mut q = p.clone();
                q.insert(pos, n - 1);
                out.push(q);
            }
        }
        out
    }
    let n = a.dim();
    let kind = a.kind();
    let mut total = Scalar::zero(kind);
    for p in perms(n) {
        let inversions = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|&(i, j)| p[i] > p[j]).count();
        let mut term = Scalar::from_i64(kind, if inversions % 2 == 0 { 1 } else { -1 });
        for (i, &j) in p.iter().enumerate() {
            term = &term * a.get(i, j);
        }
        total = &total + &term;
    }
    total
}

fn gauss_matrix(n: usize) -> impl Strategy<Value = SquareMatrix> {
    proptest::collection::vec((-2i64..=2, -2i64..=2), n * n).prop_map(move |v| {
        SquareMatrix::from_fn(n, ScalarKind::Gaussian, |i, j| {
            let (re, im) = v[i * n + j];
            Scalar::Gaussian(Gaussian::from_ints(re, im))
        })
    })
}

fn triple(n: usize) -> impl Strategy<Value = (SquareMatrix, SquareMatrix, SquareMatrix)> {
    (int_matrix(n), int_matrix(n), int_matrix(n))
}

#[test]
fn scalar_examples() {
    assert_eq!(rat(2, 4), rat(1, 2));
    assert_eq!(rat(1, 2).to_string(), "1/2");
    let z6 = ScalarKind::Mod(6);
    assert!(Scalar::from_i64(z6, 5).is_unit());
    assert!(Scalar::from_i64(z6, 2).inv().is_none());
    assert!(!z6.is_field() && ScalarKind::Mod(7).is_field());
    assert_eq!(Scalar::from_i64(z6, -1), Scalar::from_i64(z6, 5));
    let i = Scalar::Gaussian(Gaussian::from_ints(0, 1));
    assert_eq!(&i * &i, Scalar::from_i64(ScalarKind::Gaussian, -1));
    for kind in ["rational", "gaussian", "mod:6"] {
        let k: ScalarKind = kind.parse().unwrap();
        assert_eq!(k.to_string(), kind);
    }
    assert!("mod:1".parse::<ScalarKind>().is_err());
}

#[test]
fn matrix_examples() {
    let a = m2([[1, 2], [3, 4]]);
    assert_eq!(a.determinant(), rat(-2, 1));
    assert_eq!(a.inverse().unwrap(), SquareMatrix::from_rows(vec![vec![rat(-2, 1), rat(1, 1)], vec![rat(3, 2), rat(-1, 2)]]).unwrap());
    assert!(m2([[1, 2], [2, 4]]).inverse().is_none());
    assert_eq!(m2([[1, 2], [2, 4]]).rank().unwrap(), 1);
    let z6 = SquareMatrix::from_ints(ScalarKind::Mod(6), [[2, 0], [0, 1]]);
    assert!(z6.rank().is_err());
    assert!(z6.inverse().is_none());
    assert!(SquareMatrix::from_rows(vec![vec![rat(1, 1)], vec![]]).is_err());
    assert!(id(2).mat_mul(&id(3)).is_err());
}

#[test]
fn json_examples() {
    let m = SquareMatrix::from_rows(vec![vec![rat(1, 3), rat(-2, 1)], vec![rat(0, 1), rat(7, 5)]]).unwrap();
    let json = matrix_to_json(&m);
    assert!(json.contains("\"1/3\""));
    assert_eq!(matrix_from_json(&json).unwrap(), m);
    assert!(matrix_from_json(r#"{"dim":2,"scalar":"rational","entries":[["1"]]}"#).is_err());
    let inst = Instance::Pair { a: id(2), b: id(2), n: 1 };
    assert_eq!(Instance::from_json(&inst.to_json()).unwrap(), inst);
    let inst = Instance::Ring { dim: 2, modulus: 3 };
    assert_eq!(Instance::from_json(&inst.to_json()).unwrap(), inst);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms((a, b, c) in triple(3)) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        prop_assert_eq!(&a * &id(3), a.clone());
        prop_assert_eq!((&a * &b).transpose(), &b.transpose() * &a.transpose());
    }

    #[test]
    fn mod_ring_axioms(a in mod_matrix(2, 6), b in mod_matrix(2, 6), c in mod_matrix(2, 6)) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!((&a * &b).determinant(), &a.determinant() * &b.determinant());
    }

    #[test]
    fn determinant_matches_leibniz(a in sized_int_matrix(4)) {
        let det = a.determinant();
        prop_assert_eq!(&det, &leibniz(&a));
        // det(tI - A) at t = 0 is (-1)^n det A
        let sign = Scalar::from_i64(Q, if a.dim() % 2 == 0 { 1 } else { -1 });
        prop_assert_eq!(a.charpoly().coeff(0), &sign * &det);
        prop_assert_eq!(a.inverse().is_some(), !det.is_zero());
    }

    #[test]
    fn inverse_is_two_sided(a in sized_int_matrix(4)) {
        if let Some(inv) = a.inverse() {
            prop_assert!((&a * &inv).is_identity());
            prop_assert!((&inv * &a).is_identity());
            prop_assert_eq!(a.rank().unwrap(), a.dim());
        } else {
            prop_assert!(a.rank().unwrap() < a.dim());
        }
    }

    #[test]
    fn cayley_hamilton(a in sized_int_matrix(4), g in gauss_matrix(3), m in mod_matrix(3, 4)) {
        for x in [a, g, m] {
            let p = x.charpoly();
            prop_assert_eq!(p.degree(), x.dim());
            prop_assert!(x.eval_poly(p.coeffs()).is_zero());
        }
    }

    #[test]
    fn gaussian_determinant_matches_leibniz(g in gauss_matrix(3)) {
        prop_assert_eq!(g.determinant(), leibniz(&g));
    }

    #[test]
    fn json_round_trip(a in sized_int_matrix(3), g in gauss_matrix(2), m in mod_matrix(2, 6), den in 1i64..9) {
        let a = a.scale(&rat(1, den));
        for x in [a, g, m] {
            prop_assert_eq!(matrix_from_json(&matrix_to_json(&x)).unwrap(), x.clone());
            for s in x.entries() {
                prop_assert_eq!(&Scalar::parse(x.kind(), &s.to_string()).unwrap(), s);
            }
        }
    }
}
