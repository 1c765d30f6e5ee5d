mod common;

use common::*;
use osdrazin::drazin::*;
use osdrazin::gen::{classical_quad, trial_rng};
use osdrazin::intertwine::*;
use osdrazin::ringlab::{search_strongly_pi, FiniteRingSpec};
use osdrazin::{ScalarKind, Side, SquareMatrix};
use proptest::prelude::*;

const SIDES: [Side; 2] = [Side::Left, Side::Right];

fn z2_pairs() -> (FiniteRingSpec, Vec<IntertwinePair>) {
    let ring = FiniteRingSpec::new(2, 2).unwrap();
    let pairs = pair_exhaustive(&ring, 1).unwrap();
    (ring, pairs)
}

/// Direct check of `ab^n = b^(n+1)` and `ba^n = a^(n+1)`.
fn identities_hold(a: &SquareMatrix, b: &SquareMatrix, n: u32) -> bool {
    &(a * &b.pow(n)) == &b.pow(n + 1) && &(b * &a.pow(n)) == &a.pow(n + 1)
}

#[test]
fn exhaustive_z2_contents() {
    let (ring, pairs) = z2_pairs();
    assert_eq!(pairs.len(), 28);
    let k = ring.kind();
    let m = |rows: [[i64; 2]; 2]| SquareMatrix::from_ints(k, rows);
    let has = |a: &SquareMatrix, b: &SquareMatrix| pairs.iter().any(|p| p.a() == a && p.b() == b);
    for e in ring.elements() {
        // (a, a) always intertwines
        assert!(has(&e, &e));
    }
    assert!(has(&m([[1, 0], [0, 0]]), &m([[1, 1], [0, 0]])));
    assert!(!has(&m([[1, 0], [0, 0]]), &m([[0, 0], [0, 1]])));
    for p in &pairs {
        assert!(identities_hold(p.a(), p.b(), 1));
    }
    // oracle: count by brute force over all ordered pairs
    let count = ring
        .elements()
        .flat_map(|a| ring.elements().map(move |b| (a.clone(), b)))
        .filter(|(a, b)| identities_hold(a, b, 1))
        .count();
    assert_eq!(count, 28);
}

#[test]
fn exhaustive_rejects_bad_input() {
    let ring = FiniteRingSpec::new(2, 2).unwrap();
    assert!(pair_exhaustive(&ring, 0).is_err());
    let big = FiniteRingSpec::with_budget(2, 7, u128::MAX).unwrap();
    assert!(matches!(pair_exhaustive(&big, 1), Err(osdrazin::Error::BudgetExceeded { .. })));
}

#[test]
fn searched_witnesses_transfer_over_z2() {
    let (ring, pairs) = z2_pairs();
    let bound = ring.index_bound();
    let mut transfers = 0;
    for p in &pairs {
        for side in SIDES {
            let Some((x, idx)) = search_strongly_pi(side, &ring, &p.one_minus_a(), bound).unwrap() else {
                continue;
            };
            let y = strong_pi_transfer_4(side, p, &x, idx).unwrap();
            let j = y.index.unwrap();
            assert!(verify_strongly_pi_side(side, &p.one_minus_b(), &y.candidate, j));
            transfers += 1;
        }
    }
    assert!(transfers > 0);
}

#[test]
fn quad_to_pair_examples() {
    let e = m2([[1, 0], [0, 0]]);
    let p = quad_to_pair(&id(2), &id(2), &e, &e, 1).unwrap().unwrap();
    assert_eq!((p.a(), p.b()), (&e, &e));
    // ac = E11, db = E22 do not intertwine
    let f = m2([[0, 0], [0, 1]]);
    assert!(quad_to_pair(&e, &id(2), &id(2), &f, 1).unwrap().is_none());
    // classical quads: (ac, ca) needs ac (ca)^n = (ca)^(n+1) as well
    let mut rng = trial_rng(30, 0);
    for _ in 0..20 {
        let q = classical_quad(&mut rng, 3, Q);
        let found = quad_to_pair(q.a(), q.b(), q.c(), q.d(), 1).unwrap();
        let ac = q.a() * q.c();
        let db = q.d() * q.b();
        assert_eq!(found.is_some(), identities_hold(&ac, &db, 1));
    }
}

#[test]
fn idempotent_family_edges() {
    let mut rng = trial_rng(31, 0);
    let z = SquareMatrix::zeros(3, Q);
    let p = pair_idempotent_family(&mut rng, 0, 3, Q).unwrap();
    assert_eq!((p.a(), p.b()), (&z, &z));
    let p = pair_idempotent_family(&mut rng, 3, 3, Q).unwrap();
    assert!(p.a().is_identity() && p.b().is_identity());
    let p = pair_idempotent_family(&mut rng, 1, 3, Q).unwrap();
    assert_eq!(&(p.a() * p.a()), p.a());
    assert_eq!(&(p.b() * p.b()), p.b());
    assert_eq!(&(p.a() * p.b()), p.b());
    assert_eq!(&(p.b() * p.a()), p.a());
    assert!(pair_idempotent_family(&mut rng, 4, 3, Q).is_err());
    let p = pair_idempotent_family(&mut rng, 1, 2, ScalarKind::Mod(5)).unwrap();
    assert!(identities_hold(p.a(), p.b(), 1));
}

#[test]
fn swapped_pair_is_a_pair() {
    let (_, pairs) = z2_pairs();
    for p in &pairs {
        let s = p.swapped();
        assert_eq!((s.a(), s.b()), (p.b(), p.a()));
        assert!(identities_hold(s.a(), s.b(), 1));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn planted_pair_preserves_index(seed in any::<u64>(), dim in 1usize..=4, k in 0usize..=4, n in 1usize..=3) {
        let k = k.min(dim);
        let p = pair_planted_family(&mut trial_rng(seed, 0), dim, k, n, Q).unwrap();
        prop_assert!(identities_hold(p.a(), p.b(), n as u32));
        prop_assert_eq!(drazin_index(&p.one_minus_a()).unwrap(), k);
        prop_assert_eq!(drazin_index(&p.one_minus_b()).unwrap(), k);
        let (x, _) = drazin_inverse(&p.one_minus_a()).unwrap();
        for side in SIDES {
            let y = drazin_transfer_4(side, &p, &x, k).unwrap();
            prop_assert!(verify_drazin_side(side, &p.one_minus_b(), &y.candidate, k));
            let back = reverse_drazin_transfer_4(side, &p, &y.candidate, k).unwrap();
            prop_assert!(verify_drazin_side(side, &p.one_minus_a(), &back.candidate, k));
        }
    }

    #[test]
    fn generalized_transfer_on_idempotent_pairs(seed in any::<u64>(), m in 1usize..=4, r in 0usize..=4) {
        let p = pair_idempotent_family(&mut trial_rng(seed, 1), r.min(m), m, Q).unwrap();
        let (x, _) = drazin_inverse(&p.one_minus_a()).unwrap();
        for side in SIDES {
            let (y, bracket) = gdrazin_transfer_4(side, &p, &x).unwrap();
            prop_assert!(bracket.inverse().is_some());
            let (back, _) = reverse_gdrazin_transfer_4(side, &p, &y.candidate).unwrap();
            prop_assert!(verify_gdrazin_side(side, &p.one_minus_a(), &back.candidate));
        }
    }
}
