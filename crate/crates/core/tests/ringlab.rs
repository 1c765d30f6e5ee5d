use osdrazin::drazin::{verify_drazin_side, verify_strongly_pi_side};
use osdrazin::ringlab::*;
use osdrazin::{Side, SquareMatrix};
use proptest::prelude::*;

const SIDES: [Side; 2] = [Side::Left, Side::Right];

/// Entries of `M_k(Z/m)` read back as a base-`m` number.
fn rank(ring: &FiniteRingSpec, a: &SquareMatrix) -> u128 {
    let k = ring.dim();
    let mut acc = 0u128;
    for i in 0..k {
        for j in 0..k {
            let digit: u64 = a.get(i, j).to_string().parse().unwrap();
            acc = acc * ring.modulus() as u128 + digit as u128;
        }
    }
    acc
}

#[test]
fn enumeration_is_lexicographic() {
    for (dim, m) in [(2, 2), (2, 3), (1, 6)] {
        let ring = FiniteRingSpec::new(dim, m).unwrap();
        let all: Vec<_> = ring.elements().collect();
        assert_eq!(all.len() as u128, ring.element_count());
        for (i, a) in all.iter().enumerate() {
            assert_eq!(rank(&ring, a), i as u128);
            assert_eq!(&ring.element(i as u128), a);
        }
    }
}

#[test]
fn budget_is_enforced() {
    assert!(matches!(FiniteRingSpec::new(3, 3), Err(osdrazin::Error::BudgetExceeded { elements: 19683, .. })));
    assert!(FiniteRingSpec::with_budget(3, 3, 19683).is_ok());
    assert!(FiniteRingSpec::new(0, 2).is_err());
}

#[test]
fn search_is_first_at_minimal_index() {
    let ring = FiniteRingSpec::new(2, 3).unwrap();
    let bound = ring.index_bound();
    for a in ring.elements() {
        for side in SIDES {
            let found = search_drazin(side, &ring, &a, bound).unwrap();
            // oracle: plain double loop, index outer
            let expected = (0..=bound).find_map(|j| ring.elements().find(|x| verify_drazin_side(side, &a, x, j)).map(|x| (x, j)));
            assert_eq!(found, expected);
        }
    }
}

#[test]
fn z6_units_idempotents_and_nilpotents() {
    let ring = FiniteRingSpec::new(1, 6).unwrap();
    for a in ring.elements() {
        let (x, j) = search_left_drazin(&ring, &a, ring.index_bound()).unwrap().unwrap();
        let v: u64 = a.get(0, 0).to_string().parse().unwrap();
        // Z6 = Z2 x Z3 has no nonzero nilpotents, so every element has index <= 1
        match v {
            1 | 5 => assert_eq!(j, 0),
            _ => assert_eq!(j, 1),
        }
        assert!(verify_drazin_side(Side::Right, &a, &x, j));
    }
}

#[test]
fn audits() {
    for (dim, m, count) in [(2, 2, 16), (2, 3, 81), (1, 6, 6), (1, 8, 8)] {
        let ring = FiniteRingSpec::new(dim, m).unwrap();
        let rep = theorem_2_7_audit(&ring).unwrap();
        assert!(rep.passed(), "{rep}");
        assert_eq!(rep.indices["elements"], count);
        assert_eq!(rep.indices["counterexamples"], 0);
    }
    // 2 in Z/8 is nilpotent of index 3
    let rep = theorem_2_7_audit(&FiniteRingSpec::new(1, 8).unwrap()).unwrap();
    assert_eq!(rep.indices["max-index"], 3);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn strongly_pi_witness_exists_iff_drazin(m in prop::sample::select(vec![2u64, 3, 4, 6]), idx in 0u128..256) {
        let ring = FiniteRingSpec::new(2, m).unwrap_or_else(|_| FiniteRingSpec::new(1, m).unwrap());
        let a = ring.element(idx % ring.element_count());
        let bound = ring.index_bound();
        for side in SIDES {
            let spi = search_strongly_pi(side, &ring, &a, bound).unwrap();
            let dz = search_drazin(side, &ring, &a, bound).unwrap();
            prop_assert_eq!(spi.is_some(), dz.is_some());
            if let Some((x, p)) = spi {
                prop_assert!(verify_strongly_pi_side(side, &a, &x, p));
            }
        }
    }
}
