use osdrazin::gen::trial_rng;
use osdrazin::intertwine::{pair_idempotent_family, pair_planted_family};
use osdrazin::spectra::*;
use osdrazin::{Gaussian, ScalarKind, SquareMatrix};
use proptest::prelude::*;

const Q: ScalarKind = ScalarKind::Rational;

fn g(re: i64, im: i64) -> Gaussian {
    Gaussian::from_ints(re, im)
}

/// Algebraic multiplicity from ranks: `dim - rank((lambda - A)^dim)`.
fn multiplicity(a: &SquareMatrix, lambda: &Gaussian) -> usize {
    let a = a.to_gaussian();
    let shifted = &SquareMatrix::scalar(a.dim(), osdrazin::Scalar::Gaussian(lambda.clone())) - &a;
    a.dim() - shifted.pow(a.dim() as u32).rank().unwrap()
}

#[test]
fn planted_jordan_example() {
    let spec: JordanSpec = "2:2,0:1,5:1".parse().unwrap();
    let a = jordan_realize(&spec, &mut trial_rng(40, 0));
    let r = group_spectrum(&a).unwrap();
    assert_eq!(r.group_spectrum, vec![g(2, 0)]);
    assert_eq!(r.point_index(&g(2, 0)), 2);
    assert_eq!(r.point_index(&g(7, 0)), 0);
    assert_eq!(point_index(&a, &g(7, 0)).unwrap(), 0);
    assert_eq!(a.charpoly(), spec.charpoly());
}

#[test]
fn gaussian_eigenvalues() {
    let spec: JordanSpec = "1+2i:2,1-2i:2,3:1".parse().unwrap();
    assert_eq!(spec.kind(), ScalarKind::Gaussian);
    let a = jordan_realize(&spec, &mut trial_rng(41, 0));
    let r = group_spectrum(&a).unwrap();
    assert!(r.is_split());
    assert_eq!(r.group_spectrum.len(), 2);
    assert!(r.group_spectrum.contains(&g(1, 2)) && r.group_spectrum.contains(&g(1, -2)));
    // rational matrix with eigenvalues +-i
    let rot = SquareMatrix::from_ints(Q, [[0, -1], [1, 0]]);
    let r = group_spectrum(&rot).unwrap();
    assert_eq!(r.eigenvalues.len(), 2);
    assert!(r.group_spectrum.is_empty());
}

#[test]
fn one_sided_spectra_of_a_matrix() {
    let spec: JordanSpec = "0:3,1:1".parse().unwrap();
    let a = jordan_realize(&spec, &mut trial_rng(42, 0));
    let r = group_spectrum(&a).unwrap();
    for which in OneSidedSpectrum::ALL {
        let s = r.spectrum(which);
        match which {
            OneSidedSpectrum::LeftGroup | OneSidedSpectrum::RightGroup => assert_eq!(s, vec![g(0, 0)]),
            _ => assert!(s.is_empty(), "{}", which.name()),
        }
    }
    assert!(r.group_spectrum_nonzero().is_empty());
}

#[test]
fn product_identities() {
    let a = SquareMatrix::from_ints(Q, [[1, 2, 0], [0, 1, 1], [1, 0, 0]]);
    let c = SquareMatrix::from_ints(Q, [[0, 1, 0], [0, 0, 1], [2, 0, 0]]);
    let rep = product_identity_check(&a, &c).unwrap();
    assert!(rep.passed(), "{rep}");
    for t in 0..5 {
        let (spec, a, c) = planted_product(&mut trial_rng(43, t), 4, Q);
        let rep = product_identity_check_hinted(&a, &c, &spec.eigenvalues()).unwrap();
        assert!(rep.passed(), "{rep}");
        assert_eq!(rep.indices["residual-degree-ac"], 0);
    }
}

#[test]
fn intertwine_identities() {
    let p = pair_idempotent_family(&mut trial_rng(44, 0), 2, 4, Q).unwrap();
    assert!(intertwine_identity_check(&p, &[]).unwrap().passed());
    let p = pair_planted_family(&mut trial_rng(44, 1), 4, 3, 2, Q).unwrap();
    let rep = intertwine_identity_check(&p, &[]).unwrap();
    assert!(rep.passed(), "{rep}");
    assert_eq!(rep.indices["index-1-a"], 3);
    assert_eq!(rep.indices["index-1-b"], 3);
}

#[test]
fn commuting_radius() {
    let first: JordanSpec = "2:2,1+i:1".parse().unwrap();
    let second: JordanSpec = "3:2,-1:1".parse().unwrap();
    let s = osdrazin::gen::random_invertible(&mut trial_rng(45, 0), 3, Q);
    let rep = commuting_radius_check(&first, &second, &s).unwrap();
    assert!(rep.passed(), "{rep}");
    let bad: JordanSpec = "3:1,1:2".parse().unwrap();
    assert!(commuting_radius_check(&first, &bad, &s).is_err());
    let zero: JordanSpec = "0:2,1:1".parse().unwrap();
    assert!(commuting_radius_check(&zero, &second, &s).is_err());
}

#[test]
fn modular_input_rejected() {
    let m = SquareMatrix::identity(2, ScalarKind::Mod(5));
    assert!(group_spectrum(&m).is_err());
    assert!(product_identity_check(&m, &m).is_err());
}

#[test]
fn report_serializes() {
    let a = SquareMatrix::from_ints(Q, [[2, 1], [0, 2]]);
    let json = serde_json::to_value(group_spectrum(&a).unwrap()).unwrap();
    assert_eq!(json["eigenvalues"][0]["point_index"], 2);
    assert_eq!(json["drazin_invertible_everywhere"], true);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn point_index_is_largest_block(seed in any::<u64>(), dim in 1usize..=5, gauss in any::<bool>()) {
        let mut rng = trial_rng(seed, 0);
        let kind = if gauss { ScalarKind::Gaussian } else { Q };
        let spec = random_jordan_spec(&mut rng, dim, kind);
        let a = jordan_realize(&spec, &mut rng);
        let hints = spec.eigenvalues();
        let r = group_spectrum_hinted(&a, &hints).unwrap();
        prop_assert!(r.is_split());
        prop_assert_eq!(r.eigenvalues.len(), hints.len());
        for lambda in &hints {
            prop_assert_eq!(point_index(&a, lambda).unwrap(), spec.largest_block(lambda));
            prop_assert_eq!(r.point_index(lambda), spec.largest_block(lambda));
            let total: usize = spec.blocks().iter().filter(|b| &b.0 == lambda).map(|b| b.1).sum();
            prop_assert_eq!(multiplicity(&a, lambda), total);
        }
        let expected: Vec<_> = r.eigenvalues.iter().filter(|l| spec.largest_block(l) >= 2).cloned().collect();
        prop_assert_eq!(&r.group_spectrum, &expected);
    }

    #[test]
    fn spec_round_trips_through_text(seed in any::<u64>(), dim in 1usize..=6) {
        let spec = random_jordan_spec(&mut trial_rng(seed, 1), dim, ScalarKind::Gaussian);
        prop_assert_eq!(spec.to_string().parse::<JordanSpec>().unwrap(), spec.clone());
        prop_assert_eq!(spec.matrix().charpoly(), spec.charpoly());
    }
}
