//! Representations, duals, induced Novikov representations, semidirect
//! products and matched pairs.

mod common;

use common::*;
use novikov_core::algebra::*;
use novikov_core::bialgebra::{bialgebra_matched_pair, cobracket_from_dual, coregular_apn_rep};
use novikov_core::catalog::*;
use novikov_core::matched_pair::*;
use novikov_core::representation::*;
use novikov_core::search::Odometer;
use novikov_core::{FieldSpec, Matrix};
use proptest::prelude::*;

fn q() -> FieldSpec {
    FieldSpec::Rational
}

#[test]
fn novikov_representation_examples() {
    let n = n2(q());
    assert!(check_novikov_rep(&n, &regular_novikov_rep(&n)).unwrap().passed);
    let zero = NovikovRep { dim: 3, l: vec![Matrix::zeros(q(), 3, 3); 2], r: vec![Matrix::zeros(q(), 3, 3); 2] };
    assert!(check_novikov_rep(&n, &zero).unwrap().passed);
    let left_only = NovikovRep { dim: 2, l: n.circ.lefts(), r: vec![Matrix::zeros(q(), 2, 2); 2] };
    assert!(!check_novikov_rep(&n, &left_only).unwrap().passed);
}

#[test]
fn apn_representation_examples() {
    let b = a3(q());
    let reg = regular_apn_rep(&b);
    assert!(check_apn_rep(&b, &reg).unwrap().passed);
    assert!(check_apn_rep(&b, &ApnRep::zero(q(), 3, 2)).unwrap().passed);
    let dd = dual_apn_rep(&b, &dual_apn_rep(&b, &reg).unwrap()).unwrap();
    assert!(check_apn_rep(&b, &dd).unwrap().passed);
    let a = a2_q(1);
    assert!(check_apn_rep(&a, &dual_apn_rep(&a, &regular_apn_rep(&a)).unwrap()).unwrap().passed);
    let z = ApnRep::zero(q(), 3, 2);
    assert_eq!(dual_apn_rep(&b, &z).unwrap(), z);
}

#[test]
fn regular_representation_of_zero_algebra_is_zero() {
    assert_eq!(regular_apn_rep(&ApnAlgebra::zero(q(), 2)), ApnRep::zero(q(), 2, 2));
}

#[test]
fn induced_novikov_representations() {
    for b in [a3(q()), a2_q(2)] {
        let n = associated_novikov(&b);
        for kind in InducedKind::ALL {
            let rho = induced_novikov_rep(&regular_apn_rep(&b), kind);
            assert!(check_novikov_rep(&n, &rho).unwrap().passed, "{kind:?}");
            let zero = induced_novikov_rep(&ApnRep::zero(q(), b.dim(), 2), kind);
            assert!(zero.l.iter().chain(&zero.r).all(Matrix::is_zero));
        }
    }
}

#[test]
fn semidirect_product_with_coregular_rep() {
    let a = a2_q(1);
    let hat = semidirect_apn(&a, &dual_apn_rep(&a, &regular_apn_rep(&a)).unwrap()).unwrap();
    let expected = apn_from_i64(q(), 4, &[(0, 0, 1, 1), (0, 3, 2, 2), (3, 0, 2, 1)], &[(0, 3, 2, -1), (3, 0, 2, -1)]);
    assert_eq!(hat, expected);
    assert!(check_apn(&hat).passed);
    let six = semidirect_apn(&a3(q()), &regular_apn_rep(&a3(q()))).unwrap();
    assert_eq!(six.dim(), 6);
    assert!(check_apn(&six).passed);
    let trivial = semidirect_apn(&a, &ApnRep::zero(q(), 2, 1)).unwrap();
    let e = basis(q(), 3);
    assert!(trivial.succ.mul(&e[2], &e[0]).is_zero() && trivial.prec.mul(&e[0], &e[2]).is_zero());
}

#[test]
fn wrong_shapes_are_rejected() {
    let b = a3(q());
    assert!(check_apn_rep(&b, &ApnRep::zero(q(), 2, 2)).is_err());
    assert!(semidirect_apn(&b, &ApnRep::zero(FieldSpec::Prime(3), 3, 1)).is_err());
}

proptest! {
    /// A representation is exactly what makes the semidirect product APN.
    #[test]
    fn representation_iff_semidirect_apn(idx in 0usize..1000, seed in any::<u64>(), m in 1usize..=2) {
        let list = apn_mix(2);
        let b = &list[idx % list.len()];
        let mut smp = Sampler::new(gf3(), seed);
        let n = b.dim();
        let mut fam = || (0..n).map(|_| smp.matrix(m, m, 0.3)).collect::<Vec<_>>();
        let rho = ApnRep { dim: m, l_succ: fam(), r_succ: fam(), l_prec: fam(), r_prec: fam() };
        prop_assert_eq!(check_apn_rep(b, &rho).unwrap().passed, check_apn(&semidirect_apn(b, &rho).unwrap()).passed);
        let nrho = NovikovRep { dim: m, l: rho.l_succ.clone(), r: rho.r_prec.clone() };
        let n = associated_novikov(b);
        prop_assert_eq!(check_novikov_rep(&n, &nrho).unwrap().passed, check_novikov(&semidirect_novikov(&n, &nrho).unwrap()).passed);
    }

    #[test]
    fn regular_and_dual_reps_are_reps(idx in 0usize..1000) {
        let list = apn_mix(2);
        let b = &list[idx % list.len()];
        let reg = regular_apn_rep(b);
        let dual = dual_apn_rep(b, &reg).unwrap();
        prop_assert_eq!(&dual, &coregular_apn_rep(b));
        for rho in [&reg, &dual] {
            prop_assert!(check_apn_rep(b, rho).unwrap().passed);
            prop_assert!(check_apn(&semidirect_apn(b, rho).unwrap()).passed);
            for kind in InducedKind::ALL {
                prop_assert!(check_novikov_rep(&associated_novikov(b), &induced_novikov_rep(rho, kind)).unwrap().passed);
            }
        }
        let nreg = regular_novikov_rep(&associated_novikov(b));
        prop_assert!(check_novikov_rep(&associated_novikov(b), &dual_novikov_rep(&nreg)).unwrap().passed);
    }
}

fn assert_split_agrees(c: &ApnAlgebra, n1: usize) -> Option<bool> {
    let mp = split_apn(c, n1).ok()?;
    let apn = check_apn_mode(c, novikov_core::Mode::FirstFailure).passed;
    assert_eq!(check_apn_matched_pair(&mp).unwrap().passed, apn);
    assert_eq!(check_apn_sum(&mp).unwrap().passed, apn);
    assert_eq!(&build_apn_sum(&mp).unwrap(), c);
    let nmp = summed_novikov_pair(&mp);
    let nov = check_novikov(&associated_novikov(c)).passed;
    assert_eq!(check_novikov_matched_pair(&nmp).unwrap().passed, nov);
    assert_eq!(associated_novikov(c), build_novikov_sum(&nmp).unwrap());
    Some(apn)
}

/// Splittings of small structures into A₁ ⊕ A₂ with both blocks
/// subalgebras: the matched pair check agrees with the axioms of the sum,
/// for both the APN and the Novikov structure.
#[test]
fn matched_pair_iff_sum_is_apn() {
    let f = gf3();
    let vals = f.elements().unwrap();
    let (mut total, mut apn_count) = (0, 0);
    let mut tally = |r: Option<bool>| {
        if let Some(apn) = r {
            total += 1;
            apn_count += apn as usize;
        }
    };
    for d in Odometer::new(16, 3, Some(4)).step_by(3) {
        let mk = |off: usize| {
            let e: Vec<_> = (0..8).filter(|s| d[off + s] != 0).map(|s| (s / 4, (s / 2) % 2, s % 2, vals[d[off + s]].clone())).collect();
            BinaryOp::from_entries(f, 2, &e).unwrap()
        };
        tally(assert_split_agrees(&ApnAlgebra { succ: mk(0), prec: mk(8) }, 1));
    }
    for c in apn_mix(4) {
        for n1 in 1..c.dim() {
            tally(assert_split_agrees(&c, n1));
        }
    }
    assert!(apn_count > 50 && total > apn_count, "{apn_count} of {total}");
}

#[test]
fn trivial_pair_gives_direct_product() {
    let (a, b) = (a2_q(1), a3(q()));
    let mp = ApnMatchedPair { a1: a.clone(), a2: b.clone(), rho1: ApnRep::zero(q(), 2, 3), rho2: ApnRep::zero(q(), 3, 2) };
    assert!(check_apn_matched_pair(&mp).unwrap().passed);
    let sum = build_apn_sum(&mp).unwrap();
    assert_eq!(sum, novikov_core::bialgebra::direct_sum_apn(&a, &b));
    let nmp = summed_novikov_pair(&mp);
    assert!(nmp.rho_a.l.iter().chain(&nmp.rho_b.r).all(Matrix::is_zero));
    assert!(check_novikov_matched_pair(&nmp).unwrap().passed);
}

#[test]
fn mutated_action_fails() {
    let b = a3(q());
    let mp = split_apn(&semidirect_apn(&b, &regular_apn_rep(&b)).unwrap(), 3).unwrap();
    assert!(check_apn_matched_pair(&mp).unwrap().passed);
    let mut bad = mp.clone();
    bad.rho1.l_succ[0][(0, 0)] = q().one();
    let r = check_apn_matched_pair(&bad).unwrap();
    assert!(!r.passed && !r.witnesses.is_empty());
}

#[test]
fn bialgebra_pairs_are_matched_pairs() {
    for bi in bialgebra_fixtures(5) {
        let mp = bialgebra_matched_pair(&bi.algebra, &bi.delta).unwrap();
        assert!(check_novikov_matched_pair(&mp).unwrap().passed);
        assert!(check_novikov(&build_novikov_sum(&mp).unwrap()).passed);
    }
    // A non-bialgebra pair fails.
    let a = a2(gf3(), &gf3().one());
    let astar = apn_from_i64(gf3(), 2, &[(0, 0, 0, 1)], &[]);
    let astar = ApnAlgebra { prec: BinaryOp::from_i64(gf3(), 2, &[(0, 0, 0, 1)]), ..astar };
    let d = cobracket_from_dual(&astar);
    let mp = bialgebra_matched_pair(&a, &d).unwrap();
    assert_eq!(
        check_novikov_matched_pair(&mp).unwrap().passed,
        novikov_core::bialgebra::check_apn_bialgebra(&a, &d).unwrap().passed
    );
}

#[test]
fn inconsistent_pairs_are_rejected() {
    let mp = ApnMatchedPair { a1: a2_q(1), a2: a3(q()), rho1: ApnRep::zero(q(), 2, 2), rho2: ApnRep::zero(q(), 3, 2) };
    assert!(check_apn_matched_pair(&mp).is_err());
    let mp = ApnMatchedPair {
        a1: a2_q(1),
        a2: a2(gf3(), &gf3().one()),
        rho1: ApnRep::zero(q(), 2, 2),
        rho2: ApnRep::zero(q(), 2, 2),
    };
    assert!(check_apn_matched_pair(&mp).is_err());
}
