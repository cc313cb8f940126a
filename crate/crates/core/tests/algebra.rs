//! Novikov and APN algebra axioms, associated products and derived identities.

mod common;

use common::*;
use novikov_core::algebra::*;
use novikov_core::catalog::*;
use novikov_core::search::{enumerate_apn, SearchConfig};
use novikov_core::{FieldSpec, Vector};
use proptest::prelude::*;

fn q() -> FieldSpec {
    FieldSpec::Rational
}

#[test]
fn n2_products() {
    let n = n2(q());
    let e1 = Vector::basis(q(), 2, 0);
    let e2 = Vector::basis(q(), 2, 1);
    assert_eq!(n.circ.mul(&e2, &e1), e2);
    let s = &e1 + &e2;
    assert_eq!(n.circ.mul(&s, &e1), s);
    assert!(BinaryOp::zero(q(), 2).mul(&s, &e1).is_zero());
    assert_eq!(n.circ.nonzero_entries().len(), 2);
}

#[test]
fn novikov_check_oracles() {
    assert!(check_novikov(&NovikovAlgebra::new(BinaryOp::zero(q(), 3))).passed);
    assert!(check_novikov(&n2(q())).passed);
    let bad = NovikovAlgebra::new(BinaryOp::from_i64(q(), 2, &[(0, 0, 1, 1), (1, 0, 0, 1)]));
    let r = check_novikov(&bad);
    assert!(!r.passed);
    assert!(!r.witnesses.is_empty());
    assert!(r.witnesses.iter().all(|w| w.id.starts_with("Na") && w.residual.iter().any(|c| !c.is_zero())));
}

#[test]
fn one_dimensional_apn() {
    let f = q();
    assert!(check_apn(&one_dim(f, &f.int(-2), &f.int(1)).unwrap()).passed);
    assert!(check_apn(&one_dim(f, &f.zero(), &f.zero()).unwrap()).passed);
    let r = check_apn(&one_dim(f, &f.int(1), &f.int(1)).unwrap());
    assert!(!r.passed);
    assert_eq!(r.failed_ids(), vec!["Aa2", "Aa3"]);
    let aa3 = r.witnesses.iter().find(|w| w.id == "Aa3").unwrap();
    assert_eq!(aa3.indices, vec![0, 0, 0]);
    assert_eq!(aa3.residual, vec![f.int(3)]);
}

#[test]
fn three_dimensional_example() {
    let b = a3(q());
    assert!(check_apn(&b).passed);
    let n = associated_novikov(&b);
    assert_eq!(n.circ, BinaryOp::from_i64(q(), 3, &[(0, 0, 1, 1), (0, 1, 2, 1)]));
    assert_eq!(b.star(), BinaryOp::from_i64(q(), 3, &[(0, 0, 1, 2), (0, 1, 2, 1), (1, 0, 2, 1)]));
    assert!(check_derived_identities(&b).passed);
    assert!(check_bimodule_characterization(&b).passed);
}

#[test]
fn associated_products() {
    let f = q();
    assert!(associated_novikov(&ApnAlgebra::zero(f, 2)).circ.is_zero());
    let b = one_dim(f, &f.int(-2), &f.int(1)).unwrap();
    assert_eq!(associated_novikov(&b).circ, BinaryOp::from_i64(f, 1, &[(0, 0, 0, -1)]));
    let (p, r) = (5, 7);
    let b = one_dim(f, &f.int(p), &f.int(r)).unwrap();
    assert_eq!(b.odot(), BinaryOp::from_i64(f, 1, &[(0, 0, 0, p + r)]));
}

#[test]
fn derived_identities_detect_corruption() {
    let mut b = a3(q());
    assert!(check_derived_identities(&ApnAlgebra::zero(q(), 3)).passed);
    b.prec = BinaryOp::from_i64(q(), 3, &[(0, 0, 2, 1), (1, 0, 0, 1)]);
    assert!(!check_apn(&b).passed);
    assert!(!check_derived_identities(&b).passed || !check_bimodule_characterization(&b).passed);
}

#[test]
fn bimodule_characterization_examples() {
    let f = q();
    assert!(check_bimodule_characterization(&one_dim(f, &f.zero(), &f.zero()).unwrap()).passed);
    assert!(check_bimodule_characterization(&a2_q(1)).passed);
}

#[test]
fn mismatched_operations_are_rejected() {
    let r = ApnAlgebra::new(BinaryOp::zero(q(), 2), BinaryOp::zero(q(), 3));
    assert!(r.is_err());
    let r = ApnAlgebra::new(BinaryOp::zero(q(), 2), BinaryOp::zero(FieldSpec::Prime(3), 2));
    assert!(r.is_err());
}

#[test]
fn small_enumeration_counts() {
    let f2 = FieldSpec::Prime(2);
    assert_eq!(enumerate_apn(f2, 1, None, SearchConfig::default()).unwrap().found.len(), 2);
    let f5 = FieldSpec::Prime(5);
    assert_eq!(enumerate_apn(f5, 1, None, SearchConfig::default()).unwrap().found.len(), 5);
}

#[test]
fn every_small_apn_has_its_consequences() {
    for b in apn_gf3_dim2() {
        assert!(apn_oracle(&b));
        assert!(check_novikov(&associated_novikov(&b)).passed);
        assert!(check_derived_identities(&b).passed);
        assert!(check_bimodule_characterization(&b).passed);
    }
}

proptest! {
    #[test]
    fn apn_check_agrees_with_oracle(seed in any::<u64>(), dim in 1usize..=3, density in 0.05f64..0.4) {
        let mut smp = Sampler::new(gf3(), seed);
        let b = ApnAlgebra::new(random_op(&mut smp, dim, density), random_op(&mut smp, dim, density)).unwrap();
        let apn = check_apn(&b).passed;
        prop_assert_eq!(apn, apn_oracle(&b));
        prop_assert_eq!(check_apn_mode(&b, novikov_core::Mode::FirstFailure).passed, apn);
        prop_assert_eq!(check_bimodule_characterization(&b).passed, apn);
        prop_assert_eq!(check_novikov(&associated_novikov(&b)).passed, novikov_oracle(&b.circ()));
        if apn {
            prop_assert!(check_derived_identities(&b).passed);
        }
    }

    #[test]
    fn novikov_check_agrees_with_oracle(seed in any::<u64>(), dim in 1usize..=3) {
        let mut smp = Sampler::new(FieldSpec::Prime(5), seed);
        let op = random_op(&mut smp, dim, 0.2);
        let r = check_novikov(&NovikovAlgebra::new(op.clone()));
        prop_assert_eq!(r.passed, novikov_oracle(&op));
        prop_assert_eq!(r.passed, r.witnesses.is_empty());
    }

    #[test]
    fn sum_of_operations_is_circ(seed in any::<u64>()) {
        let mut smp = Sampler::new(FieldSpec::Rational, seed);
        let b = ApnAlgebra::new(random_op(&mut smp, 2, 0.5), random_op(&mut smp, 2, 0.5)).unwrap();
        let e = basis(FieldSpec::Rational, 2);
        for x in &e {
            for y in &e {
                prop_assert_eq!(b.circ().mul(x, y), &b.succ.mul(x, y) + &b.prec.mul(x, y));
            }
        }
    }
}
