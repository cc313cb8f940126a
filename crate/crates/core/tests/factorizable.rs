//! Doubles, factorizable solutions, the isomorphism onto A ⊕ A and the
//! correspondence with quadratic Rota-Baxter structures.

mod common;

use common::*;
use novikov_core::bialgebra::*;
use novikov_core::catalog::*;
use novikov_core::forms::check_quadratic_rb;
use novikov_core::operators::check_rota_baxter_apn;
use novikov_core::search::matrix_grid;
use novikov_core::tensor::tau2;
use novikov_core::{Error, FieldSpec, Matrix, Vector};

fn q() -> FieldSpec {
    FieldSpec::Rational
}

#[test]
fn doubles_are_factorizable() {
    let mut count = 0;
    for bi in bialgebra_fixtures(4) {
        let d = double_bialgebra(&bi).unwrap();
        assert_eq!(d.algebra.dim(), 2 * d.dim);
        assert!(check_factorizable(&d.algebra, &d.s).unwrap().passed);
        assert!(check_apn_bialgebra(&d.algebra, &d.delta).unwrap().passed);
        count += 1;
    }
    assert!(count > 10);
}

/// The double of the worked four-dimensional coboundary bialgebra.
#[test]
fn double_of_worked_example() {
    let (hat, s) = worked_example(0, 1, 1);
    let d = double_bialgebra(&coboundary_bialgebra(&hat, &s).unwrap()).unwrap();
    assert_eq!(d.algebra.dim(), 8);
    assert!(check_quasi_triangular(&d.algebra, &d.s).unwrap().passed);
    assert!(check_factorizable(&d.algebra, &d.s).unwrap().passed);
    // The skew solution itself is never factorizable.
    assert!(!check_factorizable(&hat, &s).unwrap().passed);
    assert!(matches!(factorize(&hat, &s, &Vector::zeros(q(), 4)), Err(Error::Precondition { .. })));
}

#[test]
fn zero_cobracket_double() {
    let b = a3(q());
    let d = double_bialgebra(&ApnBialgebra { algebra: b.clone(), delta: Cobracket::zero(q(), 3) }).unwrap();
    assert!(check_factorizable(&d.algebra, &d.s).unwrap().passed);
    assert_eq!(d.algebra, semidirect_apn_coregular(&b));
}

fn semidirect_apn_coregular(b: &novikov_core::algebra::ApnAlgebra) -> novikov_core::algebra::ApnAlgebra {
    novikov_core::representation::semidirect_apn(b, &coregular_apn_rep(b)).unwrap()
}

#[test]
fn non_bialgebra_has_no_double() {
    let b = a3(q());
    let mut delta = Cobracket::zero(q(), 3);
    delta.succ[(0, 0, 0)] = q().one();
    let bi = ApnBialgebra { algebra: b, delta };
    assert!(matches!(double_bialgebra(&bi), Err(Error::Precondition { .. })));
}

#[test]
fn factorization_and_phi() {
    let mut smp = novikov_core::catalog::Sampler::new(gf3(), 7);
    for bi in bialgebra_fixtures(9) {
        let d = double_bialgebra(&bi).unwrap();
        let (b, s) = (&d.algebra, &d.s);
        for _ in 0..4 {
            let x = smp.matrix(b.dim(), 1, 0.6).column(0);
            let (x1, x2) = factorize(b, s, &x).unwrap();
            assert_eq!(&x1 - &x2, x);
            // x₁ ∈ Im T_s and x₂ ∈ Im T_τ(s).
            assert!(t_from_s(s).solve(&x1).unwrap().is_some());
            assert!(t_from_s(&tau2(s)).solve(&x2).unwrap().is_some());
        }
        let zero = Vector::zeros(b.field(), b.dim());
        assert_eq!(factorize(b, s, &zero).unwrap(), (zero.clone(), zero));
        assert!(!phi_iso(b, s).unwrap().det().unwrap().is_zero());
        let r = check_phi(b, s).unwrap();
        assert!(r.passed, "{:?}", r.failed_ids());
    }
}

/// Quadratic Rota-Baxter structures on A ⋉ A* and factorizable solutions
/// determine each other for every nonzero weight.
#[test]
fn rota_baxter_correspondence() {
    let f = gf3();
    let values = f.elements().unwrap();
    let mut seen = 0;
    for a in apn_gf3_dim2().iter().step_by(4) {
        for lam in [1i64, -1] {
            let l = f.int(lam);
            for p in matrix_grid(f, 2, 2, &values) {
                if !check_rota_baxter_apn(a, &p, &l).unwrap().passed {
                    continue;
                }
                seen += 1;
                let (hat, ph, w) = semidirect_quadratic_rb(a, &p, &l).unwrap();
                let s = rb_to_factorizable(&hat, &ph, &w, &l).unwrap();
                assert_eq!(s, semidirect_rb_tensor(&p, &l));
                assert!(check_factorizable(&hat, &s).unwrap().passed);
                let (p2, w2) = factorizable_to_rb(&hat, &s, &l).unwrap();
                assert_eq!((&p2, &w2), (&ph, &w.inverse().unwrap()));
                assert!(check_quadratic_rb(&hat, &p2, &w2.inverse().unwrap(), &l).unwrap().passed);
                // Weight flip: the same solution at weight −λ.
                let (p3, w3) = factorizable_to_rb(&hat, &s, &-&l).unwrap();
                assert_eq!(w3, -w2.clone());
                assert_eq!(p3, -p2);
                assert!(matches!(factorizable_to_rb(&hat, &s, &f.zero()), Err(Error::InvalidInput(_))));
                assert!(matches!(rb_to_factorizable(&hat, &ph, &w, &f.zero()), Err(Error::InvalidInput(_))));
            }
        }
    }
    assert!(seen > 20, "{seen}");
}

#[test]
fn rb_tensor_shape() {
    let p = Matrix::from_i64(q(), &[&[1, 2], &[0, 3]]);
    let s = semidirect_rb_tensor(&p, &q().one());
    assert_eq!(s.rows(), 4);
    // Only the off-diagonal blocks are set.
    assert_eq!(s[(0, 3)], q().int(-2));
    assert_eq!(s[(3, 0)], q().int(2));
    for i in 0..2 {
        for j in 0..2 {
            assert!(s[(i, j)].is_zero() && s[(2 + i, 2 + j)].is_zero());
        }
    }
    assert!(semidirect_quadratic_rb(&a3(q()), &Matrix::zeros(q(), 2, 2), &q().one()).is_err());
}
