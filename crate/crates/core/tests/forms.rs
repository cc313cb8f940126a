//! Quasi-Frobenius and quadratic forms, double constructions and quadratic
//! Rota-Baxter structures.

mod common;

use common::*;
use novikov_core::algebra::*;
use novikov_core::bialgebra::*;
use novikov_core::catalog::*;
use novikov_core::forms::*;
use novikov_core::matched_pair::check_novikov_matched_pair;
use novikov_core::search::*;
use novikov_core::{FieldSpec, Matrix, Scalar};

fn q() -> FieldSpec {
    FieldSpec::Rational
}

fn canonical(f: FieldSpec, n: usize) -> Matrix {
    let z = Matrix::zeros(f, n, n);
    let id = Matrix::identity(f, n);
    Matrix::block(&z, &id, &id, &z)
}

#[test]
fn quasi_frobenius_examples() {
    let zero = NovikovAlgebra::new(BinaryOp::zero(q(), 2));
    assert!(check_quasi_frobenius(&zero, &Matrix::identity(q(), 2)).unwrap().passed);
    let singular = Matrix::from_i64(q(), &[&[1, 1], &[1, 1]]);
    let r = check_quasi_frobenius(&zero, &singular).unwrap();
    assert_eq!(r.failed_ids(), vec!["NonDeg"]);
    let skew = Matrix::from_i64(q(), &[&[0, 1], &[-1, 0]]);
    assert!(check_quasi_frobenius(&zero, &skew).unwrap().failed_ids().contains(&"Sym"));
}

#[test]
fn quadratic_examples() {
    assert!(check_quadratic_apn(&ApnAlgebra::zero(q(), 3), &Matrix::identity(q(), 3)).unwrap().passed);
    let r = check_quadratic_apn(&a3(q()), &Matrix::identity(q(), 3)).unwrap();
    assert!(!r.passed);
    assert!(r.failed_ids().iter().all(|id| id.starts_with("C2")));
    let zero = NovikovAlgebra::new(BinaryOp::zero(q(), 2));
    assert_eq!(apn_from_quasi_frobenius(&zero, &Matrix::from_i64(q(), &[&[2, 1], &[1, 0]])).unwrap(), ApnAlgebra::zero(q(), 2));
}

#[test]
fn s_omega_inverts_the_form() {
    assert_eq!(s_omega(&Matrix::identity(q(), 2)).unwrap(), Matrix::identity(q(), 2));
    let half = Scalar::parse(q(), "1/2", false).unwrap();
    let third = Scalar::parse(q(), "1/3", false).unwrap();
    let mut expected = Matrix::zeros(q(), 2, 2);
    expected[(0, 0)] = half;
    expected[(1, 1)] = third;
    assert_eq!(s_omega(&Matrix::from_i64(q(), &[&[2, 0], &[0, 3]])).unwrap(), expected);
    assert!(s_omega(&Matrix::zeros(q(), 2, 2)).is_err());
    let w = Matrix::from_i64(q(), &[&[1, 2], &[2, 1]]);
    assert_eq!(t_from_s(&s_omega(&w).unwrap()), omega_sharp(&w).unwrap().inverse().unwrap());
}

/// Double constructions built from bialgebras: ω is quasi-Frobenius, the
/// compatible structure is quadratic and is the double algebra, and s_ω is
/// symmetric and invariant.
#[test]
fn double_constructions_from_bialgebras() {
    for bi in bialgebra_fixtures(3) {
        let a = &bi.algebra;
        let astar = dualize_cobracket(&bi.delta);
        let pair = dual_novikov_pair(a, &astar).unwrap();
        assert!(check_novikov_matched_pair(&pair).unwrap().passed);
        let dc = build_double_construction(a, &astar).unwrap();
        let n = a.dim();
        assert_eq!(dc.omega, canonical(a.field(), n));
        assert!(check_quasi_frobenius(&dc.algebra, &dc.omega).unwrap().passed);
        let b = apn_from_quasi_frobenius(&dc.algebra, &dc.omega).unwrap();
        assert!(check_apn(&b).passed);
        assert_eq!(b.circ(), dc.algebra.circ);
        assert!(check_quadratic_apn(&b, &dc.omega).unwrap().passed);
        assert_eq!(b, double_bialgebra(&bi).unwrap().algebra);
        let s = s_omega(&dc.omega).unwrap();
        assert!(s.is_symmetric());
        assert!(check_invariant(&b, &s).unwrap().passed);
        // Round trip through the associated Novikov algebra.
        assert_eq!(apn_from_quasi_frobenius(&associated_novikov(&b), &dc.omega).unwrap(), b);
    }
}

#[test]
fn double_construction_with_trivial_dual() {
    let a = a3(q());
    let dc = build_double_construction(&a, &ApnAlgebra::zero(q(), 3)).unwrap();
    assert!(check_quasi_frobenius(&dc.algebra, &dc.omega).unwrap().passed);
    assert_eq!(dc.dim, 3);
}

#[test]
fn non_matched_pair_has_no_double_construction() {
    let a = a2(gf3(), &gf3().one());
    let astar = apn_from_i64(gf3(), 2, &[], &[(0, 0, 0, 1)]);
    if !check_apn_bialgebra(&a, &cobracket_from_dual(&astar)).unwrap().passed {
        assert!(build_double_construction(&a, &astar).is_err());
    }
}

/// Every quasi-Frobenius form on small GF(3) Novikov algebras yields a
/// quadratic APN algebra with the same sum.
#[test]
fn quasi_frobenius_forms_give_quadratic_structures() {
    let f = gf3();
    let values = f.elements().unwrap();
    let mut found = 0;
    for n in sample_novikov(f, 2, 3, 40, 4).unwrap() {
        for w in matrix_grid(f, 2, 2, &values).filter(Matrix::is_symmetric) {
            if !check_quasi_frobenius(&n, &w).unwrap().passed {
                continue;
            }
            found += 1;
            let b = apn_from_quasi_frobenius(&n, &w).unwrap();
            assert!(check_apn(&b).passed);
            assert_eq!(b.circ(), n.circ);
            assert!(check_quadratic_apn(&b, &w).unwrap().passed);
            assert!(check_invariant(&b, &s_omega(&w).unwrap()).unwrap().passed);
        }
    }
    assert!(found > 20, "{found}");
}

#[test]
fn quadratic_rota_baxter_structures() {
    let f = gf3();
    let values = f.elements().unwrap();
    let mut seen = 0;
    for a in apn_gf3_dim2().iter().step_by(3) {
        for lam in [1i64, -1, 0] {
            let l = f.int(lam);
            for p in matrix_grid(f, 2, 2, &values) {
                if !check_rota_baxter_apn_quiet(a, &p, &l) {
                    continue;
                }
                let (hat, ph, w) = semidirect_quadratic_rb(a, &p, &l).unwrap();
                assert!(check_quadratic_rb(&hat, &ph, &w, &l).unwrap().passed);
                let n = associated_novikov(&hat);
                assert!(check_quasi_frobenius(&n, &w).unwrap().passed);
                assert!(check_symmetric_rb_qf(&n, &ph, &w, &l).unwrap().passed);
                assert_eq!(apn_from_quasi_frobenius(&n, &w).unwrap(), hat);
                seen += 1;
            }
        }
    }
    assert!(seen > 50, "{seen}");
    let b = a3(q());
    let hat = novikov_core::representation::semidirect_apn(&b, &coregular_apn_rep(&b)).unwrap();
    let zero = Matrix::zeros(q(), 6, 6);
    assert!(check_quadratic_rb(&hat, &zero, &canonical(q(), 3), &q().zero()).unwrap().passed);
}

fn check_rota_baxter_apn_quiet(a: &ApnAlgebra, p: &Matrix, l: &Scalar) -> bool {
    novikov_core::operators::check_rota_baxter_apn(a, p, l).unwrap().passed
}
