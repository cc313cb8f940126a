//! Exhaustive searches: determinism across worker counts, agreement with a
//! brute-force filter, and budgets.

mod common;

use common::*;
use novikov_core::algebra::*;
use novikov_core::bialgebra::ybe_residual;
use novikov_core::catalog::*;
use novikov_core::operators::check_o_operator_apn;
use novikov_core::representation::regular_apn_rep;
use novikov_core::search::*;
use novikov_core::{FieldSpec, Matrix};

fn q() -> FieldSpec {
    FieldSpec::Rational
}

#[test]
fn worker_count_does_not_change_results() {
    let f = gf3();
    let seq = enumerate_apn(f, 2, Some(3), SearchConfig::sequential()).unwrap();
    for w in [2, 4, 0] {
        assert_eq!(enumerate_apn(f, 2, Some(3), SearchConfig::default().with_workers(w)).unwrap(), seq);
    }
    let b = a3(q());
    let grid = int_grid(q(), 0, 1);
    let seq = search_ybe_solutions(&b, &grid, false, SearchConfig::sequential()).unwrap();
    assert_eq!(search_ybe_solutions(&b, &grid, false, SearchConfig::default().with_workers(3)).unwrap(), seq);
}

#[test]
fn ybe_search_matches_brute_force() {
    let b = a3(q());
    let grid = int_grid(q(), 0, 1);
    let out = search_ybe_solutions(&b, &grid, false, SearchConfig::default()).unwrap();
    let brute: Vec<Matrix> = matrix_grid(q(), 3, 3, &grid).filter(|s| ybe_oracle(&b, s).is_zero()).collect();
    assert_eq!(out.found, brute);
    assert_eq!(out.examined, 2usize.pow(9));
    assert!(!out.truncated);
    let grid = int_grid(q(), -1, 1);
    let skew = search_ybe_solutions(&b, &grid, true, SearchConfig::default()).unwrap();
    let mut brute: Vec<Matrix> = matrix_grid(q(), 3, 3, &grid)
        .filter(|s| s.transpose() == -s.clone() && ybe_oracle(&b, s).is_zero())
        .collect();
    let mut found = skew.found.clone();
    found.sort_by_key(|m| format!("{m:?}"));
    brute.sort_by_key(|m| format!("{m:?}"));
    assert_eq!(found, brute);
    assert_eq!(skew.examined, 27);
}

#[test]
fn o_operator_search_matches_brute_force() {
    let b = a2_q(1);
    let rho = regular_apn_rep(&b);
    let grid = int_grid(q(), -1, 1);
    let out = search_o_operators(&b, &rho, &grid, SearchConfig::default()).unwrap();
    let brute: Vec<Matrix> = matrix_grid(q(), 2, 2, &grid).filter(|t| check_o_operator_apn(&b, &rho, t).unwrap().passed).collect();
    assert_eq!(out.found, brute);
    assert!(out.found.contains(&Matrix::zeros(q(), 2, 2)));
}

#[test]
fn zero_grid_finds_only_zero() {
    let b = a3(q());
    let out = search_ybe_solutions(&b, &[q().zero()], false, SearchConfig::default()).unwrap();
    assert_eq!(out.found, vec![Matrix::zeros(q(), 3, 3)]);
    assert_eq!(out.examined, 1);
}

#[test]
fn budget_truncates() {
    let out = enumerate_apn(gf3(), 2, None, SearchConfig::default().with_budget(5000)).unwrap();
    assert_eq!(out.examined, 5000);
    assert!(out.truncated);
    let full = enumerate_apn(gf3(), 2, Some(2), SearchConfig::default()).unwrap();
    let capped = enumerate_apn(gf3(), 2, Some(2), SearchConfig::default().with_budget(full.examined)).unwrap();
    assert_eq!(capped, full);
    assert!(!full.truncated);
}

#[test]
fn enumeration_results_are_apn_and_complete() {
    let f = FieldSpec::Prime(2);
    let out = enumerate_apn(f, 1, None, SearchConfig::default()).unwrap();
    assert_eq!(out.examined, 4);
    let brute: Vec<ApnAlgebra> = Odometer::new(2, 2, None)
        .map(|d| apn_from_i64(f, 1, &[(0, 0, 0, d[0] as i64)], &[(0, 0, 0, d[1] as i64)]))
        .filter(|b| apn_oracle(b))
        .collect();
    assert_eq!(out.found, brute);
    let nov = enumerate_novikov(FieldSpec::Prime(3), 2, Some(2), SearchConfig::default()).unwrap();
    assert!(nov.found.iter().all(|n| novikov_oracle(&n.circ)));
    assert!(enumerate_apn(q(), 1, None, SearchConfig::default()).is_err());
}

#[test]
fn odometer_order_and_counts() {
    let all: Vec<Vec<usize>> = Odometer::new(2, 3, None).collect();
    assert_eq!(all.len(), 9);
    assert_eq!(all[0], vec![0, 0]);
    assert_eq!(all[1], vec![0, 1]);
    assert_eq!(all[8], vec![2, 2]);
    assert_eq!(Odometer::new(4, 3, Some(1)).count(), 1 + 4 * 2);
    assert_eq!(Odometer::new(3, 0, None).count(), 0);
}

#[test]
fn sampled_structures_satisfy_axioms() {
    for b in sample_apn(FieldSpec::Prime(5), 2, 3, 10, 3).unwrap() {
        assert!(apn_oracle(&b) && check_apn(&b).passed);
    }
    assert_eq!(sample_apn(FieldSpec::Prime(5), 2, 3, 10, 3).unwrap(), sample_apn(FieldSpec::Prime(5), 2, 3, 10, 3).unwrap());
    let brute = ybe_residual(&a3(q()), &Matrix::zeros(q(), 3, 3)).unwrap();
    assert!(brute.is_zero());
}
