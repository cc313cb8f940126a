//! Fixture generators shared by the integration tests.
#![allow(dead_code)]

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use novikov_core::algebra::{ApnAlgebra, BinaryOp};
use novikov_core::bialgebra::{check_apn_bialgebra, cobracket_from_dual, semidirect_ybe_solution, ApnBialgebra};
use novikov_core::catalog::{a2, sample_apn, Sampler};
use novikov_core::representation::regular_apn_rep;
use novikov_core::search::{enumerate_apn, SearchConfig};
use novikov_core::tensor::Tensor3;
use novikov_core::{FieldSpec, Matrix, Vector};

pub fn gf3() -> FieldSpec {
    FieldSpec::Prime(3)
}

/// Every APN structure on GF(3)² with at most three nonzero constants.
pub fn apn_gf3_dim2() -> Vec<ApnAlgebra> {
    static LIST: OnceLock<Vec<ApnAlgebra>> = OnceLock::new();
    LIST.get_or_init(|| enumerate_apn(gf3(), 2, Some(3), SearchConfig::default()).unwrap().found).clone()
}

/// A mix of two- and three-dimensional APN algebras over GF(3), excluding
/// the zero algebra.
pub fn apn_mix(seed: u64) -> Vec<ApnAlgebra> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Vec<ApnAlgebra>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(v) = cache.lock().unwrap().get(&seed) {
        return v.clone();
    }
    let mut out: Vec<ApnAlgebra> = apn_gf3_dim2().into_iter().filter(|b| !b.succ.is_zero() || !b.prec.is_zero()).collect();
    out.extend(sample_apn(gf3(), 3, 2, 40, seed).unwrap().into_iter().filter(|b| !b.succ.is_zero() || !b.prec.is_zero()));
    cache.lock().unwrap().insert(seed, out.clone());
    out
}

/// Bialgebras (A, Δ) with Δ dual to an APN structure on A*, taken from
/// pairs of two-dimensional GF(3) algebras; every `step`-th one is kept.
/// Zero cobrackets are included.
pub fn bialgebra_fixtures(step: usize) -> Vec<ApnBialgebra> {
    static ALL: OnceLock<Vec<ApnBialgebra>> = OnceLock::new();
    let all = ALL.get_or_init(|| {
        let list = apn_gf3_dim2();
        let mut out = Vec::new();
        for a in &list {
            for b in &list {
                let d = cobracket_from_dual(b);
                if check_apn_bialgebra(a, &d).unwrap().passed {
                    out.push(ApnBialgebra { algebra: a.clone(), delta: d });
                }
            }
        }
        out
    });
    all.iter().step_by(step).cloned().collect()
}

/// The two-dimensional algebra `e₁≻e₁ = a e₂` over Q.
pub fn a2_q(a: i64) -> ApnAlgebra {
    a2(FieldSpec::Rational, &FieldSpec::Rational.int(a))
}

/// A ⋉ A* and the skew solution built from the O-operator
/// `[[t₁, 0], [t₃, t₄]]` of [`a2_q`]`(1)`.
pub fn worked_example(t1: i64, t3: i64, t4: i64) -> (ApnAlgebra, Matrix) {
    let b = a2_q(1);
    let t = Matrix::from_i64(FieldSpec::Rational, &[&[t1, 0], &[t3, t4]]);
    semidirect_ybe_solution(&b, &regular_apn_rep(&b), &t).unwrap()
}

pub fn apn_from_i64(field: FieldSpec, n: usize, succ: &[(usize, usize, usize, i64)], prec: &[(usize, usize, usize, i64)]) -> ApnAlgebra {
    ApnAlgebra::new(BinaryOp::from_i64(field, n, succ), BinaryOp::from_i64(field, n, prec)).unwrap()
}

pub fn basis(field: FieldSpec, n: usize) -> Vec<Vector> {
    (0..n).map(|i| Vector::basis(field, n, i)).collect()
}

/// The Novikov axioms evaluated by direct multiplication on basis triples.
pub fn novikov_oracle(op: &BinaryOp) -> bool {
    let m = |a: &Vector, b: &Vector| op.mul(a, b);
    let e = basis(op.field(), op.dim());
    e.iter().all(|x| {
        e.iter().all(|y| {
            e.iter().all(|z| {
                let assoc = |a: &Vector, b: &Vector| &m(&m(a, b), z) - &m(a, &m(b, z));
                assoc(x, y) == assoc(y, x) && m(&m(x, y), z) == m(&m(x, z), y)
            })
        })
    })
}

/// The five APN axioms evaluated by direct multiplication.
pub fn apn_oracle(b: &ApnAlgebra) -> bool {
    let (succ, prec, circ) = (&b.succ, &b.prec, b.circ());
    let s = |x: &Vector, y: &Vector| succ.mul(x, y);
    let p = |x: &Vector, y: &Vector| prec.mul(x, y);
    let o = |x: &Vector, y: &Vector| circ.mul(x, y);
    let e = basis(b.field(), b.dim());
    e.iter().all(|x| {
        e.iter().all(|y| {
            e.iter().all(|z| {
                let comm = &o(x, y) - &o(y, x);
                s(&comm, z) == &s(y, &s(x, z)) - &s(x, &s(y, z))
                    && p(x, &o(y, z)) == &(&p(&s(y, x), z) - &p(&p(x, y), z)) - &s(y, &p(x, z))
                    && s(&o(x, y), z) == -p(&s(x, z), y)
                    && p(&p(x, y), z) == p(&p(x, z), y)
                    && p(&comm, z) == &s(x, &o(y, z)) - &s(y, &o(x, z))
            })
        })
    })
}

/// `s₁₂∘s₁₃ + s₂₃⊙s₁₃ + s₁₂≺s₂₃` summed term by term over basis tensors.
pub fn ybe_oracle(b: &ApnAlgebra, s: &Matrix) -> Tensor3 {
    let f = b.field();
    let n = b.dim();
    let e = basis(f, n);
    let (circ, odot) = (b.circ(), b.odot());
    let mut out = Tensor3::cube(f, n);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for l in 0..n {
                    let c = &s[(i, j)] * &s[(k, l)];
                    if c.is_zero() {
                        continue;
                    }
                    let t = Tensor3::outer(&circ.mul(&e[i], &e[k]), &e[j], &e[l])
                        + Tensor3::outer(&e[k], &e[i], &odot.mul(&e[j], &e[l]))
                        + Tensor3::outer(&e[i], &b.prec.mul(&e[j], &e[k]), &e[l]);
                    out = out + t.scale(&c);
                }
            }
        }
    }
    out
}

/// Sparse random structure constants over GF(3) in dimension `n`.
pub fn random_op(smp: &mut Sampler, n: usize, density: f64) -> BinaryOp {
    BinaryOp::new(smp.tensor3(n, density)).unwrap()
}
