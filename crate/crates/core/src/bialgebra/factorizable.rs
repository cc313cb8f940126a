//! Doubles of bialgebras, factorizable solutions and their correspondence
//! with quadratic Rota-Baxter APN algebras.

use crate::algebra::ApnAlgebra;
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::forms::check_quadratic_rb;
use crate::linalg::{Matrix, Vector};
use crate::matched_pair::apn_sum_ops;
use crate::operators::check_apn_homomorphism;
use crate::report::{IdentityReport, Mode};
use crate::representation::{semidirect_apn, ApnRep};
use crate::tensor::tau2;

use super::coalgebra::{check_apn_bialgebra_mode, coboundary_delta, dualize_cobracket, ApnBialgebra, Cobracket};
use super::ybe::{check_factorizable, coregular_apn_rep, t_from_s};

/// The double D = A ⊕ A* of a bialgebra, with the canonical tensor
/// `s = Σ eᵢ⊗eᵢ*` and its coboundary cobracket.
#[derive(Clone, Debug)]
pub struct DoubleBialgebra {
    pub algebra: ApnAlgebra,
    pub s: Matrix,
    pub delta: Cobracket,
    /// Dimension of A; A occupies the first block of coordinates.
    pub dim: usize,
}

/// D carries A, the dual algebra A*, and the coregular actions of each on
/// the other. Errors if the input is not a bialgebra.
pub fn double_bialgebra(bi: &ApnBialgebra) -> Result<DoubleBialgebra> {
    let r = check_apn_bialgebra_mode(&bi.algebra, &bi.delta, Mode::FirstFailure)?;
    if !r.passed {
        return Err(Error::precondition("APN bialgebra", r));
    }
    let a = &bi.algebra;
    let astar = dualize_cobracket(&bi.delta);
    let d = apn_sum_ops(a, &astar, &coregular_apn_rep(a), &coregular_apn_rep(&astar));
    let n = a.dim();
    let mut s = Matrix::zeros(a.field(), 2 * n, 2 * n);
    for i in 0..n {
        s[(i, n + i)] = a.field().one();
    }
    let delta = coboundary_delta(&d, &s, &s)?;
    Ok(DoubleBialgebra { algebra: d, s, delta, dim: n })
}

/// The coboundary bialgebra (A, Δ_s) with Δ≻ and Δ≺ both built from s.
pub fn coboundary_bialgebra(b: &ApnAlgebra, s: &Matrix) -> Result<ApnBialgebra> {
    Ok(ApnBialgebra { algebra: b.clone(), delta: coboundary_delta(b, s, s)? })
}

fn require_factorizable(b: &ApnAlgebra, s: &Matrix) -> Result<Matrix> {
    let r = check_factorizable(b, s)?;
    if !r.passed {
        return Err(Error::precondition("factorizability", r));
    }
    t_from_s(&(s + &tau2(s))).inverse()
}

/// The unique `x = x₁ − x₂` with `x₁ = T_s T⁻¹x`, `x₂ = −T_{τ(s)} T⁻¹x`,
/// where `T = T_{s+τ(s)}`.
pub fn factorize(b: &ApnAlgebra, s: &Matrix, x: &Vector) -> Result<(Vector, Vector)> {
    let tinv = require_factorizable(b, s)?;
    if x.len() != b.dim() {
        return Err(Error::dim("vector length differs from the algebra dimension"));
    }
    let z = tinv.apply(x);
    Ok((t_from_s(s).apply(&z), -t_from_s(&tau2(s)).apply(&z)))
}

/// `φ(x, ζ) = (x + T_s ζ, x − T_{τ(s)} ζ)` from the double of (A, Δ_s) to A ⊕ A.
pub fn phi_iso(b: &ApnAlgebra, s: &Matrix) -> Result<Matrix> {
    require_factorizable(b, s)?;
    let n = b.dim();
    let id = Matrix::identity(b.field(), n);
    Ok(Matrix::block(&id, &t_from_s(s), &id, &(-t_from_s(&tau2(s)))))
}

/// A ⊕ B with componentwise products.
pub fn direct_sum_apn(a: &ApnAlgebra, b: &ApnAlgebra) -> ApnAlgebra {
    let f = a.field();
    apn_sum_ops(a, b, &ApnRep::zero(f, a.dim(), b.dim()), &ApnRep::zero(f, b.dim(), a.dim()))
}

/// φ is invertible (`Inv`) and a homomorphism from the double of (A, Δ_s)
/// onto A ⊕ A (`Hom>`, `Hom<`).
pub fn check_phi(b: &ApnAlgebra, s: &Matrix) -> Result<IdentityReport> {
    let phi = phi_iso(b, s)?;
    let double = double_bialgebra(&coboundary_bialgebra(b, s)?)?;
    let mut r = check_apn_homomorphism(&double.algebra, &direct_sum_apn(b, b), &phi)?;
    if let Some(k) = phi.nullspace().into_iter().next() {
        r.passed = false;
        r.witnesses.push(crate::report::Witness { id: "Inv".into(), indices: vec![], residual: k.into_vec() });
    }
    Ok(r)
}

fn nonzero_weight(lambda: &Scalar) -> Result<()> {
    if lambda.is_zero() {
        return Err(Error::InvalidInput("the correspondence needs a nonzero weight".into()));
    }
    Ok(())
}

/// The factorizable solution of a quadratic Rota-Baxter APN algebra of
/// weight λ ≠ 0: `T_s = P (ω♯)⁻¹`.
pub fn rb_to_factorizable(b: &ApnAlgebra, p: &Matrix, w: &Matrix, lambda: &Scalar) -> Result<Matrix> {
    nonzero_weight(lambda)?;
    let r = check_quadratic_rb(b, p, w, lambda)?;
    if !r.passed {
        return Err(Error::precondition("quadratic Rota-Baxter structure", r));
    }
    Ok(p.matmul(&w.inverse()?).transpose())
}

/// The quadratic Rota-Baxter structure of weight λ ≠ 0 of a factorizable
/// solution: `ω♯ = −λ T_{s+τ(s)}⁻¹`, `P = T_s ω♯`. Returns (P, W).
pub fn factorizable_to_rb(b: &ApnAlgebra, s: &Matrix, lambda: &Scalar) -> Result<(Matrix, Matrix)> {
    nonzero_weight(lambda)?;
    let tinv = require_factorizable(b, s)?;
    let w = tinv.scale(&-lambda);
    Ok((t_from_s(s).matmul(&w), w))
}

/// A ⋉ A* for the coregular representation, with the canonical form
/// `[[0, I], [I, 0]]` and `P̂ = P ⊕ (−Pᵀ − λI)`.
pub fn semidirect_quadratic_rb(b: &ApnAlgebra, p: &Matrix, lambda: &Scalar) -> Result<(ApnAlgebra, Matrix, Matrix)> {
    let n = b.dim();
    let f = b.field();
    if p.rows() != n || p.cols() != n {
        return Err(Error::dim(format!("operator must be {n}x{n}")));
    }
    let hat = semidirect_apn(b, &coregular_apn_rep(b))?;
    let id = Matrix::identity(f, n);
    let z = Matrix::zeros(f, n, n);
    let p_hat = Matrix::direct_sum(p, &(-p.transpose() - id.scale(lambda)));
    Ok((hat, p_hat, Matrix::block(&z, &id, &id, &z)))
}

/// `s = Σᵢ eᵢ*⊗P(eᵢ) − (P+λI)(eᵢ)⊗eᵢ*` in (A ⋉ A*)⊗(A ⋉ A*).
pub fn semidirect_rb_tensor(p: &Matrix, lambda: &Scalar) -> Matrix {
    let n = p.rows();
    let f = p.field();
    let shifted = p + &Matrix::identity(f, n).scale(lambda);
    let mut s = Matrix::zeros(f, 2 * n, 2 * n);
    for i in 0..n {
        for k in 0..n {
            s[(n + i, k)] = p[(k, i)].clone();
            s[(k, n + i)] = -&shifted[(k, i)];
        }
    }
    s
}
