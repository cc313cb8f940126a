//! Bilinear forms: quasi-Frobenius Novikov algebras, quadratic APN algebras,
//! the compatible APN structure a quasi-Frobenius form determines, double
//! constructions, and Rota-Baxter operators compatible with a form.
//!
//! A form ω is stored as its Gram matrix `W`, `ω(x, y) = xᵀ W y`.

use crate::algebra::{associated_novikov, ApnAlgebra, BinaryOp, NovikovAlgebra};
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::linalg::{Matrix, Vector};
use crate::matched_pair::{check_novikov_matched_pair_mode, novikov_sum_ops, NovikovMatchedPair};
use crate::operators::{check_rota_baxter_apn, check_rota_baxter_novikov};
use crate::report::{Collector, IdentityReport, Mode};
use crate::representation::{neg_family, NovikovRep};

fn form(w: &Matrix, x: &Vector, y: &Vector) -> Scalar {
    x.dot(&w.apply(y))
}

fn check_square(w: &Matrix, n: usize, what: &str) -> Result<()> {
    if w.rows() != n || w.cols() != n {
        return Err(Error::dim(format!("{what}: expected a {n}x{n} matrix, got {}x{}", w.rows(), w.cols())));
    }
    Ok(())
}

/// `Sym` (W = Wᵀ) and `NonDeg` (the witness is a kernel vector).
fn symmetric_nondegenerate(w: &Matrix, col: &mut Collector) {
    let n = w.rows();
    for i in 0..n {
        for j in i + 1..n {
            col.record("Sym", &[i, j], vec![&w[(i, j)] - &w[(j, i)]]);
        }
    }
    if let Some(k) = w.nullspace().into_iter().next() {
        col.record("NonDeg", &[], k.into_vec());
    }
}

/// Symmetric, nondegenerate, and
/// `ω(x∘y, z) − ω(x∘z + z∘x, y) + ω(z∘y, x) = 0` (`Qn`).
pub fn check_quasi_frobenius(n: &NovikovAlgebra, w: &Matrix) -> Result<IdentityReport> {
    check_quasi_frobenius_mode(n, w, Mode::Full)
}

pub(crate) fn check_quasi_frobenius_mode(n: &NovikovAlgebra, w: &Matrix, mode: Mode) -> Result<IdentityReport> {
    let d = n.dim();
    check_square(w, d, "form")?;
    let mut col = Collector::new(mode);
    symmetric_nondegenerate(w, &mut col);
    let e: Vec<Vector> = (0..d).map(|i| Vector::basis(n.field(), d, i)).collect();
    let m = |i: usize, j: usize| n.circ.mul_basis(i, j);
    for x in 0..d {
        for y in 0..d {
            for z in 0..d {
                let star = m(x, z) + m(z, x);
                let r = &(&form(w, &m(x, y), &e[z]) - &form(w, &star, &e[y])) + &form(w, &m(z, y), &e[x]);
                col.record("Qn", &[x, y, z], vec![r]);
            }
        }
    }
    Ok(col.finish())
}

/// Symmetric, nondegenerate, `ω(x≺y, z) = −ω(x, z∘y)` (`C2a`) and
/// `ω(x≻y, z) = ω(x⋆z, y)` (`C2b`).
pub fn check_quadratic_apn(b: &ApnAlgebra, w: &Matrix) -> Result<IdentityReport> {
    let d = b.dim();
    check_square(w, d, "form")?;
    let mut col = Collector::new(Mode::Full);
    symmetric_nondegenerate(w, &mut col);
    let circ = b.circ();
    let e: Vec<Vector> = (0..d).map(|i| Vector::basis(b.field(), d, i)).collect();
    for x in 0..d {
        for y in 0..d {
            for z in 0..d {
                let a = &form(w, &b.prec.mul_basis(x, y), &e[z]) + &form(w, &e[x], &circ.mul_basis(z, y));
                col.record("C2a", &[x, y, z], vec![a]);
                let star = circ.mul_basis(x, z) + circ.mul_basis(z, x);
                let c = &form(w, &b.succ.mul_basis(x, y), &e[z]) - &form(w, &star, &e[y]);
                col.record("C2b", &[x, y, z], vec![c]);
            }
        }
    }
    Ok(col.finish())
}

/// The unique APN structure with ∘ = ≻ + ≺ for which ω is quadratic:
/// `x≻y = W⁻¹ L⋆(x)ᵀ W y`, `x≺y = −W⁻¹ R∘(y)ᵀ W x`.
pub fn apn_from_quasi_frobenius(n: &NovikovAlgebra, w: &Matrix) -> Result<ApnAlgebra> {
    let r = check_quasi_frobenius_mode(n, w, Mode::FirstFailure)?;
    if !r.passed {
        return Err(Error::precondition("quasi-Frobenius form", r));
    }
    let winv = w.inverse()?;
    let d = n.dim();
    let f = n.field();
    let lefts = n.circ.lefts();
    let rights = n.circ.rights();
    let lstar: Vec<Matrix> = lefts.iter().zip(&rights).map(|(l, r)| l + r).collect();
    let succ = BinaryOp::from_fn(f, d, |i, j| winv.matmul(&lstar[i].transpose()).matmul(w).column(j));
    let prec = BinaryOp::from_fn(f, d, |i, j| -winv.matmul(&rights[j].transpose()).matmul(w).column(i));
    ApnAlgebra::new(succ, prec)
}

/// ω♯: A → A*, `⟨ω♯(x), y⟩ = ω(x, y)`; for a symmetric form this is W itself.
pub fn omega_sharp(w: &Matrix) -> Result<Matrix> {
    if !w.is_symmetric() {
        return Err(Error::InvalidInput("form is not symmetric".into()));
    }
    Ok(w.clone())
}

/// The 2-tensor `s_ω` with `T_{s_ω} = (ω♯)⁻¹`. Errors on a degenerate form.
pub fn s_omega(w: &Matrix) -> Result<Matrix> {
    // T_s has matrix sᵀ, so s = ((ω♯)⁻¹)ᵀ.
    Ok(omega_sharp(w)?.inverse()?.transpose())
}

/// Novikov matched pair (A, A*, −L⊙*, R≺*, −L⊙*, R≺*) built from APN
/// structures on a space and on its dual.
pub fn dual_novikov_pair(a: &ApnAlgebra, astar: &ApnAlgebra) -> Result<NovikovMatchedPair> {
    if a.dim() != astar.dim() || a.field() != astar.field() {
        return Err(Error::dim("an algebra and its dual must have the same dimension and field"));
    }
    let act = |b: &ApnAlgebra| {
        let lodot: Vec<Matrix> = b.succ.lefts().iter().zip(b.prec.rights()).map(|(l, r)| l + &r).collect();
        NovikovRep {
            dim: b.dim(),
            l: lodot.iter().map(Matrix::transpose).collect(),
            r: neg_family(&b.prec.rights().iter().map(Matrix::transpose).collect::<Vec<_>>()),
        }
    };
    Ok(NovikovMatchedPair { a: associated_novikov(a), b: associated_novikov(astar), rho_a: act(a), rho_b: act(astar) })
}

/// A ⊕ A* with its natural symmetric form `ω(x+ζ, y+η) = ⟨ζ, y⟩ + ⟨η, x⟩`.
#[derive(Clone, Debug)]
pub struct DoubleConstruction {
    pub algebra: NovikovAlgebra,
    pub omega: Matrix,
    /// Dimension of A; A occupies the first block of coordinates.
    pub dim: usize,
}

/// Double construction of a quasi-Frobenius Novikov algebra. Errors if the
/// pair of dual actions is not a matched pair.
pub fn build_double_construction(a: &ApnAlgebra, astar: &ApnAlgebra) -> Result<DoubleConstruction> {
    let mp = dual_novikov_pair(a, astar)?;
    let r = check_novikov_matched_pair_mode(&mp, Mode::FirstFailure);
    if !r.passed {
        return Err(Error::precondition("Novikov matched pair", r));
    }
    let n = a.dim();
    let f = a.field();
    let z = Matrix::zeros(f, n, n);
    let i = Matrix::identity(f, n);
    Ok(DoubleConstruction {
        algebra: novikov_sum_ops(&mp.a, &mp.b, &mp.rho_a, &mp.rho_b),
        omega: Matrix::block(&z, &i, &i, &z),
        dim: n,
    })
}

/// `ω(Px, y) + ω(x, Py) + λω(x, y) = 0`, i.e. `PᵀW + WP + λW = 0`.
fn check_form_compatible(p: &Matrix, w: &Matrix, lambda: &Scalar, tag: &str, col: &mut Collector) {
    let r = p.transpose().matmul(w) + w.matmul(p) + w.scale(lambda);
    for i in 0..r.rows() {
        for j in 0..r.cols() {
            col.record(tag, &[i, j], vec![r[(i, j)].clone()]);
        }
    }
}

/// Quadratic Rota-Baxter APN algebra: P is Rota-Baxter of weight λ, ω is
/// quadratic, and `Fs` holds.
pub fn check_quadratic_rb(b: &ApnAlgebra, p: &Matrix, w: &Matrix, lambda: &Scalar) -> Result<IdentityReport> {
    let mut col = Collector::new(Mode::Full);
    col.absorb(check_rota_baxter_apn(b, p, lambda)?);
    col.absorb(check_quadratic_apn(b, w)?);
    check_form_compatible(p, w, lambda, "Fs", &mut col);
    Ok(col.finish())
}

/// Rota-Baxter quasi-Frobenius Novikov algebra: P is Rota-Baxter of weight λ
/// on (A, ∘), ω is quasi-Frobenius, and `Fs1` holds.
pub fn check_symmetric_rb_qf(n: &NovikovAlgebra, p: &Matrix, w: &Matrix, lambda: &Scalar) -> Result<IdentityReport> {
    let mut col = Collector::new(Mode::Full);
    col.absorb(check_rota_baxter_novikov(n, p, lambda)?);
    col.absorb(check_quasi_frobenius(n, w)?);
    check_form_compatible(p, w, lambda, "Fs1", &mut col);
    Ok(col.finish())
}
