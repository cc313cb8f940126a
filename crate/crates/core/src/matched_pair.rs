//! Matched pairs of Novikov and APN algebras and their sum algebras.
//!
//! The compatibility conditions are data tables; the second half of the APN
//! list (`M0.13`..`M0.24`) is the first half with the roles of the two
//! algebras exchanged.

use std::sync::LazyLock;

use crate::field::Scalar;
use crate::algebra::{check_apn_mode, check_novikov_mode, ApnAlgebra, BinaryOp, NovikovAlgebra};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Vector};
use crate::multilinear::{ActKind, Context, Side, Signature, Table};
use crate::report::{Collector, IdentityReport, Mode};
use crate::representation::{add_families, check_apn_rep_mode, check_novikov_rep_mode, ApnRep, NovikovRep};

/// `rho_a`: A acting on B; `rho_b`: B acting on A.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NovikovMatchedPair {
    pub a: NovikovAlgebra,
    pub b: NovikovAlgebra,
    pub rho_a: NovikovRep,
    pub rho_b: NovikovRep,
}

/// `rho1`: A₁ acting on A₂; `rho2`: A₂ acting on A₁.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ApnMatchedPair {
    pub a1: ApnAlgebra,
    pub a2: ApnAlgebra,
    pub rho1: ApnRep,
    pub rho2: ApnRep,
}

impl NovikovMatchedPair {
    pub fn validate(&self) -> Result<()> {
        if self.a.field() != self.b.field() {
            return Err(Error::FieldMismatch("matched pair over two fields".into()));
        }
        if self.rho_a.dim != self.b.dim() || self.rho_b.dim != self.a.dim() {
            return Err(Error::dim("matched pair actions do not act on the partner algebra"));
        }
        self.rho_a.validate(self.a.dim(), self.a.field())?;
        self.rho_b.validate(self.b.dim(), self.b.field())
    }
}

impl ApnMatchedPair {
    pub fn validate(&self) -> Result<()> {
        if self.a1.field() != self.a2.field() {
            return Err(Error::FieldMismatch("matched pair over two fields".into()));
        }
        if self.rho1.dim != self.a2.dim() || self.rho2.dim != self.a1.dim() {
            return Err(Error::dim("matched pair actions do not act on the partner algebra"));
        }
        self.rho1.validate(self.a1.dim(), self.a1.field())?;
        self.rho2.validate(self.a2.dim(), self.a2.field())
    }
}

static NOVIKOV_MP: LazyLock<Table> = LazyLock::new(|| {
    Table::compile(
        Signature::new().vars("xy", 1).vars("ab", 2),
        &[
            ("Nm1", "l2(a, x o1 y) = - l2(l1(x, a) - r1(x, a), y) + (l2(a, x) - r2(a, x)) o1 y + r2(r1(y, a), x) + x o1 l2(a, y)"),
            ("Nm2", "r2(a, x o1 y - y o1 x) = r2(l1(y, a), x) - r2(l1(x, a), y) + x o1 r2(a, y) - y o1 r2(a, x)"),
            ("Nm3", "l1(x, a o2 b) = - l1(l2(a, x) - r2(a, x), b) + (l1(x, a) - r1(x, a)) o2 b + r1(r2(b, x), a) + a o2 l1(x, b)"),
            ("Nm4", "r1(x, a o2 b - b o2 a) = r1(l2(b, x), a) - r1(l2(a, x), b) + a o2 r1(x, b) - b o2 r1(x, a)"),
            ("Nm5", "l2(a, x) o1 y + l2(r1(x, a), y) = l2(a, y) o1 x + l2(r1(y, a), x)"),
            ("Nm6", "r2(a, x) o1 y + l2(l1(x, a), y) = r2(a, x o1 y)"),
            ("Nm7", "l1(r2(a, x), b) + l1(x, a) o2 b = l1(r2(b, x), a) + l1(x, b) o2 a"),
            ("Nm8", "l1(l2(a, x), b) + r1(x, a) o2 b = r1(x, a o2 b)"),
        ],
    )
    .expect("Novikov matched pair table")
});

/// Compatibility conditions for a matched pair of APN algebras.
pub const APN_MATCHED_PAIR_CONDITIONS: [(&str, &str); 24] = [
    ("M0.1", "r>2(a, x o1 y - y o1 x) = y >1 r>2(a, x) - x >1 r>2(a, y) + r>2(l<1(x, a), y) - r>2(l<1(y, a), x)"),
    ("M0.2", "(ro2(a, x) - lo2(a, x)) >1 y + l>2(lo1(x, a) - ro1(x, a), y) = l>2(a, x >1 y) - x >1 l>2(a, y) - r>2(r>1(y, a), x)"),
    ("M0.3", "r>2(a, x o1 y) = - r>2(a, x) <1 y - l<2(l>1(x, a), y)"),
    ("M0.4", "ro2(a, x) >1 y + l>2(l>1(x, a), y) = - r<2(a, x >1 y)"),
    ("M0.5", "lo2(a, x) >1 y + l>2(ro1(x, a), y) = - l>2(a, y) <1 x - l<2(r>1(y, a), x)"),
    ("M0.6", "r<2(a, x <1 y) = r<2(a, x) <1 y + l<2(l<1(x, a), y)"),
    ("M0.7", "l<2(a, x) <1 y + l<2(r<1(x, a), y) = l<2(a, y) <1 x + l<2(r<1(y, a), x)"),
    ("M0.8", "r<2(a, x o1 y - y o1 x) = x >1 ro2(a, y) - y >1 ro2(a, x) + r>2(lo1(y, a), x) - r>2(lo1(x, a), y)"),
    ("M0.9", "(ro2(a, x) - lo2(a, x)) <1 y - l<2(lo1(x, a) - ro1(x, a), y) = x >1 lo2(a, y) + r>2(ro1(y, a), x) - l>2(a, x o1 y)"),
    ("M0.10", "x <1 ro2(a, y) + r<2(lo1(y, a), x) = r<2(a, y >1 x - x >1 y) - y >1 r<2(a, x) - r>2(l<1(x, a), y)"),
    ("M0.11", "x <1 lo2(a, y) + r<2(ro1(y, a), x) = (l>2(a, x) - r<2(a, x)) <1 y + l<2(r>1(x, a) - l<1(x, a), y) - l>2(a, x <1 y)"),
    ("M0.12", "l<2(a, x o1 y) = (r>2(a, x) - l<2(a, x)) <1 y + l<2(l>1(x, a) - r<1(x, a), y) - x >1 l<2(a, y) - r>2(r<1(y, a), x)"),
    ("M0.13", "r>1(x, a o2 b - b o2 a) = b >2 r>1(x, a) - a >2 r>1(x, b) + r>1(l<2(a, x), b) - r>1(l<2(b, x), a)"),
    ("M0.14", "(ro1(x, a) - lo1(x, a)) >2 b + l>1(lo2(a, x) - ro2(a, x), b) = l>1(x, a >2 b) - a >2 l>1(x, b) - r>1(r>2(b, x), a)"),
    ("M0.15", "r>1(x, a o2 b) = - r>1(x, a) <2 b - l<1(l>2(a, x), b)"),
    ("M0.16", "ro1(x, a) >2 b + l>1(l>2(a, x), b) = - r<1(x, a >2 b)"),
    ("M0.17", "lo1(x, a) >2 b + l>1(ro2(a, x), b) = - l>1(x, b) <2 a - l<1(r>2(b, x), a)"),
    ("M0.18", "r<1(x, a <2 b) = r<1(x, a) <2 b + l<1(l<2(a, x), b)"),
    ("M0.19", "l<1(x, a) <2 b + l<1(r<2(a, x), b) = l<1(x, b) <2 a + l<1(r<2(b, x), a)"),
    ("M0.20", "r<1(x, a o2 b - b o2 a) = a >2 ro1(x, b) - b >2 ro1(x, a) + r>1(lo2(b, x), a) - r>1(lo2(a, x), b)"),
    ("M0.21", "(ro1(x, a) - lo1(x, a)) <2 b - l<1(lo2(a, x) - ro2(a, x), b) = a >2 lo1(x, b) + r>1(ro2(b, x), a) - l>1(x, a o2 b)"),
    ("M0.22", "a <2 ro1(x, b) + r<1(lo2(b, x), a) = r<1(x, b >2 a - a >2 b) - b >2 r<1(x, a) - r>1(l<2(a, x), b)"),
    ("M0.23", "a <2 lo1(x, b) + r<1(ro2(b, x), a) = (l>1(x, a) - r<1(x, a)) <2 b + l<1(r>2(a, x) - l<2(a, x), b) - l>1(x, a <2 b)"),
    ("M0.24", "l<1(x, a o2 b) = (r>1(x, a) - l<1(x, a)) <2 b + l<1(l>2(a, x) - r<2(a, x), b) - a >2 l<1(x, b) - r>1(r<2(b, x), a)"),
];

static APN_MP: LazyLock<Table> = LazyLock::new(|| {
    Table::compile(Signature::new().vars("xy", 1).vars("ab", 2), &APN_MATCHED_PAIR_CONDITIONS).expect("APN matched pair table")
});

pub(crate) fn apn_mp_context(mp: &ApnMatchedPair) -> Context<'_> {
    Context::new(mp.a1.field())
        .apn(1, &mp.a1.succ, &mp.a1.prec)
        .apn(2, &mp.a2.succ, &mp.a2.prec)
        .action(Side::Left, ActKind::Succ, 1, &mp.rho1.l_succ)
        .action(Side::Right, ActKind::Succ, 1, &mp.rho1.r_succ)
        .action(Side::Left, ActKind::Prec, 1, &mp.rho1.l_prec)
        .action(Side::Right, ActKind::Prec, 1, &mp.rho1.r_prec)
        .action(Side::Left, ActKind::Succ, 2, &mp.rho2.l_succ)
        .action(Side::Right, ActKind::Succ, 2, &mp.rho2.r_succ)
        .action(Side::Left, ActKind::Prec, 2, &mp.rho2.l_prec)
        .action(Side::Right, ActKind::Prec, 2, &mp.rho2.r_prec)
}

/// Both algebras (`alg1:`, `alg2:`), both representations (`rep1:`,
/// `rep2:`) and `Nm1`..`Nm8`.
pub fn check_novikov_matched_pair(mp: &NovikovMatchedPair) -> Result<IdentityReport> {
    mp.validate()?;
    Ok(check_novikov_matched_pair_mode(mp, Mode::Full))
}

pub(crate) fn check_novikov_matched_pair_mode(mp: &NovikovMatchedPair, mode: Mode) -> IdentityReport {
    let mut col = Collector::new(mode);
    col.absorb(check_novikov_mode(&mp.a, mode).tagged("alg1:"));
    col.absorb(check_novikov_mode(&mp.b, mode).tagged("alg2:"));
    col.absorb(check_novikov_rep_mode(&mp.a, &mp.rho_a, mode).tagged("rep1:"));
    col.absorb(check_novikov_rep_mode(&mp.b, &mp.rho_b, mode).tagged("rep2:"));
    if col.done() {
        return col.finish();
    }
    let ctx = Context::new(mp.a.field())
        .novikov(1, &mp.a.circ)
        .novikov(2, &mp.b.circ)
        .action(Side::Left, ActKind::Plain, 1, &mp.rho_a.l)
        .action(Side::Right, ActKind::Plain, 1, &mp.rho_a.r)
        .action(Side::Left, ActKind::Plain, 2, &mp.rho_b.l)
        .action(Side::Right, ActKind::Plain, 2, &mp.rho_b.r);
    NOVIKOV_MP.check(&ctx, &mut col);
    col.finish()
}

/// Both algebras (`alg1:`, `alg2:`), both representations (`rep1:`,
/// `rep2:`) and `M0.1`..`M0.24`.
pub fn check_apn_matched_pair(mp: &ApnMatchedPair) -> Result<IdentityReport> {
    mp.validate()?;
    Ok(check_apn_matched_pair_mode(mp, Mode::Full))
}

pub(crate) fn check_apn_matched_pair_mode(mp: &ApnMatchedPair, mode: Mode) -> IdentityReport {
    let mut col = Collector::new(mode);
    col.absorb(check_apn_mode(&mp.a1, mode).tagged("alg1:"));
    col.absorb(check_apn_mode(&mp.a2, mode).tagged("alg2:"));
    col.absorb(check_apn_rep_mode(&mp.a1, &mp.rho1, mode).tagged("rep1:"));
    col.absorb(check_apn_rep_mode(&mp.a2, &mp.rho2, mode).tagged("rep2:"));
    if col.done() {
        return col.finish();
    }
    APN_MP.check(&apn_mp_context(mp), &mut col);
    col.finish()
}

/// Products on A ⊕ B (A's basis first) from a product on each side and the
/// two action families: `(x+a)(y+b) = xy + l_B(a)y + r_B(b)x + ab + l_A(x)b + r_A(y)a`.
fn sum_op(op1: &BinaryOp, op2: &BinaryOp, l1: &[Matrix], r1: &[Matrix], l2: &[Matrix], r2: &[Matrix]) -> BinaryOp {
    let f = op1.field();
    let (n, m) = (op1.dim(), op2.dim());
    BinaryOp::from_fn(f, n + m, |i, j| match (i < n, j < n) {
        (true, true) => op1.mul_basis(i, j).concat(&Vector::zeros(f, m)),
        (true, false) => {
            // x_i · b_j = r_B(b_j) x_i + l_A(x_i) b_j
            r2[j - n].column(i).concat(&l1[i].column(j - n))
        }
        (false, true) => {
            // a_i · y_j = l_B(a_i) y_j + r_A(y_j) a_i
            l2[i - n].column(j).concat(&r1[j].column(i - n))
        }
        (false, false) => Vector::zeros(f, n).concat(&op2.mul_basis(i - n, j - n)),
    })
}

pub(crate) fn novikov_sum_ops(a: &NovikovAlgebra, b: &NovikovAlgebra, rho_a: &NovikovRep, rho_b: &NovikovRep) -> NovikovAlgebra {
    NovikovAlgebra::new(sum_op(&a.circ, &b.circ, &rho_a.l, &rho_a.r, &rho_b.l, &rho_b.r))
}

pub(crate) fn apn_sum_ops(a1: &ApnAlgebra, a2: &ApnAlgebra, rho1: &ApnRep, rho2: &ApnRep) -> ApnAlgebra {
    ApnAlgebra {
        succ: sum_op(&a1.succ, &a2.succ, &rho1.l_succ, &rho1.r_succ, &rho2.l_succ, &rho2.r_succ),
        prec: sum_op(&a1.prec, &a2.prec, &rho1.l_prec, &rho1.r_prec, &rho2.l_prec, &rho2.r_prec),
    }
}

/// The sum algebra A ⊕ B; no conditions are checked.
pub fn build_novikov_sum(mp: &NovikovMatchedPair) -> Result<NovikovAlgebra> {
    mp.validate()?;
    Ok(novikov_sum_ops(&mp.a, &mp.b, &mp.rho_a, &mp.rho_b))
}

/// The sum algebra A₁ ⋈ A₂; no conditions are checked.
pub fn build_apn_sum(mp: &ApnMatchedPair) -> Result<ApnAlgebra> {
    mp.validate()?;
    Ok(apn_sum_ops(&mp.a1, &mp.a2, &mp.rho1, &mp.rho2))
}

/// Sum algebra route: the Novikov axioms on A ⊕ B.
pub fn check_novikov_sum(mp: &NovikovMatchedPair) -> Result<IdentityReport> {
    Ok(check_novikov_mode(&build_novikov_sum(mp)?, Mode::Full))
}

/// Sum algebra route: the APN axioms on A₁ ⋈ A₂.
pub fn check_apn_sum(mp: &ApnMatchedPair) -> Result<IdentityReport> {
    Ok(check_apn_mode(&build_apn_sum(mp)?, Mode::Full))
}

/// The Novikov matched pair of the associated Novikov algebras with summed
/// actions l = l≻ + l≺, r = r≻ + r≺.
pub fn summed_novikov_pair(mp: &ApnMatchedPair) -> NovikovMatchedPair {
    NovikovMatchedPair {
        a: NovikovAlgebra::new(mp.a1.circ()),
        b: NovikovAlgebra::new(mp.a2.circ()),
        rho_a: NovikovRep { dim: mp.rho1.dim, l: mp.rho1.l_circ(), r: mp.rho1.r_circ() },
        rho_b: NovikovRep { dim: mp.rho2.dim, l: add_families(&mp.rho2.l_succ, &mp.rho2.l_prec), r: mp.rho2.r_circ() },
    }
}

fn split_op(op: &BinaryOp, n1: usize) -> Result<(BinaryOp, BinaryOp, [Vec<Matrix>; 4])> {
    let f = op.field();
    let n = op.dim();
    let n2 = n - n1;
    let c = |i: usize, j: usize, k: usize| op.coef(i, j, k).clone();
    for i in 0..n {
        for j in 0..n {
            let same = (i < n1) == (j < n1);
            for k in 0..n {
                if same && (k < n1) != (i < n1) && !op.coef(i, j, k).is_zero() {
                    return Err(Error::InvalidInput(format!("coordinate block is not a subalgebra: e{i}e{j} has an e{k} component")));
                }
            }
        }
    }
    let a1 = BinaryOp::from_fn(f, n1, |i, j| Vector::from_vec(f, (0..n1).map(|k| c(i, j, k)).collect()));
    let a2 = BinaryOp::from_fn(f, n2, |i, j| Vector::from_vec(f, (n1..n).map(|k| c(i + n1, j + n1, k)).collect()));
    let fam = |rows: usize, cols: usize, count: usize, g: &dyn Fn(usize, usize, usize) -> Scalar| -> Vec<Matrix> {
        (0..count)
            .map(|t| Matrix::from_rows(f, (0..rows).map(|r| (0..cols).map(|q| g(t, r, q)).collect()).collect()).expect("rectangular"))
            .collect()
    };
    // x_i b_j = r2(b_j) x_i + l1(x_i) b_j ; b_j x_i = l2(b_j) x_i + r1(x_i) b_j
    let l1 = fam(n2, n2, n1, &|i, r, q| c(i, q + n1, r + n1));
    let r1 = fam(n2, n2, n1, &|i, r, q| c(q + n1, i, r + n1));
    let l2 = fam(n1, n1, n2, &|j, r, q| c(j + n1, q, r));
    let r2 = fam(n1, n1, n2, &|j, r, q| c(q, j + n1, r));
    Ok((a1, a2, [l1, r1, l2, r2]))
}

/// Split A₁ ⊕ A₂ = span(e₀..e_{n1−1}) ⊕ span(e_{n1}..) into subalgebras and
/// mutual actions. Inverse of [`build_apn_sum`]; errors unless both
/// coordinate blocks are closed under ≻ and ≺.
pub fn split_apn(c: &ApnAlgebra, n1: usize) -> Result<ApnMatchedPair> {
    if n1 == 0 || n1 >= c.dim() {
        return Err(Error::dim(format!("cannot split dimension {} at {n1}", c.dim())));
    }
    let (s1, s2, [ls1, rs1, ls2, rs2]) = split_op(&c.succ, n1)?;
    let (p1, p2, [lp1, rp1, lp2, rp2]) = split_op(&c.prec, n1)?;
    Ok(ApnMatchedPair {
        a1: ApnAlgebra { succ: s1, prec: p1 },
        a2: ApnAlgebra { succ: s2, prec: p2 },
        rho1: ApnRep { dim: c.dim() - n1, l_succ: ls1, r_succ: rs1, l_prec: lp1, r_prec: rp1 },
        rho2: ApnRep { dim: n1, l_succ: ls2, r_succ: rs2, l_prec: lp2, r_prec: rp2 },
    })
}

/// Novikov analogue of [`split_apn`].
pub fn split_novikov(c: &NovikovAlgebra, n1: usize) -> Result<NovikovMatchedPair> {
    if n1 == 0 || n1 >= c.dim() {
        return Err(Error::dim(format!("cannot split dimension {} at {n1}", c.dim())));
    }
    let (a, b, [l1, r1, l2, r2]) = split_op(&c.circ, n1)?;
    Ok(NovikovMatchedPair {
        a: NovikovAlgebra::new(a),
        b: NovikovAlgebra::new(b),
        rho_a: NovikovRep { dim: c.dim() - n1, l: l1, r: r1 },
        rho_b: NovikovRep { dim: n1, l: l2, r: r2 },
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tables_compile() {
        assert_eq!(NOVIKOV_MP.tags().len(), 8);
        assert_eq!(APN_MP.tags().len(), 24);
    }
}
