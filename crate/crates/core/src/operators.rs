//! Linear operators between algebras and representations: anti-O-operators
//! on Novikov algebras, O-operators and Rota-Baxter operators on APN
//! algebras, and relative Rota-Baxter operators on A-APN algebras.
//!
//! A map `T: V → A` is stored as an `dim A × dim V` matrix acting on columns.

use std::sync::LazyLock;

use crate::algebra::{check_apn_mode, check_novikov_mode, ApnAlgebra, BinaryOp, NovikovAlgebra};
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::linalg::{Matrix, Vector};
use crate::matched_pair::apn_sum_ops;
use crate::multilinear::{ActKind, Context, Side, Signature, Table};
use crate::report::{Collector, IdentityReport, Mode};
use crate::representation::{
    check_apn_rep_mode, check_novikov_rep_mode, regular_apn_rep, regular_novikov_rep, ApnRep, NovikovRep,
};

fn check_map_shape(t: &Matrix, rows: usize, cols: usize, what: &str) -> Result<()> {
    if t.rows() != rows || t.cols() != cols {
        return Err(Error::dim(format!("{what}: expected a {rows}x{cols} matrix, got {}x{}", t.rows(), t.cols())));
    }
    Ok(())
}

fn novikov_rep_context<'a>(n: &'a NovikovAlgebra, rho: &'a NovikovRep, t: &'a Matrix) -> Context<'a> {
    Context::new(n.field())
        .novikov(1, &n.circ)
        .plain(2, rho.dim)
        .action(Side::Left, ActKind::Plain, 1, &rho.l)
        .action(Side::Right, ActKind::Plain, 1, &rho.r)
        .map('T', t)
}

fn apn_rep_context<'a>(b: &'a ApnAlgebra, rho: &'a ApnRep, t: &'a Matrix) -> Context<'a> {
    crate::representation::apn_rep_context(b, rho).map('T', t)
}

fn run(table: &Table, ctx: &Context<'_>, mode: Mode) -> IdentityReport {
    let mut col = Collector::new(mode);
    table.check(ctx, &mut col);
    col.finish()
}

// ---------------------------------------------------------------------------
// Anti-O-operators on Novikov algebras.

static ANTI_O: LazyLock<Table> = LazyLock::new(|| {
    Table::compile(
        Signature::new().vars("uv", 2).map('T', 2, 1),
        &[("Ao10", "T(u) o1 T(v) = - T(l1(T(u), v) + r1(T(v), u))")],
    )
    .expect("anti-O table")
});

static STRONG_ANTI_O: LazyLock<Table> = LazyLock::new(|| {
    Table::compile(
        Signature::new().vars("uvw", 2).map('T', 2, 1),
        &[("Ao1", "l1(T(u) o1 T(v) - T(v) o1 T(u), w) + r1(T(u) o1 T(w), v) - r1(T(v) o1 T(w), u) = 0")],
    )
    .expect("strong anti-O table")
});

/// Identities satisfied by the structure an anti-O-operator induces on V.
static INDUCED: LazyLock<Table> = LazyLock::new(|| {
    Table::compile(
        Signature::new().vars("uvw", 1),
        &[
            ("Ao3", "(v o1 u - u o1 v) >1 w = u >1 (v >1 w) - v >1 (u >1 w)"),
            ("Ao4", "(u >1 w) <1 v - u >1 (w <1 v) = w <1 (u o1 v) + (w <1 u) <1 v"),
            ("Ao5a", "(u o1 v) >1 w = - (u >1 w) <1 v"),
            ("Ao5b", "(w <1 v) <1 u = (w <1 u) <1 v"),
        ],
    )
    .expect("induced structure table")
});

/// Together with the induced identities this is equivalent to the APN axioms,
/// and it holds exactly when the operator is strong.
static INDUCED_STRONG: LazyLock<Table> = LazyLock::new(|| {
    Table::compile(
        Signature::new().vars("uvw", 1),
        &[("Ao6", "(u o1 v - v o1 u) <1 w = u >1 (v o1 w) - v >1 (u o1 w)")],
    )
    .expect("induced strong table")
});

fn validate_novikov_op(n: &NovikovAlgebra, rho: &NovikovRep, t: &Matrix) -> Result<()> {
    rho.validate(n.dim(), n.field())?;
    check_map_shape(t, n.dim(), rho.dim, "operator V → A")
}

/// `T(u)∘T(v) = −T(l(Tu)v + r(Tv)u)`.
pub fn check_anti_o_operator(n: &NovikovAlgebra, rho: &NovikovRep, t: &Matrix) -> Result<IdentityReport> {
    validate_novikov_op(n, rho, t)?;
    Ok(run(&ANTI_O, &novikov_rep_context(n, rho, t), Mode::Full))
}

/// Anti-O-operator plus the strong condition `Ao1`.
pub fn check_strong_anti_o_operator(n: &NovikovAlgebra, rho: &NovikovRep, t: &Matrix) -> Result<IdentityReport> {
    validate_novikov_op(n, rho, t)?;
    let ctx = novikov_rep_context(n, rho, t);
    Ok(run(&ANTI_O, &ctx, Mode::Full).merge(run(&STRONG_ANTI_O, &ctx, Mode::Full)))
}

/// Anti-Rota-Baxter operator: anti-O-operator for the regular representation.
pub fn check_anti_rota_baxter(n: &NovikovAlgebra, t: &Matrix) -> Result<IdentityReport> {
    check_anti_o_operator(n, &regular_novikov_rep(n), t)
}

pub fn check_strong_anti_rota_baxter(n: &NovikovAlgebra, t: &Matrix) -> Result<IdentityReport> {
    check_strong_anti_o_operator(n, &regular_novikov_rep(n), t)
}

/// The structure induced on V by an anti-O-operator.
#[derive(Clone, Debug)]
pub struct InducedApn {
    /// `u≻v = −l(Tu)v`, `u≺v = −r(Tv)u`.
    pub algebra: ApnAlgebra,
    /// Report of the strong condition `Ao1`; the induced structure is APN
    /// exactly when it passes.
    pub strong: IdentityReport,
}

/// Build the induced structure on V. Requires T to be an anti-O-operator.
pub fn induced_apn_from_anti_o(n: &NovikovAlgebra, rho: &NovikovRep, t: &Matrix) -> Result<InducedApn> {
    let base = check_anti_o_operator(n, rho, t)?;
    if !base.passed {
        return Err(Error::precondition("anti-O-operator condition", base));
    }
    let field = n.field();
    let m = rho.dim;
    let tu: Vec<Vector> = (0..m).map(|i| t.column(i)).collect();
    let act = |fam: &[Matrix], x: &Vector, v: &Vector| crate::representation::family_at(fam, x, m, m).apply(v);
    let succ = BinaryOp::from_fn(field, m, |i, j| -act(&rho.l, &tu[i], &Vector::basis(field, m, j)));
    let prec = BinaryOp::from_fn(field, m, |i, j| -act(&rho.r, &tu[j], &Vector::basis(field, m, i)));
    let strong = run(&STRONG_ANTI_O, &novikov_rep_context(n, rho, t), Mode::Full);
    Ok(InducedApn { algebra: ApnAlgebra { succ, prec }, strong })
}

/// The partial identities `Ao3`..`Ao5` that hold for the induced structure of
/// any anti-O-operator (not only strong ones).
pub fn check_induced_identities(b: &ApnAlgebra) -> IdentityReport {
    run(&INDUCED, &Context::new(b.field()).apn(1, &b.succ, &b.prec), Mode::Full)
}

/// The remaining identity `Ao6`; on an induced structure it holds exactly
/// when the anti-O-operator is strong.
pub fn check_induced_strong_identity(b: &ApnAlgebra) -> IdentityReport {
    run(&INDUCED_STRONG, &Context::new(b.field()).apn(1, &b.succ, &b.prec), Mode::Full)
}

static HOM_APN: LazyLock<Table> = LazyLock::new(|| {
    Table::compile(
        Signature::new().vars("xy", 1).map('T', 1, 2),
        &[("Hom>", "T(x >1 y) = T(x) >2 T(y)"), ("Hom<", "T(x <1 y) = T(x) <2 T(y)")],
    )
    .expect("homomorphism table")
});

static HOM_NOVIKOV: LazyLock<Table> = LazyLock::new(|| {
    Table::compile(Signature::new().vars("xy", 1).map('T', 1, 2), &[("Hom", "T(x o1 y) = T(x) o2 T(y)")])
        .expect("homomorphism table")
});

/// `T(x≻y) = T(x)≻T(y)` and `T(x≺y) = T(x)≺T(y)` for `T: from → to`.
pub fn check_apn_homomorphism(from: &ApnAlgebra, to: &ApnAlgebra, t: &Matrix) -> Result<IdentityReport> {
    check_map_shape(t, to.dim(), from.dim(), "homomorphism")?;
    let ctx = Context::new(from.field()).apn(1, &from.succ, &from.prec).apn(2, &to.succ, &to.prec).map('T', t);
    Ok(run(&HOM_APN, &ctx, Mode::Full))
}

pub fn check_novikov_homomorphism(from: &NovikovAlgebra, to: &NovikovAlgebra, t: &Matrix) -> Result<IdentityReport> {
    check_map_shape(t, to.dim(), from.dim(), "homomorphism")?;
    let ctx = Context::new(from.field()).novikov(1, &from.circ).novikov(2, &to.circ).map('T', t);
    Ok(run(&HOM_NOVIKOV, &ctx, Mode::Full))
}

/// For an invertible anti-O-operator, the APN structure on A transported
/// from the induced one: `x≻y = T(T⁻¹x ≻ T⁻¹y)`, likewise for ≺. Its sum is ∘.
pub fn compatible_apn_from_invertible_anti_o(n: &NovikovAlgebra, rho: &NovikovRep, t: &Matrix) -> Result<ApnAlgebra> {
    let induced = induced_apn_from_anti_o(n, rho, t)?;
    let tinv = t.inverse()?;
    let field = n.field();
    let dim = n.dim();
    let transport = |op: &BinaryOp| {
        BinaryOp::from_fn(field, dim, |i, j| t.apply(&op.mul(&tinv.column(i), &tinv.column(j))))
    };
    Ok(ApnAlgebra { succ: transport(&induced.algebra.succ), prec: transport(&induced.algebra.prec) })
}

// ---------------------------------------------------------------------------
// O-operators and Rota-Baxter operators.

static O_NOVIKOV: LazyLock<Table> = LazyLock::new(|| {
    Table::compile(
        Signature::new().vars("uv", 2).map('T', 2, 1),
        &[("On", "T(u) o1 T(v) = T(l1(T(u), v) + r1(T(v), u))")],
    )
    .expect("Novikov O-operator table")
});

static O_APN: LazyLock<Table> = LazyLock::new(|| {
    Table::compile(
        Signature::new().vars("uv", 2).map('T', 2, 1),
        &[
            ("Oa>", "T(u) >1 T(v) = T(l>1(T(u), v) + r>1(T(v), u))"),
            ("Oa<", "T(u) <1 T(v) = T(l<1(T(u), v) + r<1(T(v), u))"),
        ],
    )
    .expect("APN O-operator table")
});

pub fn check_o_operator_novikov(n: &NovikovAlgebra, rho: &NovikovRep, t: &Matrix) -> Result<IdentityReport> {
    validate_novikov_op(n, rho, t)?;
    Ok(run(&O_NOVIKOV, &novikov_rep_context(n, rho, t), Mode::Full))
}

pub fn check_o_operator_apn(b: &ApnAlgebra, rho: &ApnRep, t: &Matrix) -> Result<IdentityReport> {
    check_o_operator_apn_mode(b, rho, t, Mode::Full)
}

pub(crate) fn check_o_operator_apn_mode(b: &ApnAlgebra, rho: &ApnRep, t: &Matrix, mode: Mode) -> Result<IdentityReport> {
    rho.validate(b.dim(), b.field())?;
    check_map_shape(t, b.dim(), rho.dim, "operator V → A")?;
    Ok(run(&O_APN, &apn_rep_context(b, rho, t), mode))
}

static RB_APN: LazyLock<Table> = LazyLock::new(|| {
    Table::compile(
        Signature::new().vars("xy", 1).map('P', 1, 1),
        &[
            ("RB>", "P(x) >1 P(y) = P(P(x) >1 y + x >1 P(y) + [lambda] x >1 y)"),
            ("RB<", "P(x) <1 P(y) = P(P(x) <1 y + x <1 P(y) + [lambda] x <1 y)"),
        ],
    )
    .expect("Rota-Baxter table")
});

static RB_NOVIKOV: LazyLock<Table> = LazyLock::new(|| {
    Table::compile(
        Signature::new().vars("xy", 1).map('P', 1, 1),
        &[("RBo", "P(x) o1 P(y) = P(P(x) o1 y + x o1 P(y) + [lambda] x o1 y)")],
    )
    .expect("Rota-Baxter table")
});

/// Rota-Baxter operator of weight λ on an APN algebra, for both products.
pub fn check_rota_baxter_apn(b: &ApnAlgebra, p: &Matrix, lambda: &Scalar) -> Result<IdentityReport> {
    check_map_shape(p, b.dim(), b.dim(), "Rota-Baxter operator")?;
    let ctx = Context::new(b.field()).apn(1, &b.succ, &b.prec).map('P', p).param("lambda", lambda.clone());
    Ok(run(&RB_APN, &ctx, Mode::Full))
}

pub fn check_rota_baxter_novikov(n: &NovikovAlgebra, p: &Matrix, lambda: &Scalar) -> Result<IdentityReport> {
    check_map_shape(p, n.dim(), n.dim(), "Rota-Baxter operator")?;
    let ctx = Context::new(n.field()).novikov(1, &n.circ).map('P', p).param("lambda", lambda.clone());
    Ok(run(&RB_NOVIKOV, &ctx, Mode::Full))
}

/// O-operator on an APN algebra for its regular representation (weight 0).
pub fn check_o_operator_regular(b: &ApnAlgebra, t: &Matrix) -> Result<IdentityReport> {
    check_o_operator_apn(b, &regular_apn_rep(b), t)
}

// ---------------------------------------------------------------------------
// A-APN algebras and relative Rota-Baxter operators.

/// An APN algebra V with a representation of A on it, subject to the
/// compatibility conditions `RRa.1`..`RRa.12`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AApnAlgebra {
    pub v: ApnAlgebra,
    pub rho: ApnRep,
}

static A_APN: LazyLock<Table> = LazyLock::new(|| {
    Table::compile(
        Signature::new().vars("x", 1).vars("ab", 2),
        &[
            ("RRa.1", "(lo1(x, a) - ro1(x, a)) >2 b = a >2 l>1(x, b) - l>1(x, a >2 b)"),
            ("RRa.2", "l<1(x, a o2 b) = r>1(x, a) <2 b - l<1(x, a) <2 b - a >2 l<1(x, b)"),
            ("RRa.3", "lo1(x, a) >2 b = - l>1(x, b) <2 a"),
            ("RRa.4", "l<1(x, a) <2 b = l<1(x, b) <2 a"),
            ("RRa.5", "(lo1(x, a) - ro1(x, a)) <2 b = l>1(x, a o2 b) - a >2 lo1(x, b)"),
            ("RRa.6", "r>1(x, a o2 b - b o2 a) = b >2 r>1(x, a) - a >2 r>1(x, b)"),
            ("RRa.7", "a <2 ro1(x, b) = r<1(x, b >2 a - a <2 b) - b >2 r<1(x, a)"),
            ("RRa.8", "r<1(x, a o2 b - b o2 a) = a >2 ro1(x, b) - b >2 ro1(x, a)"),
            ("RRa.9", "a <2 lo1(x, b) = l>1(x, a) <2 b - r<1(x, a) <2 b - l>1(x, a <2 b)"),
            ("RRa.10", "r>1(x, a o2 b) = - r>1(x, a) <2 b"),
            ("RRa.11", "r<1(x, a <2 b) = r<1(x, a) <2 b"),
            ("RRa.12", "r<1(x, a >2 b) = - ro1(x, a) >2 b"),
        ],
    )
    .expect("A-APN table")
});

fn a_apn_context<'a>(b: &'a ApnAlgebra, s: &'a AApnAlgebra) -> Context<'a> {
    crate::representation::apn_rep_context(b, &s.rho).apn(2, &s.v.succ, &s.v.prec)
}

fn validate_a_apn(b: &ApnAlgebra, s: &AApnAlgebra) -> Result<()> {
    s.rho.validate(b.dim(), b.field())?;
    if s.v.dim() != s.rho.dim || s.v.field() != b.field() {
        return Err(Error::dim("A-APN algebra: representation and algebra live on different spaces"));
    }
    Ok(())
}

/// V is APN (`V:`), the representation is valid (`rep:`) and `RRa.*` hold.
pub fn check_a_apn_algebra(b: &ApnAlgebra, s: &AApnAlgebra) -> Result<IdentityReport> {
    validate_a_apn(b, s)?;
    let mut col = Collector::new(Mode::Full);
    col.absorb(check_apn_mode(&s.v, Mode::Full).tagged("V:"));
    col.absorb(check_apn_rep_mode(b, &s.rho, Mode::Full).tagged("rep:"));
    A_APN.check(&a_apn_context(b, s), &mut col);
    Ok(col.finish())
}

/// The sum A ⊕ V with V's products, the action of A on V and V acting
/// trivially on A. A is APN and (V, ρ) an A-APN algebra exactly when this is APN.
pub fn a_apn_sum(b: &ApnAlgebra, s: &AApnAlgebra) -> Result<ApnAlgebra> {
    validate_a_apn(b, s)?;
    Ok(apn_sum_ops(b, &s.v, &s.rho, &ApnRep::zero(b.field(), s.v.dim(), b.dim())))
}

static RELATIVE_RB: LazyLock<Table> = LazyLock::new(|| {
    Table::compile(
        Signature::new().vars("uv", 2).map('T', 2, 1),
        &[
            ("RR>", "T(u) >1 T(v) = T(l>1(T(u), v) + r>1(T(v), u) + [lambda] u >2 v)"),
            ("RR<", "T(u) <1 T(v) = T(l<1(T(u), v) + r<1(T(v), u) + [lambda] u <2 v)"),
        ],
    )
    .expect("relative Rota-Baxter table")
});

/// Relative Rota-Baxter operator of weight λ with respect to an A-APN algebra.
pub fn check_relative_rb(b: &ApnAlgebra, s: &AApnAlgebra, t: &Matrix, lambda: &Scalar) -> Result<IdentityReport> {
    validate_a_apn(b, s)?;
    check_map_shape(t, b.dim(), s.v.dim(), "relative Rota-Baxter operator")?;
    let ctx = a_apn_context(b, s).map('T', t).param("lambda", lambda.clone());
    Ok(run(&RELATIVE_RB, &ctx, Mode::Full))
}

/// A Novikov algebra V with a representation of (A, ∘) on it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ANovikovAlgebra {
    pub v: NovikovAlgebra,
    pub rho: NovikovRep,
}

static RELATIVE_RB_NOVIKOV: LazyLock<Table> = LazyLock::new(|| {
    Table::compile(
        Signature::new().vars("uv", 2).map('T', 2, 1),
        &[("RRo", "T(u) o1 T(v) = T(l1(T(u), v) + r1(T(v), u) + [lambda] u o2 v)")],
    )
    .expect("relative Rota-Baxter table")
});

/// Relative Rota-Baxter operator of weight λ on (A, ∘).
pub fn check_relative_rb_novikov(n: &NovikovAlgebra, s: &ANovikovAlgebra, t: &Matrix, lambda: &Scalar) -> Result<IdentityReport> {
    s.rho.validate(n.dim(), n.field())?;
    check_map_shape(t, n.dim(), s.v.dim(), "relative Rota-Baxter operator")?;
    let ctx = novikov_rep_context(n, &s.rho, t).novikov(2, &s.v.circ).param("lambda", lambda.clone());
    Ok(run(&RELATIVE_RB_NOVIKOV, &ctx, Mode::Full))
}

/// Whether (A, ∘) is Novikov and ρ is a representation; a convenience for
/// callers that need both before running an operator check.
pub fn novikov_rep_is_valid(n: &NovikovAlgebra, rho: &NovikovRep) -> bool {
    check_novikov_mode(n, Mode::FirstFailure).passed && check_novikov_rep_mode(n, rho, Mode::FirstFailure).passed
}
