//! Representations of Novikov and APN algebras, their duals, semidirect
//! products and the Novikov representations an APN representation induces.
//!
//! Action families are stored as one matrix per basis vector of the acting
//! algebra. Duals use positional dual bases and the convention
//! `f* = −fᵀ` (so that ⟨f*(ζ), v⟩ = −⟨ζ, f(v)⟩).

use std::sync::LazyLock;

use crate::algebra::{ApnAlgebra, BinaryOp, NovikovAlgebra};
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::linalg::{Matrix, Vector};
use crate::multilinear::{ActKind, Context, Side, Signature, Table};
use crate::report::{Collector, IdentityReport, Mode};

/// `f ↦ f* = −fᵀ`, applied to each matrix of a family.
pub fn dual_family(ms: &[Matrix]) -> Vec<Matrix> {
    ms.iter().map(|m| -m.transpose()).collect()
}

pub(crate) fn add_families(a: &[Matrix], b: &[Matrix]) -> Vec<Matrix> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub(crate) fn neg_family(a: &[Matrix]) -> Vec<Matrix> {
    a.iter().map(|x| -x).collect()
}

/// Evaluate a family at an arbitrary vector: Σ xᵢ Mᵢ.
pub fn family_at(ms: &[Matrix], x: &Vector, rows: usize, cols: usize) -> Matrix {
    let mut acc = Matrix::zeros(x.field(), rows, cols);
    for (m, c) in ms.iter().zip(x.iter()) {
        if !c.is_zero() {
            acc = acc + m.scale(c);
        }
    }
    acc
}

fn check_family(ms: &[Matrix], n: usize, m: usize, field: FieldSpec, what: &str) -> Result<()> {
    if ms.len() != n {
        return Err(Error::dim(format!("{what}: {} matrices for an algebra of dimension {n}", ms.len())));
    }
    for x in ms {
        if x.rows() != m || x.cols() != m {
            return Err(Error::dim(format!("{what}: expected {m}x{m} matrices")));
        }
        if x.field() != field {
            return Err(Error::FieldMismatch(format!("{what} over {}", x.field())));
        }
    }
    Ok(())
}

/// A pair (l, r) of linear maps A → End(V) for a Novikov algebra A.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NovikovRep {
    pub dim: usize,
    pub l: Vec<Matrix>,
    pub r: Vec<Matrix>,
}

impl NovikovRep {
    pub fn validate(&self, n: usize, field: FieldSpec) -> Result<()> {
        check_family(&self.l, n, self.dim, field, "l")?;
        check_family(&self.r, n, self.dim, field, "r")
    }
}

/// A quadruple (l≻, r≻, l≺, r≺) of linear maps A → End(V) for an APN algebra A.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ApnRep {
    pub dim: usize,
    pub l_succ: Vec<Matrix>,
    pub r_succ: Vec<Matrix>,
    pub l_prec: Vec<Matrix>,
    pub r_prec: Vec<Matrix>,
}

impl ApnRep {
    pub fn validate(&self, n: usize, field: FieldSpec) -> Result<()> {
        check_family(&self.l_succ, n, self.dim, field, "l≻")?;
        check_family(&self.r_succ, n, self.dim, field, "r≻")?;
        check_family(&self.l_prec, n, self.dim, field, "l≺")?;
        check_family(&self.r_prec, n, self.dim, field, "r≺")
    }

    /// The zero representation on a space of dimension `m`.
    pub fn zero(field: FieldSpec, n: usize, m: usize) -> Self {
        let z = vec![Matrix::zeros(field, m, m); n];
        ApnRep { dim: m, l_succ: z.clone(), r_succ: z.clone(), l_prec: z.clone(), r_prec: z }
    }

    /// l∘ = l≻ + l≺
    pub fn l_circ(&self) -> Vec<Matrix> {
        add_families(&self.l_succ, &self.l_prec)
    }

    /// r∘ = r≻ + r≺
    pub fn r_circ(&self) -> Vec<Matrix> {
        add_families(&self.r_succ, &self.r_prec)
    }

    /// l⋆ = l∘ + r∘
    pub fn l_star(&self) -> Vec<Matrix> {
        add_families(&self.l_circ(), &self.r_circ())
    }

    /// l⊙ = l≻ + r≺
    pub fn l_odot(&self) -> Vec<Matrix> {
        add_families(&self.l_succ, &self.r_prec)
    }

    /// r⊙ = r≻ + l≺
    pub fn r_odot(&self) -> Vec<Matrix> {
        add_families(&self.r_succ, &self.l_prec)
    }
}

/// (A, L∘, R∘).
pub fn regular_novikov_rep(n: &NovikovAlgebra) -> NovikovRep {
    NovikovRep { dim: n.dim(), l: n.circ.lefts(), r: n.circ.rights() }
}

/// (A, L≻, R≻, L≺, R≺).
pub fn regular_apn_rep(b: &ApnAlgebra) -> ApnRep {
    ApnRep { dim: b.dim(), l_succ: b.succ.lefts(), r_succ: b.succ.rights(), l_prec: b.prec.lefts(), r_prec: b.prec.rights() }
}

static NOVIKOV_REP: LazyLock<Table> = LazyLock::new(|| {
    Table::compile(
        Signature::new().vars("xy", 1).vars("v", 2),
        &[
            ("Nr1", "l1(x o1 y - y o1 x, v) = l1(x, l1(y, v)) - l1(y, l1(x, v))"),
            ("Nr2", "l1(x, r1(y, v)) - r1(y, l1(x, v)) = r1(x o1 y, v) - r1(y, r1(x, v))"),
            ("Nr3a", "l1(x o1 y, v) = r1(y, l1(x, v))"),
            ("Nr3b", "r1(x, r1(y, v)) = r1(y, r1(x, v))"),
        ],
    )
    .expect("Novikov representation table")
});

static APN_REP: LazyLock<Table> = LazyLock::new(|| {
    Table::compile(
        Signature::new().vars("xy", 1).vars("v", 2),
        &[
            ("rp1", "l>1(x o1 y - y o1 x, v) = l>1(y, l>1(x, v)) - l>1(x, l>1(y, v))"),
            ("rp2", "r<1(x o1 y, v) = r<1(y, l>1(x, v)) - r<1(y, r<1(x, v)) - l>1(x, r<1(y, v))"),
            ("rp3a", "l>1(x o1 y, v) = - r<1(y, l>1(x, v))"),
            ("rp3b", "l<1(x <1 y, v) = r<1(y, l<1(x, v))"),
            ("rp4", "l<1(x o1 y - y o1 x, v) = l>1(x, lo1(y, v)) - l>1(y, lo1(x, v))"),
            ("rp5", "r>1(x, lo1(y, v) - ro1(y, v)) = r>1(y >1 x, v) - l>1(y, r>1(x, v))"),
            ("rp6", "l<1(x, lo1(y, v)) = l<1(y >1 x, v) - l<1(x <1 y, v) - l>1(y, l<1(x, v))"),
            ("rp7", "r<1(x, lo1(y, v) - ro1(y, v)) = l>1(y, ro1(x, v)) - r>1(y o1 x, v)"),
            ("rp8a", "r>1(x, lo1(y, v)) = - l<1(y >1 x, v)"),
            ("rp8b", "r<1(x, r<1(y, v)) = r<1(y, r<1(x, v))"),
            ("rp9", "l<1(x, ro1(y, v)) = r<1(y, r>1(x, v)) - r<1(y, l<1(x, v)) - r>1(x <1 y, v)"),
            ("rp10", "r>1(x, ro1(y, v)) = - r<1(y, r>1(x, v))"),
        ],
    )
    .expect("APN representation table")
});

pub fn check_novikov_rep(n: &NovikovAlgebra, rho: &NovikovRep) -> Result<IdentityReport> {
    rho.validate(n.dim(), n.field())?;
    Ok(check_novikov_rep_mode(n, rho, Mode::Full))
}

pub(crate) fn check_novikov_rep_mode(n: &NovikovAlgebra, rho: &NovikovRep, mode: Mode) -> IdentityReport {
    let ctx = Context::new(n.field())
        .novikov(1, &n.circ)
        .plain(2, rho.dim)
        .action(Side::Left, ActKind::Plain, 1, &rho.l)
        .action(Side::Right, ActKind::Plain, 1, &rho.r);
    let mut col = Collector::new(mode);
    NOVIKOV_REP.check(&ctx, &mut col);
    col.finish()
}

pub fn check_apn_rep(b: &ApnAlgebra, rho: &ApnRep) -> Result<IdentityReport> {
    rho.validate(b.dim(), b.field())?;
    Ok(check_apn_rep_mode(b, rho, Mode::Full))
}

pub(crate) fn check_apn_rep_mode(b: &ApnAlgebra, rho: &ApnRep, mode: Mode) -> IdentityReport {
    let ctx = apn_rep_context(b, rho);
    let mut col = Collector::new(mode);
    APN_REP.check(&ctx, &mut col);
    col.finish()
}

pub(crate) fn apn_rep_context<'a>(b: &'a ApnAlgebra, rho: &'a ApnRep) -> Context<'a> {
    Context::new(b.field())
        .apn(1, &b.succ, &b.prec)
        .plain(2, rho.dim)
        .action(Side::Left, ActKind::Succ, 1, &rho.l_succ)
        .action(Side::Right, ActKind::Succ, 1, &rho.r_succ)
        .action(Side::Left, ActKind::Prec, 1, &rho.l_prec)
        .action(Side::Right, ActKind::Prec, 1, &rho.r_prec)
}

/// The dual representation (V*, −l⋆*, −r≻*, r⊙*, r∘*).
pub fn dual_apn_rep(b: &ApnAlgebra, rho: &ApnRep) -> Result<ApnRep> {
    rho.validate(b.dim(), b.field())?;
    let r = check_apn_rep_mode(b, rho, Mode::FirstFailure);
    if !r.passed {
        return Err(Error::precondition("APN representation", r));
    }
    Ok(dual_apn_rep_unchecked(rho))
}

pub(crate) fn dual_apn_rep_unchecked(rho: &ApnRep) -> ApnRep {
    ApnRep {
        dim: rho.dim,
        l_succ: neg_family(&dual_family(&rho.l_star())),
        r_succ: neg_family(&dual_family(&rho.r_succ)),
        l_prec: dual_family(&rho.r_odot()),
        r_prec: dual_family(&rho.r_circ()),
    }
}

/// The dual of a Novikov representation: (V*, l* + r*, −r*).
pub fn dual_novikov_rep(rho: &NovikovRep) -> NovikovRep {
    NovikovRep { dim: rho.dim, l: dual_family(&add_families(&rho.l, &rho.r)), r: neg_family(&dual_family(&rho.r)) }
}

/// Which Novikov representation of (A, ∘) to induce from an APN representation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InducedKind {
    /// (V, −l≻, −r≺)
    NegSuccPrec,
    /// (V, l∘, r∘)
    Circ,
    /// (V*, l⋆*, −r∘*)
    DualStar,
    /// (V*, −l⊙*, r≺*)
    DualOdot,
}

impl InducedKind {
    pub const ALL: [InducedKind; 4] = [InducedKind::NegSuccPrec, InducedKind::Circ, InducedKind::DualStar, InducedKind::DualOdot];
}

pub fn induced_novikov_rep(rho: &ApnRep, kind: InducedKind) -> NovikovRep {
    let (l, r) = match kind {
        InducedKind::NegSuccPrec => (neg_family(&rho.l_succ), neg_family(&rho.r_prec)),
        InducedKind::Circ => (rho.l_circ(), rho.r_circ()),
        InducedKind::DualStar => (dual_family(&rho.l_star()), neg_family(&dual_family(&rho.r_circ()))),
        InducedKind::DualOdot => (neg_family(&dual_family(&rho.l_odot())), dual_family(&rho.r_prec)),
    };
    NovikovRep { dim: rho.dim, l, r }
}

/// A ⋉ V with (x+u)⪰(y+v) = x≻y + l≻(x)v + r≻(y)u and likewise for ⪯.
/// Basis: A first, then V.
pub fn semidirect_apn(b: &ApnAlgebra, rho: &ApnRep) -> Result<ApnAlgebra> {
    rho.validate(b.dim(), b.field())?;
    let zero = BinaryOp::zero(b.field(), rho.dim);
    Ok(crate::matched_pair::apn_sum_ops(
        b,
        &ApnAlgebra { succ: zero.clone(), prec: zero },
        rho,
        &ApnRep::zero(b.field(), rho.dim, b.dim()),
    ))
}

/// A ⋉ V for a Novikov representation.
pub fn semidirect_novikov(n: &NovikovAlgebra, rho: &NovikovRep) -> Result<NovikovAlgebra> {
    rho.validate(n.dim(), n.field())?;
    let zero = NovikovAlgebra::new(BinaryOp::zero(n.field(), rho.dim));
    let z = vec![Matrix::zeros(n.field(), n.dim(), n.dim()); rho.dim];
    Ok(crate::matched_pair::novikov_sum_ops(n, &zero, rho, &NovikovRep { dim: n.dim(), l: z.clone(), r: z }))
}
