//! Tensor-placement products, the APN Yang-Baxter equation, invariant
//! 2-tensors and the structures a solution induces on the dual space.

use std::fmt;
use std::str::FromStr;

use crate::algebra::{ApnAlgebra, BinaryOp, NovikovAlgebra};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Vector};
use crate::operators::{check_o_operator_apn, check_o_operator_apn_mode, check_o_operator_novikov, AApnAlgebra, ANovikovAlgebra};
use crate::report::{Collector, IdentityReport, Mode};
use crate::representation::{dual_apn_rep, dual_family, neg_family, regular_apn_rep, semidirect_apn, ApnRep, NovikovRep};
use crate::tensor::{apply2, tau2, Perm3, Tensor3};

/// Where the legs of two 2-tensors go in a product `s_{pq} ∗ s'_{uv}`:
/// s = Σ a⊗b puts `a` on leg p and `b` on leg q, s' = Σ c⊗d puts `c` on
/// leg u and `d` on leg v. The one shared leg carries (s-element) ∗ (s'-element).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Placement {
    pub first: (usize, usize),
    pub second: (usize, usize),
}

impl Placement {
    /// The products the identities of this library use, as `"pq,uv"`.
    pub const TABLE: [&'static str; 17] = [
        "12,13", "13,12", "12,23", "13,23", "21,13", "13,21", "21,31", "21,23", "21,32", "31,23", "31,21", "31,32",
        "23,12", "23,21", "23,13", "32,21", "23,31",
    ];

    const fn raw(p: usize, q: usize, u: usize, v: usize) -> Self {
        Placement { first: (p - 1, q - 1), second: (u - 1, v - 1) }
    }

    fn shared(&self) -> usize {
        let (p, q) = self.first;
        if p == self.second.0 || p == self.second.1 {
            p
        } else {
            q
        }
    }
}

impl FromStr for Placement {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key: String = s.chars().filter(|c| c.is_ascii_digit() || *c == ',').collect();
        if !Placement::TABLE.contains(&key.as_str()) {
            return Err(Error::UnknownPlacement(s.to_string()));
        }
        let d: Vec<usize> = key.chars().filter_map(|c| c.to_digit(10)).map(|d| d as usize).collect();
        Ok(Placement::raw(d[0], d[1], d[2], d[3]))
    }
}

impl fmt::Display for Placement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "s{}{}*s'{}{}", self.first.0 + 1, self.first.1 + 1, self.second.0 + 1, self.second.1 + 1)
    }
}

fn product_at(s: &Matrix, s2: &Matrix, op: &BinaryOp, pl: Placement) -> Tensor3 {
    let n = s.rows();
    let field = s.field();
    let shared = pl.shared();
    let mut out = Tensor3::cube(field, n);
    let (p, q) = pl.first;
    let (u, v) = pl.second;
    for i in 0..n {
        for j in 0..n {
            let c1 = &s[(i, j)];
            if c1.is_zero() {
                continue;
            }
            for k in 0..n {
                for l in 0..n {
                    let c2 = &s2[(k, l)];
                    if c2.is_zero() {
                        continue;
                    }
                    let c = c1 * c2;
                    let mine = if p == shared { i } else { j };
                    let theirs = if u == shared { k } else { l };
                    let prod = op.mul_basis(mine, theirs);
                    // Fixed legs: the non-shared leg of each factor.
                    let mut idx = [0usize; 3];
                    if p != shared {
                        idx[p] = i;
                    }
                    if q != shared {
                        idx[q] = j;
                    }
                    if u != shared {
                        idx[u] = k;
                    }
                    if v != shared {
                        idx[v] = l;
                    }
                    for (m, w) in prod.iter().enumerate() {
                        if w.is_zero() {
                            continue;
                        }
                        idx[shared] = m;
                        let val = &c * w;
                        out[(idx[0], idx[1], idx[2])] += &val;
                    }
                }
            }
        }
    }
    out
}

/// `s_{pq} ∗ s'_{uv}` for one of the tabulated placements (`"12,13"` etc.).
pub fn placement_product(s: &Matrix, s2: &Matrix, op: &BinaryOp, placement: &str) -> Result<Tensor3> {
    let pl: Placement = placement.parse()?;
    let n = op.dim();
    for m in [s, s2] {
        if m.rows() != n || m.cols() != n {
            return Err(Error::dim(format!("2-tensor must be {n}x{n}")));
        }
    }
    Ok(product_at(s, s2, op, pl))
}

/// Products of an APN algebra, used to spell the Yang-Baxter residuals.
struct Prods {
    succ: BinaryOp,
    prec: BinaryOp,
    circ: BinaryOp,
    odot: BinaryOp,
    star: BinaryOp,
}

impl Prods {
    fn new(b: &ApnAlgebra) -> Self {
        Prods { succ: b.succ.clone(), prec: b.prec.clone(), circ: b.circ(), odot: b.odot(), star: b.star() }
    }

    /// `s_{pq} op s_{uv}` with the same tensor in both slots.
    fn p(&self, op: &BinaryOp, s: &Matrix, pq: &str) -> Tensor3 {
        product_at(s, s, op, pq.parse().expect("tabulated placement"))
    }
}

fn check_tensor(b: &ApnAlgebra, s: &Matrix) -> Result<()> {
    if s.rows() != b.dim() || s.cols() != b.dim() {
        return Err(Error::dim(format!("2-tensor must be {0}x{0}", b.dim())));
    }
    Ok(())
}

/// `s₁₂∘s₁₃ + s₂₃⊙s₁₃ + s₁₂≺s₂₃`; s solves the APN Yang-Baxter equation
/// exactly when this vanishes.
pub fn ybe_residual(b: &ApnAlgebra, s: &Matrix) -> Result<Tensor3> {
    check_tensor(b, s)?;
    let o = Prods::new(b);
    Ok(o.p(&o.circ, s, "12,13") + o.p(&o.odot, s, "23,13") + o.p(&o.prec, s, "12,23"))
}

/// The companion tensors P₁..P₅ of the Yang-Baxter residual.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct YbeCompanions {
    pub p: Tensor3,
    pub p1: Tensor3,
    pub p2: Tensor3,
    pub p3: Tensor3,
    pub p4: Tensor3,
    pub p5: Tensor3,
    /// The residual of τ(s).
    pub p_tau: Tensor3,
}

pub fn ybe_companions(b: &ApnAlgebra, s: &Matrix) -> Result<YbeCompanions> {
    check_tensor(b, s)?;
    let o = Prods::new(b);
    let p = |op: &BinaryOp, pq: &str| o.p(op, s, pq);
    Ok(YbeCompanions {
        p: ybe_residual(b, s)?,
        p1: p(&o.prec, "12,13") - p(&o.odot, "13,23") + p(&o.circ, "12,23"),
        p2: p(&o.succ, "12,13") + p(&o.star, "13,23") - p(&o.succ, "12,23"),
        p3: p(&o.circ, "13,23") - p(&o.prec, "13,12") - p(&o.odot, "12,23"),
        p4: p(&o.circ, "13,12") - p(&o.prec, "13,23") - p(&o.odot, "23,12"),
        p5: p(&o.star, "12,23") - p(&o.succ, "13,12") - p(&o.succ, "13,23"),
        p_tau: ybe_residual(b, &tau2(s))?,
    })
}

/// The residual tensors S₁..S₇ that a skew-symmetric s produces in the
/// coboundary bialgebra conditions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkewResiduals {
    pub s: [Tensor3; 7],
}

pub fn skew_residuals(b: &ApnAlgebra, s: &Matrix) -> Result<SkewResiduals> {
    check_tensor(b, s)?;
    let o = Prods::new(b);
    let p = |op: &BinaryOp, pq: &str| o.p(op, s, pq);
    Ok(SkewResiduals {
        s: [
            p(&o.prec, "12,23") + p(&o.odot, "23,13") + p(&o.circ, "12,13"),
            p(&o.succ, "12,23") - p(&o.star, "13,23") - p(&o.succ, "12,13"),
            p(&o.odot, "12,23") + p(&o.prec, "13,12") - p(&o.circ, "13,23") + p(&o.prec, "23,12") + p(&o.odot, "12,13")
                + p(&o.circ, "23,13"),
            p(&o.odot, "23,12") - p(&o.circ, "13,12") - p(&o.star, "13,12") - p(&o.succ, "23,13") + p(&o.prec, "13,23")
                + p(&o.succ, "23,12"),
            p(&o.prec, "13,12") + p(&o.odot, "12,23") - p(&o.circ, "13,23"),
            p(&o.odot, "23,12") + p(&o.prec, "13,23") - p(&o.circ, "13,12"),
            p(&o.prec, "12,13") - p(&o.odot, "13,23") + p(&o.circ, "12,23"),
        ],
    })
}

/// Expressions of S₂..S₇ through S₁ and leg permutations: S₂ = −S₁ − σ₁₂S₁,
/// S₃ = S₅ + σ₁₃S₁, S₄ = −S₁ − 2σ₂₃S₁, S₅ = −σS₁ with σ(x⊗y⊗z) = y⊗z⊗x,
/// S₆ = −σ₂₃S₁, S₇ = −σ₁₂S₁. Holds for every skew-symmetric s; returns the
/// relations that fail.
pub fn check_skew_relations(r: &SkewResiduals) -> IdentityReport {
    let s1 = &r.s[0];
    let sg = |p: Perm3| s1.permute(p);
    let two = s1.field().int(2);
    let rels: [(&str, Tensor3); 6] = [
        ("S2", &r.s[1] + &(s1 + &sg(Perm3::S12))),
        ("S3", &r.s[2] - &(&r.s[4] + &sg(Perm3::S13))),
        ("S4", &r.s[3] + &(s1 + &sg(Perm3::S23).scale(&two))),
        ("S5", &r.s[4] + &sg(Perm3::S123)),
        ("S6", &r.s[5] + &sg(Perm3::S23)),
        ("S7", &r.s[6] + &sg(Perm3::S12)),
    ];
    let mut col = Collector::new(Mode::Full);
    for (tag, t) in rels {
        col.record(tag, &[], t.entries().to_vec());
    }
    col.finish()
}

/// `T_s: A* → A`, `⟨T_s(ζ), η⟩ = ⟨s, ζ⊗η⟩`. As a matrix acting on columns
/// this is `sᵀ`; `T_{τ(s)}` is `s`.
pub fn t_from_s(s: &Matrix) -> Matrix {
    s.transpose()
}

fn record_matrix(col: &mut Collector, tag: &str, i: usize, m: &Matrix) {
    col.record(tag, &[i], m.entries().to_vec());
}

/// s is invariant: `(I⊗L⋆(x) − L≻(x)⊗I)s = 0` (`IE3`) and
/// `(L∘(x)⊗I − I⊗L⊙(x))s = 0` (`IE4`) for every basis x. The operator forms
/// `L⋆(x)T_s + T_s L≻*(x) = 0` and `L⊙(x)T_s + T_s L∘*(x) = 0` are evaluated
/// as well and must agree.
pub fn check_invariant(b: &ApnAlgebra, s: &Matrix) -> Result<IdentityReport> {
    check_tensor(b, s)?;
    let n = b.dim();
    let id = Matrix::identity(b.field(), n);
    let (ls, lp, rs, rp) = (b.succ.lefts(), b.prec.lefts(), b.succ.rights(), b.prec.rights());
    let t = t_from_s(s);
    let mut col = Collector::new(Mode::Full);
    let mut op_forms = Collector::new(Mode::Full);
    for x in 0..n {
        let lc = &ls[x] + &lp[x];
        let lstar = &(&lc + &rs[x]) + &rp[x];
        let lodot = &ls[x] + &rp[x];
        record_matrix(&mut col, "IE3", x, &(apply2(&id, &lstar, s) - apply2(&ls[x], &id, s)));
        record_matrix(&mut col, "IE4", x, &(apply2(&lc, &id, s) - apply2(&id, &lodot, s)));
        record_matrix(&mut op_forms, "IE3", x, &(lstar.matmul(&t) - t.matmul(&ls[x].transpose())));
        record_matrix(&mut op_forms, "IE4", x, &(lodot.matmul(&t) - t.matmul(&lc.transpose())));
    }
    let direct = col.finish();
    if direct.failed_ids() != op_forms.finish().failed_ids() {
        return Err(Error::Inconsistent("tensor and operator forms of invariance disagree".into()));
    }
    Ok(direct)
}

/// Products on A* induced by s:
/// `ζ≻η = R≻*(T_{τ(s)}η)ζ − L⋆*(T_sζ)η`, `ζ≺η = R⊙*(T_sζ)η − R∘*(T_{τ(s)}η)ζ`,
/// `ζ∘η = −R≺*(T_{τ(s)}η)ζ − L⊙*(T_sζ)η`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualProducts {
    pub succ: BinaryOp,
    pub prec: BinaryOp,
    pub circ: BinaryOp,
}

impl DualProducts {
    pub fn apn(&self) -> ApnAlgebra {
        ApnAlgebra { succ: self.succ.clone(), prec: self.prec.clone() }
    }

    pub fn novikov(&self) -> NovikovAlgebra {
        NovikovAlgebra::new(self.circ.clone())
    }
}

pub fn dual_products_from_s(b: &ApnAlgebra, s: &Matrix) -> Result<DualProducts> {
    check_tensor(b, s)?;
    let n = b.dim();
    let f = b.field();
    let circ = b.circ();
    // With f* = −fᵀ: R≻*(c)ζ = −R≻(c)ᵀζ etc.
    let op_t = |op: &BinaryOp, left: bool, v: &Vector| if left { op.left(v) } else { op.right(v) }.transpose();
    let lstar = |v: &Vector| (circ.left(v) + circ.right(v)).transpose();
    let lodot = |v: &Vector| (b.succ.left(v) + b.prec.right(v)).transpose();
    let rodot = |v: &Vector| (b.succ.right(v) + b.prec.left(v)).transpose();
    let e = |i: usize| Vector::basis(f, n, i);
    // T_s(e_j*) = row j of s, T_{τ(s)}(e_k*) = column k of s.
    let succ = BinaryOp::from_fn(f, n, |j, k| {
        -op_t(&b.succ, false, &s.column(k)).apply(&e(j)) + lstar(&s.row(j)).apply(&e(k))
    });
    let prec = BinaryOp::from_fn(f, n, |j, k| -rodot(&s.row(j)).apply(&e(k)) + op_t(&circ, false, &s.column(k)).apply(&e(j)));
    let circ_s = BinaryOp::from_fn(f, n, |j, k| op_t(&b.prec, false, &s.column(k)).apply(&e(j)) + lodot(&s.row(j)).apply(&e(k)));
    Ok(DualProducts { succ, prec, circ: circ_s })
}

/// Solution of the Yang-Baxter equation (`YBE`) whose symmetric part
/// s + τ(s) is invariant (`sym:IE3`, `sym:IE4`).
pub fn check_quasi_triangular(b: &ApnAlgebra, s: &Matrix) -> Result<IdentityReport> {
    let mut col = Collector::new(Mode::Full);
    col.record("YBE", &[], ybe_residual(b, s)?.entries().to_vec());
    col.absorb(check_invariant(b, &(s + &tau2(s)))?.tagged("sym:"));
    Ok(col.finish())
}

/// Quasi-triangular with τ(s) = −s (`Skew`).
pub fn check_triangular(b: &ApnAlgebra, s: &Matrix) -> Result<IdentityReport> {
    let mut col = Collector::new(Mode::Full);
    col.absorb(check_quasi_triangular(b, s)?);
    let sym = s + &tau2(s);
    for i in 0..s.rows() {
        for j in i..s.cols() {
            col.record("Skew", &[i, j], vec![sym[(i, j)].clone()]);
        }
    }
    Ok(col.finish())
}

/// Quasi-triangular with T_{s+τ(s)} invertible (`Fact`; the witness is a
/// kernel vector).
pub fn check_factorizable(b: &ApnAlgebra, s: &Matrix) -> Result<IdentityReport> {
    let mut col = Collector::new(Mode::Full);
    col.absorb(check_quasi_triangular(b, s)?);
    if let Some(k) = t_from_s(&(s + &tau2(s))).nullspace().into_iter().next() {
        col.record("Fact", &[], k.into_vec());
    }
    Ok(col.finish())
}

/// Which of the equivalent Yang-Baxter conditions hold for an s whose
/// symmetric part is invariant.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct YbeEquivalences {
    /// P = 0.
    pub ybe: bool,
    /// P₃ = 0.
    pub p3: bool,
    /// P₁ = P₂ = 0.
    pub p1_p2: bool,
    /// P₄ = P₅ = 0.
    pub p4_p5: bool,
    /// P(τ(s)) = 0.
    pub tau: bool,
}

impl YbeEquivalences {
    /// All conditions agree.
    pub fn consistent(&self) -> bool {
        let v = [self.ybe, self.p3, self.p1_p2, self.p4_p5, self.tau];
        v.iter().all(|&x| x == v[0])
    }

    pub fn report(&self) -> IdentityReport {
        let mut r = IdentityReport::pass();
        if !self.consistent() {
            r.passed = false;
            r.witnesses.push(crate::report::Witness {
                id: "Ya1".into(),
                indices: vec![],
                residual: vec![],
            });
        }
        r
    }
}

/// Evaluates P, P₁..P₅ and P(τ(s)). Errors when s + τ(s) is not invariant.
pub fn ybe_equivalences(b: &ApnAlgebra, s: &Matrix) -> Result<YbeEquivalences> {
    let inv = check_invariant(b, &(s + &tau2(s)))?;
    if !inv.passed {
        return Err(Error::precondition("invariance of s + τ(s)", inv));
    }
    let c = ybe_companions(b, s)?;
    Ok(YbeEquivalences {
        ybe: c.p.is_zero(),
        p3: c.p3.is_zero(),
        p1_p2: c.p1.is_zero() && c.p2.is_zero(),
        p4_p5: c.p4.is_zero() && c.p5.is_zero(),
        tau: c.p_tau.is_zero(),
    })
}

/// The dual representation of the regular one, (A*, −L⋆*, −R≻*, R⊙*, R∘*).
pub fn coregular_apn_rep(b: &ApnAlgebra) -> ApnRep {
    crate::representation::dual_apn_rep_unchecked(&regular_apn_rep(b))
}

/// (A*, −L⊙*, R≺*) as a representation of (A, ∘).
pub fn coregular_novikov_rep(b: &ApnAlgebra) -> NovikovRep {
    let lodot: Vec<Matrix> = b.succ.lefts().iter().zip(b.prec.rights()).map(|(l, r)| l + &r).collect();
    NovikovRep { dim: b.dim(), l: neg_family(&dual_family(&lodot)), r: dual_family(&b.prec.rights()) }
}

/// T_s as an O-operator on the APN algebra for the coregular representation,
/// and on (A, ∘) for (A*, −L⊙*, R≺*). For skew s both are equivalent to the
/// Yang-Baxter equation.
pub fn ybe_operator_forms(b: &ApnAlgebra, s: &Matrix) -> Result<(IdentityReport, IdentityReport)> {
    check_tensor(b, s)?;
    let t = t_from_s(s);
    let apn = check_o_operator_apn(b, &coregular_apn_rep(b), &t)?;
    let nov = check_o_operator_novikov(&crate::algebra::associated_novikov(b), &coregular_novikov_rep(b), &t)?;
    Ok((apn, nov))
}

/// `s = Σᵢ T(vᵢ)⊗vᵢ* − vᵢ*⊗T(vᵢ)` in (A ⋉ V*)⊗(A ⋉ V*), without checking T.
pub fn semidirect_ybe_tensor(t: &Matrix) -> Matrix {
    let n = t.rows();
    let m = t.cols();
    let mut s = Matrix::zeros(t.field(), n + m, n + m);
    for i in 0..m {
        for k in 0..n {
            s[(k, n + i)] = t[(k, i)].clone();
            s[(n + i, k)] = -&t[(k, i)];
        }
    }
    s
}

/// A ⋉ V* for the dual representation, and the skew solution built from an
/// O-operator `T: V → A`. Errors if T is not an O-operator.
pub fn semidirect_ybe_solution(b: &ApnAlgebra, rho: &ApnRep, t: &Matrix) -> Result<(ApnAlgebra, Matrix)> {
    let r = check_o_operator_apn_mode(b, rho, t, Mode::Full)?;
    if !r.passed {
        return Err(Error::precondition("O-operator condition", r));
    }
    let hat = semidirect_apn(b, &dual_apn_rep(b, rho)?)?;
    Ok((hat, semidirect_ybe_tensor(t)))
}

/// The A-APN algebra (A*, ⪰, ⪯) with `ζ⪰η = −L⋆*(T_sζ)η`, `ζ⪯η = R⊙*(T_sζ)η`
/// and the coregular representation.
pub fn a_apn_from_tensor(b: &ApnAlgebra, s: &Matrix) -> Result<AApnAlgebra> {
    check_tensor(b, s)?;
    let n = b.dim();
    let f = b.field();
    let circ = b.circ();
    let e = |i: usize| Vector::basis(f, n, i);
    let succ = BinaryOp::from_fn(f, n, |j, k| (circ.left(&s.row(j)) + circ.right(&s.row(j))).transpose().apply(&e(k)));
    let prec = BinaryOp::from_fn(f, n, |j, k| -(b.succ.right(&s.row(j)) + b.prec.left(&s.row(j))).transpose().apply(&e(k)));
    Ok(AApnAlgebra { v: ApnAlgebra { succ, prec }, rho: coregular_apn_rep(b) })
}

/// The A-Novikov algebra (A*, ∘) with `ζ∘η = −L⊙*(T_sζ)η` and (A*, −L⊙*, R≺*).
pub fn a_novikov_from_tensor(b: &ApnAlgebra, s: &Matrix) -> Result<ANovikovAlgebra> {
    check_tensor(b, s)?;
    let n = b.dim();
    let f = b.field();
    let circ = BinaryOp::from_fn(f, n, |j, k| {
        (b.succ.left(&s.row(j)) + b.prec.right(&s.row(j))).transpose().apply(&Vector::basis(f, n, k))
    });
    Ok(ANovikovAlgebra { v: NovikovAlgebra::new(circ), rho: coregular_novikov_rep(b) })
}
