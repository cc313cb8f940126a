//! Cobrackets, APN coalgebras and bialgebras, and coboundary cobrackets.

use crate::algebra::{check_apn_mode, ApnAlgebra, BinaryOp};
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::forms::dual_novikov_pair;
use crate::linalg::{Matrix, Vector};
use crate::matched_pair::NovikovMatchedPair;
use crate::report::{Collector, IdentityReport, Mode};
use crate::representation::family_at;
use crate::tensor::{apply2, tau2, Perm3, Tensor3};

/// Comultiplications Δ≻, Δ≺ with `Δ(eᵢ) = Σⱼₖ d[i][j][k] eⱼ⊗eₖ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cobracket {
    pub succ: Tensor3,
    pub prec: Tensor3,
}

impl Cobracket {
    pub fn zero(field: FieldSpec, n: usize) -> Self {
        Cobracket { succ: Tensor3::cube(field, n), prec: Tensor3::cube(field, n) }
    }

    pub fn new(succ: Tensor3, prec: Tensor3) -> Result<Self> {
        let n = succ.dims()[0];
        if succ.dims() != [n, n, n] || prec.dims() != [n, n, n] {
            return Err(Error::dim("cobracket tensors must be cubes of the same size"));
        }
        if succ.field() != prec.field() {
            return Err(Error::FieldMismatch("cobracket tensors over different fields".into()));
        }
        Ok(Cobracket { succ, prec })
    }

    pub fn dim(&self) -> usize {
        self.succ.dims()[0]
    }

    pub fn field(&self) -> FieldSpec {
        self.succ.field()
    }

    /// Δ = Δ≻ + Δ≺.
    pub fn total(&self) -> Tensor3 {
        &self.succ + &self.prec
    }
}

/// Structure constants of the dual APN algebra on A*:
/// `⟨Δ(x), ζ⊗η⟩ = ⟨x, ζ∗η⟩`, i.e. `c*[j][k][i] = d[i][j][k]`.
pub fn dualize_cobracket(d: &Cobracket) -> ApnAlgebra {
    let op = |t: &Tensor3| BinaryOp::new(t.permute(Perm3::S123)).expect("cube");
    ApnAlgebra { succ: op(&d.succ), prec: op(&d.prec) }
}

/// Inverse of [`dualize_cobracket`].
pub fn cobracket_from_dual(astar: &ApnAlgebra) -> Cobracket {
    let back = |op: &BinaryOp| op.tensor().permute(Perm3::S132);
    Cobracket { succ: back(&astar.succ), prec: back(&astar.prec) }
}

/// `(Δ'⊗I)Δ(eᵢ)`.
fn left_comp(outer: &Tensor3, inner: &Tensor3, i: usize) -> Tensor3 {
    let n = inner.dims()[0];
    let mut t = Tensor3::cube(inner.field(), n);
    for j in 0..n {
        for k in 0..n {
            let c = &inner[(i, j, k)];
            if c.is_zero() {
                continue;
            }
            for p in 0..n {
                for q in 0..n {
                    let v = c * &outer[(j, p, q)];
                    t[(p, q, k)] += &v;
                }
            }
        }
    }
    t
}

/// `(I⊗Δ')Δ(eᵢ)`.
fn right_comp(outer: &Tensor3, inner: &Tensor3, i: usize) -> Tensor3 {
    let n = inner.dims()[0];
    let mut t = Tensor3::cube(inner.field(), n);
    for j in 0..n {
        for k in 0..n {
            let c = &inner[(i, j, k)];
            if c.is_zero() {
                continue;
            }
            for p in 0..n {
                for q in 0..n {
                    let v = c * &outer[(k, p, q)];
                    t[(j, p, q)] += &v;
                }
            }
        }
    }
    t
}

fn coalgebra_direct(d: &Cobracket, mode: Mode) -> IdentityReport {
    let (s, p) = (&d.succ, &d.prec);
    let all = d.total();
    let t12 = |t: Tensor3| t.permute(Perm3::S12);
    let t23 = |t: Tensor3| t.permute(Perm3::S23);
    let mut col = Collector::new(mode);
    let checks: [(&str, &dyn Fn(usize) -> Tensor3); 5] = [
        ("Ca1", &|i| {
            let a = left_comp(&all, s, i);
            let b = right_comp(s, s, i);
            (&a - &t12(a.clone())) - (t12(b.clone()) - b)
        }),
        ("Ca2", &|i| {
            right_comp(&all, p, i) - (t12(left_comp(s, p, i)) - left_comp(p, p, i) - t12(right_comp(p, s, i)))
        }),
        ("Ca3", &|i| left_comp(&all, s, i) + t23(left_comp(s, p, i))),
        ("Ca4", &|i| {
            let a = left_comp(p, p, i);
            &a - &t23(a.clone())
        }),
        ("Ca5", &|i| {
            let a = left_comp(&all, p, i);
            let b = right_comp(&all, s, i);
            (&a - &t12(a.clone())) - (&b - &t12(b.clone()))
        }),
    ];
    for (tag, f) in checks {
        for i in 0..d.dim() {
            if col.done() {
                return col.finish();
            }
            col.record(tag, &[i], f(i).entries().to_vec());
        }
    }
    col.finish()
}

fn failed_axioms(r: &IdentityReport) -> Vec<String> {
    r.failed_ids().iter().map(|id| id.trim_start_matches("Ca").trim_start_matches("Aa").to_string()).collect()
}

/// `Ca1`..`Ca5` evaluated directly on every basis vector, and again as the
/// APN axioms of the dual algebra; the two routes must fail on exactly the
/// same identities.
pub fn check_apn_coalgebra(d: &Cobracket) -> Result<IdentityReport> {
    let direct = coalgebra_direct(d, Mode::Full);
    let dual = check_apn_mode(&dualize_cobracket(d), Mode::Full);
    if failed_axioms(&direct) != failed_axioms(&dual) {
        return Err(Error::Inconsistent(format!(
            "coalgebra laws {:?} but dual APN axioms {:?}",
            direct.failed_ids(),
            dual.failed_ids()
        )));
    }
    Ok(direct)
}

/// An APN algebra with a cobracket on the same space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ApnBialgebra {
    pub algebra: ApnAlgebra,
    pub delta: Cobracket,
}

/// Multiplication operators of an APN algebra at basis vectors.
struct Ops {
    ls: Vec<Matrix>,
    lp: Vec<Matrix>,
    rp: Vec<Matrix>,
    lc: Vec<Matrix>,
    rc: Vec<Matrix>,
    lodot: Vec<Matrix>,
    rodot: Vec<Matrix>,
}

impl Ops {
    fn new(b: &ApnAlgebra) -> Self {
        let ls = b.succ.lefts();
        let rs = b.succ.rights();
        let lp = b.prec.lefts();
        let rp = b.prec.rights();
        let sum = |a: &[Matrix], c: &[Matrix]| a.iter().zip(c).map(|(x, y)| x + y).collect::<Vec<_>>();
        Ops {
            lc: sum(&ls, &lp),
            rc: sum(&rs, &rp),
            lodot: sum(&ls, &rp),
            rodot: sum(&rs, &lp),
            ls,
            lp,
            rp,
        }
    }
}

fn slabs(t: &Tensor3) -> Vec<Matrix> {
    (0..t.dims()[0]).map(|i| t.slab(i)).collect()
}

fn compat_conditions(b: &ApnAlgebra, d: &Cobracket, col: &mut Collector) {
    let n = b.dim();
    let f = b.field();
    let o = Ops::new(b);
    let id = Matrix::identity(f, n);
    let two = f.int(2);
    let ds = slabs(&d.succ);
    let dp = slabs(&d.prec);
    let dd: Vec<Matrix> = ds.iter().zip(&dp).map(|(x, y)| x + y).collect();
    // τΔ≺ + Δ≻ and Δ≻ + τΔ≺ coincide; both spellings appear below.
    let fam: Vec<Matrix> = ds.iter().zip(&dp).map(|(s, p)| s + &tau2(p)).collect();
    let at = |family: &[Matrix], v: &Vector| family_at(family, v, n, n);
    let circ = b.circ();
    let a2 = |x: &Matrix, y: &Matrix, s: &Matrix| apply2(x, y, s);
    for x in 0..n {
        for y in 0..n {
            let ex = Vector::basis(f, n, x);
            let ey = Vector::basis(f, n, y);
            let x_circ_y = circ.mul(&ex, &ey);
            let y_prec_x = b.prec.mul(&ey, &ex);
            let ls2rp = |i: usize| &o.ls[i] + &o.rp[i].scale(&two);
            let tdp_x = tau2(&dp[x]);

            let b1 = at(&fam, &x_circ_y)
                - (a2(&id, &o.lc[x], &fam[y]) - a2(&ls2rp(x), &id, &fam[y])
                    + a2(&id, &o.rc[y], &(tdp_x.scale(&two) + &ds[x]))
                    + a2(&o.rp[y], &id, &tdp_x));
            col.record("B1", &[x, y], b1.entries().to_vec());

            let bracket = circ.mul(&ey, &ex) - x_circ_y.clone();
            let b2 = at(&dp, &bracket)
                - (a2(&o.lc[y], &id, &dp[x]) - a2(&id, &o.lodot[y], &dp[x]) + a2(&id, &o.lodot[x], &dp[y])
                    - a2(&o.lc[x], &id, &dp[y]));
            col.record("B2", &[x, y], b2.entries().to_vec());

            let x_odot_y = b.succ.mul(&ex, &ey) + y_prec_x.clone();
            let b3 = at(&dd, &x_odot_y)
                - (a2(&ls2rp(x), &id, &dd[y]) + a2(&o.lp[y], &id, &dp[x]) + a2(&id, &o.lodot[x], &dd[y])
                    - a2(&id, &o.rodot[y], &ds[x])
                    - a2(&id, &o.rodot[y], &tdp_x).scale(&two));
            col.record("B3", &[x, y], b3.entries().to_vec());

            let dv = at(&dd, &y_prec_x);
            let b4 = (tau2(&dv) - dv.clone())
                - (a2(&id, &o.lp[y], &fam[x]) - a2(&id, &o.rp[x], &dd[y]) + a2(&o.rp[x], &id, &tau2(&dd[y]))
                    - a2(&o.lp[y], &id, &(tau2(&ds[x]) + &dp[x])));
            col.record("B4", &[x, y], b4.entries().to_vec());

            let b5 = (a2(&id, &o.rc[y], &fam[x]) + a2(&o.rp[y], &id, &fam[x]))
                - (a2(&id, &o.rc[x], &fam[y]) + a2(&o.rp[x], &id, &fam[y]));
            col.record("B5", &[x, y], b5.entries().to_vec());

            let b6 = (a2(&id, &o.rc[y], &tdp_x) - a2(&o.lodot[x], &id, &fam[y])) - tau2(&at(&dp, &x_circ_y));
            col.record("B6", &[x, y], b6.entries().to_vec());

            let b7 = (a2(&o.rodot[y], &id, &dp[x]) - a2(&id, &o.lodot[x], &tau2(&dd[y])))
                - (a2(&id, &o.rodot[y], &tdp_x) - a2(&o.lodot[x], &id, &dd[y]));
            col.record("B7", &[x, y], b7.entries().to_vec());

            let b8 = a2(&id, &o.rodot[y], &fam[x]) - (a2(&o.rp[x], &id, &dd[y]) - dv);
            col.record("B8", &[x, y], b8.entries().to_vec());
        }
    }
}

/// The algebra (`alg:`), coalgebra (`co:`) and compatibility conditions
/// `B1`..`B8`, each evaluated on basis pairs as identities in A⊗A.
pub fn check_apn_bialgebra(b: &ApnAlgebra, d: &Cobracket) -> Result<IdentityReport> {
    check_apn_bialgebra_mode(b, d, Mode::Full)
}

pub(crate) fn check_apn_bialgebra_mode(b: &ApnAlgebra, d: &Cobracket, mode: Mode) -> Result<IdentityReport> {
    if d.dim() != b.dim() || d.field() != b.field() {
        return Err(Error::dim("cobracket and algebra live on different spaces"));
    }
    let mut col = Collector::new(mode);
    col.absorb(check_apn_mode(b, mode).tagged("alg:"));
    if !col.done() {
        col.absorb(check_apn_coalgebra(d)?.tagged("co:"));
    }
    if !col.done() {
        compat_conditions(b, d, &mut col);
    }
    Ok(col.finish())
}

/// The Novikov matched pair (A, A*, −L⊙*, R≺*, −L⊙*, R≺*) attached to a
/// cobracket; it is a matched pair exactly when (A, Δ) is a bialgebra.
pub fn bialgebra_matched_pair(b: &ApnAlgebra, d: &Cobracket) -> Result<NovikovMatchedPair> {
    dual_novikov_pair(b, &dualize_cobracket(d))
}

/// Coboundary cobracket `Δ≻(x) = (I⊗L⋆(x) − L≻(x)⊗I)s≻`,
/// `Δ≺(x) = (L∘(x)⊗I − I⊗L⊙(x))s≺`.
pub fn coboundary_delta(b: &ApnAlgebra, s_succ: &Matrix, s_prec: &Matrix) -> Result<Cobracket> {
    let n = b.dim();
    for s in [s_succ, s_prec] {
        if s.rows() != n || s.cols() != n {
            return Err(Error::dim(format!("2-tensor must be {n}x{n}")));
        }
    }
    let o = Ops::new(b);
    let f = b.field();
    let id = Matrix::identity(f, n);
    let mut succ = Tensor3::cube(f, n);
    let mut prec = Tensor3::cube(f, n);
    for i in 0..n {
        let lstar = &o.lc[i] + &o.rc[i];
        let ds = apply2(&id, &lstar, s_succ) - apply2(&o.ls[i], &id, s_succ);
        let dp = apply2(&o.lc[i], &id, s_prec) - apply2(&id, &o.lodot[i], s_prec);
        for j in 0..n {
            for k in 0..n {
                succ[(i, j, k)] = ds[(j, k)].clone();
                prec[(i, j, k)] = dp[(j, k)].clone();
            }
        }
    }
    Ok(Cobracket { succ, prec })
}
