//! Bilinear products, Novikov algebras and anti-pre-Novikov (APN) algebras.
//!
//! An APN algebra is a space with two products ≻, ≺ whose sum x∘y = x≻y + x≺y
//! is Novikov and which satisfy the five axioms tagged `Aa1`..`Aa5` below.

use std::sync::LazyLock;

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::linalg::{Matrix, Vector};
use crate::multilinear::{Context, Signature, Table};
use crate::report::{Collector, IdentityReport, Mode};
use crate::representation::{check_novikov_rep_mode, NovikovRep};
use crate::tensor::Tensor3;

/// A bilinear product with structure constants `c[i][j][k]`:
/// `eᵢ ∗ eⱼ = Σₖ c[i][j][k] eₖ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BinaryOp {
    c: Tensor3,
}

impl BinaryOp {
    pub fn new(c: Tensor3) -> Result<Self> {
        let [a, b, d] = c.dims();
        if a != b || b != d {
            return Err(Error::dim(format!("structure constants of shape {a}x{b}x{d}")));
        }
        Ok(BinaryOp { c })
    }

    pub fn zero(field: FieldSpec, n: usize) -> Self {
        BinaryOp { c: Tensor3::cube(field, n) }
    }

    /// Build from `(i, j, k, coefficient)` entries; repeated entries add up.
    pub fn from_entries(field: FieldSpec, n: usize, entries: &[(usize, usize, usize, Scalar)]) -> Result<Self> {
        let mut c = Tensor3::cube(field, n);
        for (i, j, k, v) in entries {
            if *i >= n || *j >= n || *k >= n {
                return Err(Error::dim(format!("structure constant index ({i},{j},{k}) out of range for dimension {n}")));
            }
            if v.field() != field {
                return Err(Error::FieldMismatch(format!("coefficient {v} not in {field}")));
            }
            c[(*i, *j, *k)] += v;
        }
        Ok(BinaryOp { c })
    }

    /// Integer entries, convenient for literals.
    pub fn from_i64(field: FieldSpec, n: usize, entries: &[(usize, usize, usize, i64)]) -> Self {
        let e: Vec<_> = entries.iter().map(|&(i, j, k, v)| (i, j, k, field.int(v))).collect();
        BinaryOp::from_entries(field, n, &e).expect("valid literal")
    }

    /// Build from the products of basis vectors.
    pub fn from_fn(field: FieldSpec, n: usize, mut f: impl FnMut(usize, usize) -> Vector) -> Self {
        let mut c = Tensor3::cube(field, n);
        for i in 0..n {
            for j in 0..n {
                let v = f(i, j);
                for k in 0..n {
                    c[(i, j, k)] = v[k].clone();
                }
            }
        }
        BinaryOp { c }
    }

    pub fn dim(&self) -> usize {
        self.c.dims()[0]
    }

    pub fn field(&self) -> FieldSpec {
        self.c.field()
    }

    pub fn tensor(&self) -> &Tensor3 {
        &self.c
    }

    pub fn coef(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.c[(i, j, k)]
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_zero()
    }

    /// Nonzero structure constants in index order.
    pub fn nonzero_entries(&self) -> Vec<(usize, usize, usize, Scalar)> {
        let n = self.dim();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let v = &self.c[(i, j, k)];
                    if !v.is_zero() {
                        out.push((i, j, k, v.clone()));
                    }
                }
            }
        }
        out
    }

    pub fn mul(&self, x: &Vector, y: &Vector) -> Vector {
        let n = self.dim();
        assert!(x.len() == n && y.len() == n, "product of vectors of wrong dimension");
        let mut out = Vector::zeros(self.field(), n);
        for i in 0..n {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if y[j].is_zero() {
                    continue;
                }
                let w = &x[i] * &y[j];
                for k in 0..n {
                    let c = &self.c[(i, j, k)];
                    if !c.is_zero() {
                        out[k] += &(&w * c);
                    }
                }
            }
        }
        out
    }

    pub fn mul_basis(&self, i: usize, j: usize) -> Vector {
        let n = self.dim();
        Vector::from_vec(self.field(), (0..n).map(|k| self.c[(i, j, k)].clone()).collect())
    }

    /// Left multiplication `L(x): y ↦ x ∗ y`.
    pub fn left(&self, x: &Vector) -> Matrix {
        let n = self.dim();
        let cols: Vec<Vector> = (0..n).map(|j| self.mul(x, &Vector::basis(self.field(), n, j))).collect();
        Matrix::from_columns(self.field(), n, &cols)
    }

    /// Right multiplication `R(y): x ↦ x ∗ y`.
    pub fn right(&self, y: &Vector) -> Matrix {
        let n = self.dim();
        let cols: Vec<Vector> = (0..n).map(|i| self.mul(&Vector::basis(self.field(), n, i), y)).collect();
        Matrix::from_columns(self.field(), n, &cols)
    }

    /// `L(eᵢ)` for every basis vector.
    pub fn lefts(&self) -> Vec<Matrix> {
        let n = self.dim();
        (0..n)
            .map(|i| {
                let cols: Vec<Vector> = (0..n).map(|j| self.mul_basis(i, j)).collect();
                Matrix::from_columns(self.field(), n, &cols)
            })
            .collect()
    }

    /// `R(eⱼ)` for every basis vector.
    pub fn rights(&self) -> Vec<Matrix> {
        let n = self.dim();
        (0..n)
            .map(|j| {
                let cols: Vec<Vector> = (0..n).map(|i| self.mul_basis(i, j)).collect();
                Matrix::from_columns(self.field(), n, &cols)
            })
            .collect()
    }

    /// The opposite product `x ∗' y = y ∗ x`.
    pub fn opposite(&self) -> BinaryOp {
        BinaryOp::from_fn(self.field(), self.dim(), |i, j| self.mul_basis(j, i))
    }

    pub fn scale(&self, c: &Scalar) -> BinaryOp {
        BinaryOp { c: self.c.scale(c) }
    }
}

impl std::ops::Add<&BinaryOp> for &BinaryOp {
    type Output = BinaryOp;
    fn add(self, rhs: &BinaryOp) -> BinaryOp {
        BinaryOp { c: &self.c + &rhs.c }
    }
}

impl std::ops::Sub<&BinaryOp> for &BinaryOp {
    type Output = BinaryOp;
    fn sub(self, rhs: &BinaryOp) -> BinaryOp {
        BinaryOp { c: &self.c - &rhs.c }
    }
}

impl std::ops::Neg for &BinaryOp {
    type Output = BinaryOp;
    fn neg(self) -> BinaryOp {
        BinaryOp { c: -&self.c }
    }
}

/// A space with a single product, checked against the Novikov axioms.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NovikovAlgebra {
    pub circ: BinaryOp,
}

impl NovikovAlgebra {
    pub fn new(circ: BinaryOp) -> Self {
        NovikovAlgebra { circ }
    }

    pub fn dim(&self) -> usize {
        self.circ.dim()
    }

    pub fn field(&self) -> FieldSpec {
        self.circ.field()
    }
}

/// A space with two products ≻ (`succ`) and ≺ (`prec`).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ApnAlgebra {
    pub succ: BinaryOp,
    pub prec: BinaryOp,
}

impl ApnAlgebra {
    pub fn new(succ: BinaryOp, prec: BinaryOp) -> Result<Self> {
        if succ.dim() != prec.dim() {
            return Err(Error::dim("≻ and ≺ act on spaces of different dimension"));
        }
        if succ.field() != prec.field() {
            return Err(Error::FieldMismatch("≻ and ≺ over different fields".into()));
        }
        Ok(ApnAlgebra { succ, prec })
    }

    pub fn zero(field: FieldSpec, n: usize) -> Self {
        ApnAlgebra { succ: BinaryOp::zero(field, n), prec: BinaryOp::zero(field, n) }
    }

    pub fn dim(&self) -> usize {
        self.succ.dim()
    }

    pub fn field(&self) -> FieldSpec {
        self.succ.field()
    }

    /// x∘y = x≻y + x≺y.
    pub fn circ(&self) -> BinaryOp {
        &self.succ + &self.prec
    }

    /// x⊙y = x≻y + y≺x.
    pub fn odot(&self) -> BinaryOp {
        &self.succ + &self.prec.opposite()
    }

    /// x⋆y = x∘y + y∘x.
    pub fn star(&self) -> BinaryOp {
        let c = self.circ();
        &c + &c.opposite()
    }
}

/// The associated Novikov algebra (A, ∘).
pub fn associated_novikov(b: &ApnAlgebra) -> NovikovAlgebra {
    NovikovAlgebra::new(b.circ())
}

static NOVIKOV: LazyLock<Table> = LazyLock::new(|| {
    Table::compile(
        Signature::new().vars("xyz", 1),
        &[
            ("Na1", "(x o1 y) o1 z - x o1 (y o1 z) = (y o1 x) o1 z - y o1 (x o1 z)"),
            ("Na2", "(x o1 y) o1 z = (x o1 z) o1 y"),
        ],
    )
    .expect("Novikov table")
});

static APN: LazyLock<Table> = LazyLock::new(|| {
    Table::compile(
        Signature::new().vars("xyz", 1),
        &[
            ("Aa1", "(x o1 y - y o1 x) >1 z = y >1 (x >1 z) - x >1 (y >1 z)"),
            ("Aa2", "x <1 (y o1 z) = (y >1 x) <1 z - (x <1 y) <1 z - y >1 (x <1 z)"),
            ("Aa3", "(x o1 y) >1 z = - (x >1 z) <1 y"),
            ("Aa4", "(x <1 y) <1 z = (x <1 z) <1 y"),
            ("Aa5", "(x o1 y - y o1 x) <1 z = x >1 (y o1 z) - y >1 (x o1 z)"),
        ],
    )
    .expect("APN table")
});

static DERIVED: LazyLock<Table> = LazyLock::new(|| {
    Table::compile(
        Signature::new().vars("xyz", 1),
        &[
            ("Ad1", "(x >1 z) <1 y = (x >1 y) <1 z"),
            ("Ad2", "(x o1 y) >1 z = (x o1 z) >1 y"),
            ("Ad3", "(x o1 y) <1 z = (x o1 z) <1 y"),
            ("Aa7a", "x *1 y = x @1 y + y @1 x"),
            ("Aa7b", "(x o1 y) *1 z = x *1 (z o1 y)"),
            ("Aa8a", "x @1 (y *1 z) - z @1 (x *1 y) = y @1 (x o1 z - z o1 x)"),
            ("Aa8b", "x >1 (y o1 z) = y @1 (x o1 z) - (y o1 x) <1 z"),
        ],
    )
    .expect("derived APN table")
});

pub fn check_novikov(n: &NovikovAlgebra) -> IdentityReport {
    check_novikov_mode(n, Mode::Full)
}

pub fn check_novikov_mode(n: &NovikovAlgebra, mode: Mode) -> IdentityReport {
    let ctx = Context::new(n.field()).novikov(1, &n.circ);
    let mut col = Collector::new(mode);
    NOVIKOV.check(&ctx, &mut col);
    col.finish()
}

/// The five APN axioms `Aa1`..`Aa5`.
pub fn check_apn(b: &ApnAlgebra) -> IdentityReport {
    check_apn_mode(b, Mode::Full)
}

pub fn check_apn_mode(b: &ApnAlgebra, mode: Mode) -> IdentityReport {
    let ctx = Context::new(b.field()).apn(1, &b.succ, &b.prec);
    let mut col = Collector::new(mode);
    APN.check(&ctx, &mut col);
    col.finish()
}

/// Identities that follow from the axioms: the three symmetries `Ad1`..`Ad3`
/// and the identities for ⊙ and ⋆ (`Aa7a`..`Aa8b`).
pub fn check_derived_identities(b: &ApnAlgebra) -> IdentityReport {
    let ctx = Context::new(b.field()).apn(1, &b.succ, &b.prec);
    let mut col = Collector::new(Mode::Full);
    DERIVED.check(&ctx, &mut col);
    col.finish()
}

/// (A, ∘) is Novikov and (A, −L≻, −R≺) is a bimodule over it; equivalent to
/// the APN axioms. Witness tags are prefixed `N:` and `Bm:`.
pub fn check_bimodule_characterization(b: &ApnAlgebra) -> IdentityReport {
    let n = associated_novikov(b);
    let nov = check_novikov(&n).tagged("N:");
    let rep = NovikovRep {
        dim: b.dim(),
        l: b.succ.lefts().iter().map(|m| -m).collect(),
        r: b.prec.rights().iter().map(|m| -m).collect(),
    };
    let bim = check_novikov_rep_mode(&n, &rep, Mode::Full).tagged("Bm:");
    nov.merge(bim)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn one_dim(field: FieldSpec, p: i64, q: i64) -> ApnAlgebra {
        ApnAlgebra::new(BinaryOp::from_i64(field, 1, &[(0, 0, 0, p)]), BinaryOp::from_i64(field, 1, &[(0, 0, 0, q)])).unwrap()
    }

    #[test]
    fn one_dimensional_classification_over_q() {
        // On e⊗e⊗e only Aa2 and Aa3 constrain: q(p+2q) = 0 and p(p+2q) = 0.
        for p in -3..=3 {
            for q in -3..=3 {
                let pass = check_apn(&one_dim(FieldSpec::Rational, p, q)).passed;
                assert_eq!(pass, p + 2 * q == 0, "p={p} q={q}");
            }
        }
    }

    #[test]
    fn witness_names_the_axiom() {
        let r = check_apn(&one_dim(FieldSpec::Rational, 1, 0));
        assert!(!r.passed);
        assert!(r.failed_ids().contains(&"Aa3"));
        let w = r.witnesses.iter().find(|w| w.id == "Aa3").unwrap();
        assert_eq!(w.indices, vec![0, 0, 0]);
        // (e∘e)≻e + (e≻e)≺e = p(p+q) + pq = 1.
        assert_eq!(w.residual, vec![FieldSpec::Rational.int(1)]);
    }

    #[test]
    fn products_and_multiplication_operators() {
        let q = FieldSpec::Rational;
        let op = BinaryOp::from_i64(q, 2, &[(0, 0, 1, 3), (1, 0, 0, 2)]);
        let e0 = Vector::basis(q, 2, 0);
        let e1 = Vector::basis(q, 2, 1);
        assert_eq!(op.mul(&e0, &e0), e1.scale(&q.int(3)));
        assert_eq!(op.left(&e1).apply(&e0), e0.scale(&q.int(2)));
        assert_eq!(op.right(&e0).apply(&e1), op.mul(&e1, &e0));
        assert_eq!(op.lefts()[0], op.left(&e0));
        assert_eq!(op.rights()[0], op.right(&e0));
        assert_eq!(op.opposite().mul(&e0, &e1), op.mul(&e1, &e0));
    }
}
