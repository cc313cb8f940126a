//! Named small instances and a seeded sampler for generated fixtures.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{ApnAlgebra, BinaryOp, NovikovAlgebra};
use crate::bialgebra::Cobracket;
use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::linalg::Matrix;
use crate::search::{enumerate_apn, enumerate_novikov, SearchConfig};
use crate::tensor::Tensor3;

/// The one-dimensional structure `e₁≻e₁ = p e₁`, `e₁≺e₁ = q e₁`. It is APN
/// exactly when `p + 2q = 0` or `p = q = 0`.
pub fn one_dim(field: FieldSpec, p: &Scalar, q: &Scalar) -> Result<ApnAlgebra> {
    let op = |c: &Scalar| BinaryOp::from_entries(field, 1, &[(0, 0, 0, c.clone())]);
    ApnAlgebra::new(op(p)?, op(q)?)
}

/// Three-dimensional APN algebra `e₁≻e₁ = e₂`, `e₁≻e₂ = e₃`.
pub fn a3(field: FieldSpec) -> ApnAlgebra {
    ApnAlgebra { succ: BinaryOp::from_i64(field, 3, &[(0, 0, 1, 1), (0, 1, 2, 1)]), prec: BinaryOp::zero(field, 3) }
}

/// Two-dimensional Novikov algebra `e₁∘e₁ = e₁`, `e₂∘e₁ = e₂`.
pub fn n2(field: FieldSpec) -> NovikovAlgebra {
    NovikovAlgebra::new(BinaryOp::from_i64(field, 2, &[(0, 0, 0, 1), (1, 0, 1, 1)]))
}

/// The operator `T(e₁) = a e₂`, `T(e₂) = 0` on [`n2`], a strong anti-Rota-Baxter
/// operator for every a.
pub fn n2_anti_rota_baxter(field: FieldSpec, a: &Scalar) -> Matrix {
    let mut t = Matrix::zeros(field, 2, 2);
    t[(1, 0)] = a.clone();
    t
}

/// Two-dimensional APN algebra `e₁≻e₁ = a e₂`.
pub fn a2(field: FieldSpec, a: &Scalar) -> ApnAlgebra {
    let succ = BinaryOp::from_entries(field, 2, &[(0, 0, 1, a.clone())]).expect("in range");
    ApnAlgebra { succ, prec: BinaryOp::zero(field, 2) }
}

/// `T = [[t₁, t₂], [t₃, t₄]]` on [`a2`]; an O-operator for the regular
/// representation exactly when `t₂ = 0` and `t₁(t₁ − 2t₄) = 0`.
pub fn a2_operator(field: FieldSpec, t: [i64; 4]) -> Matrix {
    Matrix::from_i64(field, &[&[t[0], t[1]], &[t[2], t[3]]])
}

/// The predicate cutting out the O-operators of the regular representation
/// of [`a2`] for `a ≠ 0`.
pub fn a2_operator_predicate(t: &Matrix) -> bool {
    let (t1, t2, t4) = (&t[(0, 0)], &t[(0, 1)], &t[(1, 1)]);
    t2.is_zero() && (t1 * &(t1 - &(t4 + t4))).is_zero()
}

/// Seeded generator of random fixtures; identical seeds give identical
/// streams on every platform.
pub struct Sampler {
    rng: ChaCha8Rng,
    field: FieldSpec,
}

impl Sampler {
    /// Random elements come from GF(p), or from {−2, …, 2} over Q.
    pub fn new(field: FieldSpec, seed: u64) -> Self {
        Sampler { rng: ChaCha8Rng::seed_from_u64(seed), field }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn scalar(&mut self) -> Scalar {
        match self.field {
            FieldSpec::Prime(p) => self.field.int(self.rng.gen_range(0..p as i64)),
            FieldSpec::Rational => self.field.int(self.rng.gen_range(-2..=2)),
        }
    }

    /// Each entry is nonzero with probability about `density`.
    pub fn matrix(&mut self, rows: usize, cols: usize, density: f64) -> Matrix {
        let mut m = Matrix::zeros(self.field, rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                if self.rng.gen_bool(density) {
                    m[(i, j)] = self.scalar();
                }
            }
        }
        m
    }

    /// A random tensor with `s = −τ(s)`.
    pub fn skew(&mut self, n: usize, density: f64) -> Matrix {
        let m = self.matrix(n, n, density);
        &m - &m.transpose()
    }

    pub fn tensor3(&mut self, n: usize, density: f64) -> Tensor3 {
        let mut t = Tensor3::cube(self.field, n);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if self.rng.gen_bool(density) {
                        t[(i, j, k)] = self.scalar();
                    }
                }
            }
        }
        t
    }

    pub fn cobracket(&mut self, n: usize, density: f64) -> Cobracket {
        Cobracket::new(self.tensor3(n, density), self.tensor3(n, density)).expect("same shape")
    }

    /// `count` distinct items drawn from `items` in a seeded order.
    pub fn choose<T: Clone>(&mut self, items: &[T], count: usize) -> Vec<T> {
        items.choose_multiple(&mut self.rng, count.min(items.len())).cloned().collect()
    }
}

/// APN algebras of dimension `dim` over GF(p) with at most `max_nonzero`
/// structure constants, sampled without replacement.
pub fn sample_apn(field: FieldSpec, dim: usize, max_nonzero: usize, count: usize, seed: u64) -> Result<Vec<ApnAlgebra>> {
    let all = enumerate_apn(field, dim, Some(max_nonzero), SearchConfig::default())?;
    if all.found.is_empty() {
        return Err(Error::InvalidInput("no APN algebra in the requested range".into()));
    }
    Ok(Sampler::new(field, seed).choose(&all.found, count))
}

/// Novikov algebras sampled the same way as [`sample_apn`].
pub fn sample_novikov(field: FieldSpec, dim: usize, max_nonzero: usize, count: usize, seed: u64) -> Result<Vec<NovikovAlgebra>> {
    let all = enumerate_novikov(field, dim, Some(max_nonzero), SearchConfig::default())?;
    Ok(Sampler::new(field, seed).choose(&all.found, count))
}
