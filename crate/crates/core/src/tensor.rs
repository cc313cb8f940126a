//! Three-leg tensors, leg permutations, and the 2-tensor flip.
//!
//! A 2-tensor `s = Σ s[i][j] eᵢ⊗eⱼ` is stored as a [`Matrix`] whose `(i, j)`
//! entry is the coefficient of `eᵢ⊗eⱼ`.

use std::ops::{Add, Index, IndexMut, Neg, Sub};

use crate::field::{FieldSpec, Scalar};
use crate::linalg::{Matrix, Vector};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Tensor3 {
    field: FieldSpec,
    dims: [usize; 3],
    data: Vec<Scalar>,
}

impl Tensor3 {
    pub fn zeros(field: FieldSpec, dims: [usize; 3]) -> Self {
        Tensor3 { field, dims, data: vec![field.zero(); dims[0] * dims[1] * dims[2]] }
    }

    /// Square tensor with all legs of dimension `n`.
    pub fn cube(field: FieldSpec, n: usize) -> Self {
        Tensor3::zeros(field, [n, n, n])
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn dims(&self) -> [usize; 3] {
        self.dims
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    fn offset(&self, i: usize, j: usize, k: usize) -> usize {
        debug_assert!(i < self.dims[0] && j < self.dims[1] && k < self.dims[2]);
        (i * self.dims[1] + j) * self.dims[2] + k
    }

    /// `x ⊗ y ⊗ z`.
    pub fn outer(x: &Vector, y: &Vector, z: &Vector) -> Self {
        let mut t = Tensor3::zeros(x.field(), [x.len(), y.len(), z.len()]);
        for i in 0..x.len() {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..y.len() {
                if y[j].is_zero() {
                    continue;
                }
                let xy = &x[i] * &y[j];
                for k in 0..z.len() {
                    let o = t.offset(i, j, k);
                    t.data[o] = &xy * &z[k];
                }
            }
        }
        t
    }

    pub fn scale(&self, c: &Scalar) -> Tensor3 {
        Tensor3 { field: self.field, dims: self.dims, data: self.data.iter().map(|x| x * c).collect() }
    }

    /// Slice with the first leg fixed: a `dims[1] × dims[2]` matrix.
    pub fn slab(&self, i: usize) -> Matrix {
        let mut m = Matrix::zeros(self.field, self.dims[1], self.dims[2]);
        for j in 0..self.dims[1] {
            for k in 0..self.dims[2] {
                m[(j, k)] = self[(i, j, k)].clone();
            }
        }
        m
    }

    /// Rearranges legs: the output's leg `k` is the input's leg `perm.0[k]`.
    pub fn permute(&self, perm: Perm3) -> Tensor3 {
        let p = perm.0;
        let dims = [self.dims[p[0]], self.dims[p[1]], self.dims[p[2]]];
        let mut out = Tensor3::zeros(self.field, dims);
        for i in 0..self.dims[0] {
            for j in 0..self.dims[1] {
                for k in 0..self.dims[2] {
                    let src = [i, j, k];
                    out[(src[p[0]], src[p[1]], src[p[2]])] = self[(i, j, k)].clone();
                }
            }
        }
        out
    }

    /// `(X ⊗ Y ⊗ Z) t`.
    pub fn apply_maps(&self, x: &Matrix, y: &Matrix, z: &Matrix) -> Tensor3 {
        assert!(x.cols() == self.dims[0] && y.cols() == self.dims[1] && z.cols() == self.dims[2], "map/leg mismatch");
        let mut out = Tensor3::zeros(self.field, [x.rows(), y.rows(), z.rows()]);
        for i in 0..self.dims[0] {
            for j in 0..self.dims[1] {
                for k in 0..self.dims[2] {
                    let c = &self[(i, j, k)];
                    if c.is_zero() {
                        continue;
                    }
                    for a in 0..x.rows() {
                        let ca = c * &x[(a, i)];
                        if ca.is_zero() {
                            continue;
                        }
                        for b in 0..y.rows() {
                            let cab = &ca * &y[(b, j)];
                            if cab.is_zero() {
                                continue;
                            }
                            for d in 0..z.rows() {
                                let v = &cab * &z[(d, k)];
                                out[(a, b, d)] += &v;
                            }
                        }
                    }
                }
            }
        }
        out
    }
}

impl Index<(usize, usize, usize)> for Tensor3 {
    type Output = Scalar;
    fn index(&self, (i, j, k): (usize, usize, usize)) -> &Scalar {
        &self.data[self.offset(i, j, k)]
    }
}

impl IndexMut<(usize, usize, usize)> for Tensor3 {
    fn index_mut(&mut self, (i, j, k): (usize, usize, usize)) -> &mut Scalar {
        let o = self.offset(i, j, k);
        &mut self.data[o]
    }
}

fn t_zip(a: &Tensor3, b: &Tensor3, f: impl Fn(&Scalar, &Scalar) -> Scalar) -> Tensor3 {
    assert_eq!(a.dims, b.dims, "tensor shape mismatch");
    Tensor3 { field: a.field, dims: a.dims, data: a.data.iter().zip(&b.data).map(|(x, y)| f(x, y)).collect() }
}

macro_rules! tensor_binop {
    ($tr:ident, $m:ident, $op:tt) => {
        impl $tr<&Tensor3> for &Tensor3 {
            type Output = Tensor3;
            fn $m(self, rhs: &Tensor3) -> Tensor3 {
                t_zip(self, rhs, |x, y| x $op y)
            }
        }
        impl $tr<Tensor3> for Tensor3 {
            type Output = Tensor3;
            fn $m(self, rhs: Tensor3) -> Tensor3 {
                &self $op &rhs
            }
        }
        impl $tr<&Tensor3> for Tensor3 {
            type Output = Tensor3;
            fn $m(self, rhs: &Tensor3) -> Tensor3 {
                &self $op rhs
            }
        }
    };
}
tensor_binop!(Add, add, +);
tensor_binop!(Sub, sub, -);

impl Neg for &Tensor3 {
    type Output = Tensor3;
    fn neg(self) -> Tensor3 {
        Tensor3 { field: self.field, dims: self.dims, data: self.data.iter().map(|x| -x).collect() }
    }
}

impl Neg for Tensor3 {
    type Output = Tensor3;
    fn neg(self) -> Tensor3 {
        -&self
    }
}

/// A permutation of three tensor legs; output leg `k` takes input leg `self.0[k]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Perm3(pub [usize; 3]);

impl Perm3 {
    pub const ID: Perm3 = Perm3([0, 1, 2]);
    /// x⊗y⊗z ↦ y⊗x⊗z
    pub const S12: Perm3 = Perm3([1, 0, 2]);
    /// x⊗y⊗z ↦ z⊗y⊗x
    pub const S13: Perm3 = Perm3([2, 1, 0]);
    /// x⊗y⊗z ↦ x⊗z⊗y
    pub const S23: Perm3 = Perm3([0, 2, 1]);
    /// x⊗y⊗z ↦ z⊗x⊗y
    pub const S132: Perm3 = Perm3([2, 0, 1]);
    /// x⊗y⊗z ↦ y⊗z⊗x
    pub const S123: Perm3 = Perm3([1, 2, 0]);
}

/// Flip of a 2-tensor: `τ(Σ aᵢ⊗bᵢ) = Σ bᵢ⊗aᵢ`.
pub fn tau2(s: &Matrix) -> Matrix {
    s.transpose()
}

/// `(X ⊗ Y) s = X s Yᵀ` for a 2-tensor stored as a matrix.
pub fn apply2(x: &Matrix, y: &Matrix, s: &Matrix) -> Matrix {
    x.matmul(s).matmul(&y.transpose())
}

/// `x ⊗ y` as a 2-tensor.
pub fn outer2(x: &Vector, y: &Vector) -> Matrix {
    let mut m = Matrix::zeros(x.field(), x.len(), y.len());
    for i in 0..x.len() {
        for j in 0..y.len() {
            m[(i, j)] = &x[i] * &y[j];
        }
    }
    m
}
