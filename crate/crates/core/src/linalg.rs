//! Dense vectors and matrices over a [`FieldSpec`], with fraction-free
//! (Bareiss) elimination. Every solve is re-checked by substitution.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Vector {
    field: FieldSpec,
    data: Vec<Scalar>,
}

impl Vector {
    pub fn zeros(field: FieldSpec, n: usize) -> Self {
        Vector { field, data: vec![field.zero(); n] }
    }

    pub fn basis(field: FieldSpec, n: usize, i: usize) -> Self {
        let mut v = Vector::zeros(field, n);
        v.data[i] = field.one();
        v
    }

    pub fn from_vec(field: FieldSpec, data: Vec<Scalar>) -> Self {
        debug_assert!(data.iter().all(|s| s.field() == field));
        Vector { field, data }
    }

    pub fn from_i64(field: FieldSpec, data: &[i64]) -> Self {
        Vector { field, data: data.iter().map(|&v| field.int(v)).collect() }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn len(&self) -> usize {
        self.data.len()
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn as_slice(&self) -> &[Scalar] {
        &self.data
    }

    pub fn into_vec(self) -> Vec<Scalar> {
        self.data
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Scalar> {
        self.data.iter()
    }

    pub fn scale(&self, c: &Scalar) -> Vector {
        Vector { field: self.field, data: self.data.iter().map(|x| x * c).collect() }
    }

    pub fn dot(&self, other: &Vector) -> Scalar {
        assert_eq!(self.len(), other.len(), "dot of vectors of different length");
        let mut acc = self.field.zero();
        for (a, b) in self.data.iter().zip(&other.data) {
            if !a.is_zero() && !b.is_zero() {
                acc += &(a * b);
            }
        }
        acc
    }

    /// `self += c * other`.
    pub fn axpy(&mut self, c: &Scalar, other: &Vector) {
        assert_eq!(self.len(), other.len(), "axpy of vectors of different length");
        if c.is_zero() {
            return;
        }
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            if !b.is_zero() {
                *a += &(c * b);
            }
        }
    }

    /// Concatenation, used for direct sums.
    pub fn concat(&self, other: &Vector) -> Vector {
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Vector { field: self.field, data }
    }

    pub fn slice(&self, start: usize, len: usize) -> Vector {
        Vector { field: self.field, data: self.data[start..start + len].to_vec() }
    }
}

impl Index<usize> for Vector {
    type Output = Scalar;
    fn index(&self, i: usize) -> &Scalar {
        &self.data[i]
    }
}

impl IndexMut<usize> for Vector {
    fn index_mut(&mut self, i: usize) -> &mut Scalar {
        &mut self.data[i]
    }
}

impl fmt::Debug for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, x) in self.data.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "]")
    }
}

fn zip_with(a: &Vector, b: &Vector, f: impl Fn(&Scalar, &Scalar) -> Scalar) -> Vector {
    assert_eq!(a.len(), b.len(), "vector length mismatch");
    Vector { field: a.field, data: a.data.iter().zip(&b.data).map(|(x, y)| f(x, y)).collect() }
}

macro_rules! vector_binop {
    ($tr:ident, $m:ident, $op:tt) => {
        impl $tr<&Vector> for &Vector {
            type Output = Vector;
            fn $m(self, rhs: &Vector) -> Vector {
                zip_with(self, rhs, |x, y| x $op y)
            }
        }
        impl $tr<Vector> for Vector {
            type Output = Vector;
            fn $m(self, rhs: Vector) -> Vector {
                &self $op &rhs
            }
        }
        impl $tr<&Vector> for Vector {
            type Output = Vector;
            fn $m(self, rhs: &Vector) -> Vector {
                &self $op rhs
            }
        }
        impl $tr<Vector> for &Vector {
            type Output = Vector;
            fn $m(self, rhs: Vector) -> Vector {
                self $op &rhs
            }
        }
    };
}
vector_binop!(Add, add, +);
vector_binop!(Sub, sub, -);

impl Neg for &Vector {
    type Output = Vector;
    fn neg(self) -> Vector {
        Vector { field: self.field, data: self.data.iter().map(|x| -x).collect() }
    }
}

impl Neg for Vector {
    type Output = Vector;
    fn neg(self) -> Vector {
        -&self
    }
}

/// Row-major dense matrix acting on column vectors.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: FieldSpec,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(field: FieldSpec, rows: usize, cols: usize) -> Self {
        Matrix { field, rows, cols, data: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m[(i, i)] = field.one();
        }
        m
    }

    pub fn from_rows(field: FieldSpec, rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::dim("ragged matrix rows"));
        }
        if rows.iter().flatten().any(|s| s.field() != field) {
            return Err(Error::FieldMismatch(format!("matrix entry not in {field}")));
        }
        Ok(Matrix { field, rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    pub fn from_i64(field: FieldSpec, rows: &[&[i64]]) -> Self {
        let data = rows.iter().map(|r| r.iter().map(|&v| field.int(v)).collect()).collect();
        Matrix::from_rows(field, data).expect("rectangular literal")
    }

    /// Matrix whose j-th column is `cols[j]`.
    pub fn from_columns(field: FieldSpec, rows: usize, cols: &[Vector]) -> Self {
        let mut m = Matrix::zeros(field, rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            assert_eq!(c.len(), rows, "column length mismatch");
            for i in 0..rows {
                m[(i, j)] = c[i].clone();
            }
        }
        m
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn row(&self, i: usize) -> Vector {
        Vector::from_vec(self.field, self.data[i * self.cols..(i + 1) * self.cols].to_vec())
    }

    pub fn column(&self, j: usize) -> Vector {
        Vector::from_vec(self.field, (0..self.rows).map(|i| self[(i, j)].clone()).collect())
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        Matrix { field: self.field, rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| x * c).collect() }
    }

    pub fn apply(&self, v: &Vector) -> Vector {
        assert_eq!(self.cols, v.len(), "matrix-vector dimension mismatch");
        let mut out = Vector::zeros(self.field, self.rows);
        for j in 0..self.cols {
            let vj = &v[j];
            if vj.is_zero() {
                continue;
            }
            for i in 0..self.rows {
                let a = &self[(i, j)];
                if !a.is_zero() {
                    out[i] += &(a * vj);
                }
            }
        }
        out
    }

    pub fn matmul(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "matrix product dimension mismatch");
        let mut out = Matrix::zeros(self.field, self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += &(a * b);
                    }
                }
            }
        }
        out
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    /// Block matrix `[[a, b], [c, d]]`.
    pub fn block(a: &Matrix, b: &Matrix, c: &Matrix, d: &Matrix) -> Matrix {
        assert!(a.rows == b.rows && c.rows == d.rows && a.cols == c.cols && b.cols == d.cols, "block shape mismatch");
        let mut m = Matrix::zeros(a.field, a.rows + c.rows, a.cols + b.cols);
        for (blk, r0, c0) in [(a, 0, 0), (b, 0, a.cols), (c, a.rows, 0), (d, a.rows, a.cols)] {
            for i in 0..blk.rows {
                for j in 0..blk.cols {
                    m[(r0 + i, c0 + j)] = blk[(i, j)].clone();
                }
            }
        }
        m
    }

    pub fn direct_sum(a: &Matrix, d: &Matrix) -> Matrix {
        let f = a.field;
        Matrix::block(a, &Matrix::zeros(f, a.rows, d.cols), &Matrix::zeros(f, d.rows, a.cols), d)
    }

    /// Sub-block of size `r × c` at `(r0, c0)`.
    pub fn submatrix(&self, r0: usize, c0: usize, r: usize, c: usize) -> Matrix {
        let mut m = Matrix::zeros(self.field, r, c);
        for i in 0..r {
            for j in 0..c {
                m[(i, j)] = self[(r0 + i, c0 + j)].clone();
            }
        }
        m
    }

    pub fn rank(&self) -> usize {
        let mut work = self.clone();
        bareiss(&mut work, self.cols).pivots.len()
    }

    pub fn det(&self) -> Result<Scalar> {
        if !self.is_square() {
            return Err(Error::dim("determinant of a non-square matrix"));
        }
        let n = self.rows;
        if n == 0 {
            return Ok(self.field.one());
        }
        let mut work = self.clone();
        let e = bareiss(&mut work, n);
        if e.pivots.len() < n {
            return Ok(self.field.zero());
        }
        let d = work[(n - 1, n - 1)].clone();
        Ok(if e.swaps % 2 == 1 { -d } else { d })
    }

    /// One solution of `self · x = b`, or `None` when inconsistent.
    pub fn solve(&self, b: &Vector) -> Result<Option<Vector>> {
        if b.len() != self.rows {
            return Err(Error::dim("right-hand side length"));
        }
        let mut aug = Matrix::zeros(self.field, self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, self.cols)] = b[i].clone();
        }
        let e = bareiss(&mut aug, self.cols);
        for i in e.pivots.len()..self.rows {
            if !aug[(i, self.cols)].is_zero() {
                return Ok(None);
            }
        }
        let x = back_substitute(&aug, &e.pivots, self.cols, |r| aug[(r, self.cols)].clone(), None);
        let check = self.apply(&x);
        assert_eq!(&check, b, "back-substitution check failed");
        Ok(Some(x))
    }

    pub fn inverse(&self) -> Result<Matrix> {
        if !self.is_square() {
            return Err(Error::dim("inverse of a non-square matrix"));
        }
        let n = self.rows;
        let mut cols = Vec::with_capacity(n);
        for j in 0..n {
            match self.solve(&Vector::basis(self.field, n, j))? {
                Some(c) => cols.push(c),
                None => return Err(Error::Singular),
            }
        }
        let inv = Matrix::from_columns(self.field, n, &cols);
        assert_eq!(self.matmul(&inv), Matrix::identity(self.field, n), "inverse check failed");
        Ok(inv)
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    /// Basis of the kernel, one vector per free column.
    pub fn nullspace(&self) -> Vec<Vector> {
        let mut work = self.clone();
        let e = bareiss(&mut work, self.cols);
        let free: Vec<usize> = (0..self.cols).filter(|c| !e.pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let x = back_substitute(&work, &e.pivots, self.cols, |_| self.field.zero(), Some(f));
                debug_assert!(self.apply(&x).is_zero());
                x
            })
            .collect()
    }
}

struct Echelon {
    pivots: Vec<usize>,
    swaps: usize,
}

/// Bareiss elimination on the first `ncols` columns; the pivot is the first
/// nonzero entry at or below the current row.
fn bareiss(m: &mut Matrix, ncols: usize) -> Echelon {
    let f = m.field;
    let mut prev = f.one();
    let mut pivots = Vec::new();
    let mut swaps = 0;
    let mut r = 0;
    for c in 0..ncols {
        if r == m.rows {
            break;
        }
        let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else { continue };
        if p != r {
            for j in 0..m.cols {
                m.data.swap(p * m.cols + j, r * m.cols + j);
            }
            swaps += 1;
        }
        let piv = m[(r, c)].clone();
        let prev_inv = prev.inv().expect("previous pivot is nonzero");
        for i in r + 1..m.rows {
            let factor = m[(i, c)].clone();
            for j in 0..m.cols {
                let v = &(&piv * &m[(i, j)]) - &(&factor * &m[(r, j)]);
                m[(i, j)] = &v * &prev_inv;
            }
        }
        // Rows above the pivot row and earlier columns are left in echelon form.
        prev = piv;
        pivots.push(c);
        r += 1;
    }
    Echelon { pivots, swaps }
}

/// Back substitution on an echelon matrix. `free_one` sets that free column to
/// one (kernel vectors); all other free columns are zero.
fn back_substitute(
    m: &Matrix,
    pivots: &[usize],
    ncols: usize,
    rhs: impl Fn(usize) -> Scalar,
    free_one: Option<usize>,
) -> Vector {
    let f = m.field;
    let mut x = Vector::zeros(f, ncols);
    if let Some(c) = free_one {
        x[c] = f.one();
    }
    for (r, &pc) in pivots.iter().enumerate().rev() {
        let mut acc = rhs(r);
        for j in pc + 1..ncols {
            if !x[j].is_zero() {
                acc -= &(&m[(r, j)] * &x[j]);
            }
        }
        x[pc] = &acc * &m[(r, pc)].inv().expect("pivot is nonzero");
    }
    x
}

impl Index<(usize, usize)> for Matrix {
    type Output = Scalar;
    fn index(&self, (i, j): (usize, usize)) -> &Scalar {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Scalar {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[")?;
        for i in 0..self.rows {
            writeln!(f, "  {:?}", self.row(i))?;
        }
        write!(f, "]")
    }
}

fn mat_zip(a: &Matrix, b: &Matrix, f: impl Fn(&Scalar, &Scalar) -> Scalar) -> Matrix {
    assert!(a.rows == b.rows && a.cols == b.cols, "matrix shape mismatch");
    Matrix { field: a.field, rows: a.rows, cols: a.cols, data: a.data.iter().zip(&b.data).map(|(x, y)| f(x, y)).collect() }
}

macro_rules! matrix_binop {
    ($tr:ident, $m:ident, $op:tt) => {
        impl $tr<&Matrix> for &Matrix {
            type Output = Matrix;
            fn $m(self, rhs: &Matrix) -> Matrix {
                mat_zip(self, rhs, |x, y| x $op y)
            }
        }
        impl $tr<Matrix> for Matrix {
            type Output = Matrix;
            fn $m(self, rhs: Matrix) -> Matrix {
                &self $op &rhs
            }
        }
        impl $tr<&Matrix> for Matrix {
            type Output = Matrix;
            fn $m(self, rhs: &Matrix) -> Matrix {
                &self $op rhs
            }
        }
        impl $tr<Matrix> for &Matrix {
            type Output = Matrix;
            fn $m(self, rhs: Matrix) -> Matrix {
                self $op &rhs
            }
        }
    };
}
matrix_binop!(Add, add, +);
matrix_binop!(Sub, sub, -);

impl Mul<&Matrix> for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        self.matmul(rhs)
    }
}

impl Mul<Matrix> for Matrix {
    type Output = Matrix;
    fn mul(self, rhs: Matrix) -> Matrix {
        self.matmul(&rhs)
    }
}

impl Mul<&Vector> for &Matrix {
    type Output = Vector;
    fn mul(self, rhs: &Vector) -> Vector {
        self.apply(rhs)
    }
}

impl Neg for &Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        Matrix { field: self.field, rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| -x).collect() }
    }
}

impl Neg for Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: FieldSpec = FieldSpec::Rational;

    #[test]
    fn det_and_inverse() {
        let m = Matrix::from_i64(Q, &[&[0, 2, 1], &[1, 1, 0], &[3, 0, 1]]);
        // Cofactor expansion by hand: 0*(1) - 2*(1) + 1*(-3) = -5.
        assert_eq!(m.det().unwrap(), Q.int(-5));
        let inv = m.inverse().unwrap();
        assert_eq!(&m * &inv, Matrix::identity(Q, 3));
        let sing = Matrix::from_i64(Q, &[&[1, 2], &[2, 4]]);
        assert!(matches!(sing.inverse(), Err(Error::Singular)));
        assert_eq!(sing.rank(), 1);
    }

    #[test]
    fn solve_and_nullspace() {
        let f = FieldSpec::Prime(5);
        let m = Matrix::from_i64(f, &[&[1, 2, 3], &[2, 4, 2]]);
        let b = Vector::from_i64(f, &[1, 0]);
        let x = m.solve(&b).unwrap().unwrap();
        assert_eq!(m.apply(&x), b);
        let ns = m.nullspace();
        assert_eq!(ns.len(), 1);
        assert!(m.apply(&ns[0]).is_zero());
        let inconsistent = Matrix::from_i64(f, &[&[1, 1], &[2, 2]]);
        assert!(inconsistent.solve(&Vector::from_i64(f, &[1, 1])).unwrap().is_none());
    }

    #[test]
    fn det_sign_with_row_swap() {
        let m = Matrix::from_i64(Q, &[&[0, 1], &[1, 0]]);
        assert_eq!(m.det().unwrap(), Q.int(-1));
    }
}
