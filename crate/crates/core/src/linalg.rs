//! Dense exact linear algebra: row reduction, rank, kernels and solving.
//!
//! Matrices are stored row-major. Elimination is plain Gauss-Jordan over the
//! scalar field; with [`Rational`](crate::Rational) every intermediate value is
//! reduced to lowest terms, so there is no drift and no tolerance.

use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::{is_zero_vec, mul_acc, Field};

#[derive(Clone, PartialEq)]
pub struct Matrix<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

/// Result of [`Matrix::rref`].
#[derive(Clone, Debug, PartialEq)]
pub struct Rref<F> {
    pub matrix: Matrix<F>,
    pub rank: usize,
    pub pivot_columns: Vec<usize>,
}

impl<F: Field> Matrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![F::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = F::one();
        }
        m
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<F>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::dimension(
                "matrix entries",
                rows * cols,
                data.len(),
            ));
        }
        Ok(Matrix { rows, cols, data })
    }

    /// Builds a matrix from rows; every row must have `cols` entries.
    pub fn from_rows(cols: usize, rows: Vec<Vec<F>>) -> Result<Self> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for row in rows {
            if row.len() != cols {
                return Err(Error::dimension("matrix row", cols, row.len()));
            }
            data.extend(row);
        }
        Ok(Matrix {
            rows: n,
            cols,
            data,
        })
    }

    /// Matrix whose columns are the given vectors, each of length `rows`.
    pub fn from_columns(rows: usize, columns: &[Vec<F>]) -> Result<Self> {
        let mut m = Self::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            if col.len() != rows {
                return Err(Error::dimension("matrix column", rows, col.len()));
            }
            for (i, x) in col.iter().enumerate() {
                m[(i, j)] = x.clone();
            }
        }
        Ok(m)
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> F) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[F] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[F] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<F> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<F>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vec(&self.data)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn scale(&self, factor: &F) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x.clone() * factor).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a.clone() + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a.clone() - b)
                .collect(),
        }
    }

    /// Matrix product. Zero entries of `self` are skipped, which keeps the
    /// sparse coboundary matrices cheap to compose.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                let src = other.row(k);
                let dst = &mut out.data[i * other.cols..(i + 1) * other.cols];
                for (d, b) in dst.iter_mut().zip(src) {
                    mul_acc(d, a, b);
                }
            }
        }
        out
    }

    /// Commutator `self * other - other * self`.
    pub fn commutator(&self, other: &Self) -> Self {
        self.mul(other).sub(&other.mul(self))
    }

    /// Matrix-vector product; zero entries on either side are skipped.
    pub fn mul_vec(&self, v: &[F]) -> Vec<F> {
        assert_eq!(self.cols, v.len(), "matrix-vector shape mismatch");
        (0..self.rows)
            .map(|i| {
                let mut acc = F::zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        mul_acc(&mut acc, a, b);
                    }
                }
                acc
            })
            .collect()
    }

    /// Reduced row echelon form, rank and pivot columns.
    pub fn rref(&self) -> Rref<F> {
        let mut m = self.clone();
        let pivot_columns = m.reduce_in_place();
        Rref {
            rank: pivot_columns.len(),
            matrix: m,
            pivot_columns,
        }
    }

    pub fn rank(&self) -> usize {
        // Eliminate along the shorter side.
        if self.cols < self.rows {
            self.transpose().reduce_in_place().len()
        } else {
            self.clone().reduce_in_place().len()
        }
    }

    /// Gauss-Jordan elimination; returns the pivot columns.
    fn reduce_in_place(&mut self) -> Vec<usize> {
        let (rows, cols) = (self.rows, self.cols);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(p) = (r..rows).find(|&i| !self[(i, c)].is_zero()) else {
                continue;
            };
            self.swap_rows(r, p);
            let inv = F::one() / &self[(r, c)];
            for x in &mut self.data[r * cols + c..(r + 1) * cols] {
                if !x.is_zero() {
                    *x = x.clone() * &inv;
                }
            }
            let pivot_row: Vec<F> = self.data[r * cols + c..(r + 1) * cols].to_vec();
            for i in 0..rows {
                if i == r {
                    continue;
                }
                let factor = self[(i, c)].clone();
                if factor.is_zero() {
                    continue;
                }
                let dst = &mut self.data[i * cols + c..(i + 1) * cols];
                for (d, s) in dst.iter_mut().zip(&pivot_row) {
                    if !s.is_zero() {
                        *d -= &(factor.clone() * s);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        let cols = self.cols;
        for j in 0..cols {
            self.data.swap(a * cols + j, b * cols + j);
        }
    }

    /// Basis of the null space `{x : self * x = 0}`.
    pub fn kernel_basis(&self) -> Subspace<F> {
        let Rref {
            matrix,
            pivot_columns,
            ..
        } = self.rref();
        let n = self.cols;
        let mut is_pivot = vec![false; n];
        for &p in &pivot_columns {
            is_pivot[p] = true;
        }
        let basis = (0..n)
            .filter(|&f| !is_pivot[f])
            .map(|free| {
                let mut x = vec![F::zero(); n];
                x[free] = F::one();
                for (row, &p) in pivot_columns.iter().enumerate() {
                    x[p] = -matrix[(row, free)].clone();
                }
                x
            })
            .collect();
        Subspace {
            ambient_dim: n,
            basis,
        }
    }

    /// Some `x` with `self * x = b`, or `None` when the system is inconsistent.
    pub fn solve(&self, b: &[F]) -> Result<Option<Vec<F>>> {
        if b.len() != self.rows {
            return Err(Error::dimension("right-hand side", self.rows, b.len()));
        }
        let mut aug = Self::zeros(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, self.cols)] = b[i].clone();
        }
        let pivots = aug.reduce_in_place();
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![F::zero(); self.cols];
        for (row, &p) in pivots.iter().enumerate() {
            x[p] = aug[(row, self.cols)].clone();
        }
        Ok(Some(x))
    }

    /// Inverse of a square matrix, if it exists.
    pub fn inverse(&self) -> Option<Self> {
        assert_eq!(self.rows, self.cols, "inverse of a non-square matrix");
        let n = self.rows;
        let mut aug = Self::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n + i)] = F::one();
        }
        let pivots = aug.reduce_in_place();
        if pivots.len() < n || (n > 0 && pivots[n - 1] >= n) {
            return None;
        }
        Some(Self::from_fn(n, n, |i, j| aug[(i, n + j)].clone()))
    }
}

impl<F> std::ops::Index<(usize, usize)> for Matrix<F> {
    type Output = F;
    fn index(&self, (i, j): (usize, usize)) -> &F {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl<F> std::ops::IndexMut<(usize, usize)> for Matrix<F> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut F {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl<F: fmt::Debug> fmt::Debug for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{:?}", self.data[i * self.cols + j])?;
            }
        }
        write!(f, "]")
    }
}

/// A subspace of `F^ambient_dim` given by linearly independent vectors.
#[derive(Clone, Debug, PartialEq)]
pub struct Subspace<F> {
    pub ambient_dim: usize,
    pub basis: Vec<Vec<F>>,
}

impl<F: Field> Subspace<F> {
    pub fn zero(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: Vec::new(),
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: (0..ambient_dim)
                .map(|i| crate::scalar::unit_vec(ambient_dim, i))
                .collect(),
        }
    }

    /// Span of arbitrary vectors, returned as the nonzero rows of their RREF.
    pub fn span(ambient_dim: usize, vectors: &[Vec<F>]) -> Self {
        if vectors.is_empty() {
            return Self::zero(ambient_dim);
        }
        let m = Matrix::from_rows(ambient_dim, vectors.to_vec())
            .expect("span: vector length differs from ambient dimension");
        let Rref { matrix, rank, .. } = m.rref();
        Subspace {
            ambient_dim,
            basis: (0..rank).map(|i| matrix.row(i).to_vec()).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Matrix whose columns are the basis vectors.
    pub fn basis_matrix(&self) -> Matrix<F> {
        Matrix::from_columns(self.ambient_dim, &self.basis)
            .expect("subspace basis vectors have ambient length")
    }

    /// Coordinates of `v` in this basis, or `None` when `v` is outside the span.
    pub fn coordinates(&self, v: &[F]) -> Option<Vec<F>> {
        assert_eq!(v.len(), self.ambient_dim);
        if self.basis.is_empty() {
            return is_zero_vec(v).then(Vec::new);
        }
        self.basis_matrix()
            .solve(v)
            .expect("coordinates: lengths checked")
    }

    pub fn contains(&self, v: &[F]) -> bool {
        self.coordinates(v).is_some()
    }

    /// Linear combination of the basis with the given coordinates.
    pub fn combine(&self, coords: &[F]) -> Vec<F> {
        assert_eq!(coords.len(), self.basis.len());
        let mut out = vec![F::zero(); self.ambient_dim];
        for (c, b) in coords.iter().zip(&self.basis) {
            crate::scalar::axpy(&mut out, c, b);
        }
        out
    }

    /// True when both spaces have the same span.
    pub fn same_span(&self, other: &Self) -> bool {
        self.ambient_dim == other.ambient_dim
            && self.dim() == other.dim()
            && other.basis.iter().all(|v| self.contains(v))
    }
}

/// Precomputed coordinate map for a fixed subspace basis.
///
/// Repeated membership solves against the same basis are replaced by a single
/// left inverse: `coords(v) = P v`, valid whenever `B P v = v`.
#[derive(Clone, Debug)]
pub struct CoordinateMap<F> {
    basis: Matrix<F>,
    left_inverse: Matrix<F>,
}

impl<F: Field> CoordinateMap<F> {
    pub fn new(space: &Subspace<F>) -> Self {
        let basis = space.basis_matrix();
        let d = space.dim();
        // Pick d independent rows of B (pivot columns of B^T) and invert that block.
        let pivots = basis.transpose().rref().pivot_columns;
        debug_assert_eq!(pivots.len(), d);
        let block = Matrix::from_fn(d, d, |i, j| basis[(pivots[i], j)].clone());
        let inv = block.inverse().expect("independent basis has invertible pivot block");
        let mut left_inverse = Matrix::zeros(d, space.ambient_dim);
        for i in 0..d {
            for (jj, &p) in pivots.iter().enumerate() {
                left_inverse[(i, p)] = inv[(i, jj)].clone();
            }
        }
        CoordinateMap {
            basis,
            left_inverse,
        }
    }

    pub fn dim(&self) -> usize {
        self.left_inverse.rows()
    }

    /// Coordinates of `v`, or `None` if `v` lies outside the subspace.
    pub fn coordinates(&self, v: &[F]) -> Option<Vec<F>> {
        let coords = self.left_inverse.mul_vec(v);
        (self.basis.mul_vec(&coords) == v).then_some(coords)
    }

    pub fn embed(&self, coords: &[F]) -> Vec<F> {
        self.basis.mul_vec(coords)
    }
}
