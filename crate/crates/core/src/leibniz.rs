//! Leibniz algebras given by structure constants.
//!
//! An algebra of dimension `n` stores `c[i][j][k]` with
//! `[e_i, e_j] = sum_k c[i][j][k] e_k`, flattened as `(i * n + j) * n + k`.
//! The defining identity is the left Leibniz rule
//! `[x, [y, z]] = [[x, y], z] + [y, [x, z]]`.

use crate::error::{Error, Result};
use crate::linalg::{Matrix, Subspace};
use crate::report::IdentityReport;
use crate::scalar::{axpy, is_zero_vec, mul_acc, sub_vec, unit_vec, zero_vec, Field};

#[derive(Clone, Debug, PartialEq)]
pub struct LeibnizAlgebra<F> {
    dim: usize,
    c: Vec<F>,
}

impl<F: Field> LeibnizAlgebra<F> {
    /// Builds an algebra from a flattened structure tensor without checking
    /// the Leibniz identity.
    pub fn new(dim: usize, c: Vec<F>) -> Result<Self> {
        if c.len() != dim * dim * dim {
            return Err(Error::dimension("structure tensor", dim * dim * dim, c.len()));
        }
        Ok(LeibnizAlgebra { dim, c })
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize, usize) -> F) -> Self {
        let mut c = Vec::with_capacity(dim * dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                for k in 0..dim {
                    c.push(f(i, j, k));
                }
            }
        }
        LeibnizAlgebra { dim, c }
    }

    /// Algebra with the listed nonzero brackets `[e_i, e_j] += coeff * e_k`.
    pub fn from_entries(dim: usize, entries: &[(usize, usize, usize, F)]) -> Self {
        let mut g = Self::abelian(dim);
        for (i, j, k, v) in entries {
            let idx = g.index(*i, *j, *k);
            g.c[idx] += v;
        }
        g
    }

    pub fn abelian(dim: usize) -> Self {
        LeibnizAlgebra {
            dim,
            c: zero_vec(dim * dim * dim),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn structure_constants(&self) -> &[F] {
        &self.c
    }

    #[inline]
    fn index(&self, i: usize, j: usize, k: usize) -> usize {
        (i * self.dim + j) * self.dim + k
    }

    pub fn constant(&self, i: usize, j: usize, k: usize) -> &F {
        &self.c[self.index(i, j, k)]
    }

    /// `[e_i, e_j]` as a coordinate slice.
    pub fn bracket_basis(&self, i: usize, j: usize) -> &[F] {
        let start = self.index(i, j, 0);
        &self.c[start..start + self.dim]
    }

    /// Bilinear extension of the structure constants.
    pub fn bracket(&self, x: &[F], y: &[F]) -> Result<Vec<F>> {
        self.check_len(x)?;
        self.check_len(y)?;
        Ok(self.bracket_unchecked(x, y))
    }

    pub(crate) fn bracket_unchecked(&self, x: &[F], y: &[F]) -> Vec<F> {
        let mut out = zero_vec(self.dim);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let coeff = xi.clone() * yj;
                axpy(&mut out, &coeff, self.bracket_basis(i, j));
            }
        }
        out
    }

    fn check_len(&self, v: &[F]) -> Result<()> {
        if v.len() != self.dim {
            return Err(Error::dimension("algebra vector", self.dim, v.len()));
        }
        Ok(())
    }

    /// Matrix of `ad_L(e_i) = [e_i, -]`, acting on column vectors.
    pub fn left_multiplication(&self, i: usize) -> Matrix<F> {
        Matrix::from_fn(self.dim, self.dim, |k, j| self.constant(i, j, k).clone())
    }

    /// Matrix of `ad_R(e_i) = [-, e_i]`.
    pub fn right_multiplication(&self, i: usize) -> Matrix<F> {
        Matrix::from_fn(self.dim, self.dim, |k, j| self.constant(j, i, k).clone())
    }

    fn e(&self, i: usize) -> Vec<F> {
        unit_vec(self.dim, i)
    }

    /// Evaluates the Leibniz defect
    /// `[e_i,[e_j,e_k]] - [[e_i,e_j],e_k] - [e_j,[e_i,e_k]]` on every basis triple.
    pub fn check_leibniz(&self) -> IdentityReport<F> {
        let n = self.dim;
        let mut report = IdentityReport::new();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let lhs = self.bracket_unchecked(&self.e(i), self.bracket_basis(j, k));
                    let t1 = self.bracket_unchecked(self.bracket_basis(i, j), &self.e(k));
                    let t2 = self.bracket_unchecked(&self.e(j), self.bracket_basis(i, k));
                    let defect = sub_vec(&sub_vec(&lhs, &t1), &t2);
                    report.record("leibniz", &[i, j, k], defect);
                }
            }
        }
        report
    }

    pub fn is_leibniz(&self) -> bool {
        self.check_leibniz().holds
    }

    /// Errors with the first witness when the Leibniz identity fails.
    pub fn require_leibniz(&self) -> Result<()> {
        let report = self.check_leibniz();
        match report.witnesses.first() {
            None => Ok(()),
            Some(w) => Err(Error::NotLeibniz(format!(
                "{} failing triples, first at {:?}",
                report.failures, w.indices
            ))),
        }
    }

    /// Left center `{x : [x, y] = 0 for all y}`, as the kernel of
    /// `x -> ([x, e_j])_j`.
    pub fn left_center(&self) -> Subspace<F> {
        let n = self.dim;
        let stacked = Matrix::from_fn(n * n, n, |row, i| {
            let (j, k) = (row / n, row % n);
            self.constant(i, j, k).clone()
        });
        let kernel = stacked.kernel_basis();
        Subspace::span(n, &kernel.basis)
    }

    /// Span of all brackets `[e_i, e_j]`.
    pub fn derived_subalgebra(&self) -> Subspace<F> {
        let n = self.dim;
        let brackets: Vec<Vec<F>> = (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .map(|(i, j)| self.bracket_basis(i, j).to_vec())
            .filter(|v| !is_zero_vec(v))
            .collect();
        Subspace::span(n, &brackets)
    }

    /// Antisymmetry of the structure constants.
    pub fn is_lie(&self) -> bool {
        let n = self.dim;
        (0..n).all(|i| {
            (0..n).all(|j| {
                (0..n).all(|k| *self.constant(i, j, k) == -self.constant(j, i, k).clone())
            })
        })
    }

    /// Polarized form of `[x, x] in Z(g)`: `[[e_i,e_j] + [e_j,e_i], e_k] = 0`.
    pub fn square_in_center_check(&self) -> IdentityReport<F> {
        let n = self.dim;
        let mut report = IdentityReport::new();
        for i in 0..n {
            for j in 0..n {
                let mut sym = self.bracket_basis(i, j).to_vec();
                axpy(&mut sym, &F::one(), self.bracket_basis(j, i));
                for k in 0..n {
                    let defect = self.bracket_unchecked(&sym, &self.e(k));
                    report.record("square_in_center", &[i, j, k], defect);
                }
            }
        }
        report
    }

    /// Checks that the left center is a two-sided ideal: `[e_i, z] in Z(g)`
    /// and `[z, e_i] = 0` for every center basis vector `z`.
    pub fn center_ideal_check(&self) -> IdentityReport<F> {
        let center = self.left_center();
        let n = self.dim;
        let mut report = IdentityReport::new();
        for (zi, z) in center.basis.iter().enumerate() {
            for i in 0..n {
                let right = self.bracket_unchecked(&self.e(i), z);
                if !center.contains(&right) {
                    report.record("center_ideal.right", &[i, zi], right);
                }
                let left = self.bracket_unchecked(z, &self.e(i));
                report.record("center_ideal.left", &[zi, i], left);
            }
        }
        report
    }

    /// Quotient `g / Z(g)`.
    ///
    /// The complement of the center is spanned by the standard basis vectors
    /// outside the pivot columns of the center's RREF basis. Returns the
    /// induced algebra and the projection matrix `(n - dim Z) x n`.
    pub fn quotient_by_left_center(&self) -> Result<(LeibnizAlgebra<F>, Matrix<F>)> {
        let n = self.dim;
        let center = self.left_center();
        let d = center.dim();
        let pivots = if d == 0 {
            Vec::new()
        } else {
            Matrix::from_rows(n, center.basis.clone())?.rref().pivot_columns
        };
        let complement: Vec<usize> = (0..n).filter(|j| !pivots.contains(j)).collect();
        let mut columns = center.basis.clone();
        columns.extend(complement.iter().map(|&j| self.e(j)));
        let change = Matrix::from_columns(n, &columns)?;
        let inv = change
            .inverse()
            .ok_or_else(|| Error::Internal("center complement is not a basis".into()))?;
        let q = complement.len();
        let projection = Matrix::from_fn(q, n, |a, j| inv[(d + a, j)].clone());

        let ideal = self.center_ideal_check();
        if !ideal.holds {
            return Err(Error::Internal(format!(
                "left center is not an ideal ({} failures)",
                ideal.failures
            )));
        }
        let quotient = LeibnizAlgebra::from_fn(q, |a, b, k| {
            let br = self.bracket_basis(complement[a], complement[b]);
            let mut acc = F::zero();
            for (j, x) in br.iter().enumerate() {
                mul_acc(&mut acc, &projection[(k, j)], x);
            }
            acc
        });
        if !quotient.is_lie() {
            return Err(Error::Internal(
                "quotient by the left center is not antisymmetric".into(),
            ));
        }
        Ok((quotient, projection))
    }
}
