use crate::error::{Error, Result};
use crate::leibniz::LeibnizAlgebra;
use crate::linalg::Matrix;
use crate::report::IdentityReport;
use crate::scalar::Field;

use super::cochain::Cochain;

/// A representation `(V, l, r)` of a Leibniz algebra.
///
/// `l[i]` and `r[i]` are the `m x m` matrices of `l_{e_i}` and `r_{e_i}`
/// acting on column vectors: entry `(a, b)` is the `v_a` coordinate of the
/// image of `v_b`.
#[derive(Clone, Debug, PartialEq)]
pub struct Representation<F> {
    pub algebra: LeibnizAlgebra<F>,
    pub vdim: usize,
    pub l: Vec<Matrix<F>>,
    pub r: Vec<Matrix<F>>,
}

impl<F: Field> Representation<F> {
    /// Shape-checked constructor; the representation identities are checked by
    /// [`Representation::check`].
    pub fn new(
        algebra: LeibnizAlgebra<F>,
        vdim: usize,
        l: Vec<Matrix<F>>,
        r: Vec<Matrix<F>>,
    ) -> Result<Self> {
        let n = algebra.dim();
        if l.len() != n {
            return Err(Error::dimension("left action matrices", n, l.len()));
        }
        if r.len() != n {
            return Err(Error::dimension("right action matrices", n, r.len()));
        }
        for m in l.iter().chain(&r) {
            if m.rows() != vdim || m.cols() != vdim {
                return Err(Error::Input(format!(
                    "action matrix is {}x{}, expected {vdim}x{vdim}",
                    m.rows(),
                    m.cols()
                )));
            }
        }
        Ok(Representation {
            algebra,
            vdim,
            l,
            r,
        })
    }

    pub fn n(&self) -> usize {
        self.algebra.dim()
    }

    fn combine(matrices: &[Matrix<F>], x: &[F], m: usize) -> Matrix<F> {
        let mut out = Matrix::zeros(m, m);
        for (xi, mat) in x.iter().zip(matrices) {
            if !xi.is_zero() {
                out = out.add(&mat.scale(xi));
            }
        }
        out
    }

    /// `l_x` for an arbitrary vector `x`.
    pub fn l_of(&self, x: &[F]) -> Matrix<F> {
        Self::combine(&self.l, x, self.vdim)
    }

    /// `r_x` for an arbitrary vector `x`.
    pub fn r_of(&self, x: &[F]) -> Matrix<F> {
        Self::combine(&self.r, x, self.vdim)
    }

    pub fn right_is_zero(&self) -> bool {
        self.r.iter().all(Matrix::is_zero)
    }

    /// Checks the three representation identities on all basis pairs.
    pub fn check(&self) -> IdentityReport<F> {
        let n = self.n();
        let mut report = IdentityReport::new();
        for i in 0..n {
            for j in 0..n {
                let br = self.algebra.bracket_basis(i, j);
                let c1 = self.l_of(br).sub(&self.l[i].commutator(&self.l[j]));
                report.record("rep.l_bracket", &[i, j], c1.entries().to_vec());
                let c2 = self.r_of(br).sub(&self.l[i].commutator(&self.r[j]));
                report.record("rep.r_bracket", &[i, j], c2.entries().to_vec());
                let c3 = self.r[j].mul(&self.l[i]).add(&self.r[j].mul(&self.r[i]));
                report.record("rep.r_l_compat", &[i, j], c3.entries().to_vec());
            }
        }
        report
    }

    pub fn require_valid(&self) -> Result<()> {
        let report = self.check();
        match report.witnesses.first() {
            None => Ok(()),
            Some(w) => Err(Error::InvalidRepresentation(format!(
                "{} fails at {:?}",
                w.check, w.indices
            ))),
        }
    }

    /// `(V, l, 0)`, which is a representation whenever `(V, l, r)` is.
    pub fn left_only(&self) -> Self {
        Representation {
            algebra: self.algebra.clone(),
            vdim: self.vdim,
            l: self.l.clone(),
            r: vec![Matrix::zeros(self.vdim, self.vdim); self.n()],
        }
    }
}

/// The trivial representation `(R, 0, 0)`.
pub fn trivial_rep<F: Field>(g: &LeibnizAlgebra<F>) -> Representation<F> {
    let n = g.dim();
    Representation {
        algebra: g.clone(),
        vdim: 1,
        l: vec![Matrix::zeros(1, 1); n],
        r: vec![Matrix::zeros(1, 1); n],
    }
}

/// The adjoint representation `(g, ad_L, ad_R)`.
pub fn adjoint_rep<F: Field>(g: &LeibnizAlgebra<F>) -> Representation<F> {
    let n = g.dim();
    Representation {
        algebra: g.clone(),
        vdim: n,
        l: (0..n).map(|i| g.left_multiplication(i)).collect(),
        r: (0..n).map(|i| g.right_multiplication(i)).collect(),
    }
}

/// Dual of `(V, l, 0)`: `l*_x = -l_x^T` on `V*`, right action zero.
pub fn dual_rep<F: Field>(rep: &Representation<F>) -> Result<Representation<F>> {
    if !rep.right_is_zero() {
        return Err(Error::InvalidRepresentation(
            "only representations with zero right action are dualized".into(),
        ));
    }
    let minus = -F::one();
    Ok(Representation {
        algebra: rep.algebra.clone(),
        vdim: rep.vdim,
        l: rep.l.iter().map(|m| m.transpose().scale(&minus)).collect(),
        r: rep.r.clone(),
    })
}

/// `(V* (x) V, l* (x) 1 + 1 (x) l, 0)` realised on `m x m` matrices, where the
/// action is `A -> [l_x, A]`. Basis: elementary matrices `E_ab`, row-major.
pub fn conjugation_rep<F: Field>(rep: &Representation<F>) -> Result<Representation<F>> {
    if !rep.right_is_zero() {
        return Err(Error::InvalidRepresentation(
            "conjugation representation needs zero right action".into(),
        ));
    }
    let m = rep.vdim;
    let dim = m * m;
    let l = rep
        .l
        .iter()
        .map(|li| {
            // [l, E_cd] = sum_a l_ac E_ad - sum_b l_db E_cb
            let mut out = Matrix::zeros(dim, dim);
            for a in 0..m {
                for b in 0..m {
                    let row = a * m + b;
                    for c in 0..m {
                        if !li[(a, c)].is_zero() {
                            out[(row, c * m + b)] += &li[(a, c)];
                        }
                        if !li[(c, b)].is_zero() {
                            out[(row, a * m + c)] -= &li[(c, b)];
                        }
                    }
                }
            }
            out
        })
        .collect();
    Ok(Representation {
        algebra: rep.algebra.clone(),
        vdim: dim,
        l,
        r: vec![Matrix::zeros(dim, dim); rep.n()],
    })
}

/// The right action `x -> r_x` as a 1-cochain valued in the conjugation
/// representation (matrices flattened row-major).
pub fn right_action_cochain<F: Field>(rep: &Representation<F>) -> Cochain<F> {
    let m = rep.vdim;
    Cochain::from_fn(1, rep.n(), m * m, |t| rep.r[t[0]].entries().to_vec())
}
