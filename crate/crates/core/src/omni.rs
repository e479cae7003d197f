//! Omni-Lie algebras `ol(V) = gl(V) + V` and graphs of maps `V -> gl(V)`.
//!
//! Ambient coordinates on `gl(V) + V`: the `m^2` entries of the matrix part
//! (row-major, so index `a * m + b` is `E_ab`) followed by the `m` entries of
//! the vector part.

use crate::error::{Error, Result};
use crate::leibniz::LeibnizAlgebra;
use crate::linalg::{Matrix, Subspace};
use crate::report::IdentityReport;
use crate::scalar::{axpy, Field};

/// `ol(V)` for `dim V = m` with bracket `[A+u, B+v] = [A,B] + Av`.
pub fn omni_lie<F: Field>(m: usize) -> LeibnizAlgebra<F> {
    let mm = m * m;
    let g = LeibnizAlgebra::from_fn(mm + m, |i, j, k| {
        let one = F::one();
        match (i < mm, j < mm, k < mm) {
            // [E_ab, E_cd] = d_bc E_ad - d_da E_cb
            (true, true, true) => {
                let (a, b, c, d) = (i / m, i % m, j / m, j % m);
                let (e, f) = (k / m, k % m);
                let mut v = F::zero();
                if b == c && e == a && f == d {
                    v += &one;
                }
                if d == a && e == c && f == b {
                    v -= &one;
                }
                v
            }
            // E_ab v_c = d_bc v_a
            (true, false, false) => {
                let (a, b, c) = (i / m, i % m, j - mm);
                if b == c && k - mm == a {
                    one
                } else {
                    F::zero()
                }
            }
            _ => F::zero(),
        }
    });
    debug_assert!(m > 2 || g.is_leibniz());
    g
}

fn split<F: Field>(m: usize, x: &[F]) -> (Matrix<F>, &[F]) {
    let mm = m * m;
    let a = Matrix::from_vec(m, m, x[..mm].to_vec()).expect("m*m entries");
    (a, &x[mm..])
}

/// `[A+u, B+v] = [A,B] + Av` on ambient coordinate vectors, computed with
/// matrix arithmetic rather than structure constants.
pub fn omni_bracket<F: Field>(m: usize, x: &[F], y: &[F]) -> Result<Vec<F>> {
    let d = m * m + m;
    if x.len() != d {
        return Err(Error::dimension("omni element", d, x.len()));
    }
    if y.len() != d {
        return Err(Error::dimension("omni element", d, y.len()));
    }
    let (a, _) = split(m, x);
    let (b, v) = split(m, y);
    let mut out = a.commutator(&b).entries().to_vec();
    out.extend(a.mul_vec(v));
    Ok(out)
}

/// Ambient coordinates of `A + u`.
pub fn omni_element<F: Field>(a: &Matrix<F>, u: &[F]) -> Vec<F> {
    let mut out = a.entries().to_vec();
    out.extend_from_slice(u);
    out
}

/// A linear map `phi: V -> gl(V)`, `phi(u) = sum_i u^i phi_i`.
#[derive(Clone, Debug, PartialEq)]
pub struct GraphMap<F> {
    pub vdim: usize,
    /// `phi[i] = phi(v_i)`.
    pub phi: Vec<Matrix<F>>,
}

impl<F: Field> GraphMap<F> {
    pub fn new(vdim: usize, phi: Vec<Matrix<F>>) -> Result<Self> {
        if phi.len() != vdim {
            return Err(Error::dimension("graph map matrices", vdim, phi.len()));
        }
        if let Some(bad) = phi.iter().find(|p| p.rows() != vdim || p.cols() != vdim) {
            return Err(Error::Input(format!(
                "graph map matrix is {}x{}, expected {vdim}x{vdim}",
                bad.rows(),
                bad.cols()
            )));
        }
        Ok(GraphMap { vdim, phi })
    }

    pub fn apply(&self, u: &[F]) -> Matrix<F> {
        let mut out = Matrix::zeros(self.vdim, self.vdim);
        for (ui, p) in u.iter().zip(&self.phi) {
            if !ui.is_zero() {
                out = out.add(&p.scale(ui));
            }
        }
        out
    }

    /// `[phi(u), phi(v)] = phi(phi(u) v)` on basis pairs; check name `graph`.
    pub fn graph_check(&self) -> IdentityReport<F> {
        let m = self.vdim;
        let mut report = IdentityReport::new();
        for i in 0..m {
            for j in 0..m {
                let lhs = self.phi[i].commutator(&self.phi[j]);
                let rhs = self.apply(&self.phi[i].column(j));
                report.record("graph", &[i, j], lhs.sub(&rhs).entries().to_vec());
            }
        }
        report
    }

    pub fn require_graph(&self) -> Result<()> {
        let report = self.graph_check();
        match report.witnesses.first() {
            None => Ok(()),
            Some(w) => Err(Error::InvalidGraphMap(format!(
                "[phi(u),phi(v)] = phi(phi(u)v) fails at {:?}",
                w.indices
            ))),
        }
    }

    /// `(V, [u,v]_phi = phi(u) v)`; rejects maps failing the graph condition.
    pub fn induced_leibniz(&self) -> Result<LeibnizAlgebra<F>> {
        self.require_graph()?;
        let g = LeibnizAlgebra::from_fn(self.vdim, |i, j, k| self.phi[i][(k, j)].clone());
        if !g.is_leibniz() {
            return Err(Error::Internal("induced bracket fails the Leibniz identity".into()));
        }
        Ok(g)
    }

    /// Ambient coordinates of `phi(u) + u`.
    pub fn graph_element(&self, u: &[F]) -> Vec<F> {
        omni_element(&self.apply(u), u)
    }

    /// `G_phi` as a subspace of `gl(V) + V`.
    pub fn graph(&self) -> Subspace<F> {
        let m = self.vdim;
        let vectors: Vec<Vec<F>> = (0..m)
            .map(|i| self.graph_element(&crate::scalar::unit_vec(m, i)))
            .collect();
        Subspace::span(m * m + m, &vectors)
    }
}

/// Checks that `G_phi` is closed under the omni bracket. Check name `graph_closed`.
pub fn graph_closure_check<F: Field>(phi: &GraphMap<F>) -> IdentityReport<F> {
    let m = phi.vdim;
    let mut report = IdentityReport::new();
    for i in 0..m {
        for j in 0..m {
            let x = phi.graph_element(&crate::scalar::unit_vec(m, i));
            let y = phi.graph_element(&crate::scalar::unit_vec(m, j));
            let br = omni_bracket(m, &x, &y).expect("ambient sizes match");
            // br is in G_phi iff it equals phi(w) + w for its own vector part w
            let w = br[m * m..].to_vec();
            let mut defect = br.clone();
            axpy(&mut defect, &-F::one(), &phi.graph_element(&w));
            report.record("graph_closed", &[i, j], defect);
        }
    }
    report
}
