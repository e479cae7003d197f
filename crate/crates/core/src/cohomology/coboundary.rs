//! The coboundary
//!
//! ```text
//! dc(x_1..x_{k+1}) = sum_{i=1}^{k} (-1)^{i+1} l_{x_i} c(x_1..^x_i..x_{k+1})
//!                  + (-1)^{k+1} r_{x_{k+1}} c(x_1..x_k)
//!                  + sum_{i<j} (-1)^i c(x_1..^x_i..x_{j-1}, [x_i, x_j], x_{j+1}..x_{k+1})
//! ```
//!
//! evaluated two ways: [`coboundary`] gathers the formula on every output
//! tuple, while [`coboundary_column`] scatters the contribution of a single
//! basis cochain. Matrices are built from the scatter route.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::report::IdentityReport;
use crate::scalar::{axpy, Field};

use super::cochain::{tuple_index, tuple_of, Cochain};
use super::representation::Representation;

pub const DEFAULT_CAP: usize = 20_000;

/// Environment variable overriding [`DEFAULT_CAP`].
pub const CAP_ENV: &str = "LEIBNIZ_KIT_CAP";

/// Size guard for dense cochain matrices.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest allowed cochain-space dimension `n^k * m` for any matrix side.
    pub cap: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { cap: DEFAULT_CAP }
    }
}

impl Limits {
    pub fn with_cap(cap: usize) -> Self {
        Limits { cap }
    }

    /// Default limits, overridden by `LEIBNIZ_KIT_CAP` when set. A value that
    /// is not a non-negative integer is an input error.
    pub fn from_env() -> Result<Self> {
        match std::env::var(CAP_ENV) {
            Err(_) => Ok(Limits::default()),
            Ok(v) => v
                .trim()
                .parse()
                .map(Limits::with_cap)
                .map_err(|_| Error::Input(format!("{CAP_ENV}={v:?} is not a non-negative integer"))),
        }
    }

    /// Fails with [`Error::ResourceCap`] when `dim` exceeds the cap.
    pub fn check(&self, what: impl Into<String>, dim: usize) -> Result<()> {
        if dim > self.cap {
            return Err(Error::ResourceCap {
                what: what.into(),
                dim,
                cap: self.cap,
            });
        }
        Ok(())
    }
}

fn cochain_dim(n: usize, k: usize, m: usize) -> usize {
    n.checked_pow(k as u32)
        .and_then(|p| p.checked_mul(m))
        .unwrap_or(usize::MAX)
}

/// Applies the coboundary to `c` by evaluating the formula on every basis tuple.
pub fn coboundary<F: Field>(rep: &Representation<F>, c: &Cochain<F>) -> Result<Cochain<F>> {
    let n = rep.n();
    let m = rep.vdim;
    if c.n != n {
        return Err(Error::dimension("cochain algebra dimension", n, c.n));
    }
    if c.m != m {
        return Err(Error::dimension("cochain value dimension", m, c.m));
    }
    let k = c.degree;
    let g = &rep.algebra;
    Ok(Cochain::from_fn(k + 1, n, m, |x| {
        let mut out = vec![F::zero(); m];
        let mut rest = Vec::with_capacity(k);
        for p in 0..k {
            rest.clear();
            rest.extend(x.iter().enumerate().filter(|&(q, _)| q != p).map(|(_, &v)| v));
            let term = rep.l[x[p]].mul_vec(c.value(&rest));
            axpy(&mut out, &F::sign(p), &term);
        }
        let term = rep.r[x[k]].mul_vec(c.value(&x[..k]));
        axpy(&mut out, &F::sign(k + 1), &term);
        for a in 0..=k {
            for b in a + 1..=k {
                // remove x_a, put [x_a, x_b] in place of x_b
                let prefix: Vec<usize> = x[..a].iter().chain(&x[a + 1..b]).copied().collect();
                let suffix = &x[b + 1..];
                let term = c.value_with_vector(&prefix, g.bracket_basis(x[a], x[b]), suffix);
                axpy(&mut out, &F::sign(a + 1), &term);
            }
        }
        out
    }))
}

/// Sparse data the scatter route reads: brackets grouped by output coordinate
/// (`by_target[t]` lists `(s, u, c[s][u][t])`) and the nonzero entries of
/// every column of every `l_s` and `r_s` (`l_cols[s][a]` lists `(b, l_s[b][a])`).
struct ScatterPlan<F> {
    by_target: Vec<Vec<(usize, usize, F)>>,
    l_cols: Vec<Vec<Vec<(usize, F)>>>,
    r_cols: Vec<Vec<Vec<(usize, F)>>>,
}

fn sparse_columns<F: Field>(ms: &[Matrix<F>]) -> Vec<Vec<Vec<(usize, F)>>> {
    ms.iter()
        .map(|mat| {
            let mut cols = vec![Vec::new(); mat.cols()];
            for b in 0..mat.rows() {
                for (a, v) in mat.row(b).iter().enumerate() {
                    if !v.is_zero() {
                        cols[a].push((b, v.clone()));
                    }
                }
            }
            cols
        })
        .collect()
}

impl<F: Field> ScatterPlan<F> {
    fn new(rep: &Representation<F>) -> Self {
        let n = rep.n();
        let mut by_target = vec![Vec::new(); n];
        for s in 0..n {
            for u in 0..n {
                for (t, v) in rep.algebra.bracket_basis(s, u).iter().enumerate() {
                    if !v.is_zero() {
                        by_target[t].push((s, u, v.clone()));
                    }
                }
            }
        }
        ScatterPlan {
            by_target,
            l_cols: sparse_columns(&rep.l),
            r_cols: sparse_columns(&rep.r),
        }
    }
}

/// Column of the degree-`k` coboundary matrix for basis cochain `col`,
/// as sorted `(row, value)` pairs with zero entries dropped.
pub fn coboundary_column<F: Field>(rep: &Representation<F>, k: usize, col: usize) -> Vec<(usize, F)> {
    let plan = ScatterPlan::new(rep);
    let mut acc = HashMap::new();
    scatter(rep, &plan, k, col, &F::one(), &mut acc);
    sorted_nonzero(acc)
}

fn sorted_nonzero<F: Field>(acc: HashMap<usize, F>) -> Vec<(usize, F)> {
    let mut out: Vec<(usize, F)> = acc.into_iter().filter(|(_, v)| !v.is_zero()).collect();
    out.sort_by_key(|(row, _)| *row);
    out
}

fn scatter<F: Field>(
    rep: &Representation<F>,
    plan: &ScatterPlan<F>,
    k: usize,
    col: usize,
    scale: &F,
    acc: &mut HashMap<usize, F>,
) {
    let n = rep.n();
    let m = rep.vdim;
    let (t_idx, a) = (col / m, col % m);
    let t = tuple_of(t_idx, k, n);
    let mut add = |tuple: &[usize], b: usize, value: F| {
        let row = tuple_index(tuple, n) * m + b;
        *acc.entry(row).or_insert_with(F::zero) += &value;
    };
    let mut out = Vec::with_capacity(k + 1);

    for p in 0..k {
        let sign = F::sign(p) * scale;
        for s in 0..n {
            let entries = &plan.l_cols[s][a];
            if entries.is_empty() {
                continue;
            }
            out.clear();
            out.extend_from_slice(&t[..p]);
            out.push(s);
            out.extend_from_slice(&t[p..]);
            for (b, coeff) in entries {
                add(&out, *b, coeff.clone() * &sign);
            }
        }
    }

    let sign = F::sign(k + 1) * scale;
    for s in 0..n {
        let entries = &plan.r_cols[s][a];
        if entries.is_empty() {
            continue;
        }
        out.clear();
        out.extend_from_slice(&t);
        out.push(s);
        for (b, coeff) in entries {
            add(&out, *b, coeff.clone() * &sign);
        }
    }

    for p in 0..k {
        for (s, u, coeff) in &plan.by_target[t[p]] {
            let value = coeff.clone() * scale;
            for i in 0..=p {
                out.clear();
                out.extend_from_slice(&t[..i]);
                out.push(*s);
                out.extend_from_slice(&t[i..p]);
                out.push(*u);
                out.extend_from_slice(&t[p + 1..]);
                add(&out, a, if i % 2 == 0 { -value.clone() } else { value.clone() });
            }
        }
    }
}

/// Matrix of the coboundary `C^k -> C^{k+1}` in the lexicographic monomial
/// basis, `(n^{k+1} m) x (n^k m)`.
pub fn coboundary_matrix<F: Field>(
    rep: &Representation<F>,
    k: usize,
    limits: &Limits,
) -> Result<Matrix<F>> {
    let (n, m) = (rep.n(), rep.vdim);
    let cols = cochain_dim(n, k, m);
    let rows = cochain_dim(n, k + 1, m);
    limits.check(format!("C^{} (rows of the degree-{k} coboundary)", k + 1), rows)?;
    let plan = ScatterPlan::new(rep);
    let mut mat = Matrix::zeros(rows, cols);
    let mut acc = HashMap::new();
    for col in 0..cols {
        acc.clear();
        scatter(rep, &plan, k, col, &F::one(), &mut acc);
        for (row, v) in acc.drain() {
            mat[(row, col)] = v;
        }
    }
    Ok(mat)
}

/// Verifies that `d_{k+1} d_k = 0` column by column without materialising
/// either matrix: each column of `d_k` is pushed through `d_{k+1}` by the
/// scatter route. Witness indices are `(column, first nonzero row)`.
pub fn complex_square_check<F: Field>(rep: &Representation<F>, k: usize) -> IdentityReport<F> {
    let (n, m) = (rep.n(), rep.vdim);
    let plan = ScatterPlan::new(rep);
    let mut report = IdentityReport::new();
    let mut first = HashMap::new();
    let mut second = HashMap::new();
    for col in 0..cochain_dim(n, k, m) {
        first.clear();
        scatter(rep, &plan, k, col, &F::one(), &mut first);
        second.clear();
        for (row, v) in first.drain() {
            if !v.is_zero() {
                scatter(rep, &plan, k + 1, row, &v, &mut second);
            }
        }
        if second.values().all(|v| v.is_zero()) {
            continue;
        }
        let nonzero = sorted_nonzero(std::mem::take(&mut second));
        if let Some((row, _)) = nonzero.first() {
            let defect = nonzero.iter().take(8).map(|(_, v)| v.clone()).collect();
            report.record("d_squared", &[col, *row], defect);
        }
    }
    report
}

/// Dimensions in one degree of a cochain complex.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DegreeBetti {
    pub k: usize,
    pub dim_c: usize,
    pub rank_d: usize,
    pub dim_ker: usize,
    pub dim_h: usize,
}

/// Betti numbers `dim H^k = dim ker d_k - rank d_{k-1}` for `0 <= k <= k_max`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiReport {
    pub degrees: Vec<DegreeBetti>,
}

impl BettiReport {
    /// Builds a report from the ranks of `d_0, ..., d_{k_max}`.
    pub fn from_ranks(cochain_dims: &[usize], ranks: &[usize]) -> Self {
        let mut degrees = Vec::with_capacity(ranks.len());
        for (k, (&dim_c, &rank_d)) in cochain_dims.iter().zip(ranks).enumerate() {
            let dim_ker = dim_c - rank_d;
            let incoming = if k == 0 { 0 } else { ranks[k - 1] };
            degrees.push(DegreeBetti {
                k,
                dim_c,
                rank_d,
                dim_ker,
                dim_h: dim_ker - incoming,
            });
        }
        BettiReport { degrees }
    }

    pub fn dims(&self) -> Vec<usize> {
        self.degrees.iter().map(|d| d.dim_h).collect()
    }

    pub fn dim_h(&self, k: usize) -> Option<usize> {
        self.degrees.get(k).map(|d| d.dim_h)
    }
}

/// Leibniz cohomology dimensions of `rep` up to degree `k_max`.
pub fn betti<F: Field>(rep: &Representation<F>, k_max: usize, limits: &Limits) -> Result<BettiReport> {
    let (n, m) = (rep.n(), rep.vdim);
    let mut dims = Vec::with_capacity(k_max + 1);
    let mut ranks = Vec::with_capacity(k_max + 1);
    for k in 0..=k_max {
        let d = coboundary_matrix(rep, k, limits)?;
        dims.push(cochain_dim(n, k, m));
        ranks.push(d.rank());
    }
    Ok(BettiReport::from_ranks(&dims, &ranks))
}

/// True iff `c` is a cocycle.
pub fn cocycle_check<F: Field>(rep: &Representation<F>, c: &Cochain<F>) -> Result<bool> {
    Ok(cocycle_report(rep, c)?.holds)
}

/// Reports every basis tuple on which `dc` is nonzero. `dc` is accumulated
/// column by column over the nonzero coefficients of `c`.
pub fn cocycle_report<F: Field>(rep: &Representation<F>, c: &Cochain<F>) -> Result<IdentityReport<F>> {
    let (n, m) = (rep.n(), rep.vdim);
    if c.n != n {
        return Err(Error::dimension("cochain algebra dimension", n, c.n));
    }
    if c.m != m {
        return Err(Error::dimension("cochain value dimension", m, c.m));
    }
    let plan = ScatterPlan::new(rep);
    let mut acc = HashMap::new();
    for (col, v) in c.coeffs.iter().enumerate() {
        if !v.is_zero() {
            scatter(rep, &plan, c.degree, col, v, &mut acc);
        }
    }
    let mut report = IdentityReport::new();
    let mut current: Option<(usize, Vec<F>)> = None;
    for (row, v) in sorted_nonzero(acc) {
        let t_idx = row / m;
        if current.as_ref().is_none_or(|(t, _)| *t != t_idx) {
            if let Some((t, value)) = current.take() {
                report.record("cocycle", &tuple_of(t, c.degree + 1, n), value);
            }
            current = Some((t_idx, vec![F::zero(); m]));
        }
        if let Some((_, value)) = current.as_mut() {
            value[row % m] = v;
        }
    }
    if let Some((t, value)) = current {
        report.record("cocycle", &tuple_of(t, c.degree + 1, n), value);
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cohomology::{adjoint_rep, conjugation_rep, dual_rep, right_action_cochain, trivial_rep};
    use crate::fixtures;
    use crate::scalar::{is_zero_vec, Rational};

    type Q = Rational;

    fn q(n: i64) -> Q {
        Q::from_i64(n)
    }

    fn reps_for(g: &crate::LeibnizAlgebra<Q>) -> Vec<(&'static str, Representation<Q>)> {
        let adj = adjoint_rep(g);
        let left = adj.left_only();
        vec![
            ("trivial", trivial_rep(g)),
            ("adjoint", adj),
            ("dual", dual_rep(&left).unwrap()),
            ("conjugation", conjugation_rep(&left).unwrap()),
        ]
    }

    #[test]
    fn trivial_abelian_coboundary_vanishes() {
        let rep = trivial_rep(&fixtures::abelian::<Q>(2));
        for k in 0..4 {
            assert!(coboundary_matrix(&rep, k, &Limits::default()).unwrap().is_zero());
        }
    }

    #[test]
    fn trivial_degree_one_on_l2() {
        let rep = trivial_rep(&fixtures::l2::<Q>());
        // xi = e1^*
        let xi = Cochain::new(1, 2, 1, vec![q(0), q(1)]).unwrap();
        let d = coboundary(&rep, &xi).unwrap();
        assert_eq!(d.value(&[0, 0]), &[q(-1)]);
        assert_eq!(d.value(&[0, 1]), &[q(0)]);
    }

    #[test]
    fn adjoint_degree_zero_is_minus_right_bracket() {
        for (name, g) in fixtures::positive_algebras::<Q>() {
            let rep = adjoint_rep(&g);
            let n = g.dim();
            for v in 0..n {
                let c = Cochain::basis(0, n, n, v);
                let d = coboundary(&rep, &c).unwrap();
                for x in 0..n {
                    let expected: Vec<Q> = g.bracket_basis(v, x).iter().map(|a| -a.clone()).collect();
                    assert_eq!(d.value(&[x]), expected.as_slice(), "{name}");
                }
            }
            let d0 = coboundary_matrix(&rep, 0, &Limits::default()).unwrap();
            assert!(d0.kernel_basis().same_span(&g.left_center()), "{name}");
        }
    }

    #[test]
    fn adjoint_l2_degree_zero_matrix() {
        let rep = adjoint_rep(&fixtures::l2::<Q>());
        let d0 = coboundary_matrix(&rep, 0, &Limits::default()).unwrap();
        assert_eq!((d0.rows(), d0.cols()), (4, 2));
        assert_eq!(d0.rank(), 1);
    }

    #[test]
    fn gather_and_scatter_agree() {
        for (name, g) in fixtures::positive_algebras::<Q>().into_iter().filter(|(_, g)| g.dim() <= 4) {
            for (rname, rep) in reps_for(&g) {
                let (n, m) = (rep.n(), rep.vdim);
                for k in 0..3 {
                    if n.pow(k as u32 + 1) * m > 600 {
                        continue;
                    }
                    let d = coboundary_matrix(&rep, k, &Limits::default()).unwrap();
                    for col in 0..n.pow(k as u32) * m {
                        let direct = coboundary(&rep, &Cochain::basis(k, n, m, col)).unwrap();
                        assert_eq!(direct.coeffs, d.column(col), "{name}/{rname} k={k} col={col}");
                    }
                }
            }
        }
    }

    #[test]
    fn square_is_zero_as_matrices() {
        for (name, g) in fixtures::positive_algebras::<Q>().into_iter().filter(|(_, g)| g.dim() <= 3) {
            for (rname, rep) in reps_for(&g) {
                for k in 0..2 {
                    let lim = Limits::default();
                    let Ok(d1) = coboundary_matrix(&rep, k + 1, &lim) else { continue };
                    let d0 = coboundary_matrix(&rep, k, &lim).unwrap();
                    assert!(d1.mul(&d0).is_zero(), "{name}/{rname} k={k}");
                    assert!(complex_square_check(&rep, k).holds, "{name}/{rname} k={k}");
                }
            }
        }
    }

    #[test]
    fn invalid_rep_breaks_square() {
        let rep = fixtures::l2_bad_right_action::<Q>();
        let broken = (0..2).any(|k| !complex_square_check(&rep, k).holds);
        assert!(broken);
    }

    #[test]
    fn resource_cap_refuses() {
        let rep = adjoint_rep(&fixtures::heis3::<Q>());
        let err = coboundary_matrix(&rep, 3, &Limits::with_cap(100)).unwrap_err();
        assert!(matches!(err, Error::ResourceCap { dim: 243, cap: 100, .. }));
        assert!(betti(&rep, 3, &Limits::with_cap(100)).is_err());
    }

    #[test]
    fn betti_examples() {
        let lim = Limits::default();
        let ab = betti(&trivial_rep(&fixtures::abelian::<Q>(2)), 3, &lim).unwrap();
        assert_eq!(ab.dims(), vec![1, 2, 4, 8]);

        let l2_triv = betti(&trivial_rep(&fixtures::l2::<Q>()), 2, &lim).unwrap();
        assert_eq!(l2_triv.dim_h(1), Some(1));

        let l2_adj = betti(&adjoint_rep(&fixtures::l2::<Q>()), 1, &lim).unwrap();
        assert_eq!(l2_adj.dim_h(0), Some(1));
    }

    #[test]
    fn right_action_is_a_cocycle() {
        for (name, g) in fixtures::positive_algebras::<Q>().into_iter().filter(|(_, g)| g.dim() <= 4) {
            let adj = adjoint_rep(&g);
            let conj = conjugation_rep(&adj.left_only()).unwrap();
            let r = right_action_cochain(&adj);
            assert!(cocycle_check(&conj, &r).unwrap(), "{name}");
        }
    }

    #[test]
    fn zero_and_non_cocycles() {
        let adj = adjoint_rep(&fixtures::l2::<Q>());
        assert!(cocycle_check(&adj, &Cochain::zero(1, 2, 2)).unwrap());
        // identity 1-cochain: d(id)(e0, e0) = [e0,e0] - [e0,e0] - [e0,e0] != 0
        let id = Cochain::from_fn(1, 2, 2, |t| crate::scalar::unit_vec(2, t[0]));
        let report = cocycle_report(&adj, &id).unwrap();
        assert!(!report.holds);
        assert!(!is_zero_vec(&report.witnesses[0].defect));
    }

    #[test]
    fn mismatched_cochain_rejected() {
        let adj = adjoint_rep(&fixtures::l2::<Q>());
        assert!(coboundary(&adj, &Cochain::zero(1, 3, 2)).is_err());
        assert!(coboundary(&adj, &Cochain::zero(1, 2, 1)).is_err());
    }
}
