//! Naive representations `rho = phi + theta: g -> ol(V)` and naive cohomology.
//!
//! Naive cochains take values in the subalgebra `Im(rho)`, stored in the
//! coordinates of a fixed basis of that image. The coboundary
//!
//! ```text
//! dc(x_1..x_{k+1}) = sum_i (-1)^{i+1} [rho(x_i), c(..^x_i..)] + (-1)^{k+1} [c(x_1..x_k), rho(x_{k+1})]
//!                  + sum_{i<j} (-1)^i c(..^x_i.., [x_i,x_j], ..)
//! ```
//!
//! uses the omni bracket. It coincides with the Loday–Pirashvili coboundary of
//! the induced representation `l_x u = [rho(x), u]`, `r_x u = [u, rho(x)]` on
//! `Im(rho)`, which is how the matrices are built.

use crate::cohomology::{
    betti, coboundary, coboundary_matrix, complex_square_check, conjugation_rep, trivial_rep,
    BettiReport, Cochain, Limits, Representation,
};
use crate::error::{Error, Result};
use crate::leibniz::LeibnizAlgebra;
use crate::linalg::{CoordinateMap, Matrix, Subspace};
use crate::omni::{omni_bracket, omni_element, GraphMap};
use crate::report::IdentityReport;
use crate::scalar::{axpy, is_zero_vec, unit_vec, zero_vec, Field};

/// A linear map `rho: g -> gl(V) + V` given on the basis of `g`.
#[derive(Clone, Debug)]
pub struct NaiveRepresentation<F> {
    pub algebra: LeibnizAlgebra<F>,
    pub vdim: usize,
    pub phi: Vec<Matrix<F>>,
    pub theta: Vec<Vec<F>>,
    /// `Im(rho)` inside the `(m^2 + m)`-dimensional ambient space.
    pub image: Subspace<F>,
    coords: CoordinateMap<F>,
}

impl<F: Field> PartialEq for NaiveRepresentation<F> {
    fn eq(&self, other: &Self) -> bool {
        self.algebra == other.algebra
            && self.vdim == other.vdim
            && self.phi == other.phi
            && self.theta == other.theta
    }
}

impl<F: Field> NaiveRepresentation<F> {
    /// Shape-checked constructor; the homomorphism property is checked by
    /// [`NaiveRepresentation::check`].
    pub fn new(algebra: LeibnizAlgebra<F>, vdim: usize, phi: Vec<Matrix<F>>, theta: Vec<Vec<F>>) -> Result<Self> {
        let n = algebra.dim();
        if phi.len() != n {
            return Err(Error::dimension("phi matrices", n, phi.len()));
        }
        if theta.len() != n {
            return Err(Error::dimension("theta vectors", n, theta.len()));
        }
        if let Some(p) = phi.iter().find(|p| p.rows() != vdim || p.cols() != vdim) {
            return Err(Error::Input(format!(
                "phi matrix is {}x{}, expected {vdim}x{vdim}",
                p.rows(),
                p.cols()
            )));
        }
        if let Some(t) = theta.iter().find(|t| t.len() != vdim) {
            return Err(Error::dimension("theta vector", vdim, t.len()));
        }
        let ambient = vdim * vdim + vdim;
        let values: Vec<Vec<F>> = phi.iter().zip(&theta).map(|(p, t)| omni_element(p, t)).collect();
        let image = Subspace::span(ambient, &values);
        let coords = CoordinateMap::new(&image);
        Ok(NaiveRepresentation {
            algebra,
            vdim,
            phi,
            theta,
            image,
            coords,
        })
    }

    pub fn n(&self) -> usize {
        self.algebra.dim()
    }

    pub fn ambient_dim(&self) -> usize {
        self.vdim * self.vdim + self.vdim
    }

    pub fn image_dim(&self) -> usize {
        self.image.dim()
    }

    /// Ambient coordinates of `rho(e_i)`.
    pub fn rho(&self, i: usize) -> Vec<F> {
        omni_element(&self.phi[i], &self.theta[i])
    }

    /// Ambient coordinates of `rho(x)`.
    pub fn rho_of(&self, x: &[F]) -> Vec<F> {
        let mut out = zero_vec(self.ambient_dim());
        for (i, xi) in x.iter().enumerate() {
            if !xi.is_zero() {
                axpy(&mut out, xi, &self.rho(i));
            }
        }
        out
    }

    /// Image coordinates of an ambient vector, or `None` outside `Im(rho)`.
    pub fn image_coordinates(&self, v: &[F]) -> Option<Vec<F>> {
        if self.image.dim() == 0 {
            return is_zero_vec(v).then(Vec::new);
        }
        self.coords.coordinates(v)
    }

    pub fn embed(&self, coords: &[F]) -> Vec<F> {
        self.image.combine(coords)
    }

    fn bracket(&self, x: &[F], y: &[F]) -> Vec<F> {
        omni_bracket(self.vdim, x, y).expect("ambient lengths match")
    }

    /// Checks `phi([x,y]) = [phi(x), phi(y)]` (`naive.con1`),
    /// `theta([x,y]) = phi(x) theta(y)` (`naive.con2`) and the homomorphism
    /// property against the omni bracket (`naive.homomorphism`) on basis
    /// pairs. A pair where the last check disagrees with the first two is
    /// recorded under `naive.agreement`.
    pub fn check(&self) -> IdentityReport<F> {
        let n = self.n();
        let mut report = IdentityReport::new();
        for i in 0..n {
            for j in 0..n {
                let br = self.algebra.bracket_basis(i, j);

                let mut phi_br = Matrix::zeros(self.vdim, self.vdim);
                for (k, c) in br.iter().enumerate() {
                    if !c.is_zero() {
                        phi_br = phi_br.add(&self.phi[k].scale(c));
                    }
                }
                let con1 = phi_br.sub(&self.phi[i].commutator(&self.phi[j])).entries().to_vec();

                let mut con2 = zero_vec(self.vdim);
                for (k, c) in br.iter().enumerate() {
                    axpy(&mut con2, c, &self.theta[k]);
                }
                axpy(&mut con2, &-F::one(), &self.phi[i].mul_vec(&self.theta[j]));

                let mut hom = self.rho_of(br);
                axpy(&mut hom, &-F::one(), &self.bracket(&self.rho(i), &self.rho(j)));

                let split_ok = is_zero_vec(&con1) && is_zero_vec(&con2);
                let direct_ok = is_zero_vec(&hom);
                report.record("naive.con1", &[i, j], con1);
                report.record("naive.con2", &[i, j], con2);
                report.record("naive.homomorphism", &[i, j], hom);
                if split_ok != direct_ok {
                    report.record("naive.agreement", &[i, j], vec![F::one()]);
                }
            }
        }
        report
    }

    pub fn require_valid(&self) -> Result<()> {
        let report = self.check();
        match report.witnesses.first() {
            None => Ok(()),
            Some(w) => Err(Error::InvalidNaiveRepresentation(format!(
                "{} fails at {:?}",
                w.check, w.indices
            ))),
        }
    }

    /// The representation of `g` on `Im(rho)` by `l_x u = [rho(x), u]` and
    /// `r_x u = [u, rho(x)]`, in image coordinates.
    pub fn induced_rep(&self) -> Result<Representation<F>> {
        self.require_valid()?;
        let d = self.image_dim();
        let n = self.n();
        let mut l = Vec::with_capacity(n);
        let mut r = Vec::with_capacity(n);
        for i in 0..n {
            let rho = self.rho(i);
            let mut li = Matrix::zeros(d, d);
            let mut ri = Matrix::zeros(d, d);
            for (b, u) in self.image.basis.iter().enumerate() {
                let left = self.solve_image(&self.bracket(&rho, u))?;
                let right = self.solve_image(&self.bracket(u, &rho))?;
                for a in 0..d {
                    li[(a, b)] = left[a].clone();
                    ri[(a, b)] = right[a].clone();
                }
            }
            l.push(li);
            r.push(ri);
        }
        Representation::new(self.algebra.clone(), d, l, r)
    }

    fn solve_image(&self, v: &[F]) -> Result<Vec<F>> {
        self.image_coordinates(v).ok_or_else(|| {
            Error::Internal("omni bracket left the image of rho; Im(rho) is not a subalgebra".into())
        })
    }
}

/// `naive.*` identity report of `rho`.
pub fn naive_check<F: Field>(rho: &NaiveRepresentation<F>) -> IdentityReport<F> {
    rho.check()
}

/// Annihilator of `[g, g]` in `g*`, in dual-basis coordinates.
pub fn trivial_naive_space<F: Field>(g: &LeibnizAlgebra<F>) -> Subspace<F> {
    let n = g.dim();
    let derived = g.derived_subalgebra();
    if derived.dim() == 0 {
        return Subspace::full(n);
    }
    Matrix::from_rows(n, derived.basis.clone())
        .expect("derived basis has length n")
        .kernel_basis()
}

/// `rho = 0 + xi` on `V = R`; needs `xi` to vanish on `[g, g]`.
pub fn trivial_naive<F: Field>(g: &LeibnizAlgebra<F>, xi: &[F]) -> Result<NaiveRepresentation<F>> {
    let n = g.dim();
    if xi.len() != n {
        return Err(Error::dimension("xi", n, xi.len()));
    }
    let theta = xi.iter().map(|x| vec![x.clone()]).collect();
    let rho = NaiveRepresentation::new(g.clone(), 1, vec![Matrix::zeros(1, 1); n], theta)?;
    rho.require_valid()?;
    Ok(rho)
}

/// The zero map `g -> ol(R)`.
pub fn zero_naive<F: Field>(g: &LeibnizAlgebra<F>) -> NaiveRepresentation<F> {
    let n = g.dim();
    NaiveRepresentation::new(g.clone(), 1, vec![Matrix::zeros(1, 1); n], vec![vec![F::zero()]; n])
        .expect("shapes are consistent")
}

/// `ad = ad_L + id: g -> gl(g) + g`.
pub fn adjoint_naive<F: Field>(g: &LeibnizAlgebra<F>) -> Result<NaiveRepresentation<F>> {
    g.require_leibniz()?;
    let n = g.dim();
    let rho = NaiveRepresentation::new(
        g.clone(),
        n,
        (0..n).map(|i| g.left_multiplication(i)).collect(),
        (0..n).map(|i| unit_vec(n, i)).collect(),
    )?;
    rho.require_valid()?;
    Ok(rho)
}

/// `rho = (l* (x) 1 + 1 (x) l) + r` into `ol(V* (x) V)`, realised on `m x m`
/// matrices (row-major).
pub fn naive_from_rep<F: Field>(rep: &Representation<F>) -> Result<NaiveRepresentation<F>> {
    rep.require_valid()?;
    let conj = conjugation_rep(&rep.left_only())?;
    let theta = rep.r.iter().map(|r| r.entries().to_vec()).collect();
    let rho = NaiveRepresentation::new(rep.algebra.clone(), conj.vdim, conj.l, theta)?;
    rho.require_valid()?;
    Ok(rho)
}

/// `rho(u) = phi(u) + u` on the Leibniz algebra `(V, [.,.]_phi)`.
pub fn tautological_naive<F: Field>(phi: &GraphMap<F>) -> Result<NaiveRepresentation<F>> {
    let g = phi.induced_leibniz()?;
    let m = phi.vdim;
    let rho = NaiveRepresentation::new(g, m, phi.phi.clone(), (0..m).map(|i| unit_vec(m, i)).collect())?;
    rho.require_valid()?;
    Ok(rho)
}

/// A cochain `g^{(x)k} -> Im(rho)` in image coordinates.
#[derive(Clone, Debug, PartialEq)]
pub struct NaiveCochain<F> {
    pub cochain: Cochain<F>,
}

impl<F: Field> NaiveCochain<F> {
    pub fn zero(rho: &NaiveRepresentation<F>, degree: usize) -> Self {
        NaiveCochain {
            cochain: Cochain::zero(degree, rho.n(), rho.image_dim()),
        }
    }

    pub fn degree(&self) -> usize {
        self.cochain.degree
    }

    /// Builds a cochain from ambient values; fails if a value leaves `Im(rho)`.
    pub fn from_ambient(
        rho: &NaiveRepresentation<F>,
        degree: usize,
        mut f: impl FnMut(&[usize]) -> Vec<F>,
    ) -> Result<Self> {
        let mut failure = None;
        let cochain = Cochain::from_fn(degree, rho.n(), rho.image_dim(), |t| {
            let value = f(t);
            match rho.image_coordinates(&value) {
                Some(c) => c,
                None => {
                    failure.get_or_insert_with(|| t.to_vec());
                    zero_vec(rho.image_dim())
                }
            }
        });
        match failure {
            None => Ok(NaiveCochain { cochain }),
            Some(t) => Err(Error::Input(format!("cochain value at {t:?} lies outside Im(rho)"))),
        }
    }

    /// `rho o c` for a `g`-valued cochain `c`.
    pub fn from_algebra_valued(rho: &NaiveRepresentation<F>, c: &Cochain<F>) -> Result<Self> {
        if c.m != rho.n() || c.n != rho.n() {
            return Err(Error::Input("expected a g-valued cochain on g".into()));
        }
        Self::from_ambient(rho, c.degree, |t| rho.rho_of(c.value(t)))
    }

    /// Ambient value on a basis tuple.
    pub fn ambient_value(&self, rho: &NaiveRepresentation<F>, tuple: &[usize]) -> Vec<F> {
        rho.embed(self.cochain.value(tuple))
    }
}

/// The naive coboundary evaluated directly with omni brackets.
pub fn naive_coboundary<F: Field>(rho: &NaiveRepresentation<F>, f: &NaiveCochain<F>) -> Result<NaiveCochain<F>> {
    let n = rho.n();
    let d = rho.image_dim();
    if f.cochain.n != n || f.cochain.m != d {
        return Err(Error::Input(format!(
            "naive cochain has shape (n={}, m={}), expected (n={n}, m={d})",
            f.cochain.n, f.cochain.m
        )));
    }
    let k = f.degree();
    let g = &rho.algebra;
    let ambient = rho.ambient_dim();
    let value = |t: &[usize]| f.ambient_value(rho, t);
    NaiveCochain::from_ambient(rho, k + 1, |x| {
        let mut out = zero_vec(ambient);
        let mut rest = Vec::with_capacity(k);
        for p in 0..k {
            rest.clear();
            rest.extend(x.iter().enumerate().filter(|&(q, _)| q != p).map(|(_, &v)| v));
            let term = rho.bracket(&rho.rho(x[p]), &value(&rest));
            axpy(&mut out, &F::sign(p), &term);
        }
        let term = rho.bracket(&value(&x[..k]), &rho.rho(x[k]));
        axpy(&mut out, &F::sign(k + 1), &term);
        for a in 0..=k {
            for b in a + 1..=k {
                let prefix: Vec<usize> = x[..a].iter().chain(&x[a + 1..b]).copied().collect();
                let inner = f.cochain.value_with_vector(&prefix, g.bracket_basis(x[a], x[b]), &x[b + 1..]);
                axpy(&mut out, &F::sign(a + 1), &rho.embed(&inner));
            }
        }
        out
    })
    .map_err(|_| Error::Internal("naive coboundary left Im(rho)".into()))
}

/// Matrix of the naive coboundary `C^k -> C^{k+1}` in image coordinates.
pub fn naive_coboundary_matrix<F: Field>(
    rho: &NaiveRepresentation<F>,
    k: usize,
    limits: &Limits,
) -> Result<Matrix<F>> {
    coboundary_matrix(&rho.induced_rep()?, k, limits)
}

/// Betti numbers of the naive complex; `d^2 = 0` is verified for every
/// pair of consecutive degrees up to `k_max`.
pub fn naive_betti<F: Field>(rho: &NaiveRepresentation<F>, k_max: usize, limits: &Limits) -> Result<BettiReport> {
    let rep = rho.induced_rep()?;
    let report = betti(&rep, k_max, limits)?;
    for k in 0..k_max {
        if let Some(w) = complex_square_check(&rep, k).witnesses.first() {
            return Err(Error::Internal(format!(
                "naive coboundary squares to a nonzero map in degree {k} (column {:?})",
                w.indices
            )));
        }
    }
    Ok(report)
}

/// Which side of a comparison was built and how.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ComparisonBranch {
    /// `[g, g] = g`: the only trivial naive representation is `rho = 0`.
    Perfect,
    /// `rho = 0 + xi` for a nonzero `xi` vanishing on `[g, g]`.
    Trivial,
    Adjoint,
    Graph,
}

impl ComparisonBranch {
    pub fn as_str(self) -> &'static str {
        match self {
            ComparisonBranch::Perfect => "perfect",
            ComparisonBranch::Trivial => "trivial",
            ComparisonBranch::Adjoint => "adjoint",
            ComparisonBranch::Graph => "graph",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DegreeComparison {
    pub k: usize,
    pub dim_naive: usize,
    pub dim_classical: usize,
    pub equal: bool,
    /// Degree 0 is reported but not part of the comparison.
    pub informational: bool,
}

/// Degree-by-degree comparison of naive and Leibniz cohomology.
#[derive(Clone, Debug, PartialEq)]
pub struct ComparisonReport<F> {
    pub branch: ComparisonBranch,
    pub degrees: Vec<DegreeComparison>,
    pub naive: BettiReport,
    pub classical: BettiReport,
    /// Extra identity checked along the way: the cochain correspondence for
    /// the adjoint comparison, the representation identities of the graph
    /// comparison.
    pub correspondence: Option<IdentityReport<F>>,
}

impl<F: Field> ComparisonReport<F> {
    fn new(branch: ComparisonBranch, naive: BettiReport, classical: BettiReport) -> Self {
        let degrees = naive
            .degrees
            .iter()
            .zip(&classical.degrees)
            .map(|(a, b)| DegreeComparison {
                k: a.k,
                dim_naive: a.dim_h,
                dim_classical: b.dim_h,
                equal: a.dim_h == b.dim_h,
                informational: a.k == 0,
            })
            .collect();
        ComparisonReport {
            branch,
            degrees,
            naive,
            classical,
            correspondence: None,
        }
    }

    /// All compared degrees agree and the side identity (if any) holds.
    pub fn holds(&self) -> bool {
        self.degrees.iter().all(|d| d.informational || d.equal)
            && self.correspondence.as_ref().is_none_or(|c| c.holds)
    }
}

/// Naive cohomology of a trivial naive representation against `H(g)`.
///
/// When `[g, g] = g` the naive side is `rho = 0`; otherwise `rho = 0 + xi`
/// with `xi` the first basis vector of [`trivial_naive_space`].
pub fn compare_trivial<F: Field>(g: &LeibnizAlgebra<F>, k_max: usize, limits: &Limits) -> Result<ComparisonReport<F>> {
    g.require_leibniz()?;
    let space = trivial_naive_space(g);
    let (branch, rho) = match space.basis.first() {
        None => (ComparisonBranch::Perfect, zero_naive(g)),
        Some(xi) => (ComparisonBranch::Trivial, trivial_naive(g, xi)?),
    };
    compare_trivial_with(g, &rho, branch, k_max, limits)
}

/// [`compare_trivial`] with a caller-chosen `xi`.
pub fn compare_trivial_xi<F: Field>(
    g: &LeibnizAlgebra<F>,
    xi: &[F],
    k_max: usize,
    limits: &Limits,
) -> Result<ComparisonReport<F>> {
    g.require_leibniz()?;
    if is_zero_vec(xi) {
        return Err(Error::Input("xi must be nonzero".into()));
    }
    let rho = trivial_naive(g, xi)?;
    compare_trivial_with(g, &rho, ComparisonBranch::Trivial, k_max, limits)
}

fn compare_trivial_with<F: Field>(
    g: &LeibnizAlgebra<F>,
    rho: &NaiveRepresentation<F>,
    branch: ComparisonBranch,
    k_max: usize,
    limits: &Limits,
) -> Result<ComparisonReport<F>> {
    let naive = naive_betti(rho, k_max, limits)?;
    let classical = betti(&trivial_rep(g), k_max, limits)?;
    Ok(ComparisonReport::new(branch, naive, classical))
}

/// Checks `d(rho o f) = rho o (d f)` on every basis cochain `f` of
/// `C^k(g; ad_L, ad_R)` with `k < k_max`. Check name `correspondence`,
/// indices `(k, basis index)`.
pub fn adjoint_correspondence_check<F: Field>(
    rho: &NaiveRepresentation<F>,
    k_max: usize,
    limits: &Limits,
) -> Result<IdentityReport<F>> {
    let adj = crate::cohomology::adjoint_rep(&rho.algebra);
    let n = rho.n();
    let mut report = IdentityReport::new();
    for k in 0..k_max {
        limits.check(format!("C^{} of the adjoint correspondence", k + 1), n.pow(k as u32 + 1) * n)?;
        for idx in 0..n.pow(k as u32) * n {
            let f = Cochain::basis(k, n, n, idx);
            let lifted = NaiveCochain::from_algebra_valued(rho, &f)?;
            let lhs = naive_coboundary(rho, &lifted)?;
            let rhs = NaiveCochain::from_algebra_valued(rho, &coboundary(&adj, &f)?)?;
            let mut defect = lhs.cochain.coeffs;
            axpy(&mut defect, &-F::one(), &rhs.cochain.coeffs);
            report.record("correspondence", &[k, idx], defect);
        }
    }
    Ok(report)
}

/// Naive cohomology of the adjoint naive representation against
/// `H(g; ad_L, ad_R)`, together with the cochain correspondence.
pub fn compare_adjoint<F: Field>(g: &LeibnizAlgebra<F>, k_max: usize, limits: &Limits) -> Result<ComparisonReport<F>> {
    let rho = adjoint_naive(g)?;
    let correspondence = adjoint_correspondence_check(&rho, k_max, limits)?;
    let naive = naive_betti(&rho, k_max, limits)?;
    let classical = betti(&crate::cohomology::adjoint_rep(g), k_max, limits)?;
    let mut report = ComparisonReport::new(ComparisonBranch::Adjoint, naive, classical);
    report.correspondence = Some(correspondence);
    Ok(report)
}

/// `(V, l, r)` with `l_x u = phi(theta(x)) u` and `r_x u = phi(u) theta(x)`.
pub fn graph_representation<F: Field>(rho: &NaiveRepresentation<F>, phi: &GraphMap<F>) -> Result<Representation<F>> {
    phi.require_graph()?;
    if rho.vdim != phi.vdim {
        return Err(Error::dimension("graph map dimension", rho.vdim, phi.vdim));
    }
    rho.require_valid()?;
    for (i, (p, t)) in rho.phi.iter().zip(&rho.theta).enumerate() {
        if *p != phi.apply(t) {
            return Err(Error::InvalidGraphMap(format!(
                "rho(e_{i}) is not in the graph: phi part differs from phi(theta(e_{i}))"
            )));
        }
    }
    let m = rho.vdim;
    let l = rho.theta.iter().map(|t| phi.apply(t)).collect();
    let r = rho
        .theta
        .iter()
        .map(|t| {
            let cols: Vec<Vec<F>> = phi.phi.iter().map(|pb| pb.mul_vec(t)).collect();
            Matrix::from_columns(m, &cols).expect("m columns of length m")
        })
        .collect();
    Representation::new(rho.algebra.clone(), m, l, r)
}

/// Naive cohomology of `rho` with image inside `G_phi` against
/// `H(g; l, r)` for the representation of [`graph_representation`].
///
/// Rejects `rho` that is not a naive representation or escapes the graph.
pub fn graph_rep_cohomology<F: Field>(
    rho: &NaiveRepresentation<F>,
    phi: &GraphMap<F>,
    k_max: usize,
    limits: &Limits,
) -> Result<ComparisonReport<F>> {
    let rep = graph_representation(rho, phi)?;
    let rep_report = rep.check();
    if let Some(w) = rep_report.witnesses.first() {
        return Err(Error::InvalidRepresentation(format!(
            "graph representation fails {} at {:?}",
            w.check, w.indices
        )));
    }
    let naive = naive_betti(rho, k_max, limits)?;
    let classical = betti(&rep, k_max, limits)?;
    let mut report = ComparisonReport::new(ComparisonBranch::Graph, naive, classical);
    report.correspondence = Some(rep_report);
    Ok(report)
}
