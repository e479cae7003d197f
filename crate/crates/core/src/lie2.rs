//! Skew-symmetrization of a Leibniz algebra and the resulting Lie 2-algebra.
//!
//! The skew bracket `{x, y} = (1/2)([x, y] - [y, x])` is antisymmetric but
//! fails the Jacobi identity by the Jacobiator
//! `J(x, y, z) = {x, {y, z}} + {y, {z, x}} + {z, {x, y}}`, which always lands
//! in the left center. Taking `g1 = Z(g)`, `g0 = g`, `l1` the inclusion,
//! `l2` the skew bracket and `l3 = J` yields a 2-term L-infinity algebra.

use crate::error::{Error, Result};
use crate::leibniz::LeibnizAlgebra;
use crate::linalg::{CoordinateMap, Matrix};
use crate::report::IdentityReport;
use crate::scalar::{axpy, is_zero_vec, scale_vec, sub_vec, unit_vec, zero_vec, Field};

/// The antisymmetrized bracket `s[i][j][k] = (c[i][j][k] - c[j][i][k]) / 2`,
/// stored as a structure tensor. It is a Lie bracket only when `J` vanishes.
pub fn skew_bracket<F: Field>(g: &LeibnizAlgebra<F>) -> LeibnizAlgebra<F> {
    let half = F::half();
    LeibnizAlgebra::from_fn(g.dim(), |i, j, k| {
        (g.constant(i, j, k).clone() - g.constant(j, i, k)) * &half
    })
}

fn check_triple<F: Field>(g: &LeibnizAlgebra<F>, x: &[F], y: &[F], z: &[F]) -> Result<()> {
    for v in [x, y, z] {
        if v.len() != g.dim() {
            return Err(Error::dimension("algebra vector", g.dim(), v.len()));
        }
    }
    Ok(())
}

/// Cyclic sum of nested skew brackets.
pub fn jacobiator_direct<F: Field>(
    g: &LeibnizAlgebra<F>,
    x: &[F],
    y: &[F],
    z: &[F],
) -> Result<Vec<F>> {
    check_triple(g, x, y, z)?;
    let s = skew_bracket(g);
    Ok(cyclic_jacobiator(&s, x, y, z))
}

fn cyclic_jacobiator<F: Field>(s: &LeibnizAlgebra<F>, x: &[F], y: &[F], z: &[F]) -> Vec<F> {
    let mut out = s.bracket_unchecked(x, &s.bracket_unchecked(y, z));
    axpy(&mut out, &F::one(), &s.bracket_unchecked(y, &s.bracket_unchecked(z, x)));
    axpy(&mut out, &F::one(), &s.bracket_unchecked(z, &s.bracket_unchecked(x, y)));
    out
}

/// `J = (1/4)([[z, y], x] + [[x, z], y] + [[y, x], z])`.
pub fn jacobiator_closed<F: Field>(
    g: &LeibnizAlgebra<F>,
    x: &[F],
    y: &[F],
    z: &[F],
) -> Result<Vec<F>> {
    check_triple(g, x, y, z)?;
    Ok(closed_jacobiator(g, x, y, z))
}

fn closed_jacobiator<F: Field>(g: &LeibnizAlgebra<F>, x: &[F], y: &[F], z: &[F]) -> Vec<F> {
    let mut out = g.bracket_unchecked(&g.bracket_unchecked(z, y), x);
    axpy(&mut out, &F::one(), &g.bracket_unchecked(&g.bracket_unchecked(x, z), y));
    axpy(&mut out, &F::one(), &g.bracket_unchecked(&g.bracket_unchecked(y, x), z));
    scale_vec(&F::quarter(), &out)
}

/// Jacobiator on all basis triples, indexed `(i * n + j) * n + k`.
struct JacobiatorTable<F> {
    n: usize,
    values: Vec<Vec<F>>,
}

impl<F: Field> JacobiatorTable<F> {
    fn closed(g: &LeibnizAlgebra<F>) -> Self {
        let n = g.dim();
        let mut values = Vec::with_capacity(n * n * n);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    values.push(closed_jacobiator(
                        g,
                        &unit_vec(n, i),
                        &unit_vec(n, j),
                        &unit_vec(n, k),
                    ));
                }
            }
        }
        JacobiatorTable { n, values }
    }

    fn get(&self, i: usize, j: usize, k: usize) -> &[F] {
        &self.values[(i * self.n + j) * self.n + k]
    }

    /// `J(v, e_j, e_k)` for an arbitrary vector in the first slot.
    fn first_slot(&self, v: &[F], j: usize, k: usize) -> Vec<F> {
        let mut out = zero_vec(self.n);
        for (s, vs) in v.iter().enumerate() {
            axpy(&mut out, vs, self.get(s, j, k));
        }
        out
    }
}

/// Checks every identity satisfied by the Jacobiator of a Leibniz algebra:
/// direct and closed forms agree, `J` is totally antisymmetric,
/// `[J(x, y, z), w] = 0`, and the ten-term identity
///
/// ```text
/// {x,J(y,z,w)} - {y,J(x,z,w)} + {z,J(x,y,w)} - {w,J(x,y,z)}
///   - J({x,y},z,w) + J({x,z},y,w) - J({x,w},y,z)
///   - J({y,z},x,w) + J({y,w},x,z) - J({z,w},x,y) = 0
/// ```
///
/// on all basis quadruples.
pub fn check_jacobiator_identities<F: Field>(g: &LeibnizAlgebra<F>) -> IdentityReport<F> {
    let n = g.dim();
    let s = skew_bracket(g);
    let table = JacobiatorTable::closed(g);
    let e = |i: usize| unit_vec::<F>(n, i);
    let mut report = IdentityReport::new();

    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let direct = cyclic_jacobiator(&s, &e(i), &e(j), &e(k));
                let closed = table.get(i, j, k);
                report.record("jacobiator.closed_form", &[i, j, k], sub_vec(&direct, closed));

                let mut swap01 = closed.to_vec();
                axpy(&mut swap01, &F::one(), table.get(j, i, k));
                report.record("jacobiator.antisymmetric_01", &[i, j, k], swap01);
                let mut swap12 = closed.to_vec();
                axpy(&mut swap12, &F::one(), table.get(i, k, j));
                report.record("jacobiator.antisymmetric_12", &[i, j, k], swap12);

                for l in 0..n {
                    let defect = g.bracket_unchecked(closed, &e(l));
                    report.record("jacobiator.in_left_center", &[i, j, k, l], defect);
                }
            }
        }
    }

    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                for w in 0..n {
                    let defect = ten_term(&s, &table, [x, y, z, w]);
                    report.record("jacobiator.ten_term", &[x, y, z, w], defect);
                }
            }
        }
    }
    report
}

fn ten_term<F: Field>(s: &LeibnizAlgebra<F>, table: &JacobiatorTable<F>, idx: [usize; 4]) -> Vec<F> {
    let n = table.n;
    let [x, y, z, w] = idx;
    let e = |i: usize| unit_vec::<F>(n, i);
    let mut out = zero_vec(n);
    // {x_i, J(rest)} with alternating signs.
    let singles = [(x, [y, z, w]), (y, [x, z, w]), (z, [x, y, w]), (w, [x, y, z])];
    for (pos, (a, [b, c, d])) in singles.into_iter().enumerate() {
        let term = s.bracket_unchecked(&e(a), table.get(b, c, d));
        axpy(&mut out, &F::sign(pos), &term);
    }
    // J({x_i, x_j}, rest) with sign (-1)^(i+j+1), 1-based positions.
    let pairs = [
        ((x, y), (z, w), -1),
        ((x, z), (y, w), 1),
        ((x, w), (y, z), -1),
        ((y, z), (x, w), -1),
        ((y, w), (x, z), 1),
        ((z, w), (x, y), -1),
    ];
    for ((a, b), (c, d), sign) in pairs {
        let inner = s.bracket_basis(a, b);
        let term = table.first_slot(inner, c, d);
        axpy(&mut out, &F::from_i64(sign), &term);
    }
    out
}

/// A 2-term graded space `g1 (+) g0` with brackets `l1`, `l2`, `l3`.
///
/// Tensor layouts (row-major):
/// - `l1`: `dim0 x dim1` matrix, column `a` is `l1(a)`.
/// - `l2_00[(x * dim0 + y) * dim0 + z]`: `l2(e_x, e_y)` in `g0`.
/// - `l2_01[(x * dim1 + a) * dim1 + b]`: `l2(e_x, a)` in `g1`; `l2(a, x) = -l2(x, a)`.
/// - `l2_11[(a * dim1 + b) * dim1 + c]`: two degree-1 inputs. The axioms never
///   involve it; a graded bracket of degree 0 forces it to vanish.
/// - `l3[((x * dim0 + y) * dim0 + z) * dim1 + a]`: `l3(e_x, e_y, e_z)` in `g1`.
#[derive(Clone, Debug, PartialEq)]
pub struct Lie2Algebra<F> {
    pub dim1: usize,
    pub dim0: usize,
    pub l1: Matrix<F>,
    pub l2_00: Vec<F>,
    pub l2_01: Vec<F>,
    pub l2_11: Vec<F>,
    pub l3: Vec<F>,
}

impl<F: Field> Lie2Algebra<F> {
    pub fn new(
        dim1: usize,
        dim0: usize,
        l1: Matrix<F>,
        l2_00: Vec<F>,
        l2_01: Vec<F>,
        l2_11: Option<Vec<F>>,
        l3: Vec<F>,
    ) -> Result<Self> {
        if (l1.rows(), l1.cols()) != (dim0, dim1) {
            return Err(Error::Input(format!(
                "l1 must be {dim0}x{dim1}, got {}x{}",
                l1.rows(),
                l1.cols()
            )));
        }
        let check = |what, expected: usize, got: usize| {
            if expected == got {
                Ok(())
            } else {
                Err(Error::dimension(what, expected, got))
            }
        };
        check("l2_00 tensor", dim0 * dim0 * dim0, l2_00.len())?;
        check("l2_01 tensor", dim0 * dim1 * dim1, l2_01.len())?;
        let l2_11 = l2_11.unwrap_or_else(|| zero_vec(dim1 * dim1 * dim1));
        check("l2_11 tensor", dim1 * dim1 * dim1, l2_11.len())?;
        check("l3 tensor", dim0 * dim0 * dim0 * dim1, l3.len())?;
        Ok(Lie2Algebra {
            dim1,
            dim0,
            l1,
            l2_00,
            l2_01,
            l2_11,
            l3,
        })
    }

    /// A Lie algebra viewed as a Lie 2-algebra with `g1 = 0`.
    pub fn from_lie(g: &LeibnizAlgebra<F>) -> Self {
        let n = g.dim();
        Lie2Algebra {
            dim1: 0,
            dim0: n,
            l1: Matrix::zeros(n, 0),
            l2_00: g.structure_constants().to_vec(),
            l2_01: Vec::new(),
            l2_11: Vec::new(),
            l3: Vec::new(),
        }
    }

    fn l2_00_basis(&self, x: usize, y: usize) -> &[F] {
        let start = (x * self.dim0 + y) * self.dim0;
        &self.l2_00[start..start + self.dim0]
    }

    fn l2_01_basis(&self, x: usize, a: usize) -> &[F] {
        let start = (x * self.dim1 + a) * self.dim1;
        &self.l2_01[start..start + self.dim1]
    }

    fn l3_basis(&self, x: usize, y: usize, z: usize) -> &[F] {
        let start = ((x * self.dim0 + y) * self.dim0 + z) * self.dim1;
        &self.l3[start..start + self.dim1]
    }

    /// `l2` on two degree-0 vectors.
    pub fn l2_00(&self, x: &[F], y: &[F]) -> Vec<F> {
        let mut out = zero_vec(self.dim0);
        for (i, xi) in x.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            for (j, yj) in y.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                axpy(&mut out, &(xi.clone() * yj), self.l2_00_basis(i, j));
            }
        }
        out
    }

    /// `l2(x, a)` for `x` of degree 0 and `a` of degree 1.
    pub fn l2_01(&self, x: &[F], a: &[F]) -> Vec<F> {
        let mut out = zero_vec(self.dim1);
        for (i, xi) in x.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            for (b, ab) in a.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                axpy(&mut out, &(xi.clone() * ab), self.l2_01_basis(i, b));
            }
        }
        out
    }

    pub fn l1_apply(&self, a: &[F]) -> Vec<F> {
        self.l1.mul_vec(a)
    }

    /// `l3` on three degree-0 vectors.
    pub fn l3(&self, x: &[F], y: &[F], z: &[F]) -> Vec<F> {
        let mut out = zero_vec(self.dim1);
        for (i, xi) in x.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            for (j, yj) in y.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                let xy = xi.clone() * yj;
                for (k, zk) in z.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                    axpy(&mut out, &(xy.clone() * zk), self.l3_basis(i, j, k));
                }
            }
        }
        out
    }

    /// Same structure with `l3` replaced by zero.
    pub fn with_zero_l3(&self) -> Self {
        let mut out = self.clone();
        out.l3 = zero_vec(out.l3.len());
        out
    }

    pub fn l3_is_zero(&self) -> bool {
        is_zero_vec(&self.l3)
    }
}

/// Outcome of [`verify_lie2`]: one report per axiom plus the structural checks
/// (antisymmetry of `l2` on degree 0, total antisymmetry of `l3`, vanishing `l2_11`).
#[derive(Clone, Debug, PartialEq)]
pub struct AxiomReport<F> {
    pub a: IdentityReport<F>,
    pub b: IdentityReport<F>,
    pub c: IdentityReport<F>,
    pub d: IdentityReport<F>,
    pub e: IdentityReport<F>,
    pub structure: IdentityReport<F>,
}

impl<F: Field> AxiomReport<F> {
    /// True iff axioms (a) through (e) all hold.
    pub fn passes(&self) -> bool {
        self.flags().iter().all(|(_, ok)| *ok)
    }

    pub fn flags(&self) -> [(&'static str, bool); 5] {
        [
            ("a", self.a.holds),
            ("b", self.b.holds),
            ("c", self.c.holds),
            ("d", self.d.holds),
            ("e", self.e.holds),
        ]
    }

    pub fn axiom(&self, name: &str) -> Option<&IdentityReport<F>> {
        match name {
            "a" => Some(&self.a),
            "b" => Some(&self.b),
            "c" => Some(&self.c),
            "d" => Some(&self.d),
            "e" => Some(&self.e),
            _ => None,
        }
    }
}

/// Checks the Lie 2-algebra axioms on all basis tuples (`x, y, z, w` in `g0`,
/// `a, b` in `g1`):
///
/// - (a) `l1 l2(x, a) = l2(x, l1 a)`
/// - (b) `l2(l1 a, b) = l2(a, l1 b)`
/// - (c) `l2(x, l2(y, z)) + c.p. = l1 l3(x, y, z)`
/// - (d) `l2(x, l2(y, a)) + l2(y, l2(a, x)) + l2(a, l2(x, y)) = l3(x, y, l1 a)`
/// - (e) `sum_i (-1)^(i+1) l2(x_i, l3(..x_i^..)) + sum_{i<j} (-1)^(i+j) l3(l2(x_i, x_j), ..) = 0`
pub fn verify_lie2<F: Field>(lie2: &Lie2Algebra<F>) -> AxiomReport<F> {
    let (d0, d1) = (lie2.dim0, lie2.dim1);
    let e0 = |i: usize| unit_vec::<F>(d0, i);
    let e1 = |i: usize| unit_vec::<F>(d1, i);
    let neg = |v: Vec<F>| scale_vec(&-F::one(), &v);

    let mut a = IdentityReport::new();
    for x in 0..d0 {
        for ai in 0..d1 {
            let lhs = lie2.l1_apply(&lie2.l2_01(&e0(x), &e1(ai)));
            let rhs = lie2.l2_00(&e0(x), &lie2.l1_apply(&e1(ai)));
            a.record("a", &[x, ai], sub_vec(&lhs, &rhs));
        }
    }

    let mut b = IdentityReport::new();
    for ai in 0..d1 {
        for bi in 0..d1 {
            let lhs = lie2.l2_01(&lie2.l1_apply(&e1(ai)), &e1(bi));
            let rhs = neg(lie2.l2_01(&lie2.l1_apply(&e1(bi)), &e1(ai)));
            b.record("b", &[ai, bi], sub_vec(&lhs, &rhs));
        }
    }

    let mut c = IdentityReport::new();
    for x in 0..d0 {
        for y in 0..d0 {
            for z in 0..d0 {
                let (ex, ey, ez) = (e0(x), e0(y), e0(z));
                let mut lhs = lie2.l2_00(&ex, &lie2.l2_00(&ey, &ez));
                axpy(&mut lhs, &F::one(), &lie2.l2_00(&ey, &lie2.l2_00(&ez, &ex)));
                axpy(&mut lhs, &F::one(), &lie2.l2_00(&ez, &lie2.l2_00(&ex, &ey)));
                let rhs = lie2.l1_apply(lie2.l3_basis(x, y, z));
                c.record("c", &[x, y, z], sub_vec(&lhs, &rhs));
            }
        }
    }

    let mut d = IdentityReport::new();
    for x in 0..d0 {
        for y in 0..d0 {
            for ai in 0..d1 {
                let (ex, ey, ea) = (e0(x), e0(y), e1(ai));
                let mut lhs = lie2.l2_01(&ex, &lie2.l2_01(&ey, &ea));
                // l2(y, l2(a, x)) with l2(a, x) = -l2(x, a)
                axpy(&mut lhs, &F::one(), &lie2.l2_01(&ey, &neg(lie2.l2_01(&ex, &ea))));
                // l2(a, l2(x, y)) = -l2(l2(x, y), a)
                axpy(&mut lhs, &-F::one(), &lie2.l2_01(&lie2.l2_00(&ex, &ey), &ea));
                let rhs = lie2.l3(&ex, &ey, &lie2.l1_apply(&ea));
                d.record("d", &[x, y, ai], sub_vec(&lhs, &rhs));
            }
        }
    }

    let mut e = IdentityReport::new();
    for x in 0..d0 {
        for y in 0..d0 {
            for z in 0..d0 {
                for w in 0..d0 {
                    e.record("e", &[x, y, z, w], axiom_e_defect(lie2, [x, y, z, w]));
                }
            }
        }
    }

    let mut structure = IdentityReport::new();
    for x in 0..d0 {
        for y in 0..d0 {
            let mut sym = lie2.l2_00_basis(x, y).to_vec();
            axpy(&mut sym, &F::one(), lie2.l2_00_basis(y, x));
            structure.record("l2_00.antisymmetric", &[x, y], sym);
            for z in 0..d0 {
                let mut s01 = lie2.l3_basis(x, y, z).to_vec();
                axpy(&mut s01, &F::one(), lie2.l3_basis(y, x, z));
                structure.record("l3.antisymmetric_01", &[x, y, z], s01);
                let mut s12 = lie2.l3_basis(x, y, z).to_vec();
                axpy(&mut s12, &F::one(), lie2.l3_basis(x, z, y));
                structure.record("l3.antisymmetric_12", &[x, y, z], s12);
            }
        }
    }
    for ai in 0..d1 {
        for bi in 0..d1 {
            let start = (ai * d1 + bi) * d1;
            structure.record("l2_11.vanishes", &[ai, bi], lie2.l2_11[start..start + d1].to_vec());
        }
    }

    AxiomReport {
        a,
        b,
        c,
        d,
        e,
        structure,
    }
}

fn axiom_e_defect<F: Field>(lie2: &Lie2Algebra<F>, idx: [usize; 4]) -> Vec<F> {
    let d0 = lie2.dim0;
    let e0 = |i: usize| unit_vec::<F>(d0, i);
    let mut out = zero_vec(lie2.dim1);
    for i in 0..4 {
        let rest: Vec<usize> = (0..4).filter(|&p| p != i).map(|p| idx[p]).collect();
        let inner = lie2.l3_basis(rest[0], rest[1], rest[2]);
        axpy(&mut out, &F::sign(i), &lie2.l2_01(&e0(idx[i]), inner));
    }
    for i in 0..4 {
        for j in i + 1..4 {
            let rest: Vec<usize> = (0..4).filter(|&p| p != i && p != j).map(|p| idx[p]).collect();
            let inner = lie2.l2_00_basis(idx[i], idx[j]);
            let term = lie2.l3(inner, &e0(rest[0]), &e0(rest[1]));
            // (-1)^(i+j) with 1-based positions equals (-1)^(i+j) with 0-based ones.
            axpy(&mut out, &F::sign(i + j), &term);
        }
    }
    out
}

/// Builds the Lie 2-algebra `(Z(g) (+) g, l1, l2, l3)` of a Leibniz algebra.
///
/// `l2(x, c) = (1/2)[x, c]` and `l3 = J` are expressed in the RREF basis of the
/// left center; each coordinate solve doubles as a check that the value lies
/// in the center.
pub fn build_lie2<F: Field>(g: &LeibnizAlgebra<F>) -> Result<Lie2Algebra<F>> {
    g.require_leibniz()?;
    let n = g.dim();
    let center = g.left_center();
    let d1 = center.dim();
    let coords = CoordinateMap::new(&center);
    let half = F::half();

    let in_center = |v: &[F], what: &str, idx: &[usize]| -> Result<Vec<F>> {
        coords.coordinates(v).ok_or_else(|| {
            Error::NotLeibniz(format!("{what} at {idx:?} is not in the left center"))
        })
    };

    let mut l2_01 = Vec::with_capacity(n * d1 * d1);
    for x in 0..n {
        for (a, z) in center.basis.iter().enumerate() {
            let value = scale_vec(&half, &g.bracket_unchecked(&unit_vec(n, x), z));
            l2_01.extend(in_center(&value, "[x, c]", &[x, a])?);
        }
    }

    let mut l3 = Vec::with_capacity(n * n * n * d1);
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let j = closed_jacobiator(g, &unit_vec(n, x), &unit_vec(n, y), &unit_vec(n, z));
                l3.extend(in_center(&j, "Jacobiator", &[x, y, z])?);
            }
        }
    }

    Lie2Algebra::new(
        d1,
        n,
        center.basis_matrix(),
        skew_bracket(g).structure_constants().to_vec(),
        l2_01,
        None,
        l3,
    )
}

/// Trilinear Jacobiator as a flat `n^3 x n` tensor (closed form).
pub fn jacobiator_tensor<F: Field>(g: &LeibnizAlgebra<F>) -> Vec<F> {
    JacobiatorTable::closed(g).values.concat()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::omni::omni_lie;
    use crate::scalar::{frac, Rational};

    type Q = Rational;

    fn q(n: i64) -> Q {
        Q::from_i64(n)
    }

    /// ol(R^2) basis: E00, E01, E10, E11, v0, v1.
    fn omni2_vec(index: usize) -> Vec<Q> {
        unit_vec(6, index)
    }

    #[test]
    fn skew_bracket_examples() {
        let h = fixtures::heis3::<Q>();
        assert_eq!(skew_bracket(&h), h);
        let l2 = fixtures::l2::<Q>();
        assert_eq!(skew_bracket(&l2), LeibnizAlgebra::abelian(2));
    }

    #[test]
    fn omni_skew_bracket_formula() {
        // {A+u, B+v} = [A, B] + (Av - Bu)/2 with A = E01, u = v0, B = E11, v = v1.
        let omni = omni_lie::<Q>(2);
        let s = skew_bracket(&omni);
        let x = vec![q(0), q(1), q(0), q(0), q(1), q(0)];
        let y = vec![q(0), q(0), q(0), q(1), q(0), q(1)];
        // [E01, E11] = E01; A v = E01 v1 = v0; B u = E11 v0 = 0.
        let expected = vec![q(0), q(1), q(0), q(0), frac(1, 2), q(0)];
        assert_eq!(s.bracket(&x, &y).unwrap(), expected);
    }

    #[test]
    fn jacobiator_examples() {
        let omni = omni_lie::<Q>(2);
        // x = E00, y = E01, z = v1
        let (x, y, z) = (omni2_vec(0), omni2_vec(1), omni2_vec(5));
        let expected = vec![q(0), q(0), q(0), q(0), frac(-1, 4), q(0)];
        assert_eq!(jacobiator_direct(&omni, &x, &y, &z).unwrap(), expected);
        assert_eq!(jacobiator_closed(&omni, &x, &y, &z).unwrap(), expected);

        let l2 = fixtures::l2::<Q>();
        let e0 = unit_vec(2, 0);
        assert_eq!(jacobiator_closed(&l2, &e0, &e0, &e0).unwrap(), vec![q(0), q(0)]);
        let sl2 = fixtures::sl2::<Q>();
        for i in 0..3 {
            for j in 0..3 {
                for k in 0..3 {
                    let (a, b, c) = (unit_vec(3, i), unit_vec(3, j), unit_vec(3, k));
                    assert!(is_zero_vec(&jacobiator_direct(&sl2, &a, &b, &c).unwrap()));
                }
            }
        }
        assert!(jacobiator_direct(&l2, &e0, &e0, &[q(1)]).is_err());
    }

    #[test]
    fn jacobiator_identities_hold_on_fixtures() {
        for (name, g) in fixtures::positive_algebras::<Q>() {
            let report = check_jacobiator_identities(&g);
            assert!(report.holds, "{name}: {:?}", report.witnesses.first());
        }
    }

    #[test]
    fn lie_algebra_gives_trivial_lie2() {
        for g in [fixtures::heis3::<Q>(), fixtures::sl2()] {
            let l = build_lie2(&g).unwrap();
            assert!(l.l3_is_zero());
            assert_eq!(l.l2_00, g.structure_constants());
            assert_eq!(l.dim1, g.left_center().dim());
            assert!(verify_lie2(&l).passes());
        }
    }

    #[test]
    fn l2_lie2_is_inclusion_only() {
        let l = build_lie2(&fixtures::l2::<Q>()).unwrap();
        assert_eq!((l.dim1, l.dim0), (1, 2));
        assert_eq!(l.l1, Matrix::from_rows(1, vec![vec![q(0)], vec![q(1)]]).unwrap());
        assert!(is_zero_vec(&l.l2_00));
        assert!(is_zero_vec(&l.l2_01));
        assert!(l.l3_is_zero());
        assert!(verify_lie2(&l).passes());
    }

    #[test]
    fn omni1_lie2() {
        let l = build_lie2(&omni_lie::<Q>(1)).unwrap();
        assert_eq!(l.dim1, 1);
        // l2((a,u),(b,v)) = (av - bu)/2 in the V slot
        let x = vec![q(2), q(3)];
        let y = vec![q(5), q(7)];
        assert_eq!(l.l2_00(&x, &y), vec![q(0), frac(2 * 7 - 5 * 3, 2)]);
        assert!(l.l3_is_zero());
        assert!(verify_lie2(&l).passes());
    }

    #[test]
    fn omni2_lie2_needs_l3() {
        let l = build_lie2(&omni_lie::<Q>(2)).unwrap();
        assert!(!l.l3_is_zero());
        let report = verify_lie2(&l);
        assert!(report.passes(), "{:?}", report.flags());
        assert!(report.structure.holds);
        let broken = verify_lie2(&l.with_zero_l3());
        assert!(!broken.c.holds);
        assert!(!broken.passes());
    }

    #[test]
    fn lie_algebra_with_trivial_g1() {
        let l = Lie2Algebra::from_lie(&fixtures::sl2::<Q>());
        assert!(verify_lie2(&l).passes());
    }

    #[test]
    fn build_rejects_non_leibniz() {
        let err = build_lie2(&fixtures::idempotent_line::<Q>()).unwrap_err();
        assert!(matches!(err, Error::NotLeibniz(_)));
    }

    #[test]
    fn verify_detects_bad_structure() {
        let mut l = build_lie2(&omni_lie::<Q>(1)).unwrap();
        l.l2_11 = vec![q(1)];
        let report = verify_lie2(&l);
        assert!(report.passes());
        assert!(!report.structure.holds);
    }

    #[test]
    fn all_fixtures_give_lie2_algebras() {
        for (name, g) in fixtures::positive_algebras::<Q>() {
            let report = verify_lie2(&build_lie2(&g).unwrap());
            assert!(report.passes(), "{name}: {:?}", report.flags());
        }
    }
}
