//! Semidirect products `g + V` and the Maurer–Cartan element `rbar`.
//!
//! Basis of `g + V`: the basis of `g` followed by the basis of `V`.

use crate::error::{Error, Result};
use crate::leibniz::LeibnizAlgebra;
use crate::report::IdentityReport;
use crate::scalar::{axpy, Field};

use super::coboundary::coboundary;
use super::cochain::Cochain;
use super::graded::graded_bracket;
use super::representation::{adjoint_rep, Representation};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SemidirectMode {
    /// `[x+u, y+v] = [x,y] + l_x v + r_y u`
    LeftRight,
    /// `[x+u, y+v] = [x,y] + l_x v`
    LeftOnly,
}

impl std::str::FromStr for SemidirectMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "lr" => Ok(SemidirectMode::LeftRight),
            "l0" => Ok(SemidirectMode::LeftOnly),
            other => Err(Error::Input(format!("unknown semidirect mode {other:?} (expected lr or l0)"))),
        }
    }
}

fn semidirect_unchecked<F: Field>(rep: &Representation<F>, mode: SemidirectMode) -> LeibnizAlgebra<F> {
    let (n, m) = (rep.n(), rep.vdim);
    let g = &rep.algebra;
    LeibnizAlgebra::from_fn(n + m, |i, j, k| match (i < n, j < n) {
        (true, true) if k < n => g.constant(i, j, k).clone(),
        (true, false) if k >= n => rep.l[i][(k - n, j - n)].clone(),
        (false, true) if k >= n && mode == SemidirectMode::LeftRight => rep.r[j][(k - n, i - n)].clone(),
        _ => F::zero(),
    })
}

/// The semidirect product `g x_(l,r) V` or `g x_(l,0) V`.
///
/// Rejects invalid representations and non-Leibniz base algebras; the output
/// is checked against the Leibniz identity before it is returned.
pub fn semidirect<F: Field>(rep: &Representation<F>, mode: SemidirectMode) -> Result<LeibnizAlgebra<F>> {
    rep.algebra.require_leibniz()?;
    rep.require_valid()?;
    let h = semidirect_unchecked(rep, mode);
    if !h.is_leibniz() {
        return Err(Error::Internal("semidirect product fails the Leibniz identity".into()));
    }
    Ok(h)
}

/// `rbar(x+u, y+v) = r_y u` as a `(g+V)`-valued 2-cochain on `g + V`.
pub fn rbar<F: Field>(rep: &Representation<F>) -> Cochain<F> {
    let (n, m) = (rep.n(), rep.vdim);
    let d = n + m;
    Cochain::from_fn(2, d, d, |t| {
        let mut out = vec![F::zero(); d];
        let (i, j) = (t[0], t[1]);
        if i >= n && j < n {
            for k in 0..m {
                out[n + k] = rep.r[j][(k, i - n)].clone();
            }
        }
        out
    })
}

/// Checks `d rbar - 1/2 [rbar, rbar] = 0`, with `d` the coboundary of the
/// adjoint representation of `g x_(l,0) V`, and that the `(l,0)` bracket
/// deformed by `rbar` is the `(l,r)` bracket.
///
/// Check names: `maurer_cartan` (indices: a basis triple of `g + V`) and
/// `deformation` (indices: a basis pair).
pub fn maurer_cartan_check<F: Field>(rep: &Representation<F>) -> Result<IdentityReport<F>> {
    let l0 = semidirect(rep, SemidirectMode::LeftOnly)?;
    let lr = semidirect(rep, SemidirectMode::LeftRight)?;
    let r = rbar(rep);
    let d = l0.dim();

    let dr = coboundary(&adjoint_rep(&l0), &r)?;
    let sq = graded_bracket(&r, &r)?;
    let mut mc = dr;
    axpy(&mut mc.coeffs, &-F::half(), &sq.coeffs);

    let mut report = IdentityReport::new();
    for x in 0..d {
        for y in 0..d {
            for z in 0..d {
                report.record("maurer_cartan", &[x, y, z], mc.value(&[x, y, z]).to_vec());
            }
            let mut defect = l0.bracket_basis(x, y).to_vec();
            axpy(&mut defect, &F::one(), r.value(&[x, y]));
            axpy(&mut defect, &-F::one(), lr.bracket_basis(x, y));
            report.record("deformation", &[x, y], defect);
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cohomology::trivial_rep;
    use crate::fixtures;
    use crate::linalg::Matrix;
    use crate::omni::omni_lie;
    use crate::scalar::Rational;

    type Q = Rational;

    #[test]
    fn trivial_rep_gives_direct_sum() {
        let g = fixtures::heis3::<Q>();
        let h = semidirect(&trivial_rep(&g), SemidirectMode::LeftRight).unwrap();
        assert_eq!(h.dim(), 4);
        for i in 0..4 {
            for j in 0..4 {
                let expected: Vec<Q> = if i < 3 && j < 3 {
                    let mut v = g.bracket_basis(i, j).to_vec();
                    v.push(Q::from_i64(0));
                    v
                } else {
                    vec![Q::from_i64(0); 4]
                };
                assert_eq!(h.bracket_basis(i, j), expected.as_slice());
            }
        }
    }

    #[test]
    fn gl_v_with_identity_is_omni() {
        // gl(V) with (V, id, 0) in (l,0) flavour
        for m in 1..=2 {
            let n = m * m;
            let gl = LeibnizAlgebra::from_fn(n, |i, j, k| {
                let (a, b, c, d) = (i / m, i % m, j / m, j % m);
                let (e, f) = (k / m, k % m);
                let mut v = Q::from_i64(0);
                if b == c && a == e && d == f {
                    v += &Q::from_i64(1);
                }
                if d == a && c == e && b == f {
                    v -= &Q::from_i64(1);
                }
                v
            });
            let l: Vec<Matrix<Q>> = (0..n)
                .map(|i| {
                    let mut e = Matrix::zeros(m, m);
                    e[(i / m, i % m)] = Q::from_i64(1);
                    e
                })
                .collect();
            let rep = Representation::new(gl, m, l, vec![Matrix::zeros(m, m); n]).unwrap();
            let h = semidirect(&rep, SemidirectMode::LeftOnly).unwrap();
            assert_eq!(h, omni_lie(m));
        }
    }

    #[test]
    fn semidirect_products_are_leibniz() {
        for (name, g) in fixtures::positive_algebras::<Q>().into_iter().filter(|(_, g)| g.dim() <= 3) {
            let adj = adjoint_rep(&g);
            for mode in [SemidirectMode::LeftRight, SemidirectMode::LeftOnly] {
                assert!(semidirect(&adj, mode).unwrap().is_leibniz(), "{name} {mode:?}");
            }
        }
    }

    #[test]
    fn semidirect_rejects_invalid_rep() {
        let bad = fixtures::l2_bad_right_action::<Q>();
        assert!(matches!(
            semidirect(&bad, SemidirectMode::LeftRight),
            Err(Error::InvalidRepresentation(_))
        ));
        assert!(maurer_cartan_check(&bad).is_err());
    }

    #[test]
    fn rbar_values() {
        let g = fixtures::l2::<Q>();
        let adj = adjoint_rep(&g);
        let r = rbar(&adj);
        // rbar(u, y) = [u, y] in the V slot, for u = v_0 (index 2), y = e_0
        assert_eq!(
            r.value(&[2, 0]),
            &[Q::from_i64(0), Q::from_i64(0), Q::from_i64(0), Q::from_i64(1)]
        );
        assert!(r.value(&[0, 2]).iter().all(|v| *v == Q::from_i64(0)));
        assert!(rbar(&adj.left_only()).is_zero());
    }

    #[test]
    fn maurer_cartan_holds() {
        for g in [fixtures::l2::<Q>(), fixtures::heis3(), fixtures::sl2(), fixtures::abelian(2)] {
            let adj = adjoint_rep(&g);
            assert!(maurer_cartan_check(&adj).unwrap().holds);
            assert!(maurer_cartan_check(&adj.left_only()).unwrap().holds);
            assert!(maurer_cartan_check(&trivial_rep(&g)).unwrap().holds);
        }
    }

    #[test]
    fn mode_parsing() {
        assert_eq!("lr".parse::<SemidirectMode>().unwrap(), SemidirectMode::LeftRight);
        assert_eq!("l0".parse::<SemidirectMode>().unwrap(), SemidirectMode::LeftOnly);
        assert!("rl".parse::<SemidirectMode>().is_err());
    }
}
