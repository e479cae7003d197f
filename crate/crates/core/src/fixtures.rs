//! Small named algebras, representations and graph maps used by tests, the
//! acceptance suite and the shipped JSON corpus. Indices are 0-based.

use crate::cohomology::{adjoint_rep, semidirect, Representation, SemidirectMode};
use crate::leibniz::LeibnizAlgebra;
use crate::linalg::Matrix;
use crate::omni::{omni_lie, GraphMap};
use crate::scalar::Field;

fn q<F: Field>(v: i64) -> F {
    F::from_i64(v)
}

pub fn abelian<F: Field>(n: usize) -> LeibnizAlgebra<F> {
    LeibnizAlgebra::abelian(n)
}

/// Two-dimensional non-Lie Leibniz algebra: `[e0, e0] = e1`, all else zero.
pub fn l2<F: Field>() -> LeibnizAlgebra<F> {
    LeibnizAlgebra::from_entries(2, &[(0, 0, 1, q(1))])
}

/// Heisenberg algebra: `[e0, e1] = e2 = -[e1, e0]`.
pub fn heis3<F: Field>() -> LeibnizAlgebra<F> {
    LeibnizAlgebra::from_entries(3, &[(0, 1, 2, q(1)), (1, 0, 2, q(-1))])
}

/// `sl2` in the basis `(h, e, f)`.
pub fn sl2<F: Field>() -> LeibnizAlgebra<F> {
    LeibnizAlgebra::from_entries(
        3,
        &[
            (0, 1, 1, q(2)),
            (1, 0, 1, q(-2)),
            (0, 2, 2, q(-2)),
            (2, 0, 2, q(2)),
            (1, 2, 0, q(1)),
            (2, 1, 0, q(-1)),
        ],
    )
}

/// `L2` extended by its adjoint representation, `(l, r)` flavour.
pub fn l2_semidirect<F: Field>() -> LeibnizAlgebra<F> {
    let g = l2::<F>();
    semidirect(&adjoint_rep(&g), SemidirectMode::LeftRight)
        .expect("adjoint semidirect product of L2 is Leibniz")
}

/// `heis3` extended by its adjoint representation, `(l, r)` flavour.
pub fn heis3_semidirect<F: Field>() -> LeibnizAlgebra<F> {
    let g = heis3::<F>();
    semidirect(&adjoint_rep(&g), SemidirectMode::LeftRight)
        .expect("adjoint semidirect product of heis3 is Leibniz")
}

/// The positive corpus: every entry satisfies the Leibniz identity.
pub fn positive_algebras<F: Field>() -> Vec<(&'static str, LeibnizAlgebra<F>)> {
    vec![
        ("abelian1", abelian(1)),
        ("abelian2", abelian(2)),
        ("abelian3", abelian(3)),
        ("L2", l2()),
        ("heis3", heis3()),
        ("sl2", sl2()),
        ("omni1", omni_lie(1)),
        ("omni2", omni_lie(2)),
        ("L2_adjoint_lr", l2_semidirect()),
        ("heis3_adjoint_lr", heis3_semidirect()),
    ]
}

/// `[e0, e0] = e0` on a line; fails the Leibniz identity at `(0, 0, 0)`.
pub fn idempotent_line<F: Field>() -> LeibnizAlgebra<F> {
    LeibnizAlgebra::from_entries(1, &[(0, 0, 0, q(1))])
}

/// `[e0, e1] = e1`, `[e1, e0] = e0`; fails at `(1, 0, 1)`.
pub fn twisted_plane<F: Field>() -> LeibnizAlgebra<F> {
    LeibnizAlgebra::from_entries(2, &[(0, 1, 1, q(1)), (1, 0, 0, q(1))])
}

pub fn negative_algebras<F: Field>() -> Vec<(&'static str, LeibnizAlgebra<F>)> {
    vec![
        ("idempotent_line", idempotent_line()),
        ("twisted_plane", twisted_plane()),
    ]
}

/// Adjoint representation of `sl2` with the right action negated. The first
/// two conditions still hold; `r_y l_x = -r_y r_x` fails.
pub fn sl2_flipped_adjoint<F: Field>() -> Representation<F> {
    let rep = adjoint_rep(&sl2::<F>());
    let r = rep.r.iter().map(|m| m.scale(&-F::one())).collect();
    Representation::new(rep.algebra, rep.vdim, rep.l, r).expect("shapes unchanged")
}

/// `l = 0`, `r_{e0} = id` on a plane over `L2`; fails the third condition.
pub fn l2_bad_right_action<F: Field>() -> Representation<F> {
    let g = l2::<F>();
    let l = vec![Matrix::zeros(2, 2), Matrix::zeros(2, 2)];
    let r = vec![Matrix::identity(2), Matrix::zeros(2, 2)];
    Representation::new(g, 2, l, r).expect("shapes are consistent")
}

pub fn negative_representations<F: Field>() -> Vec<(&'static str, Representation<F>)> {
    vec![
        ("sl2_flipped_adjoint", sl2_flipped_adjoint()),
        ("L2_bad_right_action", l2_bad_right_action()),
    ]
}

/// `phi(e0) = 0`, `phi(e1) = E01` on a plane; satisfies the graph condition.
pub fn nilpotent_graph_map<F: Field>() -> GraphMap<F> {
    let mut e01 = Matrix::zeros(2, 2);
    e01[(0, 1)] = F::one();
    GraphMap::new(2, vec![Matrix::zeros(2, 2), e01]).expect("2 matrices of size 2")
}

/// `phi = ad_L` of a Leibniz algebra; the graph condition is the Leibniz identity.
pub fn adjoint_graph_map<F: Field>(g: &LeibnizAlgebra<F>) -> GraphMap<F> {
    let n = g.dim();
    GraphMap::new(n, (0..n).map(|i| g.left_multiplication(i)).collect())
        .expect("n matrices of size n")
}

/// Scalar multiplication `phi(u) = u` on a line; fails the graph condition.
pub fn scalar_graph_map<F: Field>() -> GraphMap<F> {
    GraphMap::new(1, vec![Matrix::identity(1)]).expect("1 matrix of size 1")
}

pub fn positive_graph_maps<F: Field>() -> Vec<(&'static str, GraphMap<F>)> {
    vec![
        ("nilpotent_plane", nilpotent_graph_map()),
        ("ad_L2", adjoint_graph_map(&l2())),
        ("ad_heis3", adjoint_graph_map(&heis3())),
        ("ad_sl2", adjoint_graph_map(&sl2())),
    ]
}
