//! Representations and Leibniz cohomology.
//!
//! A representation `(V, l, r)` of `g` consists of two linear maps
//! `l, r: g -> gl(V)` with
//!
//! ```text
//! l_[x,y] = [l_x, l_y],   r_[x,y] = [l_x, r_y],   r_y l_x = -r_y r_x.
//! ```
//!
//! Cochains are multilinear maps on the full tensor power of `g`.

mod coboundary;
mod cochain;
mod deformation;
mod graded;
mod representation;

pub use coboundary::{
    betti, coboundary, coboundary_column, coboundary_matrix, cocycle_check, cocycle_report,
    complex_square_check, BettiReport, DegreeBetti, Limits, DEFAULT_CAP,
};
pub use cochain::{tuple_index, tuple_of, Cochain};
pub use deformation::{maurer_cartan_check, rbar, semidirect, SemidirectMode};
pub use graded::{circle_product, graded_bracket, shuffles, Shuffle};
pub use representation::{
    adjoint_rep, conjugation_rep, dual_rep, right_action_cochain, trivial_rep, Representation,
};
