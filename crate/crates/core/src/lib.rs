//! Exact computations with finite-dimensional Leibniz algebras.
//!
//! An algebra is given by rational structure constants
//! `[e_i, e_j] = sum_k c[i][j][k] e_k`. On top of that the crate provides the
//! skew-symmetrization into a Lie 2-algebra, representations and Leibniz
//! cohomology, the graded bracket on cochains with the Maurer–Cartan element
//! of a representation, omni-Lie algebras, and naive representations with
//! their cohomology.
//!
//! Everything is generic over an exact [`Field`]; the aliases below fix the
//! scalar to [`Rational`].
//!
//! ```
//! use leibniz_kit::{fixtures, cohomology, Limits};
//!
//! let g = fixtures::l2::<leibniz_kit::Rational>();
//! assert!(g.is_leibniz());
//! let h = cohomology::betti(&cohomology::trivial_rep(&g), 2, &Limits::default()).unwrap();
//! assert_eq!(h.dim_h(1), Some(1));
//! ```

pub mod cohomology;
pub mod error;
pub mod fixtures;
pub mod io;
pub mod leibniz;
pub mod lie2;
pub mod linalg;
pub mod naive;
pub mod omni;
pub mod report;
pub mod scalar;

pub use cohomology::Limits;
pub use error::{Error, Result};
pub use leibniz::LeibnizAlgebra;
pub use lie2::{AxiomReport, Lie2Algebra};
pub use linalg::{Matrix, Subspace};
pub use naive::{ComparisonReport, NaiveRepresentation};
pub use omni::GraphMap;
pub use report::IdentityReport;
pub use scalar::{Field, Rational};

pub type Algebra = LeibnizAlgebra<Rational>;
pub type Rep = cohomology::Representation<Rational>;
pub type Cochain = cohomology::Cochain<Rational>;
pub type Lie2 = Lie2Algebra<Rational>;
pub type Naive = NaiveRepresentation<Rational>;
pub type Graph = GraphMap<Rational>;
pub type RationalMatrix = Matrix<Rational>;
pub type Report = IdentityReport<Rational>;
