//! Polynomials, power ideals of linear forms and the complex `R/J(Delta)`.

mod complex;
mod ideal;
mod monomial;
mod poly;

pub use complex::{build_chain_complex, euler_dim, homology_graded_dims, ChainComplexRJ};
pub use ideal::{
    face_ideal, face_ideal_of_points, homogenize, ideal_graded_dim, ideals_equal, quotient_hilbert, GradedPiece,
    HomForm, PowerIdeal,
};
pub(crate) use ideal::reduce_forms;
pub use monomial::{monomials_of_degree, Monomial, MonomialBasis};
pub use poly::Poly;

use crate::linalg::LinalgError;
use crate::mesh::MeshError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error("linear form is identically zero")]
    ZeroForm,
    #[error("ideals have different generator degrees {0} and {1}")]
    ExponentMismatch(u32, u32),
    #[error("expected {expected} variables, found {found}")]
    VariableMismatch { expected: usize, found: usize },
    #[error(transparent)]
    Mesh(#[from] MeshError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}
