//! Tensor products, Clebsch-Gordan decompositions, highest-weight vectors and the
//! explicit `Phi` formula for highest-weight vectors in `F_m ⊗ F_n`.

mod decompose;
mod hwv;
mod nullspace;
mod phi;
mod tensor;

use thiserror::Error;

use crate::modrep::ModRepError;
use crate::qarith::QArithError;

pub use decompose::{cg_decompose, decompose_by_character, Decomposition};
pub use hwv::{highest_weight_vectors, weight_space_indices, weight_spaces};
pub use nullspace::nullspace;
pub use phi::{
    phi_vector, phi_vs_oracle, ComparisonReport, Interpretation, MismatchWitness, PhiVector,
};
pub use tensor::{tensor_classical, tensor_quantum};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TensorError {
    #[error(transparent)]
    Module(#[from] ModRepError),
    #[error(transparent)]
    Arithmetic(#[from] QArithError),
    #[error("not a finite-dimensional decomposable weight pattern: {0}")]
    NotDecomposable(String),
    #[error("nullspace certificate failed: raising operator does not annihilate {0}")]
    Certificate(String),
    #[error("p = {p} out of range for m = {m}, n = {n} (need 0 <= p <= min(m, n))")]
    PhiRange { m: usize, n: usize, p: usize },
    #[error(
        "term k = {k} of Phi(m={m}, n={n}, p={p}) lands outside the basis under interpretation \
         {interpretation}: positions ({first}, {second})"
    )]
    PhiTermOutOfRange {
        m: usize,
        n: usize,
        p: usize,
        k: usize,
        first: i64,
        second: i64,
        interpretation: &'static str,
    },
    #[error("expected a one-dimensional highest-weight space at weight {weight}, found dimension {found}")]
    OracleDimension { weight: i64, found: usize },
}
