//! Concrete weight modules and the exact relation checker.

mod constructors;
mod label;
mod module;
mod relations;
mod scalar;

use thiserror::Error;

pub use constructors::{
    entry, finite_dim_classical, finite_dim_quantum, rasskazova, verma_classical, RasskazovaParams,
};
pub use label::BasisLabel;
pub use module::{Generator, SparseMatrix, Vector, WeightModule};
pub use relations::{check_relations, Relation, RelationOutcome, RelationReport};
pub use scalar::{Coefficient, Flavor, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModRepError {
    #[error("module dimension parameter must be non-negative, got {0}")]
    NegativeDimension(i64),
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("generator {generator:?} does not act on {flavor} modules")]
    GeneratorFlavor {
        generator: Generator,
        flavor: Flavor,
    },
    #[error("basis index {index} out of range for module of dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("quantum modules need integer weights, got {0}")]
    NonIntegerWeight(String),
    #[error("duplicate basis label {0}")]
    DuplicateLabel(String),
}
