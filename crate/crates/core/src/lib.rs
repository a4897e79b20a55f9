//! Exact symbolic computation for classical and quantum `sl(2)` representations.
//!
//! The crate is split into three layers:
//!
//! * [`qarith`]: exact rationals, Laurent polynomials in the quantum parameter `v`,
//!   and the balanced quantum integers `[n] = (v^n - v^-n)/(v - v^-1)` with their
//!   factorials and binomials.
//! * [`modrep`]: concrete weight modules (finite-dimensional `F_n`, truncated Verma
//!   modules, Rasskazova's `V(beta, lambda, n)`) stored as sparse generator matrices,
//!   together with an exact relation checker.
//! * [`tensorcg`]: tensor products under the classical and quantum coproducts,
//!   Clebsch-Gordan decompositions, highest-weight vectors by fraction-free
//!   elimination, and the explicit `Phi` coefficient formula with its cross-check.
//!
//! Everything is exact; there is no floating point anywhere in the crate.

pub mod modrep;
pub mod qarith;
pub mod tensorcg;

pub use modrep::{
    BasisLabel, Coefficient, Flavor, Generator, RasskazovaParams, RelationReport, Scalar, Vector,
    WeightModule,
};
pub use qarith::{LaurentPoly, QArithError, Rational, RationalFunction};
pub use tensorcg::{ComparisonReport, Decomposition, Interpretation, TensorError};
