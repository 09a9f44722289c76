//! Monotone convolution powers ν_m of the standard semicircle law.
//!
//! Moments, cumulants, Cauchy transforms, densities, support endpoints and
//! orthogonal polynomials of ν_m, computed exactly where possible and each
//! cross-checked by an independent route: the moment recurrence, counting of
//! labelled non-crossing pair partitions, simulation on the weakly monotone
//! Fock space, and Stieltjes inversion of the composed Cauchy transform.

pub mod algebra;
pub mod fock;
pub mod moments;
pub mod orthopoly;
pub mod partitions;
pub mod report;
pub mod transforms;

pub use algebra::{AlgebraError, BigRational, DensePolynomial};
pub use fock::{FockError, FockSpace, FockState};
pub use moments::{MomentTable, MomentsError, PolynomialInM};
pub use num_bigint::{BigInt, BigUint};
pub use orthopoly::{JacobiCoefficients, OrthoError};
pub use partitions::{EnumerationBound, PairPartition, PartitionError, SignString};
pub use report::{IdentityCheck, Status, VerificationReport};
pub use transforms::{ComplexPoint, DensityCurve, SupportEndpoints, TransformError, YLadder};

use thiserror::Error;

/// Any error raised by the library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Partition(#[from] PartitionError),
    #[error(transparent)]
    Fock(#[from] FockError),
    #[error(transparent)]
    Moments(#[from] MomentsError),
    #[error(transparent)]
    Transform(#[from] TransformError),
    #[error(transparent)]
    Ortho(#[from] OrthoError),
}
