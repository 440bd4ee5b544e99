//! Exact differential Gerstenhaber algebras built from 2-step nilpotent Lie
//! algebras with abelian complex structure, their Dolbeault harmonic theory,
//! extended Kuranishi deformations over a truncated super ring, and the mirror
//! comparison with invariant symplectic structures.
//!
//! Everything is generic over a [`Scalar`] field; the aliases at the crate
//! root fix it to arbitrary-precision Gaussian rationals.

pub mod algebra;
pub mod deformation;
pub mod dga;
pub mod error;
pub mod hodge;
pub mod linalg;
pub mod mirror;
pub mod nil;
pub mod scalar;

pub use algebra::{Bidegree, Generator, GeneratorSet, Monomial};
pub use error::{DeformationError, DgaError, ParseScalarError, SpecError};
pub use scalar::{ExactRational, Scalar};

/// `re + im·i` with arbitrary-precision rational parts.
pub type GaussianRational = num_complex::Complex<num_rational::BigRational>;

pub type Multivector = algebra::Multivector<GaussianRational>;
pub type DgaPresentation = dga::DgaPresentation<GaussianRational>;
pub type Matrix = linalg::Matrix<GaussianRational>;
