use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("malformed rational `{0}`")]
pub struct ParseScalarError(pub String);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DgaError {
    #[error("generator names must be unique, `{0}` repeats")]
    DuplicateGenerator(String),
    #[error("at most 16 generators are supported, got {0}")]
    TooManyGenerators(usize),
    #[error("bracket of degree-one generators `{0}`, `{1}` must have degree 1")]
    BracketDegree(String, String),
    #[error("bracket table is not antisymmetric on `{0}`, `{1}`")]
    BracketNotAntisymmetric(String, String),
    #[error("differential of `{0}` must have degree 2")]
    DifferentialDegree(String),
    #[error("presentation carries no Lie-algebra data for the direct bracket formulas")]
    NoLieData,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpecError {
    #[error("dimension n must be at least 1")]
    ZeroDimension,
    #[error("structure matrix must be {n}x{n}")]
    Shape { n: usize },
    #[error("structure constants violate conj(F[k][j]) = -E[j][k] at ({0}, {1})")]
    FConstraint(usize, usize),
    #[error("structure constants give a center larger than two real dimensions")]
    CenterTooLarge,
    #[error("symplectic form is degenerate (u1^2 + v1^2 - u2^2 - v2^2 = 0)")]
    Degenerate,
    #[error("endomorphism does not square to minus the identity")]
    NotComplexStructure,
    #[error("parameter t must be nonzero")]
    ZeroParameter,
    #[error(transparent)]
    Scalar(#[from] ParseScalarError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DeformationError {
    #[error("truncation order must be at least {min}, got {got}")]
    Truncation { min: u32, got: u32 },
    #[error("no unit pivot: product leaves the spanned submodule at coordinate degree {degree}")]
    ReductionFailure { degree: u32 },
    #[error("unknown Kuranishi component `{0}`")]
    UnknownComponent(String),
    #[error("unknown coordinate `{0}`")]
    UnknownCoordinate(String),
    #[error("harmonic basis element is not a coordinate direction")]
    NotHarmonic,
}
