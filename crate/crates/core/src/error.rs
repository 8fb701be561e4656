use thiserror::Error;

use crate::poly::Variable;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("value {0} is not real")]
    NotReal(String),
    #[error("value {0} is not a Gaussian rational (it has a √2 component)")]
    NotGaussian(String),
    #[error("magnitude of {0} exceeds double precision range")]
    Overflow(String),
    #[error("cannot parse {input:?}: unexpected token {token:?}")]
    Parse { input: String, token: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("variable {0} is not assigned a value")]
    UnboundVariable(Variable),
    #[error("unknown variable {0:?}")]
    UnknownVariable(String),
    #[error("series argument has a term of degree 0 in the series variables")]
    SeriesConstantTerm,
    #[error("unexpected variable {0} for this operation")]
    ForeignVariable(Variable),
    #[error("malformed polynomial JSON: {0}")]
    Json(String),
    #[error(transparent)]
    Exact(#[from] ExactError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HermiteError {
    #[error("index {index} out of range 0..={bound}")]
    IndexOutOfRange { index: usize, bound: usize },
    #[error("matrix is singular")]
    Singular,
    #[error("malformed matrix {input:?}: {reason}")]
    MatrixSyntax { input: String, reason: String },
    #[error("real-basis expansion of H[{m},{n}] has components outside degree {m}+{n}")]
    NotHomogeneous { m: u32, n: u32 },
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IntegrateError {
    #[error("unnormalized integration needs an even number of variables, got {0}")]
    OddUnnormalized(usize),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Hermite(#[from] HermiteError),
    #[error(transparent)]
    Exact(#[from] ExactError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DeterminantError {
    #[error("g does not satisfy g12 = conj(g21), g22 = conj(g11)")]
    NotHermitianPair,
    #[error("invalid size: N = {n}, s = {s}")]
    InvalidSize { n: usize, s: u32 },
    #[error("oracle supports N <= 2 and s <= 1, got N = {n}, s = {s}")]
    OracleRange { n: usize, s: u32 },
    #[error("matrix is not square")]
    NotSquare,
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error(transparent)]
    Integrate(#[from] IntegrateError),
}
