use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("scalars from different quadratic extensions cannot be combined")]
    ModulusMismatch,
    #[error("modulus {0} is reducible over Q")]
    ReducibleModulus(String),
    #[error("quaternion has zero norm and is not invertible")]
    ZeroNorm,
    #[error("polynomial division is not exact")]
    NotDivisible,
    #[error("{0} does not split into irreducible quadratics over Q")]
    NotQuadraticallySplit(String),
    #[error("the quadratic divides the polynomial; its right factors are not unique")]
    MDividesQ,
    #[error("no linear right factor with the given norm")]
    NoRightFactor,
    #[error("t - ({0}) is not a right factor")]
    NotARightFactor(String),
    #[error("{0} has no canonical splitting over rational quaternions")]
    NotRationallyEmbeddable(String),
    #[error("norm polynomial does not separate as P(t)*R(s); no factorization exists")]
    NotSeparable,
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
    #[error("factorizations expand to different polynomials")]
    DifferentPolynomials,
    #[error("no adjacent t-factor commutes with the s-factor")]
    NoCommutingFactor,
    #[error("{0} is not a quadratic factor of P")]
    MNotFactorOfP(String),
    #[error("zero quaternion has no projective point")]
    ZeroInput,
    #[error("quaternion does not lie on the null quadric")]
    NotOnNullQuadric,
    #[error("polynomial has no s-term")]
    NotStarOne,
    #[error("syntax error at {line}:{column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("s-degree {0} exceeds 1")]
    Degree(usize),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
