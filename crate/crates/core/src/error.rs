use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("division by the zero polynomial")]
    ZeroDivisor,
    #[error("gcd of two zero polynomials is undefined")]
    BothZero,
    #[error("zero polynomial passed where a nonzero one is required")]
    ZeroInput,
    #[error("division is not exact")]
    NonExactDivision,
    #[error("radical discriminant {0} must be a squarefree integer greater than 1")]
    BadDiscriminant(i64),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CurveError {
    #[error("curve model must have degree exactly 6 in x, found {0}")]
    NotSextic(String),
    #[error("curve model has vanishing discriminant in x")]
    SingularModel,
    #[error("Mumford u must be monic")]
    NonMonicU,
    #[error("pair (u, v) is not a valid Mumford representation")]
    InvalidMumford,
    #[error("leading term of v is a square root of a0 times x^3; the pole at infinity is unbalanced")]
    InfinityLeadingTerm,
    #[error("u does not divide f - v^2")]
    NonExactDivision,
    #[error("expected deg u = {expected}, found {found}")]
    UnexpectedDegree { expected: usize, found: String },
    #[error("odd-degree divisor (deg u = {0}) needs the balanced-at-infinity representation")]
    UnsupportedOddDegree(usize),
    #[error("internal invariant violated: {0}")]
    InvariantViolation(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DualError {
    #[error("cubic is singular: 4a^3 + 27b^2 = 0")]
    SingularCubic,
    #[error("algebraic identity failed: {0}")]
    IdentityFailure(String),
    #[error("the dual-curve pipeline needs sqrt(3) in the ambient field, got d = {0}")]
    WrongAmbientRadical(i64),
    #[error("modulus is not squarefree")]
    NonSquarefreeModulus,
    #[error("dynamic evaluation exceeded the split budget of {0}")]
    AdmissibilityUndecided(usize),
    #[error("coefficient is not rational; homogeneous forms must be d-free")]
    NonRationalCoefficient,
    #[error(transparent)]
    Curve(#[from] CurveError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

impl DualError {
    /// True when the error signals a bug rather than bad input.
    pub fn is_internal(&self) -> bool {
        match self {
            DualError::IdentityFailure(_) => true,
            DualError::Curve(c) => c.is_internal(),
            _ => false,
        }
    }
}

impl CurveError {
    pub fn is_internal(&self) -> bool {
        matches!(self, CurveError::InvariantViolation(_))
    }
}
