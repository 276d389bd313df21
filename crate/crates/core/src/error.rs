use thiserror::Error;

use crate::scalar::FieldSpec;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("modulus {0} is not prime")]
    NotPrime(u64),
    #[error("prime field requires a modulus")]
    MissingModulus,
    #[error("division by zero")]
    DivisionByZero,
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(FieldSpec, FieldSpec),
    #[error("rational functions have different denominator bases")]
    FImageBaseMismatch,
    #[error("the zero element has no degree")]
    ZeroHasNoDegree,
    #[error("operation undefined on the zero element")]
    ZeroElement,
    #[error("degree {degree} is not divisible by {divisor}")]
    NotDivisible { degree: i64, divisor: u64 },
    #[error("step {step}: more than {cap} reductions without reaching a new chain element")]
    IterationCapExceeded { step: usize, cap: usize },
    #[error("input polynomial must have degree at least 1")]
    ConstantInput,
    #[error("operation requires characteristic {expected}, got {actual}")]
    WrongCharacteristic { expected: u64, actual: u64 },
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("coefficient {0} is not an element of the field")]
    CoefficientNotInField(String),
    #[error("invalid admissible sequence: {0}")]
    InvalidSequence(String),
    #[error("internal invariant violated: {0}")]
    InvariantViolation(String),
}

pub type Result<T> = std::result::Result<T, Error>;
