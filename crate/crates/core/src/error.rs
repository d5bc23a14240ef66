use thiserror::Error;

/// Errors raised anywhere in the algebra stack.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("characteristic {0} is not a supported prime (must be prime and below 2^31)")]
    InvalidCharacteristic(u64),
    #[error("invalid ring: {0}")]
    InvalidRing(String),
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("exponent overflow")]
    ExponentOverflow,
    #[error("polynomials live in different rings")]
    RingMismatch,
    #[error("monomial order of the polynomial does not match the basis order")]
    OrderMismatch,
    #[error("arity mismatch: expected {expected} exponents, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("colon by the zero ideal")]
    ColonByZero,
    #[error("saturation did not stabilize within {0} colon steps")]
    SaturationCap(usize),
    #[error("ideal is not generated by forms of one common degree: {0}")]
    NotEquigenerated(String),
    #[error("input is not homogeneous: {0}")]
    NotHomogeneous(String),
    #[error("the quotient ring is the zero ring")]
    ZeroRing,
    #[error("ideal is not primary to the maximal ideal")]
    NotMPrimary,
    #[error("finite differences not stable up to n = {0}; retry with a larger n_max")]
    NotStable(usize),
    #[error("non-generic choice of general elements (seed {seed}): {msg}")]
    NonGeneric { seed: u64, msg: String },
    #[error("recursion exceeded the ring dimension (seed {seed}); resample the general elements")]
    StepOverflow { seed: u64 },
    #[error("fiber degree is zero")]
    DegenerateFiber,
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
