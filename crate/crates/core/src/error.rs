use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("variable alphabet mismatch: {left:?} vs {right:?}")]
    AlphabetMismatch { left: Vec<String>, right: Vec<String> },
    #[error("gcd of two zero polynomials is undefined")]
    GcdOfZeros,
    #[error("zero polynomial has no content")]
    ZeroContent,
    #[error("division by zero")]
    DivisionByZero,
    #[error("denominator divisible by p = {0}")]
    DenominatorDivisibleByP(u64),
    #[error("invalid p-adic approximation: {0}")]
    InvalidPadic(String),
    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid spectrum model: {0}")]
    InvalidModel(String),
    #[error("subset does not match model shape: {0}")]
    ShapeMismatch(String),
    #[error("unknown point: {0}")]
    UnknownPoint(String),
    #[error("unknown element symbol: {0}")]
    UnknownElement(String),
    #[error("ultrafilter is not supported on the given subset: {0}")]
    UltrafilterNotSupported(String),
    #[error("family lacks the finite intersection property: {0}")]
    NoFiniteIntersection(String),
    #[error("operation unsupported on this model variant: {0}")]
    UnsupportedModel(String),
    #[error("member {0} of the family is not patch-closed")]
    MemberNotClosed(usize),
    #[error("local finiteness fails outside the union at: {0:?}")]
    NotLocallyFinite(Vec<String>),
    #[error("map rule rejected: {0}")]
    InvalidMap(String),
    #[error("subset not representable: {0}")]
    Unrepresentable(String),

    #[error("zero ideal has no colon ideal")]
    ZeroIdeal,
    #[error("operation needs ideal arithmetic, unavailable for {0}")]
    UnsupportedDomain(String),
    #[error("invalid prime descriptor: {0}")]
    InvalidPrime(String),

    #[error("descriptor is malformed: {0}")]
    InvalidDescriptor(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("center {0} is not a t-prime")]
    CenterNotTPrime(String),
    #[error("witness validation failed at {0}")]
    WitnessFailed(String),

    #[error("element is not in the core ideal: {0}")]
    NotInCore(String),
    #[error("index {index} is not materialized at level {level}")]
    IndexNotMaterialized { index: usize, level: usize },
    #[error("certificate step failed: {0}")]
    CertificateFailed(String),
}
