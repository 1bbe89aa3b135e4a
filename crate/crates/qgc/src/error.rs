use thiserror::Error;

/// Errors surfaced by construction and verification routines.
#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("modulus must be monic of degree {expected}, got degree {got}")]
    BadModulusDegree { expected: usize, got: usize },
    #[error("modulus is reducible over GF({p})")]
    ReducibleModulus { p: u64 },
    #[error("field size {0} exceeds the supported table limit (2^16)")]
    FieldTooLarge(u64),
    #[error("no built-in modulus for GF({p}^{m}); supply one explicitly")]
    NoBuiltinModulus { p: u64, m: u32 },
    #[error("invalid field element literal {0:?}")]
    BadFieldLiteral(String),
    #[error("invalid group spec {0:?}")]
    BadGroupSpec(String),
    #[error("group closure exceeded the order bound {0}")]
    ClosureBound(usize),
    #[error("inconsistent group presentation: {0}")]
    BadPresentation(String),
    #[error("elements belong to different algebras")]
    AlgebraMismatch,
    #[error("coefficient vector has length {got}, expected {expected}")]
    BadLength { expected: usize, got: usize },
    #[error("element is not a central idempotent")]
    NotCentralIdempotent,
    #[error("ring presentation dimension {ring} does not match block dimension {block}")]
    DimensionMismatch { ring: usize, block: usize },
    #[error("generator images do not extend to a well-defined linear map")]
    InconsistentImages,
    #[error("completed map is not multiplicative")]
    NotMultiplicative,
    #[error("completed map is not unital (1 must map to the block idempotent)")]
    NotUnital,
    #[error("completed map is not injective")]
    NotInjective,
    #[error("generators span only {got} of {expected} dimensions")]
    IncompleteSpan { expected: usize, got: usize },
    #[error("invalid ring element literal {0:?}")]
    BadRingLiteral(String),
    #[error("unsupported ring presentation: {0}")]
    UnsupportedRing(String),
    #[error("outer code ring does not match the concatenation map")]
    RingMismatch,
    #[error("code is not invariant under the group action")]
    NotAModule,
    #[error("action is not free: a non-identity element fixes coordinate {0}")]
    NotFree(usize),
    #[error("permutations do not define a homomorphic group action")]
    NotAHomomorphism,
    #[error("two parts reference the same block")]
    OverlappingBlocks,
    #[error("self-dual construction precondition fails: {0}")]
    SelfDualCase(String),
    #[error("the zero code has no minimum distance")]
    ZeroCode,
    #[error("generators do not generate a subgroup containing only valid indices")]
    BadSubgroup,
    #[error("matrix file is malformed: {0}")]
    BadMatrixFile(String),
    #[error("config error: {0}")]
    Config(String),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
