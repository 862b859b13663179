use num_bigint::BigInt;

/// Errors shared by all modules of the crate.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid cyclic group: {0}")]
    InvalidGroup(String),

    #[error("group mismatch: Z/{0} (epsilon {1:+}) vs Z/{2} (epsilon {3:+})")]
    GroupMismatch(usize, i8, usize, i8),

    #[error("element is not a unit of Z[Z/{n}]: circulant determinant is {determinant}")]
    NotAUnit { n: usize, determinant: BigInt },

    #[error("{a} is not invertible mod {n}")]
    NotCoprime { a: i64, n: usize },

    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("bass unit precondition violated: need 1 < a < n and gcd(a, n) = 1, got a = {a}, n = {n}")]
    BassUnitRange { a: i64, n: usize },

    #[error("constructed Bass unit for a = {a}, n = {n} failed the unit check (determinant {determinant}); this is a bug")]
    BassUnitNotUnit { a: i64, n: usize, determinant: BigInt },

    #[error("precision insufficient: {0}")]
    PrecisionInsufficient(String),

    #[error("generator set inconsistent: {0}")]
    InconsistentBasis(String),

    #[error("operation requires dimension >= {required}, got {actual}")]
    DimensionTooLow { required: usize, actual: usize },

    #[error("involution acts nontrivially on the supplied generators; {0}")]
    NontrivialInvolution(String),

    #[error("incompatible manifold profiles: {0}")]
    IncompatibleProfiles(String),

    #[error("cobordism endpoints do not match: {0}")]
    EndpointMismatch(String),

    #[error("rank cross-validation failed for n = {n}: closed form gives {closed}, Bass log-lattice gives {lattice}; this signals a bug")]
    RankValidation {
        n: usize,
        closed: usize,
        lattice: usize,
    },

    #[error("invalid registry: {0}")]
    Registry(String),
}

pub type Result<T> = std::result::Result<T, Error>;
