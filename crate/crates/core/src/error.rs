use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("empty generator list")]
    EmptyGenerators,
    #[error("generator {0} is not positive")]
    NonPositiveGenerator(i64),
    #[error("generators have gcd {0}; the value set is not a numerical semigroup")]
    NonCoprime(i64),
    #[error("sieve exceeded the cap of {0} without finding the conductor")]
    SieveCapExceeded(i64),
    #[error("{0} is not a positive element of the semigroup")]
    NotMember(i64),
    #[error("ideals live over different semigroups")]
    AmbientMismatch,
    #[error("first ideal is not contained in the second")]
    NotContained,
    #[error("ideal is not a proper m-primary ideal of the semigroup ring")]
    NotMPrimary,
    #[error("value set is not closed under addition of the semigroup")]
    NotAnIdeal,
    #[error("internal invariant violated: {0}")]
    InternalInvariantViolation(String),
    #[error("the semigroup ring is a DVR (H = N)")]
    IsDvr,
    #[error("expected 3 minimal generators, found {0}")]
    NotThreeGenerated(usize),
    #[error("semigroup is symmetric; the presentation is a complete intersection")]
    SymmetricSemigroup,
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("ring is Gorenstein (bideg = 0)")]
    GorensteinInput,
    #[error("enumeration limit of {0} ideals exceeded")]
    LimitExceeded(usize),
    #[error("search budget of {0} nodes exceeded")]
    SearchBudgetExceeded(u64),
    #[error("cannot parse {what}: {value:?}")]
    Parse { what: &'static str, value: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
