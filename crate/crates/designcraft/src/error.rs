use thiserror::Error;

/// Errors reported by the code-construction, enumeration, and design layers.
#[derive(Debug, Error)]
pub enum Error {
    #[error("not irreducible: {0} has a nontrivial factor over GF(2)")]
    NotIrreducible(String),
    #[error("not primitive: x has multiplicative order {order} < 2^{m} - 1 modulo {modulus}")]
    NotPrimitive { modulus: String, order: u64, m: u32 },
    #[error("out of range: extension degree m={0} (supported: 3..=31)")]
    DegreeOutOfRange(u32),
    #[error("modulus degree {got} does not match extension degree {expected}")]
    ModulusDegreeMismatch { expected: u32, got: usize },
    #[error("designed distance too small: delta={0} (need delta >= 2)")]
    DesignedDistanceTooSmall(u64),
    #[error("m must be odd: got m={0}")]
    EvenExtensionDegree(u32),
    #[error("construction failed dimension check: expected k={expected}, generator yields k={got}")]
    DimensionCheckFailed { expected: usize, got: usize },
    #[error("generator rows are linearly dependent (rank {rank} < k={k})")]
    DependentRows { rank: usize, k: usize },
    #[error("invalid code parameters: n={n}, k={k}")]
    BadCodeShape { n: usize, k: usize },
    #[error("zero dual: code has full dimension k = n = {0}")]
    ZeroDual(usize),
    #[error("rank defect: all-one row is dependent on the padded generator rows")]
    RankDefect,
    #[error("enumeration too large: 2^{k} codewords exceeds budget 2^{budget_log2}")]
    EnumerationTooLarge { k: usize, budget_log2: u32 },
    #[error("verification too large: {subsets} t-subset counters exceed budget {budget}")]
    VerificationTooLarge { subsets: u128, budget: u64 },
    #[error("not uniform: blocks of sizes {0} and {1} in one design")]
    NotUniform(usize, usize),
    #[error("no blocks at weight {0}")]
    NoBlocksAtWeight(usize),
    #[error("t must be positive and smaller than the block size (t={t}, k={k})")]
    BadStrength { t: usize, k: usize },
    #[error("t too large: t={t} is not below the minimum distance d={d}")]
    StrengthTooLarge { t: usize, d: usize },
    #[error("not a valid code distribution: {0}")]
    InvalidDistribution(String),
    #[error("formula inconsistency: {0}")]
    FormulaInconsistency(String),
    #[error("not design-consistent: {count} blocks of size {k} on {v} points leave a remainder at t={t}")]
    NotDesignConsistent { count: String, t: usize, v: usize, k: usize },
    #[error("unsupported case: {0}")]
    UnsupportedCase(String),
    #[error("distributions are not a dual pair: {0}")]
    NotDualPair(String),
    #[error("parse error in {path}: {msg}")]
    Parse { path: String, msg: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
