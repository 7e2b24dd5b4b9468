use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermError {
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
    #[error("point {} out of range for degree {degree}", point + 1)]
    PointOutOfRange { point: usize, degree: usize },
    #[error("point {} appears more than once", point + 1)]
    NotBijective { point: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error(transparent)]
    Perm(#[from] PermError),
    #[error("degree {degree} exceeds the cap of {cap} points")]
    DegreeCap { degree: usize, cap: usize },
    #[error("element {element} is not a member of the group")]
    NotMember { element: String },
    #[error("subgroup is not contained in the ambient group")]
    NotSubgroup,
    #[error("group order {order} exceeds the enumeration limit {limit}")]
    TooLarge { order: String, limit: u64 },
    #[error("{0} is not prime")]
    NotPrime(u64),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FszError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("degenerate query: g^{n} = g")]
    DegenerateQuery { n: u64 },
    #[error("n = {n} is not coprime to the order {order} of g")]
    NotCoprime { n: u64, order: u64 },
    #[error("m must be positive")]
    ZeroM,
    #[error("order of g ({g_order}) does not divide the exponent {exponent}")]
    NotDivisor { g_order: u64, exponent: u64 },
    #[error("g is not central in the counting group")]
    NotCentral,
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("m = {m} is not coprime to the index {index}")]
    IndexNotCoprime { m: u64, index: u64 },
    #[error("witness counts do not re-verify: recorded ({recorded_g}, {recorded_gn}), recounted ({count_g}, {count_gn})")]
    WitnessMismatch {
        recorded_g: u64,
        recorded_gn: u64,
        count_g: u64,
        count_gn: u64,
    },
    #[error("element scan budget of {budget} exceeded")]
    BudgetExceeded { budget: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("unknown group family `{0}`")]
    UnknownFamily(String),
    #[error("bad parameter for {family}: {reason}")]
    BadParameter { family: String, reason: String },
    #[error(transparent)]
    Group(#[from] GroupError),
}
