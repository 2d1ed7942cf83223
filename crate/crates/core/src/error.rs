use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{a} and {m} are not coprime")]
    NotCoprime { a: u64, m: u64 },
    #[error("unsupported field GF({p}^{k})")]
    UnsupportedField { p: u64, k: u32 },
    #[error("no element of order {d} in GF({size})")]
    NoSuchOrder { d: u64, size: u64 },
    #[error("group closure exceeded the cap of {cap} elements")]
    ClosureCapExceeded { cap: usize },
    #[error("prime {p} does not divide the group order {order}")]
    PrimeDoesNotDivide { p: u64, order: usize },
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("element set is not closed under multiplication")]
    NotClosed,
    #[error("subgroup budget exceeded after {reached} subgroups")]
    BudgetExceeded { reached: usize },
    #[error("parameter out of range: {0}")]
    ParameterOutOfRange(String),
    #[error("{q} does not divide {p} - 1, no non-trivial power automorphism of order {q}")]
    BadPowerAutomorphism { p: u64, q: u64 },
    #[error("line {line}, column {column}: {message}")]
    GeneratorFile {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("criterion not applicable: {0}")]
    NotApplicable(String),
    #[error("group is not abelian")]
    NotAbelian,
    #[error("group is not nilpotent")]
    NotNilpotent,
    #[error("group is not a P-group")]
    NotPGroup,
    #[error("group is not a Schmidt group")]
    NotSchmidt,
    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
