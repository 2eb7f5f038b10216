use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition `{0}`")]
    InvalidPartition(String),
    #[error("invalid skew shape `{0}`")]
    InvalidSkewShape(String),
    #[error("invalid lattice path `{0}`: expected a string over {{0,1}}")]
    InvalidPath(String),
    #[error("invalid word `{0}`")]
    InvalidWord(String),
    #[error("ribbon length must be at least 1")]
    ZeroRibbonLength,
    #[error("no ribbon addable at {0}")]
    NoRibbonAddable(i64),
    #[error("no ribbon removable with head at {0}")]
    NoRibbonRemovable(i64),
    #[error("core {core} is not a {n}-core")]
    NotACore { core: String, n: usize },
    #[error("quotient has {got} slots, expected {n}")]
    QuotientLength { got: usize, n: usize },
    #[error("{0} is not a horizontal {1}-ribbon strip")]
    NotAStrip(String, usize),
    #[error("not a nested strip triple")]
    NotNestedStripTriple,
    #[error("relation violated: {0}")]
    RelationViolated(String),
    #[error("no standard tableau of shape {0}")]
    NoStandardTableau(String),
    #[error("polynomial is not symmetric")]
    NotSymmetric,
    #[error("bijection defined only for empty form")]
    NonEmptyForm,
    #[error("domino operation called with n = {0}")]
    NotDomino(usize),
    #[error("tableau is not a bad guy for {0}")]
    NotBad(String),
    #[error("internal invariant broken: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;
