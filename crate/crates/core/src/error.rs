use thiserror::Error;

/// Errors raised by table, algebra and catalog operations.
#[derive(Debug, Error)]
pub enum Error {
    #[error("table must have order >= 1")]
    EmptyTable,
    #[error("table order {order} exceeds the supported maximum of {max}")]
    OrderTooLarge { order: usize, max: usize },
    #[error("row {row} has {len} entries, expected {order}")]
    RaggedRow {
        row: usize,
        len: usize,
        order: usize,
    },
    #[error("entry {value} at row {row}, column {col} is outside 1..={order}")]
    EntryOutOfRange {
        row: usize,
        col: usize,
        value: usize,
        order: usize,
    },
    #[error("orders do not match: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },
    #[error("operation requires an associative table")]
    NotAssociative,
    #[error("operation requires a commutative table")]
    NotCommutative,
    #[error("semigroup has no zero element")]
    NoZeroElement,
    #[error("permutation degree {n} is outside 1..={max}")]
    DegreeOutOfRange { n: usize, max: usize },
    #[error("image {image:?} is not a bijection on 1..={n}")]
    NotABijection { n: usize, image: Vec<usize> },
    #[error("subset member {value} is outside 1..={n}")]
    MemberOutOfRange { value: usize, n: usize },
    #[error("subset must be nonempty")]
    EmptySubset,
    #[error("subset size {k} is outside {lo}..={hi}")]
    SubsetSizeOutOfRange { k: usize, lo: usize, hi: usize },
    #[error("subspace parts are not a disjoint cover of 1..={n}")]
    NotADisjointCover { n: usize },
    #[error("metric entry ({i},{j}) differs from ({j},{i}); matrix is not symmetric")]
    AsymmetricMetric { i: usize, j: usize },
    #[error("generator index {index} is outside 1..={dim}")]
    GeneratorOutOfRange { index: usize, dim: usize },
    #[error("cannot set a nonzero bracket [X_{i}, X_{i}]")]
    DiagonalBracket { i: usize },
    #[error("structure constants do not satisfy the Jacobi identity")]
    NotLie,
    #[error("enumeration order {order} is outside 1..={max}")]
    EnumerationOrderOutOfRange { order: usize, max: usize },
    #[error("subsets do not form a resonant decomposition of the table")]
    NotResonant,
    #[error("subspace decomposition does not satisfy the graded bracket structure")]
    NotGraded,
    #[error("expansion is not in the required mode for this operation")]
    WrongMode,
    #[error("retained generator set is empty; the result would be a 0-dimensional algebra")]
    EmptyRetained,
    #[error(
        "closure violation: bracket of retained generators ({i0},{a0}), ({i1},{a1}) \
         leaves the retained set"
    )]
    ClosureViolation {
        i0: usize,
        a0: usize,
        i1: usize,
        a1: usize,
    },
    #[error("{path}:{line}: {msg}")]
    Parse {
        path: String,
        line: usize,
        msg: String,
    },
    #[error("catalog id {id} not found")]
    UnknownId { id: u32 },
    #[error("io error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn io(path: &std::path::Path, source: std::io::Error) -> Self {
        Error::Io {
            path: path.display().to_string(),
            source,
        }
    }

    pub(crate) fn parse(path: &str, line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            path: path.to_string(),
            line,
            msg: msg.into(),
        }
    }
}
