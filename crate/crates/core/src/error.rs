use thiserror::Error;

/// Errors raised by every fallible operation in the crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("permutation is not a bijection of 0..{degree}")]
    NotABijection { degree: usize },

    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("group too large: closure exceeded {bound} elements")]
    GroupTooLarge { bound: usize },

    #[error("element does not belong to the group")]
    NotInGroup,

    #[error("the given elements do not generate the group")]
    DoesNotGenerate,

    #[error("length mismatch: {0} source elements but {1} target elements")]
    LengthMismatch(usize, usize),

    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("unknown generator `{name}` at line {line}, column {column}")]
    UnknownGenerator {
        name: String,
        line: usize,
        column: usize,
    },

    #[error("zero exponent at line {line}, column {column}")]
    ZeroExponent { line: usize, column: usize },

    #[error("enumeration exceeded max_cosets ({max_cosets})")]
    CosetLimit { max_cosets: usize },

    #[error("presentation has no generators")]
    NoGenerators,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("invalid map: {0}")]
    InvalidMap(String),

    #[error("boundary maps carry no closed-surface invariants")]
    BoundaryMap,

    #[error("operation requires a map without semi-edges")]
    SemiEdges,

    #[error("slot presence patterns differ")]
    SlotPatternMismatch,

    #[error("map is not in any recognized construction shape")]
    NotAConstructionShape,

    #[error("invalid flag map: {0}")]
    InvalidFlagMap(String),

    #[error("flag system is not connected")]
    Disconnected,

    #[error("enumeration budget exceeded: {candidates} candidate quadruples > {budget}")]
    EnumerationBudget { candidates: u64, budget: u64 },

    #[error("{0}")]
    Io(String),
}

impl Error {
    /// Whether the error reports an exhausted resource bound rather than bad input.
    pub fn is_resource_bound(&self) -> bool {
        matches!(
            self,
            Error::GroupTooLarge { .. } | Error::CosetLimit { .. } | Error::EnumerationBudget { .. }
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
