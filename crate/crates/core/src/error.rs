use thiserror::Error;

/// Every failure a computation in this crate can report.
///
/// Variant names are part of the command-line contract: the CLI prints
/// [`Error::name`] on a domain error.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("monoid has no elements")]
    Empty,
    #[error("monoid has {size} elements, above the configured limit of {limit}")]
    TooLarge { size: usize, limit: usize },
    #[error("table shape mismatch: expected {expected} entries in {what}, found {found}")]
    Shape {
        what: String,
        expected: usize,
        found: usize,
    },
    #[error("table entry ({row}, {col}) = {value} is not an element index")]
    BadIndex { row: usize, col: usize, value: usize },
    #[error("unknown element name {0:?}")]
    UnknownElement(String),
    #[error("element names must be unique and non-empty (offending name {0:?})")]
    BadName(String),
    #[error("element {identity} is not a two-sided identity (fails against element {witness})")]
    NoIdentity { identity: usize, witness: usize },
    #[error("associativity fails at ({0}, {1}, {2})")]
    NotAssociative(usize, usize, usize),
    #[error("operation is not commutative")]
    NotCommutative,
    #[error("monoid is not a group")]
    NotAGroup,
    #[error("monoid is not an abelian group")]
    NotAbelianGroup,
    #[error("subset is not a submonoid: {0}")]
    NotSubmonoid(String),
    #[error("map is not a monoid homomorphism: {0}")]
    NotHomomorphism(String),
    #[error("map does not send the submonoid to the identity (element {0})")]
    SubmonoidNotKilled(usize),
    #[error("module is zero")]
    ZeroModule,
    #[error("module has no unsuspended free ku summand")]
    NoUnitSummand,
    #[error("degree {0} is not positive")]
    NonPositiveDegree(i64),
    #[error("a finite group has at least one irreducible representation")]
    NoIrreducibles,
    #[error("torsion order {0} is not allowed (need n >= 2)")]
    BadTorsion(u64),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("invalid monoid file: {0}")]
    Format(String),
}

impl Error {
    /// Stable variant name used in reports.
    pub fn name(&self) -> &'static str {
        match self {
            Error::Empty => "Empty",
            Error::TooLarge { .. } => "TooLarge",
            Error::Shape { .. } => "Shape",
            Error::BadIndex { .. } => "BadIndex",
            Error::UnknownElement(_) => "UnknownElement",
            Error::BadName(_) => "BadName",
            Error::NoIdentity { .. } => "NoIdentity",
            Error::NotAssociative(..) => "NotAssociative",
            Error::NotCommutative => "NotCommutative",
            Error::NotAGroup => "NotAGroup",
            Error::NotAbelianGroup => "NotAbelianGroup",
            Error::NotSubmonoid(_) => "NotSubmonoid",
            Error::NotHomomorphism(_) => "NotHomomorphism",
            Error::SubmonoidNotKilled(_) => "SubmonoidNotKilled",
            Error::ZeroModule => "ZeroModule",
            Error::NoUnitSummand => "NoUnitSummand",
            Error::NonPositiveDegree(_) => "NonPositiveDegree",
            Error::NoIrreducibles => "NoIrreducibles",
            Error::BadTorsion(_) => "BadTorsion",
            Error::Parse { .. } => "Parse",
            Error::Format(_) => "Format",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
