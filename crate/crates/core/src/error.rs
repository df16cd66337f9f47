use thiserror::Error;

/// Errors raised by semigroup construction, ring and field arithmetic,
/// homomorphism lifting and the expression front end.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("table entry at row {row}, column {col} is {value}, outside 0..{order}")]
    EntryOutOfRange {
        row: usize,
        col: usize,
        value: usize,
        order: usize,
    },
    #[error("operation is not associative: ({a}*{b})*{c} = {left} but {a}*({b}*{c}) = {right}")]
    NotAssociative {
        a: usize,
        b: usize,
        c: usize,
        left: usize,
        right: usize,
    },
    #[error("element {element} does not belong to semigroup {semigroup}")]
    ForeignElement { element: String, semigroup: String },
    #[error("unknown semigroup instance `{0}`")]
    UnknownInstance(String),
    #[error("malformed specification: {0}")]
    MalformedSpec(String),
    #[error("operands live over different semigroups ({left} vs {right})")]
    HandleMismatch { left: String, right: String },
    #[error("denominator is the zero class")]
    ZeroDenominator,
    #[error("semigroup {0} is not commutative")]
    NoncommutativeSemigroup(String),
    #[error("zero divisors: ({left}) * ({right}) = 0 with both factors nonzero")]
    ZeroDivisorDetected { left: String, right: String },
    #[error("division by the zero class")]
    DivisionByZeroClass,
    #[error("denominator {denominator} is mapped to zero by the lifted homomorphism")]
    DenominatorMapsToZero { denominator: String },
    #[error("rewrite search exceeded its bound of {bound}")]
    BoundExceeded { bound: usize },
    #[error("expected a sum over {expected}, got one over {found}")]
    WrongHandle { expected: String, found: String },
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("syntax error at position {pos}: {message}")]
    Syntax { pos: usize, message: String },
    #[error("{0}")]
    Io(String),
}

impl Error {
    /// Variant name, used as a stable tag in command-line diagnostics.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::EntryOutOfRange { .. } => "EntryOutOfRange",
            Error::NotAssociative { .. } => "NotAssociative",
            Error::ForeignElement { .. } => "ForeignElement",
            Error::UnknownInstance(_) => "UnknownInstance",
            Error::MalformedSpec(_) => "MalformedSpec",
            Error::HandleMismatch { .. } => "HandleMismatch",
            Error::ZeroDenominator => "ZeroDenominator",
            Error::NoncommutativeSemigroup(_) => "NoncommutativeSemigroup",
            Error::ZeroDivisorDetected { .. } => "ZeroDivisorDetected",
            Error::DivisionByZeroClass => "DivisionByZeroClass",
            Error::DenominatorMapsToZero { .. } => "DenominatorMapsToZero",
            Error::BoundExceeded { .. } => "BoundExceeded",
            Error::WrongHandle { .. } => "WrongHandle",
            Error::UnknownGenerator(_) => "UnknownGenerator",
            Error::Syntax { .. } => "SyntaxError",
            Error::Io(_) => "Io",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
