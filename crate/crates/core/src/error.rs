use thiserror::Error;

use crate::formula::ParseError;
use crate::rational::Rational;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("state space must contain at least one state")]
    EmptySpace,
    #[error("invalid state name `{0}`")]
    InvalidStateName(String),
    #[error("duplicate state `{0}`")]
    DuplicateState(String),
    #[error("unknown state `{0}`")]
    UnknownState(String),
    #[error("invalid atom name `{0}`")]
    InvalidAtomName(String),
    #[error("duplicate atom `{0}`")]
    DuplicateAtom(String),
    #[error("unknown atom `{0}`")]
    UnknownAtom(String),
    #[error("interpretation of `{atom}` is missing for state `{state}`")]
    MissingInterpretation { atom: String, state: String },
    #[error("expected a space of {expected} states, found {found}")]
    SpaceMismatch { expected: usize, found: usize },

    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("`=>` may only appear as the outermost connective in strict mode")]
    StrictEntailment,

    #[error("measure `{measure}` has no weight for state `{state}`")]
    MissingWeight { measure: String, state: String },
    #[error("measure `{measure}` gives state `{state}` negative weight {weight}")]
    NegativeWeight {
        measure: String,
        state: String,
        weight: Rational,
    },
    #[error("weights of measure `{measure}` sum to {total}, not 1")]
    NotNormalized { measure: String, total: Rational },
    #[error("invalid rational `{0}`")]
    InvalidRational(String),
    #[error("unknown measure `{0}`")]
    UnknownMeasure(String),
    #[error("invalid mass function: {0}")]
    InvalidMass(String),

    #[error("conditioning on {what} is undefined: it has probability 0")]
    UndefinedConditioning { what: String },
    #[error("evidence is totally conflicting: no pair of focal sets intersects")]
    TotalConflict,
    #[error("pointwise conditioning is undefined: every interpretation has probability 0")]
    NoSurvivingTerms,

    #[error("invalid model document: {0}")]
    Document(String),
}

impl Error {
    /// True for operations that are well-formed but mathematically undefined
    /// on their inputs (zero-probability conditioning, total conflict).
    pub fn is_undefined(&self) -> bool {
        matches!(
            self,
            Error::UndefinedConditioning { .. } | Error::TotalConflict | Error::NoSurvivingTerms
        )
    }
}
