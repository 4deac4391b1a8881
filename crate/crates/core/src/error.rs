use thiserror::Error;

use crate::complex::Face;

/// Errors raised by the library.
///
/// Variants fall into three groups: caller errors (bad input or a violated
/// precondition), search failures (a randomized search ran out of budget),
/// and law violations (a computed invariant disagreed with a theorem, which
/// always indicates a bug or a genericity failure).
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0:?} is not a face of the complex")]
    NotAFace(Face),
    #[error("the empty face is not allowed here")]
    EmptyFace,
    #[error("vertex label sets are not disjoint (shared label {0})")]
    VertexCollision(u32),
    #[error("complex is not pure")]
    NotPure,
    #[error("invalid bistellar move: {0}")]
    InvalidMove(String),
    #[error("no bistellar move available")]
    NoMoveAvailable,
    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("bad index {0}")]
    BadIndex(usize),
    #[error("law violated: {0}")]
    LawViolated(String),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("complex is not a homology manifold")]
    NotAManifold,
    #[error("complex is not connected")]
    NotConnected,
    #[error("no linear system of parameters found after {0} samples")]
    GenericityExhausted(usize),
    #[error("linear forms are not a linear system of parameters")]
    NotLsop,
    #[error("degree {0} out of range")]
    DegreeOutOfRange(usize),
    #[error("complex is not Cohen-Macaulay over the chosen field")]
    NotCohenMacaulay,
    #[error("complex is not Gorenstein* over the chosen field")]
    NotGorensteinStar,
    #[error("complex is not Buchsbaum over the chosen field")]
    NotBuchsbaum,
    #[error("complex is not an orientable connected homology manifold")]
    NotOrientableManifold,
    #[error("no weak Lefschetz element found in {0} tries")]
    SearchExhausted(usize),
    #[error("weak Lefschetz transfer failed after trying {tried} parameters")]
    TransferFailed { tried: usize },
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("Schenzel formula mismatch in degree {degree}: ring {ring}, formula {formula}")]
    SchenzelMismatch { degree: usize, ring: String, formula: String },
    #[error("formula mismatch: {0}")]
    FormulaMismatch(String),
    #[error("invalid fan: {0}")]
    InvalidFan(String),
    /// `line` is 1-based; 0 means the error concerns the whole document.
    #[error("parse error{}: {message}", if *line > 0 { format!(" at line {line}") } else { String::new() })]
    Parse { line: usize, message: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// The three groups of [`enum@Error`] described above.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorClass {
    Input,
    SearchExhausted,
    LawViolated,
}

impl Error {
    pub fn class(&self) -> ErrorClass {
        match self {
            Error::LawViolated(_) | Error::SchenzelMismatch { .. } | Error::FormulaMismatch(_) => {
                ErrorClass::LawViolated
            }
            Error::SearchExhausted(_) | Error::TransferFailed { .. } | Error::GenericityExhausted(_) => {
                ErrorClass::SearchExhausted
            }
            _ => ErrorClass::Input,
        }
    }

    /// Stable snake_case name of the variant.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::NotAFace(_) => "not_a_face",
            Error::EmptyFace => "empty_face",
            Error::VertexCollision(_) => "vertex_collision",
            Error::NotPure => "not_pure",
            Error::InvalidMove(_) => "invalid_move",
            Error::NoMoveAvailable => "no_move_available",
            Error::LengthMismatch { .. } => "length_mismatch",
            Error::BadIndex(_) => "bad_index",
            Error::LawViolated(_) => "law_violated",
            Error::ShapeMismatch(_) => "shape_mismatch",
            Error::DivisionByZero => "division_by_zero",
            Error::InvalidField(_) => "invalid_field",
            Error::NotAManifold => "not_a_manifold",
            Error::NotConnected => "not_connected",
            Error::GenericityExhausted(_) => "genericity_exhausted",
            Error::NotLsop => "not_lsop",
            Error::DegreeOutOfRange(_) => "degree_out_of_range",
            Error::NotCohenMacaulay => "not_cohen_macaulay",
            Error::NotGorensteinStar => "not_gorenstein_star",
            Error::NotBuchsbaum => "not_buchsbaum",
            Error::NotOrientableManifold => "not_orientable_manifold",
            Error::SearchExhausted(_) => "search_exhausted",
            Error::TransferFailed { .. } => "transfer_failed",
            Error::HypothesisViolated(_) => "hypothesis_violated",
            Error::SchenzelMismatch { .. } => "schenzel_mismatch",
            Error::FormulaMismatch(_) => "formula_mismatch",
            Error::InvalidFan(_) => "invalid_fan",
            Error::Parse { .. } => "parse",
        }
    }
}
