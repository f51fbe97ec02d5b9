use std::fmt;

/// Errors reported by construction, validation and the decision pipeline.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A numeric literal could not be parsed as an exact rational.
    ParseNumber(String),
    /// A quadratic value was built with a negative radicand.
    NegativeRadicand,
    /// Two quadratic values over different radicands were compared directly.
    RadicandMismatch,
    /// A ring failed validation; carries the ring description and the
    /// offending vertex index where applicable.
    InvalidRing { reason: String, vertex: Option<usize> },
    /// A region failed validation (face overlap, bad hole nesting, ...).
    InvalidRegion(String),
    /// An operation that needs a non-empty region received an empty one.
    EmptyRegion,
    /// Radii passed to an annulus constructor were not `0 < a < b`.
    InvalidAnnulus(String),
    /// Decision parameters violated `0 < delta < eps < r`.
    InvalidParams(String),
    /// The clamping frame does not strictly contain the operand.
    FrameTooSmall,
    /// A convex-module input was not strictly convex counterclockwise.
    NotConvex(String),
    /// An internal contradiction that indicates a bug, never bad input.
    Defect(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::ParseNumber(s) => write!(f, "cannot parse number: {s}"),
            Error::NegativeRadicand => write!(f, "negative radicand"),
            Error::RadicandMismatch => {
                write!(f, "quadratic values over different radicands")
            }
            Error::InvalidRing { reason, vertex } => match vertex {
                Some(i) => write!(f, "invalid ring at vertex {i}: {reason}"),
                None => write!(f, "invalid ring: {reason}"),
            },
            Error::InvalidRegion(s) => write!(f, "invalid region: {s}"),
            Error::EmptyRegion => write!(f, "empty region"),
            Error::InvalidAnnulus(s) => write!(f, "invalid annulus radii: {s}"),
            Error::InvalidParams(s) => write!(f, "invalid parameters: {s}"),
            Error::FrameTooSmall => write!(f, "frame does not strictly contain the region"),
            Error::NotConvex(s) => write!(f, "not strictly convex: {s}"),
            Error::Defect(s) => write!(f, "internal defect: {s}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
