use std::fmt;

use thiserror::Error;

/// A single broken invariant of a candidate encoding, named by the offending
/// coordinate or peak.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    InstanceTooSmall { n: usize },
    LengthMismatch { expected: usize, found: usize },
    PeakOutOfRange { peak: usize, n: usize },
    UnequalBits { peak: usize },
    OverlappingPeaks { first: usize, second: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Violation::InstanceTooSmall { n } => write!(f, "instance size {n} is below 3"),
            Violation::LengthMismatch { expected, found } => {
                write!(f, "bits has length {found}, expected {expected}")
            }
            Violation::PeakOutOfRange { peak, n } => {
                write!(f, "peak {peak} outside [3, {}]", n.saturating_sub(1))
            }
            Violation::UnequalBits { peak } => {
                write!(f, "bits[{}]≠bits[{peak}] under peak {peak}", peak - 1)
            }
            Violation::OverlappingPeaks { first, second } => {
                write!(f, "overlapping peaks {first},{second}")
            }
        }
    }
}

fn join(violations: &[Violation]) -> String {
    violations
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join("; ")
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("instance size {0} is below the minimum of 3")]
    TooSmall(usize),
    #[error("invalid encoding: {}", join(.0))]
    InvalidEncoding(Vec<Violation>),
    #[error("invalid tour: {0}")]
    InvalidTour(String),
    #[error("tour is not a pyramidal tour with step-backs: {0}")]
    NotPsb(String),
    #[error("instance sizes differ ({left} vs {right})")]
    SizeMismatch { left: usize, right: usize },
    #[error("adjacency of a vertex with itself is undefined")]
    SameVertex,
    #[error("cannot parse encoding literal {literal:?}: {reason}")]
    Literal { literal: String, reason: String },
    #[error("coordinate {coord} outside [2, {}]", .n - 1)]
    CoordinateOutOfRange { coord: usize, n: usize },
    #[error("{what}: size {size} exceeds the cap of {cap}")]
    CapExceeded {
        what: &'static str,
        size: usize,
        cap: usize,
    },
    #[error("encoding count for n = {0} overflows u128")]
    CountOverflow(usize),
    #[error("encoding {0} is not part of the tour set")]
    NotInTourSet(String),
    #[error("graph is disconnected: vertex {1} unreachable from vertex {0}")]
    Disconnected(usize, usize),
    #[error("adjacency verification failed between {0} and {1}")]
    VerificationFailed(String, String),
    #[error("step-back region views need equal bits on the range; coordinate {0} disagrees")]
    RegionBitsDisagree(usize),
    #[error("invalid distance matrix: {0}")]
    InvalidMatrix(String),
    #[error("case id must be in 1..=4, got {0}")]
    InvalidCase(u8),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
