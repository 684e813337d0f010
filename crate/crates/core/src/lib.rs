//! Pyramidal tours with step-backs and the 1-skeleton of their polytope.
//!
//! * [`encoding`], [`tour`], [`enumerate`], [`transform`]: the data model.
//! * [`adjacency`]: linear-time and exhaustive vertex adjacency tests.
//! * [`oracle`], [`skeleton`]: complementary-pair ground truth and explicit
//!   1-skeleton graphs for small `n`.
//! * [`analysis`]: short paths, diameter and cliques of the skeleton.
//! * [`solver`]: minimum-cost tours over asymmetric distance matrices.
//! * [`verify`]: cross-method equivalence and invariant self-checks.

pub mod adjacency;
pub mod analysis;
pub mod encoding;
pub mod enumerate;
pub mod error;
pub mod oracle;
pub mod par;
pub mod skeleton;
pub mod solver;
pub mod tour;
pub mod transform;
pub mod verify;

pub use adjacency::{
    adjacent, nonadj_exhaustive, nonadj_fast_condition, AdjacencyWitness, NonAdjCase,
};
pub use encoding::{validate_encoding, Mark, PsbEncoding};
pub use enumerate::{count_encodings, enumerate_encodings, random_encoding};
pub use error::{Error, Result, Violation};
pub use oracle::{enumerate_tours, pair_oracle, PairOracle, PairWitness, TourSet};
pub use par::Exec;
pub use skeleton::{build_skeleton, Method, SkeletonGraph};
pub use tour::{char_vector, decode, encode, is_psb_tour, CharacteristicVector, Tour};
pub use transform::{relabel_mirror, reverse_tour};
