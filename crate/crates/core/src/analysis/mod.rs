//! Paths, diameter and cliques of the 1-skeleton.

mod clique;
mod diameter;
mod path;

pub use clique::{
    clique_construction, clique_construction_with, clique_member, max_clique, max_clique_within,
    CliqueFamily, CliqueMember, CliqueOutcome, DEFAULT_CLIQUE_CAP,
};
pub use diameter::{bfs_distances, diameter, diameter_with, eccentricities};
pub use path::{four_hop_path, pyramidalize, SkeletonPath};
