//! Self-checks shared by the CLI `selftest` and the acceptance suite.

use serde::Serialize;

use crate::adjacency::adjacent;
use crate::enumerate::{count_encodings, enumerate_encodings};
use crate::error::Result;
use crate::oracle::MAX_KEYED_N;
use crate::par::Exec;
use crate::skeleton::{build_skeleton_with, Method, SkeletonOptions};
use crate::tour::{decode, encode};
use crate::transform::{relabel_mirror, reverse_tour};

/// Outcome of comparing the three adjacency methods on every pair.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EquivalenceReport {
    pub n: usize,
    pub vertices: usize,
    pub pairs: usize,
    pub non_adjacent: usize,
    pub fast_vs_exhaustive: usize,
    pub fast_vs_oracle: usize,
    pub exhaustive_vs_oracle: usize,
}

impl EquivalenceReport {
    pub fn passed(&self) -> bool {
        self.fast_vs_exhaustive == 0 && self.fast_vs_oracle == 0 && self.exhaustive_vs_oracle == 0
    }
}

pub fn equivalence(n: usize, exec: Exec) -> Result<EquivalenceReport> {
    let opts = SkeletonOptions {
        slow_cap: MAX_KEYED_N,
        exec,
    };
    let fast = build_skeleton_with(n, Method::Fast, opts)?;
    let exhaustive = build_skeleton_with(n, Method::Exhaustive, opts)?;
    let oracle = build_skeleton_with(n, Method::Oracle, opts)?;
    let v = fast.vertex_count();
    let pairs = v * v.saturating_sub(1) / 2;
    Ok(EquivalenceReport {
        n,
        vertices: v,
        pairs,
        non_adjacent: pairs - oracle.graph().edge_count(),
        fast_vs_exhaustive: fast.disagreements(&exhaustive).len(),
        fast_vs_oracle: fast.disagreements(&oracle).len(),
        exhaustive_vs_oracle: exhaustive.disagreements(&oracle).len(),
    })
}

/// A named invariant with the number of violating cases.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvariantCheck {
    pub name: &'static str,
    pub n: usize,
    pub cases: usize,
    pub failures: usize,
}

impl InvariantCheck {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

/// Round trips, transform involutions, adjacency invariance under the
/// transforms, and count-versus-enumeration agreement at size `n`.
pub fn invariants(n: usize, exec: Exec) -> Result<Vec<InvariantCheck>> {
    let all: Vec<_> = enumerate_encodings(n)?.collect();
    let count = count_encodings(n)?;
    let mut out = vec![InvariantCheck {
        name: "count matches enumeration",
        n,
        cases: 1,
        failures: usize::from(count != all.len() as u128),
    }];
    let round_trip = all
        .iter()
        .filter(|e| encode(&decode(e)).ok().as_ref() != Some(*e))
        .count();
    out.push(InvariantCheck {
        name: "encode/decode round trip",
        n,
        cases: all.len(),
        failures: round_trip,
    });
    let involution = all
        .iter()
        .filter(|e| {
            reverse_tour(&reverse_tour(e)) != **e || relabel_mirror(&relabel_mirror(e)) != **e
        })
        .count();
    out.push(InvariantCheck {
        name: "transform involutions",
        n,
        cases: all.len(),
        failures: involution,
    });
    let len = all.len();
    let rows = exec.map_indices(len, |a| {
        (a + 1..len)
            .filter(|&b| {
                let (x, y) = (&all[a], &all[b]);
                let base = adjacent(x, y).expect("distinct");
                base != adjacent(&reverse_tour(x), &reverse_tour(y)).expect("distinct")
                    || base != adjacent(&relabel_mirror(x), &relabel_mirror(y)).expect("distinct")
                    || base != adjacent(y, x).expect("distinct")
            })
            .count()
    });
    out.push(InvariantCheck {
        name: "adjacency symmetric and transform invariant",
        n,
        cases: len * len.saturating_sub(1) / 2,
        failures: rows.iter().sum(),
    });
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_sizes_pass() {
        for n in 3..=6 {
            let r = equivalence(n, Exec::default()).unwrap();
            assert!(r.passed(), "{r:?}");
            assert!(invariants(n, Exec::default())
                .unwrap()
                .iter()
                .all(InvariantCheck::passed));
        }
        assert_eq!(equivalence(6, Exec::default()).unwrap().non_adjacent, 36);
    }
}
