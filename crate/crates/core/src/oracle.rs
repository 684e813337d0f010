//! Geometric ground truth at desk scale.
//!
//! Two vertices `v(x)`, `v(y)` are certainly non-adjacent when two other
//! tours `z`, `t` satisfy `v(z) + v(t) = v(x) + v(y)`: both segments share
//! their midpoint. For this polytope that pair criterion is also necessary,
//! which makes it an exact oracle that shares no logic with the block-based
//! checkers in [`crate::adjacency`].

use std::collections::HashMap;

use crate::encoding::PsbEncoding;
use crate::enumerate::enumerate_encodings;
use crate::error::{Error, Result};
use crate::par::Exec;
use crate::tour::{char_vector, decode, CharacteristicVector};

/// Largest `n` whose arc space fits the 128-bit pair keys.
pub const MAX_KEYED_N: usize = 11;

/// All encodings of one size with dense ids in canonical order.
#[derive(Debug, Clone)]
pub struct TourSet {
    n: usize,
    tours: Vec<PsbEncoding>,
    index: HashMap<PsbEncoding, usize>,
}

pub fn enumerate_tours(n: usize) -> Result<TourSet> {
    let tours: Vec<PsbEncoding> = enumerate_encodings(n)?.collect();
    let index = tours
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, e)| (e, i))
        .collect();
    Ok(TourSet { n, tours, index })
}

impl TourSet {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.tours.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tours.is_empty()
    }

    pub fn tours(&self) -> &[PsbEncoding] {
        &self.tours
    }

    pub fn get(&self, id: usize) -> &PsbEncoding {
        &self.tours[id]
    }

    pub fn id_of(&self, enc: &PsbEncoding) -> Option<usize> {
        self.index.get(enc).copied()
    }

    fn require_id(&self, enc: &PsbEncoding) -> Result<usize> {
        self.id_of(enc)
            .ok_or_else(|| Error::NotInTourSet(enc.literal()))
    }
}

/// Two tours whose edge multiset equals that of the queried pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairWitness {
    pub z: PsbEncoding,
    pub t: PsbEncoding,
}

/// Arc multiset with multiplicities in {0, 1, 2}: `(union, intersection)` of
/// two arc bitmasks.
type PairKey = (u128, u128);

fn arc_mask(v: &CharacteristicVector) -> u128 {
    v.edges().iter().fold(0u128, |m, &(a, b)| {
        m | 1u128 << CharacteristicVector::slot(v.n(), a, b)
    })
}

fn pair_key(a: u128, b: u128) -> PairKey {
    (a | b, a & b)
}

/// Tour set plus an index from summed edge multisets to the unordered tour
/// pairs producing them. Built once, read-only afterwards.
#[derive(Debug, Clone)]
pub struct PairOracle {
    tours: TourSet,
    masks: Vec<u128>,
    by_sum: HashMap<PairKey, Vec<(u32, u32)>>,
}

impl PairOracle {
    pub fn new(tours: TourSet) -> Result<Self> {
        let n = tours.n();
        if n > MAX_KEYED_N {
            return Err(Error::CapExceeded {
                what: "pair oracle",
                size: n,
                cap: MAX_KEYED_N,
            });
        }
        let masks: Vec<u128> = tours
            .tours()
            .iter()
            .map(|e| arc_mask(&char_vector(&decode(e))))
            .collect();
        let mut by_sum: HashMap<PairKey, Vec<(u32, u32)>> = HashMap::new();
        for a in 0..masks.len() {
            for b in a + 1..masks.len() {
                by_sum
                    .entry(pair_key(masks[a], masks[b]))
                    .or_default()
                    .push((a as u32, b as u32));
            }
        }
        Ok(Self {
            tours,
            masks,
            by_sum,
        })
    }

    pub fn for_size(n: usize) -> Result<Self> {
        Self::new(enumerate_tours(n)?)
    }

    pub fn tour_set(&self) -> &TourSet {
        &self.tours
    }

    /// Complementary pair by ids, `None` when the vertices are adjacent.
    pub fn witness_ids(&self, x: usize, y: usize) -> Option<(usize, usize)> {
        let key = pair_key(self.masks[x], self.masks[y]);
        let (lo, hi) = (x.min(y) as u32, x.max(y) as u32);
        self.by_sum.get(&key).and_then(|pairs| {
            pairs
                .iter()
                .find(|&&(a, b)| (a, b) != (lo, hi))
                .map(|&(a, b)| (a as usize, b as usize))
        })
    }

    pub fn adjacent_ids(&self, x: usize, y: usize) -> bool {
        self.witness_ids(x, y).is_none()
    }

    /// Edge-multiset check of a claimed witness against the queried pair.
    pub fn witness_is_valid(&self, x: usize, y: usize, z: usize, t: usize) -> bool {
        let distinct = ![x, y].contains(&z) && ![x, y].contains(&t) && z != t;
        distinct && pair_key(self.masks[z], self.masks[t]) == pair_key(self.masks[x], self.masks[y])
    }
}

/// Complementary pair `{z, t}` for `(x, y)` drawn from `oracle`'s tour set,
/// or `None` when the vertices are adjacent.
pub fn pair_oracle(
    x: &PsbEncoding,
    y: &PsbEncoding,
    oracle: &PairOracle,
) -> Result<Option<PairWitness>> {
    if x == y {
        return Err(Error::SameVertex);
    }
    let ts = oracle.tour_set();
    let (xi, yi) = (ts.require_id(x)?, ts.require_id(y)?);
    Ok(oracle.witness_ids(xi, yi).map(|(z, t)| PairWitness {
        z: ts.get(z).clone(),
        t: ts.get(t).clone(),
    }))
}

/// Exact edge-multiset equation `v(z) + v(t) = v(x) + v(y)` on explicit
/// characteristic vectors.
pub fn sums_match(x: &PsbEncoding, y: &PsbEncoding, z: &PsbEncoding, t: &PsbEncoding) -> bool {
    let mut lhs: Vec<(usize, usize)> = [z, t]
        .iter()
        .flat_map(|e| char_vector(&decode(e)).edges().to_vec())
        .collect();
    let mut rhs: Vec<(usize, usize)> = [x, y]
        .iter()
        .flat_map(|e| char_vector(&decode(e)).edges().to_vec())
        .collect();
    lhs.sort_unstable();
    rhs.sort_unstable();
    lhs == rhs
}

/// Adjacency of every unordered pair `(a, b)`, `a < b`, by the pair oracle.
pub fn oracle_adjacency_rows(oracle: &PairOracle, exec: Exec) -> Vec<Vec<usize>> {
    let len = oracle.tour_set().len();
    exec.map_indices(len, |a| {
        (a + 1..len)
            .filter(|&b| oracle.adjacent_ids(a, b))
            .collect()
    })
}
