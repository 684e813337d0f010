//! Vertex adjacency in the 1-skeleton of the polytope of pyramidal tours with
//! step-backs.
//!
//! Two vertices are non-adjacent iff their encodings admit a left block and a
//! right block (see [`blocks`]) with equal directions strictly between them,
//! and the four parts they cut (left, central ascending, central descending,
//! right) differ in one of four patterns selected by the directions of the
//! two blocks. [`exhaustive`] tries every placement; [`fast`] decides each
//! pattern in one linear pass and backs [`adjacent`].

pub mod blocks;
pub mod exhaustive;
mod fast;
pub mod regions;

use serde::Serialize;

pub use blocks::{BlockClass, BlockLabel, BlockPosition};
pub use exhaustive::{nonadj_exhaustive, nonadj_exhaustive_case, AdjacencyWitness, WitnessJson};
pub use regions::{regions_differ, RegionView, View};

use crate::encoding::PsbEncoding;
use crate::error::{Error, Result};
use exhaustive::Parts;

/// The four non-adjacency patterns, keyed by the directions of the left and
/// right block.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum NonAdjCase {
    /// Both blocks ascending.
    One,
    /// Both blocks descending.
    Two,
    /// Left ascending, right descending.
    Three,
    /// Left descending, right ascending.
    Four,
}

impl NonAdjCase {
    pub const ALL: [NonAdjCase; 4] = [Self::One, Self::Two, Self::Three, Self::Four];

    pub fn from_id(id: u8) -> Result<Self> {
        match id {
            1 => Ok(Self::One),
            2 => Ok(Self::Two),
            3 => Ok(Self::Three),
            4 => Ok(Self::Four),
            other => Err(Error::InvalidCase(other)),
        }
    }

    pub fn id(self) -> u8 {
        self as u8 + 1
    }

    /// `(left block ascending, right block ascending)`.
    pub fn values(self) -> (bool, bool) {
        match self {
            Self::One => (true, true),
            Self::Two => (false, false),
            Self::Three => (true, false),
            Self::Four => (false, true),
        }
    }

    pub(crate) fn holds(self, p: Parts) -> bool {
        match self {
            Self::One => p.asc && (p.left || p.desc || p.right),
            Self::Two => p.desc && (p.left || p.asc || p.right),
            Self::Three => (p.asc || p.right) && (p.desc || p.left),
            Self::Four => (p.desc || p.right) && (p.asc || p.left),
        }
    }
}

pub(crate) fn check_pair(x: &PsbEncoding, y: &PsbEncoding) -> Result<()> {
    if x.n() != y.n() {
        return Err(Error::SizeMismatch {
            left: x.n(),
            right: y.n(),
        });
    }
    if x == y {
        return Err(Error::SameVertex);
    }
    Ok(())
}

/// Block patterns of the pair `(x, y)` anchored at coordinate `i`.
pub fn classify_pair_at(x: &PsbEncoding, y: &PsbEncoding, i: usize) -> Result<Vec<BlockClass>> {
    if x.n() != y.n() {
        return Err(Error::SizeMismatch {
            left: x.n(),
            right: y.n(),
        });
    }
    if !(2..x.n()).contains(&i) {
        return Err(Error::CoordinateOutOfRange { coord: i, n: x.n() });
    }
    Ok(blocks::blocks_anchored_at(x, y, i))
}

/// Linear-time test of one case.
pub fn nonadj_fast_condition(x: &PsbEncoding, y: &PsbEncoding, case: NonAdjCase) -> Result<bool> {
    check_pair(x, y)?;
    Ok(fast::scan(x, y, case))
}

/// Whether `v(x)` and `v(y)` span an edge of the polytope; `O(n)` time.
pub fn adjacent(x: &PsbEncoding, y: &PsbEncoding) -> Result<bool> {
    check_pair(x, y)?;
    Ok(!NonAdjCase::ALL.iter().any(|&c| fast::scan(x, y, c)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn enc(s: &str) -> PsbEncoding {
        s.parse().unwrap()
    }

    #[test]
    fn plain_ones_give_u11() {
        let got = classify_pair_at(&enc("111"), &enc("011"), 3).unwrap();
        assert!(got.contains(&BlockClass {
            label: BlockLabel::U11,
            position: BlockPosition::Single(3)
        }));
    }

    #[test]
    fn step_back_over_plain_gives_l1110() {
        // x: ascending pair (3, 4); y: 3 ascending, 4 descending
        let got = classify_pair_at(&enc("1111@4"), &enc("1101"), 3).unwrap();
        assert!(got.contains(&BlockClass {
            label: BlockLabel::L1110,
            position: BlockPosition::Double(3, 4)
        }));
    }

    #[test]
    fn opposite_plain_bits_match_nothing() {
        assert!(classify_pair_at(&enc("100"), &enc("000"), 2)
            .unwrap()
            .is_empty());
    }

    #[test]
    fn classify_errors() {
        assert!(classify_pair_at(&enc("111"), &enc("11"), 2).is_err());
        assert!(classify_pair_at(&enc("111"), &enc("011"), 5).is_err());
        assert!(classify_pair_at(&enc("111"), &enc("011"), 1).is_err());
    }

    #[test]
    fn figure_four_left_pair() {
        let (x, y) = (enc("11111@5"), enc("01111"));
        let w = nonadj_exhaustive(&x, &y).unwrap().unwrap();
        assert_eq!(w.case, NonAdjCase::One);
        assert!(w.revalidate(&x, &y));
        assert!(nonadj_fast_condition(&x, &y, NonAdjCase::One).unwrap());
        assert!(!adjacent(&x, &y).unwrap());
    }

    #[test]
    fn figure_four_right_pair() {
        let (x, y) = (enc("10010@4"), enc("10000@6"));
        let w = nonadj_exhaustive_case(&x, &y, NonAdjCase::Three)
            .unwrap()
            .unwrap();
        assert_eq!(w.case, NonAdjCase::Three);
        assert!(w.revalidate(&x, &y));
        assert!(nonadj_exhaustive(&x, &y)
            .unwrap()
            .unwrap()
            .revalidate(&x, &y));
        assert!(nonadj_fast_condition(&x, &y, NonAdjCase::Three).unwrap());
        assert!(!adjacent(&x, &y).unwrap());
    }

    #[test]
    fn all_ones_all_zeros_adjacent() {
        let (x, y) = (
            PsbEncoding::all_ones(6).unwrap(),
            PsbEncoding::all_zeros(6).unwrap(),
        );
        assert_eq!(nonadj_exhaustive(&x, &y).unwrap(), None);
        for case in NonAdjCase::ALL {
            assert!(!nonadj_fast_condition(&x, &y, case).unwrap());
        }
        assert!(adjacent(&x, &y).unwrap());
    }

    #[test]
    fn self_and_size_errors() {
        let x = enc("101");
        assert!(matches!(adjacent(&x, &x), Err(Error::SameVertex)));
        assert!(matches!(nonadj_exhaustive(&x, &x), Err(Error::SameVertex)));
        assert!(matches!(
            adjacent(&x, &enc("1011")),
            Err(Error::SizeMismatch { .. })
        ));
    }

    #[test]
    fn case_ids() {
        for c in NonAdjCase::ALL {
            assert_eq!(NonAdjCase::from_id(c.id()).unwrap(), c);
        }
        assert!(NonAdjCase::from_id(0).is_err());
        assert!(NonAdjCase::from_id(5).is_err());
    }
}
