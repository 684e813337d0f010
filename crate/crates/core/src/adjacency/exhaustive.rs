//! Literal search over every (left block, right block) placement.
//!
//! This is the `O(n^3)` reference the linear scan in [`super::fast`] is
//! checked against: `O(n^2)` block placements, each with an `O(n)`
//! comparison of the four parts.

use serde::Serialize;

use super::blocks::{doubles_at, single_at, BlockClass, BlockLabel, BlockPosition};
use super::regions::{differ_unchecked, View};
use super::{check_pair, NonAdjCase};
use crate::encoding::PsbEncoding;
use crate::error::Result;

/// A left/right block placement plus the case it satisfies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct AdjacencyWitness {
    pub left: BlockClass,
    pub right: BlockClass,
    pub case: NonAdjCase,
    /// First city after the left block.
    pub i_a: usize,
    /// Last city before the right block.
    pub j_b: usize,
}

/// Compact JSON form `{"i":…, "j":…, "case":…, "i_a":…, "j_b":…}`.
#[derive(Debug, Clone, Serialize)]
pub struct WitnessJson {
    pub i: usize,
    pub j: usize,
    pub case: u8,
    pub i_a: usize,
    pub j_b: usize,
}

impl AdjacencyWitness {
    /// City of the left block (1 for the virtual block).
    pub fn i(&self) -> usize {
        self.left.first()
    }

    /// City of the right block (n for the virtual block).
    pub fn j(&self) -> usize {
        self.right.last()
    }

    pub fn to_json(&self) -> WitnessJson {
        WitnessJson {
            i: self.i(),
            j: self.j(),
            case: self.case.id(),
            i_a: self.i_a,
            j_b: self.j_b,
        }
    }

    fn sort_key(&self) -> (usize, usize, u8, BlockLabel, BlockLabel) {
        (
            self.i(),
            self.j(),
            self.case.id(),
            self.left.label,
            self.right.label,
        )
    }

    /// Re-derives every claim of the witness from scratch.
    pub fn revalidate(&self, x: &PsbEncoding, y: &PsbEncoding) -> bool {
        if x.n() != y.n() || x == y {
            return false;
        }
        let n = x.n();
        let Some(left) = placement_edge(x, y, &self.left, Side::Left) else {
            return false;
        };
        let Some(right) = placement_edge(x, y, &self.right, Side::Right) else {
            return false;
        };
        if left != self.i_a || right != self.j_b || self.i_a > self.j_b + 1 || self.j_b >= n {
            return false;
        }
        let (lv, rv) = self.case.values();
        let fits = |label: BlockLabel, v: bool| label.value().is_none_or(|b| b == v);
        if !fits(self.left.label, lv) || !fits(self.right.label, rv) {
            return false;
        }
        parts(x, y, self.i_a, self.j_b).is_some_and(|p| self.case.holds(p))
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Side {
    Left,
    Right,
}

/// Confirms the block really matches at its position and returns `i_a`
/// (left) or `j_b` (right).
fn placement_edge(x: &PsbEncoding, y: &PsbEncoding, b: &BlockClass, side: Side) -> Option<usize> {
    let n = x.n();
    match (b.label, b.position, side) {
        (BlockLabel::VirtualLeft1, BlockPosition::Single(1), Side::Left) => Some(2),
        (BlockLabel::VirtualRightN, BlockPosition::Single(c), Side::Right) if c == n => Some(n - 1),
        (label, BlockPosition::Single(c), _) if (2..n).contains(&c) => (single_at(x, y, c)
            == Some(label))
        .then_some(if side == Side::Left { c + 1 } else { c - 1 }),
        (label, BlockPosition::Double(c, d), _) if d == c + 1 && (2..n - 1).contains(&c) => {
            let ok = doubles_at(x, y, c).iter().any(|l| l == label)
                && match side {
                    Side::Left => label.can_be_left(),
                    Side::Right => label.can_be_right(),
                };
            ok.then_some(if side == Side::Left { d + 1 } else { c - 1 })
        }
        _ => None,
    }
}

/// Difference flags of the four parts cut by blocks ending at `i_a - 1` and
/// starting at `j_b + 1`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub(crate) struct Parts {
    pub left: bool,
    pub asc: bool,
    pub desc: bool,
    pub right: bool,
}

/// `None` when the central directions do not coincide.
fn parts(x: &PsbEncoding, y: &PsbEncoding, i_a: usize, j_b: usize) -> Option<Parts> {
    let n = x.n();
    if differ_unchecked(x, y, View::Bits01, i_a, j_b).ok()? {
        return None;
    }
    Some(Parts {
        left: differ_unchecked(x, y, View::Full01sb, 2, i_a - 1).ok()?,
        asc: differ_unchecked(x, y, View::AscendingSb, i_a, j_b).ok()?,
        desc: differ_unchecked(x, y, View::DescendingSb, i_a, j_b).ok()?,
        right: differ_unchecked(x, y, View::Full01sb, j_b + 1, n - 1).ok()?,
    })
}

struct Placement {
    block: BlockClass,
    edge: usize,
}

fn left_placements(x: &PsbEncoding, y: &PsbEncoding) -> Vec<Placement> {
    let n = x.n();
    let mut out = vec![Placement {
        block: BlockClass::virtual_left(),
        edge: 2,
    }];
    for c in 2..n {
        if let Some(label) = single_at(x, y, c) {
            out.push(Placement {
                block: BlockClass {
                    label,
                    position: BlockPosition::Single(c),
                },
                edge: c + 1,
            });
        }
        for label in doubles_at(x, y, c).iter().filter(|l| l.can_be_left()) {
            out.push(Placement {
                block: BlockClass {
                    label,
                    position: BlockPosition::Double(c, c + 1),
                },
                edge: c + 2,
            });
        }
    }
    out
}

fn right_placements(x: &PsbEncoding, y: &PsbEncoding) -> Vec<Placement> {
    let n = x.n();
    let mut out = Vec::new();
    for c in 2..n {
        if let Some(label) = single_at(x, y, c) {
            out.push(Placement {
                block: BlockClass {
                    label,
                    position: BlockPosition::Single(c),
                },
                edge: c - 1,
            });
        }
        for label in doubles_at(x, y, c).iter().filter(|l| l.can_be_right()) {
            out.push(Placement {
                block: BlockClass {
                    label,
                    position: BlockPosition::Double(c, c + 1),
                },
                edge: c - 1,
            });
        }
    }
    out.push(Placement {
        block: BlockClass::virtual_right(n),
        edge: n - 1,
    });
    out
}

fn search(x: &PsbEncoding, y: &PsbEncoding, only: Option<NonAdjCase>) -> Option<AdjacencyWitness> {
    let lefts = left_placements(x, y);
    let rights = right_placements(x, y);
    let mut best: Option<AdjacencyWitness> = None;
    for l in &lefts {
        for r in &rights {
            if l.edge > r.edge + 1 {
                continue;
            }
            let Some(p) = parts(x, y, l.edge, r.edge) else {
                continue;
            };
            for case in NonAdjCase::ALL {
                if only.is_some_and(|c| c != case) {
                    continue;
                }
                let (lv, rv) = case.values();
                let fits = |b: &BlockClass, v: bool| b.label.value().is_none_or(|x| x == v);
                if !fits(&l.block, lv) || !fits(&r.block, rv) || !case.holds(p) {
                    continue;
                }
                let w = AdjacencyWitness {
                    left: l.block,
                    right: r.block,
                    case,
                    i_a: l.edge,
                    j_b: r.edge,
                };
                if best.is_none_or(|b| w.sort_key() < b.sort_key()) {
                    best = Some(w);
                }
            }
        }
    }
    best
}

/// Smallest `(i, j, case)` witness of non-adjacency, or `None` when the
/// vertices are adjacent.
pub fn nonadj_exhaustive(x: &PsbEncoding, y: &PsbEncoding) -> Result<Option<AdjacencyWitness>> {
    check_pair(x, y)?;
    Ok(search(x, y, None))
}

/// Smallest witness satisfying one specific case.
pub fn nonadj_exhaustive_case(
    x: &PsbEncoding,
    y: &PsbEncoding,
    case: NonAdjCase,
) -> Result<Option<AdjacencyWitness>> {
    check_pair(x, y)?;
    Ok(search(x, y, Some(case)))
}
