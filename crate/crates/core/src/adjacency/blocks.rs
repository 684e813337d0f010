//! The twelve two-row block patterns plus the virtual blocks at cities 1 and n.
//!
//! A pattern is read with `x` as the top row and `y` as the bottom row.
//! Non-tilde coordinates must be plain (outside any step-back pair) unless the
//! pattern itself draws the pair. The tilde coordinate of an `L`/`R` block may
//! also be the outer element of a step-back pair that extends away from the
//! block: to the right for `L` blocks, to the left for `R` blocks.

use serde::Serialize;

use crate::encoding::{Mark, PsbEncoding};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum BlockLabel {
    U11,
    U00,
    U1111,
    U0000,
    L1110,
    L1011,
    L0001,
    L0100,
    R1101,
    R0111,
    R0010,
    R1000,
    VirtualLeft1,
    VirtualRightN,
}

impl BlockLabel {
    /// Direction shared by the non-tilde coordinates. Virtual blocks have
    /// none: they take whichever direction a case needs.
    pub fn value(self) -> Option<bool> {
        use BlockLabel::*;
        match self {
            U11 | U1111 | L1110 | L1011 | R1101 | R0111 => Some(true),
            U00 | U0000 | L0001 | L0100 | R0010 | R1000 => Some(false),
            VirtualLeft1 | VirtualRightN => None,
        }
    }

    pub fn is_double(self) -> bool {
        use BlockLabel::*;
        !matches!(self, U11 | U00 | VirtualLeft1 | VirtualRightN)
    }

    pub fn can_be_left(self) -> bool {
        use BlockLabel::*;
        !matches!(self, R1101 | R0111 | R0010 | R1000 | VirtualRightN)
    }

    pub fn can_be_right(self) -> bool {
        use BlockLabel::*;
        !matches!(self, L1110 | L1011 | L0001 | L0100 | VirtualLeft1)
    }
}

/// Coordinates covered by a block.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum BlockPosition {
    Single(usize),
    Double(usize, usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct BlockClass {
    pub label: BlockLabel,
    pub position: BlockPosition,
}

impl BlockClass {
    pub fn first(&self) -> usize {
        match self.position {
            BlockPosition::Single(c) | BlockPosition::Double(c, _) => c,
        }
    }

    pub fn last(&self) -> usize {
        match self.position {
            BlockPosition::Single(c) | BlockPosition::Double(_, c) => c,
        }
    }

    pub(crate) fn virtual_left() -> Self {
        Self {
            label: BlockLabel::VirtualLeft1,
            position: BlockPosition::Single(1),
        }
    }

    pub(crate) fn virtual_right(n: usize) -> Self {
        Self {
            label: BlockLabel::VirtualRightN,
            position: BlockPosition::Single(n),
        }
    }
}

#[inline]
fn plain(e: &PsbEncoding, c: usize, bit: bool) -> bool {
    e.bit(c) == bit && e.mark(c) == Mark::Plain
}

/// `e` has the step-back pair `(lower, lower + 1)` in direction `bit`.
#[inline]
fn pair_at(e: &PsbEncoding, lower: usize, bit: bool) -> bool {
    e.bit(lower) == bit && e.mark(lower) == Mark::Lower
}

#[inline]
fn tilde_opening_right(e: &PsbEncoding, c: usize, bit: bool) -> bool {
    e.bit(c) == bit && matches!(e.mark(c), Mark::Plain | Mark::Lower)
}

#[inline]
fn tilde_opening_left(e: &PsbEncoding, c: usize, bit: bool) -> bool {
    e.bit(c) == bit && matches!(e.mark(c), Mark::Plain | Mark::Peak)
}

/// Single `U` block at coordinate `c`, if any.
#[inline]
pub(crate) fn single_at(x: &PsbEncoding, y: &PsbEncoding, c: usize) -> Option<BlockLabel> {
    if plain(x, c, true) && plain(y, c, true) {
        Some(BlockLabel::U11)
    } else if plain(x, c, false) && plain(y, c, false) {
        Some(BlockLabel::U00)
    } else {
        None
    }
}

/// Double blocks on `(c, c + 1)`, as a small fixed-capacity list.
pub(crate) fn doubles_at(x: &PsbEncoding, y: &PsbEncoding, c: usize) -> DoubleBlocks {
    use BlockLabel::*;
    let mut out = DoubleBlocks::default();
    if c + 1 >= x.n() {
        return out;
    }
    let d = c + 1;
    for bit in [true, false] {
        let (u, l_xy, l_yx, r_xy, r_yx) = if bit {
            (U1111, L1110, L1011, R1101, R0111)
        } else {
            (U0000, L0001, L0100, R0010, R1000)
        };
        let xp = pair_at(x, c, bit);
        let yp = pair_at(y, c, bit);
        if xp && yp {
            out.push(u);
        }
        if xp && plain(y, c, bit) && tilde_opening_right(y, d, !bit) {
            out.push(l_xy);
        }
        if yp && plain(x, c, bit) && tilde_opening_right(x, d, !bit) {
            out.push(l_yx);
        }
        if xp && plain(y, d, bit) && tilde_opening_left(y, c, !bit) {
            out.push(r_xy);
        }
        if yp && plain(x, d, bit) && tilde_opening_left(x, c, !bit) {
            out.push(r_yx);
        }
    }
    out
}

#[derive(Debug, Default, Clone, Copy)]
pub(crate) struct DoubleBlocks {
    items: [Option<BlockLabel>; 4],
    len: usize,
}

impl DoubleBlocks {
    fn push(&mut self, label: BlockLabel) {
        self.items[self.len] = Some(label);
        self.len += 1;
    }

    pub(crate) fn iter(&self) -> impl Iterator<Item = BlockLabel> + '_ {
        self.items[..self.len].iter().flatten().copied()
    }
}

/// All block patterns anchored at coordinate `i`: the single block on `i` and
/// the double blocks on `(i, i + 1)`.
pub fn blocks_anchored_at(x: &PsbEncoding, y: &PsbEncoding, i: usize) -> Vec<BlockClass> {
    let mut out = Vec::new();
    if let Some(label) = single_at(x, y, i) {
        out.push(BlockClass {
            label,
            position: BlockPosition::Single(i),
        });
    }
    out.extend(doubles_at(x, y, i).iter().map(|label| BlockClass {
        label,
        position: BlockPosition::Double(i, i + 1),
    }));
    out
}
