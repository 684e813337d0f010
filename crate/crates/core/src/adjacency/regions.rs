use serde::Serialize;

use crate::encoding::PsbEncoding;
use crate::error::{Error, Result};

/// Which projection of the encodings a comparison looks at.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum View {
    /// Directions and step-back marks.
    Full01sb,
    /// Directions only.
    Bits01,
    /// Step-back marks of the ascending coordinates (directions must agree).
    AscendingSb,
    /// Step-back marks of the descending coordinates (directions must agree).
    DescendingSb,
}

/// A projection restricted to the coordinate interval `[lo, hi]`; empty when
/// `lo > hi`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RegionView {
    pub view: View,
    pub lo: usize,
    pub hi: usize,
}

impl RegionView {
    pub fn new(view: View, lo: usize, hi: usize) -> Self {
        Self { view, lo, hi }
    }
}

pub fn regions_differ(x: &PsbEncoding, y: &PsbEncoding, rv: RegionView) -> Result<bool> {
    if x.n() != y.n() {
        return Err(Error::SizeMismatch {
            left: x.n(),
            right: y.n(),
        });
    }
    if rv.lo > rv.hi {
        return Ok(false);
    }
    let n = x.n();
    for c in [rv.lo, rv.hi] {
        if !(2..n).contains(&c) {
            return Err(Error::CoordinateOutOfRange { coord: c, n });
        }
    }
    differ_unchecked(x, y, rv.view, rv.lo, rv.hi)
}

/// Same as [`regions_differ`] without range validation; `[lo, hi]` must lie
/// in `[2, n - 1]` or be empty.
pub(crate) fn differ_unchecked(
    x: &PsbEncoding,
    y: &PsbEncoding,
    view: View,
    lo: usize,
    hi: usize,
) -> Result<bool> {
    let mut differ = false;
    for c in lo..=hi {
        let (bx, by) = (x.bit(c), y.bit(c));
        let marks = x.mark(c) != y.mark(c);
        match view {
            View::Full01sb => differ |= bx != by || marks,
            View::Bits01 => differ |= bx != by,
            View::AscendingSb | View::DescendingSb => {
                if bx != by {
                    return Err(Error::RegionBitsDisagree(c));
                }
                let wanted = view == View::AscendingSb;
                differ |= bx == wanted && marks;
            }
        }
    }
    Ok(differ)
}
