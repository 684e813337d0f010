//! Single left-to-right pass deciding one non-adjacency case in `O(n)`.
//!
//! The scan keeps the set of flag states `(left differs, central ascending
//! differs, central descending differs)` reachable by some left block that
//! closed earlier and whose central part still has equal directions. At
//! every coordinate it
//!
//! 1. opens a fresh state for each left block of the case's left direction
//!    ending just before it (city 1 opens one before coordinate 2),
//! 2. closes against every right block of the case's right direction starting
//!    at it (city n closes after the last coordinate), recording success if
//!    some state plus the right-part flag satisfies the case,
//! 3. advances the open states through the coordinate, dropping them all when
//!    the directions disagree.
//!
//! There are only eight flag states, so the set is a byte and the pass is
//! linear. Like the reference procedure, the pass always runs to city n. Cases 1 and 2 differ from 3 and 4 only in the directions required
//! of the blocks and in the final predicate, so one scanner covers all four.

use super::blocks::{doubles_at, single_at, BlockLabel};
use super::exhaustive::Parts;
use super::NonAdjCase;
use crate::encoding::PsbEncoding;

#[derive(Clone, Copy, Default)]
struct FlagSet(u8);

impl FlagSet {
    fn bit(left: bool, asc: bool, desc: bool) -> u8 {
        1 << (left as u8 | (asc as u8) << 1 | (desc as u8) << 2)
    }

    fn insert(&mut self, left: bool) {
        self.0 |= Self::bit(left, false, false);
    }

    fn states(self) -> impl Iterator<Item = (bool, bool, bool)> {
        (0..8u8)
            .filter(move |s| self.0 & (1 << s) != 0)
            .map(|s| (s & 1 != 0, s & 2 != 0, s & 4 != 0))
    }

    /// Moves every state through one central coordinate.
    fn advance(&mut self, asc_diff: bool, desc_diff: bool) {
        let mut next = 0;
        for (l, a, d) in self.states() {
            next |= Self::bit(l, a || asc_diff, d || desc_diff);
        }
        self.0 = next;
    }
}

fn direction_fits(label: BlockLabel, wanted: bool) -> bool {
    label.value() == Some(wanted)
}

/// True iff the given case of the non-adjacency condition holds for `(x, y)`.
/// Callers guarantee equal sizes.
pub(crate) fn scan(x: &PsbEncoding, y: &PsbEncoding, case: NonAdjCase) -> bool {
    let n = x.n();
    let (left_dir, right_dir) = case.values();

    // right part [t, n-1] differs iff t <= last differing coordinate
    let last_diff = (2..n)
        .rev()
        .find(|&c| x.bit(c) != y.bit(c) || x.mark(c) != y.mark(c))
        .unwrap_or(0);

    let closes = |open: FlagSet, start: usize| {
        let right = start <= last_diff;
        open.states().any(|(left, asc, desc)| {
            case.holds(Parts {
                left,
                asc,
                desc,
                right,
            })
        })
    };

    let mut found = false;
    let mut open = FlagSet::default();
    let mut prefix_diff = false;
    // left blocks ending at the current coordinate open states one step later
    let mut opening_next = FlagSet::default();
    let mut opening_after_next = FlagSet::default();
    open.insert(false);

    for c in 2..n {
        open.0 |= opening_next.0;
        opening_next = opening_after_next;
        opening_after_next = FlagSet::default();

        if !found && open.0 != 0 {
            let single_closes = single_at(x, y, c).is_some_and(|l| direction_fits(l, right_dir));
            let double_closes = doubles_at(x, y, c)
                .iter()
                .any(|l| l.can_be_right() && direction_fits(l, right_dir));
            found = (single_closes || double_closes) && closes(open, c);
        }

        let (bx, by) = (x.bit(c), y.bit(c));
        let marks_differ = x.mark(c) != y.mark(c);
        if bx != by {
            open = FlagSet::default();
        } else {
            open.advance(bx && marks_differ, !bx && marks_differ);
        }
        prefix_diff |= bx != by || marks_differ;

        // the left part of a block ending at `c` is [2, c]
        if single_at(x, y, c).is_some_and(|l| direction_fits(l, left_dir)) {
            opening_next.insert(prefix_diff);
        }
        if doubles_at(x, y, c)
            .iter()
            .any(|l| l.can_be_left() && direction_fits(l, left_dir))
        {
            // the block covers c and c + 1; its left part always differs
            // (L blocks) or equals the prefix before c (U blocks), and
            // both are captured by the prefix through c + 1
            let through_next =
                prefix_diff || x.bit(c + 1) != y.bit(c + 1) || x.mark(c + 1) != y.mark(c + 1);
            opening_after_next.insert(through_next);
        }
    }
    open.0 |= opening_next.0;
    found || closes(open, n)
}
