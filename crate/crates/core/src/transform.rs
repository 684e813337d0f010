//! Symmetries of the tour set, expressed on encodings.

use crate::encoding::PsbEncoding;

/// Encoding of the same cycle traversed backwards: every direction flips and
/// step-back peaks stay where they are.
pub fn reverse_tour(enc: &PsbEncoding) -> PsbEncoding {
    let bits = enc.bits().iter().map(|b| !b).collect();
    PsbEncoding::from_parts_unchecked(enc.n(), bits, enc.peaks().to_vec())
}

/// Encoding of the tour after relabeling city `i` as `n + 1 - i`.
///
/// Coordinates reverse and flip; a pair `(i - 1, i)` becomes
/// `(n + 1 - i, n + 2 - i)`, i.e. peak `i` maps to `n + 2 - i`, which stays in
/// `[3, n - 1]`.
pub fn relabel_mirror(enc: &PsbEncoding) -> PsbEncoding {
    let n = enc.n();
    let bits = enc.bits().iter().rev().map(|b| !b).collect();
    let mut peaks: Vec<usize> = enc.peaks().iter().map(|&p| n + 2 - p).collect();
    peaks.reverse();
    PsbEncoding::from_parts_unchecked(n, bits, peaks)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::enumerate_encodings;
    use crate::tour::{char_vector, decode};

    fn enc(s: &str) -> PsbEncoding {
        s.parse().unwrap()
    }

    #[test]
    fn ascending_maps_to_descending() {
        assert_eq!(reverse_tour(&enc("111")), enc("000"));
        assert_eq!(relabel_mirror(&enc("111")), enc("000"));
        assert_eq!(relabel_mirror(&enc("1100@3")), enc("1100@5"));
        assert_eq!(relabel_mirror(&enc("11100@4")), enc("11000@5"));
    }

    #[test]
    fn involutions_preserve_validity() {
        for n in 3..=8 {
            for e in enumerate_encodings(n).unwrap() {
                for t in [reverse_tour(&e), relabel_mirror(&e)] {
                    PsbEncoding::new(n, t.bits().to_vec(), t.peaks().to_vec()).unwrap();
                }
                assert_eq!(reverse_tour(&reverse_tour(&e)), e);
                assert_eq!(relabel_mirror(&relabel_mirror(&e)), e);
            }
        }
    }

    #[test]
    fn reverse_matches_backward_traversal() {
        for e in enumerate_encodings(6).unwrap() {
            assert_eq!(decode(&reverse_tour(&e)), decode(&e).reversed(), "{e}");
        }
    }

    #[test]
    fn mirror_matches_relabeled_edges() {
        let n = 5;
        for e in enumerate_encodings(n).unwrap() {
            let mut expected: Vec<(usize, usize)> = char_vector(&decode(&e))
                .edges()
                .iter()
                .map(|&(a, b)| (n + 1 - a, n + 1 - b))
                .collect();
            expected.sort_unstable();
            assert_eq!(
                char_vector(&decode(&relabel_mirror(&e))).edges(),
                &expected[..],
                "{e}"
            );
        }
    }
}
