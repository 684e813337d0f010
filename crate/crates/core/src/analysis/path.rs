use serde::Serialize;

use crate::adjacency::{adjacent, check_pair};
use crate::encoding::{Mark, PsbEncoding};
use crate::error::{Error, Result};

/// The step-back-free tour that sends every step-back coordinate of `x`
/// down and every other coordinate up.
pub fn pyramidalize(x: &PsbEncoding) -> PsbEncoding {
    let bits = x.marks().iter().map(|&m| m == Mark::Plain).collect();
    PsbEncoding::from_parts_unchecked(x.n(), bits, Vec::new())
}

/// A walk in the skeleton whose consecutive hops have been verified adjacent.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SkeletonPath {
    hops: Vec<PsbEncoding>,
}

impl SkeletonPath {
    pub fn hops(&self) -> &[PsbEncoding] {
        &self.hops
    }

    pub fn edge_count(&self) -> usize {
        self.hops.len() - 1
    }

    pub fn literals(&self) -> Vec<String> {
        self.hops.iter().map(PsbEncoding::literal).collect()
    }
}

/// Loop erasure: whenever a hop repeats, the detour between its two
/// occurrences is dropped. Consecutive pairs of the result are consecutive
/// pairs of the input.
fn erase_loops(hops: Vec<PsbEncoding>) -> Vec<PsbEncoding> {
    let mut out: Vec<PsbEncoding> = Vec::with_capacity(hops.len());
    for h in hops {
        if let Some(pos) = out.iter().position(|e| *e == h) {
            out.truncate(pos + 1);
        } else {
            out.push(h);
        }
    }
    out
}

/// Path `x → x̂ → ⟨1…1⟩ → ŷ → y` with repeated hops removed; every edge is
/// checked with the linear adjacency test.
pub fn four_hop_path(x: &PsbEncoding, y: &PsbEncoding) -> Result<SkeletonPath> {
    if x.n() != y.n() {
        return Err(Error::SizeMismatch {
            left: x.n(),
            right: y.n(),
        });
    }
    let ones = PsbEncoding::all_ones(x.n())?;
    let hops = erase_loops(vec![
        x.clone(),
        pyramidalize(x),
        ones,
        pyramidalize(y),
        y.clone(),
    ]);
    for w in hops.windows(2) {
        check_pair(&w[0], &w[1])?;
        if !adjacent(&w[0], &w[1])? {
            return Err(Error::VerificationFailed(w[0].literal(), w[1].literal()));
        }
    }
    Ok(SkeletonPath { hops })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn enc(s: &str) -> PsbEncoding {
        s.parse().unwrap()
    }

    #[test]
    fn pyramidalize_worked_example() {
        // 1 [1 1] 1 0 0 1 [0 0] 1 with pairs (3,4) and (9,10)
        let x = enc("1111001001@4,10");
        assert_eq!(pyramidalize(&x), enc("1001111001"));
    }

    #[test]
    fn step_back_free_goes_to_all_ones() {
        assert_eq!(pyramidalize(&enc("010011")), enc("111111"));
    }

    #[test]
    fn trivial_paths() {
        let x = enc("0110@4");
        assert_eq!(
            four_hop_path(&x, &x).unwrap().hops(),
            std::slice::from_ref(&x)
        );
        let p = four_hop_path(&enc("0101"), &enc("1111")).unwrap();
        assert_eq!(p.hops(), &[enc("0101"), enc("1111")]);
        assert_eq!(p.edge_count(), 1);
    }

    #[test]
    fn figure_two_to_its_reverse() {
        let x = enc("101101@5");
        let y = crate::transform::reverse_tour(&x);
        let p = four_hop_path(&x, &y).unwrap();
        assert!(p.edge_count() <= 4);
        assert_eq!(p.hops().first(), Some(&x));
        assert_eq!(p.hops().last(), Some(&y));
    }
}
