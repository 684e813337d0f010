//! Canonical enumeration, counting and uniform sampling of encodings.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::encoding::PsbEncoding;
use crate::error::{Error, Result};

/// Streams every valid encoding of size `n` once, in canonical order:
/// bit strings lexicographically, and for each bit string the admissible
/// peak sets in lexicographic order of their sorted lists.
#[derive(Debug, Clone)]
pub struct Encodings {
    n: usize,
    bits: Vec<bool>,
    peaks: Vec<usize>,
    done: bool,
}

pub fn enumerate_encodings(n: usize) -> Result<Encodings> {
    if n < 3 {
        return Err(Error::TooSmall(n));
    }
    Ok(Encodings {
        n,
        bits: vec![false; n - 2],
        peaks: Vec::new(),
        done: false,
    })
}

impl Encodings {
    fn peak_fits(&self, p: usize) -> bool {
        p < self.n && self.bits[p - 3] == self.bits[p - 2]
    }

    /// Smallest admissible peak `>= from`.
    fn next_peak_from(&self, from: usize) -> Option<usize> {
        (from..self.n).find(|&p| self.peak_fits(p))
    }

    /// Lexicographic successor of the peak list for the current bits.
    fn advance_peaks(&mut self) -> bool {
        let from = self.peaks.last().map_or(3, |&p| p + 2);
        if let Some(p) = self.next_peak_from(from) {
            self.peaks.push(p);
            return true;
        }
        while let Some(p) = self.peaks.pop() {
            if let Some(q) = self.next_peak_from(p + 1) {
                self.peaks.push(q);
                return true;
            }
        }
        false
    }

    fn advance_bits(&mut self) -> bool {
        for b in self.bits.iter_mut().rev() {
            if *b {
                *b = false;
            } else {
                *b = true;
                return true;
            }
        }
        false
    }
}

impl Iterator for Encodings {
    type Item = PsbEncoding;

    fn next(&mut self) -> Option<PsbEncoding> {
        if self.done {
            return None;
        }
        let current =
            PsbEncoding::from_parts_unchecked(self.n, self.bits.clone(), self.peaks.clone());
        if !self.advance_peaks() && !self.advance_bits() {
            self.done = true;
        }
        Some(current)
    }
}

/// Number of encodings of size `n`.
///
/// Coordinates `2..=n-1` are tiled by single cities (two directions) and
/// step-back pairs (two directions), so with `m = n - 2` the count obeys
/// `f(m) = 2 f(m-1) + 2 f(m-2)`, `f(0) = 1`, `f(1) = 2`. The test suite
/// checks this against [`enumerate_encodings`].
pub fn count_encodings(n: usize) -> Result<u128> {
    if n < 3 {
        return Err(Error::TooSmall(n));
    }
    let (mut prev, mut cur): (u128, u128) = (1, 2);
    for _ in 2..=n - 2 {
        let next = prev
            .checked_add(cur)
            .and_then(|s| s.checked_mul(2))
            .ok_or(Error::CountOverflow(n))?;
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

/// Draws a uniformly random encoding, deterministic in `seed`.
///
/// Sampling walks the tiling left to right; the probability of placing a
/// pair with `m` coordinates left is `2 f(m-2) / f(m)`, computed through the
/// ratio `r(m) = f(m-1) / f(m) = 1 / (2 + 2 r(m-1))` so that large `n` never
/// overflows.
pub fn random_encoding(n: usize, seed: u64) -> Result<PsbEncoding> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_encoding_with(n, &mut rng)
}

pub fn random_encoding_with<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Result<PsbEncoding> {
    if n < 3 {
        return Err(Error::TooSmall(n));
    }
    let m = n - 2;
    // ratio[k] = f(k-1) / f(k)
    let mut ratio = vec![0.0f64; m + 1];
    if m >= 1 {
        ratio[1] = 0.5;
    }
    for k in 2..=m {
        ratio[k] = 1.0 / (2.0 + 2.0 * ratio[k - 1]);
    }
    let mut bits = Vec::with_capacity(m);
    let mut peaks = Vec::new();
    let mut left = m;
    while left > 0 {
        let bit = rng.gen::<bool>();
        let pair_prob = if left >= 2 {
            2.0 * ratio[left] * ratio[left - 1]
        } else {
            0.0
        };
        if rng.gen::<f64>() < pair_prob {
            let lower = n - left;
            bits.extend([bit, bit]);
            peaks.push(lower + 1);
            left -= 2;
        } else {
            bits.push(bit);
            left -= 1;
        }
    }
    Ok(PsbEncoding::from_parts_unchecked(n, bits, peaks))
}
