//! The pyramidal encoding of a tour with step-backs.
//!
//! Every city `2..=n-1` gets one coordinate: `1` when the tour visits it on
//! the way up from city 1 to city n, `0` when it is visited on the way back
//! down. A step-back peak `i` marks the pair of coordinates `(i - 1, i)`: the
//! two cities are visited in the same direction but in swapped order.
//!
//! Encodings order canonically by their bit string (`0 < 1`, city 2 first)
//! and then by the sorted list of step-back peaks. This is the order used for
//! enumeration, vertex ids and solver tie-breaks.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result, Violation};

/// Role of a coordinate with respect to step-back pairs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Mark {
    /// Not covered by any step-back pair.
    Plain,
    /// City `i - 1` of a pair whose peak is `i`.
    Lower,
    /// The step-back peak itself.
    Peak,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "EncodingJson", into = "EncodingJson")]
pub struct PsbEncoding {
    n: usize,
    bits: Vec<bool>,
    peaks: Vec<usize>,
    // derived from `peaks`; kept for O(1) coordinate lookups
    marks: Vec<Mark>,
}

/// Checks every invariant of a candidate encoding and reports all violations.
pub fn validate_encoding(
    n: usize,
    bits: &[bool],
    peaks: &[usize],
) -> std::result::Result<(), Vec<Violation>> {
    let mut violations = Vec::new();
    if n < 3 {
        violations.push(Violation::InstanceTooSmall { n });
        return Err(violations);
    }
    if bits.len() != n - 2 {
        violations.push(Violation::LengthMismatch {
            expected: n - 2,
            found: bits.len(),
        });
    }
    let mut sorted = peaks.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    for &p in &sorted {
        if !(3..n).contains(&p) {
            violations.push(Violation::PeakOutOfRange { peak: p, n });
            continue;
        }
        if let (Some(a), Some(b)) = (bits.get(p - 3), bits.get(p - 2)) {
            if a != b {
                violations.push(Violation::UnequalBits { peak: p });
            }
        }
    }
    for w in sorted.windows(2) {
        if w[1] == w[0] + 1 {
            violations.push(Violation::OverlappingPeaks {
                first: w[0],
                second: w[1],
            });
        }
    }
    if violations.is_empty() {
        Ok(())
    } else {
        Err(violations)
    }
}

impl PsbEncoding {
    /// Builds a validated encoding. `bits[k]` is the direction of city `k + 2`
    /// (`true` = ascending); `peaks` may be given in any order.
    pub fn new(n: usize, bits: Vec<bool>, peaks: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut peaks: Vec<usize> = peaks.into_iter().collect();
        validate_encoding(n, &bits, &peaks).map_err(Error::InvalidEncoding)?;
        peaks.sort_unstable();
        peaks.dedup();
        Ok(Self::from_parts_unchecked(n, bits, peaks))
    }

    pub(crate) fn from_parts_unchecked(n: usize, bits: Vec<bool>, peaks: Vec<usize>) -> Self {
        let mut marks = vec![Mark::Plain; n - 2];
        for &p in &peaks {
            marks[p - 3] = Mark::Lower;
            marks[p - 2] = Mark::Peak;
        }
        Self {
            n,
            bits,
            peaks,
            marks,
        }
    }

    /// The pyramidal tour `1, 2, ..., n`.
    pub fn all_ones(n: usize) -> Result<Self> {
        Self::uniform(n, true)
    }

    /// The pyramidal tour `1, n, n-1, ..., 2`.
    pub fn all_zeros(n: usize) -> Result<Self> {
        Self::uniform(n, false)
    }

    fn uniform(n: usize, bit: bool) -> Result<Self> {
        if n < 3 {
            return Err(Error::TooSmall(n));
        }
        Ok(Self::from_parts_unchecked(n, vec![bit; n - 2], Vec::new()))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Directions of cities `2..=n-1`, city 2 first.
    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    /// Sorted step-back peaks.
    pub fn peaks(&self) -> &[usize] {
        &self.peaks
    }

    /// Direction of `city` (must lie in `2..=n-1`).
    #[inline]
    pub fn bit(&self, city: usize) -> bool {
        self.bits[city - 2]
    }

    #[inline]
    pub fn mark(&self, city: usize) -> Mark {
        self.marks[city - 2]
    }

    pub fn marks(&self) -> &[Mark] {
        &self.marks
    }

    pub fn is_step_back_free(&self) -> bool {
        self.peaks.is_empty()
    }

    /// Compact literal `BITS[@P1,P2,...]`, e.g. `101101@5`.
    pub fn literal(&self) -> String {
        self.to_string()
    }

    /// Parses a compact literal and checks it against an expected size.
    pub fn parse_with_n(n: usize, literal: &str) -> Result<Self> {
        let enc: Self = literal.parse()?;
        if enc.n != n {
            return Err(Error::SizeMismatch {
                left: n,
                right: enc.n,
            });
        }
        Ok(enc)
    }

    pub fn bit_string(&self) -> String {
        self.bits
            .iter()
            .map(|&b| if b { '1' } else { '0' })
            .collect()
    }
}

impl fmt::Display for PsbEncoding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.bit_string())?;
        if !self.peaks.is_empty() {
            let peaks: Vec<String> = self.peaks.iter().map(ToString::to_string).collect();
            write!(f, "@{}", peaks.join(","))?;
        }
        Ok(())
    }
}

fn parse_bits(s: &str) -> std::result::Result<Vec<bool>, String> {
    s.chars()
        .map(|c| match c {
            '0' => Ok(false),
            '1' => Ok(true),
            other => Err(format!("unexpected character {other:?} in bit string")),
        })
        .collect()
}

impl FromStr for PsbEncoding {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let literal_err = |reason: String| Error::Literal {
            literal: s.to_string(),
            reason,
        };
        let s = s.trim();
        let (bits_part, peaks_part) = match s.split_once('@') {
            Some((b, p)) => (b, Some(p)),
            None => (s, None),
        };
        if bits_part.is_empty() {
            return Err(literal_err("empty bit string".into()));
        }
        let bits = parse_bits(bits_part).map_err(literal_err)?;
        let peaks = match peaks_part {
            None | Some("") => Vec::new(),
            Some(p) => p
                .split(',')
                .map(|t| t.trim().parse::<usize>())
                .collect::<std::result::Result<Vec<_>, _>>()
                .map_err(|e| literal_err(format!("bad peak list: {e}")))?,
        };
        Self::new(bits.len() + 2, bits, peaks)
    }
}

/// JSON form: `{"n": 8, "bits": "101101", "sb": [5]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct EncodingJson {
    pub n: usize,
    pub bits: String,
    pub sb: Vec<usize>,
}

impl From<PsbEncoding> for EncodingJson {
    fn from(e: PsbEncoding) -> Self {
        Self {
            n: e.n,
            bits: e.bit_string(),
            sb: e.peaks,
        }
    }
}

impl TryFrom<EncodingJson> for PsbEncoding {
    type Error = Error;

    fn try_from(j: EncodingJson) -> Result<Self> {
        let bits = parse_bits(&j.bits).map_err(|reason| Error::Literal {
            literal: j.bits.clone(),
            reason,
        })?;
        PsbEncoding::new(j.n, bits, j.sb)
    }
}
