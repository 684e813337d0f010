//! Explicit tours, the peak predicates, and the bijection with encodings.

use std::collections::BTreeSet;
use std::fmt;

use crate::encoding::{Mark, PsbEncoding};
use crate::error::{Error, Result};

/// A directed Hamiltonian cycle on cities `1..=n`, stored from city 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tour {
    seq: Vec<usize>,
}

impl Tour {
    pub fn new(seq: Vec<usize>) -> Result<Self> {
        let n = seq.len();
        if n < 3 {
            return Err(Error::TooSmall(n));
        }
        if seq[0] != 1 {
            return Err(Error::InvalidTour(format!(
                "must start at city 1, starts at {}",
                seq[0]
            )));
        }
        let mut seen = vec![false; n + 1];
        for &c in &seq {
            if c == 0 || c > n {
                return Err(Error::InvalidTour(format!("city {c} outside [1, {n}]")));
            }
            if std::mem::replace(&mut seen[c], true) {
                return Err(Error::InvalidTour(format!("city {c} visited twice")));
            }
        }
        Ok(Self { seq })
    }

    pub fn n(&self) -> usize {
        self.seq.len()
    }

    pub fn cities(&self) -> &[usize] {
        &self.seq
    }

    /// `succ[c]` is the city visited after `c`; index 0 unused.
    pub fn successors(&self) -> Vec<usize> {
        let n = self.n();
        let mut succ = vec![0; n + 1];
        for k in 0..n {
            succ[self.seq[k]] = self.seq[(k + 1) % n];
        }
        succ
    }

    pub fn predecessors(&self) -> Vec<usize> {
        let n = self.n();
        let mut pred = vec![0; n + 1];
        for k in 0..n {
            pred[self.seq[(k + 1) % n]] = self.seq[k];
        }
        pred
    }

    /// The same cycle traversed backwards, still starting at city 1.
    pub fn reversed(&self) -> Tour {
        let mut seq = Vec::with_capacity(self.n());
        seq.push(1);
        seq.extend(self.seq[1..].iter().rev());
        Tour { seq }
    }
}

impl fmt::Display for Tour {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.seq.iter().map(ToString::to_string).collect();
        write!(f, "<{}>", parts.join(","))
    }
}

/// Cities whose predecessor and successor are both smaller.
pub fn peaks(tour: &Tour) -> BTreeSet<usize> {
    let succ = tour.successors();
    let pred = tour.predecessors();
    (1..=tour.n())
        .filter(|&i| pred[i] < i && succ[i] < i)
        .collect()
}

/// Peaks that only swap the order of `i - 1` and `i` inside a monotone run,
/// in either the ascending or the descending direction.
pub fn step_back_peaks(tour: &Tour) -> BTreeSet<usize> {
    let succ = tour.successors();
    let pred = tour.predecessors();
    (2..=tour.n())
        .filter(|&i| {
            let ascending = pred[i] < i && succ[i] == i - 1 && succ[succ[i]] > i;
            let descending = pred[pred[i]] > i && pred[i] == i - 1 && succ[i] < i;
            ascending || descending
        })
        .collect()
}

/// True iff the only proper (non step-back) peak of the tour is city n.
pub fn is_psb_tour(tour: &Tour) -> bool {
    let sb = step_back_peaks(tour);
    let mut proper = peaks(tour).into_iter().filter(|p| !sb.contains(p));
    proper.next() == Some(tour.n()) && proper.next().is_none()
}

/// Expands an encoding into its explicit city sequence.
pub fn decode(enc: &PsbEncoding) -> Tour {
    let n = enc.n();
    let mut seq = Vec::with_capacity(n);
    seq.push(1);
    let mut c = 2;
    while c < n {
        if enc.bit(c) {
            if enc.mark(c) == Mark::Lower {
                seq.extend([c + 1, c]);
                c += 1;
            } else {
                seq.push(c);
            }
        }
        c += 1;
    }
    seq.push(n);
    let mut c = n - 1;
    while c >= 2 {
        if !enc.bit(c) {
            if enc.mark(c) == Mark::Peak {
                seq.extend([c - 1, c]);
                c -= 1;
            } else {
                seq.push(c);
            }
        }
        c -= 1;
    }
    Tour { seq }
}

/// Inverse of [`decode`].
pub fn encode(tour: &Tour) -> Result<PsbEncoding> {
    let n = tour.n();
    if !is_psb_tour(tour) {
        return Err(Error::NotPsb(tour.to_string()));
    }
    let pos_n = tour
        .cities()
        .iter()
        .position(|&c| c == n)
        .expect("validated tour contains n");
    let mut bits = vec![false; n - 2];
    for &c in &tour.cities()[1..pos_n] {
        bits[c - 2] = true;
    }
    let peaks = step_back_peaks(tour);
    let enc =
        PsbEncoding::new(n, bits, peaks).map_err(|e| Error::NotPsb(format!("{tour}: {e}")))?;
    if decode(&enc) != *tour {
        return Err(Error::NotPsb(format!(
            "{tour} does not match its encoding {enc}"
        )));
    }
    Ok(enc)
}

/// The directed edges of a tour, i.e. the support of its 0/1 incidence vector
/// over the `n(n-1)` arcs of the complete digraph.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CharacteristicVector {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl CharacteristicVector {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Sorted arcs `(a, b)`.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn contains(&self, a: usize, b: usize) -> bool {
        self.edges.binary_search(&(a, b)).is_ok()
    }

    /// Row-major slot of arc `(a, b)` among the `n(n-1)` off-diagonal arcs.
    pub fn slot(n: usize, a: usize, b: usize) -> usize {
        debug_assert!(a != b);
        (a - 1) * (n - 1) + if b < a { b - 1 } else { b - 2 }
    }

    /// Dense 0/1 vector indexed by [`CharacteristicVector::slot`].
    pub fn to_dense(&self) -> Vec<u8> {
        let mut v = vec![0; self.n * (self.n - 1)];
        for &(a, b) in &self.edges {
            v[Self::slot(self.n, a, b)] = 1;
        }
        v
    }
}

pub fn char_vector(tour: &Tour) -> CharacteristicVector {
    let n = tour.n();
    let seq = tour.cities();
    let mut edges: Vec<(usize, usize)> = (0..n).map(|k| (seq[k], seq[(k + 1) % n])).collect();
    edges.sort_unstable();
    CharacteristicVector { n, edges }
}
