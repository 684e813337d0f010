//! Minimum-cost tours over asymmetric distance matrices.

mod dp;
mod matrix;

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::Serialize;

pub use matrix::DistanceMatrix;

use crate::encoding::PsbEncoding;
use crate::enumerate::enumerate_encodings;
use crate::error::{Error, Result};
use crate::tour::{decode, encode, Tour};

/// Default size cap for [`solve_enum`] and [`solve_atsp_bruteforce`].
pub const DEFAULT_SOLVE_CAP: usize = 10;

const TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SolveMethod {
    #[serde(rename = "dp")]
    Dp,
    #[serde(rename = "enum")]
    Enum,
    #[serde(rename = "atsp-brute")]
    AtspBrute,
}

impl SolveMethod {
    pub fn name(self) -> &'static str {
        match self {
            SolveMethod::Dp => "dp",
            SolveMethod::Enum => "enum",
            SolveMethod::AtspBrute => "atsp-brute",
        }
    }
}

impl fmt::Display for SolveMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SolveMethod {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "dp" => Ok(SolveMethod::Dp),
            "enum" => Ok(SolveMethod::Enum),
            "atsp-brute" => Ok(SolveMethod::AtspBrute),
            other => Err(format!(
                "unknown solve method {other:?} (dp, enum, atsp-brute)"
            )),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Solution {
    pub tour: Tour,
    /// Absent when an unrestricted optimum is not a PSB tour.
    pub encoding: Option<PsbEncoding>,
    pub cost: f64,
    pub method: SolveMethod,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SolutionJson {
    pub tour: Vec<usize>,
    pub encoding: Option<String>,
    pub cost: f64,
    pub method: SolveMethod,
}

impl Solution {
    fn from_tour(
        m: &DistanceMatrix,
        tour: Tour,
        encoding: Option<PsbEncoding>,
        method: SolveMethod,
    ) -> Self {
        Self {
            cost: m.tour_cost(&tour),
            tour,
            encoding,
            method,
        }
    }

    pub fn to_json(&self) -> SolutionJson {
        SolutionJson {
            tour: self.tour.cities().to_vec(),
            encoding: self.encoding.as_ref().map(PsbEncoding::literal),
            cost: self.cost,
            method: self.method,
        }
    }
}

/// Minimum-cost PSB tour by the `O(n²)` frontier DP; among equal-cost optima
/// the canonically smallest encoding.
pub fn solve_dp(m: &DistanceMatrix) -> Result<Solution> {
    let enc = dp::optimal_encoding(m)?;
    Ok(Solution::from_tour(
        m,
        decode(&enc),
        Some(enc),
        SolveMethod::Dp,
    ))
}

/// Minimum over every PSB tour, first in canonical order on ties.
pub fn solve_enum(m: &DistanceMatrix) -> Result<Solution> {
    solve_enum_capped(m, DEFAULT_SOLVE_CAP)
}

pub fn solve_enum_capped(m: &DistanceMatrix, cap: usize) -> Result<Solution> {
    check_cap("enumeration solver", m.n(), cap)?;
    let mut best: Option<(f64, PsbEncoding)> = None;
    for enc in enumerate_encodings(m.n())? {
        let cost = m.tour_cost(&decode(&enc));
        if best.as_ref().is_none_or(|(b, _)| cost < b - TOL) {
            best = Some((cost, enc));
        }
    }
    let (_, enc) = best.expect("at least two tours for n >= 3");
    Ok(Solution::from_tour(
        m,
        decode(&enc),
        Some(enc),
        SolveMethod::Enum,
    ))
}

/// Minimum over all `(n-1)!` directed tours, lexicographically first city
/// sequence on ties.
pub fn solve_atsp_bruteforce(m: &DistanceMatrix) -> Result<Solution> {
    solve_atsp_bruteforce_capped(m, DEFAULT_SOLVE_CAP)
}

pub fn solve_atsp_bruteforce_capped(m: &DistanceMatrix, cap: usize) -> Result<Solution> {
    let n = m.n();
    check_cap("ATSP brute force", n, cap)?;
    let mut best: Option<(f64, Vec<usize>)> = None;
    for rest in (2..=n).permutations(n - 1) {
        let mut cost = m.cost(1, rest[0]) + m.cost(rest[n - 2], 1);
        cost += rest.windows(2).map(|w| m.cost(w[0], w[1])).sum::<f64>();
        if best.as_ref().is_none_or(|(b, _)| cost < b - TOL) {
            best = Some((cost, rest));
        }
    }
    let (_, rest) = best.expect("n >= 3");
    let mut seq = vec![1];
    seq.extend(rest);
    let tour = Tour::new(seq)?;
    let encoding = encode(&tour).ok();
    Ok(Solution::from_tour(
        m,
        tour,
        encoding,
        SolveMethod::AtspBrute,
    ))
}

pub fn solve(m: &DistanceMatrix, method: SolveMethod) -> Result<Solution> {
    match method {
        SolveMethod::Dp => solve_dp(m),
        SolveMethod::Enum => solve_enum(m),
        SolveMethod::AtspBrute => solve_atsp_bruteforce(m),
    }
}

fn check_cap(what: &'static str, n: usize, cap: usize) -> Result<()> {
    if n > cap {
        return Err(Error::CapExceeded { what, size: n, cap });
    }
    Ok(())
}
