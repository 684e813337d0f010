use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::tour::Tour;

/// Asymmetric arc costs on cities `1..=n`. The diagonal is ignored and
/// stored as zero.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DistanceMatrix {
    n: usize,
    cost: Vec<Vec<f64>>,
}

#[derive(Deserialize)]
struct MatrixJson {
    n: usize,
    cost: Vec<Vec<Option<f64>>>,
}

impl DistanceMatrix {
    /// Rows are cities `1..=n` in order.
    pub fn new(mut cost: Vec<Vec<f64>>) -> Result<Self> {
        let n = cost.len();
        if n < 3 {
            return Err(Error::InvalidMatrix(format!(
                "need at least 3 cities, got {n}"
            )));
        }
        for (a, row) in cost.iter_mut().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidMatrix(format!(
                    "row {} has {} entries, expected {n}",
                    a + 1,
                    row.len()
                )));
            }
            row[a] = 0.0;
            if let Some(b) = row.iter().position(|w| !w.is_finite()) {
                return Err(Error::InvalidMatrix(format!(
                    "cost[{}][{}] is not finite",
                    a + 1,
                    b + 1
                )));
            }
        }
        Ok(Self { n, cost })
    }

    /// `n` comma-separated rows of `n` numbers; diagonal cells may hold any
    /// token (or be empty).
    pub fn from_csv(text: &str) -> Result<Self> {
        let mut reader = csv::ReaderBuilder::new()
            .has_headers(false)
            .trim(csv::Trim::All)
            .comment(Some(b'#'))
            .flexible(true)
            .from_reader(text.as_bytes());
        let mut cost = Vec::new();
        for (a, record) in reader.records().enumerate() {
            let record = record.map_err(|e| Error::InvalidMatrix(e.to_string()))?;
            let row = record
                .iter()
                .enumerate()
                .map(|(b, cell)| {
                    if a == b {
                        return Ok(0.0);
                    }
                    cell.parse::<f64>().map_err(|_| {
                        Error::InvalidMatrix(format!(
                            "cost[{}][{}] = {cell:?} is not a number",
                            a + 1,
                            b + 1
                        ))
                    })
                })
                .collect::<Result<Vec<f64>>>()?;
            cost.push(row);
        }
        Self::new(cost)
    }

    /// `{"n": N, "cost": [[...], ...]}`; diagonal entries may be `null`.
    pub fn from_json(text: &str) -> Result<Self> {
        let raw: MatrixJson =
            serde_json::from_str(text).map_err(|e| Error::InvalidMatrix(e.to_string()))?;
        if raw.cost.len() != raw.n {
            return Err(Error::InvalidMatrix(format!(
                "declared n = {} but {} rows given",
                raw.n,
                raw.cost.len()
            )));
        }
        let mut cost = Vec::with_capacity(raw.n);
        for (a, row) in raw.cost.into_iter().enumerate() {
            let row = row
                .into_iter()
                .enumerate()
                .map(|(b, w)| match w {
                    _ if a == b => Ok(0.0),
                    Some(w) => Ok(w),
                    None => Err(Error::InvalidMatrix(format!(
                        "cost[{}][{}] is null",
                        a + 1,
                        b + 1
                    ))),
                })
                .collect::<Result<Vec<f64>>>()?;
            cost.push(row);
        }
        Self::new(cost)
    }

    /// Every off-diagonal arc costs `c`.
    pub fn uniform(n: usize, c: f64) -> Result<Self> {
        Self::new(vec![vec![c; n]; n])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Cost of the arc `a → b`, 1-based.
    #[inline]
    pub fn cost(&self, a: usize, b: usize) -> f64 {
        self.cost[a - 1][b - 1]
    }

    pub fn rows(&self) -> &[Vec<f64>] {
        &self.cost
    }

    pub fn tour_cost(&self, tour: &Tour) -> f64 {
        let seq = tour.cities();
        (0..seq.len())
            .map(|k| self.cost(seq[k], seq[(k + 1) % seq.len()]))
            .sum()
    }

    pub fn scaled(&self, factor: f64) -> Result<Self> {
        Self::new(
            self.cost
                .iter()
                .map(|row| row.iter().map(|w| w * factor).collect())
                .collect(),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_and_json_agree() {
        let csv = "-,1,2\n3,-,4\n5,6,-\n";
        let json = r#"{"n":3,"cost":[[null,1,2],[3,null,4],[5,6,null]]}"#;
        let a = DistanceMatrix::from_csv(csv).unwrap();
        let b = DistanceMatrix::from_json(json).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.cost(2, 3), 4.0);
        let t = Tour::new(vec![1, 2, 3]).unwrap();
        assert_eq!(a.tour_cost(&t), 1.0 + 4.0 + 5.0);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(DistanceMatrix::from_csv("0,1\n1,0\n").is_err());
        assert!(DistanceMatrix::from_csv("0,1,x\n1,0,1\n1,1,0\n").is_err());
        assert!(DistanceMatrix::from_csv("0,1,2\n1,0\n1,1,0\n").is_err());
        assert!(DistanceMatrix::from_json(r#"{"n":4,"cost":[[0,1,1],[1,0,1],[1,1,0]]}"#).is_err());
        assert!(DistanceMatrix::new(vec![
            vec![0.0, f64::INFINITY, 1.0],
            vec![1.0; 3],
            vec![1.0; 3]
        ])
        .is_err());
        // a non-finite diagonal is ignored
        assert!(
            DistanceMatrix::new(vec![vec![f64::NAN, 1.0, 1.0], vec![1.0; 3], vec![1.0; 3]]).is_ok()
        );
    }
}
