//! Explicit 1-skeleton graphs over all tours of one size.

use std::fmt::{self, Write as _};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::adjacency::{adjacent, nonadj_exhaustive};
use crate::encoding::PsbEncoding;
use crate::error::{Error, Result};
use crate::oracle::{enumerate_tours, PairOracle, TourSet};
use crate::par::Exec;

/// Default size cap for the slow decision procedures.
pub const DEFAULT_SLOW_CAP: usize = 8;

/// Decision procedure used to build a skeleton.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Fast,
    Exhaustive,
    Oracle,
}

impl Method {
    pub const ALL: [Method; 3] = [Method::Fast, Method::Exhaustive, Method::Oracle];

    pub fn name(self) -> &'static str {
        match self {
            Method::Fast => "fast",
            Method::Exhaustive => "exhaustive",
            Method::Oracle => "oracle",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "fast" => Ok(Method::Fast),
            "exhaustive" => Ok(Method::Exhaustive),
            "oracle" => Ok(Method::Oracle),
            other => Err(format!("unknown method {other:?} (fast|exhaustive|oracle)")),
        }
    }
}

/// Simple undirected graph on vertices `0..len` with sorted neighbor lists.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph from an edge list; loops are rejected, duplicates merged.
    pub fn from_edges(vertex_count: usize, edges: &[(usize, usize)]) -> Self {
        let mut adj = vec![Vec::new(); vertex_count];
        for &(a, b) in edges {
            assert!(a != b, "self-loop on {a}");
            adj[a].push(b);
            adj[b].push(a);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Self { adj }
    }

    /// Builds from rows where `rows[a]` lists the neighbors `b > a`.
    fn from_upper_rows(rows: Vec<Vec<usize>>) -> Self {
        let mut adj = vec![Vec::new(); rows.len()];
        for (a, row) in rows.into_iter().enumerate() {
            for b in row {
                adj[a].push(b);
                adj[b].push(a);
            }
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Self { adj }
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adj[a].binary_search(&b).is_ok()
    }

    /// Edges `(a, b)` with `a < b`, sorted.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(a, list)| list.iter().filter(move |&&b| b > a).map(move |&b| (a, b)))
    }
}

#[derive(Debug, Clone)]
pub struct SkeletonGraph {
    n: usize,
    vertices: Vec<PsbEncoding>,
    graph: Graph,
    method: Method,
}

#[derive(Debug, Clone, Copy)]
pub struct SkeletonOptions {
    /// Largest `n` accepted by the exhaustive and oracle methods.
    pub slow_cap: usize,
    pub exec: Exec,
}

impl Default for SkeletonOptions {
    fn default() -> Self {
        Self {
            slow_cap: DEFAULT_SLOW_CAP,
            exec: Exec::default(),
        }
    }
}

pub fn build_skeleton(n: usize, method: Method) -> Result<SkeletonGraph> {
    build_skeleton_with(n, method, SkeletonOptions::default())
}

pub fn build_skeleton_with(
    n: usize,
    method: Method,
    opts: SkeletonOptions,
) -> Result<SkeletonGraph> {
    if method != Method::Fast && n > opts.slow_cap {
        return Err(Error::CapExceeded {
            what: "skeleton with slow method",
            size: n,
            cap: opts.slow_cap,
        });
    }
    let tours = enumerate_tours(n)?;
    let rows = adjacency_rows(&tours, method, opts.exec)?;
    Ok(SkeletonGraph {
        n,
        vertices: tours.tours().to_vec(),
        graph: Graph::from_upper_rows(rows),
        method,
    })
}

fn adjacency_rows(tours: &TourSet, method: Method, exec: Exec) -> Result<Vec<Vec<usize>>> {
    let vs = tours.tours();
    let len = vs.len();
    let row = |a: usize, decide: &(dyn Fn(usize, usize) -> bool + Sync)| -> Vec<usize> {
        (a + 1..len).filter(|&b| decide(a, b)).collect()
    };
    Ok(match method {
        Method::Fast => {
            let decide =
                |a: usize, b: usize| adjacent(&vs[a], &vs[b]).expect("distinct same-size tours");
            exec.map_indices(len, |a| row(a, &decide))
        }
        Method::Exhaustive => {
            let decide = |a: usize, b: usize| {
                nonadj_exhaustive(&vs[a], &vs[b])
                    .expect("distinct same-size tours")
                    .is_none()
            };
            exec.map_indices(len, |a| row(a, &decide))
        }
        Method::Oracle => {
            let oracle = PairOracle::new(tours.clone())?;
            let decide = |a: usize, b: usize| oracle.adjacent_ids(a, b);
            exec.map_indices(len, |a| row(a, &decide))
        }
    })
}

#[derive(Serialize)]
struct SkeletonJson<'a> {
    n: usize,
    vertices: Vec<String>,
    edges: Vec<[usize; 2]>,
    method: &'a str,
}

impl SkeletonGraph {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> &[PsbEncoding] {
        &self.vertices
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn method(&self) -> Method {
        self.method
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn id_of(&self, e: &PsbEncoding) -> Option<usize> {
        self.vertices.binary_search(e).ok()
    }

    /// Unordered pairs on which two skeletons of the same size disagree.
    pub fn disagreements(&self, other: &SkeletonGraph) -> Vec<(usize, usize)> {
        assert_eq!(self.vertex_count(), other.vertex_count());
        let len = self.vertex_count();
        (0..len)
            .flat_map(|a| (a + 1..len).map(move |b| (a, b)))
            .filter(|&(a, b)| self.graph.has_edge(a, b) != other.graph.has_edge(a, b))
            .collect()
    }

    /// `id_a,id_b` per edge with a header line.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::from("id_a,id_b\n");
        for (a, b) in self.graph.edges() {
            let _ = writeln!(out, "{a},{b}");
        }
        out
    }

    pub fn to_dot(&self) -> String {
        let mut out = format!("graph psb_{} {{\n", self.n);
        for (i, v) in self.vertices.iter().enumerate() {
            let _ = writeln!(out, "  {i} [label=\"{v}\"];");
        }
        for (a, b) in self.graph.edges() {
            let _ = writeln!(out, "  {a} -- {b};");
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json(&self) -> String {
        let doc = SkeletonJson {
            n: self.n,
            vertices: self.vertices.iter().map(PsbEncoding::literal).collect(),
            edges: self.graph.edges().map(|(a, b)| [a, b]).collect(),
            method: self.method.name(),
        };
        serde_json::to_string(&doc).expect("skeleton serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn n3_is_a_segment() {
        for m in Method::ALL {
            let s = build_skeleton(3, m).unwrap();
            assert_eq!(s.vertex_count(), 2);
            assert_eq!(s.graph().edge_count(), 1);
        }
    }

    #[test]
    fn methods_agree_at_n5() {
        let fast = build_skeleton(5, Method::Fast).unwrap();
        for m in [Method::Exhaustive, Method::Oracle] {
            let other = build_skeleton(5, m).unwrap();
            assert_eq!(fast.disagreements(&other), vec![], "{m}");
        }
    }

    #[test]
    fn slow_methods_are_capped() {
        let opts = SkeletonOptions {
            slow_cap: 4,
            exec: Exec::Sequential,
        };
        assert!(matches!(
            build_skeleton_with(5, Method::Oracle, opts),
            Err(Error::CapExceeded { .. })
        ));
        assert!(build_skeleton_with(5, Method::Fast, opts).is_ok());
    }

    #[test]
    fn exports() {
        let s = build_skeleton(3, Method::Fast).unwrap();
        assert_eq!(s.to_edge_list(), "id_a,id_b\n0,1\n");
        assert_eq!(
            s.to_json(),
            r#"{"n":3,"vertices":["0","1"],"edges":[[0,1]],"method":"fast"}"#
        );
        let dot = s.to_dot();
        assert!(dot.starts_with("graph psb_3 {") && dot.contains("0 -- 1;"));
    }

    #[test]
    fn graph_basics() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 1)]);
        assert_eq!(g.edge_count(), 2);
        assert_eq!(g.degree(1), 2);
        assert!(g.has_edge(2, 1) && !g.has_edge(0, 3));
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
    }
}
