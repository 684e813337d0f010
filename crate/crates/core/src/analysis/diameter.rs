use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::par::Exec;
use crate::skeleton::Graph;

/// BFS distances from `src`; `usize::MAX` marks unreachable vertices.
pub fn bfs_distances(g: &Graph, src: usize) -> Vec<usize> {
    let mut dist = vec![usize::MAX; g.vertex_count()];
    let mut queue = VecDeque::new();
    dist[src] = 0;
    queue.push_back(src);
    while let Some(v) = queue.pop_front() {
        for &w in g.neighbors(v) {
            if dist[w] == usize::MAX {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
    dist
}

/// Eccentricity of every vertex; fails on the first unreachable pair.
pub fn eccentricities(g: &Graph, exec: Exec) -> Result<Vec<usize>> {
    exec.map_indices(g.vertex_count(), |src| {
        let dist = bfs_distances(g, src);
        match dist.iter().position(|&d| d == usize::MAX) {
            Some(v) => Err(Error::Disconnected(src, v)),
            None => Ok(dist.into_iter().max().unwrap_or(0)),
        }
    })
    .into_iter()
    .collect()
}

/// Exact diameter by BFS from every vertex.
pub fn diameter(g: &Graph) -> Result<usize> {
    diameter_with(g, Exec::default())
}

pub fn diameter_with(g: &Graph, exec: Exec) -> Result<usize> {
    Ok(eccentricities(g, exec)?.into_iter().max().unwrap_or(0))
}
