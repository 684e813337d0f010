use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::adjacency::adjacent;
use crate::encoding::PsbEncoding;
use crate::error::{Error, Result};
use crate::par::Exec;
use crate::skeleton::Graph;

/// Default vertex cap for [`max_clique`]; covers every skeleton up to n = 8.
pub const DEFAULT_CLIQUE_CAP: usize = 350;

const LOCAL_SEARCH_ROUNDS: usize = 2000;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CliqueMember {
    pub k: usize,
    pub s: usize,
    pub encoding: PsbEncoding,
}

/// Pairwise adjacent step-back-free tours indexed by `(k, s)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CliqueFamily {
    pub n: usize,
    pub members: Vec<CliqueMember>,
}

impl CliqueFamily {
    pub fn encodings(&self) -> impl Iterator<Item = &PsbEncoding> {
        self.members.iter().map(|m| &m.encoding)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// Member `(k, s)`: cities `2..=k+1` and `n-s..=n-1` ascending, the rest
/// descending, no step-backs. `k, s < ⌊n/2⌋`; for odd `n` city `⌊n/2⌋ + 1`
/// is always descending, which reduces to the even construction.
pub fn clique_member(n: usize, k: usize, s: usize) -> PsbEncoding {
    let bits = (2..n).map(|c| c <= k + 1 || c >= n - s).collect();
    PsbEncoding::from_parts_unchecked(n, bits, Vec::new())
}

/// The `⌊n/2⌋²` members, `k`-major, each pair verified adjacent.
pub fn clique_construction(n: usize) -> Result<CliqueFamily> {
    clique_construction_with(n, Exec::default())
}

pub fn clique_construction_with(n: usize, exec: Exec) -> Result<CliqueFamily> {
    if n < 4 {
        return Err(Error::TooSmall(n));
    }
    let half = n / 2;
    let members: Vec<CliqueMember> = (0..half)
        .flat_map(|k| (0..half).map(move |s| (k, s)))
        .map(|(k, s)| CliqueMember {
            k,
            s,
            encoding: clique_member(n, k, s),
        })
        .collect();
    let failures = exec.map_indices(members.len(), |a| {
        (a + 1..members.len()).find(|&b| {
            !adjacent(&members[a].encoding, &members[b].encoding).expect("distinct members")
        })
    });
    if let Some((a, b)) = failures
        .iter()
        .enumerate()
        .find_map(|(a, f)| f.map(|b| (a, b)))
    {
        return Err(Error::VerificationFailed(
            members[a].encoding.literal(),
            members[b].encoding.literal(),
        ));
    }
    Ok(CliqueFamily { n, members })
}

#[derive(Clone)]
struct Bitset(Vec<u64>);

impl Bitset {
    fn empty(len: usize) -> Self {
        Bitset(vec![0; len.div_ceil(64)])
    }

    fn insert(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn contains(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }

    fn remove(&mut self, i: usize) {
        self.0[i / 64] &= !(1 << (i % 64));
    }

    fn is_empty(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }

    fn len(&self) -> u32 {
        self.0.iter().map(|w| w.count_ones()).sum()
    }

    fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let t = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * 64 + t)
            })
        })
    }

    fn first(&self) -> Option<usize> {
        self.0
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(wi, &w)| wi * 64 + w.trailing_zeros() as usize)
    }

    fn and(&self, other: &Bitset) -> Bitset {
        Bitset(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }
}

struct CliqueSearch {
    adj: Vec<Bitset>,
    best: Vec<usize>,
    current: Vec<usize>,
    nodes: u64,
    deadline: Option<Instant>,
    timed_out: bool,
}

impl CliqueSearch {
    /// Greedy coloring of `p` in index order with one recoloring attempt
    /// (Re-NUMBER) for vertices that would open a class above `kmin`.
    /// Returns the vertices whose color exceeds `kmin`, sorted by color.
    fn color(&self, p: &Bitset, kmin: usize) -> Vec<(usize, usize)> {
        let mut classes: Vec<Bitset> = Vec::new();
        let mut members: Vec<Vec<usize>> = Vec::new();
        let words = p.0.len();
        let free =
            |class: &Bitset, v: usize| class.0.iter().zip(&self.adj[v].0).all(|(a, b)| a & b == 0);
        for v in p.ones() {
            let k = classes
                .iter()
                .position(|c| free(c, v))
                .unwrap_or(classes.len());
            if k >= kmin && kmin >= 2 && self.renumber(&mut classes, &mut members, v, kmin) {
                continue;
            }
            if k == classes.len() {
                classes.push(Bitset(vec![0; words]));
                members.push(Vec::new());
            }
            classes[k].insert(v);
            members[k].push(v);
        }
        let mut out = Vec::new();
        for (k, m) in members.iter().enumerate().skip(kmin) {
            out.extend(m.iter().map(|&v| (v, k + 1)));
        }
        out
    }

    /// Tries to place `v` in a class below `kmin` by moving its single
    /// conflicting neighbor there to a later class below `kmin`.
    fn renumber(
        &self,
        classes: &mut [Bitset],
        members: &mut [Vec<usize>],
        v: usize,
        kmin: usize,
    ) -> bool {
        for k1 in 0..kmin - 1 {
            let conflict = classes[k1].and(&self.adj[v]);
            let Some(q) = conflict.first() else { continue };
            let mut rest = conflict;
            rest.remove(q);
            if !rest.is_empty() {
                continue;
            }
            for k2 in k1 + 1..kmin {
                if classes[k2].and(&self.adj[q]).is_empty() {
                    classes[k1].remove(q);
                    classes[k1].insert(v);
                    classes[k2].insert(q);
                    members[k1].retain(|&w| w != q);
                    members[k1].push(v);
                    members[k2].push(q);
                    return true;
                }
            }
        }
        false
    }

    fn expand(&mut self, mut p: Bitset) {
        self.nodes += 1;
        if self.nodes.is_multiple_of(1024) && self.deadline.is_some_and(|d| Instant::now() >= d) {
            self.timed_out = true;
        }
        if self.timed_out {
            return;
        }
        let kmin = self.best.len().saturating_sub(self.current.len());
        let order = self.color(&p, kmin);
        for &(v, color) in order.iter().rev() {
            if self.current.len() + color <= self.best.len() {
                return;
            }
            self.current.push(v);
            let next = p.and(&self.adj[v]);
            if next.is_empty() {
                if self.current.len() > self.best.len() {
                    self.best = self.current.clone();
                }
            } else {
                self.expand(next);
            }
            self.current.pop();
            p.remove(v);
        }
    }

    /// Greedy clique from every start vertex, always adding the candidate
    /// with the most candidate neighbors.
    /// Iterated local search seeded from `best`: random forced insertions
    /// followed by free additions and (1,2)-swaps.
    fn local_search(&mut self, rounds: usize, seed: u64) {
        let len = self.adj.len();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut state = SwapState::new(len);
        for &v in &self.best {
            state.add(&self.adj, v);
        }
        state.improve(&self.adj, &mut rng);
        for _ in 0..rounds {
            let mut next = state.clone();
            for _ in 0..if rng.gen_bool(0.25) { 2 } else { 1 } {
                let outside: Vec<usize> = (0..len).filter(|&u| !next.inside.contains(u)).collect();
                let Some(&u) = outside.choose(&mut rng) else {
                    break;
                };
                let clash: Vec<usize> = next
                    .members
                    .iter()
                    .copied()
                    .filter(|&w| !self.adj[u].contains(w))
                    .collect();
                for w in clash {
                    next.remove(&self.adj, w);
                }
                next.add(&self.adj, u);
            }
            next.improve(&self.adj, &mut rng);
            if next.members.len() >= state.members.len() || rng.gen_bool(0.01) {
                state = next;
            }
            if state.members.len() > self.best.len() {
                self.best = state.members.clone();
            }
        }
    }

    fn greedy(&mut self, all: &Bitset) {
        for start in all.ones() {
            let mut clique = vec![start];
            let mut cand = all.and(&self.adj[start]);
            while !cand.is_empty() {
                let v = cand
                    .ones()
                    .max_by_key(|&v| (cand.and(&self.adj[v]).len(), std::cmp::Reverse(v)))
                    .expect("non-empty");
                clique.push(v);
                cand = cand.and(&self.adj[v]);
            }
            if clique.len() > self.best.len() {
                self.best = clique;
            }
        }
    }
}

/// Vertices in reverse degeneracy order: repeatedly removing a minimum-degree
/// vertex and placing it last.
/// Clique under local search with, per vertex, the number of members it is
/// not adjacent to.
#[derive(Clone)]
struct SwapState {
    members: Vec<usize>,
    inside: Bitset,
    missing: Vec<usize>,
}

impl SwapState {
    fn new(len: usize) -> Self {
        SwapState {
            members: Vec::new(),
            inside: Bitset::empty(len),
            missing: vec![0; len],
        }
    }

    fn add(&mut self, adj: &[Bitset], v: usize) {
        self.members.push(v);
        self.inside.insert(v);
        for (u, m) in self.missing.iter_mut().enumerate() {
            if u != v && !adj[v].contains(u) {
                *m += 1;
            }
        }
    }

    fn remove(&mut self, adj: &[Bitset], v: usize) {
        self.members.retain(|&w| w != v);
        self.inside.remove(v);
        for (u, m) in self.missing.iter_mut().enumerate() {
            if u != v && !adj[v].contains(u) {
                *m -= 1;
            }
        }
    }

    fn improve(&mut self, adj: &[Bitset], rng: &mut ChaCha8Rng) {
        loop {
            let free: Vec<usize> = (0..adj.len())
                .filter(|&u| !self.inside.contains(u) && self.missing[u] == 0)
                .collect();
            if let Some(&u) = free.choose(rng) {
                self.add(adj, u);
                continue;
            }
            if !self.swap(adj, rng) {
                return;
            }
        }
    }

    fn swap(&mut self, adj: &[Bitset], rng: &mut ChaCha8Rng) -> bool {
        let mut members = self.members.clone();
        members.shuffle(rng);
        for x in members {
            let cand: Vec<usize> = (0..adj.len())
                .filter(|&u| {
                    !self.inside.contains(u) && self.missing[u] == 1 && !adj[x].contains(u)
                })
                .collect();
            for (i, &a) in cand.iter().enumerate() {
                if let Some(&b) = cand[i + 1..].iter().find(|&&b| adj[a].contains(b)) {
                    self.remove(adj, x);
                    self.add(adj, a);
                    self.add(adj, b);
                    return true;
                }
            }
        }
        false
    }
}

fn degeneracy_order(g: &Graph) -> Vec<usize> {
    let len = g.vertex_count();
    let mut deg: Vec<usize> = (0..len).map(|v| g.degree(v)).collect();
    let mut removed = vec![false; len];
    let mut order = Vec::with_capacity(len);
    for _ in 0..len {
        let v = (0..len)
            .filter(|&v| !removed[v])
            .min_by_key(|&v| (deg[v], std::cmp::Reverse(v)))
            .expect("vertices remain");
        removed[v] = true;
        order.push(v);
        for &w in g.neighbors(v) {
            if !removed[w] {
                deg[w] -= 1;
            }
        }
    }
    order.reverse();
    order
}

/// Outcome of a clique search that may stop early.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliqueOutcome {
    pub size: usize,
    pub members: Vec<usize>,
    /// True when the search finished, so `size` is the clique number.
    pub proven: bool,
    pub nodes: u64,
}

/// Exact maximum clique by coloring-bounded branch and bound; returns the
/// size and sorted member ids.
pub fn max_clique(g: &Graph, vertex_cap: usize) -> Result<(usize, Vec<usize>)> {
    let out = max_clique_within(g, vertex_cap, None)?;
    Ok((out.size, out.members))
}

/// Like [`max_clique`], but gives up after `budget` and reports the best clique seen.
pub fn max_clique_within(
    g: &Graph,
    vertex_cap: usize,
    budget: Option<Duration>,
) -> Result<CliqueOutcome> {
    let len = g.vertex_count();
    if len > vertex_cap {
        return Err(Error::CapExceeded {
            what: "exact max clique",
            size: len,
            cap: vertex_cap,
        });
    }
    if len == 0 {
        return Ok(CliqueOutcome {
            size: 0,
            members: Vec::new(),
            proven: true,
            nodes: 0,
        });
    }
    let order = degeneracy_order(g);
    let mut rank = vec![0; len];
    for (r, &v) in order.iter().enumerate() {
        rank[v] = r;
    }
    let adj = order
        .iter()
        .map(|&v| {
            let mut b = Bitset::empty(len);
            for &w in g.neighbors(v) {
                b.insert(rank[w]);
            }
            b
        })
        .collect();
    let mut all = Bitset::empty(len);
    (0..len).for_each(|i| all.insert(i));
    let mut search = CliqueSearch {
        adj,
        best: Vec::new(),
        current: Vec::new(),
        nodes: 0,
        deadline: budget.map(|b| Instant::now() + b),
        timed_out: false,
    };
    search.greedy(&all);
    search.local_search(LOCAL_SEARCH_ROUNDS, 0x5eed);
    search.expand(all);
    let mut members: Vec<usize> = search.best.iter().map(|&r| order[r]).collect();
    members.sort_unstable();
    Ok(CliqueOutcome {
        size: members.len(),
        members,
        proven: !search.timed_out,
        nodes: search.nodes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn enc(s: &str) -> PsbEncoding {
        s.parse().unwrap()
    }

    #[test]
    fn n8_matches_the_table() {
        let fam = clique_construction(8).unwrap();
        let got: Vec<String> = fam.encodings().map(|e| e.bit_string()).collect();
        let expected = [
            "000000", "000001", "000011", "000111", "100000", "100001", "100011", "100111",
            "110000", "110001", "110011", "110111", "111000", "111001", "111011", "111111",
        ];
        assert_eq!(got, expected);
    }

    #[test]
    fn n4_and_odd_sizes() {
        let fam = clique_construction(4).unwrap();
        let got: Vec<PsbEncoding> = fam.encodings().cloned().collect();
        assert_eq!(got, vec![enc("00"), enc("01"), enc("10"), enc("11")]);
        let fam = clique_construction(9).unwrap();
        assert_eq!(fam.len(), 16);
        // city 5 is never ascending
        assert!(fam.encodings().all(|e| !e.bit(5)));
        assert!(clique_construction(3).is_err());
    }

    #[test]
    fn small_cliques() {
        let tri = Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]);
        assert_eq!(max_clique(&tri, 10).unwrap(), (3, vec![0, 1, 2]));
        // K4 minus an edge plus a pendant
        let g = Graph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (3, 4)]);
        assert_eq!(max_clique(&g, 10).unwrap().0, 3);
        assert_eq!(max_clique(&Graph::from_edges(0, &[]), 10).unwrap().0, 0);
        assert!(max_clique(&tri, 2).is_err());
    }

    #[test]
    fn matches_brute_force_on_random_graphs() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..40 {
            let len = rng.gen_range(1..=12);
            let density: f64 = rng.gen();
            let edges: Vec<(usize, usize)> = (0..len)
                .flat_map(|a| (a + 1..len).map(move |b| (a, b)))
                .filter(|_| rng.gen::<f64>() < density)
                .collect();
            let g = Graph::from_edges(len, &edges);
            let brute = (0u32..1 << len)
                .filter(|&mask| {
                    let vs: Vec<usize> = (0..len).filter(|&v| mask >> v & 1 == 1).collect();
                    vs.iter()
                        .enumerate()
                        .all(|(i, &a)| vs[i + 1..].iter().all(|&b| g.has_edge(a, b)))
                })
                .map(|m| m.count_ones() as usize)
                .max()
                .unwrap();
            let (size, members) = max_clique(&g, 64).unwrap();
            assert_eq!(size, brute);
            assert!(members
                .iter()
                .all(|&a| members.iter().all(|&b| a == b || g.has_edge(a, b))));
        }
    }
}
