//! Frontier DP over (last ascending city, last descending city).
//!
//! Cities `2..n-1` are placed in increasing order. The ascending chain grows
//! at its end `a` (arc `a → c`), the descending chain grows at its head `d`
//! (arc `c → d`), and a step-back pair `(c, c+1)` is committed to either chain
//! in one move. After placing cities `1..=k`, one chain ends at `k` (or at
//! `k-1` when the last move was a pair), so the state is that chain, the pair
//! flag and the other chain's end: `O(n²)` states with at most four moves
//! each.

use crate::encoding::PsbEncoding;
use crate::error::{Error, Result};

use super::DistanceMatrix;

const TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct State {
    k: usize,
    ascending: bool,
    pair: bool,
    other: usize,
}

impl State {
    const START: State = State {
        k: 1,
        ascending: true,
        pair: false,
        other: 1,
    };

    fn ends(self) -> (usize, usize) {
        let e = if self.pair { self.k - 1 } else { self.k };
        if self.ascending {
            (e, self.other)
        } else {
            (self.other, e)
        }
    }
}

#[derive(Debug, Clone, Copy)]
struct Move {
    bit: bool,
    pair: bool,
    cost: f64,
    to: State,
}

struct Table {
    n: usize,
    values: Vec<f64>,
}

impl Table {
    fn new(n: usize, fill: f64) -> Self {
        Self {
            n,
            values: vec![fill; n * 4 * (n + 1)],
        }
    }

    fn index(&self, s: State) -> usize {
        ((s.k * 2 + s.ascending as usize) * 2 + s.pair as usize) * (self.n + 1) + s.other
    }

    fn get(&self, s: State) -> f64 {
        self.values[self.index(s)]
    }

    fn set(&mut self, s: State, v: f64) {
        let i = self.index(s);
        self.values[i] = v;
    }

    /// Every reachable state with `k` placed cities.
    fn layer(&self, k: usize) -> Vec<State> {
        if k == 1 {
            return vec![State::START];
        }
        let mut out = Vec::with_capacity(4 * k);
        for pair in [false, true] {
            if pair && k < 3 {
                continue;
            }
            let top = if pair { k - 2 } else { k - 1 };
            for ascending in [true, false] {
                out.extend((1..=top).map(|other| State {
                    k,
                    ascending,
                    pair,
                    other,
                }));
            }
        }
        out
    }
}

/// Moves out of `s`, optionally restricted to a fixed bit vector.
fn moves(m: &DistanceMatrix, s: State, bits: Option<&[bool]>) -> impl Iterator<Item = Move> {
    let n = m.n();
    let (a, d) = s.ends();
    let c = s.k + 1;
    let allowed = |bit: bool, pair: bool| match bits {
        None => true,
        Some(b) => b[c - 2] == bit && (!pair || b[c - 1] == bit),
    };
    let mut out: [Option<Move>; 4] = [None; 4];
    if c < n {
        for bit in [false, true] {
            if allowed(bit, false) {
                let (cost, other) = if bit {
                    (m.cost(a, c), d)
                } else {
                    (m.cost(c, d), a)
                };
                out[bit as usize] = Some(Move {
                    bit,
                    pair: false,
                    cost,
                    to: State {
                        k: c,
                        ascending: bit,
                        pair: false,
                        other,
                    },
                });
            }
            if c + 1 < n && allowed(bit, true) {
                let (cost, other) = if bit {
                    (m.cost(a, c + 1) + m.cost(c + 1, c), d)
                } else {
                    (m.cost(c, c + 1) + m.cost(c + 1, d), a)
                };
                out[2 + bit as usize] = Some(Move {
                    bit,
                    pair: true,
                    cost,
                    to: State {
                        k: c + 1,
                        ascending: bit,
                        pair: true,
                        other,
                    },
                });
            }
        }
    }
    out.into_iter().flatten()
}

fn closing_cost(m: &DistanceMatrix, s: State) -> f64 {
    let (a, d) = s.ends();
    m.cost(a, m.n()) + m.cost(m.n(), d)
}

/// Cheapest completion from every state.
fn cost_to_go(m: &DistanceMatrix, bits: Option<&[bool]>) -> Table {
    let n = m.n();
    let mut g = Table::new(n, f64::INFINITY);
    for s in g.layer(n - 1) {
        g.set(s, closing_cost(m, s));
    }
    for k in (1..n - 1).rev() {
        for s in g.layer(k) {
            let best = moves(m, s, bits)
                .map(|mv| mv.cost + g.get(mv.to))
                .fold(f64::INFINITY, f64::min);
            g.set(s, best);
        }
    }
    g
}

/// Cheapest arrival at every state.
fn cost_so_far(m: &DistanceMatrix) -> Table {
    let n = m.n();
    let mut f = Table::new(n, f64::INFINITY);
    f.set(State::START, 0.0);
    for k in 1..n - 1 {
        for s in f.layer(k) {
            let here = f.get(s);
            if here.is_finite() {
                for mv in moves(m, s, None) {
                    if here + mv.cost < f.get(mv.to) {
                        f.set(mv.to, here + mv.cost);
                    }
                }
            }
        }
    }
    f
}

/// Lexicographically smallest bit vector among optimal tours.
fn smallest_bits(m: &DistanceMatrix, f: &Table, g: &Table, opt: f64) -> Vec<bool> {
    let n = m.n();
    let tight = |s: State, mv: &Move| f.get(s) + mv.cost + g.get(mv.to) <= opt + TOL;
    let mut seen = vec![false; g.values.len()];
    let mut bits = Vec::with_capacity(n - 2);
    let mut cur = vec![State::START];
    let mut pending: Vec<State> = Vec::new();
    let mut pending_bit = false;
    for _c in 2..n {
        for bit in [false, true] {
            let mut plain = Vec::new();
            let mut paired = Vec::new();
            for &s in &cur {
                for mv in moves(m, s, None).filter(|mv| mv.bit == bit && tight(s, mv)) {
                    if !std::mem::replace(&mut seen[g.index(mv.to)], true) {
                        if mv.pair { &mut paired } else { &mut plain }.push(mv.to);
                    }
                }
            }
            let keep_pending = !pending.is_empty() && pending_bit == bit;
            if plain.is_empty() && paired.is_empty() && !keep_pending {
                continue;
            }
            // pending states carry the pair flag, so they never collide with
            // plain targets
            if keep_pending {
                plain.append(&mut pending);
            }
            cur = plain;
            pending = paired;
            pending_bit = bit;
            bits.push(bit);
            break;
        }
    }
    bits
}

/// With the bits fixed, the lexicographically smallest peak list among
/// optimal tours: stop adding pairs as soon as a pair-free completion is
/// optimal, otherwise commit the earliest pair that stays optimal.
fn smallest_peaks(m: &DistanceMatrix, bits: &[bool], g: &Table, opt: f64) -> Result<Vec<usize>> {
    let n = m.n();
    let plain_step = |s: State| moves(m, s, Some(bits)).find(|mv| !mv.pair);
    let mut peaks = Vec::new();
    let mut s = State::START;
    let mut spent = 0.0;
    loop {
        let mut t = s;
        let mut rest = 0.0;
        while let Some(mv) = plain_step(t) {
            rest += mv.cost;
            t = mv.to;
        }
        if spent + rest + closing_cost(m, t) <= opt + TOL {
            return Ok(peaks);
        }
        loop {
            if s.k == n - 1 {
                return Err(Error::InvalidMatrix("no optimal completion found".into()));
            }
            let mut step = None;
            for mv in moves(m, s, Some(bits)) {
                if spent + mv.cost + g.get(mv.to) <= opt + TOL && (mv.pair || step.is_none()) {
                    step = Some(mv);
                }
            }
            let mv =
                step.ok_or_else(|| Error::InvalidMatrix("no optimal completion found".into()))?;
            spent += mv.cost;
            s = mv.to;
            if mv.pair {
                peaks.push(s.k);
                break;
            }
        }
    }
}

/// Optimal encoding under the canonical tie-break.
pub(super) fn optimal_encoding(m: &DistanceMatrix) -> Result<PsbEncoding> {
    let g = cost_to_go(m, None);
    let opt = g.get(State::START);
    let f = cost_so_far(m);
    let bits = smallest_bits(m, &f, &g, opt);
    let g_fixed = cost_to_go(m, Some(&bits));
    let peaks = smallest_peaks(m, &bits, &g_fixed, g_fixed.get(State::START))?;
    PsbEncoding::new(m.n(), bits, peaks)
}
