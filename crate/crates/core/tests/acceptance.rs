//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any failure.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use psb_core::analysis::{
    clique_construction, diameter, four_hop_path, max_clique_within, pyramidalize,
};
use psb_core::oracle::sums_match;
use psb_core::solver::{solve_atsp_bruteforce, solve_dp, solve_enum, DistanceMatrix};
use psb_core::verify::{equivalence, invariants};
use psb_core::{
    adjacent, build_skeleton, char_vector, decode, encode, enumerate_encodings, nonadj_exhaustive,
    pair_oracle, random_encoding, Exec, Method, PairOracle, PsbEncoding, Tour,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn enc(s: &str) -> PsbEncoding {
    s.parse().unwrap()
}

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn within(start: Instant, limit: Duration) -> Result<(), String> {
    ensure(
        start.elapsed() < limit,
        format!("took {:.1?}, limit {limit:?}", start.elapsed()),
    )
}

fn fixtures() -> Check {
    let start = Instant::now();
    let tour = Tour::new(vec![1, 2, 5, 4, 7, 8, 6, 3]).map_err(|e| e.to_string())?;
    let e = encode(&tour).map_err(|e| e.to_string())?;
    ensure(e.literal() == "101101@5", format!("encode gave {e}"))?;
    ensure(decode(&enc("101101@5")) == tour, "decode mismatch")?;
    let cv = char_vector(&Tour::new(vec![1, 2, 4, 3]).map_err(|e| e.to_string())?);
    ensure(
        cv.edges() == [(1, 2), (2, 4), (3, 1), (4, 3)],
        format!("edges {:?}", cv.edges()),
    )?;
    within(start, Duration::from_secs(1))?;
    Ok("both figure fixtures reproduced".into())
}

fn equivalence_up_to_eight() -> Check {
    let start = Instant::now();
    let mut parts = Vec::new();
    for n in 3..=8 {
        let r = equivalence(n, Exec::default()).map_err(|e| e.to_string())?;
        ensure(r.passed(), format!("{r:?}"))?;
        parts.push(format!(
            "n={n}: {} pairs, {} non-adjacent",
            r.pairs, r.non_adjacent
        ));
    }
    within(start, Duration::from_secs(300))?;
    Ok(parts.join("; "))
}

fn non_adjacent_figure_pairs() -> Check {
    let oracle = PairOracle::for_size(7).map_err(|e| e.to_string())?;
    let pairs = [
        (("11111@5", "01111"), ("11111", "01111@5")),
        (("10010@4", "10000@6"), ("10000@4,6", "10010")),
    ];
    for ((x, y), (z, t)) in pairs {
        let (x, y, z, t) = (enc(x), enc(y), enc(z), enc(t));
        ensure(!adjacent(&x, &y).unwrap(), format!("fast says {x} ~ {y}"))?;
        let w = nonadj_exhaustive(&x, &y)
            .unwrap()
            .ok_or(format!("exhaustive says {x} ~ {y}"))?;
        ensure(
            w.revalidate(&x, &y),
            "exhaustive witness fails revalidation",
        )?;
        let pw = pair_oracle(&x, &y, &oracle)
            .unwrap()
            .ok_or(format!("oracle says {x} ~ {y}"))?;
        ensure(
            sums_match(&x, &y, &pw.z, &pw.t),
            "oracle witness violates the sum equation",
        )?;
        ensure(
            sums_match(&x, &y, &z, &t),
            format!("drawn pair {z}, {t} violates the sum equation"),
        )?;
    }
    Ok("both pairs non-adjacent under fast, exhaustive and oracle; drawn and returned witnesses sum exactly".into())
}

fn diameter_and_paths() -> Check {
    let start = Instant::now();
    let mut diam = Vec::new();
    for n in 3..=8 {
        let s = build_skeleton(n, Method::Fast).map_err(|e| e.to_string())?;
        let d = diameter(s.graph()).map_err(|e| e.to_string())?;
        ensure(d <= 4, format!("n={n} diameter {d}"))?;
        diam.push(d.to_string());
    }
    let mut longest = 0;
    for n in [10, 15, 20] {
        for seed in 0..100u64 {
            let x = random_encoding(n, 1000 + 2 * seed).unwrap();
            let y = random_encoding(n, 1001 + 2 * seed).unwrap();
            let p = four_hop_path(&x, &y).map_err(|e| e.to_string())?;
            let hops = p.hops();
            ensure(
                hops.first() == Some(&x) && hops.last() == Some(&y),
                "endpoints",
            )?;
            ensure(p.edge_count() <= 4, format!("{} edges", p.edge_count()))?;
            for h in hops.windows(2) {
                ensure(
                    adjacent(&h[0], &h[1]).unwrap(),
                    format!("{} !~ {}", h[0], h[1]),
                )?;
            }
            longest = longest.max(p.edge_count());
        }
    }
    within(start, Duration::from_secs(120))?;
    Ok(format!(
        "diameters n=3..8: {}; 300 random paths, longest {longest} edges",
        diam.join(",")
    ))
}

fn clique_bounds() -> Check {
    let start = Instant::now();
    let limit = Duration::from_secs(600);
    for n in 4..=12 {
        let fam = clique_construction(n).map_err(|e| e.to_string())?;
        let members: Vec<&PsbEncoding> = fam.encodings().collect();
        ensure(
            members.len() == (n / 2).pow(2),
            format!("n={n}: {} members", members.len()),
        )?;
        for (i, a) in members.iter().enumerate() {
            for b in &members[i + 1..] {
                ensure(adjacent(a, b).unwrap(), format!("n={n}: {a} !~ {b}"))?;
            }
        }
        if n <= 8 {
            let oracle = PairOracle::for_size(n).map_err(|e| e.to_string())?;
            for (i, a) in members.iter().enumerate() {
                for b in &members[i + 1..] {
                    ensure(
                        pair_oracle(a, b, &oracle).unwrap().is_none(),
                        format!("oracle: {a} !~ {b}"),
                    )?;
                }
            }
        }
    }
    let table = [
        "000000", "000001", "000011", "000111", "100000", "100001", "100011", "100111", "110000",
        "110001", "110011", "110111", "111000", "111001", "111011", "111111",
    ];
    let got: Vec<String> = clique_construction(8)
        .unwrap()
        .encodings()
        .map(|e| e.literal())
        .collect();
    ensure(got == table, format!("n=8 family {got:?}"))?;

    let mut sizes = Vec::new();
    for n in 5..=8 {
        let s = build_skeleton(n, Method::Fast).map_err(|e| e.to_string())?;
        let budget = limit.saturating_sub(start.elapsed());
        let out = max_clique_within(s.graph(), 350, Some(budget)).map_err(|e| e.to_string())?;
        for (i, &a) in out.members.iter().enumerate() {
            for &b in &out.members[i + 1..] {
                ensure(
                    s.graph().has_edge(a, b),
                    "reported clique has a missing edge",
                )?;
            }
        }
        let lower = (n / 2).pow(2);
        ensure(
            out.size >= lower,
            format!("n={n}: clique {} < {lower}", out.size),
        )?;
        if !out.proven {
            return Err(format!(
                "n={n}: exact search did not finish within the {limit:?} budget ({} nodes); best clique {} >= {lower}, exact values so far {}",
                out.nodes,
                out.size,
                sizes.join(",")
            ));
        }
        sizes.push(out.size.to_string());
    }
    within(start, limit)?;
    Ok(format!(
        "families exact for n=4..12, n=8 matches the table; exact clique numbers n=5..8: {}",
        sizes.join(",")
    ))
}

fn integer_matrix(n: usize, rng: &mut ChaCha8Rng) -> DistanceMatrix {
    DistanceMatrix::new(
        (0..n)
            .map(|_| (0..n).map(|_| rng.gen_range(0..=100) as f64).collect())
            .collect(),
    )
    .unwrap()
}

fn solver_exactness() -> Check {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for n in 5..=9 {
        for trial in 0..50 {
            let m = integer_matrix(n, &mut rng);
            let dp = solve_dp(&m).map_err(|e| e.to_string())?;
            let en = solve_enum(&m).map_err(|e| e.to_string())?;
            let brute = solve_atsp_bruteforce(&m).map_err(|e| e.to_string())?;
            ensure(
                dp.cost == en.cost,
                format!("n={n} trial {trial}: dp {} enum {}", dp.cost, en.cost),
            )?;
            ensure(
                brute.cost <= dp.cost,
                format!("n={n} trial {trial}: atsp {} > dp {}", brute.cost, dp.cost),
            )?;
        }
    }
    for trial in 0..50 {
        let m = integer_matrix(4, &mut rng);
        let costs =
            [solve_dp(&m), solve_enum(&m), solve_atsp_bruteforce(&m)].map(|s| s.unwrap().cost);
        ensure(
            costs.iter().all(|&c| c == costs[0]),
            format!("n=4 trial {trial}: {costs:?}"),
        )?;
    }
    within(start, Duration::from_secs(120))?;
    Ok("250 matrices for n=5..9 and 50 at n=4".into())
}

fn median_adjacency_time(n: usize, pairs: u64) -> Duration {
    let mut times: Vec<Duration> = (0..pairs)
        .map(|seed| {
            let x = random_encoding(n, 2 * seed).unwrap();
            let y = random_encoding(n, 2 * seed + 1).unwrap();
            let t = Instant::now();
            std::hint::black_box(
                adjacent(std::hint::black_box(&x), std::hint::black_box(&y)).unwrap(),
            );
            t.elapsed()
        })
        .collect();
    times.sort_unstable();
    times[times.len() / 2]
}

fn linear_scaling() -> Check {
    median_adjacency_time(10_000, 50);
    let small = median_adjacency_time(10_000, 1000);
    let large = median_adjacency_time(100_000, 1000);
    let ratio = large.as_secs_f64() / small.as_secs_f64();
    let detail = format!("median {small:?} at 10^4, {large:?} at 10^5, ratio {ratio:.2}");
    ensure((10.0 / 3.0..=30.0).contains(&ratio), detail.clone())?;
    Ok(detail)
}

fn property_suites() -> Check {
    let mut cases = 0;
    for n in 3..=10 {
        for check in invariants(n, Exec::default()).map_err(|e| e.to_string())? {
            ensure(
                check.passed(),
                format!("n={n} {}: {} failures", check.name, check.failures),
            )?;
            cases += check.cases;
        }
    }
    for n in 3..=7 {
        let ones = PsbEncoding::all_ones(n).unwrap();
        for x in enumerate_encodings(n).unwrap() {
            let hat = pyramidalize(&x);
            ensure(
                pyramidalize(&hat) == ones,
                format!("{x}: pyramidalize twice"),
            )?;
            ensure(
                hat == x || adjacent(&x, &hat).unwrap(),
                format!("{x} !~ {hat}"),
            )?;
            cases += 1;
        }
    }
    Ok(format!("{cases} cases, zero failures"))
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("figure fixtures", fixtures),
        (
            "fast = exhaustive = oracle for n=3..8",
            equivalence_up_to_eight,
        ),
        ("non-adjacent figure pairs", non_adjacent_figure_pairs),
        ("diameter and four-hop paths", diameter_and_paths),
        ("clique lower bound and exact clique numbers", clique_bounds),
        ("solver exactness", solver_exactness),
        ("linear-time adjacency", linear_scaling),
        ("property suites", property_suites),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let outcome =
            catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed();
        match outcome {
            Ok(detail) => println!("criterion {} PASS {name} ({elapsed:.1?}): {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {} FAIL {name} ({elapsed:.1?}): {detail}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", 8 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
