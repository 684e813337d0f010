use std::collections::BTreeSet;

use itertools::Itertools;
use psb_core::{
    char_vector, count_encodings, decode, encode, enumerate_encodings, random_encoding,
    PsbEncoding, Tour,
};

/// Peak test straight from the successor/predecessor definitions, written
/// independently of the library predicates.
fn brute_force_is_psb(seq: &[usize]) -> bool {
    let n = seq.len();
    let at = |k: isize| seq[k.rem_euclid(n as isize) as usize];
    let mut proper = Vec::new();
    for k in 0..n as isize {
        let (c, prev, next) = (at(k), at(k - 1), at(k + 1));
        if prev < c && next < c {
            let ascending_sb = next == c - 1 && at(k + 2) > c;
            let descending_sb = prev == c - 1 && at(k - 2) > c;
            if !(ascending_sb || descending_sb) {
                proper.push(c);
            }
        }
    }
    proper == [n]
}

fn brute_force_tours(n: usize) -> BTreeSet<Vec<usize>> {
    (2..=n)
        .permutations(n - 1)
        .map(|p| std::iter::once(1).chain(p).collect::<Vec<_>>())
        .filter(|seq| brute_force_is_psb(seq))
        .collect()
}

#[test]
fn enumeration_matches_brute_force_tours() {
    for n in 3..=8 {
        let decoded: BTreeSet<Vec<usize>> = enumerate_encodings(n)
            .unwrap()
            .map(|e| decode(&e).cities().to_vec())
            .collect();
        let brute = brute_force_tours(n);
        assert_eq!(decoded, brute, "n={n}");
        assert_eq!(count_encodings(n).unwrap(), brute.len() as u128, "n={n}");
    }
}

#[test]
fn four_cities_every_directed_tour_is_psb() {
    assert_eq!(brute_force_tours(4).len(), 6);
}

#[test]
fn encode_rejects_exactly_the_non_psb_tours() {
    let n = 7;
    for p in (2..=n).permutations(n - 1) {
        let seq: Vec<usize> = std::iter::once(1).chain(p).collect();
        let tour = Tour::new(seq.clone()).unwrap();
        match encode(&tour) {
            Ok(e) => {
                assert!(brute_force_is_psb(&seq));
                assert_eq!(decode(&e), tour);
            }
            Err(_) => assert!(!brute_force_is_psb(&seq), "{seq:?}"),
        }
    }
}

#[test]
fn round_trips_up_to_ten() {
    for n in 3..=10 {
        for e in enumerate_encodings(n).unwrap() {
            let t = decode(&e);
            assert_eq!(encode(&t).unwrap(), e);
            let back: PsbEncoding = e.literal().parse().unwrap();
            assert_eq!(back, e);
            let json = serde_json::to_string(&e).unwrap();
            assert_eq!(serde_json::from_str::<PsbEncoding>(&json).unwrap(), e);
        }
    }
}

#[test]
fn enumeration_is_canonical_and_counted() {
    for n in 3..=10 {
        let all: Vec<PsbEncoding> = enumerate_encodings(n).unwrap().collect();
        assert!(all.windows(2).all(|w| w[0] < w[1]), "n={n}");
        assert_eq!(all.len() as u128, count_encodings(n).unwrap());
    }
    let expected = [2u128, 6, 16, 44, 120, 328, 896, 2448];
    for (n, &c) in (3..).zip(&expected) {
        assert_eq!(count_encodings(n).unwrap(), c);
    }
}

#[test]
fn figure_fixtures() {
    let t = Tour::new(vec![1, 2, 5, 4, 7, 8, 6, 3]).unwrap();
    assert_eq!(encode(&t).unwrap().literal(), "101101@5");
    assert_eq!(decode(&"101101@5".parse().unwrap()), t);
    let cv = char_vector(&Tour::new(vec![1, 2, 4, 3]).unwrap());
    assert_eq!(cv.edges(), &[(1, 2), (2, 4), (3, 1), (4, 3)]);
}

#[test]
fn random_encodings_are_uniform_at_five() {
    let all: Vec<PsbEncoding> = enumerate_encodings(5).unwrap().collect();
    let samples = 32_000;
    let mut hist = vec![0usize; all.len()];
    for seed in 0..samples {
        let e = random_encoding(5, seed).unwrap();
        hist[all.binary_search(&e).unwrap()] += 1;
    }
    let expected = samples as f64 / all.len() as f64;
    let chi2: f64 = hist
        .iter()
        .map(|&h| (h as f64 - expected).powi(2) / expected)
        .sum();
    // 15 degrees of freedom; 37.7 is the 0.999 quantile
    assert!(chi2 < 37.7, "chi2={chi2} hist={hist:?}");
}

#[test]
fn random_encodings_are_valid_and_reproducible() {
    for n in [3, 4, 10, 57, 1000] {
        for seed in 0..20 {
            let e = random_encoding(n, seed).unwrap();
            assert_eq!(e, random_encoding(n, seed).unwrap());
            assert_eq!(encode(&decode(&e)).unwrap(), e);
        }
    }
}
