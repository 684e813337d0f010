use proptest::prelude::*;
use psb_core::adjacency::nonadj_fast_condition;
use psb_core::{
    adjacent, decode, encode, enumerate_encodings, nonadj_exhaustive, random_encoding,
    relabel_mirror, reverse_tour, NonAdjCase, PsbEncoding,
};

fn pair(n: usize, seed: u64) -> Option<(PsbEncoding, PsbEncoding)> {
    let x = random_encoding(n, seed).unwrap();
    let y = random_encoding(n, seed ^ 0x9e37_79b9_7f4a_7c15).unwrap();
    (x != y).then_some((x, y))
}

fn sizes() -> impl Strategy<Value = usize> {
    prop::sample::select(vec![10usize, 20, 40])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn adjacency_is_symmetric(n in sizes(), seed in any::<u64>()) {
        if let Some((x, y)) = pair(n, seed) {
            prop_assert_eq!(adjacent(&x, &y).unwrap(), adjacent(&y, &x).unwrap());
        }
    }

    #[test]
    fn adjacency_is_transform_invariant(n in sizes(), seed in any::<u64>()) {
        if let Some((x, y)) = pair(n, seed) {
            let base = adjacent(&x, &y).unwrap();
            prop_assert_eq!(base, adjacent(&reverse_tour(&x), &reverse_tour(&y)).unwrap());
            prop_assert_eq!(base, adjacent(&relabel_mirror(&x), &relabel_mirror(&y)).unwrap());
        }
    }

    #[test]
    fn transforms_are_involutions(n in 3usize..60, seed in any::<u64>()) {
        let x = random_encoding(n, seed).unwrap();
        prop_assert_eq!(reverse_tour(&reverse_tour(&x)), x.clone());
        prop_assert_eq!(relabel_mirror(&relabel_mirror(&x)), x.clone());
        prop_assert_eq!(encode(&decode(&x)).unwrap(), x.clone());
        let rev = decode(&x).reversed();
        prop_assert_eq!(decode(&reverse_tour(&x)), rev);
    }

    #[test]
    fn fast_agrees_with_exhaustive_beyond_enumeration(n in prop::sample::select(vec![9usize, 12, 16, 20]), seed in any::<u64>()) {
        if let Some((x, y)) = pair(n, seed) {
            let witness = nonadj_exhaustive(&x, &y).unwrap();
            prop_assert_eq!(adjacent(&x, &y).unwrap(), witness.is_none());
            if let Some(w) = witness {
                prop_assert!(w.revalidate(&x, &y));
                prop_assert!(nonadj_fast_condition(&x, &y, w.case).unwrap());
            }
        }
    }

    #[test]
    fn case_symmetry_under_reversal(n in sizes(), seed in any::<u64>()) {
        if let Some((x, y)) = pair(n, seed) {
            let (rx, ry) = (reverse_tour(&x), reverse_tour(&y));
            let fast = |a: &PsbEncoding, b: &PsbEncoding, c| nonadj_fast_condition(a, b, c).unwrap();
            prop_assert_eq!(fast(&x, &y, NonAdjCase::Two), fast(&rx, &ry, NonAdjCase::One));
            prop_assert_eq!(fast(&x, &y, NonAdjCase::Four), fast(&rx, &ry, NonAdjCase::Three));
        }
    }
}

#[test]
fn case_symmetry_on_every_pair_up_to_seven() {
    for n in 3..=7 {
        let all: Vec<PsbEncoding> = enumerate_encodings(n).unwrap().collect();
        for (i, x) in all.iter().enumerate() {
            for y in &all[i + 1..] {
                let (rx, ry) = (reverse_tour(x), reverse_tour(y));
                for (c, mirrored) in [
                    (NonAdjCase::Two, NonAdjCase::One),
                    (NonAdjCase::Four, NonAdjCase::Three),
                ] {
                    assert_eq!(
                        nonadj_fast_condition(x, y, c).unwrap(),
                        nonadj_fast_condition(&rx, &ry, mirrored).unwrap(),
                        "{x} {y} case {}",
                        c.id()
                    );
                }
            }
        }
    }
}

#[test]
fn every_exhaustive_witness_revalidates_up_to_seven() {
    for n in 3..=7 {
        let all: Vec<PsbEncoding> = enumerate_encodings(n).unwrap().collect();
        for (i, x) in all.iter().enumerate() {
            for y in &all[i + 1..] {
                if let Some(w) = nonadj_exhaustive(x, y).unwrap() {
                    assert!(w.revalidate(x, y), "{x} {y} {w:?}");
                    assert!(w.i_a <= w.j_b + 1);
                }
            }
        }
    }
}
