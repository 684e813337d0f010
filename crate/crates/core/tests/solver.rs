use psb_core::solver::{solve_atsp_bruteforce, solve_dp, solve_enum, DistanceMatrix};
use psb_core::{is_psb_tour, validate_encoding};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_matrix(n: usize, rng: &mut ChaCha8Rng) -> DistanceMatrix {
    DistanceMatrix::new(
        (0..n)
            .map(|_| (0..n).map(|_| rng.gen_range(1..=20) as f64).collect())
            .collect(),
    )
    .unwrap()
}

#[test]
fn dp_is_feasible_and_no_better_than_unrestricted() {
    let mut rng = ChaCha8Rng::seed_from_u64(71);
    for n in 5..=8 {
        for _ in 0..10 {
            let m = random_matrix(n, &mut rng);
            let dp = solve_dp(&m).unwrap();
            let enc = dp.encoding.as_ref().unwrap();
            assert!(is_psb_tour(&dp.tour));
            assert!(validate_encoding(n, enc.bits(), enc.peaks()).is_ok());
            assert_eq!(dp.cost, m.tour_cost(&dp.tour));
            let atsp = solve_atsp_bruteforce(&m).unwrap();
            assert!(atsp.cost <= dp.cost);
            assert!(atsp.cost <= solve_enum(&m).unwrap().cost);
        }
    }
}

#[test]
fn argmin_is_scale_invariant() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for n in [6, 9, 15] {
        let m = random_matrix(n, &mut rng);
        let base = solve_dp(&m).unwrap();
        for factor in [2.0, 7.0, 0.5] {
            assert_eq!(
                solve_dp(&m.scaled(factor).unwrap()).unwrap().tour,
                base.tour
            );
        }
    }
}

#[test]
fn dp_handles_large_instances() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    let m = random_matrix(300, &mut rng);
    let s = solve_dp(&m).unwrap();
    assert!(is_psb_tour(&s.tour));
    assert_eq!(s.tour.n(), 300);
}

#[test]
fn reads_matrix_files() {
    let dir = std::path::PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    let csv = dir.join("solver_matrix.csv");
    std::fs::write(&csv, "0,1,9,9\n9,0,1,9\n9,9,0,1\n1,9,9,0\n").unwrap();
    let m = DistanceMatrix::from_csv(&std::fs::read_to_string(&csv).unwrap()).unwrap();
    let s = solve_dp(&m).unwrap();
    assert_eq!(s.cost, 4.0);
    assert_eq!(s.tour.cities(), &[1, 2, 3, 4]);
    assert_eq!(s.encoding.unwrap().literal(), "11");
}
