mod common;

use common::*;
use maze_mappers::field::{
    diffuse_step, gradient, greedy_trace, solve_laplace, FieldError, ScalarField, SolverConfig,
    TraceMode, UNREACHED,
};
use maze_mappers::maze::{parse_ascii, Coord};
use proptest::prelude::*;

#[test]
fn one_diffusion_step_by_hand() {
    let g = parse_ascii("SD").unwrap();
    let f = ScalarField::new(2, 1, vec![1.0, 0.0]);
    let next = diffuse_step(&f, &g, 0.1, 1.0, &[]).unwrap();
    assert!((next.values()[0] - 0.9).abs() < 1e-15);
    assert!((next.values()[1] - 0.1).abs() < 1e-15);
    assert!(matches!(
        diffuse_step(&f, &g, 1.0, 0.3, &[]),
        Err(FieldError::UnstableStep(_))
    ));
}

#[test]
fn one_sided_gradient_by_hand() {
    let g = parse_ascii("SD").unwrap();
    let f = ScalarField::new(2, 1, vec![0.0, 1.0]);
    let v = gradient(&f, &g).unwrap();
    assert_eq!(v.get(Coord::new(0, 0)), (1.0, 0.0));
    assert_eq!(v.get(Coord::new(1, 0)), (1.0, 0.0));
}

#[test]
fn descending_hop_counts_gives_shortest_paths() {
    for seed in 0..50 {
        let g = maze(21, 500 + seed, [0.0, 0.3, 1.0][seed as usize % 3]);
        let hops: Vec<f64> = bfs(&g, g.destination())
            .into_iter()
            .map(|d| d.map_or(UNREACHED, |d| d as f64))
            .collect();
        let field = ScalarField::new(g.width(), g.height(), hops);
        let path =
            greedy_trace(&field, &g, g.source(), g.destination(), TraceMode::Descend).unwrap();
        assert_valid_path(&g, &path);
        assert_eq!(path.len() as f64, field.get(g.source()) + 1.0);
    }
}

#[test]
fn plateau_is_reported() {
    let g = parse_ascii("S..D").unwrap();
    let flat = ScalarField::filled(4, 1, 0.5);
    assert!(matches!(
        greedy_trace(&flat, &g, g.source(), g.destination(), TraceMode::Ascend),
        Err(FieldError::Plateau { .. })
    ));
}

#[test]
fn solver_rejects_bad_pins() {
    let g = parse_ascii("S#D").unwrap();
    let cfg = SolverConfig::default();
    assert_eq!(
        solve_laplace(&g, &[], &cfg).unwrap_err(),
        FieldError::NoPins
    );
    assert!(matches!(
        solve_laplace(&g, &[(Coord::new(1, 0), 1.0)], &cfg),
        Err(FieldError::PinOnWall(_))
    ));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn unclamped_diffusion_conserves_mass(
        seed in any::<u64>(),
        w in 2usize..14,
        h in 2usize..14,
        rate in 0.01f64..=0.25,
    ) {
        let mut r = rng(seed);
        let g = random_mask(&mut r, w, h, 0.7);
        let mut f = ScalarField::zeros_like(&g);
        for (i, c) in g.corridors().collect::<Vec<_>>().into_iter().enumerate() {
            f.set(c, 1.0 + (i % 7) as f64);
        }
        let mass = f.corridor_sum(&g);
        for _ in 0..50 {
            let next = diffuse_step(&f, &g, rate, 1.0, &[]).unwrap();
            let after = next.corridor_sum(&g);
            prop_assert!(((after - mass) / mass).abs() <= 1e-12);
            f = next;
        }
    }

    #[test]
    fn greedy_traces_are_strictly_monotone(seed in any::<u64>(), ascend in any::<bool>()) {
        let mut r = rng(seed);
        let g = random_mask(&mut r, 8, 8, 0.8);
        let values: Vec<f64> = (0..g.len()).map(|i| ((i * 37 + seed as usize) % 101) as f64).collect();
        let field = ScalarField::new(8, 8, values);
        let mode = if ascend { TraceMode::Ascend } else { TraceMode::Descend };
        if let Ok(path) = greedy_trace(&field, &g, g.source(), g.destination(), mode) {
            for pair in path.cells().windows(2) {
                let (a, b) = (field.get(pair[0]), field.get(pair[1]));
                let improves = if ascend { b > a } else { b < a };
                prop_assert!(improves);
                prop_assert_eq!(pair[0].manhattan(pair[1]), 1);
            }
        }
    }

    #[test]
    fn converged_solves_satisfy_the_maximum_principle(seed in any::<u64>(), w in 2usize..=15, h in 2usize..=15) {
        let mut r = rng(seed);
        let g = random_mask(&mut r, w, h, 0.65);
        let cfg = SolverConfig::default();
        let pins = [(g.source(), 0.0), (g.destination(), 1.0)];
        let (phi, report) = solve_laplace(&g, &pins, &cfg).unwrap();
        prop_assert!(report.converged);
        prop_assert_eq!(phi.get(g.source()), 0.0);
        prop_assert_eq!(phi.get(g.destination()), 1.0);
        let dense = dense_laplace(&g, &pins);
        for c in g.corridors() {
            if let Some(v) = dense[g.index(c)] {
                prop_assert!((phi.get(c) - v).abs() <= 10.0 * cfg.tolerance);
            }
            if c == g.source() || c == g.destination() || g.corridor_degree(c) == 0 {
                continue;
            }
            let mean = g.corridor_neighbors(c).map(|n| phi.get(n)).sum::<f64>() / g.corridor_degree(c) as f64;
            prop_assert!((phi.get(c) - mean).abs() <= cfg.tolerance);
            prop_assert!(phi.get(c) >= -cfg.tolerance && phi.get(c) <= 1.0 + cfg.tolerance);
        }
    }
}
