use std::collections::HashMap;

use critical_planarity::simulator::{
    analyze_graph, critical_edge_count, kernel, pair_from_index, run_experiment, sample_gnm,
    simulate_outcomes, trial_rng, two_core, ExperimentConfig, ExperimentReport, MultiGraph,
    SimulatorError,
};

#[test]
fn pair_indices_cover_every_pair_once() {
    let n = 40u64;
    let mut seen = std::collections::HashSet::new();
    for i in 0..n * (n - 1) / 2 {
        let (u, v) = pair_from_index(i);
        assert!(u < v && (v as u64) < n);
        assert!(seen.insert((u, v)));
    }
}

#[test]
fn edge_sets_are_uniform() {
    // G(5, 2): 45 equally likely edge sets
    let samples = 100_000;
    let mut rng = trial_rng(2024, 0);
    let mut counts: HashMap<Vec<(usize, usize)>, usize> = HashMap::new();
    for _ in 0..samples {
        let g = sample_gnm(5, 2, &mut rng).unwrap();
        assert!(g.is_simple());
        let mut edges = g.edges().to_vec();
        edges.sort();
        *counts.entry(edges).or_default() += 1;
    }
    assert_eq!(counts.len(), 45);
    let expected = samples as f64 / 45.0;
    let chi2: f64 = counts.values().map(|&c| (c as f64 - expected).powi(2) / expected).sum();
    // 44 degrees of freedom, upper 0.1% point 78.7
    assert!(chi2 < 78.7, "chi-square {chi2}");
}

#[test]
fn sampler_rejects_impossible_counts() {
    let mut rng = trial_rng(1, 0);
    assert_eq!(
        sample_gnm(4, 7, &mut rng).unwrap_err(),
        SimulatorError::TooManyEdges { n: 4, m: 7 }
    );
    assert_eq!(sample_gnm(4, 6, &mut rng).unwrap().n_edges(), 6);
}

#[test]
fn critical_window_edge_counts() {
    assert_eq!(critical_edge_count(1_000_000, 0.0).unwrap(), 500_000);
    assert_eq!(critical_edge_count(1_000_000, 1.0).unwrap(), 505_000);
    assert_eq!(critical_edge_count(1_000_000, -3.0).unwrap(), 485_000);
    assert!(critical_edge_count(1000, -20.0).is_err());
}

#[test]
fn trials_are_reproducible_and_order_free() {
    let a = simulate_outcomes(5000, 2500, 24, 7).unwrap();
    let b = simulate_outcomes(5000, 2500, 24, 7).unwrap();
    assert_eq!(a, b);
    let sequential: Vec<_> = (0..24)
        .map(|t| analyze_graph(&sample_gnm(5000, 2500, &mut trial_rng(7, t)).unwrap()).unwrap())
        .collect();
    assert_eq!(a, sequential);
    assert_ne!(a, simulate_outcomes(5000, 2500, 24, 8).unwrap());
}

#[test]
fn excess_identity_holds_across_the_window() {
    // analyze_graph cross-checks excess, cycle counts and full-graph planarity
    for (i, lambda) in [-2.0, 0.0, 2.0, 4.0].into_iter().enumerate() {
        let n = 2000;
        let m = critical_edge_count(n, lambda).unwrap();
        for t in 0..20 {
            let g = sample_gnm(n, m, &mut trial_rng(i as u64, t)).unwrap();
            let outcome = analyze_graph(&g).unwrap();
            let core = two_core(&g);
            let d = kernel(&core).unwrap();
            assert_eq!(d.excess(), core.n_edges() as i64 - core.n_vertices() as i64);
            assert_eq!(outcome.kernel_excess, d.excess());
            assert_eq!(outcome.kernel_vertex_count, d.kernel.n_vertices());
            assert!(!outcome.is_sp || outcome.is_planar);
        }
    }
}

#[test]
fn kernel_of_named_graphs() {
    let theta = MultiGraph::theta([2, 3, 4]);
    let d = kernel(&two_core(&theta)).unwrap();
    assert_eq!(d.kernel.n_vertices(), 2);
    assert_eq!(d.kernel.n_edges(), 3);
    assert!(d.kernel.is_cubic());
    let d = kernel(&two_core(&MultiGraph::cycle(7))).unwrap();
    assert_eq!(d.kernel.n_vertices(), 0);
    assert_eq!(d.isolated_cycles, 1);
    let sorted = |g: &MultiGraph| {
        let mut e = g.edges().to_vec();
        e.sort();
        e
    };
    let d = kernel(&MultiGraph::petersen()).unwrap();
    assert_eq!(sorted(&d.kernel), sorted(&MultiGraph::petersen()));
}

#[test]
fn report_round_trips() {
    let config = ExperimentConfig { lambda: 0.5, n: 3000, trials: 30, seed: 11 };
    let report = run_experiment(&config).unwrap();
    assert_eq!(report.trials, 30);
    assert_eq!(report.histogram.values().sum::<usize>(), 30);
    assert_eq!(ExperimentReport::from_json(&report.to_json()).unwrap(), report);
    let csv = report.to_csv_string();
    assert_eq!(ExperimentReport::read_csv(csv.as_bytes()).unwrap(), report);
}

#[test]
fn invalid_experiments_are_rejected() {
    let bad = |n, trials, lambda| run_experiment(&ExperimentConfig { lambda, n, trials, seed: 0 }).is_err();
    assert!(bad(999, 10, 0.0));
    assert!(bad(5000, 0, 0.0));
    assert!(bad(5000, 10, f64::INFINITY));
}
