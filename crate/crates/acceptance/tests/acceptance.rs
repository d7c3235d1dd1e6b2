//! End-to-end acceptance checks. Each criterion prints one PASS or FAIL line;
//! the process exits nonzero if any criterion fails.

#[path = "../../core/tests/common/oracles.rs"]
mod oracles;

use std::f64::consts::PI;
use std::panic::{self, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::Instant;

use critical_planarity::airy::{airy_a, reciprocal_gamma};
use critical_planarity::enumeration::{
    all_cubic_weight, kernel_table, nonic_residual, pairing_oracle, solve_planar_system,
    solve_sp_system, ClassTag, KernelWeightTable,
};
use critical_planarity::probability::{
    class_probability, kernel_size_pmf, parse_grid, probability_curve, zero_lambda_closed_form,
};
use critical_planarity::series::{PowerSeries, Rational};
use critical_planarity::simulator::{
    is_planar, is_series_parallel, run_experiment, standard_error, ExperimentConfig, MultiGraph,
};

type Outcome = (bool, String);

fn series(coeffs: &[(i64, i64)]) -> PowerSeries {
    PowerSeries::from_ratios(coeffs, coeffs.len() - 1)
}

fn first_mismatch(name: &str, got: &PowerSeries, want: &PowerSeries) -> Option<String> {
    (0..=want.order())
        .find(|&k| got.coeff(k) != want.coeff(k))
        .map(|k| format!("{name}[z^{k}] = {} expected {}", got.coeff(k), want.coeff(k)))
}

fn coefficient_goldens() -> Outcome {
    let start = Instant::now();
    let planar = solve_planar_system(20).unwrap();
    let sp = solve_sp_system(20).unwrap();
    let elapsed = start.elapsed().as_secs_f64();
    let c = series(&[(0, 1), (0, 1), (1, 1), (0, 1), (25, 8), (0, 1), (59, 4), (0, 1), (11339, 128)]);
    let g1 = series(&[(0, 1), (0, 1), (5, 24), (0, 1), (5, 16), (0, 1), (121, 128), (0, 1), (1591, 384)]);
    let g = series(&[
        (1, 1), (0, 1), (5, 24), (0, 1), (385, 1152), (0, 1), (83933, 82944), (0, 1), (35002561, 7962624),
    ]);
    let g_sp = series(&[
        (1, 1), (0, 1), (5, 24), (0, 1), (337, 1152), (0, 1), (55565, 82944), (0, 1), (15517345, 7962624),
    ]);
    let mismatches: Vec<String> = [
        first_mismatch("C", &planar.c, &c),
        first_mismatch("G1", &planar.g1, &g1),
        first_mismatch("G", &planar.g, &g),
        first_mismatch("G_sp", &sp.g, &g_sp),
    ]
    .into_iter()
    .flatten()
    .collect();
    let pass = mismatches.is_empty() && elapsed < 5.0;
    let detail = if mismatches.is_empty() {
        format!("C, G1, G, G_sp exact through z^8; both systems solved at N=20 in {elapsed:.2} s")
    } else {
        mismatches.join("; ")
    };
    (pass, detail)
}

fn nonic_residual_vanishes() -> Outcome {
    let planar = solve_planar_system(20).unwrap();
    let residual = nonic_residual(&planar.c);
    match residual.valuation() {
        None => (true, format!("residual is zero through z^{}", residual.order())),
        Some(k) => (false, format!("nonzero residual at z^{k}: {}", residual.coeff(k))),
    }
}

fn planarity_discrepancy() -> Outcome {
    let planar = kernel_table(&ClassTag::Planar, 4).unwrap();
    let e3 = all_cubic_weight(3);
    let g3 = planar.weight(3).clone();
    let de = e3 - g3;
    let planar_g = solve_planar_system(8).unwrap().g;
    let sp_g = solve_sp_system(8).unwrap().g;
    let d4 = planar_g.coeff(4) - sp_g.coeff(4);
    let pass = de == Rational::new(1.into(), 72.into()) && d4 == Rational::new(1.into(), 24.into());
    (pass, format!("e3 - g3 = {de}, [z^4](G - G_sp) = {d4}"))
}

fn pairing_oracle_agrees() -> Outcome {
    let start = Instant::now();
    let mut parts = Vec::new();
    let mut pass = true;
    for r in 1..=2 {
        let census = pairing_oracle(r).unwrap();
        let got = census.weighted_egf_coefficient();
        let want = all_cubic_weight(r);
        pass &= got == want;
        parts.push(format!("r={r}: {got} vs {want} over {} pairings", census.pairings));
    }
    let elapsed = start.elapsed().as_secs_f64();
    pass &= elapsed < 10.0;
    (pass, format!("{}; {elapsed:.2} s", parts.join(", ")))
}

fn planar_at_zero() -> Outcome {
    let start = Instant::now();
    let table = kernel_table(&ClassTag::Planar, 30).unwrap();
    let p = class_probability(&table, 0.0).unwrap();
    let elapsed = start.elapsed().as_secs_f64();
    let pass = (p.p - 0.99780).abs() < 5e-6 && p.p > 0.98707 && p.p < 0.99977 && elapsed < 1.0;
    (pass, format!("p(0) = {:.10}, r_max 30, {elapsed:.3} s including the table solve", p.p))
}

fn sp_at_zero() -> Outcome {
    let table = kernel_table(&ClassTag::SeriesParallel, 30).unwrap();
    let p = class_probability(&table, 0.0).unwrap().p;
    ((p - 0.98003).abs() < 5e-6, format!("p_sp(0) = {p:.10}"))
}

fn extreme_lambda_brackets() -> Outcome {
    let table = kernel_table(&ClassTag::Planar, 30).unwrap();
    let low = class_probability(&table, -3.0).unwrap();
    let high = class_probability(&table, 5.0).unwrap();
    let deficit = 1.0 - low.p;
    let low_ok = (0.5e-7..=2.0e-7).contains(&deficit);
    let high_ok = (2.5e-7..=9.8e-7).contains(&high.p);
    (
        low_ok && high_ok,
        format!(
            "1 - p(-3) = {deficit:.3e} (certified {}), p(5) = {:.3e} (certified {})",
            low.certified, high.p, high.certified
        ),
    )
}

fn normalization() -> Outcome {
    let mut pass = true;
    let mut parts = Vec::new();
    for lambda in [-3.0, -1.0, 0.0, 1.0, 2.0, 4.0] {
        let total = kernel_size_pmf(lambda, 30).unwrap().total();
        let ok = (total - 1.0).abs() <= 1e-7;
        pass &= ok;
        parts.push(format!("{lambda}: {}{total:.9}", if ok { "" } else { "!" }));
    }
    (pass, format!("sum through r=30 at {}", parts.join(", ")))
}

fn zero_lambda_identity() -> Outcome {
    let mut pass = true;
    let mut parts = Vec::new();
    for class in [ClassTag::Planar, ClassTag::SeriesParallel] {
        let table = kernel_table(&class, 30).unwrap();
        let airy = class_probability(&table, 0.0).unwrap().p;
        let closed = zero_lambda_closed_form(&table);
        let diff = (airy - closed).abs();
        pass &= diff < 1e-9;
        parts.push(format!("{class:?}: |diff| = {diff:.2e}"));
    }
    (pass, parts.join(", "))
}

fn special_functions() -> Outcome {
    let mut failures = Vec::new();
    if reciprocal_gamma(1.0) != 1.0 {
        failures.push(format!("1/G(1) = {}", reciprocal_gamma(1.0)));
    }
    let half = reciprocal_gamma(0.5);
    if (half - 1.0 / PI.sqrt()).abs() > 1e-13 {
        failures.push(format!("1/G(1/2) = {half}"));
    }
    for x in [0.0, -1.0, -2.0] {
        if reciprocal_gamma(x) != 0.0 {
            failures.push(format!("1/G({x}) = {}", reciprocal_gamma(x)));
        }
    }
    let a = airy_a(0.5, 0.0, 1e-13).unwrap().value;
    let want = 1.0 / (3.0 * PI).sqrt();
    if (a - want).abs() > 1e-12 {
        failures.push(format!("A(1/2, 0) = {a} expected {want}"));
    }
    if failures.is_empty() {
        (true, format!("reciprocal gamma at 1, 1/2, 0, -1, -2 and A(1/2, 0) = {a:.15}"))
    } else {
        (false, failures.join("; "))
    }
}

fn graph_testers() -> Outcome {
    let mut k33_minus = MultiGraph::new(6);
    for (u, v) in [(0, 3), (0, 4), (0, 5), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4)] {
        k33_minus.add_edge(u, v).unwrap();
    }
    let named = [
        ("K4", MultiGraph::complete(4), true),
        ("K5", MultiGraph::complete(5), false),
        ("K3,3", MultiGraph::complete_bipartite(3, 3), false),
        ("K3,3-e", k33_minus, true),
        ("Petersen", MultiGraph::petersen(), false),
    ];
    let mut failures: Vec<String> = named
        .iter()
        .filter(|(_, g, planar)| is_planar(g) != *planar)
        .map(|(name, _, planar)| format!("{name} should be planar={planar}"))
        .collect();
    let corpus = oracles::connected_graphs_up_to(6);
    let mut checked = 0;
    for (i, g) in corpus.iter().enumerate() {
        let planar = !oracles::has_kuratowski_subdivision(g);
        let sp = !oracles::has_k4_minor(g);
        for h in [g.clone(), oracles::with_multi_edges(g, i)] {
            checked += 1;
            if is_planar(&h) != planar {
                failures.push(format!("planarity wrong on {:?}", h.edges()));
            }
            if is_series_parallel(&h) != sp {
                failures.push(format!("series-parallel wrong on {:?}", h.edges()));
            }
        }
    }
    if failures.is_empty() {
        (true, format!("named graphs correct; {checked} corpus graphs agree with both oracles"))
    } else {
        (false, failures.join("; "))
    }
}

fn monte_carlo() -> Outcome {
    let start = Instant::now();
    let config = |n| ExperimentConfig { lambda: 0.0, n, trials: 400, seed: 42 };
    let report = run_experiment(&config(1_000_000)).unwrap();
    let planar = kernel_table(&ClassTag::Planar, 30).unwrap();
    let p_ref = class_probability(&planar, 0.0).unwrap().p;
    let empty_ref = (2.0f64 / 3.0).sqrt();
    let allowance = |p: f64| 4.0 * standard_error(p, report.trials) + 0.02;

    let planar_dev = (report.p_planar - p_ref).abs();
    let planar_ok = planar_dev <= allowance(p_ref);
    let empty_dev = (report.p_empty_kernel() - empty_ref).abs();
    let empty_ok = empty_dev <= allowance(empty_ref);
    let tv = report.tv_distance(&kernel_size_pmf(0.0, 30).unwrap());
    let tv_ok = tv < 0.03;

    let small = run_experiment(&config(10_000)).unwrap().p_noncubic;
    let mid = run_experiment(&config(100_000)).unwrap().p_noncubic;
    let noncubic = [small, mid, report.p_noncubic];
    let noncubic_ok = noncubic.iter().all(|&f| f < 0.05) && small >= mid && mid >= report.p_noncubic && report.p_noncubic < small;

    let pass = planar_ok && empty_ok && tv_ok && noncubic_ok;
    let detail = format!(
        "p_planar {:.4} vs {p_ref:.5} (dev {planar_dev:.4}); P(empty) {:.4} vs {empty_ref:.5} (dev {empty_dev:.4}); \
         TV {tv:.4}; non-cubic {small:.4}, {mid:.4}, {:.4}; {:.0} s",
        report.p_planar,
        report.p_empty_kernel(),
        report.p_noncubic,
        start.elapsed().as_secs_f64()
    );
    (pass, detail)
}

fn curve_shape() -> Outcome {
    let grid = parse_grid("-1:4:0.1").unwrap();
    let curve = |class| {
        let table: KernelWeightTable = kernel_table(&class, 30).unwrap();
        probability_curve(&table, &grid).unwrap().points
    };
    let planar = curve(ClassTag::Planar);
    let sp = curve(ClassTag::SeriesParallel);
    let decreasing = |pts: &[critical_planarity::probability::CurvePoint]| {
        pts.windows(2).all(|w| w[1].p < w[0].p)
    };
    let dominated = planar.iter().zip(&sp).all(|(a, b)| a.p >= b.p);
    let pass = grid.len() == 51 && decreasing(&planar) && decreasing(&sp) && dominated;
    (
        pass,
        format!(
            "{} points; planar {:.5} -> {:.3e}, sp {:.5} -> {:.3e}; decreasing {}/{}, planar >= sp {}",
            grid.len(),
            planar[0].p,
            planar[50].p,
            sp[0].p,
            sp[50].p,
            decreasing(&planar),
            decreasing(&sp),
            dominated
        ),
    )
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 13] = [
        ("exact coefficient goldens", coefficient_goldens),
        ("nonic residual", nonic_residual_vanishes),
        ("planarity discrepancy", planarity_discrepancy),
        ("pairing oracle", pairing_oracle_agrees),
        ("planar probability at zero", planar_at_zero),
        ("series-parallel probability at zero", sp_at_zero),
        ("extreme lambda brackets", extreme_lambda_brackets),
        ("normalization", normalization),
        ("zero-lambda identity", zero_lambda_identity),
        ("special functions", special_functions),
        ("planarity and series-parallel testers", graph_testers),
        ("Monte Carlo agreement", monte_carlo),
        ("curve shape", curve_shape),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let (pass, detail) = panic::catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            (false, format!("panicked: {msg}"))
        });
        if !pass {
            failed += 1;
        }
        println!("{} criterion {} ({name}): {detail}", if pass { "PASS" } else { "FAIL" }, i + 1);
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
