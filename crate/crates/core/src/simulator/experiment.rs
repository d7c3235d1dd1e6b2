use std::collections::BTreeMap;
use std::io::{BufRead, Write};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::kernel::{kernel, two_core_mask};
use super::planarity::is_planar;
use super::sample::sample_gnm;
use super::series_parallel::is_series_parallel;
use super::{MultiGraph, SimulatorError};
use crate::probability::KernelSizePmf;

pub const MIN_EXPERIMENT_N: usize = 1000;
/// Graphs up to this size also get a full planarity test, compared with the
/// kernel's.
pub const FULL_CHECK_MAX_N: usize = 2000;

/// `round((n/2)(1 + lambda n^(-1/3)))`.
pub fn critical_edge_count(n: usize, lambda: f64) -> Result<usize, SimulatorError> {
    let nf = n as f64;
    let m = (nf / 2.0 * (1.0 + lambda * nf.powf(-1.0 / 3.0))).round();
    let pairs = nf * (nf - 1.0) / 2.0;
    if !(m >= 0.0 && m <= pairs) {
        return Err(SimulatorError::InvalidConfig(format!(
            "lambda = {lambda} gives {m} edges on {n} vertices"
        )));
    }
    Ok(m as usize)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TrialOutcome {
    pub kernel_vertex_count: usize,
    pub kernel_is_cubic: bool,
    pub is_planar: bool,
    pub is_sp: bool,
    pub tree_components: usize,
    pub unicyclic_components: usize,
    /// `edges - vertices` of the kernel.
    pub kernel_excess: i64,
}

/// Core, kernel, and class membership of one graph, with the bookkeeping
/// identity `m - n = -(trees) + kernel excess` checked exactly.
pub fn analyze_graph(g: &MultiGraph) -> Result<TrialOutcome, SimulatorError> {
    let core = g.induced(&two_core_mask(g));
    let dec = kernel(&core)?;

    let (comp, count) = g.components();
    let mut size = vec![(0i64, 0i64); count];
    for &c in &comp {
        size[c].1 += 1;
    }
    for &(u, _) in g.edges() {
        size[comp[u]].0 += 1;
    }
    let trees = size.iter().filter(|(e, v)| e - v == -1).count();
    let unicyclic = size.iter().filter(|(e, v)| e == v).count();
    let excess = dec.excess();
    let lhs = g.n_edges() as i64 - g.n_vertices() as i64;
    if lhs != excess - trees as i64 || unicyclic != dec.isolated_cycles {
        return Err(SimulatorError::InconsistentDecomposition(format!(
            "m - n = {lhs}, trees = {trees}, kernel excess = {excess}, \
             unicyclic = {unicyclic}, isolated cycles = {}",
            dec.isolated_cycles
        )));
    }

    let planar = is_planar(&dec.kernel);
    let sp = is_series_parallel(&dec.kernel);
    if sp && !planar {
        return Err(SimulatorError::InconsistentDecomposition(
            "series-parallel kernel reported non-planar".into(),
        ));
    }
    if g.n_vertices() <= FULL_CHECK_MAX_N && is_planar(g) != planar {
        return Err(SimulatorError::InconsistentDecomposition(
            "planarity of the graph differs from planarity of its kernel".into(),
        ));
    }
    Ok(TrialOutcome {
        kernel_vertex_count: dec.kernel.n_vertices(),
        kernel_is_cubic: dec.kernel.is_cubic(),
        is_planar: planar,
        is_sp: sp,
        tree_components: trees,
        unicyclic_components: unicyclic,
        kernel_excess: excess,
    })
}

pub fn run_trial<R: Rng + ?Sized>(n: usize, m: usize, rng: &mut R) -> Result<TrialOutcome, SimulatorError> {
    analyze_graph(&sample_gnm(n, m, rng)?)
}

/// The generator for trial `index`: seeded by `seed`, on stream `index`.
pub fn trial_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// Runs `trials` independent trials of `G(n, m)`, in parallel, returned in
/// trial order.
pub fn simulate_outcomes(
    n: usize,
    m: usize,
    trials: usize,
    seed: u64,
) -> Result<Vec<TrialOutcome>, SimulatorError> {
    (0..trials as u64)
        .into_par_iter()
        .map(|t| run_trial(n, m, &mut trial_rng(seed, t)))
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExperimentConfig {
    pub lambda: f64,
    pub n: usize,
    pub trials: usize,
    pub seed: u64,
}

pub fn run_experiment(config: &ExperimentConfig) -> Result<ExperimentReport, SimulatorError> {
    if config.n < MIN_EXPERIMENT_N {
        return Err(SimulatorError::InvalidConfig(format!(
            "n must be at least {MIN_EXPERIMENT_N}, got {}",
            config.n
        )));
    }
    if config.trials == 0 {
        return Err(SimulatorError::InvalidConfig("trials must be at least 1".into()));
    }
    if !config.lambda.is_finite() {
        return Err(SimulatorError::InvalidConfig("lambda must be finite".into()));
    }
    let m = critical_edge_count(config.n, config.lambda)?;
    let outcomes = simulate_outcomes(config.n, m, config.trials, config.seed)?;
    Ok(ExperimentReport::from_outcomes(config, m, &outcomes))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExperimentReport {
    pub n: usize,
    pub m: usize,
    pub lambda: f64,
    pub trials: usize,
    pub seed: u64,
    pub p_planar: f64,
    pub se_planar: f64,
    pub p_sp: f64,
    pub se_sp: f64,
    pub p_noncubic: f64,
    /// Number of trials by kernel vertex count.
    pub histogram: BTreeMap<usize, usize>,
}

/// Binomial standard error of a frequency `p` over `trials` draws.
pub fn standard_error(p: f64, trials: usize) -> f64 {
    (p * (1.0 - p) / trials as f64).sqrt()
}

impl ExperimentReport {
    pub fn from_outcomes(config: &ExperimentConfig, m: usize, outcomes: &[TrialOutcome]) -> Self {
        let trials = outcomes.len();
        let freq = |f: &dyn Fn(&TrialOutcome) -> bool| {
            outcomes.iter().filter(|o| f(o)).count() as f64 / trials as f64
        };
        let p_planar = freq(&|o| o.is_planar);
        let p_sp = freq(&|o| o.is_sp);
        let mut histogram = BTreeMap::new();
        for o in outcomes {
            *histogram.entry(o.kernel_vertex_count).or_insert(0) += 1;
        }
        Self {
            n: config.n,
            m,
            lambda: config.lambda,
            trials,
            seed: config.seed,
            p_planar,
            se_planar: standard_error(p_planar, trials),
            p_sp,
            se_sp: standard_error(p_sp, trials),
            p_noncubic: freq(&|o| !o.kernel_is_cubic),
            histogram,
        }
    }

    /// Fraction of trials whose kernel is empty.
    pub fn p_empty_kernel(&self) -> f64 {
        self.histogram.get(&0).copied().unwrap_or(0) as f64 / self.trials as f64
    }

    /// Total-variation distance between the observed kernel sizes and `pmf`,
    /// over `r = 0..=pmf.r_max()`; kernels with an odd vertex count or more
    /// than `2 r_max` vertices count as pure discrepancy.
    pub fn tv_distance(&self, pmf: &KernelSizePmf) -> f64 {
        let total = self.trials as f64;
        let mut matched = 0.0;
        let mut diff = 0.0;
        for (r, &p) in pmf.entries.iter().enumerate() {
            let emp = self.histogram.get(&(2 * r)).copied().unwrap_or(0) as f64 / total;
            matched += emp;
            diff += (emp - p).abs();
        }
        0.5 * (diff + (1.0 - matched).max(0.0))
    }

    /// Largest `r` with an observed kernel of `2r` vertices.
    pub fn max_observed_r(&self) -> usize {
        self.histogram.keys().copied().max().unwrap_or(0) / 2
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, SimulatorError> {
        serde_json::from_str(text).map_err(|e| SimulatorError::Format(e.to_string()))
    }

    pub fn write_csv<W: Write>(&self, mut out: W) -> std::io::Result<()> {
        writeln!(out, "metric,value")?;
        writeln!(out, "n,{}", self.n)?;
        writeln!(out, "m,{}", self.m)?;
        writeln!(out, "lambda,{}", self.lambda)?;
        writeln!(out, "trials,{}", self.trials)?;
        writeln!(out, "seed,{}", self.seed)?;
        writeln!(out, "p_planar,{}", self.p_planar)?;
        writeln!(out, "se_planar,{}", self.se_planar)?;
        writeln!(out, "p_sp,{}", self.p_sp)?;
        writeln!(out, "se_sp,{}", self.se_sp)?;
        writeln!(out, "p_noncubic,{}", self.p_noncubic)?;
        for (k, c) in &self.histogram {
            writeln!(out, "histogram_{k},{c}")?;
        }
        Ok(())
    }

    pub fn to_csv_string(&self) -> String {
        let mut buf = Vec::new();
        self.write_csv(&mut buf).expect("writing to a Vec");
        String::from_utf8(buf).expect("ascii")
    }

    pub fn read_csv<R: BufRead>(input: R) -> Result<Self, SimulatorError> {
        let mut fields = BTreeMap::new();
        let mut histogram = BTreeMap::new();
        for (i, line) in input.lines().enumerate() {
            let line = line.map_err(|e| SimulatorError::Format(e.to_string()))?;
            let bad = |why: &str| SimulatorError::Format(format!("line {}: {why}", i + 1));
            if i == 0 {
                if line.trim() != "metric,value" {
                    return Err(bad("expected header metric,value"));
                }
                continue;
            }
            if line.trim().is_empty() {
                continue;
            }
            let (key, value) = line.split_once(',').ok_or_else(|| bad("expected two fields"))?;
            if let Some(k) = key.strip_prefix("histogram_") {
                let k = k.parse().map_err(|_| bad("bad histogram key"))?;
                let c = value.parse().map_err(|_| bad("bad histogram count"))?;
                histogram.insert(k, c);
            } else {
                fields.insert(key.to_string(), value.to_string());
            }
        }
        fn get<T: std::str::FromStr>(f: &BTreeMap<String, String>, key: &str) -> Result<T, SimulatorError> {
            f.get(key)
                .ok_or_else(|| SimulatorError::Format(format!("missing metric {key}")))?
                .parse()
                .map_err(|_| SimulatorError::Format(format!("bad value for {key}")))
        }
        Ok(Self {
            n: get(&fields, "n")?,
            m: get(&fields, "m")?,
            lambda: get(&fields, "lambda")?,
            trials: get(&fields, "trials")?,
            seed: get(&fields, "seed")?,
            p_planar: get(&fields, "p_planar")?,
            se_planar: get(&fields, "se_planar")?,
            p_sp: get(&fields, "p_sp")?,
            se_sp: get(&fields, "se_sp")?,
            p_noncubic: get(&fields, "p_noncubic")?,
            histogram,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_count_in_window() {
        assert_eq!(critical_edge_count(1_000_000, 0.0).unwrap(), 500_000);
        assert_eq!(critical_edge_count(1000, 1.0).unwrap(), 550);
        assert!(critical_edge_count(1000, -20.0).is_err());
    }

    #[test]
    fn reports_are_deterministic_and_round_trip() {
        let config = ExperimentConfig {
            lambda: 0.0,
            n: 2000,
            trials: 20,
            seed: 7,
        };
        let a = run_experiment(&config).unwrap();
        let b = run_experiment(&config).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.histogram.values().sum::<usize>(), 20);
        assert!(a.p_sp <= a.p_planar);
        assert_eq!(ExperimentReport::from_json(&a.to_json()).unwrap(), a);
        assert_eq!(ExperimentReport::read_csv(a.to_csv_string().as_bytes()).unwrap(), a);
        let json: serde_json::Value = serde_json::from_str(&a.to_json()).unwrap();
        let keys: Vec<&str> = json.as_object().unwrap().keys().map(|k| k.as_str()).collect();
        assert_eq!(keys.len(), 11);
        for k in ["n", "m", "lambda", "trials", "seed", "p_planar", "se_planar", "p_sp", "se_sp", "p_noncubic", "histogram"] {
            assert!(keys.contains(&k), "{k}");
        }
    }

    #[test]
    fn small_config_rejected() {
        let config = ExperimentConfig {
            lambda: 0.0,
            n: 500,
            trials: 1,
            seed: 0,
        };
        assert!(matches!(run_experiment(&config), Err(SimulatorError::InvalidConfig(_))));
    }

    #[test]
    fn decomposition_of_known_graph() {
        // K4 plus a triangle plus a path
        let g = MultiGraph::from_edges(
            10,
            [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (4, 5), (5, 6), (6, 4), (7, 8)],
        )
        .unwrap();
        let o = analyze_graph(&g).unwrap();
        assert_eq!(o.kernel_vertex_count, 4);
        assert!(o.kernel_is_cubic && o.is_planar && !o.is_sp);
        assert_eq!((o.tree_components, o.unicyclic_components, o.kernel_excess), (2, 1, 2));
    }
}
