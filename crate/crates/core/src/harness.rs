//! Monte Carlo instances and parameter sweeps.
//!
//! Every sweep cell (swept value × iteration) draws its own scenario seed
//! from the master seed with a splitmix64 chain:
//!
//! ```text
//! child = mix(mix(mix(seed) ^ value_index) ^ iteration)
//! ```
//!
//! so cells are reproducible on their own and adding iterations to one value
//! leaves every other cell untouched.

use std::fmt;
use std::io::Write;
use std::path::Path;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{build_graph, lambda2_of, laplacian, Graph};
use crate::linalg::Matrix;
use crate::optimizer::{
    case1_linear_search, enumerate_candidates, exhaustive_oracle, original_scheme, random_scheme,
    sdp_scheme, CandidateEdge, OptimizationResult, PhaseMode, Scheme,
};
use crate::scenario::{ensure_valid, Scenario, ScenarioConfig, SolverOptions};

/// splitmix64 output function.
pub fn mix(x: u64) -> u64 {
    let mut z = x.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

pub fn child_seed(seed: u64, value_index: u64, iteration: u64) -> u64 {
    mix(mix(mix(seed) ^ value_index) ^ iteration)
}

/// Seed of the random baseline for a scenario.
fn random_scheme_seed(scenario_seed: u64) -> u64 {
    mix(scenario_seed ^ 0x5241_4E44_4F4D)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RunOptions {
    pub phase_mode: PhaseMode,
    pub solver: SolverOptions,
    /// UE searched by the `linear` scheme (zero-based).
    pub linear_ue: usize,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions {
            phase_mode: PhaseMode::Paper,
            solver: SolverOptions::default(),
            linear_ue: 0,
        }
    }
}

#[derive(Debug, Clone)]
pub struct InstanceOutcome {
    pub results: Vec<OptimizationResult>,
    pub num_candidates: usize,
    pub num_edges: usize,
}

impl InstanceOutcome {
    pub fn lambda2(&self, scheme: Scheme) -> Option<f64> {
        self.results
            .iter()
            .find(|r| r.scheme == scheme)
            .map(|r| r.lambda2_after)
    }

    pub fn is_noop(&self) -> bool {
        self.num_candidates == 0
    }
}

/// Builds the graph and the candidate list once and evaluates every scheme on
/// them. `original` reports λ₂ without any reflected link.
pub fn run_instance(
    sc: &Scenario,
    schemes: &[Scheme],
    opts: &RunOptions,
) -> Result<InstanceOutcome> {
    let g = build_graph(sc)?;
    let l = laplacian(&g);
    let candidates = enumerate_candidates(sc, &g, None, opts.phase_mode)?;

    let mut results = Vec::with_capacity(schemes.len());
    for &scheme in schemes {
        results.push(run_scheme(sc, &g, &l, &candidates, scheme, opts)?);
    }
    Ok(InstanceOutcome {
        results,
        num_candidates: candidates.len(),
        num_edges: g.num_edges(),
    })
}

/// One scheme on one instance.
///
/// `base` replaces the geometric graph when given (it must have `U + A`
/// nodes). With `ue` set only that UE's reflected links are considered, which
/// is the single-UE setting of the linear search.
pub fn solve(
    sc: &Scenario,
    base: Option<&Graph>,
    scheme: Scheme,
    ue: Option<usize>,
    opts: &RunOptions,
) -> Result<OptimizationResult> {
    ensure_valid(sc)?;
    let g = match base {
        Some(g) if g.num_nodes() != sc.num_nodes() => {
            return Err(Error::config(format!(
                "graph has {} nodes but the scenario has {}",
                g.num_nodes(),
                sc.num_nodes()
            )))
        }
        Some(g) => g.clone(),
        None => build_graph(sc)?,
    };
    let l = laplacian(&g);
    let candidates = enumerate_candidates(sc, &g, ue, opts.phase_mode)?;
    let opts = RunOptions {
        linear_ue: ue.unwrap_or(opts.linear_ue),
        ..*opts
    };
    run_scheme(sc, &g, &l, &candidates, scheme, &opts)
}

fn run_scheme(
    sc: &Scenario,
    g: &Graph,
    l: &Matrix,
    candidates: &[CandidateEdge],
    scheme: Scheme,
    opts: &RunOptions,
) -> Result<OptimizationResult> {
    match scheme {
        Scheme::Original => original_scheme(l),
        Scheme::Random => random_scheme(l, candidates, random_scheme_seed(sc.seed)),
        Scheme::Exhaustive => exhaustive_oracle(l, candidates),
        Scheme::Sdp => sdp_scheme(l, candidates, &opts.solver),
        Scheme::Linear => {
            if opts.linear_ue >= sc.num_ue() {
                return Err(Error::config(format!(
                    "linear scheme UE {} out of range 1..={}",
                    opts.linear_ue + 1,
                    sc.num_ue()
                )));
            }
            let own: Vec<_> = candidates
                .iter()
                .filter(|c| c.ue == opts.linear_ue)
                .cloned()
                .collect();
            case1_linear_search(sc, g, &own)
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SweptParameter {
    NumUav,
    NumUe,
    Gamma0Ris,
}

impl SweptParameter {
    pub fn name(self) -> &'static str {
        match self {
            SweptParameter::NumUav => "num_uav",
            SweptParameter::NumUe => "num_ue",
            SweptParameter::Gamma0Ris => "gamma0_ris",
        }
    }

    /// Values swept when none are given: A ∈ 2..=12, U ∈ 2..=14 and
    /// γ₀ ∈ {0, 5, …, 35} dB.
    pub fn default_values(self) -> Vec<f64> {
        match self {
            SweptParameter::NumUav => (2..=12).map(f64::from).collect(),
            SweptParameter::NumUe => (2..=14).map(f64::from).collect(),
            SweptParameter::Gamma0Ris => (0..=7).map(|k| 5.0 * f64::from(k)).collect(),
        }
    }

    fn apply(self, base: &ScenarioConfig, value: f64) -> Result<ScenarioConfig> {
        let mut cfg = base.clone();
        let count = || {
            if value >= 1.0 && value.fract() == 0.0 && value.is_finite() {
                Ok(value as usize)
            } else {
                Err(Error::config(format!(
                    "{} needs a positive integer, got {value}",
                    self.name()
                )))
            }
        };
        match self {
            SweptParameter::NumUav => cfg.num_uav = count()?,
            SweptParameter::NumUe => cfg.num_ue = count()?,
            SweptParameter::Gamma0Ris => cfg.gamma0_ris = value,
        }
        Ok(cfg)
    }
}

impl fmt::Display for SweptParameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SweptParameter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "num_uav" => Ok(SweptParameter::NumUav),
            "num_ue" => Ok(SweptParameter::NumUe),
            "gamma0_ris" => Ok(SweptParameter::Gamma0Ris),
            other => Err(Error::config(format!("unknown swept parameter {other:?}"))),
        }
    }
}

#[derive(Debug, Clone)]
pub struct SweepSpec {
    pub parameter: SweptParameter,
    /// Ascending.
    pub values: Vec<f64>,
    pub iterations: usize,
    pub schemes: Vec<Scheme>,
    pub base: ScenarioConfig,
    pub seed: u64,
    pub options: RunOptions,
}

impl SweepSpec {
    /// 500 iterations of every scheme over the default values, with solver
    /// settings taken from `base`.
    pub fn new(parameter: SweptParameter, base: ScenarioConfig) -> Self {
        let options = RunOptions {
            solver: base.solver,
            ..RunOptions::default()
        };
        SweepSpec {
            parameter,
            values: parameter.default_values(),
            iterations: 500,
            schemes: Scheme::ALL.to_vec(),
            seed: base.seed,
            base,
            options,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.iterations == 0 {
            return Err(Error::config("iterations must be at least 1"));
        }
        if self.values.is_empty() {
            return Err(Error::config("no swept values"));
        }
        if self.values.windows(2).any(|w| !(w[0] < w[1])) {
            return Err(Error::config("swept values must be strictly ascending"));
        }
        if self.schemes.is_empty() {
            return Err(Error::config("no schemes selected"));
        }
        for &v in &self.values {
            self.parameter.apply(&self.base, v)?;
        }
        Ok(())
    }
}

/// Aggregate over the iterations of one (value, scheme) cell.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepRecord {
    pub scheme: Scheme,
    pub parameter: SweptParameter,
    pub value: f64,
    pub mean_lambda2: f64,
    pub std_lambda2: f64,
    pub iterations: usize,
    /// Share of iterations without any candidate link.
    pub fraction_noop: f64,
}

/// Neumaier-compensated sum.
fn compensated_sum(xs: impl IntoIterator<Item = f64>) -> f64 {
    let mut sum = 0.0f64;
    let mut comp = 0.0f64;
    for x in xs {
        let t = sum + x;
        if sum.abs() >= x.abs() {
            comp += (sum - t) + x;
        } else {
            comp += (x - t) + sum;
        }
        sum = t;
    }
    sum + comp
}

/// Mean and population standard deviation.
fn mean_std(xs: &[f64]) -> (f64, f64) {
    let n = xs.len() as f64;
    let mean = compensated_sum(xs.iter().copied()) / n;
    let var = compensated_sum(xs.iter().map(|x| (x - mean).powi(2))) / n;
    (mean, var.max(0.0).sqrt())
}

pub fn run_sweep(spec: &SweepSpec) -> Result<Vec<SweepRecord>> {
    spec.validate()?;
    let mut records = Vec::with_capacity(spec.values.len() * spec.schemes.len());
    for (vi, &value) in spec.values.iter().enumerate() {
        let cfg = spec.parameter.apply(&spec.base, value)?;
        let mut samples = vec![Vec::with_capacity(spec.iterations); spec.schemes.len()];
        let mut noop = 0usize;
        for it in 0..spec.iterations {
            let sc = cfg.sample(child_seed(spec.seed, vi as u64, it as u64))?;
            let outcome = run_instance(&sc, &spec.schemes, &spec.options)?;
            if outcome.is_noop() {
                noop += 1;
            }
            for (slot, r) in samples.iter_mut().zip(&outcome.results) {
                slot.push(r.lambda2_after);
            }
        }
        for (&scheme, xs) in spec.schemes.iter().zip(&samples) {
            let (mean, std) = mean_std(xs);
            records.push(SweepRecord {
                scheme,
                parameter: spec.parameter,
                value,
                mean_lambda2: mean,
                std_lambda2: std,
                iterations: spec.iterations,
                fraction_noop: noop as f64 / spec.iterations as f64,
            });
        }
    }
    Ok(records)
}

pub const CSV_HEADER: &str =
    "scheme,swept_parameter,swept_value,mean_lambda2,std_lambda2,iterations,fraction_noop";

/// Plain decimal with 9 significant digits.
pub fn format_sig9(x: f64) -> String {
    if !x.is_finite() {
        return x.to_string();
    }
    if x == 0.0 {
        return "0.00000000".to_string();
    }
    let exponent = x.abs().log10().floor() as i32;
    let decimals = (8 - exponent).max(0) as usize;
    format!("{x:.decimals$}")
}

pub fn write_csv<W: Write>(records: &[SweepRecord], mut out: W) -> std::io::Result<()> {
    writeln!(out, "{CSV_HEADER}")?;
    for r in records {
        writeln!(
            out,
            "{},{},{},{},{},{},{}",
            r.scheme,
            r.parameter,
            format_sig9(r.value),
            format_sig9(r.mean_lambda2),
            format_sig9(r.std_lambda2),
            r.iterations,
            format_sig9(r.fraction_noop)
        )?;
    }
    Ok(())
}

pub fn emit_csv(records: &[SweepRecord], path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    let file = std::fs::File::create(path).map_err(|e| Error::io(path, e))?;
    let mut out = std::io::BufWriter::new(file);
    write_csv(records, &mut out).map_err(|e| Error::io(path, e))?;
    out.flush().map_err(|e| Error::io(path, e))
}

/// JSON view of one instance, as printed by the `simulate` command.
#[derive(Debug, Clone, Serialize)]
pub struct InstanceReport {
    pub seed: u64,
    pub num_ue: usize,
    pub num_uav: usize,
    pub num_edges: usize,
    pub num_candidates: usize,
    pub lambda2_original: f64,
    pub results: Vec<crate::optimizer::ResultSummary>,
}

pub fn instance_report(
    sc: &Scenario,
    schemes: &[Scheme],
    opts: &RunOptions,
) -> Result<InstanceReport> {
    let outcome = run_instance(sc, schemes, opts)?;
    let g = build_graph(sc)?;
    Ok(InstanceReport {
        seed: sc.seed,
        num_ue: sc.num_ue(),
        num_uav: sc.num_uav(),
        num_edges: outcome.num_edges,
        num_candidates: outcome.num_candidates,
        lambda2_original: lambda2_of(&laplacian(&g))?,
        results: outcome
            .results
            .iter()
            .map(OptimizationResult::summary)
            .collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small_base() -> ScenarioConfig {
        ScenarioConfig {
            num_ue: 3,
            num_uav: 4,
            gamma0_ris: 0.0,
            ..ScenarioConfig::default()
        }
    }

    #[test]
    fn seeds_are_distinct_and_stable() {
        assert_eq!(child_seed(1, 2, 3), child_seed(1, 2, 3));
        assert_ne!(child_seed(1, 2, 3), child_seed(1, 3, 2));
        assert_ne!(child_seed(1, 0, 0), child_seed(2, 0, 0));
        // reference splitmix64 output for state 0
        assert_eq!(mix(0), 0xE220_A839_7B1D_CDAF);
    }

    #[test]
    fn original_only() {
        let sc = small_base().sample(5).unwrap();
        let out = run_instance(&sc, &[Scheme::Original], &RunOptions::default()).unwrap();
        let g = build_graph(&sc).unwrap();
        assert_eq!(
            out.lambda2(Scheme::Original),
            Some(lambda2_of(&laplacian(&g)).unwrap())
        );
    }

    #[test]
    fn empty_candidates_collapse_to_original() {
        let cfg = ScenarioConfig {
            gamma0_ris: f64::INFINITY,
            ..small_base()
        };
        let sc = cfg.sample(11).unwrap();
        let out = run_instance(&sc, &Scheme::ALL, &RunOptions::default()).unwrap();
        assert!(out.is_noop());
        let base = out.lambda2(Scheme::Original).unwrap();
        for s in Scheme::ALL {
            assert_eq!(out.lambda2(s), Some(base));
        }
    }

    #[test]
    fn dominance_per_instance() {
        for seed in 0..20 {
            let sc = small_base().sample(seed).unwrap();
            let out = run_instance(&sc, &Scheme::ALL, &RunOptions::default()).unwrap();
            let v = |s| out.lambda2(s).unwrap();
            let tol = 1e-12;
            assert!(v(Scheme::Exhaustive) + tol >= v(Scheme::Sdp));
            assert!(v(Scheme::Exhaustive) + tol >= v(Scheme::Random));
            assert!(v(Scheme::Exhaustive) + tol >= v(Scheme::Linear));
            for s in [Scheme::Sdp, Scheme::Random, Scheme::Linear] {
                assert!(v(s) + tol >= v(Scheme::Original));
            }
        }
    }

    #[test]
    fn linear_ue_out_of_range() {
        let sc = small_base().sample(1).unwrap();
        let opts = RunOptions {
            linear_ue: 3,
            ..RunOptions::default()
        };
        assert!(matches!(
            run_instance(&sc, &[Scheme::Linear], &opts),
            Err(Error::Config(_))
        ));
    }

    #[test]
    fn single_iteration_has_zero_std() {
        let mut spec = SweepSpec::new(SweptParameter::NumUav, small_base());
        spec.values = vec![3.0, 5.0];
        spec.iterations = 1;
        let records = run_sweep(&spec).unwrap();
        assert_eq!(records.len(), 2 * Scheme::ALL.len());
        assert!(records.iter().all(|r| r.std_lambda2 == 0.0));
        assert!(records
            .iter()
            .all(|r| (0.0..=1.0).contains(&r.fraction_noop)));
    }

    #[test]
    fn spec_validation() {
        let mut spec = SweepSpec::new(SweptParameter::NumUe, small_base());
        spec.values = vec![3.0, 2.0];
        assert!(spec.validate().is_err());
        spec.values = vec![2.5];
        assert!(spec.validate().is_err());
        spec.values = vec![2.0];
        spec.iterations = 0;
        assert!(spec.validate().is_err());
        spec.iterations = 1;
        assert!(spec.validate().is_ok());
    }

    #[test]
    fn cells_do_not_depend_on_each_other() {
        let mut spec = SweepSpec::new(SweptParameter::Gamma0Ris, small_base());
        spec.values = vec![0.0, 10.0];
        spec.iterations = 3;
        spec.schemes = vec![Scheme::Original, Scheme::Exhaustive];
        let both = run_sweep(&spec).unwrap();
        spec.values = vec![0.0];
        let first = run_sweep(&spec).unwrap();
        assert_eq!(&both[..2], &first[..]);
    }

    #[test]
    fn number_format() {
        assert_eq!(format_sig9(0.0), "0.00000000");
        assert_eq!(format_sig9(1.0), "1.00000000");
        assert_eq!(format_sig9(12.5), "12.5000000");
        assert_eq!(format_sig9(0.000123456789123), "0.000123456789");
        assert_eq!(format_sig9(1234567890.4), "1234567890");
        assert_eq!(format_sig9(-0.5), "-0.500000000");
    }

    #[test]
    fn csv_shapes() {
        let mut buf = Vec::new();
        write_csv(&[], &mut buf).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap(), format!("{CSV_HEADER}\n"));

        let record = SweepRecord {
            scheme: Scheme::Sdp,
            parameter: SweptParameter::NumUav,
            value: 7.0,
            mean_lambda2: 0.25,
            std_lambda2: 0.125,
            iterations: 500,
            fraction_noop: 0.1,
        };
        let mut buf = Vec::new();
        write_csv(&[record], &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 2);
        assert_eq!(
            lines[1],
            "sdp,num_uav,7.00000000,0.250000000,0.125000000,500,0.100000000"
        );
    }

    #[test]
    fn csv_io_error_names_path() {
        let err = emit_csv(&[], "/nonexistent-dir/out.csv").unwrap_err();
        assert!(matches!(err, Error::Io { .. }));
        assert!(err.to_string().contains("/nonexistent-dir/out.csv"));
    }

    #[test]
    fn solve_matches_instance_run() {
        let sc = small_base().sample(11).unwrap();
        let opts = RunOptions {
            phase_mode: PhaseMode::Cophase,
            ..RunOptions::default()
        };
        let out = run_instance(&sc, &Scheme::ALL, &opts).unwrap();
        for (i, &scheme) in Scheme::ALL.iter().enumerate() {
            assert_eq!(
                solve(&sc, None, scheme, None, &opts).unwrap(),
                out.results[i]
            );
        }
        let g = build_graph(&sc).unwrap();
        let same = solve(&sc, Some(&g), Scheme::Exhaustive, None, &opts).unwrap();
        assert_eq!(same, out.results[Scheme::ALL.len() - 1]);
        assert!(solve(&sc, Some(&Graph::new(2)), Scheme::Original, None, &opts).is_err());

        let single = solve(&sc, None, Scheme::Exhaustive, Some(1), &opts).unwrap();
        assert!(single.chosen.as_ref().is_none_or(|c| c.ue == 1));
        let linear = solve(&sc, None, Scheme::Linear, Some(1), &opts).unwrap();
        assert_eq!(linear.chosen_index, single.chosen_index);
        assert_eq!(linear.lambda2_after, single.lambda2_after);
    }
}
