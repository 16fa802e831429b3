//! Continuous relaxation of the multi-UE link choice.
//!
//! `f(z) = λ₂(L + Σ_l z_l a_l a_lᵀ)` is the minimum over unit vectors
//! `v ⊥ 1` of `vᵀL′(z)v`, a pointwise infimum of functions linear in `z`,
//! hence concave. With `v` the Fiedler vector at `z`, the vector
//! `g_l = (aᵀ_l v)² = (v_n − v_m)²` is a supergradient. The feasible set
//! `{1ᵀz = 1, 0 ≤ z ≤ 1}` is the probability simplex, so each step is a
//! Euclidean projection onto it.

use super::{CandidateEdge, OptimizationResult, Scheme};
use crate::error::{Error, Result};
use crate::graph::{fiedler, fiedler_fast, lambda2_of};
use crate::linalg::{eig_sym, Matrix};
use crate::scenario::SolverOptions;

/// A point of the simplex together with `λ₂(L′(z))`.
#[derive(Debug, Clone, PartialEq)]
pub struct AssociationVector {
    pub z: Vec<f64>,
    pub value: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RelaxationOutcome {
    /// Best iterate seen.
    pub best: AssociationVector,
    /// Number of objective evaluations.
    pub iterations: usize,
}

fn check_candidates(l: &Matrix, candidates: &[CandidateEdge]) -> Result<()> {
    if let Some(bad) = candidates.iter().find(|c| c.incidence.len != l.dim()) {
        return Err(Error::Dimension {
            expected: l.dim(),
            got: bad.incidence.len,
        });
    }
    Ok(())
}

/// `L′(z) = L + Σ_l z_l a_l a_lᵀ`.
pub fn laplacian_of_z(l: &Matrix, candidates: &[CandidateEdge], z: &[f64]) -> Result<Matrix> {
    if z.len() != candidates.len() {
        return Err(Error::Dimension {
            expected: candidates.len(),
            got: z.len(),
        });
    }
    check_candidates(l, candidates)?;
    let mut out = l.clone();
    for (c, &w) in candidates.iter().zip(z) {
        if w != 0.0 {
            c.incidence.add_outer_to(&mut out, w);
        }
    }
    Ok(out)
}

fn gradient_from(v: &[f64], candidates: &[CandidateEdge]) -> Vec<f64> {
    candidates
        .iter()
        .map(|c| (v[c.incidence.n] - v[c.incidence.m]).powi(2))
        .collect()
}

/// `g_l = (v_n − v_m)²` with `v` the unit Fiedler vector of `L′(z)`.
pub fn supergradient(l_of_z: &Matrix, candidates: &[CandidateEdge]) -> Result<Vec<f64>> {
    check_candidates(l_of_z, candidates)?;
    let (_, v) = fiedler(l_of_z)?;
    Ok(gradient_from(&v, candidates))
}

/// Euclidean projection onto `{z : Σz = 1, z ≥ 0}` by the sort-and-threshold
/// method.
pub fn project_simplex(y: &[f64]) -> Vec<f64> {
    if y.is_empty() {
        return Vec::new();
    }
    let mut sorted = y.to_vec();
    sorted.sort_by(|a, b| b.total_cmp(a));
    let mut cumulative = 0.0;
    let mut tau = 0.0;
    for (j, &u) in sorted.iter().enumerate() {
        cumulative += u;
        let candidate = (cumulative - 1.0) / (j + 1) as f64;
        if u - candidate > 0.0 {
            tau = candidate;
        }
    }
    y.iter().map(|&x| (x - tau).max(0.0)).collect()
}

pub fn solve_relaxation(
    l: &Matrix,
    candidates: &[CandidateEdge],
    opts: &SolverOptions,
) -> Result<RelaxationOutcome> {
    solve_relaxation_with(l, candidates, opts, |_, _, _| {})
}

/// Projected supergradient ascent from the uniform point.
///
/// Step t moves a distance `s·η₀/√t` along `g − ḡ1` normalized, the part of
/// the supergradient tangent to the simplex. Subtracting `ḡ1` does not change
/// the projection; the normalization keeps progress independent of the
/// Fiedler vector's scale, which shrinks like `1/√V`. A step that lowers λ₂
/// is discarded and halves `s`; an accepted one doubles it, capped at 1. This
/// avoids zig-zagging across narrow ridges where λ₂ is smooth.
///
/// `observe(t, z_t, best_value_so_far)` runs after each evaluation. The loop
/// ends after `max_iterations` evaluations or once the best value gained less
/// than `plateau_tol` over the last `plateau_window` iterations.
pub fn solve_relaxation_with<F>(
    l: &Matrix,
    candidates: &[CandidateEdge],
    opts: &SolverOptions,
    mut observe: F,
) -> Result<RelaxationOutcome>
where
    F: FnMut(usize, &[f64], f64),
{
    if candidates.is_empty() {
        return Err(Error::domain("relaxation needs at least one candidate"));
    }
    if !(opts.eta0 > 0.0) || opts.max_iterations == 0 {
        return Err(Error::config(
            "solver needs eta0 > 0 and max_iterations >= 1",
        ));
    }
    check_candidates(l, candidates)?;

    let k = candidates.len();
    let mut z = vec![1.0 / k as f64; k];
    if k == 1 {
        let value = lambda2_of(&laplacian_of_z(l, candidates, &z)?)?;
        observe(0, &z, value);
        return Ok(RelaxationOutcome {
            best: AssociationVector { z, value },
            iterations: 1,
        });
    }

    let (mut value, mut v) = fiedler_fast(&laplacian_of_z(l, candidates, &z)?)?;
    let mut best = AssociationVector {
        z: z.clone(),
        value,
    };
    observe(0, &z, value);
    let mut trace = vec![value];
    let mut scale = 1.0f64;
    for t in 1..opts.max_iterations {
        if t > opts.plateau_window
            && best.value - trace[t - 1 - opts.plateau_window] < opts.plateau_tol
        {
            break;
        }
        let g = gradient_from(&v, candidates);
        let mean = g.iter().sum::<f64>() / k as f64;
        let norm = g.iter().map(|gi| (gi - mean).powi(2)).sum::<f64>().sqrt();
        if norm == 0.0 {
            // gᵀd = 0 for every feasible direction d, so z is a maximizer
            break;
        }
        let step = scale * opts.eta0 / (t as f64).sqrt() / norm;
        let moved: Vec<f64> = z
            .iter()
            .zip(&g)
            .map(|(zi, gi)| zi + step * (gi - mean))
            .collect();
        let trial = project_simplex(&moved);
        let (trial_value, trial_v) = fiedler_fast(&laplacian_of_z(l, candidates, &trial)?)?;
        if trial_value > best.value {
            best = AssociationVector {
                z: trial.clone(),
                value: trial_value,
            };
        }
        observe(t, &trial, best.value);
        trace.push(best.value);
        if trial_value >= value {
            z = trial;
            value = trial_value;
            v = trial_v;
            scale = (2.0 * scale).min(1.0);
        } else {
            scale *= 0.5;
        }
    }
    let iterations = trace.len();
    Ok(RelaxationOutcome { best, iterations })
}

/// Whether `q(I − 11ᵀ/V) ⪯ L′(z)`, tested as
/// `λ_min(L′(z) − q(I − 11ᵀ/V)) ≥ −1e-9`.
///
/// Both sides annihilate `1`, so this holds exactly when `q ≤ λ₂(L′(z))`.
pub fn lmi_check(q: f64, l_of_z: &Matrix) -> Result<bool> {
    let n = l_of_z.dim();
    if n == 0 {
        return Ok(true);
    }
    let mut m = l_of_z.clone();
    let off = q / n as f64;
    for i in 0..n {
        for j in 0..n {
            m[(i, j)] += off;
        }
        m[(i, i)] -= q;
    }
    let eig = eig_sym(&m)?;
    Ok(eig.eigenvalues[0] >= -1e-9)
}

/// Index of the largest entry, lowest index on ties.
pub fn round_z(z: &[f64]) -> Option<usize> {
    let mut best: Option<usize> = None;
    for (i, &x) in z.iter().enumerate() {
        if best.is_none_or(|b| x > z[b]) {
            best = Some(i);
        }
    }
    best
}

/// Solves the relaxation, rounds it and reports λ₂ of the rounded choice.
/// An empty candidate list yields a no-op result.
pub fn sdp_scheme(
    l: &Matrix,
    candidates: &[CandidateEdge],
    opts: &SolverOptions,
) -> Result<OptimizationResult> {
    let before = lambda2_of(l)?;
    let mut result = OptimizationResult::noop(Scheme::Sdp, before);
    if candidates.is_empty() {
        return Ok(result);
    }
    let outcome = solve_relaxation(l, candidates, opts)?;
    let index = round_z(&outcome.best.z).expect("non-empty candidates");
    let chosen = &candidates[index];
    let mut updated = l.clone();
    chosen.incidence.add_outer_to(&mut updated, 1.0);
    result.lambda2_after = lambda2_of(&updated)?;
    result.chosen = Some(chosen.clone());
    result.chosen_index = Some(index);
    result.relaxation_value = Some(outcome.best.value);
    result.iterations = outcome.iterations;
    Ok(result)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::channel::PhaseConfig;
    use crate::graph::{laplacian, EdgeKind, Graph, IncidenceVector};

    fn edge(n: usize, m: usize, len: usize) -> CandidateEdge {
        CandidateEdge {
            ue: n,
            uav: m,
            incidence: IncidenceVector::new(n, m, len).unwrap(),
            ris_snr_db: 0.0,
            phases: PhaseConfig::zeros(1),
        }
    }

    fn path(n: usize) -> Graph {
        let mut g = Graph::new(n);
        for i in 0..n - 1 {
            g.add_edge(i, i + 1, EdgeKind::UavUav).unwrap();
        }
        g
    }

    #[test]
    fn unit_weight_adds_one_edge() {
        let l = laplacian(&path(3));
        let c = vec![edge(0, 2, 3), edge(0, 1, 3)];
        let got = laplacian_of_z(&l, &c, &[1.0, 0.0]).unwrap();
        let mut want = l.clone();
        want.add_edge_term(0, 2, 1.0);
        assert_eq!(got, want);
        assert_eq!(laplacian_of_z(&l, &c, &[0.0, 0.0]).unwrap(), l);
        assert!(laplacian_of_z(&l, &c, &[1.0]).is_err());
    }

    #[test]
    fn half_weights_keep_zero_row_sums() {
        let l = laplacian(&path(4));
        let c = vec![edge(0, 2, 4), edge(1, 3, 4)];
        let got = laplacian_of_z(&l, &c, &[0.5, 0.5]).unwrap();
        assert_eq!(got[(0, 2)], -0.5);
        assert_eq!(got[(1, 3)], -0.5);
        for i in 0..4 {
            assert!(got.row(i).iter().sum::<f64>().abs() < 1e-15);
        }
    }

    #[test]
    fn supergradient_on_path() {
        // Fiedler vector of P3 is (1/√2, 0, −1/√2)
        let l = laplacian(&path(3));
        let g = supergradient(&l, &[edge(0, 2, 3)]).unwrap();
        assert!((g[0] - 2.0).abs() < 1e-12);
    }

    #[test]
    fn supergradient_zero_for_twin_leaves() {
        // tree 0-1-2 with leaves 3 and 4 on node 2; λ₂ ≈ 0.5188 is simple and
        // its eigenvector is equal on the twins
        let mut g = Graph::new(5);
        for (a, b) in [(0, 1), (1, 2), (2, 3), (2, 4)] {
            g.add_edge(a, b, EdgeKind::UavUav).unwrap();
        }
        let sg = supergradient(&laplacian(&g), &[edge(3, 4, 5), edge(0, 4, 5)]).unwrap();
        assert!(sg[0] < 1e-20);
        assert!(sg[1] > 1.0);
    }

    #[test]
    fn projection_examples() {
        assert_eq!(project_simplex(&[0.25, 0.75]), vec![0.25, 0.75]);
        let p = project_simplex(&[0.5, 0.7]);
        assert!((p[0] - 0.4).abs() < 1e-15 && (p[1] - 0.6).abs() < 1e-15);
        assert_eq!(project_simplex(&[2.0, 0.0, 0.0]), vec![1.0, 0.0, 0.0]);
        assert!(project_simplex(&[]).is_empty());
    }

    #[test]
    fn single_candidate_is_fixed() {
        let l = laplacian(&path(3));
        let c = vec![edge(0, 2, 3)];
        let out = solve_relaxation(&l, &c, &SolverOptions::default()).unwrap();
        assert_eq!(out.best.z, vec![1.0]);
        assert!((out.best.value - 3.0).abs() < 1e-12);
    }

    #[test]
    fn empty_candidates_rejected() {
        let l = laplacian(&path(3));
        assert!(matches!(
            solve_relaxation(&l, &[], &SolverOptions::default()),
            Err(Error::Domain(_))
        ));
        assert!(sdp_scheme(&l, &[], &SolverOptions::default())
            .unwrap()
            .chosen
            .is_none());
    }

    #[test]
    fn two_candidates_match_grid_search() {
        // P5 with a chord from an end and a chord across the middle
        let l = laplacian(&path(5));
        let c = vec![edge(0, 2, 5), edge(1, 4, 5)];
        let out = solve_relaxation(&l, &c, &SolverOptions::default()).unwrap();
        let grid = (0..=1000)
            .map(|i| {
                let t = i as f64 / 1000.0;
                lambda2_of(&laplacian_of_z(&l, &c, &[t, 1.0 - t]).unwrap()).unwrap()
            })
            .fold(f64::NEG_INFINITY, f64::max);
        assert!(
            (out.best.value - grid).abs() < 1e-4,
            "{} vs {grid}",
            out.best.value
        );
    }

    #[test]
    fn lmi_boundary() {
        let l = laplacian(&path(4));
        let c = vec![edge(0, 3, 4), edge(0, 2, 4)];
        let lz = laplacian_of_z(&l, &c, &[0.3, 0.7]).unwrap();
        let l2 = lambda2_of(&lz).unwrap();
        assert!(lmi_check(0.0, &lz).unwrap());
        assert!(lmi_check(l2, &lz).unwrap());
        assert!(!lmi_check(l2 + 0.1, &lz).unwrap());
    }

    #[test]
    fn rounding() {
        assert_eq!(round_z(&[0.2, 0.5, 0.3]), Some(1));
        assert_eq!(round_z(&[0.0, 0.0, 1.0]), Some(2));
        assert_eq!(round_z(&[0.5, 0.5]), Some(0));
        assert_eq!(round_z(&[]), None);
    }
}
