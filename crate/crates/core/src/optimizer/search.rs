use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{CandidateEdge, OptimizationResult, Scheme};
use crate::error::{Error, Result};
use crate::graph::{lambda2, lambda2_of, EdgeKind, Graph};
use crate::linalg::Matrix;
use crate::scenario::Scenario;

fn check_dims(l: &Matrix, candidates: &[CandidateEdge]) -> Result<()> {
    for c in candidates {
        if c.incidence.len != l.dim() {
            return Err(Error::Dimension {
                expected: l.dim(),
                got: c.incidence.len,
            });
        }
    }
    Ok(())
}

/// λ₂ of the graph without any reflected link.
pub fn original_scheme(l: &Matrix) -> Result<OptimizationResult> {
    Ok(OptimizationResult::noop(Scheme::Original, lambda2_of(l)?))
}

/// Single-UE search: for every reachable UAV, build `G′ = (V, E ∪ {e})` and
/// keep the UAV with the largest λ₂(G′). Ties go to the lowest UAV index.
pub fn case1_linear_search(
    sc: &Scenario,
    g: &Graph,
    candidates: &[CandidateEdge],
) -> Result<OptimizationResult> {
    if g.num_nodes() != sc.num_nodes() {
        return Err(Error::Dimension {
            expected: sc.num_nodes(),
            got: g.num_nodes(),
        });
    }
    if let Some(first) = candidates.first() {
        if candidates.iter().any(|c| c.ue != first.ue) {
            return Err(Error::domain(
                "linear search expects the candidates of a single UE",
            ));
        }
    }
    let before = lambda2(g)?.0;
    let mut result = OptimizationResult::noop(Scheme::Linear, before);
    for (index, c) in candidates.iter().enumerate() {
        let extended = g.with_edge(c.incidence.n, c.incidence.m, EdgeKind::Ris)?;
        let value = lambda2(&extended)?.0;
        result.iterations += 1;
        if result.chosen.is_none() || value > result.lambda2_after {
            result.chosen = Some(c.clone());
            result.chosen_index = Some(index);
            result.lambda2_after = value;
        }
    }
    Ok(result)
}

/// Evaluates `λ₂(L + a_l a_lᵀ)` for every candidate and keeps the best
/// (lowest index on ties).
pub fn exhaustive_oracle(l: &Matrix, candidates: &[CandidateEdge]) -> Result<OptimizationResult> {
    check_dims(l, candidates)?;
    let mut result = OptimizationResult::noop(Scheme::Exhaustive, lambda2_of(l)?);
    for (index, c) in candidates.iter().enumerate() {
        let mut updated = l.clone();
        c.incidence.add_outer_to(&mut updated, 1.0);
        let value = lambda2_of(&updated)?;
        result.iterations += 1;
        if result.chosen.is_none() || value > result.lambda2_after {
            result.chosen = Some(c.clone());
            result.chosen_index = Some(index);
            result.lambda2_after = value;
        }
    }
    Ok(result)
}

/// Adds one candidate picked uniformly at random with a seeded `ChaCha8Rng`.
pub fn random_scheme(
    l: &Matrix,
    candidates: &[CandidateEdge],
    seed: u64,
) -> Result<OptimizationResult> {
    check_dims(l, candidates)?;
    let before = lambda2_of(l)?;
    let mut result = OptimizationResult::noop(Scheme::Random, before);
    if candidates.is_empty() {
        return Ok(result);
    }
    let index = ChaCha8Rng::seed_from_u64(seed).gen_range(0..candidates.len());
    let chosen = &candidates[index];
    let mut updated = l.clone();
    chosen.incidence.add_outer_to(&mut updated, 1.0);
    result.lambda2_after = lambda2_of(&updated)?;
    result.chosen = Some(chosen.clone());
    result.chosen_index = Some(index);
    result.iterations = 1;
    Ok(result)
}
