//! Selection of the reflected UE → RIS → UAV link that maximizes λ₂.
//!
//! A candidate is a UE–UAV pair without a direct edge whose reflected SNR
//! meets the RIS threshold. Exactly one candidate is added per time slot.
//!
//! - One UE: [`case1_linear_search`] tries every reachable UAV.
//! - Many UEs: [`solve_relaxation`] maximizes the concave function
//!   `z ↦ λ₂(L + Σ_l z_l a_l a_lᵀ)` over the probability simplex by projected
//!   supergradient ascent, then [`round_z`] keeps the largest entry. The
//!   equivalent semidefinite form `max q s.t. q(I − 11ᵀ/V) ⪯ L′(z)` is checked
//!   through [`lmi_check`].
//! - Baselines: [`exhaustive_oracle`] and [`random_scheme`].

mod candidates;
mod relaxation;
mod search;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

pub use candidates::{enumerate_candidates, CandidateEdge, PhaseMode};
pub use relaxation::{
    laplacian_of_z, lmi_check, project_simplex, round_z, sdp_scheme, solve_relaxation,
    solve_relaxation_with, supergradient, AssociationVector, RelaxationOutcome,
};
pub use search::{case1_linear_search, exhaustive_oracle, original_scheme, random_scheme};

use crate::error::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Scheme {
    Original,
    Random,
    Linear,
    Sdp,
    Exhaustive,
}

impl Scheme {
    pub const ALL: [Scheme; 5] = [
        Scheme::Original,
        Scheme::Random,
        Scheme::Linear,
        Scheme::Sdp,
        Scheme::Exhaustive,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Scheme::Original => "original",
            Scheme::Random => "random",
            Scheme::Linear => "linear",
            Scheme::Sdp => "sdp",
            Scheme::Exhaustive => "exhaustive",
        }
    }

    /// Parses a comma-separated list such as `original,sdp`.
    pub fn parse_list(s: &str) -> Result<Vec<Scheme>, Error> {
        let schemes = s
            .split(',')
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(str::parse)
            .collect::<Result<Vec<_>, _>>()?;
        if schemes.is_empty() {
            return Err(Error::config("empty scheme list"));
        }
        Ok(schemes)
    }
}

impl fmt::Display for Scheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Scheme {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "original" => Ok(Scheme::Original),
            "random" => Ok(Scheme::Random),
            "linear" | "linear-search" => Ok(Scheme::Linear),
            "sdp" | "sdp-relaxation" => Ok(Scheme::Sdp),
            "exhaustive" | "optimal" => Ok(Scheme::Exhaustive),
            other => Err(Error::config(format!("unknown scheme {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct OptimizationResult {
    pub scheme: Scheme,
    pub chosen: Option<CandidateEdge>,
    /// Position of `chosen` in the candidate list it was picked from.
    pub chosen_index: Option<usize>,
    pub lambda2_before: f64,
    pub lambda2_after: f64,
    pub relaxation_value: Option<f64>,
    pub iterations: usize,
}

impl OptimizationResult {
    pub(crate) fn noop(scheme: Scheme, lambda2_before: f64) -> Self {
        OptimizationResult {
            scheme,
            chosen: None,
            chosen_index: None,
            lambda2_before,
            lambda2_after: lambda2_before,
            relaxation_value: None,
            iterations: 0,
        }
    }

    pub fn summary(&self) -> ResultSummary {
        ResultSummary {
            scheme: self.scheme,
            chosen_ue: self.chosen.as_ref().map(|c| c.ue + 1),
            chosen_uav: self.chosen.as_ref().map(|c| c.uav + 1),
            lambda2_before: self.lambda2_before,
            lambda2_after: self.lambda2_after,
            relaxation_value: self.relaxation_value,
            iterations: self.iterations,
        }
    }
}

/// Flat JSON view of an [`OptimizationResult`] with 1-based UE/UAV indices.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ResultSummary {
    pub scheme: Scheme,
    pub chosen_ue: Option<usize>,
    pub chosen_uav: Option<usize>,
    pub lambda2_before: f64,
    pub lambda2_after: f64,
    pub relaxation_value: Option<f64>,
    pub iterations: usize,
}
