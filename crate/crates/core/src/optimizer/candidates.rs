use std::str::FromStr;

use crate::channel::{
    cascaded_channel, phase_shift_cophase, phase_shift_paper, ris_snr_db, ris_uav_channel,
    ue_ris_channel, PhaseConfig,
};
use crate::error::{Error, Result};
use crate::graph::{Graph, IncidenceVector};
use crate::scenario::Scenario;

/// How the RIS phases of a candidate link are chosen.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum PhaseMode {
    /// Closed-form shifts with the `π·fc/c` prefactor.
    #[default]
    Paper,
    /// Phases that align every cascaded summand.
    Cophase,
}

impl PhaseMode {
    pub fn name(self) -> &'static str {
        match self {
            PhaseMode::Paper => "paper",
            PhaseMode::Cophase => "cophase",
        }
    }
}

impl FromStr for PhaseMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "paper" => Ok(PhaseMode::Paper),
            "cophase" => Ok(PhaseMode::Cophase),
            other => Err(Error::config(format!("unknown phase mode {other:?}"))),
        }
    }
}

/// A reflected link UE `ue` → RIS → UAV `uav` (both zero-based).
#[derive(Debug, Clone, PartialEq)]
pub struct CandidateEdge {
    pub ue: usize,
    pub uav: usize,
    pub incidence: IncidenceVector,
    pub ris_snr_db: f64,
    pub phases: PhaseConfig,
}

/// Candidate links ordered by (UE, UAV).
///
/// Pairs that already share a direct edge are skipped, as are pairs whose
/// reflected SNR misses the RIS threshold or whose UE is farther than the
/// optional UE–RIS distance limit.
pub fn enumerate_candidates(
    sc: &Scenario,
    g: &Graph,
    ue_filter: Option<usize>,
    mode: PhaseMode,
) -> Result<Vec<CandidateEdge>> {
    let num_ue = sc.num_ue();
    if g.num_nodes() != sc.num_nodes() {
        return Err(Error::Dimension {
            expected: sc.num_nodes(),
            got: g.num_nodes(),
        });
    }
    if let Some(u) = ue_filter {
        if u >= num_ue {
            return Err(Error::config(format!(
                "UE index {} out of range 1..={num_ue}",
                u + 1
            )));
        }
    }
    let radio = &sc.radio;
    let ues = match ue_filter {
        Some(u) => u..u + 1,
        None => 0..num_ue,
    };

    let uav_channels = sc
        .uav_positions
        .iter()
        .map(|&uav| ris_uav_channel(uav, &sc.ris, radio))
        .collect::<Result<Vec<_>>>()?;

    let mut out = Vec::new();
    for u in ues {
        let ue = sc.ue_positions[u];
        let h_ur = ue_ris_channel(ue, &sc.ris, radio)?;
        if let Some(limit) = radio.ue_ris_max_distance {
            if h_ur.distance > limit {
                continue;
            }
        }
        for (a, h_ra) in uav_channels.iter().enumerate() {
            let node = sc.uav_node(a);
            if g.has_edge(u, node) {
                continue;
            }
            let phases = match mode {
                PhaseMode::Paper => phase_shift_paper(ue, sc.uav_positions[a], &sc.ris, radio)?,
                PhaseMode::Cophase => phase_shift_cophase(&h_ur, h_ra)?,
            };
            let snr = ris_snr_db(cascaded_channel(&h_ur, h_ra, &phases)?, radio);
            if snr >= radio.gamma0_ris_db {
                out.push(CandidateEdge {
                    ue: u,
                    uav: a,
                    incidence: IncidenceVector::new(u, node, g.num_nodes())?,
                    ris_snr_db: snr,
                    phases,
                });
            }
        }
    }
    Ok(out)
}
