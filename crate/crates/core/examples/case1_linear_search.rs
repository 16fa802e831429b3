//! Single-UE link choice: try every reachable UAV through the RIS and keep
//! the one that maximizes λ₂, checked against the exhaustive oracle.
//!
//! ```text
//! cargo run --example case1_linear_search
//! ```

use ris_connect::graph::{build_graph, laplacian};
use ris_connect::optimizer::{
    case1_linear_search, enumerate_candidates, exhaustive_oracle, PhaseMode,
};
use ris_connect::scenario::ScenarioConfig;

fn main() -> ris_connect::Result<()> {
    let config = ScenarioConfig {
        num_ue: 1,
        num_uav: 6,
        gamma0_ris: 10.0,
        ..ScenarioConfig::default()
    };
    for seed in 0..5 {
        let sc = config.sample(seed)?;
        let g = build_graph(&sc)?;
        let candidates = enumerate_candidates(&sc, &g, Some(0), PhaseMode::Cophase)?;
        let linear = case1_linear_search(&sc, &g, &candidates)?;
        let oracle = exhaustive_oracle(&laplacian(&g), &candidates)?;
        assert_eq!(linear.chosen_index, oracle.chosen_index);

        let choice = match &linear.chosen {
            Some(c) => format!("UAV {} at {:.1} dB", c.uav + 1, c.ris_snr_db),
            None => "none".to_string(),
        };
        println!(
            "seed {seed}: {} candidates, pick {choice}, λ₂ {:.4} -> {:.4}",
            candidates.len(),
            linear.lambda2_before,
            linear.lambda2_after
        );
    }
    Ok(())
}
