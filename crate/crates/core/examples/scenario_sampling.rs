//! Samples a scenario from the default configuration and prints where
//! everything landed.
//!
//! ```text
//! cargo run --example scenario_sampling -- [seed]
//! ```

use ris_connect::scenario::{validate, ScenarioConfig};

fn main() -> ris_connect::Result<()> {
    let seed = std::env::args()
        .nth(1)
        .map(|s| s.parse().expect("seed must be an integer"))
        .unwrap_or(7);
    let config = ScenarioConfig {
        num_ue: 4,
        num_uav: 3,
        ..ScenarioConfig::default()
    };
    let sc = config.sample(seed)?;

    println!("seed {seed}: {} UEs, {} UAVs", sc.num_ue(), sc.num_uav());
    for (u, p) in sc.ue_positions.iter().enumerate() {
        println!("  UE {:>2}  ({:7.2}, {:7.2})", u + 1, p.x, p.y);
    }
    for (a, p) in sc.uav_positions.iter().enumerate() {
        println!("  UAV {:>2} ({:7.2}, {:7.2}, {:5.1})", a + 1, p.x, p.y, p.z);
    }
    let ris = &sc.ris;
    println!(
        "  RIS at ({}, {}, {}) with {}x{} elements",
        ris.position.x, ris.position.y, ris.position.z, ris.rows, ris.cols
    );

    // the same seed always gives the same scenario
    assert_eq!(config.sample(seed)?, sc);

    // validation reports every broken field at once
    let mut broken = sc.clone();
    broken.radio.path_loss_exponent = -1.0;
    broken.uav_positions[0].z = 0.0;
    for v in validate(&broken) {
        println!("  invalid {}: {}", v.field, v.rule);
    }
    Ok(())
}
