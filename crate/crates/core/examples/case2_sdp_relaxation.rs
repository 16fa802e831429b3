//! Multi-UE link choice through the continuous relaxation: solve it, check
//! the certificate, round, and compare with the exhaustive optimum and a
//! random pick.
//!
//! ```text
//! cargo run --release --example case2_sdp_relaxation
//! ```

use ris_connect::graph::{build_graph, laplacian};
use ris_connect::optimizer::{
    enumerate_candidates, exhaustive_oracle, laplacian_of_z, lmi_check, random_scheme, round_z,
    solve_relaxation_with, PhaseMode,
};
use ris_connect::scenario::ScenarioConfig;

fn main() -> ris_connect::Result<()> {
    let config = ScenarioConfig {
        num_ue: 10,
        num_uav: 7,
        gamma0_ris: 10.0,
        ..ScenarioConfig::default()
    };
    let sc = config.sample(2024)?;
    let g = build_graph(&sc)?;
    let l = laplacian(&g);
    let candidates = enumerate_candidates(&sc, &g, None, PhaseMode::Cophase)?;
    println!("{} candidate reflected links", candidates.len());
    if candidates.is_empty() {
        return Ok(());
    }

    let outcome = solve_relaxation_with(&l, &candidates, &config.solver, |t, _, best| {
        if t % 50 == 0 {
            println!("  step {t:>4}: best λ₂ {best:.6}");
        }
    })?;
    let q = outcome.best.value;
    println!("relaxation value {q:.6} after {} steps", outcome.iterations);

    let l_z = laplacian_of_z(&l, &candidates, &outcome.best.z)?;
    println!(
        "certificate: lmi({q:.6}) = {}, lmi({:.6}) = {}",
        lmi_check(q, &l_z)?,
        q + 1e-3,
        lmi_check(q + 1e-3, &l_z)?
    );

    let top: Vec<String> = {
        let mut idx: Vec<usize> = (0..candidates.len()).collect();
        idx.sort_by(|&a, &b| outcome.best.z[b].total_cmp(&outcome.best.z[a]));
        idx.iter()
            .take(3)
            .map(|&i| {
                let c = &candidates[i];
                format!(
                    "UE {}-UAV {}: {:.3}",
                    c.ue + 1,
                    c.uav + 1,
                    outcome.best.z[i]
                )
            })
            .collect()
    };
    println!("largest weights: {}", top.join(", "));

    let pick = round_z(&outcome.best.z).expect("non-empty");
    let mut rounded = l.clone();
    candidates[pick].incidence.add_outer_to(&mut rounded, 1.0);
    let rounded_value = ris_connect::graph::lambda2_of(&rounded)?;
    let best = exhaustive_oracle(&l, &candidates)?;
    let random = random_scheme(&l, &candidates, 1)?;
    println!("λ₂ original   {:.6}", best.lambda2_before);
    println!("λ₂ random     {:.6}", random.lambda2_after);
    println!("λ₂ rounded    {rounded_value:.6}");
    println!("λ₂ exhaustive {:.6}", best.lambda2_after);
    Ok(())
}
