//! Network graph of one scenario: edges, Laplacian spectrum, λ₂ and the
//! Fiedler vector, then the effect of adding each missing UE–UAV edge.
//!
//! ```text
//! cargo run --example spectral_graph
//! ```

use ris_connect::graph::{build_graph, lambda2, laplacian, EdgeKind};
use ris_connect::linalg::eig_sym;
use ris_connect::scenario::ScenarioConfig;

fn main() -> ris_connect::Result<()> {
    let config = ScenarioConfig {
        num_ue: 4,
        num_uav: 4,
        ..ScenarioConfig::default()
    };
    let sc = config.sample(3)?;
    let g = build_graph(&sc)?;

    println!("edge list (1-based):\n{}", g.to_edge_list());
    println!("components: {:?}", g.components());

    let spectrum = eig_sym(&laplacian(&g))?.eigenvalues;
    let rounded: Vec<String> = spectrum
        .iter()
        .map(|&x| format!("{:.4}", if x.abs() < 1e-12 { 0.0 } else { x }))
        .collect();
    println!("spectrum: [{}]", rounded.join(", "));
    let (l2, fiedler) = lambda2(&g)?;
    println!("λ₂ = {l2:.6}");
    let signs: String = fiedler
        .iter()
        .map(|x| if *x >= 0.0 { '+' } else { '-' })
        .collect();
    println!("Fiedler sign pattern: {signs}");

    println!("\nadding one UE–UAV edge:");
    for u in 0..sc.num_ue() {
        for a in 0..sc.num_uav() {
            let node = sc.uav_node(a);
            if g.has_edge(u, node) {
                continue;
            }
            let (after, _) = lambda2(&g.with_edge(u, node, EdgeKind::Ris)?)?;
            println!("  UE {} - UAV {}: λ₂ {l2:.4} -> {after:.4}", u + 1, a + 1);
        }
    }
    Ok(())
}
