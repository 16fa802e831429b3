//! A small Monte Carlo sweep over the number of UAVs, written as CSV to
//! stdout. The full-size runs go through the `ris-connect` binary.
//!
//! ```text
//! cargo run --release --example monte_carlo_sweep > sweep.csv
//! ```

use ris_connect::harness::{run_sweep, write_csv, SweepSpec, SweptParameter};
use ris_connect::optimizer::PhaseMode;
use ris_connect::scenario::ScenarioConfig;

fn main() -> ris_connect::Result<()> {
    let base = ScenarioConfig {
        num_ue: 10,
        gamma0_ris: 10.0,
        ..ScenarioConfig::default()
    };
    let mut spec = SweepSpec::new(SweptParameter::NumUav, base);
    spec.values = vec![3.0, 6.0, 9.0, 12.0];
    spec.iterations = 40;
    spec.seed = 11;
    spec.options.phase_mode = PhaseMode::Cophase;

    let records = run_sweep(&spec)?;
    write_csv(&records, std::io::stdout().lock()).expect("stdout");
    Ok(())
}
