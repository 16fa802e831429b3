//! Link budgets: direct UE–UAV and UAV–UAV SNR against distance, and the
//! reflected UE → RIS → UAV SNR under both phase rules.
//!
//! ```text
//! cargo run --example channel_budget
//! ```

use ris_connect::channel::{
    cascaded_channel, phase_shift_cophase, phase_shift_paper, ris_snr_db, ris_uav_channel,
    uav_uav_snr_db, ue_ris_channel, ue_uav_snr_db,
};
use ris_connect::scenario::{Point2, Point3, RadioParams, RisGeometry};

fn main() -> ris_connect::Result<()> {
    let radio = RadioParams::default();
    let ris = RisGeometry::default();

    println!(
        "direct links (thresholds {} / {} dB)",
        radio.gamma0_ue_db, radio.gamma0_uav_db
    );
    println!("  {:>8} {:>12} {:>12}", "dist m", "UE-UAV dB", "UAV-UAV dB");
    for d in [25.0, 50.0, 75.0, 100.0, 150.0, 200.0] {
        // UAV straight above the UE, and two UAVs at the same height
        let ue = ue_uav_snr_db(Point2::new(0.0, 0.0), Point3::new(0.0, 0.0, d), &radio)?;
        let uav = uav_uav_snr_db(
            Point3::new(0.0, 0.0, 50.0),
            Point3::new(d, 0.0, 50.0),
            &radio,
        )?;
        println!("  {d:>8.0} {ue:>12.2} {uav:>12.2}");
    }

    println!(
        "\nreflected link, UAV at (100, 100, 50), RIS threshold {} dB",
        radio.gamma0_ris_db
    );
    println!(
        "  {:>14} {:>10} {:>10} {:>10}",
        "UE", "d_UR m", "paper dB", "cophase dB"
    );
    let uav = Point3::new(100.0, 100.0, 50.0);
    let h_ra = ris_uav_channel(uav, &ris, &radio)?;
    for ue in [
        Point2::new(20.0, 40.0),
        Point2::new(10.0, 10.0),
        Point2::new(60.0, 80.0),
        Point2::new(140.0, 20.0),
    ] {
        let h_ur = ue_ris_channel(ue, &ris, &radio)?;
        let paper = phase_shift_paper(ue, uav, &ris, &radio)?;
        let cophase = phase_shift_cophase(&h_ur, &h_ra)?;
        let snr_paper = ris_snr_db(cascaded_channel(&h_ur, &h_ra, &paper)?, &radio);
        let snr_co = ris_snr_db(cascaded_channel(&h_ur, &h_ra, &cophase)?, &radio);
        println!(
            "  ({:>5.1}, {:>5.1}) {:>10.1} {:>10.2} {:>10.2}",
            ue.x, ue.y, h_ur.distance, snr_paper, snr_co
        );
    }
    Ok(())
}
