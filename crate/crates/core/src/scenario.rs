//! Experiment configuration: radio parameters, RIS geometry, node placement.
//!
//! Node indices follow one convention everywhere in the crate: UEs occupy
//! `0..U` in list order and UAVs occupy `U..U + A`. The edge-list text format
//! and the CLI shift these to 1-based.
//!
//! Placement uses `ChaCha8Rng` seeded with `seed_from_u64`, drawing every UE
//! as (x, y) and then every UAV as (x, y). The stream is stable across runs
//! and platforms for a given version of `rand_chacha`.

use std::path::Path;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const SPEED_OF_LIGHT: f64 = 3e8;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Point2 {
    pub x: f64,
    pub y: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Point3 {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Point2 {
    pub fn new(x: f64, y: f64) -> Self {
        Point2 { x, y }
    }

    /// The point lifted to ground level.
    pub fn on_ground(self) -> Point3 {
        Point3::new(self.x, self.y, 0.0)
    }
}

impl Point3 {
    pub fn new(x: f64, y: f64, z: f64) -> Self {
        Point3 { x, y, z }
    }

    pub fn distance(self, other: Point3) -> f64 {
        ((self.x - other.x).powi(2) + (self.y - other.y).powi(2) + (self.z - other.z).powi(2))
            .sqrt()
    }

    pub fn horizontal_distance(self, other: Point3) -> f64 {
        (self.x - other.x).hypot(self.y - other.y)
    }
}

/// Link-budget parameters shared by every node.
#[derive(Debug, Clone, PartialEq)]
pub struct RadioParams {
    /// UE transmit power `p`, W.
    pub ue_power_w: f64,
    /// UAV transmit power `P`, W.
    pub uav_power_w: f64,
    /// Noise power `N0`, W.
    pub noise_w: f64,
    pub path_loss_exponent: f64,
    /// Carrier frequency, Hz.
    pub carrier_hz: f64,
    /// Path loss at the 1 m reference distance, linear.
    pub beta0: f64,
    pub gamma0_ue_db: f64,
    pub gamma0_uav_db: f64,
    pub gamma0_ris_db: f64,
    /// Optional UE–RIS distance limit, m.
    pub ue_ris_max_distance: Option<f64>,
}

impl RadioParams {
    pub fn wavelength(&self) -> f64 {
        SPEED_OF_LIGHT / self.carrier_hz
    }
}

impl Default for RadioParams {
    fn default() -> Self {
        RadioParams {
            ue_power_w: 1.0,
            uav_power_w: 5.0,
            noise_w: dbm_to_watts(-130.0),
            path_loss_exponent: 4.0,
            carrier_hz: 3e9,
            beta0: 1e-6,
            gamma0_ue_db: 85.0,
            gamma0_uav_db: 80.0,
            gamma0_ris_db: 30.0,
            ue_ris_max_distance: None,
        }
    }
}

pub fn dbm_to_watts(dbm: f64) -> f64 {
    10f64.powf((dbm - 30.0) / 10.0)
}

/// Uniform planar array of passive reflecting units.
#[derive(Debug, Clone, PartialEq)]
pub struct RisGeometry {
    pub position: Point3,
    pub rows: usize,
    pub cols: usize,
    /// Row spacing, m.
    pub row_spacing: f64,
    /// Column spacing, m.
    pub col_spacing: f64,
}

impl RisGeometry {
    pub fn num_elements(&self) -> usize {
        self.rows * self.cols
    }

    /// (row, col) of element `m`, zero-based, row-major.
    pub fn element_index(&self, m: usize) -> (usize, usize) {
        (m / self.cols, m % self.cols)
    }
}

impl Default for RisGeometry {
    fn default() -> Self {
        RisGeometry {
            position: Point3::new(35.0, 50.0, 20.0),
            rows: 10,
            cols: 10,
            row_spacing: 0.05,
            col_spacing: 0.05,
        }
    }
}

/// Axis-aligned placement area `[0, width) × [0, height)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Area {
    pub width: f64,
    pub height: f64,
}

impl Default for Area {
    fn default() -> Self {
        Area {
            width: 150.0,
            height: 150.0,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Scenario {
    pub ue_positions: Vec<Point2>,
    pub uav_positions: Vec<Point3>,
    pub ris: RisGeometry,
    pub radio: RadioParams,
    pub seed: u64,
}

impl Scenario {
    pub fn num_ue(&self) -> usize {
        self.ue_positions.len()
    }

    pub fn num_uav(&self) -> usize {
        self.uav_positions.len()
    }

    pub fn num_nodes(&self) -> usize {
        self.num_ue() + self.num_uav()
    }

    /// Graph node of UAV `a`.
    pub fn uav_node(&self, a: usize) -> usize {
        self.num_ue() + a
    }
}

pub fn sample_scenario(
    num_ue: usize,
    num_uav: usize,
    area: Area,
    uav_altitude: f64,
    ris: RisGeometry,
    radio: RadioParams,
    seed: u64,
) -> Result<Scenario> {
    if num_ue == 0 || num_uav == 0 {
        return Err(Error::config(format!(
            "need at least one UE and one UAV, got U={num_ue}, A={num_uav}"
        )));
    }
    if !(area.width > 0.0 && area.height > 0.0 && area.width.is_finite() && area.height.is_finite())
    {
        return Err(Error::config(format!(
            "area sides must be positive and finite, got {} x {}",
            area.width, area.height
        )));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let ue_positions = (0..num_ue)
        .map(|_| {
            let x = rng.gen_range(0.0..area.width);
            let y = rng.gen_range(0.0..area.height);
            Point2::new(x, y)
        })
        .collect();
    let uav_positions = (0..num_uav)
        .map(|_| {
            let x = rng.gen_range(0.0..area.width);
            let y = rng.gen_range(0.0..area.height);
            Point3::new(x, y, uav_altitude)
        })
        .collect();

    Ok(Scenario {
        ue_positions,
        uav_positions,
        ris,
        radio,
        seed,
    })
}

/// One broken invariant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub field: String,
    pub rule: String,
}

impl Violation {
    fn new(field: impl Into<String>, rule: impl Into<String>) -> Self {
        Violation {
            field: field.into(),
            rule: rule.into(),
        }
    }
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}: {}", self.field, self.rule)
    }
}

pub fn validate(sc: &Scenario) -> Vec<Violation> {
    let mut out = Vec::new();
    let r = &sc.radio;
    let positive = [
        ("p", r.ue_power_w),
        ("P", r.uav_power_w),
        ("N0", r.noise_w),
        ("alpha", r.path_loss_exponent),
        ("fc", r.carrier_hz),
        ("beta0", r.beta0),
    ];
    for (name, value) in positive {
        if !(value > 0.0 && value.is_finite()) {
            out.push(Violation::new(
                name,
                format!("must be positive and finite, got {value}"),
            ));
        }
    }
    for (name, value) in [
        ("gamma0_ue", r.gamma0_ue_db),
        ("gamma0_uav", r.gamma0_uav_db),
        ("gamma0_ris", r.gamma0_ris_db),
    ] {
        if value.is_nan() {
            out.push(Violation::new(name, "must not be NaN"));
        }
    }
    if let Some(d0) = r.ue_ris_max_distance {
        if !(d0 > 0.0) {
            out.push(Violation::new(
                "D0",
                format!("must be positive when set, got {d0}"),
            ));
        }
    }

    let ris = &sc.ris;
    if ris.rows == 0 || ris.cols == 0 {
        out.push(Violation::new(
            "ris.Mr/Mc",
            format!("need at least one element, got {} x {}", ris.rows, ris.cols),
        ));
    }
    if !(ris.row_spacing > 0.0) {
        out.push(Violation::new("ris.dr", "must be positive"));
    }
    if !(ris.col_spacing > 0.0) {
        out.push(Violation::new("ris.dc", "must be positive"));
    }
    let p = ris.position;
    if !(p.x.is_finite() && p.y.is_finite() && p.z.is_finite()) {
        out.push(Violation::new("ris.position", "must be finite"));
    } else if !(p.z > 0.0) {
        out.push(Violation::new(
            "ris.position.z",
            format!("must be positive, got {}", p.z),
        ));
    }

    if sc.ue_positions.is_empty() {
        out.push(Violation::new("ue_positions", "need at least one UE"));
    }
    if sc.uav_positions.is_empty() {
        out.push(Violation::new("uav_positions", "need at least one UAV"));
    }
    for (i, ue) in sc.ue_positions.iter().enumerate() {
        if !(ue.x.is_finite() && ue.y.is_finite()) {
            out.push(Violation::new(
                format!("ue_positions[{i}]"),
                "must be finite",
            ));
        }
    }
    for (i, uav) in sc.uav_positions.iter().enumerate() {
        if !(uav.x.is_finite() && uav.y.is_finite() && uav.z.is_finite()) {
            out.push(Violation::new(
                format!("uav_positions[{i}]"),
                "must be finite",
            ));
        } else if !(uav.z > 0.0) {
            out.push(Violation::new(
                format!("uav_positions[{i}].z"),
                format!("altitude must be positive, got {}", uav.z),
            ));
        }
    }
    out
}

/// Returns a configuration error listing every violation, if any.
pub fn ensure_valid(sc: &Scenario) -> Result<()> {
    let violations = validate(sc);
    if violations.is_empty() {
        Ok(())
    } else {
        let joined: Vec<String> = violations.iter().map(ToString::to_string).collect();
        Err(Error::config(joined.join("; ")))
    }
}

/// Settings of the projected supergradient solver.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SolverOptions {
    /// Base step η₀; step t moves at most a distance η₀/√t.
    pub eta0: f64,
    pub max_iterations: usize,
    /// Stop when the best value gained less than `plateau_tol` over this many iterations.
    pub plateau_window: usize,
    pub plateau_tol: f64,
}

impl Default for SolverOptions {
    fn default() -> Self {
        SolverOptions {
            eta0: 1.0,
            max_iterations: 1000,
            plateau_window: 100,
            plateau_tol: 1e-7,
        }
    }
}

/// JSON configuration file.
///
/// Every key is optional and defaults to the reference deployment: a
/// 150 m × 150 m area, RIS of 10 × 10 elements at (35, 50, 20) m, 7 UAVs at
/// 50 m and 10 UEs. `N0` is given in dBm.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct ScenarioConfig {
    pub num_ue: usize,
    pub num_uav: usize,
    pub area_m: [f64; 2],
    pub uav_altitude_m: f64,
    pub seed: u64,

    #[serde(alias = "position")]
    pub ris_position: [f64; 3],
    #[serde(rename = "Mr")]
    pub mr: usize,
    #[serde(rename = "Mc")]
    pub mc: usize,
    pub dr: f64,
    pub dc: f64,

    pub p: f64,
    #[serde(rename = "P")]
    pub p_uav: f64,
    #[serde(rename = "N0", alias = "N0_dbm")]
    pub n0_dbm: f64,
    pub alpha: f64,
    pub fc: f64,
    pub beta0: f64,
    pub gamma0_ue: f64,
    pub gamma0_uav: f64,
    pub gamma0_ris: f64,
    #[serde(rename = "D0")]
    pub d0: Option<f64>,

    pub solver: SolverOptions,
}

impl Default for ScenarioConfig {
    fn default() -> Self {
        ScenarioConfig {
            num_ue: 10,
            num_uav: 7,
            area_m: [150.0, 150.0],
            uav_altitude_m: 50.0,
            seed: 0,
            ris_position: [35.0, 50.0, 20.0],
            mr: 10,
            mc: 10,
            dr: 0.05,
            dc: 0.05,
            p: 1.0,
            p_uav: 5.0,
            n0_dbm: -130.0,
            alpha: 4.0,
            fc: 3e9,
            beta0: 1e-6,
            gamma0_ue: 85.0,
            gamma0_uav: 80.0,
            gamma0_ris: 30.0,
            d0: None,
            solver: SolverOptions::default(),
        }
    }
}

impl ScenarioConfig {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::config(format!("invalid config: {e}")))
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        Self::from_json(&text)
    }

    pub fn radio(&self) -> RadioParams {
        RadioParams {
            ue_power_w: self.p,
            uav_power_w: self.p_uav,
            noise_w: dbm_to_watts(self.n0_dbm),
            path_loss_exponent: self.alpha,
            carrier_hz: self.fc,
            beta0: self.beta0,
            gamma0_ue_db: self.gamma0_ue,
            gamma0_uav_db: self.gamma0_uav,
            gamma0_ris_db: self.gamma0_ris,
            ue_ris_max_distance: self.d0,
        }
    }

    pub fn ris(&self) -> RisGeometry {
        let [x, y, z] = self.ris_position;
        RisGeometry {
            position: Point3::new(x, y, z),
            rows: self.mr,
            cols: self.mc,
            row_spacing: self.dr,
            col_spacing: self.dc,
        }
    }

    pub fn area(&self) -> Area {
        Area {
            width: self.area_m[0],
            height: self.area_m[1],
        }
    }

    /// Samples a scenario from this configuration and validates it.
    pub fn sample(&self, seed: u64) -> Result<Scenario> {
        let sc = sample_scenario(
            self.num_ue,
            self.num_uav,
            self.area(),
            self.uav_altitude_m,
            self.ris(),
            self.radio(),
            seed,
        )?;
        ensure_valid(&sc)?;
        Ok(sc)
    }
}
