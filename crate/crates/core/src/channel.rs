//! Link budgets and RIS channels.
//!
//! All threshold comparisons happen in dB. Linear quantities are in watts.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::scenario::{Point2, Point3, RadioParams, RisGeometry, SPEED_OF_LIGHT};

const TWO_PI: f64 = 2.0 * PI;

/// Direct UE → UAV SNR, `10·log10(d^(−α)·p / N0)`.
pub fn ue_uav_snr_db(ue: Point2, uav: Point3, radio: &RadioParams) -> Result<f64> {
    let d = ue.on_ground().distance(uav);
    if !(d > 0.0) {
        return Err(Error::domain("UE and UAV coincide"));
    }
    let linear = d.powf(-radio.path_loss_exponent) * radio.ue_power_w / radio.noise_w;
    Ok(10.0 * linear.log10())
}

/// Free-space path loss `20·log10(4π·fc·d / c)` in dB.
pub fn free_space_loss_db(distance: f64, carrier_hz: f64) -> f64 {
    20.0 * (4.0 * PI * carrier_hz * distance / SPEED_OF_LIGHT).log10()
}

/// UAV ↔ UAV SNR, `10·log10(P) − Γ(d) − 10·log10(N0)`.
pub fn uav_uav_snr_db(a: Point3, b: Point3, radio: &RadioParams) -> Result<f64> {
    let d = a.distance(b);
    if !(d > 0.0) {
        return Err(Error::domain("UAVs coincide"));
    }
    Ok(10.0 * radio.uav_power_w.log10()
        - free_space_loss_db(d, radio.carrier_hz)
        - 10.0 * radio.noise_w.log10())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LinkKind {
    UeToRis,
    RisToUav,
}

/// Direction terms of one RIS link: the vertical-axis factor `phi`, the
/// horizontal-axis factor `varphi` and the elevation factor `psi`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ArrayAngles {
    pub phi: f64,
    pub varphi: f64,
    pub psi: f64,
    pub distance: f64,
}

impl ArrayAngles {
    /// Angles of arrival at the RIS from a ground UE.
    pub fn ue_to_ris(ue: Point2, ris: &RisGeometry) -> Result<Self> {
        let r = ris.position;
        let ue3 = ue.on_ground();
        let horizontal = ue3.horizontal_distance(r);
        if !(horizontal > 0.0) {
            return Err(Error::domain(format!(
                "UE at ({}, {}) lies on the RIS vertical axis",
                ue.x, ue.y
            )));
        }
        let distance = ue3.distance(r);
        Ok(ArrayAngles {
            phi: (ue.y - r.y) / horizontal,
            varphi: (r.x - ue.x) / horizontal,
            psi: -r.z / distance,
            distance,
        })
    }

    /// Angles of departure from the RIS towards a UAV.
    pub fn ris_to_uav(uav: Point3, ris: &RisGeometry) -> Result<Self> {
        let r = ris.position;
        let horizontal = r.horizontal_distance(uav);
        if !(horizontal > 0.0) {
            return Err(Error::domain(format!(
                "UAV at ({}, {}, {}) lies on the RIS vertical axis",
                uav.x, uav.y, uav.z
            )));
        }
        let distance = r.distance(uav);
        Ok(ArrayAngles {
            phi: (r.y - uav.y) / horizontal,
            varphi: (r.x - uav.x) / horizontal,
            psi: (r.z - uav.z) / distance,
            distance,
        })
    }
}

/// LoS channel between a node and every RIS element, row-major over
/// (row, col).
#[derive(Debug, Clone, PartialEq)]
pub struct ArrayChannel {
    pub coefficients: Vec<Complex64>,
    pub distance: f64,
    pub kind: LinkKind,
}

impl ArrayChannel {
    fn from_angles(
        angles: ArrayAngles,
        kind: LinkKind,
        ris: &RisGeometry,
        radio: &RadioParams,
    ) -> Self {
        let amplitude = radio.beta0.sqrt() / angles.distance;
        let k = TWO_PI / radio.wavelength();
        let row_step = k * ris.row_spacing * angles.phi * angles.psi;
        let col_step = k * ris.col_spacing * angles.varphi * angles.psi;
        let coefficients = (0..ris.num_elements())
            .map(|m| {
                let (r, c) = ris.element_index(m);
                let phase = -(row_step * r as f64 + col_step * c as f64);
                Complex64::from_polar(amplitude, phase)
            })
            .collect();
        ArrayChannel {
            coefficients,
            distance: angles.distance,
            kind,
        }
    }

    pub fn len(&self) -> usize {
        self.coefficients.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coefficients.is_empty()
    }
}

pub fn ue_ris_channel(ue: Point2, ris: &RisGeometry, radio: &RadioParams) -> Result<ArrayChannel> {
    let angles = ArrayAngles::ue_to_ris(ue, ris)?;
    Ok(ArrayChannel::from_angles(
        angles,
        LinkKind::UeToRis,
        ris,
        radio,
    ))
}

pub fn ris_uav_channel(
    uav: Point3,
    ris: &RisGeometry,
    radio: &RadioParams,
) -> Result<ArrayChannel> {
    let angles = ArrayAngles::ris_to_uav(uav, ris)?;
    Ok(ArrayChannel::from_angles(
        angles,
        LinkKind::RisToUav,
        ris,
        radio,
    ))
}

/// RIS phase shifts, one per element, each wrapped into `[0, 2π)`.
#[derive(Debug, Clone, PartialEq)]
pub struct PhaseConfig {
    pub thetas: Vec<f64>,
}

impl PhaseConfig {
    pub fn new(thetas: impl IntoIterator<Item = f64>) -> Self {
        PhaseConfig {
            thetas: thetas.into_iter().map(wrap_phase).collect(),
        }
    }

    pub fn zeros(m: usize) -> Self {
        PhaseConfig {
            thetas: vec![0.0; m],
        }
    }

    pub fn len(&self) -> usize {
        self.thetas.len()
    }

    pub fn is_empty(&self) -> bool {
        self.thetas.is_empty()
    }
}

pub fn wrap_phase(theta: f64) -> f64 {
    let w = theta.rem_euclid(TWO_PI);
    // rem_euclid may round up to exactly 2π for tiny negative inputs
    if w >= TWO_PI {
        0.0
    } else {
        w
    }
}

/// `h^URA = (h^RA)^H Θ h^UR = Σ_m conj(h^RA_m)·e^{jθ_m}·h^UR_m`.
pub fn cascaded_channel(
    h_ur: &ArrayChannel,
    h_ra: &ArrayChannel,
    theta: &PhaseConfig,
) -> Result<Complex64> {
    let m = h_ur.len();
    for got in [h_ra.len(), theta.len()] {
        if got != m {
            return Err(Error::Dimension { expected: m, got });
        }
    }
    Ok(h_ur
        .coefficients
        .iter()
        .zip(&h_ra.coefficients)
        .zip(&theta.thetas)
        .map(|((ur, ra), &t)| ra.conj() * Complex64::from_polar(1.0, t) * ur)
        .sum())
}

/// Reflected-link SNR `10·log10(p·|h|² / N0)`; `-inf` for a null channel.
pub fn ris_snr_db(h: Complex64, radio: &RadioParams) -> f64 {
    let gain = h.norm_sqr();
    if gain == 0.0 {
        return f64::NEG_INFINITY;
    }
    10.0 * (radio.ue_power_w * gain / radio.noise_w).log10()
}

/// Closed-form phase shifts towards a UAV, with the `π·fc/c` prefactor.
pub fn phase_shift_paper(
    ue: Point2,
    uav: Point3,
    ris: &RisGeometry,
    radio: &RadioParams,
) -> Result<PhaseConfig> {
    let ur = ArrayAngles::ue_to_ris(ue, ris)?;
    let ra = ArrayAngles::ris_to_uav(uav, ris)?;
    let prefactor = PI * radio.carrier_hz / SPEED_OF_LIGHT;
    let row_term = ris.row_spacing * (ra.psi * ra.phi + ur.psi * ur.phi);
    let col_term = ris.col_spacing * (ra.psi * ra.varphi + ur.psi * ur.varphi);
    Ok(PhaseConfig::new((0..ris.num_elements()).map(|m| {
        let (r, c) = ris.element_index(m);
        prefactor * (row_term * r as f64 + col_term * c as f64)
    })))
}

/// Phases that align every summand of the cascaded channel, attaining
/// `|h^URA| = Σ_m |h^RA_m|·|h^UR_m|`.
pub fn phase_shift_cophase(h_ur: &ArrayChannel, h_ra: &ArrayChannel) -> Result<PhaseConfig> {
    if h_ur.len() != h_ra.len() {
        return Err(Error::Dimension {
            expected: h_ur.len(),
            got: h_ra.len(),
        });
    }
    let mut thetas = Vec::with_capacity(h_ur.len());
    for (ur, ra) in h_ur.coefficients.iter().zip(&h_ra.coefficients) {
        let product = ra.conj() * ur;
        if product.norm() == 0.0 {
            return Err(Error::domain("zero-modulus channel entry"));
        }
        thetas.push(-product.arg());
    }
    Ok(PhaseConfig::new(thetas))
}
