//! Atomic-unit conventions, physical-unit conversions and run configuration.
//!
//! All internal math uses Hartree atomic units (hbar = e = 1, electron mass
//! m_e = 1). Temperatures are accepted in kelvin at the interface and
//! converted once at the boundary.

use std::f64::consts::PI;

use crate::error::{Error, Result};

/// One atomic unit of temperature, in kelvin.
pub const TEMPERATURE_AU_KELVIN: f64 = 3.157e5;

/// Bohr radius in meters (one atomic unit of length).
pub const BOHR_RADIUS_M: f64 = 5.29177e-11;

/// One micrometer expressed in atomic units of length.
pub const MICROMETER_AU: f64 = 1e-6 / BOHR_RADIUS_M;

/// Spin-orbit coupling conversion factor, a.u. per eV·m.
///
/// Anchored so that 3.9e-12 eV·m maps to 0.0027 a.u., a typical strength
/// for gate-confined 2DEG material.
pub const SO_COUPLING_AU_PER_EVM: f64 = 0.0027 / 3.9e-12;

/// Convert a temperature in kelvin to atomic units.
pub fn kelvin_to_au(t_kelvin: f64) -> Result<f64> {
    if t_kelvin < 0.0 || !t_kelvin.is_finite() {
        return Err(Error::domain(format!(
            "temperature must be a finite value >= 0 K, got {t_kelvin}"
        )));
    }
    Ok(t_kelvin / TEMPERATURE_AU_KELVIN)
}

/// Convert a temperature in atomic units back to kelvin.
pub fn au_to_kelvin(t_au: f64) -> f64 {
    t_au * TEMPERATURE_AU_KELVIN
}

/// Convert a length in atomic units to meters.
pub fn length_au_to_m(l_au: f64) -> f64 {
    l_au * BOHR_RADIUS_M
}

/// Convert a length in meters to atomic units.
pub fn length_m_to_au(l_m: f64) -> f64 {
    l_m / BOHR_RADIUS_M
}

/// Convert a spin-orbit coupling strength from eV·m to atomic units.
///
/// Linear in the input; callers are expected to pass non-negative strengths.
pub fn so_coupling_evm_to_au(c_evm: f64) -> f64 {
    c_evm * SO_COUPLING_AU_PER_EVM
}

/// Largest lead width (a.u.) for which single-subband transport holds.
///
/// Equates the hard-wall subband gap 3 pi^2 / (2 w^2) with the inter-subband
/// spin-orbit matrix element 8 alpha / (3 w) at unit mass, giving
/// w = 9 pi^2 / (16 alpha). Returns `None` when `alpha` is zero: a vanishing
/// coupling places no constraint on the width.
pub fn max_single_subband_width(alpha: f64) -> Result<Option<f64>> {
    if alpha < 0.0 || !alpha.is_finite() {
        return Err(Error::domain(format!(
            "Rashba coupling must be a finite value >= 0, got {alpha}"
        )));
    }
    if alpha == 0.0 {
        return Ok(None);
    }
    Ok(Some(9.0 * PI * PI / (16.0 * alpha)))
}

/// Which two-electron input state the device is fed with.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InputKind {
    /// Maximally entangled pair injected through leads 1 and 2.
    Bell,
    /// Single electron in a fully mixed spin state through lead 1.
    Mixed,
}

impl InputKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            InputKind::Bell => "bell",
            InputKind::Mixed => "mixed",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "bell" => Ok(InputKind::Bell),
            "mixed" => Ok(InputKind::Mixed),
            other => Err(Error::Invalid(format!(
                "input must be `bell` or `mixed`, got `{other}`"
            ))),
        }
    }
}

/// A fully resolved device configuration, everything in atomic units except
/// the reservoir temperature which is carried in kelvin.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    /// Rashba coupling (a.u.).
    pub alpha: f64,
    /// Dresselhaus coupling (a.u.).
    pub beta: f64,
    /// Effective mass (a.u.).
    pub mass: f64,
    /// Energy of the injected electrons (a.u.).
    pub energy: f64,
    /// Fermi energy of the reservoir (a.u.).
    pub fermi_energy: f64,
    /// Reservoir temperature (kelvin).
    pub temperature_k: f64,
    /// Reservoir coupling, dimensionless in [0, 1/2].
    pub epsilon: f64,
    /// Beam splitter arm length (a.u.).
    pub length_au: f64,
    /// Distance of the reservoir junction from the splitter (a.u.).
    pub junction_au: f64,
    /// Optional lead width (a.u.), used only by validity checks.
    pub width_au: Option<f64>,
    /// Input state preparation.
    pub input: InputKind,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            alpha: 0.0027,
            beta: 0.004,
            mass: 1.0,
            energy: 0.2,
            fermi_energy: 0.2,
            temperature_k: 90.0,
            epsilon: 0.25,
            length_au: MICROMETER_AU,
            junction_au: MICROMETER_AU,
            width_au: None,
            input: InputKind::Bell,
        }
    }
}

impl RunConfig {
    /// Check every field against its physical range.
    pub fn validate(&self) -> Result<()> {
        if !(0.0..=0.5).contains(&self.epsilon) {
            return Err(Error::domain(format!(
                "epsilon must lie in [0, 0.5], got {}",
                self.epsilon
            )));
        }
        if self.mass <= 0.0 {
            return Err(Error::domain(format!("mass must be > 0, got {}", self.mass)));
        }
        if self.energy <= 0.0 {
            return Err(Error::domain(format!(
                "energy must be > 0, got {}",
                self.energy
            )));
        }
        if self.temperature_k < 0.0 {
            return Err(Error::domain(format!(
                "temperature_k must be >= 0, got {}",
                self.temperature_k
            )));
        }
        if self.junction_au < 0.0 || self.length_au < self.junction_au {
            return Err(Error::domain(format!(
                "lengths must satisfy length >= junction >= 0, got length {} and junction {}",
                self.length_au, self.junction_au
            )));
        }
        for (name, v) in [
            ("alpha", self.alpha),
            ("beta", self.beta),
            ("fermi_energy", self.fermi_energy),
        ] {
            if !v.is_finite() {
                return Err(Error::domain(format!("{name} must be finite, got {v}")));
            }
        }
        Ok(())
    }

    /// Serialize to the `key = value` config format accepted by
    /// [`parse_config`]. Round-trips exactly.
    pub fn render(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("alpha = {}\n", self.alpha));
        out.push_str(&format!("beta = {}\n", self.beta));
        out.push_str(&format!("mass = {}\n", self.mass));
        out.push_str(&format!("energy = {}\n", self.energy));
        out.push_str(&format!("fermi_energy = {}\n", self.fermi_energy));
        out.push_str(&format!("temperature_k = {}\n", self.temperature_k));
        out.push_str(&format!("epsilon = {}\n", self.epsilon));
        out.push_str(&format!("length_au = {}\n", self.length_au));
        out.push_str(&format!("junction_au = {}\n", self.junction_au));
        if let Some(w) = self.width_au {
            out.push_str(&format!("width_au = {w}\n"));
        }
        out.push_str(&format!("input = {}\n", self.input.as_str()));
        out
    }
}

fn parse_f64(value: &str, line: usize) -> Result<f64> {
    value.trim().parse::<f64>().map_err(|_| Error::Config {
        line,
        message: format!("expected a number, got `{}`", value.trim()),
    })
}

/// Parse a line-based `key = value` configuration with `#` comments.
///
/// Absent keys fall back to [`RunConfig::default`]; the junction distance
/// defaults to the arm length. Lengths may be given in micrometers
/// (`length_um`, `junction_um`, `width_um`) or atomic units (`*_au`), but
/// not both for the same quantity. Unknown keys and out-of-range values are
/// rejected with their line number.
pub fn parse_config(text: &str) -> Result<RunConfig> {
    let defaults = RunConfig::default();
    let mut cfg = defaults.clone();

    let mut length: Option<(f64, usize)> = None;
    let mut junction: Option<(f64, usize)> = None;
    let mut width: Option<(f64, usize)> = None;
    let mut seen: Vec<String> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        };
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let Some((key, value)) = line.split_once('=') else {
            return Err(Error::Config {
                line: line_no,
                message: format!("expected `key = value`, got `{line}`"),
            });
        };
        let key = key.trim();
        let canonical = match key {
            "length_au" | "length_um" => "length",
            "junction_au" | "junction_um" => "junction",
            "width_au" | "width_um" => "width",
            other => other,
        };
        if seen.iter().any(|k| k == canonical) {
            return Err(Error::Config {
                line: line_no,
                message: format!("`{key}` conflicts with an earlier assignment"),
            });
        }
        seen.push(canonical.to_string());

        match key {
            "alpha" => cfg.alpha = parse_f64(value, line_no)?,
            "beta" => cfg.beta = parse_f64(value, line_no)?,
            "mass" => cfg.mass = parse_f64(value, line_no)?,
            "energy" => cfg.energy = parse_f64(value, line_no)?,
            "fermi_energy" => cfg.fermi_energy = parse_f64(value, line_no)?,
            "temperature_k" => cfg.temperature_k = parse_f64(value, line_no)?,
            "epsilon" => {
                let v = parse_f64(value, line_no)?;
                if !(0.0..=0.5).contains(&v) {
                    return Err(Error::Config {
                        line: line_no,
                        message: format!("epsilon must lie in [0, 0.5], got {v}"),
                    });
                }
                cfg.epsilon = v;
            }
            "length_au" => length = Some((parse_f64(value, line_no)?, line_no)),
            "length_um" => length = Some((parse_f64(value, line_no)? * MICROMETER_AU, line_no)),
            "junction_au" => junction = Some((parse_f64(value, line_no)?, line_no)),
            "junction_um" => junction = Some((parse_f64(value, line_no)? * MICROMETER_AU, line_no)),
            "width_au" => width = Some((parse_f64(value, line_no)?, line_no)),
            "width_um" => width = Some((parse_f64(value, line_no)? * MICROMETER_AU, line_no)),
            "input" => {
                cfg.input = InputKind::parse(value.trim()).map_err(|_| Error::Config {
                    line: line_no,
                    message: format!("input must be `bell` or `mixed`, got `{}`", value.trim()),
                })?
            }
            other => {
                return Err(Error::Config {
                    line: line_no,
                    message: format!("unknown key `{other}`"),
                })
            }
        }
    }

    if let Some((l, _)) = length {
        cfg.length_au = l;
    }
    // Junction defaults to the arm end.
    cfg.junction_au = match junction {
        Some((d, _)) => d,
        None => cfg.length_au,
    };
    cfg.width_au = width.map(|(w, _)| w);

    cfg.validate().map_err(|e| {
        let line = junction.map(|(_, l)| l).or(length.map(|(_, l)| l)).unwrap_or(0);
        match e {
            Error::Domain(message) => Error::Config { line, message },
            other => other,
        }
    })?;
    Ok(cfg)
}
