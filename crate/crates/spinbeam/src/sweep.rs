//! Parameter sweeps, figure presets, CSV emission and validity warnings.

use std::io::Write;

use crate::error::{Error, Result};
use crate::pipeline::{evaluate_point, PointObservables};
use crate::spin_orbit::SpinOrbitParams;
use crate::units::{
    kelvin_to_au, max_single_subband_width, InputKind, RunConfig, MICROMETER_AU,
};

/// Config quantity a sweep can vary.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepKey {
    Epsilon,
    Alpha,
    Beta,
    Mass,
    Energy,
    FermiEnergy,
    TemperatureK,
    LengthAu,
    JunctionAu,
}

impl SweepKey {
    /// Parse a key name; micrometer spellings scale the sweep bounds into
    /// atomic units, hence the returned factor.
    pub fn parse(name: &str) -> Result<(SweepKey, f64)> {
        let key = match name {
            "epsilon" => (SweepKey::Epsilon, 1.0),
            "alpha" => (SweepKey::Alpha, 1.0),
            "beta" => (SweepKey::Beta, 1.0),
            "mass" => (SweepKey::Mass, 1.0),
            "energy" => (SweepKey::Energy, 1.0),
            "fermi_energy" => (SweepKey::FermiEnergy, 1.0),
            "temperature_k" => (SweepKey::TemperatureK, 1.0),
            "length_au" => (SweepKey::LengthAu, 1.0),
            "length_um" => (SweepKey::LengthAu, MICROMETER_AU),
            "junction_au" => (SweepKey::JunctionAu, 1.0),
            "junction_um" => (SweepKey::JunctionAu, MICROMETER_AU),
            other => {
                return Err(Error::Invalid(format!(
                    "`{other}` is not a sweepable key (try epsilon, alpha, beta, mass, \
                     energy, fermi_energy, temperature_k, length_au/um, junction_au/um)"
                )))
            }
        };
        Ok(key)
    }

    pub fn name(&self) -> &'static str {
        match self {
            SweepKey::Epsilon => "epsilon",
            SweepKey::Alpha => "alpha",
            SweepKey::Beta => "beta",
            SweepKey::Mass => "mass",
            SweepKey::Energy => "energy",
            SweepKey::FermiEnergy => "fermi_energy",
            SweepKey::TemperatureK => "temperature_k",
            SweepKey::LengthAu => "length_au",
            SweepKey::JunctionAu => "junction_au",
        }
    }

    fn apply(&self, cfg: &mut RunConfig, value: f64) {
        match self {
            SweepKey::Epsilon => cfg.epsilon = value,
            SweepKey::Alpha => cfg.alpha = value,
            SweepKey::Beta => cfg.beta = value,
            SweepKey::Mass => cfg.mass = value,
            SweepKey::Energy => cfg.energy = value,
            SweepKey::FermiEnergy => cfg.fermi_energy = value,
            SweepKey::TemperatureK => cfg.temperature_k = value,
            SweepKey::LengthAu => {
                // keep a junction pinned to the arm end attached to it
                if cfg.junction_au == cfg.length_au {
                    cfg.junction_au = value;
                }
                cfg.length_au = value;
            }
            SweepKey::JunctionAu => cfg.junction_au = value,
        }
    }
}

/// A linear grid over one config key.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepSpec {
    pub base: RunConfig,
    pub key: SweepKey,
    pub from: f64,
    pub to: f64,
    pub steps: usize,
}

impl SweepSpec {
    pub fn validate(&self) -> Result<()> {
        if self.steps < 2 {
            return Err(Error::Invalid(format!(
                "a sweep needs at least 2 steps, got {}",
                self.steps
            )));
        }
        if self.from == self.to || !self.from.is_finite() || !self.to.is_finite() {
            return Err(Error::Invalid(format!(
                "sweep bounds must be distinct finite values, got {} and {}",
                self.from, self.to
            )));
        }
        Ok(())
    }

    /// Grid value at step `i`.
    pub fn value_at(&self, i: usize) -> f64 {
        self.from + (self.to - self.from) * (i as f64) / ((self.steps - 1) as f64)
    }
}

/// One CSV row: the resolved inputs plus every observable.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepRecord {
    pub epsilon: f64,
    pub alpha: f64,
    pub beta: f64,
    pub mass: f64,
    pub energy: f64,
    pub fermi_energy: f64,
    pub temperature_k: f64,
    pub length_au: f64,
    pub junction_au: f64,
    pub observables: PointObservables,
}

impl SweepRecord {
    pub fn values(&self) -> [f64; 24] {
        let o = &self.observables;
        [
            self.epsilon,
            self.alpha,
            self.beta,
            self.mass,
            self.energy,
            self.fermi_energy,
            self.temperature_k,
            self.length_au,
            self.junction_au,
            o.n_occ,
            o.jd,
            o.norm2,
            o.concurrence,
            o.linear_entropy,
            o.p3.x,
            o.p3.y,
            o.p3.z,
            o.p4.x,
            o.p4.y,
            o.p4.z,
            o.mixed_p4.x,
            o.mixed_p4.y,
            o.mixed_p4.z,
            o.d4_weight,
        ]
    }
}

/// Fixed CSV column order.
pub const CSV_HEADER: &str = "epsilon,alpha,beta,mass,energy,fermi_energy,temperature_k,\
length_au,junction_au,n_occ,jd,norm2,concurrence,linear_entropy,\
p3x,p3y,p3z,p4x,p4y,p4z,mixed_p4x,mixed_p4y,mixed_p4z,d4_weight";

/// Evaluate every grid point in order. A domain error at any point aborts
/// the sweep, naming the offending grid value.
pub fn run_sweep(spec: &SweepSpec) -> Result<Vec<SweepRecord>> {
    spec.validate()?;
    let mut records = Vec::with_capacity(spec.steps);
    for i in 0..spec.steps {
        let value = spec.value_at(i);
        let mut cfg = spec.base.clone();
        spec.key.apply(&mut cfg, value);
        let observables = evaluate_point(&cfg).map_err(|e| {
            Error::Domain(format!(
                "sweep aborted at {} = {value}: {e}",
                spec.key.name()
            ))
        })?;
        records.push(SweepRecord {
            epsilon: cfg.epsilon,
            alpha: cfg.alpha,
            beta: cfg.beta,
            mass: cfg.mass,
            energy: cfg.energy,
            fermi_energy: cfg.fermi_energy,
            temperature_k: cfg.temperature_k,
            length_au: cfg.length_au,
            junction_au: cfg.junction_au,
            observables,
        });
    }
    Ok(records)
}

/// Junction placement for the epsilon-sweep presets: a whole number of
/// spin-precession periods from the splitter, so channel-plus and
/// channel-minus reach the junction in phase. In this geometry the
/// concurrence returns to one and the polarization vanishes exactly where
/// the decoherence current crosses zero, and the z polarization locks to
/// the sign of the current.
fn commensurate_distance(alpha: f64, beta: f64, periods: u32) -> f64 {
    let p = SpinOrbitParams::new(alpha, beta, 1.0).expect("preset couplings are valid");
    f64::from(periods) * 2.0 * std::f64::consts::PI / p.lambda
}

/// Built-in sweep presets mirroring the main device regimes: coupling
/// sweeps at fixed spin-orbit strength (fig2, fig4, fig6) and Rashba sweeps
/// at fixed coupling (fig3, fig5). fig6 drives the fully mixed input with
/// the junction at one micrometer.
pub fn figure_preset(name: &str) -> Result<SweepSpec> {
    let mut base = RunConfig::default();
    let spec = match name {
        "fig2" => {
            // nine precession periods ~ 1.24 um; cos(kbar d) ~ +0.997
            let d = commensurate_distance(0.0027, 0.004, 9);
            base.alpha = 0.0027;
            base.length_au = d;
            base.junction_au = d;
            SweepSpec { base, key: SweepKey::Epsilon, from: 0.0, to: 0.5, steps: 51 }
        }
        "fig3" => {
            let d = commensurate_distance(0.0027, 0.004, 9);
            base.fermi_energy = 0.21;
            base.epsilon = 0.25;
            base.length_au = d;
            base.junction_au = d;
            SweepSpec { base, key: SweepKey::Alpha, from: 0.0019, to: 0.003, steps: 51 }
        }
        "fig4" => {
            // fourteen precession periods ~ 2.10 um; cos(kbar d) ~ +0.88
            let d = commensurate_distance(0.0019, 0.004, 14);
            base.alpha = 0.0019;
            base.length_au = d;
            base.junction_au = d;
            SweepSpec { base, key: SweepKey::Epsilon, from: 0.0, to: 0.5, steps: 51 }
        }
        "fig5" => {
            let d = commensurate_distance(0.0027, 0.004, 9);
            base.epsilon = 0.4;
            base.length_au = d;
            base.junction_au = d;
            SweepSpec { base, key: SweepKey::Alpha, from: 0.0019, to: 0.003, steps: 51 }
        }
        "fig6" => {
            base.alpha = 0.0027;
            base.input = InputKind::Mixed;
            base.length_au = MICROMETER_AU;
            base.junction_au = MICROMETER_AU;
            SweepSpec { base, key: SweepKey::Epsilon, from: 0.0, to: 0.5, steps: 51 }
        }
        other => {
            return Err(Error::Invalid(format!(
                "unknown preset `{other}` (expected fig2..fig6)"
            )))
        }
    };
    Ok(spec)
}

fn fmt(v: f64) -> String {
    format!("{v:.11e}")
}

/// Write records as CSV with 12 significant digits per value. Deterministic:
/// identical records produce byte-identical output.
pub fn emit_csv<W: Write + ?Sized>(records: &[SweepRecord], sink: &mut W) -> std::io::Result<()> {
    writeln!(sink, "{CSV_HEADER}")?;
    for rec in records {
        let row: Vec<String> = rec.values().iter().copied().map(fmt).collect();
        writeln!(sink, "{}", row.join(","))?;
    }
    Ok(())
}

/// Non-fatal configuration checks.
///
/// Warns when the lead width exceeds the single-subband bound for the given
/// Rashba strength, and when the working energy sits more than ten thermal
/// widths from the reservoir Fermi level (the junction model is derived for
/// energies near it).
pub fn validity_report(cfg: &RunConfig) -> Vec<String> {
    let mut warnings = Vec::new();

    if let Some(width) = cfg.width_au {
        if let Ok(Some(bound)) = max_single_subband_width(cfg.alpha) {
            if width > bound {
                warnings.push(format!(
                    "lead width {width} a.u. exceeds the single-subband bound {bound:.1} a.u. \
                     for alpha = {}; transport would mix transverse modes",
                    cfg.alpha
                ));
            }
        }
    }

    if let Ok(t_au) = kelvin_to_au(cfg.temperature_k) {
        let gap = (cfg.energy - cfg.fermi_energy).abs();
        if gap > 0.0 && gap > 10.0 * t_au {
            warnings.push(format!(
                "energy {} a.u. is {:.1}x the thermal width away from the Fermi level {} a.u.; \
                 the reservoir junction is modeled for energies in its vicinity",
                cfg.energy,
                if t_au > 0.0 { gap / t_au } else { f64::INFINITY },
                cfg.fermi_energy
            ));
        }
    }

    warnings
}
