//! Single-point evaluation: wire a [`RunConfig`] through the spin-orbit,
//! scattering and observable layers and collect everything a sweep row needs.

use crate::error::Result;
use crate::observables::{
    concurrence_closed, detector_polarizations, linear_entropy, mixed_branch_outputs,
    mixed_detector_density, polarization_of_density, spin_basis_coefficients, PolarizationVector,
};
use crate::scattering::{
    junction_coefficients, junction_rt_amplitudes, output_amplitudes, reservoir_occupation,
    ReservoirState,
};
use crate::spin_orbit::{channel_wavevectors, SpinOrbitParams};
use crate::units::{kelvin_to_au, RunConfig};

/// Everything observable at one parameter point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PointObservables {
    /// Reservoir occupation-flux factor N.
    pub n_occ: f64,
    /// Decoherence current j_d.
    pub jd: f64,
    /// Squared norm of the outgoing two-particle amplitudes.
    pub norm2: f64,
    /// Concurrence of the normalized outgoing state.
    pub concurrence: f64,
    /// Linear entropy of one electron's reduction.
    pub linear_entropy: f64,
    /// Detector-3 polarization, entangled input.
    pub p3: PolarizationVector,
    /// Detector-4 polarization, entangled input.
    pub p4: PolarizationVector,
    /// Detector-4 polarization for the fully mixed input (post-selected).
    pub mixed_p4: PolarizationVector,
    /// Fraction of collected mixed-input electrons arriving at detector 4.
    pub d4_weight: f64,
}

/// Evaluate the device at a single configuration point.
pub fn evaluate_point(cfg: &RunConfig) -> Result<PointObservables> {
    cfg.validate()?;
    let p = SpinOrbitParams::new(cfg.alpha, cfg.beta, cfg.mass)?;
    let kv = channel_wavevectors(&p, cfg.energy)?;
    let k_bar = kv.k_bar();
    let velocity = k_bar / cfg.mass;
    let t_au = kelvin_to_au(cfg.temperature_k)?;
    let n_occ = reservoir_occupation(cfg.energy, cfg.fermi_energy, t_au, velocity)?;
    let jc = junction_coefficients(cfg.epsilon)?;
    let reservoir = ReservoirState::new(&jc, n_occ, k_bar * cfg.junction_au)?;

    let rt = junction_rt_amplitudes(&p, cfg.energy, &jc, n_occ, cfg.junction_au)?;
    let state = output_amplitudes(&p, cfg.energy, &jc, n_occ, cfg.length_au, cfg.junction_au)?;

    let concurrence = concurrence_closed(&state, &rt)?;
    let s_l = linear_entropy(&state)?;
    let coeffs = spin_basis_coefficients(&state, &p)?;
    let (p3, p4) = detector_polarizations(&coeffs)?;

    let branches = mixed_branch_outputs(&p, cfg.energy, &jc, n_occ, cfg.length_au, cfg.junction_au)?;
    let detectors = mixed_detector_density(&p, &branches)?;
    let mixed_p4 = polarization_of_density(&detectors.rho_d4)?;

    Ok(PointObservables {
        n_occ,
        jd: reservoir.current,
        norm2: state.norm_sqr(),
        concurrence,
        linear_entropy: s_l,
        p3,
        p4,
        mixed_p4,
        d4_weight: detectors.d4_weight,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decoupled_point_reproduces_limits() {
        let cfg = RunConfig {
            epsilon: 0.0,
            ..RunConfig::default()
        };
        let obs = evaluate_point(&cfg).unwrap();
        assert!((obs.concurrence - 1.0).abs() < 1e-12);
        assert!(obs.jd.abs() < 1e-14);
        assert!((obs.norm2 - 1.0).abs() < 1e-12);
        // the outgoing pair stays maximally entangled
        assert!((obs.linear_entropy - 1.0).abs() < 1e-12);
        assert!(obs.p3.magnitude() < 1e-12);
        assert!(obs.p4.magnitude() < 1e-12);
        assert!(obs.mixed_p4.magnitude() < 1e-12);
        assert!((obs.d4_weight - 0.5).abs() < 1e-12);
    }

    #[test]
    fn invalid_config_rejected() {
        let cfg = RunConfig {
            epsilon: 0.9,
            ..RunConfig::default()
        };
        assert!(evaluate_point(&cfg).is_err());
    }

    #[test]
    fn norm_shift_matches_current_for_commensurate_junction() {
        // with the junction a whole number of precession periods out,
        // norm^2 - 1 equals the decoherence current exactly
        let p = SpinOrbitParams::new(0.0027, 0.004, 1.0).unwrap();
        let d = 9.0 * 2.0 * std::f64::consts::PI / p.lambda;
        for eps in [0.05, 0.2, 0.35, 0.5] {
            let cfg = RunConfig {
                epsilon: eps,
                length_au: d,
                junction_au: d,
                ..RunConfig::default()
            };
            let obs = evaluate_point(&cfg).unwrap();
            assert!(
                (obs.norm2 - 1.0 - obs.jd).abs() < 1e-12,
                "eps={eps}: norm2={} jd={}",
                obs.norm2,
                obs.jd
            );
        }
    }
}
