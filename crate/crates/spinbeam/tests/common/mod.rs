//! Shared test support: an independent spin-flip concurrence oracle and a
//! seeded generator of valid device parameter points.
//!
//! Each test binary compiles this module separately and uses a subset.
#![allow(dead_code)]

use nalgebra::{Matrix4, Vector4};
use num_complex::Complex64;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use spinbeam::{
    channel_wavevectors, junction_coefficients, junction_rt_amplitudes, kelvin_to_au,
    output_amplitudes, reservoir_occupation, JunctionAmplitudes, JunctionCoefficients,
    SpinOrbitParams, TwoParticleState,
};

/// Spin-flip concurrence computed from the pure-state density matrix:
/// rho_tilde = (sigma_y x sigma_y) conj(rho) (sigma_y x sigma_y) and
/// C = sqrt(tr(rho rho_tilde)). Shares no code with the production routes.
pub fn wootters_concurrence(s: &TwoParticleState) -> f64 {
    let n = s.norm_sqr().sqrt();
    let psi = Vector4::new(s.x / n, s.y / n, s.z / n, s.w / n);
    let rho: Matrix4<Complex64> = psi * psi.adjoint();

    let zero = Complex64::new(0.0, 0.0);
    let one = Complex64::new(1.0, 0.0);
    // sigma_y x sigma_y is the real anti-diagonal (-1, 1, 1, -1)
    let flip = Matrix4::new(
        zero, zero, zero, -one, //
        zero, zero, one, zero, //
        zero, one, zero, zero, //
        -one, zero, zero, zero,
    );
    let rho_tilde = flip * rho.conjugate() * flip;
    (rho * rho_tilde).trace().norm().sqrt()
}

/// One randomly drawn, physically valid parameter point.
#[derive(Debug, Clone, Copy)]
pub struct ParameterPoint {
    pub alpha: f64,
    pub beta: f64,
    pub mass: f64,
    pub energy: f64,
    pub fermi_energy: f64,
    pub temperature_k: f64,
    pub epsilon: f64,
    pub arm_length: f64,
    pub junction_distance: f64,
}

impl ParameterPoint {
    pub fn draw(rng: &mut ChaCha8Rng) -> Self {
        let arm_length = rng.gen_range(1.0e3..4.0e4);
        let junction_distance = if rng.gen_bool(0.5) {
            arm_length
        } else {
            rng.gen_range(0.0..arm_length)
        };
        let energy = rng.gen_range(0.05..0.5);
        ParameterPoint {
            alpha: rng.gen_range(0.0..0.006),
            beta: rng.gen_range(0.0..0.006),
            mass: rng.gen_range(0.3..2.0),
            energy,
            fermi_energy: energy + rng.gen_range(-0.02..0.02),
            temperature_k: rng.gen_range(0.0..5000.0),
            epsilon: rng.gen_range(0.0..0.5),
            arm_length,
            junction_distance,
        }
    }

    pub fn swapped_couplings(&self) -> Self {
        ParameterPoint {
            alpha: self.beta,
            beta: self.alpha,
            ..*self
        }
    }
}

/// Everything the observable layer needs at one parameter point.
pub struct EvaluatedPoint {
    pub so: SpinOrbitParams,
    pub junction: JunctionCoefficients,
    pub n_occ: f64,
    pub phase: f64,
    pub rt: JunctionAmplitudes,
    pub state: TwoParticleState,
}

pub fn evaluate(pt: &ParameterPoint) -> EvaluatedPoint {
    let so = SpinOrbitParams::new(pt.alpha, pt.beta, pt.mass).unwrap();
    let kv = channel_wavevectors(&so, pt.energy).unwrap();
    let t_au = kelvin_to_au(pt.temperature_k).unwrap();
    let n_occ =
        reservoir_occupation(pt.energy, pt.fermi_energy, t_au, kv.k_bar() / pt.mass).unwrap();
    let junction = junction_coefficients(pt.epsilon).unwrap();
    let rt =
        junction_rt_amplitudes(&so, pt.energy, &junction, n_occ, pt.junction_distance).unwrap();
    let state = output_amplitudes(
        &so,
        pt.energy,
        &junction,
        n_occ,
        pt.arm_length,
        pt.junction_distance,
    )
    .unwrap();
    EvaluatedPoint {
        so,
        junction,
        n_occ,
        phase: kv.k_bar() * pt.junction_distance,
        rt,
        state,
    }
}
