//! Entanglement measures, detector density matrices and spin polarizations
//! for both the entangled-pair and fully-mixed input pipelines.

use nalgebra::{Matrix2, Matrix4};
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::scattering::{
    output_amplitudes, JunctionAmplitudes, JunctionCoefficients, TwoParticleState,
};
use crate::spin_orbit::{precession_phase, so_to_spin_basis_matrix, Branch, LeadAxis, SpinOrbitParams};

/// Two-particle expansion coefficients arranged over the four fermionic
/// modes (a3+, a3-, a4+, a4-): the normalized amplitudes sit in rows 1-2,
/// columns 3-4, zero elsewhere.
pub fn omega_matrix(s: &TwoParticleState) -> Result<Matrix4<Complex64>> {
    let n = s.normalized()?;
    let zero = Complex64::new(0.0, 0.0);
    let mut m = Matrix4::from_element(zero);
    m[(0, 2)] = n.x;
    m[(0, 3)] = n.y;
    m[(1, 2)] = n.z;
    m[(1, 3)] = n.w;
    Ok(m)
}

/// Concurrence from the antisymmetrized expansion matrix,
/// eta = 8 |W12 W34 + W13 W42 + W14 W23| with W = (Omega - Omega^T) / 2.
pub fn concurrence_omega(s: &TwoParticleState) -> Result<f64> {
    let omega = omega_matrix(s)?;
    let ws = (omega - omega.transpose()) * Complex64::new(0.5, 0.0);
    let pf = ws[(0, 1)] * ws[(2, 3)] + ws[(0, 2)] * ws[(3, 1)] + ws[(0, 3)] * ws[(1, 2)];
    Ok((8.0 * pf.norm()).clamp(0.0, 1.0))
}

/// Closed-form concurrence of the outgoing state,
/// eta = |t+ + r+ + t- + r-| / (2 (|X|^2 + |Y|^2 + |Z|^2 + |W|^2)).
pub fn concurrence_closed(s: &TwoParticleState, rt: &JunctionAmplitudes) -> Result<f64> {
    let n = s.norm_sqr();
    if n <= 0.0 {
        return Err(Error::domain(
            "concurrence undefined for a null state".to_string(),
        ));
    }
    Ok(((rt.sum_plus() + rt.sum_minus()).norm() / (2.0 * n)).clamp(0.0, 1.0))
}

/// Linear entropy S_L = 2 (1 - tr rho^2) of one electron's reduced density
/// matrix; equals the squared concurrence for the pure output state.
pub fn linear_entropy(s: &TwoParticleState) -> Result<f64> {
    let n = s.normalized()?;
    let g = Matrix2::new(n.x, n.y, n.z, n.w);
    let rho = g * g.adjoint();
    let purity = (rho * rho).trace().re;
    Ok((2.0 * (1.0 - purity)).clamp(0.0, 1.0))
}

/// Amplitudes of |up up>, |up down>, |down up>, |down down> with the first
/// slot the lead-3 spin and the second the lead-4 spin.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpinBasisCoefficients {
    pub a: Complex64,
    pub b: Complex64,
    pub c: Complex64,
    pub d: Complex64,
}

impl SpinBasisCoefficients {
    pub fn norm_sqr(&self) -> f64 {
        self.a.norm_sqr() + self.b.norm_sqr() + self.c.norm_sqr() + self.d.norm_sqr()
    }
}

/// Rotate the normalized output state into the spin-z product basis:
/// A = (X+Y+Z+W)/2, B = i e^{i kappa} (X-Y+Z-W)/2,
/// C = e^{-i kappa} (-X-Y+Z+W)/2, D = i (-X+Y+Z-W)/2.
pub fn spin_basis_coefficients(
    s: &TwoParticleState,
    p: &SpinOrbitParams,
) -> Result<SpinBasisCoefficients> {
    let n = s.normalized()?;
    let (x, y, z, w) = (n.x, n.y, n.z, n.w);
    let half = Complex64::new(0.5, 0.0);
    let ek = Complex64::from_polar(1.0, p.kappa);
    Ok(SpinBasisCoefficients {
        a: (x + y + z + w) * half,
        b: Complex64::i() * ek * (x - y + z - w) * half,
        c: ek.conj() * (-x - y + z + w) * half,
        d: Complex64::i() * (-x + y + z - w) * half,
    })
}

/// A 2x2 spin density matrix in the (up, down) basis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpinDensityMatrix {
    pub matrix: Matrix2<Complex64>,
}

impl SpinDensityMatrix {
    pub fn maximally_mixed() -> Self {
        SpinDensityMatrix {
            matrix: Matrix2::identity() * Complex64::new(0.5, 0.0),
        }
    }

    pub fn trace(&self) -> f64 {
        self.matrix.trace().re
    }

    fn hermiticity_defect(&self) -> f64 {
        (self.matrix - self.matrix.adjoint()).norm()
    }
}

/// Bloch polarization components of a detector beam.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PolarizationVector {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl PolarizationVector {
    pub const ZERO: PolarizationVector = PolarizationVector { x: 0.0, y: 0.0, z: 0.0 };

    pub fn magnitude(&self) -> f64 {
        (self.x * self.x + self.y * self.y + self.z * self.z).sqrt()
    }
}

/// P_i = tr(rho sigma_i). Rejects matrices that are not Hermitian within
/// 1e-10 or whose trace strays from one.
pub fn polarization_of_density(rho: &SpinDensityMatrix) -> Result<PolarizationVector> {
    if rho.hermiticity_defect() > 1e-10 {
        return Err(Error::Integrity(
            "density matrix is not Hermitian".to_string(),
        ));
    }
    if (rho.trace() - 1.0).abs() > 1e-10 {
        return Err(Error::Integrity(format!(
            "density matrix trace must be 1, got {}",
            rho.trace()
        )));
    }
    let m = &rho.matrix;
    Ok(PolarizationVector {
        x: (m[(0, 1)] + m[(1, 0)]).re,
        y: (Complex64::i() * (m[(0, 1)] - m[(1, 0)])).re,
        z: (m[(0, 0)] - m[(1, 1)]).re,
    })
}

/// Reduce the two-electron spin state at each detector and read off both
/// polarization vectors. The lead-3 reduction reproduces the closed forms
/// P^x = AC* + CA* + BD* + DB*, P^y = i(AC* - CA* + BD* - DB*),
/// P^z = |A|^2 + |B|^2 - |C|^2 - |D|^2.
pub fn detector_polarizations(
    coeffs: &SpinBasisCoefficients,
) -> Result<(PolarizationVector, PolarizationVector)> {
    let (a, b, c, d) = (coeffs.a, coeffs.b, coeffs.c, coeffs.d);
    let rho3 = Matrix2::new(
        Complex64::new(a.norm_sqr() + b.norm_sqr(), 0.0),
        a * c.conj() + b * d.conj(),
        c * a.conj() + d * b.conj(),
        Complex64::new(c.norm_sqr() + d.norm_sqr(), 0.0),
    );
    let rho4 = Matrix2::new(
        Complex64::new(a.norm_sqr() + c.norm_sqr(), 0.0),
        a * b.conj() + c * d.conj(),
        b * a.conj() + d * c.conj(),
        Complex64::new(b.norm_sqr() + d.norm_sqr(), 0.0),
    );
    let p3 = polarization_of_density(&SpinDensityMatrix { matrix: rho3 })?;
    let p4 = polarization_of_density(&SpinDensityMatrix { matrix: rho4 })?;
    Ok((p3, p4))
}

/// One-electron output vectors over (3+, 3-, 4+, 4-) for the two channels
/// of the fully mixed lead-1 input.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MixedBranches {
    pub plus: [Complex64; 4],
    pub minus: [Complex64; 4],
}

impl MixedBranches {
    pub fn branch_norms(&self) -> (f64, f64) {
        let n = |v: &[Complex64; 4]| v.iter().map(|a| a.norm_sqr()).sum();
        (n(&self.plus), n(&self.minus))
    }
}

/// Propagate the two mixed-input channels through splitter, arms and the
/// reservoir junction. The lead-3 components carry only precession phases;
/// the lead-4 components carry the junction amplitudes (X, Y) and (Z, W).
pub fn mixed_branch_outputs(
    p: &SpinOrbitParams,
    energy: f64,
    jc: &JunctionCoefficients,
    n_occ: f64,
    arm_length: f64,
    junction_distance: f64,
) -> Result<MixedBranches> {
    let s = output_amplitudes(p, energy, jc, n_occ, arm_length, junction_distance)?;
    let e_plus = precession_phase(p, arm_length, Branch::Plus);
    let e_minus = precession_phase(p, arm_length, Branch::Minus);
    let half = Complex64::new(0.5, 0.0);
    let half_i = Complex64::new(0.0, 0.5);
    Ok(MixedBranches {
        plus: [half_i * e_plus, -half * e_minus, s.x, s.y],
        minus: [-half * e_plus, half_i * e_minus, s.z, s.w],
    })
}

/// Detector density matrices for the mixed input, in the spin-z basis.
#[derive(Debug, Clone, PartialEq)]
pub struct MixedDetectors {
    /// Lead-3 beam: maximally mixed for every parameter choice.
    pub rho_d3: SpinDensityMatrix,
    /// Lead-4 beam after post-selection on arrival.
    pub rho_d4: SpinDensityMatrix,
    /// Probability that a collected electron arrived at detector 4.
    pub d4_weight: f64,
}

/// Assemble the per-detector density matrices from the branch vectors.
///
/// Coherences between different leads drop structurally (the transverse
/// confinements of perpendicular leads do not overlap), and the two branch
/// contributions to the lead-3 coherence cancel identically, leaving the
/// maximally mixed state at detector 3. The lead-4 block is renormalized by
/// its trace: polarization there is conditioned on arrival.
pub fn mixed_detector_density(
    p: &SpinOrbitParams,
    branches: &MixedBranches,
) -> Result<MixedDetectors> {
    let half = Complex64::new(0.5, 0.0);

    // lead-3 block in the spin-orbit basis of lead 3
    let mut d3: Matrix2<Complex64> = Matrix2::zeros();
    let mut d4: Matrix2<Complex64> = Matrix2::zeros();
    for v in [&branches.plus, &branches.minus] {
        for i in 0..2 {
            for j in 0..2 {
                d3[(i, j)] += half * v[i] * v[j].conj();
                d4[(i, j)] += half * v[i + 2] * v[j + 2].conj();
            }
        }
    }

    let w3 = d3.trace().re;
    let w4 = d4.trace().re;
    if w4 <= f64::EPSILON {
        return Err(Error::domain(
            "no amplitude reaches detector 4; post-selection undefined".to_string(),
        ));
    }

    // The cross-branch coherences cancel and the diagonal is flat; verify,
    // then return the exact maximally mixed matrix.
    let defect = (d3 - Matrix2::identity() * Complex64::new(w3 / 2.0, 0.0)).norm();
    if defect > 1e-12 {
        return Err(Error::Integrity(format!(
            "lead-3 reduction deviated from the maximally mixed form by {defect:e}"
        )));
    }
    let rho_d3 = SpinDensityMatrix::maximally_mixed();

    let basis = so_to_spin_basis_matrix(p, LeadAxis::X);
    let rho_d4 = SpinDensityMatrix {
        matrix: basis * (d4 / Complex64::new(w4, 0.0)) * basis.adjoint(),
    };

    Ok(MixedDetectors {
        rho_d3,
        rho_d4,
        d4_weight: w4 / (w3 + w4),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scattering::{junction_coefficients, junction_rt_amplitudes};
    use approx::assert_relative_eq;

    fn params() -> SpinOrbitParams {
        SpinOrbitParams::new(0.0027, 0.004, 1.0).unwrap()
    }

    fn state(x: f64, y: f64, z: f64, w: f64) -> TwoParticleState {
        TwoParticleState {
            x: Complex64::new(x, 0.0),
            y: Complex64::new(y, 0.0),
            z: Complex64::new(z, 0.0),
            w: Complex64::new(w, 0.0),
        }
    }

    #[test]
    fn omega_concurrence_bell() {
        let inv = std::f64::consts::FRAC_1_SQRT_2;
        let eta = concurrence_omega(&state(inv, 0.0, 0.0, inv)).unwrap();
        assert_relative_eq!(eta, 1.0, epsilon = 1e-14);
    }

    #[test]
    fn omega_concurrence_product_state() {
        // outer product of (1, 0) and (0.6, 0.8)
        let eta = concurrence_omega(&state(0.6, 0.8, 0.0, 0.0)).unwrap();
        assert!(eta < 1e-14);
    }

    #[test]
    fn omega_block_structure() {
        let m = omega_matrix(&state(0.5, 0.5, 0.5, 0.5)).unwrap();
        for i in 0..4 {
            for j in 0..4 {
                let in_block = i < 2 && j >= 2;
                assert_eq!(m[(i, j)].norm() > 0.0, in_block);
            }
        }
    }

    #[test]
    fn closed_form_matches_omega_along_pipeline() {
        let p = params();
        for eps in [0.0, 0.1, 0.25, 0.4, 0.5] {
            let jc = junction_coefficients(eps).unwrap();
            let rt = junction_rt_amplitudes(&p, 0.2, &jc, 0.1258, 18897.26).unwrap();
            let s = output_amplitudes(&p, 0.2, &jc, 0.1258, 18897.26, 18897.26).unwrap();
            let closed = concurrence_closed(&s, &rt).unwrap();
            let omega = concurrence_omega(&s).unwrap();
            assert_relative_eq!(closed, omega, epsilon = 1e-12);
        }
    }

    #[test]
    fn closed_form_decoupled_is_one() {
        let p = params();
        let jc = junction_coefficients(0.0).unwrap();
        let rt = junction_rt_amplitudes(&p, 0.2, &jc, 0.1258, 18897.26).unwrap();
        let s = output_amplitudes(&p, 0.2, &jc, 0.1258, 18897.26, 18897.26).unwrap();
        assert_relative_eq!(concurrence_closed(&s, &rt).unwrap(), 1.0, epsilon = 1e-12);
    }

    #[test]
    fn linear_entropy_limits() {
        let inv = std::f64::consts::FRAC_1_SQRT_2;
        assert_relative_eq!(
            linear_entropy(&state(inv, 0.0, 0.0, inv)).unwrap(),
            1.0,
            epsilon = 1e-14
        );
        assert!(linear_entropy(&state(0.6, 0.8, 0.0, 0.0)).unwrap() < 1e-14);
    }

    #[test]
    fn linear_entropy_is_squared_concurrence() {
        let p = params();
        for eps in [0.05, 0.2, 0.35, 0.5] {
            let jc = junction_coefficients(eps).unwrap();
            let s = output_amplitudes(&p, 0.2, &jc, 0.1258, 23000.0, 23000.0).unwrap();
            let eta = concurrence_omega(&s).unwrap();
            assert_relative_eq!(linear_entropy(&s).unwrap(), eta * eta, epsilon = 1e-12);
        }
    }

    #[test]
    fn spin_coefficients_uniform_state() {
        let coeffs = spin_basis_coefficients(&state(0.5, 0.5, 0.5, 0.5), &params()).unwrap();
        assert_relative_eq!(coeffs.a.re, 1.0, epsilon = 1e-14);
        assert!(coeffs.b.norm() < 1e-14);
        assert!(coeffs.c.norm() < 1e-14);
        assert!(coeffs.d.norm() < 1e-14);
    }

    #[test]
    fn spin_coefficients_decoupled_arm() {
        let p = params();
        let l = 18897.261246;
        let jc = junction_coefficients(0.0).unwrap();
        let s = output_amplitudes(&p, 0.2, &jc, 0.1258, l, l).unwrap();
        let coeffs = spin_basis_coefficients(&s, &p).unwrap();
        let expect = -(2.0 * p.lambda * l).cos() * std::f64::consts::FRAC_1_SQRT_2;
        assert_relative_eq!(coeffs.a.re, expect, epsilon = 1e-12);
        assert!(coeffs.a.im.abs() < 1e-12);
        assert_relative_eq!(
            coeffs.a.norm_sqr() + coeffs.b.norm_sqr(),
            0.5,
            epsilon = 1e-12
        );
    }

    #[test]
    fn spin_coefficients_match_basis_matrix_route() {
        let p = params();
        let jc = junction_coefficients(0.3).unwrap();
        let s = output_amplitudes(&p, 0.2, &jc, 0.1258, 21000.0, 15000.0).unwrap();
        let n = s.normalized().unwrap();
        let coeffs = spin_basis_coefficients(&s, &p).unwrap();

        let m3 = so_to_spin_basis_matrix(&p, LeadAxis::Y);
        let m4 = so_to_spin_basis_matrix(&p, LeadAxis::X);
        let kron = m3.kronecker(&m4);
        let v = nalgebra::Vector4::new(n.x, n.y, n.z, n.w);
        let spin = kron * v;
        for (got, want) in [coeffs.a, coeffs.b, coeffs.c, coeffs.d].iter().zip(spin.iter()) {
            assert!((got - want).norm() < 1e-12);
        }
    }

    #[test]
    fn polarization_basics() {
        let mm = SpinDensityMatrix::maximally_mixed();
        let p = polarization_of_density(&mm).unwrap();
        assert_eq!((p.x, p.y, p.z), (0.0, 0.0, 0.0));

        let up = SpinDensityMatrix {
            matrix: Matrix2::new(
                Complex64::new(1.0, 0.0),
                Complex64::new(0.0, 0.0),
                Complex64::new(0.0, 0.0),
                Complex64::new(0.0, 0.0),
            ),
        };
        let p = polarization_of_density(&up).unwrap();
        assert_eq!((p.x, p.y, p.z), (0.0, 0.0, 1.0));

        let tilted = SpinDensityMatrix {
            matrix: Matrix2::new(
                Complex64::new(0.5, 0.0),
                Complex64::new(0.15, 0.0),
                Complex64::new(0.15, 0.0),
                Complex64::new(0.5, 0.0),
            ),
        };
        let p = polarization_of_density(&tilted).unwrap();
        assert_relative_eq!(p.x, 0.3, epsilon = 1e-14);
        assert_eq!((p.y, p.z), (0.0, 0.0));
    }

    #[test]
    fn polarization_rejects_non_hermitian() {
        let bad = SpinDensityMatrix {
            matrix: Matrix2::new(
                Complex64::new(0.5, 0.0),
                Complex64::new(0.3, 0.0),
                Complex64::new(0.0, 0.0),
                Complex64::new(0.5, 0.0),
            ),
        };
        assert!(matches!(
            polarization_of_density(&bad),
            Err(Error::Integrity(_))
        ));
    }

    #[test]
    fn detector_polarizations_decoupled_vanish() {
        let p = params();
        let jc = junction_coefficients(0.0).unwrap();
        let s = output_amplitudes(&p, 0.2, &jc, 0.1258, 18897.26, 18897.26).unwrap();
        let coeffs = spin_basis_coefficients(&s, &p).unwrap();
        let (p3, p4) = detector_polarizations(&coeffs).unwrap();
        assert!(p3.magnitude() < 1e-12);
        assert!(p4.magnitude() < 1e-12);
    }

    #[test]
    fn detector_polarizations_match_closed_forms() {
        let p = params();
        let jc = junction_coefficients(0.35).unwrap();
        let s = output_amplitudes(&p, 0.2, &jc, 0.1258, 23435.0, 23435.0).unwrap();
        let coeffs = spin_basis_coefficients(&s, &p).unwrap();
        let (p3, _) = detector_polarizations(&coeffs).unwrap();
        let (a, b, c, d) = (coeffs.a, coeffs.b, coeffs.c, coeffs.d);
        let px = (a * c.conj() + c * a.conj() + b * d.conj() + d * b.conj()).re;
        let py = (Complex64::i() * (a * c.conj() - c * a.conj() + b * d.conj() - d * b.conj())).re;
        let pz = a.norm_sqr() + b.norm_sqr() - c.norm_sqr() - d.norm_sqr();
        assert_relative_eq!(p3.x, px, epsilon = 1e-13);
        assert_relative_eq!(p3.y, py, epsilon = 1e-13);
        assert_relative_eq!(p3.z, pz, epsilon = 1e-13);
    }

    #[test]
    fn detector_magnitudes_agree_and_close_purity() {
        let p = params();
        for eps in [0.1, 0.3, 0.5] {
            let jc = junction_coefficients(eps).unwrap();
            let s = output_amplitudes(&p, 0.2, &jc, 0.1258, 23435.0, 17000.0).unwrap();
            let coeffs = spin_basis_coefficients(&s, &p).unwrap();
            let (p3, p4) = detector_polarizations(&coeffs).unwrap();
            assert_relative_eq!(p3.magnitude(), p4.magnitude(), epsilon = 1e-12);
            let eta = concurrence_omega(&s).unwrap();
            assert_relative_eq!(
                p3.magnitude() * p3.magnitude() + eta * eta,
                1.0,
                epsilon = 1e-10
            );
        }
    }

    #[test]
    fn mixed_branches_unit_norm_when_decoupled() {
        let p = params();
        let jc = junction_coefficients(0.0).unwrap();
        let br = mixed_branch_outputs(&p, 0.2, &jc, 0.1258, 18897.26, 18897.26).unwrap();
        let (np, nm) = br.branch_norms();
        assert_relative_eq!(np, 1.0, epsilon = 1e-12);
        assert_relative_eq!(nm, 1.0, epsilon = 1e-12);
    }

    #[test]
    fn mixed_lead3_components_ignore_reservoir() {
        let p = params();
        let jc1 = junction_coefficients(0.1).unwrap();
        let jc2 = junction_coefficients(0.45).unwrap();
        let b1 = mixed_branch_outputs(&p, 0.2, &jc1, 0.1258, 18897.26, 18897.26).unwrap();
        let b2 = mixed_branch_outputs(&p, 0.2, &jc2, 0.1258, 18897.26, 18897.26).unwrap();
        for k in 0..2 {
            assert_eq!(b1.plus[k], b2.plus[k]);
            assert_eq!(b1.minus[k], b2.minus[k]);
        }
    }

    #[test]
    fn mixed_branch_deficit_tracks_current_sign() {
        let p = params();
        // commensurate geometry: nine precession periods
        let d = 9.0 * 2.0 * std::f64::consts::PI / p.lambda;
        let kv = crate::spin_orbit::channel_wavevectors(&p, 0.2).unwrap();
        let t = crate::units::kelvin_to_au(90.0).unwrap();
        let n = crate::scattering::reservoir_occupation(0.2, 0.2, t, kv.k_bar()).unwrap();
        for eps in [0.1, 0.3, 0.45] {
            let jc = junction_coefficients(eps).unwrap();
            let jd = crate::scattering::decoherence_current(&jc, n, kv.k_bar() * d).unwrap();
            let br = mixed_branch_outputs(&p, 0.2, &jc, n, d, d).unwrap();
            let (np, nm) = br.branch_norms();
            let deficit = 1.0 - (np + nm) / 2.0;
            // positive injected current shows up as excess branch norm
            assert!(deficit * jd <= 1e-12, "eps={eps} jd={jd} deficit={deficit}");
        }
    }

    #[test]
    fn mixed_detector3_exactly_unpolarized() {
        let p = params();
        for eps in [0.0, 0.2, 0.5] {
            let jc = junction_coefficients(eps).unwrap();
            let br = mixed_branch_outputs(&p, 0.2, &jc, 0.1258, 20000.0, 12000.0).unwrap();
            let det = mixed_detector_density(&p, &br).unwrap();
            let pol = polarization_of_density(&det.rho_d3).unwrap();
            assert_eq!((pol.x, pol.y, pol.z), (0.0, 0.0, 0.0));
        }
    }

    #[test]
    fn mixed_detector4_decoupled_is_unpolarized() {
        let p = params();
        let jc = junction_coefficients(0.0).unwrap();
        let br = mixed_branch_outputs(&p, 0.2, &jc, 0.1258, 18897.26, 18897.26).unwrap();
        let det = mixed_detector_density(&p, &br).unwrap();
        let pol = polarization_of_density(&det.rho_d4).unwrap();
        assert!(pol.magnitude() < 1e-12);
        assert_relative_eq!(det.d4_weight, 0.5, epsilon = 1e-12);
    }

    #[test]
    fn mixed_detector4_polarizes_with_coupling() {
        let p = params();
        let d = 9.0 * 2.0 * std::f64::consts::PI / p.lambda;
        let kv = crate::spin_orbit::channel_wavevectors(&p, 0.2).unwrap();
        let t = crate::units::kelvin_to_au(90.0).unwrap();
        let n = crate::scattering::reservoir_occupation(0.2, 0.2, t, kv.k_bar()).unwrap();
        let jc = junction_coefficients(0.3).unwrap();
        let br = mixed_branch_outputs(&p, 0.2, &jc, n, d, d).unwrap();
        let det = mixed_detector_density(&p, &br).unwrap();
        let pol = polarization_of_density(&det.rho_d4).unwrap();
        assert!(pol.z.abs() > 0.01);
    }
}
