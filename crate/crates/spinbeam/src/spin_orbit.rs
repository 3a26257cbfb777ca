//! Rashba-Dresselhaus parameterization: dispersion relations, eigenspinors
//! per lead orientation, and spin-precession phases (hbar = 1 throughout).

use nalgebra::Matrix2;
use num_complex::Complex64;

use crate::error::{Error, Result};

/// Spin-orbit couplings together with their derived quantities.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpinOrbitParams {
    /// Rashba coupling (a.u.).
    pub alpha: f64,
    /// Dresselhaus coupling (a.u.).
    pub beta: f64,
    /// Effective mass (a.u.).
    pub mass: f64,
    /// Mixing angle kappa = arctan(beta / alpha).
    pub kappa: f64,
    /// Combined coupling gamma = sqrt(alpha^2 + beta^2).
    pub gamma: f64,
    /// Precession rate Lambda = mass * gamma / 2, phase per unit length.
    pub lambda: f64,
}

impl SpinOrbitParams {
    /// Build parameters; `kappa` is defined as 0 when both couplings vanish
    /// so the device degrades gracefully to a spin-orbit-free splitter.
    pub fn new(alpha: f64, beta: f64, mass: f64) -> Result<Self> {
        if mass <= 0.0 || !mass.is_finite() {
            return Err(Error::domain(format!("mass must be > 0, got {mass}")));
        }
        if !alpha.is_finite() || !beta.is_finite() {
            return Err(Error::domain("couplings must be finite".to_string()));
        }
        let gamma = alpha.hypot(beta);
        let kappa = if gamma == 0.0 { 0.0 } else { beta.atan2(alpha) };
        Ok(SpinOrbitParams {
            alpha,
            beta,
            mass,
            kappa,
            gamma,
            lambda: mass * gamma / 2.0,
        })
    }
}

/// Propagation axis of a lead. Leads 2 and 3 run along y, leads 1 and 4
/// along x; the transverse confinement direction follows from the axis.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LeadAxis {
    X,
    Y,
}

/// Spin-orbit channel label.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    Plus,
    Minus,
}

impl Branch {
    /// +1 for the plus channel, -1 for the minus channel.
    pub fn sign(&self) -> f64 {
        match self {
            Branch::Plus => 1.0,
            Branch::Minus => -1.0,
        }
    }
}

/// A normalized spinor in the spin-z basis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Spinor {
    pub up: Complex64,
    pub down: Complex64,
}

impl Spinor {
    pub fn inner(&self, other: &Spinor) -> Complex64 {
        self.up.conj() * other.up + self.down.conj() * other.down
    }

    pub fn norm_sqr(&self) -> f64 {
        self.up.norm_sqr() + self.down.norm_sqr()
    }
}

/// Channel wavevectors at a fixed energy. The minus channel always carries
/// the larger wavevector; their split is 4 Lambda.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChannelWavevectors {
    pub k_plus: f64,
    pub k_minus: f64,
}

impl ChannelWavevectors {
    /// Mean wavevector (k+ + k-) / 2 = m sqrt(gamma^2 + 2E/m), which also
    /// sets the reservoir wire velocity and junction phase.
    pub fn k_bar(&self) -> f64 {
        0.5 * (self.k_plus + self.k_minus)
    }
}

/// Free-direction dispersion E±(k) for propagation at angle `theta` from
/// the y axis: E± = k^2/2m ± k sqrt(a^2 + b^2 + 4ab sin(theta) cos(theta)).
pub fn dispersion_general(p: &SpinOrbitParams, k: f64, theta: f64) -> (f64, f64) {
    let cross = p.alpha * p.alpha
        + p.beta * p.beta
        + 4.0 * p.alpha * p.beta * theta.sin() * theta.cos();
    // radicand >= (|a| - |b|)^2, never negative for real couplings
    let split = k * cross.max(0.0).sqrt();
    let kinetic = k * k / (2.0 * p.mass);
    (kinetic + split, kinetic - split)
}

/// Wavevectors of the two spin-orbit channels at energy `e`:
/// k± = m (sqrt(gamma^2 + 2E/m) ∓ gamma).
pub fn channel_wavevectors(p: &SpinOrbitParams, e: f64) -> Result<ChannelWavevectors> {
    if e <= 0.0 || !e.is_finite() {
        return Err(Error::domain(format!("energy must be > 0, got {e}")));
    }
    let root = (p.gamma * p.gamma + 2.0 * e / p.mass).sqrt();
    Ok(ChannelWavevectors {
        k_plus: p.mass * (root - p.gamma),
        k_minus: p.mass * (root + p.gamma),
    })
}

/// Channel eigenspinor for a lead running along `axis`.
///
/// y leads: (1, ∓ e^{-i kappa}) / sqrt(2); x leads: (1, ± i e^{i kappa}) / sqrt(2).
pub fn eigenspinor(p: &SpinOrbitParams, axis: LeadAxis, branch: Branch) -> Spinor {
    let inv_sqrt2 = std::f64::consts::FRAC_1_SQRT_2;
    let s = branch.sign();
    let down = match axis {
        LeadAxis::Y => -s * Complex64::from_polar(1.0, -p.kappa),
        LeadAxis::X => s * Complex64::i() * Complex64::from_polar(1.0, p.kappa),
    };
    Spinor {
        up: Complex64::new(inv_sqrt2, 0.0),
        down: down * inv_sqrt2,
    }
}

/// Unitary change of basis from spin-orbit channel coefficients to spin-z
/// coefficients; columns are the plus and minus eigenspinors of `axis`.
pub fn so_to_spin_basis_matrix(p: &SpinOrbitParams, axis: LeadAxis) -> Matrix2<Complex64> {
    let plus = eigenspinor(p, axis, Branch::Plus);
    let minus = eigenspinor(p, axis, Branch::Minus);
    Matrix2::new(plus.up, minus.up, plus.down, minus.down)
}

/// Spin-precession phase e^{± i Lambda l} accumulated over a distance `length`.
pub fn precession_phase(p: &SpinOrbitParams, length: f64, branch: Branch) -> Complex64 {
    Complex64::from_polar(1.0, branch.sign() * p.lambda * length)
}
