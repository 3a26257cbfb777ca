//! The four-port beam splitter, the reservoir junction on lead 4, and the
//! composite two-particle output amplitudes.
//!
//! Channel ordering conventions: incoming states over (1+, 1-, 2+, 2-),
//! outgoing states over (3+, 3-, 4+, 4-). Two-particle amplitudes X, Y, Z, W
//! multiply a3+ a4+, a3+ a4-, a3- a4+ and a3- a4- respectively.

use nalgebra::{Matrix3, Matrix4};
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::spin_orbit::{channel_wavevectors, Branch, SpinOrbitParams};

const FRAC_1_SQRT_2: f64 = std::f64::consts::FRAC_1_SQRT_2;

/// Beam splitter amplitudes. Unitarity of the four-port matrix requires
/// |r|^2 + |t|^2 = 1 together with a pi/2 phase between r and t
/// (Re(r conj(t)) = 0); both are enforced at construction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BeamSplitter {
    pub r: Complex64,
    pub t: Complex64,
    /// Incidence-angle parameter controlling the spin mixing on reflection.
    pub vartheta: f64,
}

impl BeamSplitter {
    pub fn new(r: Complex64, t: Complex64, vartheta: f64) -> Result<Self> {
        let norm = r.norm_sqr() + t.norm_sqr();
        if (norm - 1.0).abs() > 1e-10 {
            return Err(Error::domain(format!(
                "|r|^2 + |t|^2 must equal 1, got {norm}"
            )));
        }
        if (r * t.conj()).re.abs() > 1e-10 {
            return Err(Error::domain(
                "r and t must differ by a pi/2 phase for a unitary splitter".to_string(),
            ));
        }
        Ok(BeamSplitter { r, t, vartheta })
    }

    /// The 50-50 splitter at incidence pi/4 used throughout: r = i/sqrt(2),
    /// t = 1/sqrt(2). This phase choice reproduces the single-electron
    /// scattering amplitudes (i/2, -1/2, 1/sqrt(2), 0) for a 1+ input.
    pub fn fifty_fifty() -> Self {
        BeamSplitter {
            r: Complex64::new(0.0, FRAC_1_SQRT_2),
            t: Complex64::new(FRAC_1_SQRT_2, 0.0),
            vartheta: std::f64::consts::FRAC_PI_4,
        }
    }
}

/// Assemble the four-port scattering matrix, rows over outputs
/// (3+, 3-, 4+, 4-), columns over inputs (1+, 1-, 2+, 2-).
pub fn beam_splitter_matrix(bs: &BeamSplitter) -> Matrix4<Complex64> {
    let zero = Complex64::new(0.0, 0.0);
    let rc = bs.r * bs.vartheta.cos();
    let irs = Complex64::i() * bs.r * bs.vartheta.sin();
    let t = bs.t;
    Matrix4::new(
        rc, irs, t, zero, //
        irs, rc, zero, t, //
        t, zero, rc, -irs, //
        zero, t, -irs, rc,
    )
}

/// Two-particle amplitudes over the spin-orbit product basis
/// {a3+ a4+, a3+ a4-, a3- a4+, a3- a4-}.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TwoParticleState {
    pub x: Complex64,
    pub y: Complex64,
    pub z: Complex64,
    pub w: Complex64,
}

impl TwoParticleState {
    pub fn amplitudes(&self) -> [Complex64; 4] {
        [self.x, self.y, self.z, self.w]
    }

    /// |X|^2 + |Y|^2 + |Z|^2 + |W|^2. Equals 1 for a decoupled reservoir
    /// and moves away from 1 with the decoherence current.
    pub fn norm_sqr(&self) -> f64 {
        self.amplitudes().iter().map(|a| a.norm_sqr()).sum()
    }

    pub fn normalized(&self) -> Result<TwoParticleState> {
        let n = self.norm_sqr();
        if n <= 0.0 {
            return Err(Error::domain("cannot normalize a null state".to_string()));
        }
        let s = 1.0 / n.sqrt();
        Ok(TwoParticleState {
            x: self.x * s,
            y: self.y * s,
            z: self.z * s,
            w: self.w * s,
        })
    }
}

/// Scatter the entangled pair (a1+ a2+ + a1- a2-)/sqrt(2) through the
/// splitter. Amplitudes that put both electrons in the same output arm
/// cancel pairwise under fermionic antisymmetry; the residual is checked
/// and the cross-arm amplitudes are returned.
pub fn scatter_bell(bs: &BeamSplitter) -> Result<TwoParticleState> {
    let s = beam_splitter_matrix(bs);
    // canonical ordered amplitudes over output mode pairs i < j
    let mut pair = [[Complex64::new(0.0, 0.0); 4]; 4];
    let weight = Complex64::new(FRAC_1_SQRT_2, 0.0);
    for (p, q) in [(0usize, 2usize), (1usize, 3usize)] {
        for i in 0..4 {
            for j in 0..4 {
                if i == j {
                    continue; // Pauli exclusion
                }
                let amp = weight * s[(i, p)] * s[(j, q)];
                if i < j {
                    pair[i][j] += amp;
                } else {
                    pair[j][i] -= amp;
                }
            }
        }
    }
    let same_arm = pair[0][1].norm() + pair[2][3].norm();
    if same_arm > 1e-10 {
        return Err(Error::Integrity(format!(
            "same-arm amplitudes failed to cancel (residual {same_arm:e})"
        )));
    }
    Ok(TwoParticleState {
        x: pair[0][2],
        y: pair[0][3],
        z: pair[1][2],
        w: pair[1][3],
    })
}

/// Scatter a single electron entering from lead 1 in the given channel;
/// returns its amplitudes over (3+, 3-, 4+, 4-).
pub fn scatter_single(bs: &BeamSplitter, branch: Branch) -> [Complex64; 4] {
    let s = beam_splitter_matrix(bs);
    let col = match branch {
        Branch::Plus => 0,
        Branch::Minus => 1,
    };
    [s[(0, col)], s[(1, col)], s[(2, col)], s[(3, col)]]
}

/// Reservoir junction coefficients: a = (sqrt(1-2e) - 1)/2 and
/// b = (sqrt(1-2e) + 1)/2, so that b - a = 1 and a^2 + b^2 + e = 1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JunctionCoefficients {
    pub a: f64,
    pub b: f64,
    pub epsilon: f64,
}

/// Build the junction coefficients for a coupling in [0, 1/2]; 1/2 is the
/// maximum coupling of the reservoir to the lead, 0 the decoupled limit.
pub fn junction_coefficients(epsilon: f64) -> Result<JunctionCoefficients> {
    if !(0.0..=0.5).contains(&epsilon) {
        return Err(Error::domain(format!(
            "epsilon must lie in [0, 0.5], got {epsilon}"
        )));
    }
    let s = (1.0 - 2.0 * epsilon).sqrt();
    Ok(JunctionCoefficients {
        a: (s - 1.0) / 2.0,
        b: (s + 1.0) / 2.0,
        epsilon,
    })
}

/// The 3x3 scattering matrix at the junction; channel 0 is the reservoir
/// wire, channels 1 and 2 the two directions of lead 4.
pub fn junction_matrix(jc: &JunctionCoefficients) -> Matrix3<f64> {
    let se = jc.epsilon.sqrt();
    Matrix3::new(
        -(jc.a + jc.b), se, se, //
        se, jc.a, jc.b, //
        se, jc.b, jc.a,
    )
}

/// Fermi occupation at energy `e` for a reservoir with Fermi level `e_f`
/// and temperature `t_au` (atomic units). The zero-temperature limit is the
/// step function with value 1/2 exactly at the Fermi level.
pub fn fermi_occupation(e: f64, e_f: f64, t_au: f64) -> f64 {
    if t_au == 0.0 {
        return match e.partial_cmp(&e_f) {
            Some(std::cmp::Ordering::Less) => 1.0,
            Some(std::cmp::Ordering::Equal) => 0.5,
            _ => 0.0,
        };
    }
    1.0 / (((e - e_f) / t_au).exp() + 1.0)
}

/// Occupation-flux factor N = f(E) / (2 pi v) of the reservoir wire
/// (e = hbar = 1), with `velocity` the wire group velocity.
pub fn reservoir_occupation(e: f64, e_f: f64, t_au: f64, velocity: f64) -> Result<f64> {
    if velocity <= 0.0 || !velocity.is_finite() {
        return Err(Error::domain(format!(
            "wire velocity must be > 0, got {velocity}"
        )));
    }
    if t_au < 0.0 {
        return Err(Error::domain(format!(
            "temperature must be >= 0 a.u., got {t_au}"
        )));
    }
    Ok(fermi_occupation(e, e_f, t_au) / (2.0 * std::f64::consts::PI * velocity))
}

/// Amplitude reflected back into the reservoir wire:
/// C = -(a + b) + sqrt(epsilon / N) e^{i phase}.
pub fn reservoir_back_amplitude(
    jc: &JunctionCoefficients,
    n_occ: f64,
    phase: f64,
) -> Result<Complex64> {
    if n_occ <= 0.0 || !n_occ.is_finite() {
        return Err(Error::domain(format!(
            "reservoir occupation must be > 0 to determine the back amplitude, got {n_occ}"
        )));
    }
    let injected = (jc.epsilon / n_occ).sqrt();
    Ok(Complex64::new(-(jc.a + jc.b), 0.0) + Complex64::from_polar(injected, phase))
}

/// Net current along the reservoir wire, j_d = N (1 - |C|^2). Positive when
/// the reservoir injects into the device, negative when it drains.
pub fn decoherence_current(jc: &JunctionCoefficients, n_occ: f64, phase: f64) -> Result<f64> {
    let c = reservoir_back_amplitude(jc, n_occ, phase)?;
    Ok(n_occ * (1.0 - c.norm_sqr()))
}

/// The same current evaluated from the junction balance equation,
/// j_d = 2 sqrt(N e (1 - 2e)) cos(phase) - e (1 - 2N). Agrees with
/// [`decoherence_current`] to floating-point accuracy; kept as an
/// independent route for cross-checks.
pub fn decoherence_current_closed(jc: &JunctionCoefficients, n_occ: f64, phase: f64) -> f64 {
    let e = jc.epsilon;
    2.0 * (n_occ * e * (1.0 - 2.0 * e)).sqrt() * phase.cos() - e * (1.0 - 2.0 * n_occ)
}

/// Reservoir wire state at a fixed working energy.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReservoirState {
    /// Occupation-flux factor N.
    pub n_occ: f64,
    /// Back-reflected amplitude C.
    pub back_amplitude: Complex64,
    /// Decoherence current j_d = N (1 - |C|^2).
    pub current: f64,
    /// Orbital phase k_bar * d at the junction.
    pub phase: f64,
}

impl ReservoirState {
    pub fn new(jc: &JunctionCoefficients, n_occ: f64, phase: f64) -> Result<Self> {
        let back_amplitude = reservoir_back_amplitude(jc, n_occ, phase)?;
        Ok(ReservoirState {
            n_occ,
            back_amplitude,
            current: n_occ * (1.0 - back_amplitude.norm_sqr()),
            phase,
        })
    }
}

/// Channel-resolved electron reflection and transmission amplitudes at the
/// reservoir junction, with the junction a distance `d` from the splitter.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JunctionAmplitudes {
    pub r_plus: Complex64,
    pub r_minus: Complex64,
    pub t_plus: Complex64,
    pub t_minus: Complex64,
}

impl JunctionAmplitudes {
    /// t+ + r+, the channel-plus combination entering the output amplitudes.
    pub fn sum_plus(&self) -> Complex64 {
        self.t_plus + self.r_plus
    }

    /// t- + r-.
    pub fn sum_minus(&self) -> Complex64 {
        self.t_minus + self.r_minus
    }
}

/// r± = sqrt(N e) e^{∓ i Lambda d} e^{-i k± d} + a and t± = (same) + b.
/// The identity t± - r± = 1 holds by construction.
pub fn junction_rt_amplitudes(
    p: &SpinOrbitParams,
    energy: f64,
    jc: &JunctionCoefficients,
    n_occ: f64,
    junction_distance: f64,
) -> Result<JunctionAmplitudes> {
    if junction_distance < 0.0 {
        return Err(Error::domain(format!(
            "junction distance must be >= 0, got {junction_distance}"
        )));
    }
    if n_occ < 0.0 || !n_occ.is_finite() {
        return Err(Error::domain(format!(
            "reservoir occupation must be >= 0, got {n_occ}"
        )));
    }
    let kv = channel_wavevectors(p, energy)?;
    let amp = (n_occ * jc.epsilon).sqrt();
    let d = junction_distance;
    let base_plus = Complex64::from_polar(amp, -p.lambda * d - kv.k_plus * d);
    let base_minus = Complex64::from_polar(amp, p.lambda * d - kv.k_minus * d);
    Ok(JunctionAmplitudes {
        r_plus: base_plus + jc.a,
        r_minus: base_minus + jc.a,
        t_plus: base_plus + jc.b,
        t_minus: base_minus + jc.b,
    })
}

/// Output amplitudes of the entangled pair after splitter, arm propagation
/// over `arm_length`, and the junction collision at `junction_distance`:
///
/// X = -e^{2 i Lambda L} (t+ + r+ + 1) / (2 sqrt(2)),
/// Y = -(t+ + r+ - 1) / (2 sqrt(2)),
/// Z = -(t- + r- - 1) / (2 sqrt(2)),
/// W = -e^{-2 i Lambda L} (t- + r- + 1) / (2 sqrt(2)),
///
/// with the stretch between junction and detector contributing the free
/// precession e^{± i Lambda (L - d)} on the a4± amplitudes.
pub fn output_amplitudes(
    p: &SpinOrbitParams,
    energy: f64,
    jc: &JunctionCoefficients,
    n_occ: f64,
    arm_length: f64,
    junction_distance: f64,
) -> Result<TwoParticleState> {
    if junction_distance < 0.0 || arm_length < junction_distance {
        return Err(Error::domain(format!(
            "lengths must satisfy arm >= junction >= 0, got arm {arm_length} and junction {junction_distance}"
        )));
    }
    let rt = junction_rt_amplitudes(p, energy, jc, n_occ, junction_distance)?;
    let c = -0.5 * FRAC_1_SQRT_2;
    let arm = Complex64::from_polar(1.0, 2.0 * p.lambda * arm_length);
    let tail = Complex64::from_polar(1.0, p.lambda * (arm_length - junction_distance));
    let one = Complex64::new(1.0, 0.0);
    Ok(TwoParticleState {
        x: c * arm * (rt.sum_plus() + one) * tail,
        y: c * (rt.sum_plus() - one) * tail.conj(),
        z: c * (rt.sum_minus() - one) * tail,
        w: c * arm.conj() * (rt.sum_minus() + one) * tail.conj(),
    })
}
