//! Numerical model of a four-port electron beam splitter embedded in a
//! Rashba-Dresselhaus spin-orbit medium, with one output arm coupled to an
//! electron reservoir through a three-channel junction.
//!
//! The reservoir acts as a controlled decoherence source: it degrades the
//! entanglement of an injected Bell pair, drives a net current through the
//! junction, and polarizes the outgoing beams. The crate computes the
//! concurrence and linear entropy of the outgoing two-electron state, the
//! decoherence current, and the detector polarizations for both entangled
//! and fully mixed inputs, over linear parameter sweeps emitted as CSV.
//!
//! Everything is evaluated in Hartree atomic units at a single working
//! energy near the reservoir Fermi level; temperatures enter in kelvin and
//! are converted once at the boundary.

pub mod error;
pub mod observables;
pub mod pipeline;
pub mod scattering;
pub mod spin_orbit;
pub mod sweep;
pub mod units;

pub use error::{Error, Result};
pub use observables::{
    concurrence_closed, concurrence_omega, detector_polarizations, linear_entropy,
    mixed_branch_outputs, mixed_detector_density, omega_matrix, polarization_of_density,
    spin_basis_coefficients, MixedBranches, MixedDetectors, PolarizationVector,
    SpinBasisCoefficients, SpinDensityMatrix,
};
pub use pipeline::{evaluate_point, PointObservables};
pub use scattering::{
    beam_splitter_matrix, decoherence_current, decoherence_current_closed, fermi_occupation,
    junction_coefficients, junction_matrix, junction_rt_amplitudes, output_amplitudes,
    reservoir_back_amplitude, reservoir_occupation, scatter_bell, scatter_single, BeamSplitter,
    JunctionAmplitudes, JunctionCoefficients, ReservoirState, TwoParticleState,
};
pub use spin_orbit::{
    channel_wavevectors, dispersion_general, eigenspinor, precession_phase,
    so_to_spin_basis_matrix, Branch, ChannelWavevectors, LeadAxis, SpinOrbitParams, Spinor,
};
pub use sweep::{
    emit_csv, figure_preset, run_sweep, validity_report, SweepKey, SweepRecord, SweepSpec,
    CSV_HEADER,
};
pub use units::{
    au_to_kelvin, kelvin_to_au, length_au_to_m, length_m_to_au, max_single_subband_width,
    parse_config, so_coupling_evm_to_au, InputKind, RunConfig, BOHR_RADIUS_M, MICROMETER_AU,
    SO_COUPLING_AU_PER_EVM, TEMPERATURE_AU_KELVIN,
};
