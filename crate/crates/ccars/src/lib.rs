//! Simulation of chirped-pulse coherent anti-Stokes Raman scattering
//! control: four-level and super-effective two-level density-matrix
//! dynamics under piecewise-chirped pump/Stokes/probe pulses, dressed-state
//! adiabaticity analysis, and parameter sweeps of the end-of-pulse
//! vibrational coherence.
//!
//! Units: ħ = 1, frequencies in the vibrational splitting ω21, times in
//! 1/ω21.
//!
//! The main entry points are [`params::SimParams`] for single runs,
//! [`scan`] for 2D coherence maps, [`dressed`] for the adiabaticity
//! diagnostics, and [`pulse`] for the chirp relations and Wigner-Ville
//! distributions of the incident fields.

pub mod dressed;
pub mod error;
mod expm;
pub mod hamiltonian;
pub mod params;
pub mod propagator;
pub mod pulse;
pub mod scan;

#[cfg(feature = "cli")]
pub mod cli;

pub use error::{Error, Result};
pub use hamiltonian::{
    peak_effective_rabi, pump_amplitude_for, EffectiveRabi, HamiltonianSpec, Model,
    Omega3Envelope, PulseSet, SystemParams,
};
pub use params::SimParams;
pub use propagator::{
    final_coherence, propagate, DensityMatrix, FinalState, InvariantReport, Method, TimeGrid,
    Trajectory,
};
pub use pulse::{
    chirped_duration, temporal_chirp, ChirpSchedule, PulseParams, PulseRole, ScheduleMode,
    WignerSample,
};
pub use scan::{scan_delta_chirp, scan_rabi_chirp, AxisKind, ScanAxis, ScanResult};
