//! Canonical scalar parameter set shared by the scan engine, the CLI, and
//! the demo front ends.
//!
//! A run is fully specified by Ω3(0), τ0, the dimensionless spectral chirp
//! rate α_s'/τ0², the two detunings, the schedule mode, and the integration
//! settings. The pump amplitude is always derived from Ω3(0), so two- and
//! four-level runs share axes.

use crate::error::Result;
use crate::hamiltonian::{pump_amplitude_for, HamiltonianSpec, Model, PulseSet, SystemParams};
use crate::propagator::{
    final_coherence, DensityMatrix, FinalState, Method, TimeGrid, DEFAULT_N_STEPS,
    DEFAULT_WINDOW_TAUS,
};
use crate::pulse::{ChirpSchedule, ScheduleMode};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SimParams {
    /// Peak effective Rabi frequency Ω3(0) of transform-limited pulses [ω21].
    pub omega3_peak: f64,
    /// Transform-limited duration τ0 [1/ω21].
    pub tau0: f64,
    /// Dimensionless spectral chirp rate α_s'/τ0².
    pub chirp_rate: f64,
    /// Two-photon detuning δ [ω21].
    pub delta: f64,
    /// One-photon detunings [ω21].
    pub delta_s: f64,
    pub delta_as: f64,
    pub mode: ScheduleMode,
    /// Pulse center; `None` puts it at 5τ so the window starts at t = 0.
    pub t_center: Option<f64>,
    /// Half-width of the integration window in units of τ.
    pub window_taus: f64,
    pub n_steps: usize,
    pub method: Method,
}

impl Default for SimParams {
    /// The strong-chirp benchmark operating point.
    fn default() -> Self {
        Self {
            omega3_peak: 5.0,
            tau0: 10.0,
            chirp_rate: -7.5,
            delta: 0.0,
            delta_s: 1.0,
            delta_as: 1.0,
            mode: ScheduleMode::Ccars,
            t_center: None,
            window_taus: DEFAULT_WINDOW_TAUS,
            n_steps: DEFAULT_N_STEPS,
            method: Method::ExpmMidpoint,
        }
    }
}

impl SimParams {
    pub fn spec(&self, model: Model) -> Result<HamiltonianSpec> {
        let alpha_s_spectral = self.chirp_rate * self.tau0 * self.tau0;
        let tau = crate::pulse::chirped_duration(alpha_s_spectral, self.tau0)?;
        let t_center = self.t_center.unwrap_or(5.0 * tau);
        let system = SystemParams::new(self.delta_s, self.delta_as, self.delta);
        let omega_p0 = pump_amplitude_for(self.omega3_peak, self.delta_s)?;
        let pulses = PulseSet::canonical(omega_p0, self.tau0, alpha_s_spectral, t_center, &system)?;
        let schedule = ChirpSchedule::new(self.mode, alpha_s_spectral, self.tau0, t_center)?;
        HamiltonianSpec::new(model, pulses, schedule, system)
    }

    pub fn grid(&self, model: Model) -> Result<TimeGrid> {
        let spec = self.spec(model)?;
        let (a, b) = spec.window(self.window_taus);
        TimeGrid::new(a, b, self.n_steps)
    }

    /// One propagation from the ground state, returning only the final
    /// observables. Scan grid points are exactly this call.
    pub fn run(&self, model: Model) -> Result<FinalState> {
        let spec = self.spec(model)?;
        let (a, b) = spec.window(self.window_taus);
        let grid = TimeGrid::new(a, b, self.n_steps)?;
        let rho0 = DensityMatrix::pure_ground(model);
        final_coherence(&spec, &rho0, &grid, self.method)
    }
}
