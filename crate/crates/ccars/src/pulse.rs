//! Chirped Gaussian pulses and the piecewise chirp schedule.
//!
//! All frequencies are in units of the vibrational splitting ω21, times in
//! 1/ω21. A pulse is parametrized by its transform-limited duration `tau0`
//! and spectral chirp rate `alpha'`; the temporal chirp rate and the
//! stretched duration follow from those two. Chirping conserves pulse
//! energy: the peak amplitude drops by (1 + α'²/τ0⁴)^(-1/4) while the
//! duration grows by the square of that factor.
//!
//! The control scheme fixes the chirps of the three incoming pulses
//! relative to the Stokes chirp. The pump chirp flips sign at the pulse
//! center and the probe chirp is always the difference α_pr = α_s − α_p,
//! so the probe condition holds by construction.

use crate::error::{Error, Result};

/// Which field a pulse describes. The anti-Stokes field is generated by the
/// process, so it starts with zero amplitude and carries no chirp policy.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PulseRole {
    Pump,
    Stokes,
    Probe,
    AntiStokes,
}

impl PulseRole {
    pub fn label(self) -> &'static str {
        match self {
            PulseRole::Pump => "pump",
            PulseRole::Stokes => "stokes",
            PulseRole::Probe => "probe",
            PulseRole::AntiStokes => "antistokes",
        }
    }
}

/// Temporal chirp rate α = α' / (τ0⁴ + α'²) for spectral chirp `alpha_spectral`
/// and transform-limited duration `tau0`.
///
/// Together with [`chirped_duration`] this satisfies α·τ² = α'/τ0². The
/// temporal rate is maximal (1/2τ0²) at α' = τ0² and decays for larger
/// spectral chirps.
pub fn temporal_chirp(alpha_spectral: f64, tau0: f64) -> Result<f64> {
    check_tau0(tau0)?;
    Ok(alpha_spectral / (tau0.powi(4) + alpha_spectral * alpha_spectral))
}

/// Chirp-stretched duration τ = τ0·√(1 + α'²/τ0⁴).
pub fn chirped_duration(alpha_spectral: f64, tau0: f64) -> Result<f64> {
    check_tau0(tau0)?;
    Ok(tau0 * (1.0 + (alpha_spectral / (tau0 * tau0)).powi(2)).sqrt())
}

fn check_tau0(tau0: f64) -> Result<()> {
    if tau0 > 0.0 && tau0.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!(
            "transform-limited duration must be positive, got {tau0}"
        )))
    }
}

/// One chirped Gaussian pulse.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PulseParams {
    pub role: PulseRole,
    /// Carrier frequency ω_q [ω21].
    pub omega: f64,
    /// Transform-limited peak Rabi amplitude Ω_q0 [ω21].
    pub rabi_peak_tl: f64,
    /// Transform-limited duration τ0 [1/ω21].
    pub tau0: f64,
    /// Spectral chirp rate α'_q [1/ω21²]. Only its square enters the
    /// envelope; the sign matters for the instantaneous frequency.
    pub spectral_chirp: f64,
    /// Pulse center t_c [1/ω21].
    pub t_center: f64,
}

impl PulseParams {
    pub fn new(
        role: PulseRole,
        omega: f64,
        rabi_peak_tl: f64,
        tau0: f64,
        spectral_chirp: f64,
        t_center: f64,
    ) -> Result<Self> {
        check_tau0(tau0)?;
        if !(rabi_peak_tl >= 0.0) {
            return Err(Error::InvalidParameter(format!(
                "peak Rabi amplitude must be non-negative, got {rabi_peak_tl}"
            )));
        }
        if role == PulseRole::AntiStokes && rabi_peak_tl != 0.0 {
            return Err(Error::InvalidParameter(
                "the anti-Stokes field is generated, not incident; its amplitude must be zero"
                    .into(),
            ));
        }
        Ok(Self {
            role,
            omega,
            rabi_peak_tl,
            tau0,
            spectral_chirp,
            t_center,
        })
    }

    /// Build a pulse from its *chirped* duration and *temporal* chirp rate,
    /// solving for the transform-limited duration and spectral chirp. Every
    /// (τ > 0, α) pair is reachable: τ0² = τ²/(1 + α²τ⁴), α' = α·τ²·τ0².
    pub fn from_chirped_duration(
        role: PulseRole,
        omega: f64,
        rabi_peak_tl: f64,
        tau: f64,
        alpha_temporal: f64,
        t_center: f64,
    ) -> Result<Self> {
        if !(tau > 0.0 && tau.is_finite()) {
            return Err(Error::InvalidParameter(format!(
                "chirped duration must be positive, got {tau}"
            )));
        }
        let tau0_sq = tau * tau / (1.0 + (alpha_temporal * tau * tau).powi(2));
        let tau0 = tau0_sq.sqrt();
        let spectral = alpha_temporal * tau * tau * tau0_sq;
        Self::new(role, omega, rabi_peak_tl, tau0, spectral, t_center)
    }

    /// Chirped duration τ ≥ τ0 of this pulse.
    pub fn tau(&self) -> f64 {
        chirped_duration(self.spectral_chirp, self.tau0).expect("tau0 validated at construction")
    }

    /// Temporal chirp rate implied by this pulse's own spectral chirp.
    pub fn temporal_chirp(&self) -> f64 {
        temporal_chirp(self.spectral_chirp, self.tau0).expect("tau0 validated at construction")
    }

    /// Peak-amplitude reduction factor (1 + α'²/τ0⁴)^(-1/4) from chirping.
    pub fn chirp_reduction(&self) -> f64 {
        (1.0 + (self.spectral_chirp / (self.tau0 * self.tau0)).powi(2)).powf(-0.25)
    }

    /// Rabi-amplitude envelope Ω_q0·(1+α'²/τ0⁴)^(-1/4)·exp(−(t−t_c)²/2τ²).
    pub fn envelope_at(&self, t: f64) -> f64 {
        let tau = self.tau();
        let dt = t - self.t_center;
        self.rabi_peak_tl * self.chirp_reduction() * (-dt * dt / (2.0 * tau * tau)).exp()
    }
}

/// Chirp-schedule presets. All of them keep the Stokes chirp constant and
/// derive the probe chirp structurally from α_pr = α_s − α_p.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ScheduleMode {
    /// Pump chirped opposite to the Stokes before the pulse center, equal
    /// after: the detuning sweep stops at t_c and the probe chirp turns off.
    Ccars,
    /// Pump chirped opposite to the Stokes throughout; the sweep continues
    /// through the full pulse and drives complete population transfer.
    ConstantOpposite,
    /// Pump co-chirped with the Stokes throughout; no detuning sweep at all.
    Constant,
    /// Pump chirp as an explicit multiple of the Stokes chirp on each side
    /// of t_c: α_p = factor·α_s.
    Custom {
        pump_factor_before: f64,
        pump_factor_after: f64,
    },
}

impl ScheduleMode {
    fn pump_factors(self) -> (f64, f64) {
        match self {
            ScheduleMode::Ccars => (-1.0, 1.0),
            ScheduleMode::ConstantOpposite => (-1.0, -1.0),
            ScheduleMode::Constant => (1.0, 1.0),
            ScheduleMode::Custom {
                pump_factor_before,
                pump_factor_after,
            } => (pump_factor_before, pump_factor_after),
        }
    }
}

/// Piecewise temporal-chirp policy for the three incident pulses.
///
/// The switch at exactly t = t_c belongs to the "before" branch.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChirpSchedule {
    pub mode: ScheduleMode,
    /// Stokes spectral chirp α'_s [1/ω21²].
    pub alpha_s_spectral: f64,
    /// Shared transform-limited duration τ0 [1/ω21].
    pub tau0: f64,
    /// Switch time t_c [1/ω21].
    pub t_center: f64,
}

impl ChirpSchedule {
    pub fn new(mode: ScheduleMode, alpha_s_spectral: f64, tau0: f64, t_center: f64) -> Result<Self> {
        check_tau0(tau0)?;
        Ok(Self {
            mode,
            alpha_s_spectral,
            tau0,
            t_center,
        })
    }

    /// Constant Stokes temporal chirp rate α_s.
    pub fn alpha_s_temporal(&self) -> f64 {
        temporal_chirp(self.alpha_s_spectral, self.tau0).expect("tau0 validated at construction")
    }

    /// Instantaneous temporal chirp α_q(t) of one incident pulse.
    pub fn instantaneous_chirp(&self, role: PulseRole, t: f64) -> Result<f64> {
        let alpha_s = self.alpha_s_temporal();
        let (before, after) = self.mode.pump_factors();
        let factor = if t <= self.t_center { before } else { after };
        match role {
            PulseRole::Pump => Ok(factor * alpha_s),
            PulseRole::Stokes => Ok(alpha_s),
            PulseRole::Probe => Ok(alpha_s - factor * alpha_s),
            PulseRole::AntiStokes => Err(Error::InvalidParameter(
                "no chirp is defined for the generated anti-Stokes field".into(),
            )),
        }
    }

    /// α_s(t) − α_p(t): both the probe chirp and the rate of the two-photon
    /// detuning sweep in the effective two-level Hamiltonian. Exactly zero
    /// after t_c in `Ccars` mode.
    pub fn sweep_rate(&self, t: f64) -> f64 {
        let alpha_s = self.alpha_s_temporal();
        let (before, after) = self.mode.pump_factors();
        let factor = if t <= self.t_center { before } else { after };
        alpha_s - factor * alpha_s
    }
}

/// One sample of the Wigner-Ville distribution of a pulse.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WignerSample {
    pub t: f64,
    pub omega: f64,
    pub value: f64,
}

/// Wigner-Ville distribution of a chirped Gaussian field at (t, ω), using the
/// pulse's own constant temporal chirp. The amplitude scale is the pulse's
/// peak Rabi amplitude (unit dipole); only the relative structure is
/// meaningful.
pub fn wigner_value(p: &PulseParams, t: f64, omega: f64) -> f64 {
    wigner_value_with_chirp(p, p.temporal_chirp(), t, omega)
}

/// Wigner-Ville distribution with an externally supplied temporal chirp, for
/// pulses whose chirp follows a piecewise schedule rather than their own
/// spectral chirp. The closed form is a Gaussian ridge along
/// ω = ω_q + α(t−t_c) plus its negative-frequency mirror:
///
/// (τ√π/2)·E0·e^{−(t−t_c)²/τ²}·[e^{−τ²(ω−ω_q−α·Δt)²} + e^{−τ²(ω+ω_q+α·Δt)²}]
pub fn wigner_value_with_chirp(p: &PulseParams, alpha_temporal: f64, t: f64, omega: f64) -> f64 {
    let tau = p.tau();
    let dt = t - p.t_center;
    let ridge = p.omega + alpha_temporal * dt;
    let prefactor = 0.5 * tau * std::f64::consts::PI.sqrt() * p.rabi_peak_tl;
    let envelope = (-dt * dt / (tau * tau)).exp();
    let positive = (-(tau * tau) * (omega - ridge) * (omega - ridge)).exp();
    let negative = (-(tau * tau) * (omega + ridge) * (omega + ridge)).exp();
    prefactor * envelope * (positive + negative)
}

/// Wigner-Ville distribution resolving the pulse's instantaneous chirp from a
/// schedule, so roof-shaped (sign-flipping) chirps produce a kinked ridge.
pub fn wigner_value_scheduled(
    p: &PulseParams,
    schedule: &ChirpSchedule,
    t: f64,
    omega: f64,
) -> Result<f64> {
    let alpha = schedule.instantaneous_chirp(p.role, t)?;
    Ok(wigner_value_with_chirp(p, alpha, t, omega))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::{assert_abs_diff_eq, assert_relative_eq};

    #[test]
    fn temporal_chirp_zero_is_zero() {
        assert_eq!(temporal_chirp(0.0, 10.0).unwrap(), 0.0);
    }

    #[test]
    fn temporal_chirp_direct_evaluation() {
        // α' = τ0² sits at the maximum of α over α'.
        let tau0 = 7.3;
        let alpha = temporal_chirp(tau0 * tau0, tau0).unwrap();
        assert_relative_eq!(alpha, 1.0 / (2.0 * tau0 * tau0), max_relative = 1e-15);

        // The operating point of the strong-chirp trajectory runs.
        let alpha = temporal_chirp(-750.0, 10.0).unwrap();
        assert_relative_eq!(alpha, -750.0 / (1.0e4 + 750.0 * 750.0), max_relative = 1e-15);
        assert_abs_diff_eq!(alpha, -1.3100436681222707e-3, epsilon = 1e-18);
    }

    #[test]
    fn temporal_chirp_maximal_at_tau0_squared() {
        let tau0 = 4.66;
        let max = temporal_chirp(tau0 * tau0, tau0).unwrap();
        for k in 1..200 {
            let alpha_spectral = -3.0 * tau0 * tau0 + 0.03 * k as f64 * tau0 * tau0;
            assert!(temporal_chirp(alpha_spectral, tau0).unwrap() <= max + 1e-18);
        }
    }

    #[test]
    fn non_positive_tau0_rejected() {
        assert!(matches!(
            temporal_chirp(1.0, 0.0),
            Err(Error::InvalidParameter(_))
        ));
        assert!(matches!(
            chirped_duration(1.0, -2.0),
            Err(Error::InvalidParameter(_))
        ));
    }

    #[test]
    fn chirped_duration_values() {
        assert_eq!(chirped_duration(0.0, 10.0).unwrap(), 10.0);
        assert_relative_eq!(
            chirped_duration(-750.0, 10.0).unwrap(),
            10.0 * (1.0_f64 + 7.5 * 7.5).sqrt(),
            max_relative = 1e-15
        );
        let tau0 = 3.21;
        assert_relative_eq!(
            chirped_duration(tau0 * tau0, tau0).unwrap(),
            tau0 * 2.0_f64.sqrt(),
            max_relative = 1e-15
        );
    }

    #[test]
    fn chirp_identity_alpha_tau_sq() {
        // α·τ² = α'/τ0², the cross-check that pins the temporal-chirp formula.
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            (state >> 11) as f64 / (1u64 << 53) as f64
        };
        for _ in 0..1000 {
            let tau0 = 0.5 + 30.0 * next();
            let alpha_spectral = (next() - 0.5) * 20.0 * tau0 * tau0;
            let alpha = temporal_chirp(alpha_spectral, tau0).unwrap();
            let tau = chirped_duration(alpha_spectral, tau0).unwrap();
            assert_relative_eq!(
                alpha * tau * tau,
                alpha_spectral / (tau0 * tau0),
                max_relative = 1e-12,
                epsilon = 1e-300
            );
        }
    }

    fn pulse(alpha_spectral: f64) -> PulseParams {
        PulseParams::new(PulseRole::Pump, 4.0, 2.5, 10.0, alpha_spectral, 50.0).unwrap()
    }

    #[test]
    fn envelope_peak_and_symmetry() {
        let tl = pulse(0.0);
        assert_relative_eq!(tl.envelope_at(50.0), 2.5, max_relative = 1e-15);

        let chirped = pulse(-750.0);
        let reduction = (1.0_f64 + 56.25).powf(-0.25);
        assert_relative_eq!(chirped.envelope_at(50.0), 2.5 * reduction, max_relative = 1e-14);

        for dt in [0.7, 13.0, 111.0] {
            assert_eq!(chirped.envelope_at(50.0 + dt), chirped.envelope_at(50.0 - dt));
        }
    }

    #[test]
    fn envelope_gaussian_tail() {
        let p = pulse(-750.0);
        let tau = p.tau();
        assert!(p.envelope_at(50.0 + 10.0 * tau) < 1e-21 * p.rabi_peak_tl);
        assert!(p.envelope_at(50.0 - 10.0 * tau) < 1e-21 * p.rabi_peak_tl);
    }

    #[test]
    fn envelope_energy_independent_of_chirp() {
        // ∫Ω(t)² dt = Ω0²·τ0·√π regardless of chirp: the squared amplitude
        // reduction cancels the duration stretch.
        let expected = 2.5 * 2.5 * 10.0 * std::f64::consts::PI.sqrt();
        for alpha_spectral in [0.0, -120.0, -750.0, 430.0] {
            let p = pulse(alpha_spectral);
            let tau = p.tau();
            let (a, b) = (50.0 - 12.0 * tau, 50.0 + 12.0 * tau);
            let n = 200_000;
            let h = (b - a) / n as f64;
            let mut sum = 0.5 * (p.envelope_at(a).powi(2) + p.envelope_at(b).powi(2));
            for k in 1..n {
                sum += p.envelope_at(a + k as f64 * h).powi(2);
            }
            assert_relative_eq!(sum * h, expected, max_relative = 1e-9);
        }
    }

    #[test]
    fn antistokes_must_have_zero_amplitude() {
        assert!(PulseParams::new(PulseRole::AntiStokes, 5.0, 0.1, 10.0, 0.0, 0.0).is_err());
        assert!(PulseParams::new(PulseRole::AntiStokes, 5.0, 0.0, 10.0, 0.0, 0.0).is_ok());
    }

    #[test]
    fn from_chirped_duration_round_trips() {
        let p = PulseParams::from_chirped_duration(PulseRole::Stokes, 3.0, 1.0, 3.0, -0.2, 7.5)
            .unwrap();
        assert_relative_eq!(p.tau(), 3.0, max_relative = 1e-14);
        assert_relative_eq!(p.temporal_chirp(), -0.2, max_relative = 1e-14);
    }

    fn schedule(mode: ScheduleMode) -> ChirpSchedule {
        ChirpSchedule::new(mode, -750.0, 10.0, 378.3).unwrap()
    }

    #[test]
    fn ccars_pump_sign_flip() {
        let s = schedule(ScheduleMode::Ccars);
        let alpha_s = s.alpha_s_temporal();
        let tc = s.t_center;
        let eps = 1e-9;
        assert_eq!(s.instantaneous_chirp(PulseRole::Pump, tc - eps).unwrap(), -alpha_s);
        // The switch itself belongs to the "before" branch.
        assert_eq!(s.instantaneous_chirp(PulseRole::Pump, tc).unwrap(), -alpha_s);
        assert_eq!(s.instantaneous_chirp(PulseRole::Pump, tc + eps).unwrap(), alpha_s);
        assert_eq!(s.instantaneous_chirp(PulseRole::Probe, tc + eps).unwrap(), 0.0);
        assert_eq!(s.instantaneous_chirp(PulseRole::Probe, tc - eps).unwrap(), 2.0 * alpha_s);
        assert_eq!(s.instantaneous_chirp(PulseRole::Stokes, tc + 5.0).unwrap(), alpha_s);
    }

    #[test]
    fn constant_opposite_probe_chirp() {
        let s = schedule(ScheduleMode::ConstantOpposite);
        let alpha_s = s.alpha_s_temporal();
        for t in [0.0, 100.0, 378.3, 500.0, 900.0] {
            assert_eq!(
                s.instantaneous_chirp(PulseRole::Probe, t).unwrap(),
                2.0 * alpha_s
            );
        }
    }

    #[test]
    fn probe_condition_holds_for_every_mode() {
        for mode in [
            ScheduleMode::Ccars,
            ScheduleMode::ConstantOpposite,
            ScheduleMode::Constant,
            ScheduleMode::Custom {
                pump_factor_before: 0.3,
                pump_factor_after: -1.7,
            },
        ] {
            let s = schedule(mode);
            for k in 0..200 {
                let t = 4.0 * k as f64;
                let alpha_p = s.instantaneous_chirp(PulseRole::Pump, t).unwrap();
                let alpha_s = s.instantaneous_chirp(PulseRole::Stokes, t).unwrap();
                let alpha_pr = s.instantaneous_chirp(PulseRole::Probe, t).unwrap();
                assert_eq!(alpha_pr, alpha_s - alpha_p);
                assert_eq!(s.sweep_rate(t), alpha_pr);
            }
        }
    }

    #[test]
    fn antistokes_chirp_query_rejected() {
        let s = schedule(ScheduleMode::Ccars);
        assert!(s.instantaneous_chirp(PulseRole::AntiStokes, 0.0).is_err());
    }

    #[test]
    fn wigner_peak_value() {
        // Peak at (t_c, ω_q): (τ√π/2)·E0·(1 + e^{−4τ²ω_q²}).
        let p = PulseParams::from_chirped_duration(PulseRole::Stokes, 3.0, 1.0, 3.0, -0.2, 7.5)
            .unwrap();
        let tau = p.tau();
        let expected =
            0.5 * tau * std::f64::consts::PI.sqrt() * (1.0 + (-4.0 * tau * tau * 9.0).exp());
        assert_relative_eq!(wigner_value(&p, 7.5, 3.0), expected, max_relative = 1e-13);
    }

    #[test]
    fn unchirped_ridge_is_flat() {
        let p = PulseParams::new(PulseRole::Pump, 4.0, 1.0, 3.0, 0.0, 7.5).unwrap();
        for t in [4.0, 6.0, 7.5, 9.0, 11.0] {
            let mut best = (f64::MIN, 0.0);
            let mut omega = 2.0;
            while omega <= 6.0 {
                let v = wigner_value(&p, t, omega);
                if v > best.0 {
                    best = (v, omega);
                }
                omega += 0.001;
            }
            assert_abs_diff_eq!(best.1, 4.0, epsilon = 0.001 + 1e-12);
        }
    }

    #[test]
    fn chirped_ridge_follows_instantaneous_frequency() {
        // Grid argmax over ω must sit within a grid step of ω_q + α(t−t_c)
        // whenever ω_q·τ is large.
        let p = PulseParams::new(PulseRole::Stokes, 3.0, 0.7, 2.0, 9.0, 7.5).unwrap();
        let alpha = p.temporal_chirp();
        let tau = p.tau();
        let step = 0.002;
        for k in -6..=6 {
            let t = 7.5 + 0.25 * k as f64 * tau;
            let expected = 3.0 + alpha * (t - 7.5);
            let mut best = (f64::MIN, 0.0);
            let mut omega = 1.0;
            while omega <= 5.0 {
                let v = wigner_value(&p, t, omega);
                if v > best.0 {
                    best = (v, omega);
                }
                omega += step;
            }
            assert_abs_diff_eq!(best.1, expected, epsilon = step + 1e-12);
        }
    }
}
