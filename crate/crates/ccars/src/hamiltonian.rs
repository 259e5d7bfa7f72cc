//! Time-dependent Hamiltonians of the four-level system and its
//! super-effective two-level reduction.
//!
//! Basis ordering for the 4×4 model: |1⟩ ground, |2⟩ vibrational, |3⟩ upper
//! state on the Stokes side, |4⟩ upper state on the anti-Stokes side. ħ = 1;
//! frequencies in ω21 units, times in 1/ω21.
//!
//! With the far-detuned upper states eliminated, the two ground states are
//! coupled by the effective Rabi frequency Ω3(t) and shifted by the AC-Stark
//! terms Ω1(t), Ω2(t). Choosing the incident amplitudes as
//! Ω_s0 = Ω_pr0 = Ω_p0/√2 (and no incident anti-Stokes field) cancels the
//! Stark shifts pointwise, leaving a two-level system whose detuning is swept
//! by the chirps alone.

use nalgebra::{Matrix2, Matrix4};
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::pulse::{ChirpSchedule, PulseParams, PulseRole, ScheduleMode};

const SQRT_2: f64 = std::f64::consts::SQRT_2;

/// Detunings of the four-level system, all in ω21 units.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SystemParams {
    /// One-photon detuning Δs of the pump from |3⟩.
    pub delta_s: f64,
    /// One-photon detuning Δas of the anti-Stokes frequency from |4⟩.
    pub delta_as: f64,
    /// Two-photon detuning δ = ω_p − ω_s − ω21.
    pub delta: f64,
}

impl SystemParams {
    pub fn new(delta_s: f64, delta_as: f64, delta: f64) -> Self {
        Self {
            delta_s,
            delta_as,
            delta,
        }
    }

    /// Equal one-photon detunings Δs = Δas = Δ, the configuration used for
    /// Stark-shift cancellation.
    pub fn symmetric(big_delta: f64, delta: f64) -> Self {
        Self::new(big_delta, big_delta, delta)
    }
}

/// The effective Rabi frequencies of the adiabatically eliminated system at
/// one instant: the Stark shifts Ω1, Ω2 of the two ground states and the
/// two-photon coupling Ω3.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EffectiveRabi {
    pub omega1: f64,
    pub omega2: f64,
    /// Real under the canonical conditions (real envelopes, no incident
    /// anti-Stokes field); kept complex so complex amplitudes stay valid.
    pub omega3: Complex64,
}

/// The four fields of the four-wave-mixing process.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PulseSet {
    pub pump: PulseParams,
    pub stokes: PulseParams,
    pub probe: PulseParams,
    pub antistokes: PulseParams,
}

impl PulseSet {
    /// Canonical amplitude choice for Stark-shift cancellation:
    /// Ω_s0 = Ω_pr0 = Ω_p0/√2 and Ω_as0 = 0.
    ///
    /// All three incident pulses share the transform-limited duration and the
    /// magnitude of the Stokes spectral chirp, so their envelopes coincide up
    /// to the √2 amplitude ratio and the cancellation holds at every instant.
    /// The probe's instantaneous frequency is governed by the schedule, not
    /// by the envelope chirp stored here.
    pub fn canonical(
        omega_p0: f64,
        tau0: f64,
        alpha_s_spectral: f64,
        t_center: f64,
        system: &SystemParams,
    ) -> Result<Self> {
        let side = omega_p0 / SQRT_2;
        let omega_s = 3.0;
        let omega_p = 4.0 + system.delta;
        let omega_pr = 4.0;
        let omega_as = omega_p - omega_s + omega_pr;
        Ok(Self {
            pump: PulseParams::new(
                PulseRole::Pump,
                omega_p,
                omega_p0,
                tau0,
                -alpha_s_spectral,
                t_center,
            )?,
            stokes: PulseParams::new(
                PulseRole::Stokes,
                omega_s,
                side,
                tau0,
                alpha_s_spectral,
                t_center,
            )?,
            probe: PulseParams::new(
                PulseRole::Probe,
                omega_pr,
                side,
                tau0,
                alpha_s_spectral,
                t_center,
            )?,
            antistokes: PulseParams::new(
                PulseRole::AntiStokes,
                omega_as,
                0.0,
                tau0,
                0.0,
                t_center,
            )?,
        })
    }

    pub fn get(&self, role: PulseRole) -> &PulseParams {
        match role {
            PulseRole::Pump => &self.pump,
            PulseRole::Stokes => &self.stokes,
            PulseRole::Probe => &self.probe,
            PulseRole::AntiStokes => &self.antistokes,
        }
    }
}

/// Which dynamical model a spec drives.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Model {
    TwoLevel,
    FourLevel,
}

impl Model {
    pub fn dim(self) -> usize {
        match self {
            Model::TwoLevel => 2,
            Model::FourLevel => 4,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Model::TwoLevel => "two_level",
            Model::FourLevel => "four_level",
        }
    }
}

/// Peak effective Rabi frequency Ω3(0) = Ω_p0²/(4√2·Δ) of transform-limited
/// pulses with canonical amplitudes.
pub fn peak_effective_rabi(omega_p0: f64, delta: f64) -> Result<f64> {
    if delta == 0.0 {
        return Err(Error::SingularReduction(
            "one-photon detuning is zero".into(),
        ));
    }
    Ok(omega_p0 * omega_p0 / (4.0 * SQRT_2 * delta))
}

/// Pump amplitude producing a requested Ω3(0): Ω_p0 = √(4√2·Δ·Ω3(0)).
/// Inverse of [`peak_effective_rabi`]; used to drive four-level scans from a
/// Ω3(0) axis.
pub fn pump_amplitude_for(omega3_target: f64, delta: f64) -> Result<f64> {
    if omega3_target < 0.0 {
        return Err(Error::InvalidParameter(format!(
            "target peak effective Rabi frequency must be non-negative, got {omega3_target}"
        )));
    }
    if delta <= 0.0 {
        return Err(Error::InvalidParameter(format!(
            "one-photon detuning must be positive to invert the reduction, got {delta}"
        )));
    }
    Ok((4.0 * SQRT_2 * delta * omega3_target).sqrt())
}

/// Closed-form chirp-reduced effective coupling
/// Ω3(t) = Ω3_peak·exp(−(t−t_c)²·decay), with its analytic derivative.
///
/// For pump and Stokes chirped at equal spectral magnitude this is
/// Ω3(0)·[(1+α_p'²/τ0⁴)(1+α_s'²/τ0⁴)]^(-1/4)·exp(−(t−t_c)²/τ²).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Omega3Envelope {
    /// Chirp-reduced peak value.
    pub peak: f64,
    /// Gaussian decay rate: 1/(2τ_p²) + 1/(2τ_s²).
    pub decay: f64,
    pub t_center: f64,
}

impl Omega3Envelope {
    pub fn at(&self, t: f64) -> f64 {
        let dt = t - self.t_center;
        self.peak * (-self.decay * dt * dt).exp()
    }

    /// Analytic derivative dΩ3/dt.
    pub fn dot(&self, t: f64) -> f64 {
        let dt = t - self.t_center;
        -2.0 * self.decay * dt * self.at(t)
    }
}

/// Everything needed to evaluate H(t): the pulses, the chirp schedule, and
/// the detunings, plus which model the propagation uses.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HamiltonianSpec {
    pub model: Model,
    pub pulses: PulseSet,
    pub schedule: ChirpSchedule,
    pub system: SystemParams,
}

impl HamiltonianSpec {
    pub fn new(
        model: Model,
        pulses: PulseSet,
        schedule: ChirpSchedule,
        system: SystemParams,
    ) -> Result<Self> {
        if pulses.pump.t_center != schedule.t_center {
            return Err(Error::InvalidParameter(
                "pulse centers and schedule switch time must agree".into(),
            ));
        }
        Ok(Self {
            model,
            pulses,
            schedule,
            system,
        })
    }

    /// Canonical spec from the scalar parameters used throughout: peak
    /// effective Rabi frequency Ω3(0), transform-limited duration τ0,
    /// dimensionless spectral chirp rate α_s'/τ0², two-photon detuning δ and
    /// one-photon detuning Δ (= Δs = Δas).
    ///
    /// The pulse center defaults to 5τ (chirped duration), placing the usual
    /// integration window at [0, 10τ].
    pub fn canonical(
        model: Model,
        omega3_peak: f64,
        tau0: f64,
        chirp_rate: f64,
        delta: f64,
        big_delta: f64,
        mode: ScheduleMode,
        t_center: Option<f64>,
    ) -> Result<Self> {
        let alpha_s_spectral = chirp_rate * tau0 * tau0;
        let tau = crate::pulse::chirped_duration(alpha_s_spectral, tau0)?;
        let t_center = t_center.unwrap_or(5.0 * tau);
        let system = SystemParams::symmetric(big_delta, delta);
        let omega_p0 = pump_amplitude_for(omega3_peak, big_delta)?;
        let pulses = PulseSet::canonical(omega_p0, tau0, alpha_s_spectral, t_center, &system)?;
        let schedule = ChirpSchedule::new(mode, alpha_s_spectral, tau0, t_center)?;
        Self::new(model, pulses, schedule, system)
    }

    /// Whether the AC-Stark shifts cancel identically: equal one-photon
    /// detunings, canonical amplitude ratios, matching envelope shapes, and
    /// no incident anti-Stokes field.
    pub fn cancellation_active(&self) -> bool {
        let p = &self.pulses;
        let amp_ok = relative_eq(p.stokes.rabi_peak_tl, p.pump.rabi_peak_tl / SQRT_2)
            && relative_eq(p.probe.rabi_peak_tl, p.pump.rabi_peak_tl / SQRT_2)
            && p.antistokes.rabi_peak_tl == 0.0;
        let shape_ok = relative_eq(p.stokes.tau(), p.pump.tau())
            && relative_eq(p.probe.tau(), p.pump.tau())
            && relative_eq(p.stokes.chirp_reduction(), p.pump.chirp_reduction())
            && relative_eq(p.probe.chirp_reduction(), p.pump.chirp_reduction());
        self.system.delta_s == self.system.delta_as && amp_ok && shape_ok
    }

    /// Warn when the peak envelopes are not small against the one-photon
    /// detunings; the two-level reduction degrades there while the four-level
    /// model stays valid.
    pub fn reduction_warning(&self) -> Option<String> {
        let peak = self.pulses.pump.envelope_at(self.pulses.pump.t_center);
        let min_detuning = self.system.delta_s.abs().min(self.system.delta_as.abs());
        (peak >= 0.5 * min_detuning).then(|| {
            format!(
                "peak pump envelope {peak:.3} is not small against the one-photon detuning \
                 {min_detuning:.3}; the two-level reduction may be inaccurate"
            )
        })
    }

    /// Effective Rabi frequencies at time t from the chirp-reduced envelopes:
    /// Ω1 = |Ω_p0(t)|²/4Δs + |Ω_as0(t)|²/4Δas,
    /// Ω2 = |Ω_s0(t)|²/4Δs + |Ω_pr0(t)|²/4Δas,
    /// Ω3 = Ω_p0(t)Ω_s0*(t)/4Δs + Ω_pr0*(t)Ω_as0(t)/4Δas.
    pub fn effective_rabis(&self, t: f64) -> Result<EffectiveRabi> {
        let (ds, das) = self.checked_detunings()?;
        let p = self.pulses.pump.envelope_at(t);
        let s = self.pulses.stokes.envelope_at(t);
        let pr = self.pulses.probe.envelope_at(t);
        let a = self.pulses.antistokes.envelope_at(t);
        Ok(EffectiveRabi {
            omega1: p * p / (4.0 * ds) + a * a / (4.0 * das),
            omega2: s * s / (4.0 * ds) + pr * pr / (4.0 * das),
            omega3: Complex64::new(p * s / (4.0 * ds) + pr * a / (4.0 * das), 0.0),
        })
    }

    fn checked_detunings(&self) -> Result<(f64, f64)> {
        if self.system.delta_s == 0.0 || self.system.delta_as == 0.0 {
            return Err(Error::SingularReduction(format!(
                "one-photon detunings must be nonzero (Δs = {}, Δas = {})",
                self.system.delta_s, self.system.delta_as
            )));
        }
        Ok((self.system.delta_s, self.system.delta_as))
    }

    /// The closed-form coupling envelope and its analytic derivative.
    /// Requires no incident anti-Stokes field, which makes Ω3 a single
    /// chirp-reduced Gaussian.
    pub fn omega3_envelope(&self) -> Result<Omega3Envelope> {
        self.checked_detunings()?;
        if self.pulses.antistokes.rabi_peak_tl != 0.0 {
            return Err(Error::InvalidParameter(
                "the closed-form coupling envelope assumes no incident anti-Stokes field".into(),
            ));
        }
        let pump = &self.pulses.pump;
        let stokes = &self.pulses.stokes;
        let peak = pump.rabi_peak_tl * stokes.rabi_peak_tl * pump.chirp_reduction()
            * stokes.chirp_reduction()
            / (4.0 * self.system.delta_s);
        let (tp, ts) = (pump.tau(), stokes.tau());
        Ok(Omega3Envelope {
            peak,
            decay: 0.5 / (tp * tp) + 0.5 / (ts * ts),
            t_center: pump.t_center,
        })
    }

    /// Super-effective two-level Hamiltonian
    /// H = ½·[[D, 2Ω3], [2Ω3*, −D]],
    /// D(t) = δ − (α_s(t)−α_p(t))·(t−t_c) + Ω1(t) − Ω2(t).
    pub fn h_se(&self, t: f64) -> Result<Matrix2<Complex64>> {
        let rabi = self.effective_rabis(t)?;
        let dt = t - self.schedule.t_center;
        let d = self.system.delta - self.schedule.sweep_rate(t) * dt + rabi.omega1 - rabi.omega2;
        let half_d = Complex64::new(0.5 * d, 0.0);
        Ok(Matrix2::new(
            half_d,
            rabi.omega3,
            rabi.omega3.conj(),
            -half_d,
        ))
    }

    /// Exact field-interaction Hamiltonian of the four-level system,
    /// with the probe chirp condition α_pr = α_s − α_p built into the
    /// schedule:
    ///
    /// H = ½·[[2α_p·Δt, 0, Ω_p0(t), Ω_as0(t)],
    ///        [0, 2(α_s·Δt − δ), Ω_s0(t), Ω_pr0(t)],
    ///        [Ω_p0(t), Ω_s0(t), −2Δs, 0],
    ///        [Ω_as0(t), Ω_pr0(t), 0, 2(α_p·Δt − Δas)]]
    pub fn h_ex(&self, t: f64) -> Matrix4<Complex64> {
        let dt = t - self.schedule.t_center;
        let alpha_p = self
            .schedule
            .instantaneous_chirp(PulseRole::Pump, t)
            .expect("pump chirp is always defined");
        let alpha_s = self.schedule.alpha_s_temporal();
        let half = |x: f64| Complex64::new(0.5 * x, 0.0);
        let p = self.pulses.pump.envelope_at(t);
        let s = self.pulses.stokes.envelope_at(t);
        let pr = self.pulses.probe.envelope_at(t);
        let a = self.pulses.antistokes.envelope_at(t);
        let zero = Complex64::new(0.0, 0.0);
        Matrix4::new(
            half(2.0 * alpha_p * dt),
            zero,
            half(p),
            half(a),
            zero,
            half(2.0 * (alpha_s * dt - self.system.delta)),
            half(s),
            half(pr),
            half(p),
            half(s),
            half(-2.0 * self.system.delta_s),
            zero,
            half(a),
            half(pr),
            zero,
            half(2.0 * (alpha_p * dt - self.system.delta_as)),
        )
    }

    /// Integration window [t_c − w·τ, t_c + w·τ] with τ the chirped duration;
    /// the envelope is below 1e−10 of its peak outside w = 5.
    pub fn window(&self, half_width_taus: f64) -> (f64, f64) {
        let tau = self.pulses.pump.tau().max(self.pulses.stokes.tau());
        let tc = self.schedule.t_center;
        (tc - half_width_taus * tau, tc + half_width_taus * tau)
    }
}

fn relative_eq(a: f64, b: f64) -> bool {
    (a - b).abs() <= 1e-12 * a.abs().max(b.abs()).max(1.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::{assert_abs_diff_eq, assert_relative_eq};

    fn benchmark_spec(model: Model, delta: f64, mode: ScheduleMode) -> HamiltonianSpec {
        HamiltonianSpec::canonical(model, 5.0, 10.0, -7.5, delta, 1.0, mode, None).unwrap()
    }

    #[test]
    fn peak_effective_rabi_values() {
        let omega_p0 = (4.0 * SQRT_2 * 5.0_f64).sqrt();
        assert_relative_eq!(peak_effective_rabi(omega_p0, 1.0).unwrap(), 5.0, max_relative = 1e-14);
        assert_eq!(peak_effective_rabi(0.0, 2.0).unwrap(), 0.0);
        assert_relative_eq!(
            peak_effective_rabi(2.0, 1.0).unwrap(),
            1.0 / SQRT_2,
            max_relative = 1e-15
        );
        assert!(matches!(
            peak_effective_rabi(1.0, 0.0),
            Err(Error::SingularReduction(_))
        ));
    }

    #[test]
    fn pump_amplitude_inverts_reduction() {
        assert_relative_eq!(
            pump_amplitude_for(5.0, 1.0).unwrap(),
            (4.0 * SQRT_2 * 5.0_f64).sqrt(),
            max_relative = 1e-15
        );
        assert_eq!(pump_amplitude_for(0.0, 1.0).unwrap(), 0.0);
        assert_relative_eq!(
            pump_amplitude_for(1.6, 1.0).unwrap(),
            (4.0 * SQRT_2 * 1.6_f64).sqrt(),
            max_relative = 1e-15
        );
        assert!(pump_amplitude_for(-0.1, 1.0).is_err());
        assert!(pump_amplitude_for(1.0, 0.0).is_err());

        for k in 0..=100 {
            let omega3 = k as f64;
            let round = peak_effective_rabi(pump_amplitude_for(omega3, 1.7).unwrap(), 1.7).unwrap();
            assert_relative_eq!(round, omega3, max_relative = 1e-12, epsilon = 1e-300);
        }
    }

    #[test]
    fn stark_shifts_cancel_with_canonical_amplitudes() {
        let spec = benchmark_spec(Model::TwoLevel, 0.0, ScheduleMode::Ccars);
        assert!(spec.cancellation_active());
        let (a, b) = spec.window(5.0);
        for k in 0..=100 {
            let t = a + (b - a) * k as f64 / 100.0;
            let r = spec.effective_rabis(t).unwrap();
            assert_abs_diff_eq!(r.omega1 - r.omega2, 0.0, epsilon = 1e-15 * r.omega1.max(1e-30));
        }
    }

    #[test]
    fn omega3_peak_matches_requested_value_transform_limited() {
        let spec = HamiltonianSpec::canonical(
            Model::TwoLevel,
            5.0,
            10.0,
            0.0,
            0.0,
            1.0,
            ScheduleMode::Ccars,
            None,
        )
        .unwrap();
        let tc = spec.schedule.t_center;
        let r = spec.effective_rabis(tc).unwrap();
        assert_relative_eq!(r.omega3.re, 5.0, max_relative = 1e-13);
        assert_eq!(r.omega3.im, 0.0);
    }

    #[test]
    fn all_amplitudes_zero_gives_zero_rabis() {
        let system = SystemParams::symmetric(1.0, 0.0);
        let pulses = PulseSet::canonical(0.0, 10.0, -750.0, 378.0, &system).unwrap();
        let schedule = ChirpSchedule::new(ScheduleMode::Ccars, -750.0, 10.0, 378.0).unwrap();
        let spec = HamiltonianSpec::new(Model::TwoLevel, pulses, schedule, system).unwrap();
        let r = spec.effective_rabis(378.0).unwrap();
        assert_eq!((r.omega1, r.omega2, r.omega3.re, r.omega3.im), (0.0, 0.0, 0.0, 0.0));
    }

    #[test]
    fn zero_detuning_is_singular() {
        let mut spec = benchmark_spec(Model::TwoLevel, 0.0, ScheduleMode::Ccars);
        spec.system.delta_s = 0.0;
        assert!(matches!(
            spec.effective_rabis(0.0),
            Err(Error::SingularReduction(_))
        ));
        assert!(spec.h_se(0.0).is_err());
    }

    #[test]
    fn h_se_resonant_peak_is_pure_coupling() {
        let spec = benchmark_spec(Model::TwoLevel, 0.0, ScheduleMode::Ccars);
        let tc = spec.schedule.t_center;
        let h = spec.h_se(tc).unwrap();
        // Diagonal vanishes at the center on two-photon resonance.
        assert_abs_diff_eq!(h[(0, 0)].re, 0.0, epsilon = 1e-14);
        assert_abs_diff_eq!(h[(1, 1)].re, 0.0, epsilon = 1e-14);
        // Off-diagonal is the chirp-reduced peak coupling.
        let expected = 5.0 / (1.0_f64 + 56.25).sqrt();
        assert_relative_eq!(h[(0, 1)].re, expected, max_relative = 1e-12);
    }

    #[test]
    fn h_se_sweep_stops_after_center_in_ccars() {
        let spec = benchmark_spec(Model::TwoLevel, 0.0, ScheduleMode::Ccars);
        let tc = spec.schedule.t_center;
        for dt in [0.5, 10.0, 200.0] {
            let h = spec.h_se(tc + dt).unwrap();
            assert_abs_diff_eq!(h[(0, 0)].re, 0.0, epsilon = 1e-15);
        }
        // Before the center the diagonal ramps linearly.
        let alpha_pr = 2.0 * spec.schedule.alpha_s_temporal();
        let h = spec.h_se(tc - 100.0).unwrap();
        assert_relative_eq!(2.0 * h[(0, 0)].re, alpha_pr * 100.0, max_relative = 1e-10);
    }

    #[test]
    fn h_se_detuned_after_center() {
        let spec = benchmark_spec(Model::TwoLevel, 0.1, ScheduleMode::Ccars);
        let tc = spec.schedule.t_center;
        let h = spec.h_se(tc + 1.0).unwrap();
        assert_abs_diff_eq!(2.0 * h[(0, 0)].re, 0.1, epsilon = 1e-12);
    }

    #[test]
    fn h_ex_center_diagonal() {
        let spec = benchmark_spec(Model::FourLevel, 0.1, ScheduleMode::Ccars);
        let tc = spec.schedule.t_center;
        let h = spec.h_ex(tc);
        assert_abs_diff_eq!(h[(0, 0)].re, 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!(h[(1, 1)].re, -0.1, epsilon = 1e-15);
        assert_abs_diff_eq!(h[(2, 2)].re, -1.0, epsilon = 1e-15);
        assert_abs_diff_eq!(h[(3, 3)].re, -1.0, epsilon = 1e-15);
    }

    #[test]
    fn h_ex_is_diagonal_far_outside_the_pulse() {
        let spec = benchmark_spec(Model::FourLevel, 0.0, ScheduleMode::Ccars);
        let (a, b) = spec.window(10.0);
        for t in [a, b] {
            let h = spec.h_ex(t);
            for i in 0..4 {
                for j in 0..4 {
                    if i != j {
                        assert!(h[(i, j)].norm() < 1e-20);
                    }
                }
            }
        }
    }

    #[test]
    fn hamiltonians_are_hermitian() {
        let mut state = 0x243f6a8885a308d3u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            (state >> 11) as f64 / (1u64 << 53) as f64
        };
        for _ in 0..20_000 {
            let omega3 = 10.0 * next();
            let chirp = 20.0 * (next() - 0.5);
            let delta = 0.8 * (next() - 0.5);
            let spec = HamiltonianSpec::canonical(
                Model::FourLevel,
                omega3,
                0.5 + 20.0 * next(),
                chirp,
                delta,
                0.2 + 3.0 * next(),
                ScheduleMode::Ccars,
                None,
            )
            .unwrap();
            let (a, b) = spec.window(6.0);
            let t = a + (b - a) * next();
            let h4 = spec.h_ex(t);
            assert_eq!(h4, h4.adjoint());
            let h2 = spec.h_se(t).unwrap();
            assert_eq!(h2, h2.adjoint());
        }
    }

    #[test]
    fn closed_form_coupling_matches_product_of_envelopes() {
        for chirp in [-7.5, -2.0, 2.0, 7.5] {
            let spec = HamiltonianSpec::canonical(
                Model::TwoLevel,
                5.0,
                10.0,
                chirp,
                0.0,
                1.0,
                ScheduleMode::Ccars,
                None,
            )
            .unwrap();
            let env = spec.omega3_envelope().unwrap();
            // Closed form of the chirp-reduced coupling, written independently.
            let reduction = (1.0 + chirp * chirp).sqrt().recip();
            assert_relative_eq!(env.peak, 5.0 * reduction, max_relative = 1e-13);
            let (a, b) = spec.window(5.0);
            for k in 0..=200 {
                let t = a + (b - a) * k as f64 / 200.0;
                let product = spec.effective_rabis(t).unwrap().omega3.re;
                if product.abs() > 1e-280 {
                    assert_relative_eq!(env.at(t), product, max_relative = 1e-12);
                }
            }
        }
    }

    #[test]
    fn reduction_warning_fires_for_strong_fields() {
        let strong = HamiltonianSpec::canonical(
            Model::TwoLevel,
            50.0,
            10.0,
            0.0,
            0.0,
            1.0,
            ScheduleMode::Ccars,
            None,
        )
        .unwrap();
        assert!(strong.reduction_warning().is_some());
        // Weak driving far below the one-photon detuning stays quiet.
        let weak = HamiltonianSpec::canonical(
            Model::TwoLevel,
            0.05,
            10.0,
            -2.0,
            0.0,
            5.0,
            ScheduleMode::Ccars,
            None,
        )
        .unwrap();
        assert!(weak.reduction_warning().is_none());
    }
}
