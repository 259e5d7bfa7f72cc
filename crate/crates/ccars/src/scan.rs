//! Two-dimensional parameter sweeps of the end-of-pulse vibrational
//! coherence |ρ12|.
//!
//! Grid points are independent pure computations; execution order never
//! affects the result matrix. Failed points are stored as NaN sentinels with
//! diagnostics, never interpolated; a scan aborts if more than 1% of its
//! points fail.

use crate::error::{Error, Result};
use crate::hamiltonian::Model;
use crate::params::SimParams;
use crate::propagator::{FinalState, InvariantReport};

/// Which scalar a scan axis drives.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AxisKind {
    /// Peak effective Rabi frequency Ω3(0).
    Omega3Peak,
    /// Dimensionless spectral chirp rate α_s'/τ0².
    ChirpRate,
    /// Two-photon detuning δ.
    Delta,
}

impl AxisKind {
    pub fn label(self) -> &'static str {
        match self {
            AxisKind::Omega3Peak => "omega3_peak",
            AxisKind::ChirpRate => "chirp_rate",
            AxisKind::Delta => "delta",
        }
    }
}

/// Linearly spaced scan axis with `n` points from `min` to `max` inclusive.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScanAxis {
    pub kind: AxisKind,
    pub min: f64,
    pub max: f64,
    pub n: usize,
}

impl ScanAxis {
    pub fn new(kind: AxisKind, min: f64, max: f64, n: usize) -> Result<Self> {
        if !(min.is_finite() && max.is_finite() && min <= max) {
            return Err(Error::InvalidParameter(format!(
                "scan axis needs finite min <= max, got [{min}, {max}]"
            )));
        }
        if n < 1 || (n == 1 && min != max) {
            return Err(Error::InvalidParameter(format!(
                "scan axis needs n >= 1 points (and min == max when n == 1), got n = {n}"
            )));
        }
        Ok(Self { kind, min, max, n })
    }

    pub fn value(&self, k: usize) -> f64 {
        if self.n == 1 {
            self.min
        } else {
            self.min + (self.max - self.min) * k as f64 / (self.n - 1) as f64
        }
    }

    pub fn values(&self) -> Vec<f64> {
        (0..self.n).map(|k| self.value(k)).collect()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ScanFailure {
    pub i: usize,
    pub j: usize,
    pub axis1_value: f64,
    pub axis2_value: f64,
    pub message: String,
}

/// Final |ρ12| over a 2D grid, row-major over (axis1, axis2).
#[derive(Debug, Clone, PartialEq)]
pub struct ScanResult {
    pub axis1: ScanAxis,
    pub axis2: ScanAxis,
    pub model: Model,
    pub base: SimParams,
    /// n1×n2 coherence values in [0, 0.5]; NaN marks a failed point.
    pub values: Vec<f64>,
    pub failures: Vec<ScanFailure>,
    /// Worst invariant deviations over all grid points.
    pub worst_invariants: InvariantReport,
}

impl ScanResult {
    pub fn value(&self, i: usize, j: usize) -> f64 {
        self.values[i * self.axis2.n + j]
    }
}

/// Coherence map over (Ω3(0), α_s'/τ0²) at fixed δ. The pump amplitude is
/// derived from the Ω3(0) axis at every grid point, so the two models share
/// axes.
pub fn scan_rabi_chirp(
    base: &SimParams,
    ax_rabi: &ScanAxis,
    ax_chirp: &ScanAxis,
    model: Model,
) -> Result<ScanResult> {
    expect_kind(ax_rabi, AxisKind::Omega3Peak)?;
    expect_kind(ax_chirp, AxisKind::ChirpRate)?;
    run_scan(base, ax_rabi, ax_chirp, model)
}

/// Coherence map over (δ, α_s'/τ0²) at fixed Ω3(0) and τ0.
pub fn scan_delta_chirp(
    base: &SimParams,
    ax_delta: &ScanAxis,
    ax_chirp: &ScanAxis,
    model: Model,
) -> Result<ScanResult> {
    expect_kind(ax_delta, AxisKind::Delta)?;
    expect_kind(ax_chirp, AxisKind::ChirpRate)?;
    run_scan(base, ax_delta, ax_chirp, model)
}

fn expect_kind(axis: &ScanAxis, kind: AxisKind) -> Result<()> {
    if axis.kind != kind {
        return Err(Error::InvalidParameter(format!(
            "expected a {} axis, got {}",
            kind.label(),
            axis.kind.label()
        )));
    }
    Ok(())
}

fn apply_axis(params: &mut SimParams, kind: AxisKind, value: f64) {
    match kind {
        AxisKind::Omega3Peak => params.omega3_peak = value,
        AxisKind::ChirpRate => params.chirp_rate = value,
        AxisKind::Delta => params.delta = value,
    }
}

fn run_scan(
    base: &SimParams,
    axis1: &ScanAxis,
    axis2: &ScanAxis,
    model: Model,
) -> Result<ScanResult> {
    let total = axis1.n * axis2.n;
    let point = |flat: usize| -> Result<FinalState> {
        let (i, j) = (flat / axis2.n, flat % axis2.n);
        let mut params = *base;
        apply_axis(&mut params, axis1.kind, axis1.value(i));
        apply_axis(&mut params, axis2.kind, axis2.value(j));
        params.run(model)
    };

    let outcomes = compute_all(total, &point);

    let mut values = Vec::with_capacity(total);
    let mut failures = Vec::new();
    let mut worst = InvariantReport::default();
    for (flat, outcome) in outcomes.into_iter().enumerate() {
        let (i, j) = (flat / axis2.n, flat % axis2.n);
        match outcome {
            Ok(state) => {
                worst.merge(&state.invariants);
                values.push(state.coherence_mag);
            }
            Err(e) => {
                failures.push(ScanFailure {
                    i,
                    j,
                    axis1_value: axis1.value(i),
                    axis2_value: axis2.value(j),
                    message: e.to_string(),
                });
                values.push(f64::NAN);
            }
        }
    }

    if failures.len() * 100 > total {
        return Err(Error::ScanFailures {
            failed: failures.len(),
            total,
            first: failures[0].message.clone(),
        });
    }

    Ok(ScanResult {
        axis1: *axis1,
        axis2: *axis2,
        model,
        base: *base,
        values,
        failures,
        worst_invariants: worst,
    })
}

/// Number of scan worker threads: the `CCARS_THREADS` environment variable,
/// with 0 or unset meaning automatic.
pub fn thread_cap() -> Option<usize> {
    std::env::var("CCARS_THREADS")
        .ok()
        .and_then(|s| s.trim().parse::<usize>().ok())
        .filter(|&n| n > 0)
}

#[cfg(feature = "parallel")]
fn compute_all<T: Send>(
    total: usize,
    point: &(impl Fn(usize) -> T + Sync),
) -> Vec<T> {
    use rayon::prelude::*;
    match thread_cap() {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .expect("scan thread pool")
            .install(|| (0..total).into_par_iter().map(point).collect()),
        None => (0..total).into_par_iter().map(point).collect(),
    }
}

#[cfg(not(feature = "parallel"))]
fn compute_all<T>(total: usize, point: &impl Fn(usize) -> T) -> Vec<T> {
    (0..total).map(point).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pulse::ScheduleMode;

    fn quick_base() -> SimParams {
        SimParams {
            n_steps: 4_000,
            ..Default::default()
        }
    }

    #[test]
    fn axis_validation_and_values() {
        assert!(ScanAxis::new(AxisKind::Delta, 1.0, 0.0, 5).is_err());
        assert!(ScanAxis::new(AxisKind::Delta, 0.0, 1.0, 0).is_err());
        assert!(ScanAxis::new(AxisKind::Delta, 0.0, 1.0, 1).is_err());
        let single = ScanAxis::new(AxisKind::Delta, 0.3, 0.3, 1).unwrap();
        assert_eq!(single.values(), vec![0.3]);
        let axis = ScanAxis::new(AxisKind::ChirpRate, -10.0, 10.0, 21).unwrap();
        let v = axis.values();
        assert_eq!(v.len(), 21);
        assert_eq!(v[0], -10.0);
        assert_eq!(v[20], 10.0);
        assert!((v[10]).abs() < 1e-12);
    }

    #[test]
    fn single_point_scan_matches_direct_run_bitwise() {
        let base = quick_base();
        let ax1 = ScanAxis::new(AxisKind::Omega3Peak, 5.0, 5.0, 1).unwrap();
        let ax2 = ScanAxis::new(AxisKind::ChirpRate, -7.5, -7.5, 1).unwrap();
        let scan = scan_rabi_chirp(&base, &ax1, &ax2, Model::TwoLevel).unwrap();
        let direct = base.run(Model::TwoLevel).unwrap();
        assert_eq!(scan.value(0, 0).to_bits(), direct.coherence_mag.to_bits());
    }

    #[test]
    fn scan_is_deterministic_and_reproducible_pointwise() {
        let base = quick_base();
        let ax1 = ScanAxis::new(AxisKind::Delta, -0.2, 0.2, 3).unwrap();
        let ax2 = ScanAxis::new(AxisKind::ChirpRate, -6.0, 6.0, 4).unwrap();
        let first = scan_delta_chirp(&base, &ax1, &ax2, Model::TwoLevel).unwrap();
        let second = scan_delta_chirp(&base, &ax1, &ax2, Model::TwoLevel).unwrap();
        assert_eq!(first.values.len(), 12);
        for (a, b) in first.values.iter().zip(&second.values) {
            assert_eq!(a.to_bits(), b.to_bits());
        }
        // Every grid point is reproducible by an independent single run.
        for (i, &delta) in ax1.values().iter().enumerate() {
            for (j, &chirp) in ax2.values().iter().enumerate() {
                let mut params = base;
                params.delta = delta;
                params.chirp_rate = chirp;
                let single = params.run(Model::TwoLevel).unwrap();
                assert_eq!(first.value(i, j).to_bits(), single.coherence_mag.to_bits());
            }
        }
    }

    #[test]
    fn values_stay_in_coherence_range() {
        let base = quick_base();
        let ax1 = ScanAxis::new(AxisKind::Omega3Peak, 1.0, 7.0, 4).unwrap();
        let ax2 = ScanAxis::new(AxisKind::ChirpRate, -8.0, 8.0, 5).unwrap();
        for model in [Model::TwoLevel, Model::FourLevel] {
            let scan = scan_rabi_chirp(&base, &ax1, &ax2, model).unwrap();
            assert!(scan.failures.is_empty());
            for &v in &scan.values {
                assert!((0.0..=0.5 + 1e-6).contains(&v), "coherence {v} out of range");
            }
            assert!(scan.worst_invariants.max_trace_dev <= 1e-9);
        }
    }

    #[test]
    fn axis_kind_mismatch_rejected() {
        let base = quick_base();
        let ax1 = ScanAxis::new(AxisKind::Delta, 0.0, 0.0, 1).unwrap();
        let ax2 = ScanAxis::new(AxisKind::ChirpRate, -7.5, -7.5, 1).unwrap();
        assert!(scan_rabi_chirp(&base, &ax1, &ax2, Model::TwoLevel).is_err());
    }

    #[test]
    fn failing_points_abort_when_above_threshold() {
        // A negative one-photon detuning makes the canonical pump-amplitude
        // inversion fail at every point, so the scan must abort.
        let base = SimParams {
            delta_s: -1.0,
            ..quick_base()
        };
        let ax1 = ScanAxis::new(AxisKind::Omega3Peak, 5.0, 5.0, 1).unwrap();
        let ax2 = ScanAxis::new(AxisKind::ChirpRate, -7.5, -7.5, 1).unwrap();
        let err = scan_rabi_chirp(&base, &ax1, &ax2, Model::TwoLevel).unwrap_err();
        assert!(matches!(err, Error::ScanFailures { failed: 1, total: 1, .. }), "{err}");
    }

    #[test]
    fn strong_chirp_resonant_point_is_blue_detuned_point_is_red() {
        let base = quick_base();
        let ax1 = ScanAxis::new(AxisKind::Omega3Peak, 5.0, 5.0, 1).unwrap();
        let ax2 = ScanAxis::new(AxisKind::ChirpRate, -7.5, -7.5, 1).unwrap();
        let resonant = scan_rabi_chirp(&base, &ax1, &ax2, Model::TwoLevel).unwrap();
        assert!(resonant.value(0, 0) >= 0.49);
        let detuned = SimParams {
            delta: 0.1,
            ..base
        };
        let detuned = scan_rabi_chirp(&detuned, &ax1, &ax2, Model::TwoLevel).unwrap();
        assert!(detuned.value(0, 0) <= 0.05);
    }

    #[test]
    fn delta_chirp_scan_has_sign_flip_symmetry() {
        let base = SimParams {
            omega3_peak: 1.6,
            tau0: 4.66,
            n_steps: 4_000,
            mode: ScheduleMode::Ccars,
            ..Default::default()
        };
        let ax1 = ScanAxis::new(AxisKind::Delta, -0.2, 0.2, 5).unwrap();
        let ax2 = ScanAxis::new(AxisKind::ChirpRate, -6.0, 6.0, 5).unwrap();
        let scan = scan_delta_chirp(&base, &ax1, &ax2, Model::TwoLevel).unwrap();
        for i in 0..5 {
            for j in 0..5 {
                let mirrored = scan.value(4 - i, 4 - j);
                assert!(
                    (scan.value(i, j) - mirrored).abs() < 1e-3,
                    "asymmetry at ({i}, {j}): {} vs {}",
                    scan.value(i, j),
                    mirrored
                );
            }
        }
    }
}
