//! Browser bindings for the chirped-CARS simulator: trajectories,
//! dressed-frame diagnostics, and Wigner-Ville maps, each returned as one
//! flat Float64Array with a small numeric header so the page needs no
//! serialization layer.

use wasm_bindgen::prelude::*;

use ccars::dressed::sample_dressed;
use ccars::propagator::propagate;
use ccars::pulse::{wigner_value_with_chirp, ChirpSchedule, PulseParams, PulseRole};
use ccars::{DensityMatrix, Method, Model, ScheduleMode, SimParams, TimeGrid};

fn parse_mode(mode: &str) -> Result<ScheduleMode, String> {
    match mode {
        "ccars" => Ok(ScheduleMode::Ccars),
        "constant-opposite" => Ok(ScheduleMode::ConstantOpposite),
        "constant" => Ok(ScheduleMode::Constant),
        other => Err(format!("unknown schedule mode '{other}'")),
    }
}

fn parse_model(model: u32) -> Result<Model, String> {
    match model {
        2 => Ok(Model::TwoLevel),
        4 => Ok(Model::FourLevel),
        other => Err(format!("model must be 2 or 4, got {other}")),
    }
}

fn params(
    omega3_peak: f64,
    tau0: f64,
    chirp_rate: f64,
    delta: f64,
    big_delta: f64,
    mode: &str,
    n_steps: usize,
) -> Result<SimParams, String> {
    Ok(SimParams {
        omega3_peak,
        tau0,
        chirp_rate,
        delta,
        delta_s: big_delta,
        delta_as: big_delta,
        mode: parse_mode(mode)?,
        n_steps: n_steps.max(2),
        ..Default::default()
    })
}

fn err(e: ccars::Error) -> String {
    e.to_string()
}

/// Propagate one trajectory and return
/// `[dim, n, t[n], rho11[n], ..., rho_dd[n], coh_mag[n]]`,
/// downsampled by `stride` for plotting.
#[wasm_bindgen]
#[allow(clippy::too_many_arguments)]
pub fn simulate_trajectory(
    omega3_peak: f64,
    tau0: f64,
    chirp_rate: f64,
    delta: f64,
    big_delta: f64,
    mode: &str,
    model: u32,
    n_steps: usize,
    stride: usize,
) -> Result<Vec<f64>, JsValue> {
    simulate_trajectory_impl(
        omega3_peak, tau0, chirp_rate, delta, big_delta, mode, model, n_steps, stride,
    )
    .map_err(|e| JsValue::from_str(&e))
}

#[allow(clippy::too_many_arguments)]
fn simulate_trajectory_impl(
    omega3_peak: f64,
    tau0: f64,
    chirp_rate: f64,
    delta: f64,
    big_delta: f64,
    mode: &str,
    model: u32,
    n_steps: usize,
    stride: usize,
) -> Result<Vec<f64>, String> {
    let model = parse_model(model)?;
    let p = params(omega3_peak, tau0, chirp_rate, delta, big_delta, mode, n_steps)?;
    let spec = p.spec(model).map_err(err)?;
    let grid = p.grid(model).map_err(err)?;
    let rho0 = DensityMatrix::pure_ground(model);
    let traj = propagate(&spec, &rho0, &grid, Method::ExpmMidpoint).map_err(err)?;

    let stride = stride.max(1);
    let picks: Vec<usize> = (0..traj.times.len()).step_by(stride).collect();
    let dim = traj.dim;
    let n = picks.len();
    let mut out = Vec::with_capacity(2 + (dim + 2) * n);
    out.push(dim as f64);
    out.push(n as f64);
    out.extend(picks.iter().map(|&k| traj.times[k]));
    for level in 0..dim {
        out.extend(picks.iter().map(|&k| traj.populations[level][k]));
    }
    out.extend(picks.iter().map(|&k| traj.coherence_mag[k]));
    Ok(out)
}

/// Dressed-frame series for the two-level model:
/// `[n, t[n], e1[n], e2[n], lambda1[n], lambda2[n], theta_dot[n]]`.
#[wasm_bindgen]
pub fn dressed_series(
    omega3_peak: f64,
    tau0: f64,
    chirp_rate: f64,
    delta: f64,
    big_delta: f64,
    mode: &str,
    n_points: usize,
) -> Result<Vec<f64>, JsValue> {
    dressed_series_impl(omega3_peak, tau0, chirp_rate, delta, big_delta, mode, n_points)
        .map_err(|e| JsValue::from_str(&e))
}

fn dressed_series_impl(
    omega3_peak: f64,
    tau0: f64,
    chirp_rate: f64,
    delta: f64,
    big_delta: f64,
    mode: &str,
    n_points: usize,
) -> Result<Vec<f64>, String> {
    let p = params(
        omega3_peak,
        tau0,
        chirp_rate,
        delta,
        big_delta,
        mode,
        n_points.max(2),
    )?;
    let spec = p.spec(Model::TwoLevel).map_err(err)?;
    let (a, b) = spec.window(p.window_taus);
    let grid = TimeGrid::new(a, b, n_points.max(2)).map_err(err)?;
    let samples = sample_dressed(&spec, &grid).map_err(err)?;

    let n = samples.len();
    let mut out = Vec::with_capacity(1 + 6 * n);
    out.push(n as f64);
    out.extend(samples.iter().map(|s| s.t));
    out.extend(samples.iter().map(|s| s.e1));
    out.extend(samples.iter().map(|s| s.e2));
    out.extend(samples.iter().map(|s| s.lambda1));
    out.extend(samples.iter().map(|s| s.lambda2));
    out.extend(samples.iter().map(|s| s.theta_dot));
    Ok(out)
}

/// Wigner-Ville map of one incident pulse:
/// `[nt, nw, t_min, t_max, w_min, w_max, values[nt*nw]]` (row-major in t).
#[wasm_bindgen]
#[allow(clippy::too_many_arguments)]
pub fn wigner_map(
    role: &str,
    omega_q: f64,
    tau: f64,
    alpha_s: f64,
    t_center: f64,
    mode: &str,
    nt: usize,
    nw: usize,
) -> Result<Vec<f64>, JsValue> {
    wigner_map_impl(role, omega_q, tau, alpha_s, t_center, mode, nt, nw)
        .map_err(|e| JsValue::from_str(&e))
}

#[allow(clippy::too_many_arguments)]
fn wigner_map_impl(
    role: &str,
    omega_q: f64,
    tau: f64,
    alpha_s: f64,
    t_center: f64,
    mode: &str,
    nt: usize,
    nw: usize,
) -> Result<Vec<f64>, String> {
    let (role, amplitude) = match role {
        "pump" => (PulseRole::Pump, 1.0),
        "stokes" => (PulseRole::Stokes, std::f64::consts::FRAC_1_SQRT_2),
        "probe" => (PulseRole::Probe, std::f64::consts::FRAC_1_SQRT_2),
        other => return Err(format!("unknown pulse '{other}'")),
    };
    let (nt, nw) = (nt.max(2), nw.max(2));
    let pulse = PulseParams::from_chirped_duration(role, omega_q, amplitude, tau, alpha_s, t_center)
        .map_err(err)?;
    let schedule = ChirpSchedule::new(parse_mode(mode)?, pulse.spectral_chirp, pulse.tau0, t_center)
        .map_err(err)?;

    let t_min = t_center - 2.5 * tau;
    let t_max = t_center + 2.5 * tau;
    let max_slope = [t_min, t_max]
        .iter()
        .map(|&t| schedule.instantaneous_chirp(role, t).unwrap_or(0.0).abs())
        .fold(0.0, f64::max);
    let extent = max_slope * 2.5 * tau + 4.0 / tau;
    let w_min = omega_q - extent;
    let w_max = omega_q + extent;

    let mut out = Vec::with_capacity(6 + nt * nw);
    out.extend([nt as f64, nw as f64, t_min, t_max, w_min, w_max]);
    for it in 0..nt {
        let t = t_min + (t_max - t_min) * it as f64 / (nt - 1) as f64;
        let alpha = schedule.instantaneous_chirp(role, t).map_err(err)?;
        for iw in 0..nw {
            let omega = w_min + (w_max - w_min) * iw as f64 / (nw - 1) as f64;
            out.push(wigner_value_with_chirp(&pulse, alpha, t, omega));
        }
    }
    Ok(out)
}
