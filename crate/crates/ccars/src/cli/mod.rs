//! Command-line front end: flat key = value configs, per-parameter
//! overrides, and CSV artifacts with reproducible parameter headers.
//!
//! Exit codes: 0 success, 2 configuration/usage error, 3 numerical failure.

mod config;
mod output;
mod recipes;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand as ClapSubcommand};

pub use config::{Config, ConfigError, Subcommand, WignerPulse};

use crate::dressed::sample_dressed;
use crate::error::Error;
use crate::hamiltonian::Model;
use crate::propagator::{propagate, DensityMatrix};
use crate::pulse::{ChirpSchedule, PulseParams, PulseRole, WignerSample};
use crate::scan::{scan_delta_chirp, scan_rabi_chirp, AxisKind, ScanAxis};

#[derive(Parser)]
#[command(
    name = "ccars",
    about = "Chirped-pulse CARS control: density-matrix trajectories, coherence maps, \
             dressed-state analysis, Wigner-Ville distributions",
    after_help = "Run `ccars --recipes` for ready-made parameter sets and \
                  `ccars --show-defaults` for the full key = value table."
)]
struct Cli {
    /// Flat key = value config file (our CSV outputs also work: their
    /// `# params:` header is read back).
    #[arg(long, global = true, value_name = "PATH")]
    config: Option<PathBuf>,

    /// Output file path.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<String>,

    /// Dynamical model: 2 (super-effective) or 4 (exact).
    #[arg(long, global = true, value_name = "2|4")]
    model: Option<String>,

    /// Integrator: expm (unitary midpoint) or rk4.
    #[arg(long, global = true, value_name = "expm|rk4")]
    method: Option<String>,

    /// Number of integration steps.
    #[arg(long, global = true, value_name = "N")]
    steps: Option<usize>,

    /// Override any config key (repeatable).
    #[arg(long = "set", global = true, value_name = "KEY=VALUE")]
    set: Vec<String>,

    /// Print the full default parameter table and exit.
    #[arg(long)]
    show_defaults: bool,

    /// Print command lines reproducing the reference datasets and exit.
    #[arg(long)]
    recipes: bool,

    #[command(subcommand)]
    command: Option<CliCommand>,
}

#[derive(ClapSubcommand, Clone, Copy)]
enum CliCommand {
    /// Propagate one trajectory and write populations/coherence vs time.
    Simulate,
    /// Map final coherence over (omega3_peak, chirp_rate).
    ScanRabiChirp,
    /// Map final coherence over (delta, chirp_rate).
    ScanDeltaChirp,
    /// Wigner-Ville time-frequency maps of the incident pulses.
    Wigner,
    /// Dressed/bare energies and the non-adiabatic parameter vs time.
    Dressed,
}

impl CliCommand {
    fn into_subcommand(self) -> Subcommand {
        match self {
            CliCommand::Simulate => Subcommand::Simulate,
            CliCommand::ScanRabiChirp => Subcommand::ScanRabiChirp,
            CliCommand::ScanDeltaChirp => Subcommand::ScanDeltaChirp,
            CliCommand::Wigner => Subcommand::Wigner,
            CliCommand::Dressed => Subcommand::Dressed,
        }
    }
}

#[derive(Debug)]
enum CliError {
    Config(String),
    Numerical(String),
    Io(String),
}

impl CliError {
    fn exit_code(&self) -> ExitCode {
        match self {
            CliError::Config(_) => ExitCode::from(2),
            CliError::Numerical(_) => ExitCode::from(3),
            CliError::Io(_) => ExitCode::from(1),
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Config(m) | CliError::Numerical(m) | CliError::Io(m) => m,
        }
    }
}

impl From<ConfigError> for CliError {
    fn from(e: ConfigError) -> Self {
        CliError::Config(e.to_string())
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::IntegrationDiverged { .. } | Error::ScanFailures { .. } | Error::UndefinedAngle => {
                CliError::Numerical(e.to_string())
            }
            other => CliError::Config(other.to_string()),
        }
    }
}

pub fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message());
            e.exit_code()
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    if cli.show_defaults {
        for (k, v) in Config::default().to_pairs() {
            println!("{k} = {v}");
        }
        return Ok(());
    }
    if cli.recipes {
        print!("{}", recipes::text());
        return Ok(());
    }

    let mut config = Config::default();
    if let Some(path) = &cli.config {
        config.load_file(path)?;
    }
    for expr in &cli.set {
        config.apply_set(expr)?;
    }
    if let Some(model) = &cli.model {
        config.apply("model", model)?;
    }
    if let Some(method) = &cli.method {
        config.apply("method", method)?;
    }
    if let Some(steps) = cli.steps {
        config.apply("steps", &steps.to_string())?;
    }
    if let Some(out) = &cli.out {
        config.apply("out", out)?;
    }

    let sub = cli
        .command
        .map(CliCommand::into_subcommand)
        .or(config.subcommand)
        .ok_or_else(|| {
            CliError::Config(
                "no subcommand given (expected simulate, scan-rabi-chirp, scan-delta-chirp, \
                 wigner, or dressed; see --help)"
                    .into(),
            )
        })?;
    config.subcommand = Some(sub);

    match sub {
        Subcommand::Simulate => run_simulate(&config),
        Subcommand::ScanRabiChirp => run_scan_rabi_chirp(&config),
        Subcommand::ScanDeltaChirp => run_scan_delta_chirp(&config),
        Subcommand::Wigner => run_wigner(&config),
        Subcommand::Dressed => run_dressed(&config),
    }
}

fn write_file(path: &str, contents: &str) -> Result<(), CliError> {
    std::fs::write(path, contents)
        .map_err(|e| CliError::Io(format!("cannot write '{path}': {e}")))
}

fn run_simulate(config: &Config) -> Result<(), CliError> {
    let params = config.sim_params();
    let spec = params.spec(config.model)?;
    if let Some(warning) = spec.reduction_warning() {
        eprintln!("warning: {warning}");
    }
    let grid = params.grid(config.model)?;
    let rho0 = DensityMatrix::pure_ground(config.model);
    let traj = propagate(&spec, &rho0, &grid, params.method)?;
    let path = config.out_path(Subcommand::Simulate);
    write_file(&path, &output::trajectory_csv(config, &traj))?;
    let (pops, coh) = traj.final_state()?;
    println!(
        "wrote {path} ({} samples); final populations {:?}, |rho12| = {:.6}",
        traj.times.len(),
        pops.iter().map(|p| (p * 1e6).round() / 1e6).collect::<Vec<_>>(),
        coh
    );
    Ok(())
}

fn run_dressed(config: &Config) -> Result<(), CliError> {
    let params = config.sim_params();
    let spec = params.spec(Model::TwoLevel)?;
    let grid = params.grid(Model::TwoLevel)?;
    let samples = sample_dressed(&spec, &grid)?;
    let path = config.out_path(Subcommand::Dressed);
    write_file(&path, &output::dressed_csv(config, &samples))?;
    println!("wrote {path} ({} samples)", samples.len());
    Ok(())
}

fn run_scan_rabi_chirp(config: &Config) -> Result<(), CliError> {
    let base = config.sim_params();
    let ax_rabi = ScanAxis::new(AxisKind::Omega3Peak, config.rabi_min, config.rabi_max, config.rabi_n)?;
    let ax_chirp = ScanAxis::new(AxisKind::ChirpRate, config.chirp_min, config.chirp_max, config.chirp_n)?;
    let scan = scan_rabi_chirp(&base, &ax_rabi, &ax_chirp, config.model)?;
    let path = config.out_path(Subcommand::ScanRabiChirp);
    write_file(&path, &output::scan_csv(config, &scan))?;
    println!(
        "wrote {path} ({}x{} grid, {} model, {} failed points)",
        ax_rabi.n,
        ax_chirp.n,
        config.model.label(),
        scan.failures.len()
    );
    Ok(())
}

fn run_scan_delta_chirp(config: &Config) -> Result<(), CliError> {
    let base = config.sim_params();
    let ax_delta = ScanAxis::new(AxisKind::Delta, config.delta_min, config.delta_max, config.delta_n)?;
    let ax_chirp = ScanAxis::new(AxisKind::ChirpRate, config.chirp_min, config.chirp_max, config.chirp_n)?;
    let scan = scan_delta_chirp(&base, &ax_delta, &ax_chirp, config.model)?;
    let path = config.out_path(Subcommand::ScanDeltaChirp);
    write_file(&path, &output::scan_csv(config, &scan))?;
    println!(
        "wrote {path} ({}x{} grid, {} model, {} failed points)",
        ax_delta.n,
        ax_chirp.n,
        config.model.label(),
        scan.failures.len()
    );
    Ok(())
}

/// Pulse geometry of a Wigner run: either taken directly from
/// (wigner_tau, wigner_alpha_s) or derived from (tau0, chirp_rate).
struct WignerGeometry {
    tau: f64,
    schedule: ChirpSchedule,
    t_center: f64,
}

fn wigner_geometry(config: &Config) -> Result<WignerGeometry, CliError> {
    let (tau, alpha_s) = match (config.wigner_tau, config.wigner_alpha_s) {
        (Some(tau), Some(alpha)) => (tau, alpha),
        (None, None) => {
            let spectral = config.chirp_rate * config.tau0 * config.tau0;
            (
                crate::pulse::chirped_duration(spectral, config.tau0)?,
                crate::pulse::temporal_chirp(spectral, config.tau0)?,
            )
        }
        _ => {
            return Err(CliError::Config(
                "wigner_tau and wigner_alpha_s must be set together (or both auto)".into(),
            ))
        }
    };
    let t_center = config.t_center.unwrap_or(5.0 * tau);
    // Solve for the equivalent (tau0, spectral chirp) pair so the schedule
    // reproduces the requested temporal chirp exactly.
    let probe = PulseParams::from_chirped_duration(
        PulseRole::Stokes,
        config.omega_s,
        1.0,
        tau,
        alpha_s,
        t_center,
    )?;
    let schedule = ChirpSchedule::new(config.mode, probe.spectral_chirp, probe.tau0, t_center)?;
    Ok(WignerGeometry {
        tau,
        schedule,
        t_center,
    })
}

fn run_wigner(config: &Config) -> Result<(), CliError> {
    let geom = wigner_geometry(config)?;
    let roles: Vec<(PulseRole, f64, f64)> = match config.wigner_pulse {
        WignerPulse::All => vec![
            (PulseRole::Pump, config.omega_p, 1.0),
            (PulseRole::Stokes, config.omega_s, std::f64::consts::FRAC_1_SQRT_2),
            (PulseRole::Probe, config.omega_pr, std::f64::consts::FRAC_1_SQRT_2),
        ],
        WignerPulse::Pump => vec![(PulseRole::Pump, config.omega_p, 1.0)],
        WignerPulse::Stokes => vec![(
            PulseRole::Stokes,
            config.omega_s,
            std::f64::consts::FRAC_1_SQRT_2,
        )],
        WignerPulse::Probe => vec![(
            PulseRole::Probe,
            config.omega_pr,
            std::f64::consts::FRAC_1_SQRT_2,
        )],
    };

    let t_min = config.wigner_t_min.unwrap_or(geom.t_center - 2.5 * geom.tau);
    let t_max = config.wigner_t_max.unwrap_or(geom.t_center + 2.5 * geom.tau);
    if !(t_max > t_min) || config.wigner_t_n < 2 || config.wigner_omega_n < 2 {
        return Err(CliError::Config(
            "wigner grid needs t_max > t_min and at least 2 points per axis".into(),
        ));
    }

    let multi = roles.len() > 1;
    let base_path = config.out_path(Subcommand::Wigner);
    let mut written = Vec::new();
    for (role, omega_q, amplitude) in roles {
        let pulse = PulseParams::from_chirped_duration(
            role,
            omega_q,
            amplitude,
            geom.tau,
            geom.schedule.alpha_s_temporal(),
            geom.t_center,
        )?;
        // Frequency range wide enough for the steepest ridge branch.
        let half_span = 0.5 * (t_max - t_min);
        let max_slope = [t_min, t_max]
            .iter()
            .map(|&t| geom.schedule.instantaneous_chirp(role, t).unwrap_or(0.0).abs())
            .fold(0.0, f64::max);
        let extent = max_slope * half_span + 4.0 / geom.tau;
        let omega_min = config.wigner_omega_min.unwrap_or(omega_q - extent);
        let omega_max = config.wigner_omega_max.unwrap_or(omega_q + extent);

        let mut samples = Vec::with_capacity(config.wigner_t_n * config.wigner_omega_n);
        for it in 0..config.wigner_t_n {
            let t = t_min + (t_max - t_min) * it as f64 / (config.wigner_t_n - 1) as f64;
            let alpha = geom
                .schedule
                .instantaneous_chirp(role, t)
                .expect("incident pulses always carry a chirp");
            for iw in 0..config.wigner_omega_n {
                let omega =
                    omega_min + (omega_max - omega_min) * iw as f64 / (config.wigner_omega_n - 1) as f64;
                samples.push(WignerSample {
                    t,
                    omega,
                    value: crate::pulse::wigner_value_with_chirp(&pulse, alpha, t, omega),
                });
            }
        }
        let path = if multi {
            suffixed(&base_path, role.label())
        } else {
            base_path.clone()
        };
        write_file(&path, &output::wigner_csv(config, &samples))?;
        written.push(path);
    }
    println!(
        "wrote {} ({} x {} grid each)",
        written.join(", "),
        config.wigner_t_n,
        config.wigner_omega_n
    );
    Ok(())
}

fn suffixed(path: &str, suffix: &str) -> String {
    match path.rsplit_once('.') {
        Some((stem, ext)) => format!("{stem}_{suffix}.{ext}"),
        None => format!("{path}_{suffix}"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suffix_insertion() {
        assert_eq!(suffixed("maps.csv", "pump"), "maps_pump.csv");
        assert_eq!(suffixed("out", "probe"), "out_probe");
    }

    #[test]
    fn wigner_geometry_reproduces_reference_parameters() {
        // τ = 3.0 and α_s = −0.2 resolve to a consistent schedule.
        let mut config = Config::default();
        config.apply("wigner_tau", "3.0").unwrap();
        config.apply("wigner_alpha_s", "-0.2").unwrap();
        config.apply("t_center", "7.5").unwrap();
        let geom = wigner_geometry(&config).unwrap();
        assert!((geom.schedule.alpha_s_temporal() - (-0.2)).abs() < 1e-14);
        assert_eq!(geom.t_center, 7.5);
        assert!((geom.tau - 3.0).abs() < 1e-12);
    }

    #[test]
    fn mismatched_wigner_overrides_rejected() {
        let mut config = Config::default();
        config.apply("wigner_tau", "3.0").unwrap();
        assert!(wigner_geometry(&config).is_err());
    }
}
