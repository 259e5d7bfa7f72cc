//! Flat key = value run configuration with defaults, file loading, and
//! overrides.
//!
//! Every resolved parameter is echoed into output headers as `# key = value`
//! lines, and those same lines parse back as a config: a run is reproducible
//! from its own output file.

use std::fmt;
use std::path::Path;

use crate::hamiltonian::Model;
use crate::params::SimParams;
use crate::propagator::Method;
use crate::pulse::ScheduleMode;

#[derive(Debug, Clone, PartialEq)]
pub struct ConfigError {
    pub message: String,
    /// File and line of the offending entry, when it came from a file.
    pub location: Option<(String, usize)>,
}

impl fmt::Display for ConfigError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.location {
            Some((file, line)) => write!(f, "{file}:{line}: {}", self.message),
            None => write!(f, "{}", self.message),
        }
    }
}

impl std::error::Error for ConfigError {}

fn err(message: impl Into<String>) -> ConfigError {
    ConfigError {
        message: message.into(),
        location: None,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Subcommand {
    Simulate,
    ScanRabiChirp,
    ScanDeltaChirp,
    Wigner,
    Dressed,
}

impl Subcommand {
    pub fn label(self) -> &'static str {
        match self {
            Subcommand::Simulate => "simulate",
            Subcommand::ScanRabiChirp => "scan-rabi-chirp",
            Subcommand::ScanDeltaChirp => "scan-delta-chirp",
            Subcommand::Wigner => "wigner",
            Subcommand::Dressed => "dressed",
        }
    }

    fn parse(s: &str) -> Result<Self, ConfigError> {
        match s {
            "simulate" => Ok(Subcommand::Simulate),
            "scan-rabi-chirp" => Ok(Subcommand::ScanRabiChirp),
            "scan-delta-chirp" => Ok(Subcommand::ScanDeltaChirp),
            "wigner" => Ok(Subcommand::Wigner),
            "dressed" => Ok(Subcommand::Dressed),
            other => Err(err(format!(
                "unknown subcommand '{other}' (expected simulate, scan-rabi-chirp, \
                 scan-delta-chirp, wigner, or dressed)"
            ))),
        }
    }
}

/// Pulse selection for the wigner subcommand.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WignerPulse {
    All,
    Pump,
    Stokes,
    Probe,
}

impl WignerPulse {
    pub fn label(self) -> &'static str {
        match self {
            WignerPulse::All => "all",
            WignerPulse::Pump => "pump",
            WignerPulse::Stokes => "stokes",
            WignerPulse::Probe => "probe",
        }
    }
}

/// The full resolved parameter set of a run. Defaults are the single source
/// of truth printed by `--show-defaults`.
#[derive(Debug, Clone, PartialEq)]
pub struct Config {
    pub subcommand: Option<Subcommand>,
    pub model: Model,
    pub method: Method,
    pub steps: usize,
    pub mode: ScheduleMode,
    pub omega3_peak: f64,
    pub tau0: f64,
    pub chirp_rate: f64,
    pub delta: f64,
    pub delta_s: f64,
    pub delta_as: f64,
    /// None = auto (5τ).
    pub t_center: Option<f64>,
    /// Window half-width in units of the chirped duration.
    pub window: f64,
    pub out: Option<String>,

    // Scan axes.
    pub rabi_min: f64,
    pub rabi_max: f64,
    pub rabi_n: usize,
    pub chirp_min: f64,
    pub chirp_max: f64,
    pub chirp_n: usize,
    pub delta_min: f64,
    pub delta_max: f64,
    pub delta_n: usize,

    // Wigner maps.
    pub omega_p: f64,
    pub omega_s: f64,
    pub omega_pr: f64,
    /// Direct chirped-duration/temporal-chirp parametrization; None = derive
    /// from tau0 and chirp_rate.
    pub wigner_tau: Option<f64>,
    pub wigner_alpha_s: Option<f64>,
    pub wigner_pulse: WignerPulse,
    pub wigner_t_min: Option<f64>,
    pub wigner_t_max: Option<f64>,
    pub wigner_t_n: usize,
    pub wigner_omega_min: Option<f64>,
    pub wigner_omega_max: Option<f64>,
    pub wigner_omega_n: usize,
}

impl Default for Config {
    fn default() -> Self {
        Self {
            subcommand: None,
            model: Model::TwoLevel,
            method: Method::ExpmMidpoint,
            steps: crate::propagator::DEFAULT_N_STEPS,
            mode: ScheduleMode::Ccars,
            omega3_peak: 5.0,
            tau0: 10.0,
            chirp_rate: -7.5,
            delta: 0.0,
            delta_s: 1.0,
            delta_as: 1.0,
            t_center: None,
            window: crate::propagator::DEFAULT_WINDOW_TAUS,
            out: None,
            rabi_min: 0.5,
            rabi_max: 10.0,
            rabi_n: 61,
            chirp_min: -10.0,
            chirp_max: 10.0,
            chirp_n: 81,
            delta_min: -0.4,
            delta_max: 0.4,
            delta_n: 81,
            omega_p: 4.0,
            omega_s: 3.0,
            omega_pr: 4.0,
            wigner_tau: None,
            wigner_alpha_s: None,
            wigner_pulse: WignerPulse::All,
            wigner_t_min: None,
            wigner_t_max: None,
            wigner_t_n: 301,
            wigner_omega_min: None,
            wigner_omega_max: None,
            wigner_omega_n: 601,
        }
    }
}

fn fmt_auto(v: Option<f64>) -> String {
    v.map_or_else(|| "auto".into(), |x| x.to_string())
}

fn parse_auto(key: &str, value: &str) -> Result<Option<f64>, ConfigError> {
    if value == "auto" {
        Ok(None)
    } else {
        Ok(Some(parse_f64(key, value)?))
    }
}

fn parse_f64(key: &str, value: &str) -> Result<f64, ConfigError> {
    value
        .parse::<f64>()
        .map_err(|_| err(format!("key '{key}': expected a number, got '{value}'")))
}

fn parse_usize(key: &str, value: &str) -> Result<usize, ConfigError> {
    value
        .parse::<usize>()
        .map_err(|_| err(format!("key '{key}': expected a non-negative integer, got '{value}'")))
}

impl Config {
    /// Assign one key. Unknown keys are rejected; `generated_at` is accepted
    /// and ignored so output headers round-trip as configs.
    pub fn apply(&mut self, key: &str, value: &str) -> Result<(), ConfigError> {
        match key {
            "subcommand" => self.subcommand = Some(Subcommand::parse(value)?),
            "model" => {
                self.model = match value {
                    "2" | "two_level" => Model::TwoLevel,
                    "4" | "four_level" => Model::FourLevel,
                    other => return Err(err(format!("key 'model': expected 2 or 4, got '{other}'"))),
                }
            }
            "method" => {
                self.method = match value {
                    "expm" => Method::ExpmMidpoint,
                    "rk4" => Method::Rk4,
                    other => {
                        return Err(err(format!(
                            "key 'method': expected expm or rk4, got '{other}'"
                        )))
                    }
                }
            }
            "steps" => {
                let n = parse_usize(key, value)?;
                if n < 2 {
                    return Err(err(format!("key 'steps': need at least 2, got {n}")));
                }
                self.steps = n;
            }
            "mode" => {
                self.mode = match value {
                    "ccars" => ScheduleMode::Ccars,
                    "constant-opposite" => ScheduleMode::ConstantOpposite,
                    "constant" => ScheduleMode::Constant,
                    other => {
                        return Err(err(format!(
                            "key 'mode': expected ccars, constant-opposite, or constant, \
                             got '{other}'"
                        )))
                    }
                }
            }
            "omega3_peak" => self.omega3_peak = parse_f64(key, value)?,
            "tau0" => self.tau0 = parse_f64(key, value)?,
            "chirp_rate" => self.chirp_rate = parse_f64(key, value)?,
            "delta" => self.delta = parse_f64(key, value)?,
            "delta_s" => self.delta_s = parse_f64(key, value)?,
            "delta_as" => self.delta_as = parse_f64(key, value)?,
            "t_center" => self.t_center = parse_auto(key, value)?,
            "window" => self.window = parse_f64(key, value)?,
            "out" => self.out = Some(value.to_string()),
            "rabi_min" => self.rabi_min = parse_f64(key, value)?,
            "rabi_max" => self.rabi_max = parse_f64(key, value)?,
            "rabi_n" => self.rabi_n = parse_usize(key, value)?,
            "chirp_min" => self.chirp_min = parse_f64(key, value)?,
            "chirp_max" => self.chirp_max = parse_f64(key, value)?,
            "chirp_n" => self.chirp_n = parse_usize(key, value)?,
            "delta_min" => self.delta_min = parse_f64(key, value)?,
            "delta_max" => self.delta_max = parse_f64(key, value)?,
            "delta_n" => self.delta_n = parse_usize(key, value)?,
            "omega_p" => self.omega_p = parse_f64(key, value)?,
            "omega_s" => self.omega_s = parse_f64(key, value)?,
            "omega_pr" => self.omega_pr = parse_f64(key, value)?,
            "wigner_tau" => self.wigner_tau = parse_auto(key, value)?,
            "wigner_alpha_s" => self.wigner_alpha_s = parse_auto(key, value)?,
            "wigner_pulse" => {
                self.wigner_pulse = match value {
                    "all" => WignerPulse::All,
                    "pump" => WignerPulse::Pump,
                    "stokes" => WignerPulse::Stokes,
                    "probe" => WignerPulse::Probe,
                    other => {
                        return Err(err(format!(
                            "key 'wigner_pulse': expected all, pump, stokes, or probe, \
                             got '{other}'"
                        )))
                    }
                }
            }
            "wigner_t_min" => self.wigner_t_min = parse_auto(key, value)?,
            "wigner_t_max" => self.wigner_t_max = parse_auto(key, value)?,
            "wigner_t_n" => self.wigner_t_n = parse_usize(key, value)?,
            "wigner_omega_min" => self.wigner_omega_min = parse_auto(key, value)?,
            "wigner_omega_max" => self.wigner_omega_max = parse_auto(key, value)?,
            "wigner_omega_n" => self.wigner_omega_n = parse_usize(key, value)?,
            "generated_at" => {}
            other => return Err(err(format!("unknown key '{other}'"))),
        }
        Ok(())
    }

    /// All resolved parameters in a fixed order, as printed in output
    /// headers and by `--show-defaults`.
    pub fn to_pairs(&self) -> Vec<(String, String)> {
        let mut pairs: Vec<(String, String)> = Vec::new();
        let mut push = |k: &str, v: String| pairs.push((k.to_string(), v));
        if let Some(sub) = self.subcommand {
            push("subcommand", sub.label().into());
        }
        push(
            "model",
            match self.model {
                Model::TwoLevel => "2".into(),
                Model::FourLevel => "4".into(),
            },
        );
        push("method", self.method.label().into());
        push("steps", self.steps.to_string());
        push(
            "mode",
            match self.mode {
                ScheduleMode::Ccars => "ccars".into(),
                ScheduleMode::ConstantOpposite => "constant-opposite".into(),
                ScheduleMode::Constant => "constant".into(),
                ScheduleMode::Custom { .. } => "custom".into(),
            },
        );
        push("omega3_peak", self.omega3_peak.to_string());
        push("tau0", self.tau0.to_string());
        push("chirp_rate", self.chirp_rate.to_string());
        push("delta", self.delta.to_string());
        push("delta_s", self.delta_s.to_string());
        push("delta_as", self.delta_as.to_string());
        push("t_center", fmt_auto(self.t_center));
        push("window", self.window.to_string());
        if let Some(out) = &self.out {
            push("out", out.clone());
        }
        push("rabi_min", self.rabi_min.to_string());
        push("rabi_max", self.rabi_max.to_string());
        push("rabi_n", self.rabi_n.to_string());
        push("chirp_min", self.chirp_min.to_string());
        push("chirp_max", self.chirp_max.to_string());
        push("chirp_n", self.chirp_n.to_string());
        push("delta_min", self.delta_min.to_string());
        push("delta_max", self.delta_max.to_string());
        push("delta_n", self.delta_n.to_string());
        push("omega_p", self.omega_p.to_string());
        push("omega_s", self.omega_s.to_string());
        push("omega_pr", self.omega_pr.to_string());
        push("wigner_tau", fmt_auto(self.wigner_tau));
        push("wigner_alpha_s", fmt_auto(self.wigner_alpha_s));
        push("wigner_pulse", self.wigner_pulse.label().into());
        push("wigner_t_min", fmt_auto(self.wigner_t_min));
        push("wigner_t_max", fmt_auto(self.wigner_t_max));
        push("wigner_t_n", self.wigner_t_n.to_string());
        push("wigner_omega_min", fmt_auto(self.wigner_omega_min));
        push("wigner_omega_max", fmt_auto(self.wigner_omega_max));
        push("wigner_omega_n", self.wigner_omega_n.to_string());
        pairs
    }

    /// Load `key = value` lines from a file over this config.
    ///
    /// Lines starting with `#` are header/comment lines: they are applied
    /// when they parse as `key = value` with a known key and skipped
    /// otherwise. When the file contains a `# params:` marker (i.e. it is
    /// one of our own CSV outputs), non-`#` lines are data and are skipped;
    /// in a plain config file every non-empty line must be `key = value`.
    pub fn load_file(&mut self, path: &Path) -> Result<(), ConfigError> {
        let text = std::fs::read_to_string(path).map_err(|e| ConfigError {
            message: format!("cannot read config '{}': {e}", path.display()),
            location: None,
        })?;
        let name = path.display().to_string();
        let csv_mode = text.lines().any(|l| l.trim() == "# params:");
        for (idx, raw) in text.lines().enumerate() {
            let lineno = idx + 1;
            let at = |mut e: ConfigError| {
                e.location = Some((name.clone(), lineno));
                e
            };
            let line = raw.trim();
            if line.is_empty() {
                continue;
            }
            if let Some(stripped) = line.strip_prefix('#') {
                let stripped = stripped.trim();
                if let Some((key, value)) = split_key_value(stripped) {
                    if !self.is_known_key(key) {
                        continue; // ordinary comment
                    }
                    self.apply(key, value).map_err(at)?;
                }
                continue;
            }
            match split_key_value(line) {
                Some((key, value)) => self.apply(key, value).map_err(at)?,
                None if csv_mode => continue,
                None => {
                    return Err(at(err(format!(
                        "expected 'key = value', got '{line}'"
                    ))))
                }
            }
        }
        Ok(())
    }

    /// Apply a `key=value` override from the command line.
    pub fn apply_set(&mut self, expr: &str) -> Result<(), ConfigError> {
        match split_key_value(expr) {
            Some((key, value)) => self.apply(key, value),
            None => Err(err(format!("--set expects KEY=VALUE, got '{expr}'"))),
        }
    }

    fn is_known_key(&self, key: &str) -> bool {
        KNOWN_KEYS.contains(&key)
    }

    /// Simulation parameters for the trajectory/dressed/scan subcommands.
    pub fn sim_params(&self) -> SimParams {
        SimParams {
            omega3_peak: self.omega3_peak,
            tau0: self.tau0,
            chirp_rate: self.chirp_rate,
            delta: self.delta,
            delta_s: self.delta_s,
            delta_as: self.delta_as,
            mode: self.mode,
            t_center: self.t_center,
            window_taus: self.window,
            n_steps: self.steps,
            method: self.method,
        }
    }

    /// Default output file name per subcommand.
    pub fn out_path(&self, sub: Subcommand) -> String {
        self.out.clone().unwrap_or_else(|| {
            match sub {
                Subcommand::Simulate => "trajectory.csv",
                Subcommand::ScanRabiChirp => "scan_rabi_chirp.csv",
                Subcommand::ScanDeltaChirp => "scan_delta_chirp.csv",
                Subcommand::Wigner => "wigner.csv",
                Subcommand::Dressed => "dressed.csv",
            }
            .to_string()
        })
    }
}

const KNOWN_KEYS: &[&str] = &[
    "subcommand",
    "model",
    "method",
    "steps",
    "mode",
    "omega3_peak",
    "tau0",
    "chirp_rate",
    "delta",
    "delta_s",
    "delta_as",
    "t_center",
    "window",
    "out",
    "rabi_min",
    "rabi_max",
    "rabi_n",
    "chirp_min",
    "chirp_max",
    "chirp_n",
    "delta_min",
    "delta_max",
    "delta_n",
    "omega_p",
    "omega_s",
    "omega_pr",
    "wigner_tau",
    "wigner_alpha_s",
    "wigner_pulse",
    "wigner_t_min",
    "wigner_t_max",
    "wigner_t_n",
    "wigner_omega_min",
    "wigner_omega_max",
    "wigner_omega_n",
    "generated_at",
];

fn split_key_value(line: &str) -> Option<(&str, &str)> {
    let (key, value) = line.split_once('=')?;
    let key = key.trim();
    let value = value.trim();
    if key.is_empty() || key.contains(char::is_whitespace) {
        return None;
    }
    Some((key, value))
}
