//! CSV artifact writers. Every file starts with a `# params:` block echoing
//! the full resolved configuration (re-feedable as a config), floats are
//! printed in shortest round-trip form, lines end with LF.

use std::fmt::Write as _;

use super::config::Config;
use crate::dressed::DressedSample;
use crate::propagator::Trajectory;
use crate::pulse::WignerSample;
use crate::scan::ScanResult;

/// Shortest round-trip formatting; scientific notation outside a readable
/// magnitude window so underflowing tails stay compact.
pub fn fmt_float(v: f64) -> String {
    if v != 0.0 && (v.abs() < 1e-4 || v.abs() >= 1e16) {
        format!("{v:e}")
    } else {
        format!("{v}")
    }
}

pub fn header(config: &Config) -> String {
    let mut s = String::from("# params:\n");
    for (k, v) in config.to_pairs() {
        let _ = writeln!(s, "# {k} = {v}");
    }
    let stamp = std::time::SystemTime::now()
        .duration_since(std::time::UNIX_EPOCH)
        .map(|d| d.as_secs())
        .unwrap_or(0);
    let _ = writeln!(s, "# generated_at = {stamp}");
    s
}

pub fn trajectory_csv(config: &Config, traj: &Trajectory) -> String {
    let mut s = header(config);
    if traj.dim == 4 {
        s.push_str("t,rho11,rho22,rho33,rho44,coh_mag,coh_phase\n");
    } else {
        s.push_str("t,rho11,rho22,coh_mag,coh_phase\n");
    }
    for k in 0..traj.times.len() {
        let _ = write!(s, "{}", fmt_float(traj.times[k]));
        for level in 0..traj.dim {
            let _ = write!(s, ",{}", fmt_float(traj.populations[level][k]));
        }
        let _ = writeln!(
            s,
            ",{},{}",
            fmt_float(traj.coherence_mag[k]),
            fmt_float(traj.coherence_phase[k])
        );
    }
    s
}

pub fn scan_csv(config: &Config, scan: &ScanResult) -> String {
    let mut s = header(config);
    if !scan.failures.is_empty() {
        let _ = writeln!(s, "# failed_points = {}", scan.failures.len());
        for f in &scan.failures {
            let _ = writeln!(
                s,
                "# failed: i={} j={} {}={} {}={}: {}",
                f.i,
                f.j,
                scan.axis1.kind.label(),
                f.axis1_value,
                scan.axis2.kind.label(),
                f.axis2_value,
                f.message
            );
        }
    }
    let _ = writeln!(
        s,
        "{},{},coherence",
        scan.axis1.kind.label(),
        scan.axis2.kind.label()
    );
    for i in 0..scan.axis1.n {
        for j in 0..scan.axis2.n {
            let _ = writeln!(
                s,
                "{},{},{}",
                fmt_float(scan.axis1.value(i)),
                fmt_float(scan.axis2.value(j)),
                fmt_float(scan.value(i, j))
            );
        }
    }
    s
}

pub fn wigner_csv(config: &Config, samples: &[WignerSample]) -> String {
    let mut s = header(config);
    s.push_str("t,omega,value\n");
    for w in samples {
        let _ = writeln!(s, "{},{},{}", fmt_float(w.t), fmt_float(w.omega), fmt_float(w.value));
    }
    s
}

pub fn dressed_csv(config: &Config, samples: &[DressedSample]) -> String {
    let mut s = header(config);
    s.push_str("t,E1,E2,lambda1,lambda2,theta,theta_dot\n");
    for d in samples {
        let _ = writeln!(
            s,
            "{},{},{},{},{},{},{}",
            fmt_float(d.t),
            fmt_float(d.e1),
            fmt_float(d.e2),
            fmt_float(d.lambda1),
            fmt_float(d.lambda2),
            fmt_float(d.theta),
            fmt_float(d.theta_dot)
        );
    }
    s
}

#[cfg(test)]
mod tests {
    use super::fmt_float;

    #[test]
    fn float_formatting_round_trips() {
        for v in [
            0.0,
            -0.0,
            1.0,
            0.5003814065671002,
            1.100175997813322e-24,
            -7.5,
            3.141592653589793,
            1e-300,
            -2.3e18,
            f64::NAN,
        ] {
            let parsed: f64 = fmt_float(v).parse().unwrap();
            if v.is_nan() {
                assert!(parsed.is_nan());
            } else {
                assert_eq!(parsed.to_bits(), v.to_bits(), "{v} -> {}", fmt_float(v));
            }
        }
    }
}
