//! Ready-to-run command lines reproducing the reference datasets.

pub fn text() -> String {
    let mut s = String::new();
    s.push_str(
        "# Recipes: command lines for the reference datasets.\n\
         # All quantities are in units of the vibrational frequency (omega21 = 1).\n\n",
    );

    s.push_str(
        "# Wigner-Ville maps of the three incident pulses\n\
         # (chirped duration tau = 3.0, Stokes temporal chirp alpha_s = -0.2):\n\
         ccars wigner --set omega_p=4.0 --set omega_s=3.0 --set omega_pr=4.0 \\\n\
         \x20   --set wigner_tau=3.0 --set wigner_alpha_s=-0.2 --set t_center=7.5 --out wigner.csv\n\n",
    );

    s.push_str(
        "# Trajectories at the strong-chirp operating point\n\
         # (omega3_peak = 5.0, tau0 = 10, delta_s = delta_as = 1.0, chirp_rate = -7.5):\n\
         ccars simulate --set omega3_peak=5.0 --set tau0=10 --set chirp_rate=-7.5 \\\n\
         \x20   --set delta_s=1.0 --set delta_as=1.0 --set mode=ccars --set delta=0 --out traj_resonant.csv\n\
         ccars simulate --set omega3_peak=5.0 --set tau0=10 --set chirp_rate=-7.5 \\\n\
         \x20   --set delta_s=1.0 --set delta_as=1.0 --set mode=ccars --set delta=0.1 --out traj_detuned.csv\n\
         ccars simulate --set omega3_peak=5.0 --set tau0=10 --set chirp_rate=-7.5 \\\n\
         \x20   --set delta_s=1.0 --set delta_as=1.0 --set mode=constant-opposite --set delta=0 --out traj_opposite.csv\n\
         ccars simulate --set omega3_peak=5.0 --set tau0=10 --set chirp_rate=-7.5 \\\n\
         \x20   --set delta_s=1.0 --set delta_as=1.0 --set mode=constant-opposite --set delta=0.1 --out traj_opposite_detuned.csv\n\n",
    );

    s.push_str(
        "# Coherence maps over (omega3_peak, chirp_rate), tau0 = 10, delta_s = delta_as = 1.0,\n\
         # super-effective two-level vs exact four-level, resonant and detuned:\n\
         ccars scan-rabi-chirp --model 2 --set delta=0   --set tau0=10 --out map2_resonant.csv\n\
         ccars scan-rabi-chirp --model 2 --set delta=0.1 --set tau0=10 --out map2_detuned.csv\n\
         ccars scan-rabi-chirp --model 4 --set delta=0   --set tau0=10 --out map4_resonant.csv\n\
         ccars scan-rabi-chirp --model 4 --set delta=0.1 --set tau0=10 --out map4_detuned.csv\n\n",
    );

    s.push_str(
        "# Dressed/bare energies and the non-adiabatic parameter (same operating point):\n\
         ccars dressed --set omega3_peak=5.0 --set tau0=10 --set chirp_rate=-7.5 \\\n\
         \x20   --set mode=ccars --set delta=0 --out dressed_resonant.csv\n\
         ccars dressed --set omega3_peak=5.0 --set tau0=10 --set chirp_rate=-7.5 \\\n\
         \x20   --set mode=ccars --set delta=0.1 --out dressed_detuned.csv\n\
         ccars dressed --set omega3_peak=5.0 --set tau0=10 --set chirp_rate=-7.5 \\\n\
         \x20   --set mode=constant-opposite --set delta=0 --out dressed_opposite.csv\n\
         ccars dressed --set omega3_peak=5.0 --set tau0=10 --set chirp_rate=-7.5 \\\n\
         \x20   --set mode=constant-opposite --set delta=0.1 --out dressed_opposite_detuned.csv\n\n",
    );

    s.push_str(
        "# Weak-coupling regime (omega3_peak = 0.18, tau0 = 25, chirp_rate = -0.8):\n\
         # energies and populations, resonant and detuned:\n\
         ccars dressed  --set omega3_peak=0.18 --set tau0=25 --set chirp_rate=-0.8 --set delta=0   --out dressed_weak.csv\n\
         ccars simulate --set omega3_peak=0.18 --set tau0=25 --set chirp_rate=-0.8 --set delta=0   --out traj_weak.csv\n\
         ccars dressed  --set omega3_peak=0.18 --set tau0=25 --set chirp_rate=-0.8 --set delta=0.1 --out dressed_weak_detuned.csv\n\
         ccars simulate --set omega3_peak=0.18 --set tau0=25 --set chirp_rate=-0.8 --set delta=0.1 --out traj_weak_detuned.csv\n\n",
    );

    s.push_str(
        "# Coherence over (delta, chirp_rate) at omega3_peak = 1.6, tau0 = 4.66\n\
         # (two-level by default; pass --model 4 for the exact model):\n\
         ccars scan-delta-chirp --set omega3_peak=1.6 --set tau0=4.66 --out map_delta_chirp.csv\n",
    );

    s
}

#[cfg(test)]
mod tests {
    #[test]
    fn recipes_contain_reference_parameter_sets() {
        let t = super::text();
        for needle in [
            "omega3_peak=5.0",
            "tau0=10",
            "chirp_rate=-7.5",
            "delta_s=1.0",
            "omega3_peak=1.6",
            "tau0=4.66",
            "omega3_peak=0.18",
            "tau0=25",
            "chirp_rate=-0.8",
            "wigner_tau=3.0",
            "wigner_alpha_s=-0.2",
        ] {
            assert!(t.contains(needle), "recipes are missing {needle}");
        }
    }
}
