//! Torque and acceleration shocks with and without the chi-square
//! innovation gate.

use std::path::Path;

use inertia_adapt::cli::{impulse_windows, peak_mass_deviation, LoadedConfig};
use inertia_adapt::filter::GateThreshold;
use inertia_adapt::sim::simulate_experiment;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("configs/gating.toml");
    let exp = LoadedConfig::load(&path)?.experiment()?;
    let windows = impulse_windows(&exp.noise, exp.rmse_start, exp.duration);

    let mut peaks = Vec::new();
    for gate in [GateThreshold::Disabled, GateThreshold::ChiSquare(0.999)] {
        let mut e = exp.clone();
        e.filter.gate = gate;
        let result = simulate_experiment(&e)?;
        let peak = peak_mass_deviation(&result, &windows);
        println!("{gate:?}: peak mass error {peak:.4} kg, {} measurements rejected", result.gated_steps);
        peaks.push(peak);
    }
    println!("attenuation ratio {:.4}", peaks[1] / peaks[0]);
    Ok(())
}
