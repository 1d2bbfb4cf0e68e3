//! Elbow tracking under a time-varying forearm load, with and without the
//! estimator in the loop.

use std::path::Path;

use inertia_adapt::cli::LoadedConfig;
use inertia_adapt::sim::{simulate_experiment, ControllerMode};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("configs/elbow.toml");
    let mut exp = LoadedConfig::load(&path)?.experiment()?;
    let mut totals = Vec::new();
    for mode in [ControllerMode::Nominal, ControllerMode::Adaptive] {
        exp.mode = mode;
        let result = simulate_experiment(&exp)?;
        let (_, total) = result.rmse();
        println!("{mode:?}: elbow RMSE {total:.4} rad");
        totals.push(total);
    }
    println!("improvement {:.1}x", totals[0] / totals[1]);
    Ok(())
}
