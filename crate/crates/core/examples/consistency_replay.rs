//! Low-excitation torso sway estimated by the Euclidean Kalman filter and by
//! the log-Cholesky extended filter.

use std::path::Path;

use inertia_adapt::cli::LoadedConfig;
use inertia_adapt::sim::simulate_experiment;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("configs");
    for name in ["walker_kf.toml", "walker_ekf.toml"] {
        let mut exp = LoadedConfig::load(&dir.join(name))?.experiment()?;
        exp.duration = 20.0;
        let result = simulate_experiment(&exp)?;
        let first = result.rows.iter().find(|r| !r.consistent).map(|r| r.t);
        let last = result.rows.last().unwrap();
        println!(
            "{name}: {} of {} steps inconsistent, first at {first:?} s, final Ixx {:.3}",
            result.inconsistent_steps, result.filter_steps, last.est_pi[4]
        );
    }
    Ok(())
}
