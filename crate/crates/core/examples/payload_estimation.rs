//! Estimates a 3 kg payload on the forearm online and checks the result
//! against batch least squares on the same measurements.

use std::path::Path;

use inertia_adapt::cli::LoadedConfig;
use inertia_adapt::filter::{batch_least_squares, stacked_g};
use inertia_adapt::sim::simulate_experiment;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("configs/payload.toml");
    let mut exp = LoadedConfig::load(&path)?.experiment()?;
    exp.record_measurements = true;
    let result = simulate_experiment(&exp)?;

    for row in result.rows.iter().step_by(333) {
        println!("t {:>5.2}  mass estimate {:.4}  true {:.4}", row.t, row.est_pi[0], row.true_pi[0]);
    }
    let pi0 = exp.selection.gather(&exp.model.nominal_params());
    let batch = batch_least_squares(&result.measurements, 1e-9, None, &pi0)?;
    let (_, jac) = stacked_g(&result.final_state.x)?;
    let sigma = (&jac * &result.final_state.p * jac.transpose())[(0, 0)].sqrt();
    let ekf = result.rows.last().map(|r| r.est_pi[0]).unwrap_or(f64::NAN);
    println!("final: EKF {ekf:.4} +/- {sigma:.4} kg, batch {:.4} kg", batch[0]);
    Ok(())
}
