//! Calibrates a constant torque-sensor offset during a quasi-static hold,
//! then shows why the offset cannot be estimated jointly from such data.

use std::path::Path;

use inertia_adapt::cli::LoadedConfig;
use inertia_adapt::dynamics::regressor;
use inertia_adapt::filter::bias_observability_check;
use inertia_adapt::sim::simulate_experiment;
use inertia_adapt::RobotState;
use nalgebra::DVector;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("configs/bias.toml");
    let exp = LoadedConfig::load(&path)?.experiment()?;
    let result = simulate_experiment(&exp)?;
    println!("injected offset   {:?}", exp.noise.torque_bias);
    println!("calibrated offset {:.4?}", result.bias.unwrap_or_default());

    let q = DVector::from_vec(vec![0.3, -0.8]);
    let state = RobotState::new(q, DVector::zeros(2), DVector::zeros(2));
    let y = regressor(&exp.model, &state, &exp.selection)?;
    let report = bias_observability_check(&vec![y; 50])?;
    println!(
        "static stack: rank {} of {} columns, deficiency {}",
        report.rank, report.columns, report.deficiency
    );
    Ok(())
}
