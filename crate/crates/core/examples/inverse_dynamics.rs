//! Inverse dynamics of the two-link arm, and its split into a regressor term
//! for the forearm plus the torque of everything else.

use std::path::Path;

use inertia_adapt::dynamics::{nominal_torque, regressor, rnea};
use inertia_adapt::model::{parse_urdf, split_params};
use inertia_adapt::{EstimationSelection, RobotState};
use nalgebra::DVector;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("models/arm2.urdf");
    let model = parse_urdf(&std::fs::read_to_string(path)?)?;
    let sel = EstimationSelection::by_names(&model, &["fore"])?;
    let (pi_est, zeroed) = split_params(&model, &sel)?;

    let state = RobotState::new(
        DVector::from_vec(vec![0.4, -0.9]),
        DVector::from_vec(vec![0.5, -1.2]),
        DVector::from_vec(vec![2.0, 1.0]),
    );
    let tau = rnea(&model, &state)?;
    let y = regressor(&model, &state, &sel)?;
    let split = &y * &pi_est + nominal_torque(&zeroed, &state)?;

    println!("rnea                 {:?}", tau.as_slice());
    println!("Y pi + tau_nominal   {:?}", split.as_slice());
    println!("difference           {:.3e}", (tau - split).norm());
    println!("forearm regressor (2 x 10):\n{y:.4}");
    Ok(())
}
