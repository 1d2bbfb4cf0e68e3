//! Releases the arm from rest and integrates it for two seconds with zero
//! torque, printing the mass matrix at the start and the energy at the end.

use std::path::Path;

use inertia_adapt::dynamics::{forward_dynamics, integrate, kinetic_energy, mass_matrix};
use inertia_adapt::model::parse_urdf;
use nalgebra::DVector;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("models/arm2.urdf");
    let model = parse_urdf(&std::fs::read_to_string(path)?)?;
    let params = model.nominal_params();

    let mut q = DVector::from_vec(vec![0.2, 0.3]);
    let mut v = DVector::zeros(2);
    println!("M(q0) =\n{:.5}", mass_matrix(&model, &q)?);

    let dt = 1e-3;
    let tau = DVector::zeros(model.n_actuated());
    for k in 0..=2000 {
        let a = forward_dynamics(&model, &q, &v, &tau, &[])?;
        if k % 500 == 0 {
            let ke = kinetic_energy(&model, &params, &q, &v)?;
            println!("t {:.2}  q {:>8.4} {:>8.4}  kinetic {:.4} J", k as f64 * dt, q[0], q[1], ke);
        }
        v += a * dt;
        q = integrate(&model, &q, &v, dt)?;
    }
    Ok(())
}
