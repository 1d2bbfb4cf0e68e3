//! Every log-Cholesky vector maps to a physically realizable body, while a
//! small perturbation of Euclidean parameters may not.

use inertia_adapt::params::{g_jacobian, is_fully_consistent, pi_to_theta, theta_to_pi, DEFAULT_CONSISTENCY_TOL};
use inertia_adapt::{InertialParams, LogCholeskyParams};
use nalgebra::Matrix3;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let reference = theta_to_pi(&LogCholeskyParams::reference())?;
    println!("g(0) = {:?}", reference.as_slice());

    let theta = LogCholeskyParams::from_slice(&[0.3, -1.2, 0.8, 0.1, 0.5, -0.4, 0.9, -2.0, 1.5, 0.2]);
    let pi = theta_to_pi(&theta)?;
    let report = is_fully_consistent(&pi, DEFAULT_CONSISTENCY_TOL);
    println!("g(theta) = {:.4?}", pi.as_slice());
    println!("  consistent: {}, min pseudo-inertia eigenvalue {:.3e}", report.consistent, report.min_pseudo_eigenvalue);
    let back = pi_to_theta(&pi)?;
    println!("  round trip error {:.2e}", (back.0 - theta.0).amax());
    println!("  |dg/dtheta| = {:.4}", g_jacobian(&theta)?.norm());

    // A thin rod about its axis sits on the triangle-inequality boundary;
    // pushing the axial moment further makes it unrealizable.
    let rod = InertialParams::from_com(1.0, nalgebra::Vector3::zeros(), &Matrix3::from_diagonal(&[0.25, 0.1, 0.1].into()));
    let r = is_fully_consistent(&rod, DEFAULT_CONSISTENCY_TOL);
    println!("diag(0.25, 0.1, 0.1): consistent {} ({:?})", r.consistent, r.failure);
    Ok(())
}
