//! Runs any experiment configuration through the same path as the `run`
//! command and prints the report.
//!
//! ```text
//! cargo run --example run_config -- crates/core/configs/elbow.toml /tmp/elbow
//! ```

use std::path::PathBuf;

use inertia_adapt::cli::{cmd_run, RunOptions};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let config = args.next().map(PathBuf::from).unwrap_or_else(|| {
        PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("configs/payload.toml")
    });
    let output = args.next().map(PathBuf::from).unwrap_or_else(|| std::env::temp_dir().join("inertia-adapt-run"));
    let out = cmd_run(&config, &RunOptions { output: Some(output), force: true })?;
    print!("{}", out.report.render());
    println!("wrote {}", out.dir.display());
    Ok(())
}
