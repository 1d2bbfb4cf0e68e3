//! Validates every bundled model file, the same check the `validate`
//! command runs.

use std::path::Path;

use inertia_adapt::cli::cmd_validate;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("models");
    let mut paths: Vec<_> = std::fs::read_dir(dir)?.filter_map(|e| e.ok()).map(|e| e.path()).collect();
    paths.sort();
    for path in paths {
        let report = cmd_validate(&path)?;
        print!("{}", report.render());
        println!("  -> {}\n", if report.all_consistent() { "ok" } else { "rejected" });
    }
    Ok(())
}
