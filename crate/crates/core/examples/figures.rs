// Write the eleven built-in plot sets as CSV and report their curve shapes.

use std::error::Error;

use bmw6::figures::{dense_scan_shape, write_figures, PanelSelection, FIGURE_SETS};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let dir = std::env::temp_dir().join(format!("bmw6-figures-{}", std::process::id()));
    let written = write_figures(PanelSelection::All, &dir)?;
    println!("wrote {} files to {}", written.len(), dir.display());

    for set in &FIGURE_SETS {
        let p = set.params()?;
        let pdf = dense_scan_shape(|x| p.pdf(x), 1e-3, 8.0, 10_000)?;
        let hazard = dense_scan_shape(|x| p.hazard(x), 1e-3, 8.0, 10_000)?;
        println!(
            "{:<5} {:<4} pdf {:<11} hazard {:?}",
            set.panel.name(),
            set.label,
            format!("{pdf:?}"),
            hazard
        );
    }
    std::fs::remove_dir_all(&dir)?;
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
