// Classify parameter sets into named sub-families and compare with their closed forms.

use std::error::Error;

use bmw6::curves::{grid, Spacing};
use bmw6::reductions::{
    classify, equivalence_report, representative, NamedFamily, DEFAULT_CLASSIFY_TOL,
};
use bmw6::Bmw6Params;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let mut all_pass = true;
    for family in NamedFamily::ALL
        .into_iter()
        .filter(|f| *f != NamedFamily::Bmw6)
    {
        let p = Bmw6Params::from_values(representative(family))?;
        assert_eq!(classify(&p, DEFAULT_CLASSIFY_TOL), family);
        let beta = p.inner().beta();
        let x = grid(1e-3 * beta, 10.0 * beta, 200, Spacing::Log)?;
        let report = equivalence_report(&p, family, &x)?;
        all_pass &= report.passes();
        println!(
            "{:<26} free={:<28} cdf diff {:.2e}  pdf diff {:.2e}",
            family.name(),
            family
                .free_params()
                .iter()
                .map(|p| p.name())
                .collect::<Vec<_>>()
                .join(","),
            report.max_cdf_diff,
            report.max_pdf_diff,
        );
    }
    if !all_pass {
        return Err("a reduction exceeded the 1e-12 tolerance".into());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
