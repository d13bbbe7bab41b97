// Six-parameter distribution functions on a small grid, and quantiles.

use std::error::Error;

use bmw6::{Bmw6Params, ParamValues};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let p = Bmw6Params::from_values(ParamValues {
        a: 1.5,
        b: 0.8,
        lambda: 1.2,
        beta: 0.8,
        gamma: 1.2,
        tau: 2.0,
    })?;
    println!(
        "{:>6} {:>12} {:>12} {:>12} {:>12}",
        "x", "cdf", "survival", "pdf", "hazard"
    );
    for x in [0.1, 0.5, 1.0, 1.5, 2.0] {
        println!(
            "{x:>6} {:>12.8} {:>12.8} {:>12.8} {:>12.8}",
            p.cdf(x)?,
            p.survival(x)?,
            p.pdf(x)?,
            p.hazard(x)?,
        );
    }
    for q in [0.1, 0.5, 0.9] {
        let x = p.quantile(q)?;
        println!("quantile({q}) = {x:.12}  cdf back = {:.12}", p.cdf(x)?);
        if (p.cdf(x)? - q).abs() > 1e-9 {
            return Err("quantile round trip failed".into());
        }
    }
    println!("log_pdf(1) = {:.12}", p.log_pdf(1.0)?);

    // far in the tail survival underflows and the hazard reports it
    let steep = Bmw6Params::from_values(ParamValues {
        a: 1.5,
        b: 3.5,
        lambda: 0.5,
        beta: 1.5,
        gamma: 4.0,
        tau: 4.0,
    })?;
    match steep.hazard(8.0) {
        Ok(h) => println!("hazard(8) = {h}"),
        Err(e) => println!("hazard(8): {e}"),
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
