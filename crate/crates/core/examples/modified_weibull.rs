// The four-parameter modified Weibull baseline, including the defective case τ < 0.

use std::error::Error;

use bmw6::InnerParams;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    // (γ, β, λ, τ)
    let g = InnerParams::new(1.5, 0.8, 0.8, 2.0)?;
    for x in [0.25, 0.5, 1.0, 2.0] {
        println!(
            "x={x:<4}  Φ={:.6}  S={:.6}  f={:.6}  h={:.6}",
            g.cumulative_hazard(x)?,
            g.survival(x)?,
            g.pdf(x)?,
            g.hazard(x)?,
        );
    }
    let q = g.quantile(0.5)?;
    println!("median = {q:.12}, cdf(median) = {:.12}", g.cdf(q)?);

    // τ → 0 is a continuous limit
    let limit = InnerParams::new(1.5, 0.8, 0.8, 0.0)?;
    let near = InnerParams::new(1.5, 0.8, 0.8, 1e-9)?;
    println!(
        "cdf(1) at τ=0: {:.12}, at τ=1e-9: {:.12}",
        limit.cdf(1.0)?,
        near.cdf(1.0)?
    );

    // τ < 0: the cdf tops out below one
    let defective = InnerParams::new(1.0, 1.0, 1.0, -1.0)?;
    println!(
        "τ=-1 total mass = {:.12} (1 - e^-1)",
        defective.total_mass()
    );
    if let Err(e) = defective.quantile(0.7) {
        println!("quantile(0.7): {e}");
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
