// Load named parameter sets from JSON and tabulate curves as CSV.

use std::error::Error;

use bmw6::config::parse_param_sets;
use bmw6::curves::{grid, CurveTable, Func, Spacing};
use bmw6::Bmw6Params;

const SETS: &str = r#"{
  "exponential": {"a": 1, "b": 1, "lambda": 0.5, "beta": 1.5, "gamma": 1, "tau": 1},
  "n3":          {"a": 0.5, "b": 0.5, "lambda": 0.5, "beta": 0.5, "gamma": 0.5, "tau": 0.5}
}"#;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let sets = parse_param_sets(SETS)?;
    for (name, values) in &sets {
        let p = Bmw6Params::from_values(*values)?;
        let x = grid(0.1, 3.0, 5, Spacing::Log)?;
        let table = CurveTable::evaluate(&p, x, &[Func::Pdf, Func::Survival, Func::Hazard])?;
        println!("# {name}");
        print!("{}", table.to_csv());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
