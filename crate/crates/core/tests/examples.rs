#[allow(dead_code)]
mod special_functions_example {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/special_functions.rs"
    ));
}

#[test]
fn special_functions_example_runs() {
    special_functions_example::run_example().expect("special_functions example should run");
}

#[allow(dead_code)]
mod modified_weibull_example {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/modified_weibull.rs"
    ));
}

#[test]
fn modified_weibull_example_runs() {
    modified_weibull_example::run_example().expect("modified_weibull example should run");
}

#[allow(dead_code)]
mod distribution_example {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/distribution.rs"
    ));
}

#[test]
fn distribution_example_runs() {
    distribution_example::run_example().expect("distribution example should run");
}

#[allow(dead_code)]
mod reductions_example {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/reductions.rs"
    ));
}

#[test]
fn reductions_example_runs() {
    reductions_example::run_example().expect("reductions example should run");
}

#[allow(dead_code)]
mod sampling_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/sampling.rs"));
}

#[test]
fn sampling_example_runs() {
    sampling_example::run_example().expect("sampling example should run");
}

#[allow(dead_code)]
mod numerics_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/numerics.rs"));
}

#[test]
fn numerics_example_runs() {
    numerics_example::run_example().expect("numerics example should run");
}

#[allow(dead_code)]
mod figures_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/figures.rs"));
}

#[test]
fn figures_example_runs() {
    figures_example::run_example().expect("figures example should run");
}

#[allow(dead_code)]
mod params_file_example {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/params_file.rs"
    ));
}

#[test]
fn params_file_example_runs() {
    params_file_example::run_example().expect("params_file example should run");
}
