//! Two-dimensional accuracy test on the diagonal density wave.

use irpdg::harness::{run_experiment, ExampleId, ExperimentSpec};

fn main() -> irpdg::Result<()> {
    let mut spec = ExperimentSpec::for_example(ExampleId::Ex2);
    spec.degree = 1;
    spec.cells = vec![16, 32, 64];
    let report = run_experiment(&spec)?;
    println!("{}", report.errors.expect("exact solution").to_markdown());
    Ok(())
}
