//! Accuracy test on the smooth density wave with P1 and P2.

use irpdg::harness::{run_experiment, ExampleId, ExperimentSpec};

fn main() -> irpdg::Result<()> {
    for degree in [1, 2] {
        let mut spec = ExperimentSpec::for_example(ExampleId::Ex1);
        spec.degree = degree;
        spec.cells = vec![16, 32, 64, 128];
        let report = run_experiment(&spec)?;
        let errors = report.errors.expect("smooth wave has an exact solution");
        println!("P{degree}\n{}", errors.to_markdown());
        println!(
            "first limiter call per mesh\n{}",
            errors.first_events_markdown()
        );
    }
    Ok(())
}
