//! Two rarefactions pulling apart, leaving a near vacuum in the middle.

use irpdg::harness::{run_case_1d, ExampleId, ExperimentSpec};

fn main() -> irpdg::Result<()> {
    let spec = ExperimentSpec::for_example(ExampleId::Ex4);
    let out = run_case_1d(&spec, 400)?;
    let sol = &out.solution;
    println!(
        "{} steps, {} limiter calls, smallest density seen {:.3e}",
        out.summary.steps,
        out.events().count(),
        out.min_density
    );
    for c in (0..sol.mesh.cell_count()).step_by(40) {
        let w = sol.average(c);
        println!("  x = {:+.3}: rho {:.5}", sol.mesh.center(c)[0], w.rho);
    }
    Ok(())
}
