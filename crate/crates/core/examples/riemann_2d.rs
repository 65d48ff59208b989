//! Four-quadrant Riemann problems on the unit square.
//!
//! Usage: `cargo run --release --example riemann_2d -- [cells]`

use irpdg::harness::{
    density_contour_levels, run_case_2d, ExampleId, ExperimentSpec, CONTOUR_LEVELS,
};

fn main() -> irpdg::Result<()> {
    let n: usize = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(64);
    for id in [ExampleId::Ex5Config2, ExampleId::Ex5Config6] {
        let spec = ExperimentSpec::for_example(id);
        let out = run_case_2d(&spec, n)?;
        let levels = density_contour_levels(&out.solution, CONTOUR_LEVELS);
        println!(
            "{id} on {n}x{n}: {} steps, {} limiter calls, mass defect {:.1e}, density contours {:.4}..{:.4}",
            out.summary.steps,
            out.events().count(),
            out.conservation_defect()[0],
            levels[0],
            levels[levels.len() - 1]
        );
    }
    Ok(())
}
