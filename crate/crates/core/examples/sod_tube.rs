//! Shock tube with the IRP and positivity-only limiters; writes plot data.
//!
//! Usage: `cargo run --release --example sod_tube -- [output dir]`

use std::path::PathBuf;

use irpdg::harness::{emit_plot_data, run_case_1d, ExampleId, ExperimentSpec, LimiterChoice};

fn main() -> irpdg::Result<()> {
    let dir = std::env::args().nth(1).map(PathBuf::from);
    for limiter in [LimiterChoice::Irp, LimiterChoice::Positivity] {
        let mut spec = ExperimentSpec::for_example(ExampleId::Ex3);
        spec.limiter = limiter;
        let out = run_case_1d(&spec, 200)?;
        let sol = &out.solution;
        let u: Vec<f64> = (0..sol.mesh.cell_count())
            .map(|c| {
                let w = sol.eval(c, [0.0, 0.0]);
                w.m / w.rho
            })
            .collect();
        let max = u.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        let min = u.iter().copied().fold(f64::INFINITY, f64::min);
        println!(
            "{limiter}: {} steps, {} limiter calls, velocity in [{min:.4}, {max:.4}]",
            out.summary.steps,
            out.events().count()
        );
        if let Some(d) = &dir {
            std::fs::create_dir_all(d)?;
            let path = d.join(format!("sod_{limiter}.csv"));
            emit_plot_data(sol, &path)?;
            println!("  wrote {}", path.display());
        }
    }
    Ok(())
}
