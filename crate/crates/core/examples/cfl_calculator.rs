//! Time steps allowed by the region-preserving CFL bounds.
//!
//! Usage: `cargo run --example cfl_calculator -- [dx] [sigma]`

use irpdg::solver::cfl::{
    practical_divisor, theoretical_dt_1d, theoretical_dt_rect, triangular_cfl,
};
use irpdg::FluxKind;

fn main() -> irpdg::Result<()> {
    let args: Vec<f64> = std::env::args()
        .skip(1)
        .filter_map(|a| a.parse().ok())
        .collect();
    let dx = args.first().copied().unwrap_or(0.01);
    let sigma = args.get(1).copied().unwrap_or(2.0);
    println!("dx = {dx}, sigma = {sigma}");
    println!(
        "{:<3} {:<10} {:>12} {:>12} {:>12} {:>12}",
        "k", "flux", "1D", "square", "triangle", "practical"
    );
    for k in 1..=3 {
        for kind in [FluxKind::LxfGlobal, FluxKind::Hllc] {
            let c0 = kind.c0();
            let area = 0.5 * dx * dx;
            let perimeter = (2.0 + 2f64.sqrt()) * dx;
            println!(
                "{k:<3} {:<10} {:>12.4e} {:>12.4e} {:>12.4e} {:>12.4e}",
                kind.token(),
                theoretical_dt_1d(dx, sigma, k, c0)?,
                theoretical_dt_rect(dx, dx, sigma, k, c0)?,
                triangular_cfl(area, perimeter, sigma, k, c0)?,
                dx / (practical_divisor(k) * sigma)
            );
        }
    }
    Ok(())
}
