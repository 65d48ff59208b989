//! First-order finite volumes on the shock tube with each flux.

use irpdg::euler::region_margins;
use irpdg::harness::RiemannSetup;
use irpdg::solver::{fv_step_1d, stencil_signal_speed, Boundary};
use irpdg::{FluxKind, GasModel};

fn main() -> irpdg::Result<()> {
    let base = GasModel::air();
    let setup = RiemannSetup::sod();
    let n = 200;
    let dx = (setup.domain[1] - setup.domain[0]) / n as f64;
    let init: Vec<_> = (0..n)
        .map(|i| setup.initial(setup.domain[0] + (i as f64 + 0.5) * dx, &base))
        .collect();
    let s0 = irpdg::euler::entropy_floor(init.iter().copied(), &base)?;
    let gas = base.with_s0(s0);

    for kind in FluxKind::ALL {
        let mut w = init.clone();
        let (mut t, mut steps) = (0.0, 0);
        while t < 0.16 {
            let sigma = stencil_signal_speed(&w, &gas)?;
            let dt = (0.9 * kind.c0() * dx / sigma).min(0.16 - t);
            w = fv_step_1d(&w, kind, dt / dx, &gas, Boundary::Transmissive, false)?;
            t += dt;
            steps += 1;
        }
        let inside = w
            .iter()
            .all(|s| region_margins(s, &gas).in_region_with_slack(1e-12));
        let rho_mid = w[n / 2].rho;
        println!(
            "{:<10} {steps:>4} steps, density at x=0: {rho_mid:.4}, all cells admissible: {inside}",
            kind.token()
        );
    }
    Ok(())
}
