//! Exact Riemann solution of the shock tube and every interface flux on it.

use irpdg::flux::{
    exact_riemann_primitive, numerical_flux, sample_exact, wave_speed_bounds, Primitive,
};
use irpdg::{FluxKind, GasModel};

fn main() -> irpdg::Result<()> {
    let gas = GasModel::air();
    let l = Primitive::new(1.0, 0.0, 1.0);
    let r = Primitive::new(0.125, 0.0, 0.1);
    let star = exact_riemann_primitive(&l, &r, &gas)?;
    println!(
        "p* = {:.6}, u* = {:.6}, rho*L = {:.6}, rho*R = {:.6}",
        star.p_star, star.u_star, star.rho_star_l, star.rho_star_r
    );
    let (sl, sr) = wave_speed_bounds(&l, &r, &gas)?;
    println!("fastest waves: {sl:.4} and {sr:.4}");

    println!("\nsolution at t = 0.2:");
    for i in 0..=10 {
        let x = -0.5 + 0.1 * i as f64;
        let w = sample_exact(&l, &r, x / 0.2, &gas)?;
        println!(
            "  x = {x:+.1}: rho {:.4}, u {:.4}, p {:.4}",
            w.rho, w.u, w.p
        );
    }

    let (wl, wr) = (l.to_state1(&gas), r.to_state1(&gas));
    let sigma = sl.abs().max(sr.abs());
    println!("\ninterface fluxes:");
    for kind in FluxKind::ALL {
        let f = numerical_flux(kind, &wl, &wr, sigma, &gas)?;
        println!(
            "  {:<10} c0 = {:.1}: {:.5} {:.5} {:.5}",
            kind.token(),
            kind.c0(),
            f.rho,
            f.m,
            f.e
        );
    }
    Ok(())
}
