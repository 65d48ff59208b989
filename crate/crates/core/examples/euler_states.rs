//! Conserved and primitive variables, entropy and the admissible region.

use irpdg::euler::{pressure, q_functional, region_margins, sound_speed, specific_entropy};
use irpdg::{GasModel, State1, State2};

fn main() -> irpdg::Result<()> {
    let gas = GasModel::air();
    let w = State1::from_primitive(1.0, 0.75, 1.0, &gas);
    println!("w = {w:?}");
    println!(
        "p = {}, c = {:.6}",
        pressure(&w, &gas)?,
        sound_speed(&w, &gas)?
    );
    let s = specific_entropy(&w, &gas)?;
    println!("s = log(p / rho^gamma) = {s}");

    // q = (s0 - s) rho is non-positive exactly when s >= s0.
    for s0 in [s - 0.5, s, s + 0.5] {
        let g = gas.with_s0(s0);
        let m = region_margins(&w, &g);
        println!(
            "s0 = {s0:+.3}: q = {:+.4e}, in region: {}",
            q_functional(&w, &g)?,
            m.in_region()
        );
    }

    let w2 = State2::from_primitive(0.5, 0.3, -0.2, 0.4, &gas);
    let (u, v) = w2.velocity();
    println!("2D state {w2:?} has velocity ({u}, {v})");
    Ok(())
}
