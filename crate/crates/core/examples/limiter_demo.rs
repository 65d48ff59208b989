//! Scaling limiter on a P2 cell that violates the entropy bound at one end.

use irpdg::euler::{entropy_floor, functionals};
use irpdg::limiter::{limit_cell, theta_breakdown};
use irpdg::quadrature::test_set_1d;
use irpdg::{CellPolynomial, GasModel, LimiterConfig, State1};

fn main() -> irpdg::Result<()> {
    let base = GasModel::air();
    let avg = State1::from_primitive(1.0, 0.0, 1.0, &base);
    let gas = base.with_s0(entropy_floor([avg], &base)? - 0.1);
    let modes = vec![
        avg,
        State1::new(-0.3, 0.1, 0.9),
        State1::new(0.05, 0.0, -0.2),
    ];
    let poly = CellPolynomial::from_modes(1, 2, modes)?;
    let ts = test_set_1d(2, [-0.5, 0.5])?;
    let points = ts.unique_reference_points();

    println!("before limiting:");
    for r in &points {
        let (rho, p, q) = functionals(&poly.eval_at(*r), &gas);
        println!("  x = {:+.4}: rho {rho:.4}, p {p:+.4}, q {q:+.4e}", r[0]);
    }

    let samples: Vec<State1> = points.iter().map(|r| poly.eval_at(*r)).collect();
    for (name, cfg) in [
        ("irp", LimiterConfig::irp(1e-13)),
        ("positivity", LimiterConfig::positivity_only(1e-13)),
    ] {
        let b = theta_breakdown(&avg, &samples, &gas, &cfg)?;
        println!(
            "{name}: theta_rho {:.4}, theta_p {:.4}, theta_q {:.4} -> theta {:.4}",
            b.theta_rho, b.theta_p, b.theta_q, b.theta
        );
        let (limited, _) = limit_cell(&poly, &ts, &gas, &cfg)?;
        for r in &points {
            let (rho, p, q) = functionals(&limited.eval_at(*r), &gas);
            println!("  x = {:+.4}: rho {rho:.4}, p {p:+.4}, q {q:+.4e}", r[0]);
        }
    }
    Ok(())
}
