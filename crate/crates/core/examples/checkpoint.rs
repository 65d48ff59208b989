//! Stop a run halfway, save it, reload it and finish.

use irpdg::harness::{initial_1d, ExampleId};
use irpdg::solver::checkpoint::{read_checkpoint, write_checkpoint};
use irpdg::solver::{integrate, l2_project_1d, Boundary, CflPolicy, DgOperator};
use irpdg::{DgSolution, FluxKind, GasModel, LimiterConfig, Mesh, State1};

fn main() -> irpdg::Result<()> {
    let gas = GasModel::air().with_s0(-10.0);
    let mesh = Mesh::new_1d(64, [0.0, 1.0], Boundary::Periodic)?;
    let mut sol = l2_project_1d(
        |x| initial_1d(ExampleId::Ex1, None, x, &gas).expect("smooth data"),
        mesh,
        2,
        gas,
    )?;
    let op = DgOperator::new(1, 2, FluxKind::LxfLocal)?;
    let policy = CflPolicy::practical();
    let cfg = LimiterConfig::irp(1e-13).with_q_tolerance(1e-12);
    let table = sol.test_table()?;

    integrate(&mut sol, &op, &policy, 0.05, Some(&cfg), &table, |_, _| {})?;
    let path = std::env::temp_dir().join("irpdg_checkpoint_example.csv");
    write_checkpoint(&path, &sol)?;
    let mut resumed: DgSolution<State1> = read_checkpoint(&path)?;
    println!(
        "saved at t = {}, reloaded identical: {}",
        sol.time,
        resumed.coeffs == sol.coeffs
    );

    integrate(&mut sol, &op, &policy, 0.1, Some(&cfg), &table, |_, _| {})?;
    integrate(
        &mut resumed,
        &op,
        &policy,
        0.1,
        Some(&cfg),
        &table,
        |_, _| {},
    )?;
    println!(
        "continued runs agree at t = 0.1: {}",
        resumed.coeffs == sol.coeffs
    );
    std::fs::remove_file(path)?;
    Ok(())
}
