use super::*;
use crate::flux::FluxKind;
use crate::limiter::LimiterConfig;
use std::f64::consts::PI;

fn gas() -> GasModel {
    GasModel::air()
}

fn periodic_1d(n: usize) -> Mesh {
    Mesh::new_1d(n, [0.0, 1.0], Boundary::Periodic).unwrap()
}

fn wave_1d(x: f64) -> State1 {
    State1::from_primitive(1.0 + 0.5 * (2.0 * PI * x).sin(), 1.0, 1.0, &gas())
}

fn wave_2d(x: f64, y: f64) -> State2 {
    State2::from_primitive(1.0 + 0.99 * (x + y).sin(), 1.0, 1.0, 1.0, &gas())
}

fn residual_of<S: DgState>(sol: &DgSolution<S>, flux: FluxKind) -> (Vec<S>, S) {
    let op = DgOperator::new(sol.mesh.dim, sol.degree, flux).unwrap();
    let mut rhs = vec![S::default(); sol.coeffs.len()];
    let out = op.residual(sol, &mut rhs).unwrap();
    (rhs, out)
}

#[test]
fn projection_of_constant_has_only_the_mean_mode() {
    let w = State1::new(0.7, 0.2, 3.0);
    for k in 0..4 {
        let sol = l2_project_1d(|_| w, periodic_1d(5), k, gas()).unwrap();
        for c in 0..5 {
            let modes = sol.cell_modes(c);
            assert!((modes[0] - w).max_abs() < 1e-14);
            assert!(modes[1..].iter().all(|m| m.max_abs() < 1e-14));
        }
    }
}

#[test]
fn projection_reproduces_linear_data() {
    let f = |x: f64| State1::new(1.0 + x, 2.0 - 3.0 * x, 5.0 + 0.5 * x);
    let sol = l2_project_1d(f, periodic_1d(4), 1, gas()).unwrap();
    for c in 0..4 {
        for r in [-0.5, -0.1, 0.3, 0.5] {
            let x = sol.mesh.physical(c, [r, 0.0])[0];
            assert!((sol.eval(c, [r, 0.0]) - f(x)).max_abs() < 1e-14);
        }
    }
}

fn projection_max_error(n: usize, k: usize) -> f64 {
    let sol = l2_project_1d(wave_1d, periodic_1d(n), k, gas()).unwrap();
    let mut e: f64 = 0.0;
    for c in 0..n {
        for s in 0..=20 {
            let r = -0.5 + s as f64 / 20.0;
            let x = sol.mesh.physical(c, [r, 0.0])[0];
            e = e.max((sol.eval(c, [r, 0.0]).rho - wave_1d(x).rho).abs());
        }
    }
    e
}

#[test]
fn projection_error_has_order_k_plus_one() {
    for k in 1..=3 {
        let ratio = projection_max_error(16, k) / projection_max_error(32, k);
        let order = ratio.log2();
        assert!(
            (order - (k + 1) as f64).abs() < 0.2,
            "k = {k}: order {order}"
        );
    }
}

#[test]
fn constant_state_has_zero_residual() {
    let g = gas();
    let w1 = State1::from_primitive(0.8, 0.4, 1.3, &g);
    let w2 = State2::from_primitive(0.8, 0.4, -0.3, 1.3, &g);
    for flux in FluxKind::ALL {
        for bc in [Boundary::Periodic, Boundary::Transmissive] {
            let m1 = Mesh::new_1d(6, [0.0, 1.0], bc).unwrap();
            let sol = l2_project_1d(|_| w1, m1, 2, g).unwrap();
            let (rhs, _) = residual_of(&sol, flux);
            assert!(rhs.iter().all(|r| r.max_abs() < 1e-13), "{flux} {bc} 1D");

            let m2 = Mesh::new_2d(4, 3, [0.0, 1.0], [0.0, 2.0], bc, bc).unwrap();
            let sol = l2_project_2d(|_, _| w2, m2, 2, g).unwrap();
            let (rhs, _) = residual_of(&sol, flux);
            assert!(rhs.iter().all(|r| r.max_abs() < 1e-13), "{flux} {bc} 2D");
        }
    }
}

#[test]
fn transmissive_uniform_flow_has_no_net_boundary_flux() {
    let g = gas();
    let w = State1::from_primitive(1.0, 0.0, 1.0, &g);
    let m = Mesh::new_1d(8, [0.0, 1.0], Boundary::Transmissive).unwrap();
    let sol = l2_project_1d(|_| w, m, 1, g).unwrap();
    let (_, outflow) = residual_of(&sol, FluxKind::Hllc);
    assert!(outflow.max_abs() < 1e-15);
}

#[test]
fn periodic_ghosts_wrap_around() {
    // Rotating the cells of a periodic ring rotates the residual.
    let n = 4;
    let sol = l2_project_1d(wave_1d, periodic_1d(n), 1, gas()).unwrap();
    let mut shifted = sol.clone();
    let nm = sol.modes_per_cell();
    for c in 0..n {
        let src = (c + n - 1) % n;
        shifted
            .cell_modes_mut(c)
            .copy_from_slice(sol.cell_modes(src));
    }
    let (a, _) = residual_of(&sol, FluxKind::LxfLocal);
    let (b, _) = residual_of(&shifted, FluxKind::LxfLocal);
    for c in 0..n {
        let src = (c + n - 1) % n;
        for m in 0..nm {
            assert!((b[c * nm + m] - a[src * nm + m]).max_abs() < 1e-13);
        }
    }
}

#[test]
fn piecewise_constant_dg_is_the_finite_volume_scheme() {
    let g = gas();
    let init = |x: f64| {
        if x < 0.5 {
            State1::from_primitive(1.0, 0.2, 1.0, &g)
        } else {
            State1::from_primitive(0.125, -0.1, 0.1, &g)
        }
    };
    for bc in [Boundary::Periodic, Boundary::Transmissive] {
        let mesh = Mesh::new_1d(10, [0.0, 1.0], bc).unwrap();
        let sol = l2_project_1d(init, mesh, 0, g).unwrap();
        let sigma = sol
            .coeffs
            .iter()
            .map(|w| crate::euler::max_wave_speed_1d(w, &g).unwrap())
            .fold(0.0, f64::max);
        for flux in FluxKind::ALL {
            let lambda = 0.4 / sigma;
            let dt = lambda * sol.mesh.dx;
            let fv = fv_step_1d(&sol.coeffs, flux, lambda, &g, bc, false).unwrap();
            let (rhs, _) = residual_of(&sol, flux);
            for (i, (a, r)) in sol.coeffs.iter().zip(&rhs).enumerate() {
                let dg = *a + *r * dt;
                assert!((dg - fv[i]).max_abs() < 1e-14, "{flux} {bc} cell {i}");
            }
        }
    }
}

#[test]
fn fv_step_refuses_cfl_violation_unless_allowed() {
    let g = gas();
    let w = vec![State1::from_primitive(1.0, 0.0, 1.0, &g); 4];
    let lambda = 1.0;
    assert!(matches!(
        fv_step_1d(&w, FluxKind::Hll, lambda, &g, Boundary::Periodic, false),
        Err(IrpError::CflViolation { .. })
    ));
    let out = fv_step_1d(&w, FluxKind::Hll, lambda, &g, Boundary::Periodic, true).unwrap();
    assert!((out[0] - w[0]).max_abs() < 1e-15);
}

#[test]
fn sod_with_first_order_godunov_stays_admissible() {
    let g0 = gas();
    let n = 200;
    let mut w: Vec<State1> = (0..n)
        .map(|i| {
            let x = (i as f64 + 0.5) / n as f64;
            if x < 0.5 {
                State1::new(1.0, 0.0, 2.5)
            } else {
                State1::new(0.125, 0.0, 0.25)
            }
        })
        .collect();
    let g = g0.with_s0(crate::euler::entropy_floor(w.iter().copied(), &g0).unwrap());
    let dx = 1.0 / n as f64;
    let mut t = 0.0;
    while t < 0.16 {
        let sigma = w
            .iter()
            .map(|s| crate::euler::max_wave_speed_1d(s, &g).unwrap())
            .fold(0.0, f64::max);
        // Shocks travel faster than |u| + c; keep a margin.
        let lambda = 0.5 / sigma;
        w = fv_step_1d(
            &w,
            FluxKind::Godunov,
            lambda,
            &g,
            Boundary::Transmissive,
            false,
        )
        .unwrap();
        t += lambda * dx;
    }
    for s in &w {
        let (rho, p, q) = crate::euler::functionals(s, &g);
        assert!(rho > 0.0 && p > 0.0 && q <= 1e-12, "{rho} {p} {q}");
    }
}

#[test]
fn x_aligned_data_in_2d_matches_1d_rows() {
    let g = gas();
    for k in 0..=2 {
        let m1 = Mesh::new_1d(8, [0.0, 1.0], Boundary::Periodic).unwrap();
        let s1 = l2_project_1d(wave_1d, m1, k, g).unwrap();
        let m2 = Mesh::new_2d(
            8,
            3,
            [0.0, 1.0],
            [0.0, 1.0],
            Boundary::Periodic,
            Boundary::Periodic,
        )
        .unwrap();
        let s2 = l2_project_2d(|x, _| wave_1d(x).to_2d(), m2, k, g).unwrap();
        for flux in FluxKind::ALL {
            let (r1, _) = residual_of(&s1, flux);
            let (r2, _) = residual_of(&s2, flux);
            let (n1, n2) = (s1.modes_per_cell(), s2.modes_per_cell());
            for j in 0..3 {
                for i in 0..8 {
                    // Pure x-modes sit at tensor index a + (k + 1)·0.
                    for a in 0..=k {
                        let x1 = r1[i * n1 + a];
                        let x2 = r2[s2.mesh.index(i, j) * n2 + a];
                        let e = (x1.rho - x2.rho).abs()
                            + (x1.m - x2.m).abs()
                            + (x1.e - x2.e).abs()
                            + x2.n.abs();
                        assert!(e < 1e-12, "{flux} k={k} ({i},{j}) mode {a}: {e}");
                    }
                    for b in (k + 1)..n2 {
                        assert!(r2[s2.mesh.index(i, j) * n2 + b].max_abs() < 1e-12);
                    }
                }
            }
        }
    }
}

#[test]
fn periodic_rk3_step_conserves_totals_with_limiter() {
    let g0 = gas();
    let mesh = Mesh::new_2d(
        12,
        12,
        [0.0, 2.0 * PI],
        [0.0, 2.0 * PI],
        Boundary::Periodic,
        Boundary::Periodic,
    )
    .unwrap();
    let mut sol = l2_project_2d(wave_2d, mesh, 2, g0).unwrap();
    let table = sol.test_table().unwrap();
    let samples: Vec<State2> = sol
        .coeffs
        .chunks(sol.modes_per_cell())
        .flat_map(|c| {
            (0..table.len())
                .map(|p| table.eval(c, p))
                .collect::<Vec<_>>()
        })
        .collect();
    sol.gas = g0.with_s0(crate::euler::entropy_floor(samples, &g0).unwrap());
    let cfg = LimiterConfig::irp(1e-13).with_q_tolerance(1e-12);
    crate::limiter::limit_field(&mut sol, &table, &cfg, 0, 0).unwrap();
    let op = DgOperator::new(2, 2, FluxKind::LxfLocal).unwrap();
    let policy = CflPolicy::practical();
    let before = sol.totals();
    for step in 1..=3 {
        let dt = cfl_dt(&sol, &table, &policy).unwrap();
        let rep = ssp_rk3_step(&mut sol, &op, dt, Some(&cfg), &table, step).unwrap();
        assert!(rep.outflow.max_abs() < 1e-14);
        let after = sol.totals();
        for i in 0..4 {
            let scale = before.component(i).abs().max(1.0);
            assert!((after.component(i) - before.component(i)).abs() / scale < 1e-12);
        }
    }
    sol.check_region(&table, 1e-12).unwrap();
}

#[test]
fn constant_state_is_a_fixed_point_of_rk3() {
    let g = gas();
    let w = State1::from_primitive(1.0, 0.5, 1.0, &g);
    let mut sol = l2_project_1d(|_| w, periodic_1d(8), 2, g).unwrap();
    let table = sol.test_table().unwrap();
    let op = DgOperator::new(1, 2, FluxKind::Hllc).unwrap();
    let before = sol.coeffs.clone();
    // s₀ = 0 is this state's own entropy; allow rounding-level q.
    let cfg = LimiterConfig::irp(1e-13).with_q_tolerance(1e-12);
    ssp_rk3_step(&mut sol, &op, 0.01, Some(&cfg), &table, 1).unwrap();
    for (a, b) in sol.coeffs.iter().zip(&before) {
        assert!((*a - *b).max_abs() < 1e-14);
    }
}

#[test]
fn one_sod_step_keeps_test_points_admissible() {
    let g0 = gas();
    let mesh = Mesh::new_1d(100, [-0.5, 0.5], Boundary::Transmissive).unwrap();
    let init = |x: f64| {
        if x < 0.0 {
            State1::new(1.0, 0.0, 2.5)
        } else {
            State1::new(0.125, 0.0, 0.25)
        }
    };
    let mut sol = l2_project_1d(init, mesh, 2, g0).unwrap();
    let table = sol.test_table().unwrap();
    let all: Vec<State1> = sol
        .coeffs
        .chunks(sol.modes_per_cell())
        .flat_map(|c| {
            (0..table.len())
                .map(|p| table.eval(c, p))
                .collect::<Vec<_>>()
        })
        .collect();
    sol.gas = g0.with_s0(crate::euler::entropy_floor(all, &g0).unwrap());
    let cfg = LimiterConfig::irp(1e-13).with_q_tolerance(1e-12);
    let op = DgOperator::new(1, 2, FluxKind::LxfLocal).unwrap();
    let dt = cfl_dt(&sol, &table, &CflPolicy::theoretical(0.5)).unwrap();
    ssp_rk3_step(&mut sol, &op, dt, Some(&cfg), &table, 1).unwrap();
    sol.check_region(&table, 1e-12).unwrap();
}

#[test]
fn integrate_lands_on_final_time() {
    let g = gas();
    let mut sol = l2_project_1d(wave_1d, periodic_1d(16), 1, g).unwrap();
    let table = sol.test_table().unwrap();
    let op = DgOperator::new(1, 1, FluxKind::LxfLocal).unwrap();
    let mut seen = 0;
    let summary = integrate(
        &mut sol,
        &op,
        &CflPolicy::practical(),
        0.05,
        None,
        &table,
        |_, _| seen += 1,
    )
    .unwrap();
    assert_eq!(seen, summary.steps);
    assert!((sol.time - 0.05).abs() < 1e-15);
    assert!(summary.dt_min <= summary.dt_max);
}

#[test]
fn checkpoint_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let g = gas().with_s0(-0.25);
    let sol1 = l2_project_1d(wave_1d, periodic_1d(7), 2, g).unwrap();
    let p1 = dir.path().join("one.csv");
    checkpoint::write_checkpoint(&p1, &sol1).unwrap();
    let back: DgSolution<State1> = checkpoint::read_checkpoint(&p1).unwrap();
    assert_eq!(back, sol1);

    let mesh = Mesh::new_2d(
        3,
        4,
        [0.0, 1.0],
        [-1.0, 1.0],
        Boundary::Transmissive,
        Boundary::Periodic,
    )
    .unwrap();
    let mut sol2 = l2_project_2d(wave_2d, mesh, 1, g).unwrap();
    sol2.time = 0.125;
    let p2 = dir.path().join("two.csv");
    checkpoint::write_checkpoint(&p2, &sol2).unwrap();
    let back: DgSolution<State2> = checkpoint::read_checkpoint(&p2).unwrap();
    assert_eq!(back, sol2);

    // A 2D checkpoint is not a 1D solution.
    assert!(checkpoint::read_checkpoint::<State1>(&p2).is_err());
}

#[test]
fn region_check_names_the_offending_cell() {
    let g = gas().with_s0(-10.0);
    let mut sol = l2_project_1d(wave_1d, periodic_1d(5), 1, g).unwrap();
    let table = sol.test_table().unwrap();
    sol.cell_modes_mut(3)[1] = State1::new(10.0, 0.0, 0.0);
    match sol.check_region(&table, 0.0) {
        Err(IrpError::NonPhysical { cell, .. }) => assert_eq!(cell, 3),
        other => panic!("{other:?}"),
    }
}
