use super::*;
use crate::euler::pressure;

#[test]
fn example_tokens_and_aliases() {
    for id in ExampleId::ALL {
        assert_eq!(id.token().parse::<ExampleId>().unwrap(), id);
    }
    assert_eq!("ex3".parse::<ExampleId>().unwrap(), ExampleId::Ex3);
    assert!("ex5".parse::<ExampleId>().is_err());
    assert!("ex9".parse::<ExampleId>().is_err());
}

#[test]
fn config_overrides_and_strictness() {
    let mut spec = ExperimentSpec::for_example(ExampleId::Ex1);
    spec.apply_config(
        "# sweep\nexample = ex3-sod\ndegree=2\ncells = 50,100\nflux=hllc\nlimiter=positivity\ntfinal=0.05\ncfl=theoretical\ndt_divisor=30\n",
    )
    .unwrap();
    assert_eq!(spec.example, ExampleId::Ex3);
    assert_eq!(spec.degree, 2);
    assert_eq!(spec.cells, vec![50, 100]);
    assert_eq!(spec.flux, FluxKind::Hllc);
    assert_eq!(spec.limiter, LimiterChoice::Positivity);
    assert_eq!(spec.t_final, 0.05);
    assert_eq!(spec.cfl, CflChoice::Theoretical);
    assert_eq!(spec.dt_divisor, Some(30.0));

    for bad in [
        "speed = 3",
        "degree",
        "degree = two",
        "cells = 8\ncells = 16",
        "flux = roe",
    ] {
        let mut s = ExperimentSpec::for_example(ExampleId::Ex1);
        assert!(s.apply_config(bad).is_err(), "{bad}");
    }
}

#[test]
fn custom_riemann_config() {
    let mut spec = ExperimentSpec::for_example(ExampleId::Custom);
    spec.apply_config("left = 1, 0.75, 1\nright = 0.125, 0, 0.1\ndomain = 0, 1\njump = 0.3\n")
        .unwrap();
    let c = spec.custom.unwrap();
    assert_eq!(c.left.u, 0.75);
    assert_eq!(c.jump, 0.3);
    assert_eq!(c.domain, [0.0, 1.0]);
    assert!(spec.apply_config("domain = 1, 0").is_err());
}

#[test]
fn spec_validation() {
    let mut spec = ExperimentSpec::for_example(ExampleId::Ex1);
    spec.validate().unwrap();
    spec.cells = vec![16, 3];
    assert!(spec.validate().is_err());
    spec.cells = vec![16];
    spec.t_final = 0.0;
    assert!(spec.validate().is_err());
}

#[test]
fn smooth_exact_solutions() {
    let g = GasModel::air();
    for x in [0.0, 0.13, 0.7] {
        let a = exact_1d(ExampleId::Ex1, None, x, 0.0, &g).unwrap();
        let b = initial_1d(ExampleId::Ex1, None, x, &g).unwrap();
        assert_eq!(a, b);
    }
    let w = exact_1d(ExampleId::Ex1, None, 0.37, 0.37, &g).unwrap();
    assert!((w.rho - 1.0).abs() < 1e-15);
    let w = exact_2d(ExampleId::Ex2, 0.3, 0.5, 0.4, &g).unwrap();
    assert!((w.rho - 1.0).abs() < 1e-15);
}

#[test]
fn sod_exact_solution_at_origin_is_star_left() {
    let g = GasModel::air();
    let w = exact_1d(ExampleId::Ex3, None, 0.0, 0.16, &g).unwrap();
    assert!((pressure(&w, &g).unwrap() - 0.30313).abs() < 1e-4);
    assert!((w.rho - 0.42632).abs() < 1e-4);
}

#[test]
fn double_rarefaction_exact_has_vacuum() {
    let g = GasModel::air();
    let w = exact_1d(ExampleId::Ex4, None, 0.0, 0.3, &g).unwrap();
    assert_eq!(w.rho, 0.0);
    let far = exact_1d(ExampleId::Ex4, None, -4.9, 0.3, &g).unwrap();
    assert!((far.rho - 1.0).abs() < 1e-14);
}

#[test]
fn riemann_configs_have_no_exact_solution() {
    let g = GasModel::air();
    for id in [ExampleId::Ex5Config2, ExampleId::Ex5Config6] {
        assert!(exact_2d(id, 0.5, 0.5, 0.1, &g).is_err());
        assert!(!id.has_exact());
    }
}

#[test]
fn quadrant_lookup() {
    let g = GasModel::air();
    let w = quadrant_state(&CONFIG2, 0.25, 0.75, &g);
    assert_eq!(w.rho, 0.5197);
    assert!((w.m / w.rho + 0.7259).abs() < 1e-15);
    let w = quadrant_state(&CONFIG6, 0.75, 0.25, &g);
    assert_eq!(w.rho, 3.0);
}

#[test]
fn orders_from_error_ratios() {
    assert_eq!(convergence_orders(&[4.0, 1.0]), vec![2.0]);
    let o = convergence_orders(&[4.43e-4, 1.10e-4]);
    assert!((o[0] - 2.00).abs() < 0.01);
    assert!(convergence_orders(&[1.0]).is_empty());
}

#[test]
fn error_norms_of_exact_projection_are_projection_errors() {
    let g = GasModel::air();
    let mesh =
        crate::solver::Mesh::new_1d(10, [0.0, 1.0], crate::solver::Boundary::Periodic).unwrap();
    let zero = crate::solver::DgSolution::<State1>::zeros(mesh.clone(), 1, g);
    assert_eq!(error_norms(&zero, |_| Ok(0.0)).unwrap(), (0.0, 0.0));
    let lin = crate::solver::l2_project_1d(|x| State1::new(1.0 + x, 0.0, 3.0), mesh, 1, g).unwrap();
    let (li, l1) = error_norms(&lin, |p| Ok(1.0 + p[0])).unwrap();
    assert!(li < 1e-14 && l1 < 1e-14);
}

#[test]
fn plot_data_layout() {
    let g = GasModel::air();
    let mesh =
        crate::solver::Mesh::new_1d(200, [0.0, 1.0], crate::solver::Boundary::Periodic).unwrap();
    let sol = crate::solver::l2_project_1d(|x| smooth_wave_1d(x, 0.0, &g), mesh, 1, g).unwrap();
    let text = plot_data(&sol);
    assert_eq!(text.lines().count(), 201);
    assert_eq!(text.lines().next().unwrap(), "x,rho,u,p,s,q");

    let mesh = crate::solver::Mesh::new_2d(
        6,
        6,
        [0.0, 1.0],
        [0.0, 1.0],
        crate::solver::Boundary::Periodic,
        crate::solver::Boundary::Periodic,
    )
    .unwrap();
    let sol =
        crate::solver::l2_project_2d(|x, y| smooth_wave_2d(x, y, 0.0, &g), mesh, 1, g).unwrap();
    let text = plot_data(&sol);
    assert_eq!(text.lines().count(), 37);
    assert_eq!(text.lines().next().unwrap(), "x,y,rho,u,v,p,s,q");
    assert!(text.lines().skip(1).all(|l| l.split(',').count() == 8));
}

#[test]
fn contour_levels_span_the_range() {
    let l = contour_levels(0.5, 2.0, 30);
    assert_eq!(l.len(), 30);
    assert_eq!(l[0], 0.5);
    assert!((l[29] - 2.0).abs() < 1e-15);
    let d = l[1] - l[0];
    assert!(l.windows(2).all(|w| ((w[1] - w[0]) - d).abs() < 1e-14));
}

#[test]
fn short_sod_run_writes_deterministic_artifacts() {
    let dir = tempfile::tempdir().unwrap();
    let mut spec = ExperimentSpec::for_example(ExampleId::Ex3);
    spec.cells = vec![40];
    spec.t_final = 0.02;
    spec.out = Some(dir.path().join("a"));
    let rep = run_experiment(&spec).unwrap();
    let errors = rep.errors.unwrap();
    assert_eq!(errors.rows.len(), 1);
    assert!(errors.rows[0].l1 < 0.05);
    for name in [
        "solution_n40.csv",
        "limiter_n40.csv",
        "checkpoint_n40.csv",
        "errors.md",
        "errors.csv",
    ] {
        assert!(dir.path().join("a").join(name).exists(), "{name}");
    }
    spec.out = Some(dir.path().join("b"));
    run_experiment(&spec).unwrap();
    for name in ["solution_n40.csv", "limiter_n40.csv", "checkpoint_n40.csv"] {
        let a = std::fs::read(dir.path().join("a").join(name)).unwrap();
        let b = std::fs::read(dir.path().join("b").join(name)).unwrap();
        assert_eq!(a, b, "{name}");
    }
}

#[test]
fn two_dimensional_run_writes_contours() {
    let dir = tempfile::tempdir().unwrap();
    let mut spec = ExperimentSpec::for_example(ExampleId::Ex5Config6);
    spec.cells = vec![8];
    spec.t_final = 0.02;
    spec.out = Some(dir.path().to_path_buf());
    let rep = run_experiment(&spec).unwrap();
    assert!(rep.errors.is_none());
    let levels = std::fs::read_to_string(dir.path().join("contours_n8.txt")).unwrap();
    assert_eq!(levels.lines().count(), CONTOUR_LEVELS);
}

#[test]
fn wrong_dimension_is_rejected() {
    let spec = ExperimentSpec::for_example(ExampleId::Ex2);
    assert!(run_case_1d(&spec, 8).is_err());
}
