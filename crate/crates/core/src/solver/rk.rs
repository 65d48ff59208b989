//! Three-stage SSP Runge-Kutta with the limiter applied after every stage.

use crate::error::Result;
use crate::limiter::{limit_field, LimiterConfig, LimiterEvent};
use crate::solver::basis::SampleTable;
use crate::solver::cfl::{cfl_dt, CflPolicy};
use crate::solver::dg::DgOperator;
use crate::solver::{DgSolution, DgState};

#[derive(Debug, Clone)]
pub struct StepReport<S> {
    pub events: Vec<LimiterEvent>,
    /// Time-integrated net outflow through the domain boundary over the step.
    pub outflow: S,
}

fn axpy<S: DgState>(out: &mut [S], a: f64, x: &[S], b: f64, y: &[S], c: f64, z: &[S]) {
    for (((o, &xi), &yi), &zi) in out.iter_mut().zip(x).zip(y).zip(z) {
        *o = xi * a + yi * b + zi * c;
    }
}

/// One step
///
/// ```text
/// W¹ = Wⁿ + Δt L(Wⁿ)
/// W² = ¾Wⁿ + ¼(W¹ + Δt L(W¹))
/// Wⁿ⁺¹ = ⅓Wⁿ + ⅔(W² + Δt L(W²))
/// ```
///
/// with the limiter applied to each stage result. The limiter logs the step
/// index and stage `1..=3`.
pub fn ssp_rk3_step<S: DgState>(
    sol: &mut DgSolution<S>,
    op: &DgOperator,
    dt: f64,
    limiter: Option<&LimiterConfig>,
    table: &SampleTable,
    step: usize,
) -> Result<StepReport<S>> {
    let w0 = sol.coeffs.clone();
    let mut l = vec![S::default(); w0.len()];
    let mut events = Vec::new();

    let r0 = op.residual(sol, &mut l)?;
    let cur = sol.coeffs.clone();
    axpy(&mut sol.coeffs, 1.0, &cur, dt, &l, 0.0, &w0);
    if let Some(cfg) = limiter {
        events.extend(limit_field(sol, table, cfg, step, 1)?);
    }

    let r1 = op.residual(sol, &mut l)?;
    let cur = sol.coeffs.clone();
    axpy(&mut sol.coeffs, 0.75, &w0, 0.25, &cur, 0.25 * dt, &l);
    if let Some(cfg) = limiter {
        events.extend(limit_field(sol, table, cfg, step, 2)?);
    }

    let r2 = op.residual(sol, &mut l)?;
    let cur = sol.coeffs.clone();
    axpy(
        &mut sol.coeffs,
        1.0 / 3.0,
        &w0,
        2.0 / 3.0,
        &cur,
        2.0 / 3.0 * dt,
        &l,
    );
    if let Some(cfg) = limiter {
        events.extend(limit_field(sol, table, cfg, step, 3)?);
    }

    sol.time += dt;
    Ok(StepReport {
        events,
        outflow: (r0 * (1.0 / 6.0) + r1 * (1.0 / 6.0) + r2 * (2.0 / 3.0)) * dt,
    })
}

#[derive(Debug, Clone)]
pub struct RunSummary<S> {
    pub steps: usize,
    pub events: Vec<LimiterEvent>,
    pub outflow: S,
    pub dt_min: f64,
    pub dt_max: f64,
}

/// Advances to `t_final`, shortening the last step to land on it exactly.
/// `on_step` sees the solution after every step.
pub fn integrate<S, F>(
    sol: &mut DgSolution<S>,
    op: &DgOperator,
    policy: &CflPolicy,
    t_final: f64,
    limiter: Option<&LimiterConfig>,
    table: &SampleTable,
    mut on_step: F,
) -> Result<RunSummary<S>>
where
    S: DgState,
    F: FnMut(&DgSolution<S>, &StepReport<S>),
{
    let mut summary = RunSummary {
        steps: 0,
        events: Vec::new(),
        outflow: S::default(),
        dt_min: f64::INFINITY,
        dt_max: 0.0,
    };
    while sol.time < t_final * (1.0 - 1e-14) {
        let mut dt = cfl_dt(sol, table, policy)?;
        if sol.time + dt > t_final {
            dt = t_final - sol.time;
        }
        summary.steps += 1;
        let report = ssp_rk3_step(sol, op, dt, limiter, table, summary.steps)?;
        on_step(sol, &report);
        summary.outflow += report.outflow;
        summary.events.extend(report.events);
        summary.dt_min = summary.dt_min.min(dt);
        summary.dt_max = summary.dt_max.max(dt);
    }
    sol.time = sol.time.max(t_final);
    Ok(summary)
}
