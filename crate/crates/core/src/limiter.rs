//! Explicit invariant-region limiter.
//!
//! A cell polynomial `w_h` with admissible average `w̄` is replaced by
//! `θ·w_h + (1 − θ)·w̄`, with the largest `θ ∈ [0, 1]` that brings every
//! test-set value back into the region. For the Euler system the region is
//! `{ρ ≥ ε, p ≥ ε, q ≤ 0}`; concavity of `p` and convexity of `q` make a single
//! ratio per constraint sufficient. In the orthonormal basis the convex
//! combination is a scaling of the non-constant modes.

use std::io::Write;
use std::path::Path;

use crate::error::{IrpError, Result};
use crate::euler::{functionals, ConservedState, GasModel};
use crate::quadrature::TestSet;
use crate::solver::basis::{self, SampleTable};
use crate::solver::polynomial::CellPolynomial;
use crate::solver::DgSolution;

/// Which constraints the limiter enforces.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LimiterMode {
    /// Density, pressure and the entropy functional `q`.
    Euler,
    /// Density and pressure only.
    PositivityOnly,
}

impl LimiterMode {
    pub fn token(&self) -> &'static str {
        match self {
            LimiterMode::Euler => "irp",
            LimiterMode::PositivityOnly => "positivity",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LimiterConfig {
    pub epsilon: f64,
    pub mode: LimiterMode,
    /// Admissible overshoot of `q`. Zero reproduces the exact set; a tiny
    /// positive value keeps states lying on `q = 0` (up to rounding) from
    /// being rejected.
    pub q_tolerance: f64,
}

impl LimiterConfig {
    pub fn irp(epsilon: f64) -> Self {
        Self {
            epsilon,
            mode: LimiterMode::Euler,
            q_tolerance: 0.0,
        }
    }

    pub fn positivity_only(epsilon: f64) -> Self {
        Self {
            epsilon,
            mode: LimiterMode::PositivityOnly,
            q_tolerance: 0.0,
        }
    }

    pub fn with_q_tolerance(mut self, tol: f64) -> Self {
        self.q_tolerance = tol;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.epsilon > 0.0) {
            return Err(IrpError::InvalidArgument(format!(
                "limiter epsilon must be positive, got {}",
                self.epsilon
            )));
        }
        if !(self.q_tolerance >= 0.0) {
            return Err(IrpError::InvalidArgument(format!(
                "q tolerance must be non-negative, got {}",
                self.q_tolerance
            )));
        }
        Ok(())
    }
}

/// Extremal and average functional values together with the resulting `θ`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThetaBreakdown {
    pub theta: f64,
    pub theta_rho: f64,
    pub theta_p: f64,
    pub theta_q: f64,
    pub rho_min: f64,
    pub p_min: f64,
    pub q_max: f64,
    pub rho_bar: f64,
    pub p_bar: f64,
    pub q_bar: f64,
}

/// One activation of the limiter (`θ < 1`).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LimiterEvent {
    pub step: usize,
    pub stage: usize,
    /// Linear cell index (`i + nx·j` in 2D).
    pub cell: usize,
    pub theta: f64,
    pub rho_min: f64,
    pub p_min: f64,
    pub q_max: f64,
    pub rho_bar: f64,
    pub p_bar: f64,
    pub q_bar: f64,
}

impl LimiterEvent {
    pub const CSV_HEADER: &'static str =
        "step,stage,cell,theta,rho_min,p_min,q_max,rho_bar,p_bar,q_bar";

    pub fn from_breakdown(step: usize, stage: usize, cell: usize, b: &ThetaBreakdown) -> Self {
        Self {
            step,
            stage,
            cell,
            theta: b.theta,
            rho_min: b.rho_min,
            p_min: b.p_min,
            q_max: b.q_max,
            rho_bar: b.rho_bar,
            p_bar: b.p_bar,
            q_bar: b.q_bar,
        }
    }

    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{:.16e},{:.16e},{:.16e},{:.16e},{:.16e},{:.16e},{:.16e}",
            self.step,
            self.stage,
            self.cell,
            self.theta,
            self.rho_min,
            self.p_min,
            self.q_max,
            self.rho_bar,
            self.p_bar,
            self.q_bar
        )
    }
}

pub fn write_events_csv(path: &Path, events: &[LimiterEvent]) -> Result<()> {
    let mut f = std::io::BufWriter::new(std::fs::File::create(path)?);
    writeln!(f, "{}", LimiterEvent::CSV_HEADER)?;
    for e in events {
        writeln!(f, "{}", e.csv_row())?;
    }
    f.flush()?;
    Ok(())
}

#[inline]
fn clip(theta: f64) -> f64 {
    if theta.is_nan() {
        0.0
    } else {
        theta.clamp(0.0, 1.0)
    }
}

/// `θ₁ = U(w̄)/(U(w̄) − U_max)` for a single functional whose admissible set
/// is `{U ≤ 0}`.
pub fn theta_generic(u_bar: f64, u_max: f64) -> Result<f64> {
    if !(u_bar < 0.0) {
        return Err(IrpError::CellAverageOutsideInterior { u_bar });
    }
    if u_max <= 0.0 {
        return Ok(1.0);
    }
    Ok(clip(u_bar / (u_bar - u_max)))
}

fn average_check(
    rho_bar: f64,
    p_bar: f64,
    q_bar: f64,
    eps: f64,
    q_tol: f64,
    with_q: bool,
) -> Result<()> {
    if !(rho_bar > eps) {
        return Err(IrpError::AverageOutsideRegion {
            constraint: "rho",
            margin: rho_bar - eps,
        });
    }
    if !(p_bar > eps) {
        return Err(IrpError::AverageOutsideRegion {
            constraint: "p",
            margin: p_bar - eps,
        });
    }
    if with_q && !(q_bar < q_tol) {
        return Err(IrpError::AverageOutsideRegion {
            constraint: "q",
            margin: q_bar,
        });
    }
    Ok(())
}

/// Accumulates sample extrema.
#[derive(Debug, Clone, Copy)]
struct Extrema {
    rho_min: f64,
    p_min: f64,
    q_max: f64,
}

impl Extrema {
    fn new() -> Self {
        Self {
            rho_min: f64::INFINITY,
            p_min: f64::INFINITY,
            q_max: f64::NEG_INFINITY,
        }
    }

    #[inline]
    fn push<S: ConservedState>(&mut self, w: &S, gas: &GasModel) {
        let (rho, p, q) = functionals(w, gas);
        self.rho_min = self.rho_min.min(rho);
        self.p_min = self.p_min.min(p);
        self.q_max = self.q_max.max(q);
    }
}

fn breakdown_from_extrema<S: ConservedState>(
    w_bar: &S,
    ext: Extrema,
    gas: &GasModel,
    cfg: &LimiterConfig,
) -> Result<ThetaBreakdown> {
    let eps = cfg.epsilon;
    let with_q = cfg.mode == LimiterMode::Euler;
    let (rho_bar, p_bar, q_bar) = functionals(w_bar, gas);
    let mut b = ThetaBreakdown {
        theta: 1.0,
        theta_rho: 1.0,
        theta_p: 1.0,
        theta_q: 1.0,
        rho_min: ext.rho_min,
        p_min: ext.p_min,
        q_max: ext.q_max,
        rho_bar,
        p_bar,
        q_bar,
    };
    let rho_bad = ext.rho_min < eps;
    let p_bad = ext.p_min < eps;
    let q_bad = with_q && ext.q_max > cfg.q_tolerance;
    if !(rho_bad || p_bad || q_bad) {
        return Ok(b);
    }
    average_check(rho_bar, p_bar, q_bar, eps, cfg.q_tolerance, with_q)?;
    if rho_bad {
        b.theta_rho = clip((rho_bar - eps) / (rho_bar - ext.rho_min));
    }
    if p_bad {
        b.theta_p = clip((p_bar - eps) / (p_bar - ext.p_min));
    }
    if q_bad {
        b.theta_q = clip((cfg.q_tolerance - q_bar) / (ext.q_max - q_bar));
    }
    b.theta = b.theta_rho.min(b.theta_p).min(b.theta_q);
    Ok(b)
}

/// `θ` together with the values it was computed from. The average is only
/// required to be admissible when some sample violates a constraint.
pub fn theta_breakdown<S: ConservedState>(
    w_bar: &S,
    samples: &[S],
    gas: &GasModel,
    cfg: &LimiterConfig,
) -> Result<ThetaBreakdown> {
    let mut ext = Extrema::new();
    for w in samples {
        ext.push(w, gas);
    }
    breakdown_from_extrema(w_bar, ext, gas, cfg)
}

/// `θ = min{1, θ₁, θ₂, θ₃}` for the Euler region with the floor taken from
/// `gas.epsilon`. Requires the average to lie strictly inside the region.
pub fn theta_euler<S: ConservedState>(w_bar: &S, samples: &[S], gas: &GasModel) -> Result<f64> {
    let (rho_bar, p_bar, q_bar) = functionals(w_bar, gas);
    average_check(rho_bar, p_bar, q_bar, gas.epsilon, 0.0, true)?;
    Ok(theta_breakdown(w_bar, samples, gas, &LimiterConfig::irp(gas.epsilon))?.theta)
}

/// Limits a modal coefficient slice in place using tabulated sample points.
/// Returns the breakdown when `θ < 1`.
pub fn limit_modes<S: ConservedState>(
    coeffs: &mut [S],
    table: &SampleTable,
    gas: &GasModel,
    cfg: &LimiterConfig,
) -> Result<Option<ThetaBreakdown>> {
    let mut ext = Extrema::new();
    for j in 0..table.len() {
        ext.push(&table.eval(coeffs, j), gas);
    }
    let b = breakdown_from_extrema(&coeffs[0], ext, gas, cfg)?;
    if b.theta < 1.0 {
        for c in coeffs.iter_mut().skip(1) {
            *c = *c * b.theta;
        }
        Ok(Some(b))
    } else {
        Ok(None)
    }
}

/// Limits one cell polynomial over its test set.
pub fn limit_cell<S: ConservedState>(
    poly: &CellPolynomial<S>,
    ts: &TestSet,
    gas: &GasModel,
    cfg: &LimiterConfig,
) -> Result<(CellPolynomial<S>, Option<LimiterEvent>)> {
    let table = SampleTable::new(poly.dim, poly.degree, ts.unique_reference_points());
    let mut out = poly.clone();
    let b = limit_modes(&mut out.modes, &table, gas, cfg)?;
    Ok((out, b.map(|b| LimiterEvent::from_breakdown(0, 0, 0, &b))))
}

/// Single-functional limiter: enforces `U ≤ 0` at the test set for any
/// convex `U`, given `U(w̄) < 0`. Returns the limited polynomial and `θ`.
pub fn limit_generic<S, F>(
    poly: &CellPolynomial<S>,
    ts: &TestSet,
    functional: F,
) -> Result<(CellPolynomial<S>, f64)>
where
    S: ConservedState,
    F: Fn(&S) -> f64,
{
    let u_bar = functional(&poly.average());
    let mut u_max = f64::NEG_INFINITY;
    for r in ts.unique_reference_points() {
        u_max = u_max.max(functional(&poly.eval(&basis::tabulate(
            poly.dim,
            poly.degree,
            r,
        ))));
    }
    let theta = theta_generic(u_bar, u_max)?;
    let mut out = poly.clone();
    if theta < 1.0 {
        out.contract(theta);
    }
    Ok((out, theta))
}

/// Applies the limiter to every cell. A cell whose average is inadmissible
/// aborts the sweep with its index.
pub fn limit_field<S: ConservedState>(
    sol: &mut DgSolution<S>,
    table: &SampleTable,
    cfg: &LimiterConfig,
    step: usize,
    stage: usize,
) -> Result<Vec<LimiterEvent>> {
    let gas = sol.gas;
    let nm = table.modes;
    let mut events = Vec::new();
    for (cell, coeffs) in sol.coeffs.chunks_mut(nm).enumerate() {
        match limit_modes(coeffs, table, &gas, cfg) {
            Ok(Some(b)) => events.push(LimiterEvent::from_breakdown(step, stage, cell, &b)),
            Ok(None) => {}
            Err(e) => {
                return Err(IrpError::RegionViolation {
                    cell,
                    source: Box::new(e),
                })
            }
        }
    }
    Ok(events)
}
