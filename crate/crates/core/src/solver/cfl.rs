//! Time-step selection.
//!
//! The theoretical steps are the bounds under which the evolved cell averages
//! provably stay in the region; the practical steps are the fixed divisors
//! used for the benchmark runs (`Δx/(4σ)` for `P¹`, `Δx/(12σ)` for `P²`, and
//! `1/(4η)`, `1/(12η)` with `η = σ₁/Δx + σ₂/Δy` in 2D).

use crate::error::{IrpError, Result};
use crate::quadrature::{lobatto_count_for_degree, lobatto_endpoint_weight};
use crate::solver::basis::SampleTable;
use crate::solver::{DgSolution, DgState};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CflMode {
    Theoretical,
    Practical,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CflPolicy {
    pub mode: CflMode,
    /// Flux constant used by the theoretical bound.
    pub c0: f64,
    /// Multiplies the theoretical step; `0 < safety ≤ 1`.
    pub safety: f64,
    /// Replaces the practical divisor (`Δt = Δx/(dσ)` or `1/(dη)`).
    pub divisor: Option<f64>,
}

impl CflPolicy {
    pub fn theoretical(c0: f64) -> Self {
        Self {
            mode: CflMode::Theoretical,
            c0,
            safety: 1.0,
            divisor: None,
        }
    }

    pub fn practical() -> Self {
        Self {
            mode: CflMode::Practical,
            c0: 0.5,
            safety: 1.0,
            divisor: None,
        }
    }

    pub fn with_safety(mut self, safety: f64) -> Self {
        self.safety = safety;
        self
    }

    pub fn with_divisor(mut self, d: f64) -> Self {
        self.divisor = Some(d);
        self
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.safety > 0.0 && self.safety <= 1.0) {
            return Err(IrpError::InvalidArgument(format!(
                "CFL safety factor must lie in (0, 1], got {}",
                self.safety
            )));
        }
        if !(self.c0 > 0.0) {
            return Err(IrpError::InvalidArgument(format!(
                "c0 must be positive, got {}",
                self.c0
            )));
        }
        if let Some(d) = self.divisor {
            if !(d > 0.0) {
                return Err(IrpError::InvalidArgument(format!(
                    "divisor must be positive, got {d}"
                )));
            }
        }
        Ok(())
    }
}

/// Default practical divisor `2N(N−1)`: 4 for `k ≤ 1`, 12 for `k = 2, 3`.
pub fn practical_divisor(k: usize) -> f64 {
    let n = lobatto_count_for_degree(k) as f64;
    2.0 * n * (n - 1.0)
}

fn check_sigma(sigma: f64) -> Result<()> {
    if !(sigma > 0.0) || !sigma.is_finite() {
        return Err(IrpError::InvalidArgument(format!(
            "wave speed must be positive and finite, got {sigma}"
        )));
    }
    Ok(())
}

/// `Δt = c₀Δx / (N(N−1)σ)`.
pub fn theoretical_dt_1d(dx: f64, sigma: f64, k: usize, c0: f64) -> Result<f64> {
    check_sigma(sigma)?;
    Ok(c0 * lobatto_endpoint_weight(k) * dx / sigma)
}

/// `Δt = ŵ₁c₀ΔxΔy / (4σ(Δx + Δy))`, `σ = max(σ₁, σ₂)`.
pub fn theoretical_dt_rect(dx: f64, dy: f64, sigma: f64, k: usize, c0: f64) -> Result<f64> {
    check_sigma(sigma)?;
    Ok(lobatto_endpoint_weight(k) * c0 * dx * dy / (4.0 * sigma * (dx + dy)))
}

/// Dimension-by-dimension step `ŵ₁c₀ / (σ₁/Δx + σ₂/Δy)`.
pub fn split_dt_rect(dx: f64, dy: f64, s1: f64, s2: f64, k: usize, c0: f64) -> Result<f64> {
    let eta = s1 / dx + s2 / dy;
    check_sigma(eta)?;
    Ok(lobatto_endpoint_weight(k) * c0 / eta)
}

/// `Δt = (2/3)·ŵ₁·c₀·|K| / (|∂K|·σ)` for a triangle.
pub fn triangular_cfl(area: f64, perimeter: f64, sigma: f64, k: usize, c0: f64) -> Result<f64> {
    if !(area > 0.0 && perimeter > 0.0) {
        return Err(IrpError::InvalidArgument(format!(
            "triangle geometry must be positive: |K| = {area}, |dK| = {perimeter}"
        )));
    }
    check_sigma(sigma)?;
    Ok(2.0 / 3.0 * lobatto_endpoint_weight(k) * c0 * area / (perimeter * sigma))
}

/// Global `max |u| + c` and `max |v| + c` over all test points.
pub fn wave_speeds<S: DgState>(sol: &DgSolution<S>, table: &SampleTable) -> Result<[f64; 2]> {
    let nm = sol.modes_per_cell();
    let mut s = [0.0f64; 2];
    for (cell, c) in sol.coeffs.chunks(nm).enumerate() {
        for p in 0..table.len() {
            let sp = table
                .eval(c, p)
                .axis_speeds(&sol.gas)
                .map_err(|e| IrpError::NonPhysical {
                    cell,
                    point: p,
                    reason: e.to_string(),
                })?;
            s[0] = s[0].max(sp[0]);
            s[1] = s[1].max(sp[1]);
        }
    }
    Ok(s)
}

/// Step for the current solution under `policy`.
pub fn cfl_dt<S: DgState>(
    sol: &DgSolution<S>,
    table: &SampleTable,
    policy: &CflPolicy,
) -> Result<f64> {
    policy.validate()?;
    let [s1, s2] = wave_speeds(sol, table)?;
    let k = sol.degree;
    let m = &sol.mesh;
    match policy.mode {
        CflMode::Theoretical => {
            let dt = if m.dim == 1 {
                theoretical_dt_1d(m.dx, s1, k, policy.c0)?
            } else {
                theoretical_dt_rect(m.dx, m.dy, s1.max(s2), k, policy.c0)?
            };
            Ok(policy.safety * dt)
        }
        CflMode::Practical => {
            let d = policy.divisor.unwrap_or_else(|| practical_divisor(k));
            if m.dim == 1 {
                check_sigma(s1)?;
                Ok(m.dx / (d * s1))
            } else {
                let eta = s1 / m.dx + s2 / m.dy;
                check_sigma(eta)?;
                Ok(1.0 / (d * eta))
            }
        }
    }
}
