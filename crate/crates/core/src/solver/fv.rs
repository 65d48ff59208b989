//! First-order finite volumes, `w_j ← w_j − λ(f̂_{j+½} − f̂_{j−½})`.

use crate::error::{IrpError, Result};
use crate::euler::{max_wave_speed_1d, GasModel, State1};
use crate::flux::{numerical_flux, wave_speed_bounds, FluxKind, Primitive};
use crate::solver::mesh::Boundary;

/// Update of a single cell from its two neighbours.
pub fn fv_update_cell(
    w_m: &State1,
    w_0: &State1,
    w_p: &State1,
    kind: FluxKind,
    lambda: f64,
    sigma_global: f64,
    gas: &GasModel,
) -> Result<State1> {
    let f_m = numerical_flux(kind, w_m, w_0, sigma_global, gas)?;
    let f_p = numerical_flux(kind, w_0, w_p, sigma_global, gas)?;
    Ok(*w_0 - (f_p - f_m) * lambda)
}

/// One step on a row of cell averages. Refuses `λσ > c₀` unless
/// `allow_cfl_violation` is set.
pub fn fv_step_1d(
    averages: &[State1],
    kind: FluxKind,
    lambda: f64,
    gas: &GasModel,
    bc: Boundary,
    allow_cfl_violation: bool,
) -> Result<Vec<State1>> {
    let n = averages.len();
    if n < 2 {
        return Err(IrpError::InvalidArgument("need at least 2 cells".into()));
    }
    let mut sigma: f64 = 0.0;
    for (cell, w) in averages.iter().enumerate() {
        let s = max_wave_speed_1d(w, gas).map_err(|e| IrpError::NonPhysical {
            cell,
            point: 0,
            reason: e.to_string(),
        })?;
        sigma = sigma.max(s);
    }
    let bound = kind.c0();
    if lambda * sigma > bound * (1.0 + 1e-12) && !allow_cfl_violation {
        return Err(IrpError::CflViolation {
            value: lambda * sigma,
            bound,
        });
    }
    let ghost_l = match bc {
        Boundary::Periodic => averages[n - 1],
        Boundary::Transmissive => averages[0],
    };
    let ghost_r = match bc {
        Boundary::Periodic => averages[0],
        Boundary::Transmissive => averages[n - 1],
    };
    let mut fluxes = Vec::with_capacity(n + 1);
    for i in 0..=n {
        let wl = if i == 0 { ghost_l } else { averages[i - 1] };
        let wr = if i == n { ghost_r } else { averages[i] };
        fluxes.push(numerical_flux(kind, &wl, &wr, sigma, gas)?);
    }
    Ok(averages
        .iter()
        .enumerate()
        .map(|(i, w)| *w - (fluxes[i + 1] - fluxes[i]) * lambda)
        .collect())
}

/// Largest signal speed of a small stencil: `|u| + c` of every state and the
/// extreme wave speeds of the exact Riemann problem between every pair.
/// Shocks can outrun `|u| + c`, so this is the speed the region-preserving
/// CFL bound of the first-order scheme refers to.
pub fn stencil_signal_speed(states: &[State1], gas: &GasModel) -> Result<f64> {
    let prim = states
        .iter()
        .map(|w| Primitive::from_state(w, gas))
        .collect::<Result<Vec<_>>>()?;
    let mut sigma: f64 = 0.0;
    for w in states {
        sigma = sigma.max(max_wave_speed_1d(w, gas)?);
    }
    for i in 0..prim.len() {
        for j in i + 1..prim.len() {
            let (l, r) = wave_speed_bounds(&prim[i], &prim[j], gas)?;
            sigma = sigma.max(l.abs()).max(r.abs());
        }
    }
    Ok(sigma)
}
