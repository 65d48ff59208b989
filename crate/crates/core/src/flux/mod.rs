//! Numerical interface fluxes.
//!
//! Every flux here is written for a state in an interface-aligned frame:
//! component 1 is the normal momentum, the last component is the energy, and
//! anything in between is tangential momentum that is advected passively.
//! [`State1`] is used directly; a [`State2`] is rotated into the frame of the
//! interface normal first (see [`rotated_flux`]).

pub mod riemann;

use std::fmt;
use std::str::FromStr;
use std::sync::atomic::{AtomicUsize, Ordering};

use crate::error::{IrpError, Result};
use crate::euler::{pressure_raw, ConservedState, GasModel, State1, State2};

pub use riemann::{
    exact_riemann, exact_riemann_primitive, pressure_function, riemann_sample, sample_exact,
    wave_speed_bounds, Primitive, RiemannStarState,
};

/// Flux selection.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FluxKind {
    LxfGlobal,
    LxfLocal,
    Hll,
    Hllc,
    Godunov,
}

impl FluxKind {
    pub const ALL: [FluxKind; 5] = [
        FluxKind::LxfGlobal,
        FluxKind::LxfLocal,
        FluxKind::Hll,
        FluxKind::Hllc,
        FluxKind::Godunov,
    ];

    /// CFL constant for which the first-order scheme is region preserving.
    pub fn c0(&self) -> f64 {
        match self {
            FluxKind::LxfGlobal | FluxKind::Godunov => 1.0,
            FluxKind::LxfLocal | FluxKind::Hll | FluxKind::Hllc => 0.5,
        }
    }

    pub fn token(&self) -> &'static str {
        match self {
            FluxKind::LxfGlobal => "lxf-global",
            FluxKind::LxfLocal => "lxf-local",
            FluxKind::Hll => "hll",
            FluxKind::Hllc => "hllc",
            FluxKind::Godunov => "godunov",
        }
    }
}

impl fmt::Display for FluxKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

impl FromStr for FluxKind {
    type Err = IrpError;

    fn from_str(s: &str) -> Result<Self> {
        FluxKind::ALL
            .iter()
            .copied()
            .find(|k| k.token() == s)
            .ok_or_else(|| IrpError::InvalidArgument(format!("unknown flux '{s}'")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WaveSpeedEstimate {
    pub sigma_l: f64,
    pub sigma_r: f64,
    pub sigma_star: Option<f64>,
}

/// Normal velocity, pressure and sound speed of a frame state.
#[derive(Debug, Clone, Copy)]
struct Frame {
    rho: f64,
    u: f64,
    p: f64,
    c: f64,
}

#[inline]
fn frame<S: ConservedState>(w: &S, gas: &GasModel) -> Result<Frame> {
    let rho = w.density();
    if !(rho > 0.0) {
        return Err(IrpError::Vacuum { rho });
    }
    let p = pressure_raw(w, gas);
    if p < 0.0 {
        return Err(IrpError::NegativePressure { p });
    }
    Ok(Frame {
        rho,
        u: w.component(1) / rho,
        p,
        c: (gas.gamma * p / rho).sqrt(),
    })
}

#[inline]
fn physical_flux<S: ConservedState>(w: &S, f: &Frame) -> S {
    let n = S::NVARS;
    let mut c = [0.0; 4];
    for (i, ci) in c.iter_mut().enumerate().take(n) {
        *ci = w.component(i) * f.u;
    }
    c[1] += f.p;
    c[n - 1] += f.p * f.u;
    S::from_components(&c[..n])
}

/// Normal flux `F(w)·e₁` of a frame state.
pub fn frame_flux<S: ConservedState>(w: &S, gas: &GasModel) -> Result<S> {
    let f = frame(w, gas)?;
    Ok(physical_flux(w, &f))
}

/// Builds a frame state from `(ρ, u, p)` with tangential velocity taken from
/// `donor`.
fn with_normal_parts<S: ConservedState>(rho: f64, u: f64, p: f64, donor: &S, gas: &GasModel) -> S {
    let n = S::NVARS;
    let mut c = [0.0; 4];
    c[0] = rho;
    c[1] = rho * u;
    let mut ke = u * u;
    for (i, ci) in c.iter_mut().enumerate().take(n - 1).skip(2) {
        let v = donor.component(i) / donor.density();
        *ci = rho * v;
        ke += v * v;
    }
    c[n - 1] = p / (gas.gamma - 1.0) + 0.5 * rho * ke;
    S::from_components(&c[..n])
}

/// `½(f(w_l) + f(w_r) − σ(w_r − w_l))` with a prescribed `σ`.
pub fn lxf_global<S: ConservedState>(w_l: &S, w_r: &S, sigma: f64, gas: &GasModel) -> Result<S> {
    let fl = frame_flux(w_l, gas)?;
    let fr = frame_flux(w_r, gas)?;
    Ok((fl + fr - (*w_r - *w_l) * sigma) * 0.5)
}

fn hll_from<S: ConservedState>(fl: S, fr: S, w_l: &S, w_r: &S, sl: f64, sr: f64) -> S {
    if sl >= 0.0 {
        fl
    } else if sr <= 0.0 {
        fr
    } else {
        (fl * sr - fr * sl + (*w_r - *w_l) * (sl * sr)) * (1.0 / (sr - sl))
    }
}

/// Three-branch HLL flux.
pub fn hll<S: ConservedState>(
    w_l: &S,
    w_r: &S,
    est: &WaveSpeedEstimate,
    gas: &GasModel,
) -> Result<S> {
    if !(est.sigma_l <= est.sigma_r) {
        return Err(IrpError::InvalidArgument(format!(
            "wave speeds out of order: {} > {}",
            est.sigma_l, est.sigma_r
        )));
    }
    let fl = frame_flux(w_l, gas)?;
    let fr = frame_flux(w_r, gas)?;
    Ok(hll_from(fl, fr, w_l, w_r, est.sigma_l, est.sigma_r))
}

/// Local Lax-Friedrichs: HLL with `σ_r = −σ_l = max(|u| + c)`.
pub fn lxf_local<S: ConservedState>(w_l: &S, w_r: &S, gas: &GasModel) -> Result<S> {
    let a = frame(w_l, gas)?;
    let b = frame(w_r, gas)?;
    let s = (a.u.abs() + a.c).max(b.u.abs() + b.c);
    let fl = physical_flux(w_l, &a);
    let fr = physical_flux(w_r, &b);
    Ok((fl + fr - (*w_r - *w_l) * s) * 0.5)
}

fn davis(a: &Frame, b: &Frame) -> (f64, f64) {
    ((a.u - a.c).min(b.u - b.c), (a.u + a.c).max(b.u + b.c))
}

fn star_speed(a: &Frame, b: &Frame, sl: f64, sr: f64) -> Option<f64> {
    let den = a.rho * (sl - a.u) - b.rho * (sr - b.u);
    let num = b.p - a.p + a.rho * a.u * (sl - a.u) - b.rho * b.u * (sr - b.u);
    let scale = a.rho * (sr - sl).abs() + b.rho * (sr - sl).abs();
    if den.abs() <= 1e-14 * scale || !den.is_finite() {
        None
    } else {
        Some(num / den)
    }
}

/// Davis bounds `σ_l = min(u_l − c_l, u_r − c_r)`, `σ_r = max(u_l + c_l, u_r + c_r)`
/// and the contact speed from the momentum balance.
pub fn hllc_wavespeeds<S: ConservedState>(
    w_l: &S,
    w_r: &S,
    gas: &GasModel,
) -> Result<WaveSpeedEstimate> {
    let a = frame(w_l, gas)?;
    let b = frame(w_r, gas)?;
    let (sl, sr) = davis(&a, &b);
    Ok(WaveSpeedEstimate {
        sigma_l: sl,
        sigma_r: sr,
        sigma_star: star_speed(&a, &b, sl, sr),
    })
}

/// Intermediate HLLC state on side `K`.
fn hllc_star<S: ConservedState>(w: &S, f: &Frame, sk: f64, ss: f64) -> S {
    let n = S::NVARS;
    let rho = f.rho * (sk - f.u) / (sk - ss);
    let mut c = [0.0; 4];
    c[0] = rho;
    c[1] = rho * ss;
    for (i, ci) in c.iter_mut().enumerate().take(n - 1).skip(2) {
        *ci = rho * w.component(i) / f.rho;
    }
    c[n - 1] = rho * (w.energy() / f.rho + (ss - f.u) * (ss + f.p / (f.rho * (sk - f.u))));
    S::from_components(&c[..n])
}

static HLLC_FALLBACKS: AtomicUsize = AtomicUsize::new(0);

/// Number of HLLC evaluations that fell back to HLL because the contact
/// speed was undefined.
pub fn hllc_fallback_count() -> usize {
    HLLC_FALLBACKS.load(Ordering::Relaxed)
}

/// HLLC flux with the single-star-pressure closure.
pub fn hllc<S: ConservedState>(w_l: &S, w_r: &S, gas: &GasModel) -> Result<S> {
    let a = frame(w_l, gas)?;
    let b = frame(w_r, gas)?;
    let (sl, sr) = davis(&a, &b);
    let fl = physical_flux(w_l, &a);
    let fr = physical_flux(w_r, &b);
    if sl >= 0.0 {
        return Ok(fl);
    }
    if sr <= 0.0 {
        return Ok(fr);
    }
    let Some(ss) = star_speed(&a, &b, sl, sr) else {
        HLLC_FALLBACKS.fetch_add(1, Ordering::Relaxed);
        return Ok(hll_from(fl, fr, w_l, w_r, sl, sr));
    };
    if ss >= 0.0 {
        let ws = hllc_star(w_l, &a, sl, ss);
        Ok(fl + (ws - *w_l) * sl)
    } else {
        let ws = hllc_star(w_r, &b, sr, ss);
        Ok(fr + (ws - *w_r) * sr)
    }
}

/// Both HLLC star states, for checking the contact relation.
pub fn hllc_star_states<S: ConservedState>(
    w_l: &S,
    w_r: &S,
    gas: &GasModel,
) -> Result<Option<(WaveSpeedEstimate, S, S)>> {
    let a = frame(w_l, gas)?;
    let b = frame(w_r, gas)?;
    let (sl, sr) = davis(&a, &b);
    Ok(star_speed(&a, &b, sl, sr).map(|ss| {
        (
            WaveSpeedEstimate {
                sigma_l: sl,
                sigma_r: sr,
                sigma_star: Some(ss),
            },
            hllc_star(w_l, &a, sl, ss),
            hllc_star(w_r, &b, sr, ss),
        )
    }))
}

/// Godunov flux `f(R(0; w_l, w_r))` from the exact Riemann solver.
/// Tangential velocity is taken from the side of the contact that `ξ = 0`
/// falls on.
pub fn godunov<S: ConservedState>(w_l: &S, w_r: &S, gas: &GasModel) -> Result<S> {
    let l = Primitive::from_state(w_l, gas)?;
    let r = Primitive::from_state(w_r, gas)?;
    let star = exact_riemann_primitive(&l, &r, gas)?;
    let (s, left) = riemann::sample_primitive(&star, &l, &r, 0.0, gas);
    let donor = if left { w_l } else { w_r };
    let w0 = with_normal_parts(s.rho, s.u, s.p, donor, gas);
    frame_flux(&w0, gas)
}

/// Largest `|u| + c` of the two states (frame-normal velocity).
pub fn local_speed<S: ConservedState>(w_l: &S, w_r: &S, gas: &GasModel) -> Result<f64> {
    let a = frame(w_l, gas)?;
    let b = frame(w_r, gas)?;
    Ok((a.u.abs() + a.c).max(b.u.abs() + b.c))
}

/// Dispatches on [`FluxKind`]. `sigma_global` is only read by the global
/// Lax-Friedrichs flux.
#[inline]
pub fn numerical_flux<S: ConservedState>(
    kind: FluxKind,
    w_l: &S,
    w_r: &S,
    sigma_global: f64,
    gas: &GasModel,
) -> Result<S> {
    match kind {
        FluxKind::LxfGlobal => lxf_global(w_l, w_r, sigma_global, gas),
        FluxKind::LxfLocal => lxf_local(w_l, w_r, gas),
        FluxKind::Hll => {
            let est = hllc_wavespeeds(w_l, w_r, gas)?;
            hll(w_l, w_r, &est, gas)
        }
        FluxKind::Hllc => hllc(w_l, w_r, gas),
        FluxKind::Godunov => godunov(w_l, w_r, gas),
    }
}

/// 1D flux on physical states.
pub fn flux_1d_numerical(
    kind: FluxKind,
    w_l: &State1,
    w_r: &State1,
    sigma_global: f64,
    gas: &GasModel,
) -> Result<State1> {
    numerical_flux(kind, w_l, w_r, sigma_global, gas)
}

/// Flux across an edge with unit normal `ν`: rotate both traces into the
/// normal frame, apply the 1D flux, rotate back.
pub fn rotated_flux(
    kind: FluxKind,
    w_l: &State2,
    w_r: &State2,
    nu: [f64; 2],
    sigma_global: f64,
    gas: &GasModel,
) -> Result<State2> {
    let a = w_l.to_frame(nu);
    let b = w_r.to_frame(nu);
    Ok(numerical_flux(kind, &a, &b, sigma_global, gas)?.from_frame(nu))
}

/// Flux across an x-normal edge; no rotation needed.
#[inline]
pub fn x_flux(
    kind: FluxKind,
    w_l: &State2,
    w_r: &State2,
    sigma: f64,
    gas: &GasModel,
) -> Result<State2> {
    numerical_flux(kind, w_l, w_r, sigma, gas)
}

/// Flux across a y-normal edge via the exact `x ↔ y` swap.
#[inline]
pub fn y_flux(
    kind: FluxKind,
    w_l: &State2,
    w_r: &State2,
    sigma: f64,
    gas: &GasModel,
) -> Result<State2> {
    let swap = |w: &State2| State2::new(w.rho, w.n, w.m, w.e);
    let f = numerical_flux(kind, &swap(w_l), &swap(w_r), sigma, gas)?;
    Ok(swap(&f))
}

#[cfg(test)]
mod tests;
