//! Conserved states, equation of state and invariant-region functionals for
//! the ideal-gas Euler equations in one and two space dimensions.
//!
//! The admissible set used throughout the crate is
//! `Σ^ε = { ρ ≥ ε, p ≥ ε, q ≤ 0 }` with `q = (s₀ − s)ρ` and
//! `s = log(p / ρ^γ)`. Membership is a query ([`region_margins`]); states
//! themselves carry no invariant.

use std::fmt::Debug;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use crate::error::{IrpError, Result};

/// Default floor for density and pressure.
pub const DEFAULT_EPSILON: f64 = 1e-13;

/// Ideal-gas parameters together with the bounds that define `Σ^ε`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GasModel {
    pub gamma: f64,
    pub epsilon: f64,
    pub s0: f64,
}

impl GasModel {
    pub fn new(gamma: f64, epsilon: f64, s0: f64) -> Result<Self> {
        if !(gamma > 1.0 && gamma < 3.0) {
            return Err(IrpError::InvalidArgument(format!(
                "gamma must lie in (1, 3), got {gamma}"
            )));
        }
        if !(epsilon > 0.0) {
            return Err(IrpError::InvalidArgument(format!(
                "epsilon must be positive, got {epsilon}"
            )));
        }
        if !s0.is_finite() {
            return Err(IrpError::InvalidArgument("s0 must be finite".into()));
        }
        Ok(Self { gamma, epsilon, s0 })
    }

    /// γ = 1.4, ε = 1e-13, s₀ = 0.
    pub fn air() -> Self {
        Self {
            gamma: 1.4,
            epsilon: DEFAULT_EPSILON,
            s0: 0.0,
        }
    }

    pub fn with_s0(mut self, s0: f64) -> Self {
        self.s0 = s0;
        self
    }

    pub fn with_epsilon(mut self, epsilon: f64) -> Self {
        self.epsilon = epsilon;
        self
    }
}

/// Common interface of the 1D and 2D conserved-variable vectors.
pub trait ConservedState:
    Copy
    + Debug
    + Default
    + PartialEq
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<f64, Output = Self>
    + Neg<Output = Self>
    + AddAssign
    + SubAssign
    + Send
    + Sync
    + 'static
{
    /// Number of conserved components.
    const NVARS: usize;

    fn density(&self) -> f64;
    fn energy(&self) -> f64;
    /// Squared magnitude of the momentum vector.
    fn momentum_sq(&self) -> f64;
    fn component(&self, i: usize) -> f64;
    fn from_components(c: &[f64]) -> Self;

    fn components(&self) -> Vec<f64> {
        (0..Self::NVARS).map(|i| self.component(i)).collect()
    }

    fn max_abs(&self) -> f64 {
        (0..Self::NVARS)
            .map(|i| self.component(i).abs())
            .fold(0.0, f64::max)
    }
}

/// `(ρ, m, E)` of a one-dimensional gas.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct State1 {
    pub rho: f64,
    pub m: f64,
    pub e: f64,
}

/// `(ρ, m, n, E)` of a two-dimensional gas.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct State2 {
    pub rho: f64,
    pub m: f64,
    pub n: f64,
    pub e: f64,
}

macro_rules! impl_state_ops {
    ($ty:ident { $($f:ident),+ }) => {
        impl Add for $ty {
            type Output = Self;
            #[inline]
            fn add(self, o: Self) -> Self { Self { $($f: self.$f + o.$f),+ } }
        }
        impl Sub for $ty {
            type Output = Self;
            #[inline]
            fn sub(self, o: Self) -> Self { Self { $($f: self.$f - o.$f),+ } }
        }
        impl Mul<f64> for $ty {
            type Output = Self;
            #[inline]
            fn mul(self, a: f64) -> Self { Self { $($f: self.$f * a),+ } }
        }
        impl Mul<$ty> for f64 {
            type Output = $ty;
            #[inline]
            fn mul(self, w: $ty) -> $ty { w * self }
        }
        impl Neg for $ty {
            type Output = Self;
            #[inline]
            fn neg(self) -> Self { Self { $($f: -self.$f),+ } }
        }
        impl AddAssign for $ty {
            #[inline]
            fn add_assign(&mut self, o: Self) { $(self.$f += o.$f;)+ }
        }
        impl SubAssign for $ty {
            #[inline]
            fn sub_assign(&mut self, o: Self) { $(self.$f -= o.$f;)+ }
        }
    };
}

impl_state_ops!(State1 { rho, m, e });
impl_state_ops!(State2 { rho, m, n, e });

impl ConservedState for State1 {
    const NVARS: usize = 3;

    #[inline]
    fn density(&self) -> f64 {
        self.rho
    }
    #[inline]
    fn energy(&self) -> f64 {
        self.e
    }
    #[inline]
    fn momentum_sq(&self) -> f64 {
        self.m * self.m
    }
    fn component(&self, i: usize) -> f64 {
        match i {
            0 => self.rho,
            1 => self.m,
            2 => self.e,
            _ => panic!("State1 has 3 components, asked for {i}"),
        }
    }
    fn from_components(c: &[f64]) -> Self {
        Self::new(c[0], c[1], c[2])
    }
}

impl ConservedState for State2 {
    const NVARS: usize = 4;

    #[inline]
    fn density(&self) -> f64 {
        self.rho
    }
    #[inline]
    fn energy(&self) -> f64 {
        self.e
    }
    #[inline]
    fn momentum_sq(&self) -> f64 {
        self.m * self.m + self.n * self.n
    }
    fn component(&self, i: usize) -> f64 {
        match i {
            0 => self.rho,
            1 => self.m,
            2 => self.n,
            3 => self.e,
            _ => panic!("State2 has 4 components, asked for {i}"),
        }
    }
    fn from_components(c: &[f64]) -> Self {
        Self::new(c[0], c[1], c[2], c[3])
    }
}

impl State1 {
    pub const fn new(rho: f64, m: f64, e: f64) -> Self {
        Self { rho, m, e }
    }

    pub fn from_primitive(rho: f64, u: f64, p: f64, gas: &GasModel) -> Self {
        Self {
            rho,
            m: rho * u,
            e: 0.5 * rho * u * u + p / (gas.gamma - 1.0),
        }
    }

    pub fn velocity(&self) -> f64 {
        self.m / self.rho
    }

    /// Embeds the state into 2D with zero transverse momentum.
    pub fn to_2d(self) -> State2 {
        State2::new(self.rho, self.m, 0.0, self.e)
    }
}

impl State2 {
    pub const fn new(rho: f64, m: f64, n: f64, e: f64) -> Self {
        Self { rho, m, n, e }
    }

    pub fn from_primitive(rho: f64, u: f64, v: f64, p: f64, gas: &GasModel) -> Self {
        Self {
            rho,
            m: rho * u,
            n: rho * v,
            e: 0.5 * rho * (u * u + v * v) + p / (gas.gamma - 1.0),
        }
    }

    pub fn velocity(&self) -> (f64, f64) {
        (self.m / self.rho, self.n / self.rho)
    }

    /// Drops the transverse momentum.
    pub fn to_1d(self) -> State1 {
        State1::new(self.rho, self.m, self.e)
    }

    /// Expresses the momentum in the `(ν, ν⊥)` frame: `m ← m·ν`, `n ← m·ν⊥`
    /// with `ν⊥ = (−ν₂, ν₁)`.
    #[inline]
    pub fn to_frame(self, nu: [f64; 2]) -> State2 {
        State2 {
            rho: self.rho,
            m: self.m * nu[0] + self.n * nu[1],
            n: -self.m * nu[1] + self.n * nu[0],
            e: self.e,
        }
    }

    /// Inverse of [`State2::to_frame`].
    #[inline]
    pub fn from_frame(self, nu: [f64; 2]) -> State2 {
        State2 {
            rho: self.rho,
            m: self.m * nu[0] - self.n * nu[1],
            n: self.m * nu[1] + self.n * nu[0],
            e: self.e,
        }
    }
}

/// Margins of a state with respect to `Σ^ε`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RegionMargins {
    /// `ρ − ε`
    pub rho_margin: f64,
    /// `p − ε`
    pub p_margin: f64,
    /// `q = (s₀ − s)ρ`, `+∞` when `ρ ≤ 0` or `p ≤ 0`.
    pub q_value: f64,
}

impl RegionMargins {
    /// `w ∈ Σ^ε`.
    pub fn in_region(&self) -> bool {
        self.rho_margin >= 0.0 && self.p_margin >= 0.0 && self.q_value <= 0.0
    }

    /// `w ∈ Σ^ε` up to an absolute slack on each constraint.
    pub fn in_region_with_slack(&self, slack: f64) -> bool {
        self.rho_margin >= -slack && self.p_margin >= -slack && self.q_value <= slack
    }

    /// `w ∈ Σ^ε₀` (strict inequalities).
    pub fn in_interior(&self) -> bool {
        self.rho_margin > 0.0 && self.p_margin > 0.0 && self.q_value < 0.0
    }
}

/// Pressure without any admissibility check. Returns a non-finite value when
/// `ρ = 0`.
#[inline]
pub fn pressure_raw<S: ConservedState>(w: &S, gas: &GasModel) -> f64 {
    (gas.gamma - 1.0) * (w.energy() - 0.5 * w.momentum_sq() / w.density())
}

/// `p = (γ − 1)(E − |m|²/(2ρ))`. May be zero or negative.
pub fn pressure<S: ConservedState>(w: &S, gas: &GasModel) -> Result<f64> {
    if w.density() == 0.0 {
        return Err(IrpError::Vacuum { rho: 0.0 });
    }
    Ok(pressure_raw(w, gas))
}

pub fn pressure1(w: &State1, gas: &GasModel) -> Result<f64> {
    pressure(w, gas)
}

pub fn pressure2(w: &State2, gas: &GasModel) -> Result<f64> {
    pressure(w, gas)
}

/// `s = log p − γ log ρ`.
pub fn specific_entropy<S: ConservedState>(w: &S, gas: &GasModel) -> Result<f64> {
    let rho = w.density();
    if !(rho > 0.0) {
        return Err(IrpError::EntropyUndefined { rho, p: f64::NAN });
    }
    let p = pressure_raw(w, gas);
    if !(p > 0.0) {
        return Err(IrpError::EntropyUndefined { rho, p });
    }
    Ok(p.ln() - gas.gamma * rho.ln())
}

/// `q = (s₀ − s)ρ`, the convex functional whose sign encodes `s ≥ s₀`.
pub fn q_functional<S: ConservedState>(w: &S, gas: &GasModel) -> Result<f64> {
    let s = specific_entropy(w, gas)?;
    Ok((gas.s0 - s) * w.density())
}

/// Density, pressure and `q` evaluated with the total conventions used by the
/// limiter: `p = −∞` when `ρ ≤ 0`, and `q = +∞` when `ρ ≤ 0` or `p ≤ 0`.
#[inline]
pub fn functionals<S: ConservedState>(w: &S, gas: &GasModel) -> (f64, f64, f64) {
    let rho = w.density();
    if !(rho > 0.0) {
        return (rho, f64::NEG_INFINITY, f64::INFINITY);
    }
    let p = pressure_raw(w, gas);
    if !(p > 0.0) {
        return (rho, p, f64::INFINITY);
    }
    let q = (gas.s0 - (p.ln() - gas.gamma * rho.ln())) * rho;
    (rho, p, q)
}

pub fn region_margins<S: ConservedState>(w: &S, gas: &GasModel) -> RegionMargins {
    let (rho, p, q) = functionals(w, gas);
    RegionMargins {
        rho_margin: rho - gas.epsilon,
        p_margin: p - gas.epsilon,
        q_value: q,
    }
}

/// Minimum specific entropy over a collection of states; used to fix `s₀`
/// from sampled initial data.
pub fn entropy_floor<S, I>(states: I, gas: &GasModel) -> Result<f64>
where
    S: ConservedState,
    I: IntoIterator<Item = S>,
{
    let mut s_min = f64::INFINITY;
    for w in states {
        s_min = s_min.min(specific_entropy(&w, gas)?);
    }
    if !s_min.is_finite() {
        return Err(IrpError::InvalidArgument(
            "entropy floor of an empty state set".into(),
        ));
    }
    Ok(s_min)
}

#[inline]
fn checked_pressure<S: ConservedState>(w: &S, gas: &GasModel) -> Result<f64> {
    let rho = w.density();
    if !(rho > 0.0) {
        return Err(IrpError::Vacuum { rho });
    }
    Ok(pressure_raw(w, gas))
}

/// `f(w) = (m, ρu² + p, (E + p)u)`.
pub fn flux_1d(w: &State1, gas: &GasModel) -> Result<State1> {
    let p = checked_pressure(w, gas)?;
    let u = w.m / w.rho;
    Ok(State1::new(w.m, w.m * u + p, (w.e + p) * u))
}

/// `(F₁(w), F₂(w))` for the 2D system.
pub fn flux_2d(w: &State2, gas: &GasModel) -> Result<(State2, State2)> {
    let p = checked_pressure(w, gas)?;
    let u = w.m / w.rho;
    let v = w.n / w.rho;
    let f1 = State2::new(w.m, w.m * u + p, w.n * u, (w.e + p) * u);
    let f2 = State2::new(w.n, w.m * v, w.n * v + p, (w.e + p) * v);
    Ok((f1, f2))
}

fn check_unit(nu: [f64; 2]) -> Result<()> {
    let norm = (nu[0] * nu[0] + nu[1] * nu[1]).sqrt();
    if (norm - 1.0).abs() > 1e-12 {
        return Err(IrpError::InvalidArgument(format!(
            "normal ({}, {}) is not a unit vector",
            nu[0], nu[1]
        )));
    }
    Ok(())
}

/// Flux of the projected system, `F₁(w)ν₁ + F₂(w)ν₂`.
pub fn projected_flux(w: &State2, nu: [f64; 2], gas: &GasModel) -> Result<State2> {
    check_unit(nu)?;
    let p = checked_pressure(w, gas)?;
    let un = (w.m * nu[0] + w.n * nu[1]) / w.rho;
    Ok(State2::new(
        w.rho * un,
        w.m * un + p * nu[0],
        w.n * un + p * nu[1],
        (w.e + p) * un,
    ))
}

/// Sound speed `c = √(γp/ρ)`.
pub fn sound_speed<S: ConservedState>(w: &S, gas: &GasModel) -> Result<f64> {
    let p = checked_pressure(w, gas)?;
    if p < 0.0 {
        return Err(IrpError::NegativePressure { p });
    }
    Ok((gas.gamma * p / w.density()).sqrt())
}

/// `|u| + c`.
pub fn max_wave_speed_1d(w: &State1, gas: &GasModel) -> Result<f64> {
    let c = sound_speed(w, gas)?;
    Ok((w.m / w.rho).abs() + c)
}

/// `|u·ν| + c`.
pub fn max_wave_speed_dir(w: &State2, nu: [f64; 2], gas: &GasModel) -> Result<f64> {
    check_unit(nu)?;
    let c = sound_speed(w, gas)?;
    Ok(((w.m * nu[0] + w.n * nu[1]) / w.rho).abs() + c)
}

/// `max(|u| + c, |v| + c)` for a 2D state, i.e. the larger of the two axis speeds.
pub fn axis_wave_speeds(w: &State2, gas: &GasModel) -> Result<(f64, f64)> {
    let c = sound_speed(w, gas)?;
    Ok(((w.m / w.rho).abs() + c, (w.n / w.rho).abs() + c))
}
