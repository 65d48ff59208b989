//! Exact solution of the 1D Riemann problem for an ideal gas.
//!
//! The star pressure solves `f_l(p) + f_r(p) + (u_r − u_l) = 0`, where each
//! `f_K` is the shock (Rankine-Hugoniot) or rarefaction (isentropic) branch.
//! `f` is monotone and concave, so Newton from the two-rarefaction guess
//! converges without bracketing.

use crate::error::{IrpError, Result};
use crate::euler::{pressure_raw, ConservedState, GasModel, State1};

/// `(ρ, u, p)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Primitive {
    pub rho: f64,
    pub u: f64,
    pub p: f64,
}

impl Primitive {
    pub fn new(rho: f64, u: f64, p: f64) -> Self {
        Self { rho, u, p }
    }

    pub fn sound_speed(&self, gas: &GasModel) -> f64 {
        (gas.gamma * self.p / self.rho).sqrt()
    }

    pub fn from_state<S: ConservedState>(w: &S, gas: &GasModel) -> Result<Self> {
        let rho = w.density();
        if !(rho > 0.0) {
            return Err(IrpError::Vacuum { rho });
        }
        let p = pressure_raw(w, gas);
        if !(p > 0.0) {
            return Err(IrpError::NegativePressure { p });
        }
        Ok(Self {
            rho,
            u: w.component(1) / rho,
            p,
        })
    }

    pub fn to_state1(&self, gas: &GasModel) -> State1 {
        State1::from_primitive(self.rho, self.u, self.p, gas)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RiemannStarState {
    pub p_star: f64,
    pub u_star: f64,
    pub rho_star_l: f64,
    pub rho_star_r: f64,
}

/// `f_K(p)` and its derivative for one side.
pub fn pressure_function_side(p: f64, side: &Primitive, gas: &GasModel) -> (f64, f64) {
    let g = gas.gamma;
    let c = side.sound_speed(gas);
    if p > side.p {
        let a = 2.0 / ((g + 1.0) * side.rho);
        let b = (g - 1.0) / (g + 1.0) * side.p;
        let root = (a / (p + b)).sqrt();
        let f = (p - side.p) * root;
        let df = root * (1.0 - 0.5 * (p - side.p) / (p + b));
        (f, df)
    } else {
        let z = (g - 1.0) / (2.0 * g);
        let ratio = p / side.p;
        let f = 2.0 * c / (g - 1.0) * (ratio.powf(z) - 1.0);
        let df = ratio.powf(-(g + 1.0) / (2.0 * g)) / (side.rho * c);
        (f, df)
    }
}

/// `f_l(p) + f_r(p) + u_r − u_l`.
pub fn pressure_function(p: f64, l: &Primitive, r: &Primitive, gas: &GasModel) -> f64 {
    pressure_function_side(p, l, gas).0 + pressure_function_side(p, r, gas).0 + (r.u - l.u)
}

/// `Δu_crit = 2(c_l + c_r)/(γ − 1)`; data with `u_r − u_l ≥ Δu_crit` create a
/// vacuum.
pub fn vacuum_threshold(l: &Primitive, r: &Primitive, gas: &GasModel) -> f64 {
    2.0 * (l.sound_speed(gas) + r.sound_speed(gas)) / (gas.gamma - 1.0)
}

fn star_density(p_star: f64, side: &Primitive, gas: &GasModel) -> f64 {
    let g = gas.gamma;
    let ratio = p_star / side.p;
    if p_star > side.p {
        let k = (g - 1.0) / (g + 1.0);
        side.rho * (ratio + k) / (k * ratio + 1.0)
    } else {
        side.rho * ratio.powf(1.0 / g)
    }
}

/// Star state from primitive data.
pub fn exact_riemann_primitive(
    l: &Primitive,
    r: &Primitive,
    gas: &GasModel,
) -> Result<RiemannStarState> {
    for s in [l, r] {
        if !(s.rho > 0.0) {
            return Err(IrpError::Vacuum { rho: s.rho });
        }
        if !(s.p > 0.0) {
            return Err(IrpError::NegativePressure { p: s.p });
        }
    }
    let g = gas.gamma;
    let du = r.u - l.u;
    let critical = vacuum_threshold(l, r, gas);
    if du >= critical {
        return Err(IrpError::VacuumFormation {
            delta_u: du,
            critical,
        });
    }
    let (cl, cr) = (l.sound_speed(gas), r.sound_speed(gas));
    let z = (g - 1.0) / (2.0 * g);
    let mut p =
        ((cl + cr - 0.5 * (g - 1.0) * du) / (cl / l.p.powf(z) + cr / r.p.powf(z))).powf(1.0 / z);
    let f_at = |p: f64| {
        let (fl, dfl) = pressure_function_side(p, l, gas);
        let (fr, dfr) = pressure_function_side(p, r, gas);
        (fl + fr + du, dfl + dfr)
    };
    // f is increasing in p and negative at p = 0, so keep a bracket and
    // bisect whenever the Newton step leaves it.
    let mut lo = 0.0;
    let mut hi = p.max(l.p).max(r.p);
    while f_at(hi).0 < 0.0 {
        lo = hi;
        hi *= 2.0;
    }
    const MAX_ITER: usize = 200;
    let mut converged = false;
    for _ in 0..MAX_ITER {
        let (f, df) = f_at(p);
        if f == 0.0 {
            converged = true;
            break;
        }
        if f < 0.0 {
            lo = lo.max(p);
        } else {
            hi = hi.min(p);
        }
        let mut p_new = p - f / df;
        if !(p_new > lo && p_new < hi) {
            p_new = 0.5 * (lo + hi);
        }
        let change = (p_new - p).abs() / (0.5 * (p_new + p));
        p = p_new;
        if change < 1e-12 {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(IrpError::NoConvergence {
            iterations: MAX_ITER,
        });
    }
    let (fl, _) = pressure_function_side(p, l, gas);
    let (fr, _) = pressure_function_side(p, r, gas);
    let u_star = 0.5 * (l.u + r.u) + 0.5 * (fr - fl);
    Ok(RiemannStarState {
        p_star: p,
        u_star,
        rho_star_l: star_density(p, l, gas),
        rho_star_r: star_density(p, r, gas),
    })
}

/// Star state of the Riemann problem `(w_l, w_r)`.
pub fn exact_riemann(w_l: &State1, w_r: &State1, gas: &GasModel) -> Result<RiemannStarState> {
    exact_riemann_primitive(
        &Primitive::from_state(w_l, gas)?,
        &Primitive::from_state(w_r, gas)?,
        gas,
    )
}

/// Samples the self-similar solution at `ξ = x/t` in primitive variables.
/// Returns the primitive state and whether `ξ` lies left of the contact.
pub fn sample_primitive(
    star: &RiemannStarState,
    l: &Primitive,
    r: &Primitive,
    xi: f64,
    gas: &GasModel,
) -> (Primitive, bool) {
    let g = gas.gamma;
    let ps = star.p_star;
    let us = star.u_star;
    if xi <= us {
        let cl = l.sound_speed(gas);
        if ps > l.p {
            let s = l.u - cl * ((g + 1.0) / (2.0 * g) * ps / l.p + (g - 1.0) / (2.0 * g)).sqrt();
            if xi <= s {
                (*l, true)
            } else {
                (Primitive::new(star.rho_star_l, us, ps), true)
            }
        } else {
            let head = l.u - cl;
            let c_star = cl * (ps / l.p).powf((g - 1.0) / (2.0 * g));
            let tail = us - c_star;
            if xi <= head {
                (*l, true)
            } else if xi >= tail {
                (Primitive::new(star.rho_star_l, us, ps), true)
            } else {
                (left_fan(l, xi, gas), true)
            }
        }
    } else {
        let cr = r.sound_speed(gas);
        if ps > r.p {
            let s = r.u + cr * ((g + 1.0) / (2.0 * g) * ps / r.p + (g - 1.0) / (2.0 * g)).sqrt();
            if xi >= s {
                (*r, false)
            } else {
                (Primitive::new(star.rho_star_r, us, ps), false)
            }
        } else {
            let head = r.u + cr;
            let c_star = cr * (ps / r.p).powf((g - 1.0) / (2.0 * g));
            let tail = us + c_star;
            if xi >= head {
                (*r, false)
            } else if xi <= tail {
                (Primitive::new(star.rho_star_r, us, ps), false)
            } else {
                (right_fan(r, xi, gas), false)
            }
        }
    }
}

fn left_fan(l: &Primitive, xi: f64, gas: &GasModel) -> Primitive {
    let g = gas.gamma;
    let cl = l.sound_speed(gas);
    let c = 2.0 / (g + 1.0) * (cl + 0.5 * (g - 1.0) * (l.u - xi));
    let u = 2.0 / (g + 1.0) * (cl + 0.5 * (g - 1.0) * l.u + xi);
    let ratio = c / cl;
    Primitive::new(
        l.rho * ratio.powf(2.0 / (g - 1.0)),
        u,
        l.p * ratio.powf(2.0 * g / (g - 1.0)),
    )
}

fn right_fan(r: &Primitive, xi: f64, gas: &GasModel) -> Primitive {
    let g = gas.gamma;
    let cr = r.sound_speed(gas);
    let c = 2.0 / (g + 1.0) * (cr - 0.5 * (g - 1.0) * (r.u - xi));
    let u = 2.0 / (g + 1.0) * (-cr + 0.5 * (g - 1.0) * r.u + xi);
    let ratio = c / cr;
    Primitive::new(
        r.rho * ratio.powf(2.0 / (g - 1.0)),
        u,
        r.p * ratio.powf(2.0 * g / (g - 1.0)),
    )
}

/// Leftmost and rightmost signal speeds of the exact solution: shock speeds
/// or rarefaction heads. Vacuum-generating data are bounded by the heads.
pub fn wave_speed_bounds(l: &Primitive, r: &Primitive, gas: &GasModel) -> Result<(f64, f64)> {
    let g = gas.gamma;
    let (cl, cr) = (l.sound_speed(gas), r.sound_speed(gas));
    match exact_riemann_primitive(l, r, gas) {
        Ok(star) => {
            let left = if star.p_star > l.p {
                l.u - cl
                    * ((g + 1.0) / (2.0 * g) * star.p_star / l.p + (g - 1.0) / (2.0 * g)).sqrt()
            } else {
                l.u - cl
            };
            let right = if star.p_star > r.p {
                r.u + cr
                    * ((g + 1.0) / (2.0 * g) * star.p_star / r.p + (g - 1.0) / (2.0 * g)).sqrt()
            } else {
                r.u + cr
            };
            Ok((left, right))
        }
        Err(IrpError::VacuumFormation { .. }) => Ok((l.u - cl, r.u + cr)),
        Err(e) => Err(e),
    }
}

/// The solution `R(ξ; w_l, w_r)` in conserved variables.
pub fn riemann_sample(
    star: &RiemannStarState,
    w_l: &State1,
    w_r: &State1,
    xi: f64,
    gas: &GasModel,
) -> Result<State1> {
    let l = Primitive::from_state(w_l, gas)?;
    let r = Primitive::from_state(w_r, gas)?;
    Ok(sample_primitive(star, &l, &r, xi, gas).0.to_state1(gas))
}

/// Samples the exact solution, including data that open a vacuum between two
/// rarefactions. Vacuum is returned as the zero state.
pub fn sample_exact(l: &Primitive, r: &Primitive, xi: f64, gas: &GasModel) -> Result<Primitive> {
    match exact_riemann_primitive(l, r, gas) {
        Ok(star) => Ok(sample_primitive(&star, l, r, xi, gas).0),
        Err(IrpError::VacuumFormation { .. }) => {
            let g = gas.gamma;
            let (cl, cr) = (l.sound_speed(gas), r.sound_speed(gas));
            let left_tail = l.u + 2.0 * cl / (g - 1.0);
            let right_tail = r.u - 2.0 * cr / (g - 1.0);
            if xi <= l.u - cl {
                Ok(*l)
            } else if xi < left_tail {
                Ok(left_fan(l, xi, gas))
            } else if xi <= right_tail {
                Ok(Primitive::new(0.0, 0.5 * (left_tail + right_tail), 0.0))
            } else if xi < r.u + cr {
                Ok(right_fan(r, xi, gas))
            } else {
                Ok(*r)
            }
        }
        Err(e) => Err(e),
    }
}
