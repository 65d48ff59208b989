//! Initial data, domains and exact solutions of the benchmark problems.

use std::fmt;
use std::str::FromStr;

use crate::error::{IrpError, Result};
use crate::euler::{GasModel, State1, State2};
use crate::flux::{sample_exact, Primitive};
use crate::solver::Boundary;

use std::f64::consts::PI;

/// Benchmark identifiers accepted by the CLI and config files.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExampleId {
    /// Smooth density wave, 1D periodic.
    Ex1,
    /// Low-density smooth wave on the diagonal, 2D periodic.
    Ex2,
    /// Sod shock tube.
    Ex3,
    /// Symmetric double rarefaction with a near-vacuum centre.
    Ex4,
    /// Four-rarefaction 2D Riemann problem.
    Ex5Config2,
    /// Four-slip-line 2D Riemann problem.
    Ex5Config6,
    /// User supplied 1D Riemann problem.
    Custom,
}

impl ExampleId {
    pub const ALL: [ExampleId; 7] = [
        ExampleId::Ex1,
        ExampleId::Ex2,
        ExampleId::Ex3,
        ExampleId::Ex4,
        ExampleId::Ex5Config2,
        ExampleId::Ex5Config6,
        ExampleId::Custom,
    ];

    pub fn token(&self) -> &'static str {
        match self {
            ExampleId::Ex1 => "ex1-1d-accuracy",
            ExampleId::Ex2 => "ex2-2d-accuracy",
            ExampleId::Ex3 => "ex3-sod",
            ExampleId::Ex4 => "ex4-double-rarefaction",
            ExampleId::Ex5Config2 => "ex5-config2",
            ExampleId::Ex5Config6 => "ex5-config6",
            ExampleId::Custom => "custom",
        }
    }

    /// Short name for the single-variant examples (`ex1` .. `ex4`).
    pub fn alias(&self) -> Option<&'static str> {
        match self {
            ExampleId::Ex1 => Some("ex1"),
            ExampleId::Ex2 => Some("ex2"),
            ExampleId::Ex3 => Some("ex3"),
            ExampleId::Ex4 => Some("ex4"),
            _ => None,
        }
    }

    pub fn dim(&self) -> usize {
        match self {
            ExampleId::Ex2 | ExampleId::Ex5Config2 | ExampleId::Ex5Config6 => 2,
            _ => 1,
        }
    }

    /// Whether a closed-form or exact Riemann solution exists.
    pub fn has_exact(&self) -> bool {
        !matches!(self, ExampleId::Ex5Config2 | ExampleId::Ex5Config6)
    }
}

impl fmt::Display for ExampleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

impl FromStr for ExampleId {
    type Err = IrpError;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        ExampleId::ALL
            .into_iter()
            .find(|e| e.token() == s || e.alias() == Some(s))
            .ok_or_else(|| {
                IrpError::Config(format!(
                    "unknown example '{s}', expected one of {}",
                    ExampleId::ALL.map(|e| e.token()).join(", ")
                ))
            })
    }
}

/// A 1D Riemann problem: two primitive states separated at `jump`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RiemannSetup {
    pub left: Primitive,
    pub right: Primitive,
    pub jump: f64,
    pub domain: [f64; 2],
}

impl RiemannSetup {
    pub fn sod() -> Self {
        Self {
            left: Primitive::new(1.0, 0.0, 1.0),
            right: Primitive::new(0.125, 0.0, 0.1),
            jump: 0.0,
            domain: [-0.5, 0.5],
        }
    }

    pub fn double_rarefaction() -> Self {
        Self {
            left: Primitive::new(1.0, -12.0, 1.0),
            right: Primitive::new(1.0, 12.0, 1.0),
            jump: 0.0,
            domain: [-5.0, 5.0],
        }
    }

    pub fn initial(&self, x: f64, gas: &GasModel) -> State1 {
        if x < self.jump {
            self.left.to_state1(gas)
        } else {
            self.right.to_state1(gas)
        }
    }

    /// Exact solution at `(x, t)`; vacuum is returned as the zero state.
    pub fn exact(&self, x: f64, t: f64, gas: &GasModel) -> Result<State1> {
        if t <= 0.0 {
            return Ok(self.initial(x, gas));
        }
        let p = sample_exact(&self.left, &self.right, (x - self.jump) / t, gas)?;
        Ok(p.to_state1(gas))
    }
}

/// Quadrant states `(ρ, u, v, p)` listed as upper-right, upper-left,
/// lower-left, lower-right.
pub type Quadrants = [[f64; 4]; 4];

pub const CONFIG2: Quadrants = [
    [1.0, 0.0, 0.0, 1.0],
    [0.5197, -0.7259, 0.0, 0.4],
    [1.0, -0.7259, -0.7259, 1.0],
    [0.5197, 0.0, -0.7259, 0.4],
];

pub const CONFIG6: Quadrants = [
    [1.0, 0.75, -0.5, 1.0],
    [2.0, 0.75, 0.5, 1.0],
    [1.0, -0.75, 0.5, 1.0],
    [3.0, -0.75, -0.5, 1.0],
];

/// Quadrant data on `[0, 1]²` split at `(½, ½)`.
pub fn quadrant_state(q: &Quadrants, x: f64, y: f64, gas: &GasModel) -> State2 {
    let idx = match (x >= 0.5, y >= 0.5) {
        (true, true) => 0,
        (false, true) => 1,
        (false, false) => 2,
        (true, false) => 3,
    };
    let [rho, u, v, p] = q[idx];
    State2::from_primitive(rho, u, v, p, gas)
}

/// `ρ = 1 + 0.5 sin(2π(x − t))`, `u = p = 1`.
pub fn smooth_wave_1d(x: f64, t: f64, gas: &GasModel) -> State1 {
    State1::from_primitive(smooth_density_1d(x, t), 1.0, 1.0, gas)
}

pub fn smooth_density_1d(x: f64, t: f64) -> f64 {
    1.0 + 0.5 * (2.0 * PI * (x - t)).sin()
}

/// `ρ = 1 + 0.99 sin(x + y − 2t)`, `u = v = p = 1`.
pub fn smooth_wave_2d(x: f64, y: f64, t: f64, gas: &GasModel) -> State2 {
    State2::from_primitive(smooth_density_2d(x, y, t), 1.0, 1.0, 1.0, gas)
}

pub fn smooth_density_2d(x: f64, y: f64, t: f64) -> f64 {
    1.0 + 0.99 * (x + y - 2.0 * t).sin()
}

/// Domain, boundary treatment and default final time of a problem.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProblemSetup {
    pub x_range: [f64; 2],
    pub y_range: [f64; 2],
    pub boundary: Boundary,
    pub t_final: f64,
}

pub fn problem_setup(id: ExampleId, custom: Option<&RiemannSetup>) -> Result<ProblemSetup> {
    let unit = [0.0, 1.0];
    Ok(match id {
        ExampleId::Ex1 => ProblemSetup {
            x_range: unit,
            y_range: unit,
            boundary: Boundary::Periodic,
            t_final: 0.1,
        },
        ExampleId::Ex2 => ProblemSetup {
            x_range: [0.0, 2.0 * PI],
            y_range: [0.0, 2.0 * PI],
            boundary: Boundary::Periodic,
            t_final: 0.1,
        },
        ExampleId::Ex3 => ProblemSetup {
            x_range: RiemannSetup::sod().domain,
            y_range: unit,
            boundary: Boundary::Transmissive,
            t_final: 0.16,
        },
        ExampleId::Ex4 => ProblemSetup {
            x_range: RiemannSetup::double_rarefaction().domain,
            y_range: unit,
            boundary: Boundary::Transmissive,
            t_final: 0.3,
        },
        ExampleId::Ex5Config2 => ProblemSetup {
            x_range: unit,
            y_range: unit,
            boundary: Boundary::Transmissive,
            t_final: 0.2,
        },
        ExampleId::Ex5Config6 => ProblemSetup {
            x_range: unit,
            y_range: unit,
            boundary: Boundary::Transmissive,
            t_final: 0.3,
        },
        ExampleId::Custom => {
            let c = custom.ok_or_else(|| {
                IrpError::Config("custom example needs left, right, jump and domain".into())
            })?;
            ProblemSetup {
                x_range: c.domain,
                y_range: unit,
                boundary: Boundary::Transmissive,
                t_final: 0.1,
            }
        }
    })
}

/// The Riemann data behind a 1D shock-tube style problem.
pub fn riemann_setup(id: ExampleId, custom: Option<&RiemannSetup>) -> Option<RiemannSetup> {
    match id {
        ExampleId::Ex3 => Some(RiemannSetup::sod()),
        ExampleId::Ex4 => Some(RiemannSetup::double_rarefaction()),
        ExampleId::Custom => custom.copied(),
        _ => None,
    }
}

/// Initial state of a 1D problem.
pub fn initial_1d(
    id: ExampleId,
    custom: Option<&RiemannSetup>,
    x: f64,
    gas: &GasModel,
) -> Result<State1> {
    match id {
        ExampleId::Ex1 => Ok(smooth_wave_1d(x, 0.0, gas)),
        _ => riemann_setup(id, custom)
            .map(|r| r.initial(x, gas))
            .ok_or_else(|| IrpError::InvalidArgument(format!("{id} is not a 1D problem"))),
    }
}

/// Initial state of a 2D problem.
pub fn initial_2d(id: ExampleId, x: f64, y: f64, gas: &GasModel) -> Result<State2> {
    match id {
        ExampleId::Ex2 => Ok(smooth_wave_2d(x, y, 0.0, gas)),
        ExampleId::Ex5Config2 => Ok(quadrant_state(&CONFIG2, x, y, gas)),
        ExampleId::Ex5Config6 => Ok(quadrant_state(&CONFIG6, x, y, gas)),
        _ => Err(IrpError::InvalidArgument(format!(
            "{id} is not a 2D problem"
        ))),
    }
}

/// Exact 1D state at `(x, t)`.
pub fn exact_1d(
    id: ExampleId,
    custom: Option<&RiemannSetup>,
    x: f64,
    t: f64,
    gas: &GasModel,
) -> Result<State1> {
    match id {
        ExampleId::Ex1 => Ok(smooth_wave_1d(x, t, gas)),
        ExampleId::Ex3 | ExampleId::Ex4 | ExampleId::Custom => riemann_setup(id, custom)
            .ok_or_else(|| IrpError::Config("custom example needs Riemann data".into()))?
            .exact(x, t, gas),
        _ => Err(IrpError::InvalidArgument(format!(
            "no 1D exact solution for {id}"
        ))),
    }
}

/// Exact 2D state at `(x, y, t)`. Only the smooth wave has one.
pub fn exact_2d(id: ExampleId, x: f64, y: f64, t: f64, gas: &GasModel) -> Result<State2> {
    match id {
        ExampleId::Ex2 => Ok(smooth_wave_2d(x, y, t, gas)),
        _ => Err(IrpError::InvalidArgument(format!(
            "no exact solution for {id}"
        ))),
    }
}
