//! Spatial discretisation and time stepping.

pub mod basis;
pub mod cfl;
pub mod checkpoint;
mod dg;
pub mod fv;
pub mod mesh;
pub mod polynomial;
mod rk;

use crate::error::{IrpError, Result};
use crate::euler::{
    flux_1d, flux_2d, functionals, sound_speed, ConservedState, GasModel, State1, State2,
};
use crate::quadrature::{gauss_legendre, test_set_1d, test_set_rect, TestSet};
use basis::SampleTable;
use polynomial::CellPolynomial;

pub use cfl::{cfl_dt, triangular_cfl, wave_speeds, CflMode, CflPolicy};
pub use dg::DgOperator;
pub use fv::{fv_step_1d, fv_update_cell, stencil_signal_speed};
pub use mesh::{Boundary, Mesh};
pub use rk::{integrate, ssp_rk3_step, RunSummary, StepReport};

/// State types the DG machinery runs on.
pub trait DgState: ConservedState {
    const DIM: usize;

    /// Exchanges the roles of the x and y axes (identity in 1D).
    fn swap_axes(&self) -> Self;

    /// Physical fluxes along x and y (the second is zero in 1D).
    fn volume_fluxes(&self, gas: &GasModel) -> Result<(Self, Self)>;

    /// `|u| + c` and `|v| + c`.
    fn axis_speeds(&self, gas: &GasModel) -> Result<[f64; 2]>;
}

impl DgState for State1 {
    const DIM: usize = 1;

    #[inline]
    fn swap_axes(&self) -> Self {
        *self
    }

    #[inline]
    fn volume_fluxes(&self, gas: &GasModel) -> Result<(Self, Self)> {
        Ok((flux_1d(self, gas)?, State1::default()))
    }

    #[inline]
    fn axis_speeds(&self, gas: &GasModel) -> Result<[f64; 2]> {
        let c = sound_speed(self, gas)?;
        Ok([(self.m / self.rho).abs() + c, 0.0])
    }
}

impl DgState for State2 {
    const DIM: usize = 2;

    #[inline]
    fn swap_axes(&self) -> Self {
        State2::new(self.rho, self.n, self.m, self.e)
    }

    #[inline]
    fn volume_fluxes(&self, gas: &GasModel) -> Result<(Self, Self)> {
        flux_2d(self, gas)
    }

    #[inline]
    fn axis_speeds(&self, gas: &GasModel) -> Result<[f64; 2]> {
        let c = sound_speed(self, gas)?;
        Ok([(self.m / self.rho).abs() + c, (self.n / self.rho).abs() + c])
    }
}

/// Modal DG solution on a mesh. Coefficients are stored cell-major.
#[derive(Debug, Clone, PartialEq)]
pub struct DgSolution<S> {
    pub mesh: Mesh,
    pub degree: usize,
    pub gas: GasModel,
    pub time: f64,
    pub coeffs: Vec<S>,
}

impl<S: ConservedState> DgSolution<S> {
    pub fn zeros(mesh: Mesh, degree: usize, gas: GasModel) -> Self {
        let n = mesh.cell_count() * basis::mode_count(mesh.dim, degree);
        Self {
            mesh,
            degree,
            gas,
            time: 0.0,
            coeffs: vec![S::default(); n],
        }
    }

    pub fn modes_per_cell(&self) -> usize {
        basis::mode_count(self.mesh.dim, self.degree)
    }

    pub fn cell_modes(&self, cell: usize) -> &[S] {
        let nm = self.modes_per_cell();
        &self.coeffs[cell * nm..(cell + 1) * nm]
    }

    pub fn cell_modes_mut(&mut self, cell: usize) -> &mut [S] {
        let nm = self.modes_per_cell();
        &mut self.coeffs[cell * nm..(cell + 1) * nm]
    }

    pub fn cell(&self, cell: usize) -> CellPolynomial<S> {
        CellPolynomial {
            degree: self.degree,
            dim: self.mesh.dim,
            modes: self.cell_modes(cell).to_vec(),
        }
    }

    #[inline]
    pub fn average(&self, cell: usize) -> S {
        self.coeffs[cell * self.modes_per_cell()]
    }

    pub fn averages(&self) -> Vec<S> {
        (0..self.mesh.cell_count())
            .map(|c| self.average(c))
            .collect()
    }

    /// Value at a reference point of a cell.
    pub fn eval(&self, cell: usize, reference: [f64; 2]) -> S {
        let phi = basis::tabulate(self.mesh.dim, self.degree, reference);
        self.cell_modes(cell)
            .iter()
            .zip(&phi)
            .fold(S::default(), |acc, (&c, &p)| acc + c * p)
    }

    /// `Σ_K |K| w̄_K`.
    pub fn totals(&self) -> S {
        let vol = self.mesh.cell_volume();
        (0..self.mesh.cell_count()).fold(S::default(), |acc, c| acc + self.average(c) * vol)
    }

    /// Test set of one cell.
    pub fn test_set(&self, cell: usize) -> Result<TestSet> {
        let (i, j) = self.mesh.ij(cell);
        if self.mesh.dim == 1 {
            test_set_1d(self.degree, self.mesh.x_bounds(i))
        } else {
            test_set_rect(self.degree, self.mesh.x_bounds(i), self.mesh.y_bounds(j))
        }
    }

    /// Basis values at the distinct reference test points shared by every cell.
    pub fn test_table(&self) -> Result<SampleTable> {
        let ts = self.test_set(0)?;
        Ok(SampleTable::new(
            self.mesh.dim,
            self.degree,
            ts.unique_reference_points(),
        ))
    }

    /// Fails with the first test point outside `Σ^ε` by more than `slack`.
    pub fn check_region(&self, table: &SampleTable, slack: f64) -> Result<()> {
        let nm = self.modes_per_cell();
        for (cell, c) in self.coeffs.chunks(nm).enumerate() {
            for p in 0..table.len() {
                let w = table.eval(c, p);
                let m = crate::euler::region_margins(&w, &self.gas);
                if !m.in_region_with_slack(slack) {
                    return Err(IrpError::NonPhysical {
                        cell,
                        point: p,
                        reason: format!(
                            "rho - eps = {:e}, p - eps = {:e}, q = {:e}",
                            m.rho_margin, m.p_margin, m.q_value
                        ),
                    });
                }
            }
        }
        Ok(())
    }

    /// Smallest `ρ`, smallest `p` and largest `q` over all test points.
    pub fn extreme_functionals(&self, table: &SampleTable) -> (f64, f64, f64) {
        let nm = self.modes_per_cell();
        let mut out = (f64::INFINITY, f64::INFINITY, f64::NEG_INFINITY);
        for c in self.coeffs.chunks(nm) {
            for p in 0..table.len() {
                let (r, pr, q) = functionals(&table.eval(c, p), &self.gas);
                out.0 = out.0.min(r);
                out.1 = out.1.min(pr);
                out.2 = out.2.max(q);
            }
        }
        out
    }
}

/// Number of Gauss points used for projections and error integrals.
pub fn projection_points(k: usize) -> usize {
    k + 3
}

/// Piecewise `L²` projection of `init` onto the DG space.
pub fn l2_project<S, F>(init: F, mesh: Mesh, k: usize, gas: GasModel) -> Result<DgSolution<S>>
where
    S: ConservedState,
    F: Fn([f64; 2]) -> S,
{
    let rule = gauss_legendre(projection_points(k))?;
    let mut points = Vec::new();
    if mesh.dim == 1 {
        for (&x, &w) in rule.nodes.iter().zip(&rule.weights) {
            points.push(([x, 0.0], w));
        }
    } else {
        for (&y, &wy) in rule.nodes.iter().zip(&rule.weights) {
            for (&x, &wx) in rule.nodes.iter().zip(&rule.weights) {
                points.push(([x, y], wx * wy));
            }
        }
    }
    let tables: Vec<Vec<f64>> = points
        .iter()
        .map(|(r, _)| basis::tabulate(mesh.dim, k, *r))
        .collect();
    let mut sol = DgSolution::zeros(mesh, k, gas);
    let nm = sol.modes_per_cell();
    for cell in 0..sol.mesh.cell_count() {
        let mut acc = vec![S::default(); nm];
        for ((r, w), phi) in points.iter().zip(&tables) {
            let v = init(sol.mesh.physical(cell, *r));
            for m in 0..nm {
                acc[m] += v * (w * phi[m]);
            }
        }
        sol.cell_modes_mut(cell).copy_from_slice(&acc);
    }
    Ok(sol)
}

/// 1D projection of `init(x)`.
pub fn l2_project_1d<F: Fn(f64) -> State1>(
    init: F,
    mesh: Mesh,
    k: usize,
    gas: GasModel,
) -> Result<DgSolution<State1>> {
    l2_project(|p| init(p[0]), mesh, k, gas)
}

/// 2D projection of `init(x, y)`.
pub fn l2_project_2d<F: Fn(f64, f64) -> State2>(
    init: F,
    mesh: Mesh,
    k: usize,
    gas: GasModel,
) -> Result<DgSolution<State2>> {
    l2_project(|p| init(p[0], p[1]), mesh, k, gas)
}

#[cfg(test)]
mod tests;
