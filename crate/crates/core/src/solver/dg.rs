//! Weak-form DG residual on uniform 1D and rectangular 2D meshes.
//!
//! With the orthonormal basis the mass matrix is `|K|·I`, so the residual of
//! mode `m` is
//!
//! ```text
//! dc_m/dt = Σ_q w_q (F₁ ∂_ξφ_m / Δx + F₂ ∂_ηφ_m / Δy)
//!         − (1/Δx) Σ_β w_β [F̂_{i+½} φ_m(½, η_β) − F̂_{i−½} φ_m(−½, η_β)]
//!         − (1/Δy) Σ_β w_β [Ĝ_{j+½} φ_m(ξ_β, ½) − Ĝ_{j−½} φ_m(ξ_β, −½)]
//! ```
//!
//! Volume integrals use the tensor Gauss rule with `k + 1` points per axis,
//! edge integrals the same 1D rule.

use crate::error::{IrpError, Result};
use crate::euler::GasModel;
use crate::flux::{numerical_flux, FluxKind};
use crate::quadrature::gauss_legendre;
use crate::solver::basis::{self, SampleTable};
use crate::solver::mesh::Boundary;
use crate::solver::{DgSolution, DgState};

const LEFT: usize = 0;
const RIGHT: usize = 1;
const BOTTOM: usize = 2;
const TOP: usize = 3;

/// Precomputed basis data for one `(dim, k, flux)` combination.
#[derive(Debug, Clone)]
pub struct DgOperator {
    pub dim: usize,
    pub degree: usize,
    pub flux: FluxKind,
    modes: usize,
    vol_w: Vec<f64>,
    vol: SampleTable,
    vol_grad: Vec<[f64; 2]>,
    edge_w: Vec<f64>,
    /// Basis rows at the edge points, one table per edge.
    edges: [SampleTable; 4],
}

fn to_nonphysical(cell: usize, point: usize, e: IrpError) -> IrpError {
    match e {
        IrpError::NonPhysical { .. } => e,
        other => IrpError::NonPhysical {
            cell,
            point,
            reason: other.to_string(),
        },
    }
}

impl DgOperator {
    pub fn new(dim: usize, degree: usize, flux: FluxKind) -> Result<Self> {
        if !(dim == 1 || dim == 2) {
            return Err(IrpError::InvalidArgument(format!("dimension {dim}")));
        }
        let rule = gauss_legendre(degree + 1)?;
        let mut vol_pts = Vec::new();
        let mut vol_w = Vec::new();
        if dim == 1 {
            for (&x, &w) in rule.nodes.iter().zip(&rule.weights) {
                vol_pts.push([x, 0.0]);
                vol_w.push(w);
            }
        } else {
            for (&y, &wy) in rule.nodes.iter().zip(&rule.weights) {
                for (&x, &wx) in rule.nodes.iter().zip(&rule.weights) {
                    vol_pts.push([x, y]);
                    vol_w.push(wx * wy);
                }
            }
        }
        let vol_grad = vol_pts
            .iter()
            .flat_map(|&r| basis::tabulate_gradient(dim, degree, r))
            .collect();
        let vol = SampleTable::new(dim, degree, vol_pts);
        let (edges, edge_w) = if dim == 1 {
            let t = |x: f64| SampleTable::new(1, degree, vec![[x, 0.0]]);
            ([t(-0.5), t(0.5), t(0.0), t(0.0)], vec![1.0])
        } else {
            let along = |fixed: usize, v: f64| {
                let pts = rule
                    .nodes
                    .iter()
                    .map(|&s| if fixed == 0 { [v, s] } else { [s, v] })
                    .collect();
                SampleTable::new(2, degree, pts)
            };
            (
                [along(0, -0.5), along(0, 0.5), along(1, -0.5), along(1, 0.5)],
                rule.weights.clone(),
            )
        };
        Ok(Self {
            dim,
            degree,
            flux,
            modes: basis::mode_count(dim, degree),
            vol_w,
            vol,
            vol_grad,
            edge_w,
            edges,
        })
    }

    /// Points per edge.
    pub fn edge_points(&self) -> usize {
        self.edge_w.len()
    }

    /// Writes `dc/dt` into `rhs` and returns the net outward boundary flux
    /// `Σ_{∂Ω} ∫ F̂·ν ds`, so that `d/dt Σ_K |K| w̄_K = −outflow`.
    pub fn residual<S: DgState>(&self, sol: &DgSolution<S>, rhs: &mut [S]) -> Result<S> {
        if sol.mesh.dim != self.dim || sol.degree != self.degree || S::DIM != self.dim {
            return Err(IrpError::InvalidArgument(
                "operator and solution layouts differ".into(),
            ));
        }
        rhs.iter_mut().for_each(|r| *r = S::default());
        if self.dim == 1 {
            self.residual_1d(sol, rhs)
        } else {
            self.residual_2d(sol, rhs)
        }
    }

    fn volume_terms<S: DgState>(
        &self,
        sol: &DgSolution<S>,
        rhs: &mut [S],
        inv: [f64; 2],
    ) -> Result<()> {
        let nm = self.modes;
        let gas = &sol.gas;
        for (cell, (c, out)) in sol.coeffs.chunks(nm).zip(rhs.chunks_mut(nm)).enumerate() {
            for q in 0..self.vol.len() {
                let w = self.vol.eval(c, q);
                let (f1, f2) = w
                    .volume_fluxes(gas)
                    .map_err(|e| to_nonphysical(cell, q, e))?;
                let wq = self.vol_w[q];
                let grads = &self.vol_grad[q * nm..(q + 1) * nm];
                for m in 0..nm {
                    let g = grads[m];
                    out[m] += f1 * (wq * g[0] * inv[0]);
                    if self.dim == 2 {
                        out[m] += f2 * (wq * g[1] * inv[1]);
                    }
                }
            }
        }
        Ok(())
    }

    /// Traces of every cell on one edge, `L` points per cell.
    fn traces<S: DgState>(&self, sol: &DgSolution<S>, edge: usize) -> Vec<S> {
        let nm = self.modes;
        let t = &self.edges[edge];
        let mut out = Vec::with_capacity(sol.mesh.cell_count() * t.len());
        for c in sol.coeffs.chunks(nm) {
            for b in 0..t.len() {
                out.push(t.eval(c, b));
            }
        }
        out
    }

    fn global_speed<S: DgState>(
        &self,
        traces: &[&[S]],
        axis: usize,
        gas: &GasModel,
        per_cell: usize,
    ) -> Result<f64> {
        let mut s: f64 = 0.0;
        for tr in traces {
            for (idx, w) in tr.iter().enumerate() {
                let sp = w
                    .axis_speeds(gas)
                    .map_err(|e| to_nonphysical(idx / per_cell, idx % per_cell, e))?;
                s = s.max(sp[axis]);
            }
        }
        Ok(s)
    }

    fn residual_1d<S: DgState>(&self, sol: &DgSolution<S>, rhs: &mut [S]) -> Result<S> {
        let mesh = &sol.mesh;
        let gas = &sol.gas;
        let nx = mesh.nx;
        let nm = self.modes;
        let inv = 1.0 / mesh.dx;
        self.volume_terms(sol, rhs, [inv, 0.0])?;

        let left = self.traces(sol, LEFT);
        let right = self.traces(sol, RIGHT);
        let sigma = if self.flux == FluxKind::LxfGlobal {
            self.global_speed(&[&left, &right], 0, gas, 1)?
        } else {
            0.0
        };
        let mut fluxes = Vec::with_capacity(nx + 1);
        for i in 0..=nx {
            let wl = if i == 0 {
                match mesh.bc_x {
                    Boundary::Periodic => right[nx - 1],
                    Boundary::Transmissive => left[0],
                }
            } else {
                right[i - 1]
            };
            let wr = if i == nx {
                match mesh.bc_x {
                    Boundary::Periodic => left[0],
                    Boundary::Transmissive => right[nx - 1],
                }
            } else {
                left[i]
            };
            let cell = if i == nx { nx - 1 } else { i };
            fluxes.push(
                numerical_flux(self.flux, &wl, &wr, sigma, gas)
                    .map_err(|e| to_nonphysical(cell, 0, e))?,
            );
        }
        let pl = self.edges[LEFT].row(0);
        let pr = self.edges[RIGHT].row(0);
        for (i, out) in rhs.chunks_mut(nm).enumerate() {
            let (fm, fp) = (fluxes[i], fluxes[i + 1]);
            for m in 0..nm {
                out[m] += (fm * pl[m] - fp * pr[m]) * inv;
            }
        }
        Ok(fluxes[nx] - fluxes[0])
    }

    fn residual_2d<S: DgState>(&self, sol: &DgSolution<S>, rhs: &mut [S]) -> Result<S> {
        let mesh = &sol.mesh;
        let gas = &sol.gas;
        let (nx, ny) = (mesh.nx, mesh.ny);
        let nm = self.modes;
        let l = self.edge_points();
        let inv = [1.0 / mesh.dx, 1.0 / mesh.dy];
        self.volume_terms(sol, rhs, inv)?;

        let tr: Vec<Vec<S>> = (0..4).map(|e| self.traces(sol, e)).collect();
        let (sx, sy) = if self.flux == FluxKind::LxfGlobal {
            (
                self.global_speed(&[&tr[LEFT], &tr[RIGHT]], 0, gas, l)?,
                self.global_speed(&[&tr[BOTTOM], &tr[TOP]], 1, gas, l)?,
            )
        } else {
            (0.0, 0.0)
        };
        let at = |edge: usize, i: usize, j: usize, b: usize| tr[edge][mesh.index(i, j) * l + b];

        // x-normal interfaces: (nx + 1) per row.
        let mut fx = vec![S::default(); (nx + 1) * ny * l];
        for j in 0..ny {
            for i in 0..=nx {
                for b in 0..l {
                    let wl = if i == 0 {
                        match mesh.bc_x {
                            Boundary::Periodic => at(RIGHT, nx - 1, j, b),
                            Boundary::Transmissive => at(LEFT, 0, j, b),
                        }
                    } else {
                        at(RIGHT, i - 1, j, b)
                    };
                    let wr = if i == nx {
                        match mesh.bc_x {
                            Boundary::Periodic => at(LEFT, 0, j, b),
                            Boundary::Transmissive => at(RIGHT, nx - 1, j, b),
                        }
                    } else {
                        at(LEFT, i, j, b)
                    };
                    let cell = mesh.index(i.min(nx - 1), j);
                    fx[(j * (nx + 1) + i) * l + b] = numerical_flux(self.flux, &wl, &wr, sx, gas)
                        .map_err(|e| to_nonphysical(cell, b, e))?;
                }
            }
        }
        // y-normal interfaces: (ny + 1) per column, via the axis swap.
        let mut fy = vec![S::default(); nx * (ny + 1) * l];
        for j in 0..=ny {
            for i in 0..nx {
                for b in 0..l {
                    let wl = if j == 0 {
                        match mesh.bc_y {
                            Boundary::Periodic => at(TOP, i, ny - 1, b),
                            Boundary::Transmissive => at(BOTTOM, i, 0, b),
                        }
                    } else {
                        at(TOP, i, j - 1, b)
                    };
                    let wr = if j == ny {
                        match mesh.bc_y {
                            Boundary::Periodic => at(BOTTOM, i, 0, b),
                            Boundary::Transmissive => at(TOP, i, ny - 1, b),
                        }
                    } else {
                        at(BOTTOM, i, j, b)
                    };
                    let cell = mesh.index(i, j.min(ny - 1));
                    let f = numerical_flux(self.flux, &wl.swap_axes(), &wr.swap_axes(), sy, gas)
                        .map_err(|e| to_nonphysical(cell, b, e))?;
                    fy[(j * nx + i) * l + b] = f.swap_axes();
                }
            }
        }

        for (cell, out) in rhs.chunks_mut(nm).enumerate() {
            let (i, j) = mesh.ij(cell);
            for b in 0..l {
                let wb = self.edge_w[b];
                let f_w = fx[(j * (nx + 1) + i) * l + b] * (wb * inv[0]);
                let f_e = fx[(j * (nx + 1) + i + 1) * l + b] * (wb * inv[0]);
                let f_s = fy[(j * nx + i) * l + b] * (wb * inv[1]);
                let f_n = fy[((j + 1) * nx + i) * l + b] * (wb * inv[1]);
                let (pw, pe) = (self.edges[LEFT].row(b), self.edges[RIGHT].row(b));
                let (ps, pn) = (self.edges[BOTTOM].row(b), self.edges[TOP].row(b));
                for m in 0..nm {
                    out[m] += f_w * pw[m] - f_e * pe[m] + f_s * ps[m] - f_n * pn[m];
                }
            }
        }

        let mut outflow = S::default();
        for j in 0..ny {
            for b in 0..l {
                let w = self.edge_w[b] * mesh.dy;
                outflow += (fx[(j * (nx + 1) + nx) * l + b] - fx[(j * (nx + 1)) * l + b]) * w;
            }
        }
        for i in 0..nx {
            for b in 0..l {
                let w = self.edge_w[b] * mesh.dx;
                outflow += (fy[(ny * nx + i) * l + b] - fy[i * l + b]) * w;
            }
        }
        Ok(outflow)
    }
}
