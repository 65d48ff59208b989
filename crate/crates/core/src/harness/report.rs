//! Error norms, convergence tables and plot data.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use crate::error::Result;
use crate::euler::{functionals, pressure_raw, specific_entropy, ConservedState};
use crate::limiter::LimiterEvent;
use crate::quadrature::gauss_legendre;
use crate::solver::DgSolution;

/// Errors of the density on one mesh.
#[derive(Debug, Clone, PartialEq)]
pub struct ErrorRow {
    pub cells: usize,
    pub linf: f64,
    pub l1: f64,
    pub runtime_s: f64,
    pub steps: usize,
    /// First limiter activation of the run, if any.
    pub first_event: Option<LimiterEvent>,
}

/// One row per mesh, finest last.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct ErrorReport {
    pub rows: Vec<ErrorRow>,
}

/// `log₂(e_coarse / e_fine)` between consecutive entries.
pub fn convergence_orders(errors: &[f64]) -> Vec<f64> {
    errors.windows(2).map(|w| (w[0] / w[1]).log2()).collect()
}

/// `L∞` and domain-normalised `L¹` density errors, sampled at `k + 2` Gauss
/// points per axis in every cell.
pub fn error_norms<S, F>(sol: &DgSolution<S>, exact_density: F) -> Result<(f64, f64)>
where
    S: ConservedState,
    F: Fn([f64; 2]) -> Result<f64>,
{
    let rule = gauss_legendre(sol.degree + 2)?;
    let mut pts = Vec::new();
    if sol.mesh.dim == 1 {
        for (&x, &w) in rule.nodes.iter().zip(&rule.weights) {
            pts.push(([x, 0.0], w));
        }
    } else {
        for (&y, &wy) in rule.nodes.iter().zip(&rule.weights) {
            for (&x, &wx) in rule.nodes.iter().zip(&rule.weights) {
                pts.push(([x, y], wx * wy));
            }
        }
    }
    let (mut linf, mut l1) = (0.0f64, 0.0);
    for cell in 0..sol.mesh.cell_count() {
        for &(r, w) in &pts {
            let e =
                (sol.eval(cell, r).density() - exact_density(sol.mesh.physical(cell, r))?).abs();
            linf = linf.max(e);
            l1 += w * e;
        }
    }
    Ok((linf, l1 / sol.mesh.cell_count() as f64))
}

impl ErrorReport {
    pub fn l1_orders(&self) -> Vec<f64> {
        convergence_orders(&self.rows.iter().map(|r| r.l1).collect::<Vec<_>>())
    }

    pub fn linf_orders(&self) -> Vec<f64> {
        convergence_orders(&self.rows.iter().map(|r| r.linf).collect::<Vec<_>>())
    }

    pub fn to_markdown(&self) -> String {
        let (o1, oi) = (self.l1_orders(), self.linf_orders());
        let mut s = String::from(
            "| N | Linf error | order | L1 error | order | steps | runtime (s) |\n|---|---|---|---|---|---|---|\n",
        );
        for (i, r) in self.rows.iter().enumerate() {
            let ord = |o: &[f64]| {
                if i == 0 {
                    "/".to_string()
                } else {
                    format!("{:.2}", o[i - 1])
                }
            };
            let _ = writeln!(
                s,
                "| {} | {:.2e} | {} | {:.2e} | {} | {} | {:.2} |",
                r.cells,
                r.linf,
                ord(&oi),
                r.l1,
                ord(&o1),
                r.steps,
                r.runtime_s
            );
        }
        s
    }

    pub fn to_csv(&self) -> String {
        let (o1, oi) = (self.l1_orders(), self.linf_orders());
        let mut s = String::from("cells,linf,linf_order,l1,l1_order,steps,runtime_s\n");
        for (i, r) in self.rows.iter().enumerate() {
            let ord = |o: &[f64]| {
                if i == 0 {
                    String::new()
                } else {
                    o[i - 1].to_string()
                }
            };
            let _ = writeln!(
                s,
                "{},{:e},{},{:e},{},{},{:.3}",
                r.cells,
                r.linf,
                ord(&oi),
                r.l1,
                ord(&o1),
                r.steps,
                r.runtime_s
            );
        }
        s
    }

    /// First limiter activation per mesh, for comparison with published
    /// values. Cell indices are 1-based here.
    pub fn first_events_markdown(&self) -> String {
        let mut s = String::from(
            "| N | cell | q_max | q(avg) | theta | step | stage |\n|---|---|---|---|---|---|---|\n",
        );
        for r in &self.rows {
            match &r.first_event {
                Some(e) => {
                    let _ = writeln!(
                        s,
                        "| {} | {} | {:.2e} | {:.2e} | {:.6} | {} | {} |",
                        r.cells,
                        e.cell + 1,
                        e.q_max,
                        e.q_bar,
                        e.theta,
                        e.step,
                        e.stage
                    );
                }
                None => {
                    let _ = writeln!(s, "| {} | - | - | - | - | - | - |", r.cells);
                }
            }
        }
        s
    }
}

/// Column header of the plot data for a `dim`-dimensional solution.
pub fn plot_header(dim: usize) -> &'static str {
    if dim == 1 {
        "x,rho,u,p,s,q"
    } else {
        "x,y,rho,u,v,p,s,q"
    }
}

/// Cell-centre values, one line per cell after the header.
pub fn plot_data<S: ConservedState>(sol: &DgSolution<S>) -> String {
    let dim = sol.mesh.dim;
    let mut s = String::from(plot_header(dim));
    s.push('\n');
    for cell in 0..sol.mesh.cell_count() {
        let w = sol.eval(cell, [0.0, 0.0]);
        let c = sol.mesh.center(cell);
        let rho = w.density();
        let p = pressure_raw(&w, &sol.gas);
        let ent = specific_entropy(&w, &sol.gas).unwrap_or(f64::NAN);
        let (_, _, q) = functionals(&w, &sol.gas);
        let _ = write!(s, "{}", c[0]);
        if dim == 2 {
            let _ = write!(s, ",{}", c[1]);
        }
        let _ = write!(s, ",{rho}");
        for d in 0..dim {
            let _ = write!(s, ",{}", w.component(1 + d) / rho);
        }
        let _ = writeln!(s, ",{p},{ent},{q}");
    }
    s
}

/// Writes [`plot_data`] to `path`.
pub fn emit_plot_data<S: ConservedState>(sol: &DgSolution<S>, path: &Path) -> Result<()> {
    fs::write(path, plot_data(sol))?;
    Ok(())
}

/// `count` equally spaced levels from `min` to `max` inclusive.
pub fn contour_levels(min: f64, max: f64, count: usize) -> Vec<f64> {
    match count {
        0 => Vec::new(),
        1 => vec![min],
        _ => (0..count)
            .map(|i| min + (max - min) * i as f64 / (count - 1) as f64)
            .collect(),
    }
}

/// Density contour levels of a solution (cell-centre extrema).
pub fn density_contour_levels<S: ConservedState>(sol: &DgSolution<S>, count: usize) -> Vec<f64> {
    let (mut lo, mut hi) = (f64::INFINITY, f64::NEG_INFINITY);
    for cell in 0..sol.mesh.cell_count() {
        let r = sol.eval(cell, [0.0, 0.0]).density();
        lo = lo.min(r);
        hi = hi.max(r);
    }
    contour_levels(lo, hi, count)
}
