//! Experiment driver: problem setup, runs, error tables and output files.
//!
//! An [`ExperimentSpec`] names a benchmark, a list of mesh sizes and the
//! scheme options. [`run_case_1d`] and [`run_case_2d`] perform one run in memory;
//! [`run_experiment`] sweeps the mesh list and writes the artifacts.

mod problems;
mod report;

pub use problems::{
    exact_1d, exact_2d, initial_1d, initial_2d, problem_setup, quadrant_state, riemann_setup,
    smooth_density_1d, smooth_density_2d, smooth_wave_1d, smooth_wave_2d, ExampleId, ProblemSetup,
    Quadrants, RiemannSetup, CONFIG2, CONFIG6,
};
pub use report::{
    contour_levels, convergence_orders, density_contour_levels, emit_plot_data, error_norms,
    plot_data, plot_header, ErrorReport, ErrorRow,
};

use std::collections::BTreeMap;
use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::time::Instant;

use crate::error::{IrpError, Result};
use crate::euler::{entropy_floor, GasModel, State1, State2};
use crate::flux::{FluxKind, Primitive};
use crate::limiter::{limit_field, write_events_csv, LimiterConfig, LimiterEvent};
use crate::solver::checkpoint::write_checkpoint;
use crate::solver::{
    integrate, l2_project, CflPolicy, DgOperator, DgSolution, DgState, Mesh, RunSummary,
};

/// Floor for density and pressure used in every run.
pub const EPSILON: f64 = 1e-13;

/// Overshoot of `q` accepted by the limiter during runs. States sitting on
/// the entropy minimum have `q` of order machine epsilon either side of zero.
pub const RUN_Q_TOLERANCE: f64 = 1e-12;

/// Number of density contour levels written for 2D runs.
pub const CONTOUR_LEVELS: usize = 30;

/// Limiter selection of a run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LimiterChoice {
    Irp,
    Positivity,
    Off,
}

impl LimiterChoice {
    pub fn token(&self) -> &'static str {
        match self {
            LimiterChoice::Irp => "irp",
            LimiterChoice::Positivity => "positivity",
            LimiterChoice::Off => "off",
        }
    }

    pub fn config(&self) -> Option<LimiterConfig> {
        match self {
            LimiterChoice::Irp => {
                Some(LimiterConfig::irp(EPSILON).with_q_tolerance(RUN_Q_TOLERANCE))
            }
            LimiterChoice::Positivity => Some(LimiterConfig::positivity_only(EPSILON)),
            LimiterChoice::Off => None,
        }
    }
}

impl fmt::Display for LimiterChoice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

impl FromStr for LimiterChoice {
    type Err = IrpError;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "irp" => Ok(LimiterChoice::Irp),
            "positivity" | "positivity-only" => Ok(LimiterChoice::Positivity),
            "off" | "none" => Ok(LimiterChoice::Off),
            other => Err(IrpError::Config(format!(
                "unknown limiter '{other}', expected irp, positivity or off"
            ))),
        }
    }
}

/// Time-step rule of a run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CflChoice {
    Theoretical,
    Practical,
}

impl FromStr for CflChoice {
    type Err = IrpError;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "theoretical" => Ok(CflChoice::Theoretical),
            "practical" => Ok(CflChoice::Practical),
            other => Err(IrpError::Config(format!(
                "unknown cfl mode '{other}', expected theoretical or practical"
            ))),
        }
    }
}

impl fmt::Display for CflChoice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CflChoice::Theoretical => "theoretical",
            CflChoice::Practical => "practical",
        })
    }
}

/// Everything needed to reproduce a run or a mesh sweep.
#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentSpec {
    pub example: ExampleId,
    /// Cells per axis; one run per entry.
    pub cells: Vec<usize>,
    pub degree: usize,
    pub flux: FluxKind,
    pub limiter: LimiterChoice,
    pub t_final: f64,
    pub cfl: CflChoice,
    /// Replaces the practical divisor `d` in `Δt = Δx/(dσ)` (or `1/(dη)`).
    pub dt_divisor: Option<f64>,
    pub out: Option<PathBuf>,
    pub gamma: f64,
    /// Riemann data of the `custom` example.
    pub custom: Option<RiemannSetup>,
}

impl ExperimentSpec {
    /// Defaults matching the published setup of each benchmark.
    pub fn for_example(example: ExampleId) -> Self {
        let t_final = problem_setup(example, Some(&RiemannSetup::sod()))
            .map(|p| p.t_final)
            .unwrap_or(0.1);
        let mut spec = Self {
            example,
            cells: vec![64],
            degree: 1,
            flux: FluxKind::LxfLocal,
            limiter: LimiterChoice::Irp,
            t_final,
            cfl: CflChoice::Practical,
            dt_divisor: None,
            out: None,
            gamma: 1.4,
            custom: None,
        };
        match example {
            ExampleId::Ex1 => spec.cells = vec![16, 32, 64, 128, 256],
            ExampleId::Ex2 => spec.cells = vec![32, 64],
            ExampleId::Ex3 => {
                spec.degree = 2;
                spec.cells = vec![200];
            }
            ExampleId::Ex4 => {
                spec.degree = 2;
                spec.cells = vec![400];
                spec.flux = FluxKind::LxfGlobal;
                spec.dt_divisor = Some(20.0);
            }
            ExampleId::Ex5Config2 | ExampleId::Ex5Config6 => spec.cells = vec![128],
            ExampleId::Custom => {
                spec.cells = vec![200];
                spec.custom = Some(RiemannSetup::sod());
            }
        }
        spec
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.t_final > 0.0) {
            return Err(IrpError::Config(format!(
                "tfinal must be positive, got {}",
                self.t_final
            )));
        }
        if self.cells.is_empty() {
            return Err(IrpError::Config(
                "at least one mesh size is required".into(),
            ));
        }
        if let Some(&n) = self.cells.iter().find(|&&n| n < 4) {
            return Err(IrpError::Config(format!(
                "mesh sizes must be at least 4, got {n}"
            )));
        }
        if self.example == ExampleId::Custom && self.custom.is_none() {
            return Err(IrpError::Config(
                "custom example needs left, right, jump and domain".into(),
            ));
        }
        if let Some(d) = self.dt_divisor {
            if !(d > 0.0) {
                return Err(IrpError::Config(format!(
                    "dt divisor must be positive, got {d}"
                )));
            }
        }
        if !(self.gamma > 1.0 && self.gamma < 3.0) {
            return Err(IrpError::Config(format!(
                "gamma must lie in (1, 3), got {}",
                self.gamma
            )));
        }
        Ok(())
    }

    pub fn gas(&self) -> Result<GasModel> {
        GasModel::new(self.gamma, EPSILON, 0.0)
    }

    pub fn cfl_policy(&self) -> CflPolicy {
        let base = match self.cfl {
            CflChoice::Theoretical => CflPolicy::theoretical(self.flux.c0()),
            CflChoice::Practical => CflPolicy::practical(),
        };
        match self.dt_divisor {
            Some(d) => base.with_divisor(d),
            None => base,
        }
    }

    /// Applies strict `key = value` lines on top of `self`. Blank lines and
    /// `#` comments are skipped; unknown or repeated keys are errors.
    pub fn apply_config(&mut self, text: &str) -> Result<()> {
        let mut seen = BTreeMap::new();
        let mut left = None;
        let mut right = None;
        let mut jump = None;
        let mut domain = None;
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| {
                IrpError::Config(format!(
                    "line {}: expected key=value, got '{line}'",
                    lineno + 1
                ))
            })?;
            let (key, value) = (key.trim(), value.trim());
            if seen.insert(key.to_string(), lineno + 1).is_some() {
                return Err(IrpError::Config(format!(
                    "line {}: duplicate key '{key}'",
                    lineno + 1
                )));
            }
            let at = |e: IrpError| IrpError::Config(format!("line {}: {e}", lineno + 1));
            match key {
                "example" => self.example = value.parse().map_err(at)?,
                "degree" => self.degree = parse_num(key, value).map_err(at)?,
                "cells" => self.cells = parse_list(key, value).map_err(at)?,
                "flux" => {
                    self.flux = value
                        .parse()
                        .map_err(|e: IrpError| at(IrpError::Config(e.to_string())))?
                }
                "limiter" => self.limiter = value.parse().map_err(at)?,
                "tfinal" => self.t_final = parse_num(key, value).map_err(at)?,
                "cfl" => self.cfl = value.parse().map_err(at)?,
                "dt_divisor" => self.dt_divisor = Some(parse_num(key, value).map_err(at)?),
                "out" => self.out = Some(PathBuf::from(value)),
                "gamma" => self.gamma = parse_num(key, value).map_err(at)?,
                "left" => left = Some(parse_primitive(value).map_err(at)?),
                "right" => right = Some(parse_primitive(value).map_err(at)?),
                "jump" => jump = Some(parse_num::<f64>(key, value).map_err(at)?),
                "domain" => {
                    let d: Vec<f64> = parse_list(key, value).map_err(at)?;
                    if d.len() != 2 || !(d[0] < d[1]) {
                        return Err(at(IrpError::Config(format!(
                            "domain must be a,b with a < b, got '{value}'"
                        ))));
                    }
                    domain = Some([d[0], d[1]]);
                }
                other => {
                    return Err(IrpError::Config(format!(
                        "line {}: unknown key '{other}'",
                        lineno + 1
                    )))
                }
            }
        }
        if left.is_some() || right.is_some() || jump.is_some() || domain.is_some() {
            let base = self.custom.unwrap_or_else(RiemannSetup::sod);
            let domain = domain.unwrap_or(base.domain);
            self.custom = Some(RiemannSetup {
                left: left.unwrap_or(base.left),
                right: right.unwrap_or(base.right),
                jump: jump.unwrap_or(0.5 * (domain[0] + domain[1])),
                domain,
            });
        }
        Ok(())
    }
}

fn parse_num<T: FromStr>(key: &str, value: &str) -> Result<T> {
    value
        .trim()
        .parse()
        .map_err(|_| IrpError::Config(format!("invalid value '{value}' for {key}")))
}

/// Comma separated list of numbers.
pub fn parse_list<T: FromStr>(key: &str, value: &str) -> Result<Vec<T>> {
    value.split(',').map(|v| parse_num(key, v)).collect()
}

/// `ρ,u,p` triple.
pub fn parse_primitive(value: &str) -> Result<Primitive> {
    let v: Vec<f64> = parse_list("state", value)?;
    if v.len() != 3 {
        return Err(IrpError::Config(format!("expected rho,u,p, got '{value}'")));
    }
    Ok(Primitive::new(v[0], v[1], v[2]))
}

/// Result of a single run.
#[derive(Debug, Clone)]
pub struct CaseOutcome<S> {
    pub solution: DgSolution<S>,
    pub summary: RunSummary<S>,
    /// Totals `Σ|K| w̄_K` of the limited initial projection.
    pub initial_totals: S,
    /// Limiter activations on the initial projection (step 0, stage 0).
    pub initial_events: Vec<LimiterEvent>,
    /// Smallest density over all test points seen after any step.
    pub min_density: f64,
    pub runtime_s: f64,
}

impl<S: DgState> CaseOutcome<S> {
    /// All limiter activations, initial projection first.
    pub fn events(&self) -> impl Iterator<Item = &LimiterEvent> {
        self.initial_events.iter().chain(&self.summary.events)
    }

    /// `(current totals + boundary outflow) − initial totals`, relative to
    /// the initial totals, per component.
    pub fn conservation_defect(&self) -> Vec<f64> {
        let now = self.solution.totals() + self.summary.outflow;
        (0..S::NVARS)
            .map(|i| {
                let a = self.initial_totals.component(i);
                let scale = a.abs().max(1e-300);
                (now.component(i) - a).abs() / scale
            })
            .collect()
    }
}

/// Projects `init`, fixes `s₀` from the test points, limits the projection
/// and integrates to `spec.t_final`.
pub fn run_projected<S, F>(spec: &ExperimentSpec, mesh: Mesh, init: F) -> Result<CaseOutcome<S>>
where
    S: DgState,
    F: Fn([f64; 2]) -> S,
{
    spec.validate()?;
    let start = Instant::now();
    let gas = spec.gas()?;
    let mut sol = l2_project(init, mesh, spec.degree, gas)?;
    let table = sol.test_table()?;
    let samples: Vec<S> = sol
        .coeffs
        .chunks(sol.modes_per_cell())
        .flat_map(|c| {
            (0..table.len())
                .map(|p| table.eval(c, p))
                .collect::<Vec<_>>()
        })
        .collect();
    sol.gas = gas.with_s0(entropy_floor(samples.iter().copied(), &gas)?);

    let limiter = spec.limiter.config();
    let mut initial_events = Vec::new();
    if let Some(cfg) = &limiter {
        initial_events = limit_field(&mut sol, &table, cfg, 0, 0)?;
    }
    let initial_totals = sol.totals();
    let op = DgOperator::new(sol.mesh.dim, spec.degree, spec.flux)?;
    let policy = spec.cfl_policy();
    let mut min_density = sol.extreme_functionals(&table).0;
    let summary = integrate(
        &mut sol,
        &op,
        &policy,
        spec.t_final,
        limiter.as_ref(),
        &table,
        |s, _| {
            min_density = min_density.min(s.extreme_functionals(&table).0);
        },
    )?;
    Ok(CaseOutcome {
        solution: sol,
        summary,
        initial_totals,
        initial_events,
        min_density,
        runtime_s: start.elapsed().as_secs_f64(),
    })
}

/// One run of a 1D benchmark with `n` cells.
pub fn run_case_1d(spec: &ExperimentSpec, n: usize) -> Result<CaseOutcome<State1>> {
    check_dim(spec, 1)?;
    let setup = problem_setup(spec.example, spec.custom.as_ref())?;
    let mesh = Mesh::new_1d(n, setup.x_range, setup.boundary)?;
    let gas = spec.gas()?;
    let (id, custom) = (spec.example, spec.custom);
    // Validate the initial data once so the projection closure can be infallible.
    initial_1d(id, custom.as_ref(), setup.x_range[0], &gas)?;
    run_projected(spec, mesh, |p| {
        initial_1d(id, custom.as_ref(), p[0], &gas).expect("validated initial data")
    })
}

/// One run of a 2D benchmark on an `n × n` mesh.
pub fn run_case_2d(spec: &ExperimentSpec, n: usize) -> Result<CaseOutcome<State2>> {
    check_dim(spec, 2)?;
    let setup = problem_setup(spec.example, None)?;
    let mesh = Mesh::new_2d(
        n,
        n,
        setup.x_range,
        setup.y_range,
        setup.boundary,
        setup.boundary,
    )?;
    let gas = spec.gas()?;
    let id = spec.example;
    initial_2d(id, setup.x_range[0], setup.y_range[0], &gas)?;
    run_projected(spec, mesh, |p| {
        initial_2d(id, p[0], p[1], &gas).expect("validated initial data")
    })
}

fn check_dim(spec: &ExperimentSpec, dim: usize) -> Result<()> {
    if spec.example.dim() != dim {
        return Err(IrpError::InvalidArgument(format!(
            "{} is a {}D problem",
            spec.example,
            spec.example.dim()
        )));
    }
    Ok(())
}

/// Density errors of a finished 1D run.
pub fn errors_1d(spec: &ExperimentSpec, out: &CaseOutcome<State1>) -> Result<(f64, f64)> {
    let sol = &out.solution;
    let gas = sol.gas;
    error_norms(sol, |p| {
        Ok(exact_1d(spec.example, spec.custom.as_ref(), p[0], sol.time, &gas)?.rho)
    })
}

/// Density errors of a finished 2D run.
pub fn errors_2d(spec: &ExperimentSpec, out: &CaseOutcome<State2>) -> Result<(f64, f64)> {
    let sol = &out.solution;
    let gas = sol.gas;
    error_norms(sol, |p| {
        Ok(exact_2d(spec.example, p[0], p[1], sol.time, &gas)?.rho)
    })
}

/// What a sweep produced.
#[derive(Debug, Clone, Default)]
pub struct ExperimentReport {
    /// Present when the benchmark has an exact solution.
    pub errors: Option<ErrorReport>,
    /// Per mesh: `(cells, steps, limiter activations, runtime)`.
    pub runs: Vec<(usize, usize, usize, f64)>,
    pub files: Vec<PathBuf>,
}

/// Runs every mesh size of `spec` and, when `spec.out` is set, writes per
/// mesh `solution_n{N}.csv`, `limiter_n{N}.csv`, `checkpoint_n{N}.csv`,
/// `contours_n{N}.txt` (2D) and, with an exact solution, `errors.md` and
/// `errors.csv`.
pub fn run_experiment(spec: &ExperimentSpec) -> Result<ExperimentReport> {
    spec.validate()?;
    if let Some(dir) = &spec.out {
        fs::create_dir_all(dir)?;
    }
    let mut report = ExperimentReport::default();
    let mut rows = Vec::new();
    for &n in &spec.cells {
        let row = if spec.example.dim() == 1 {
            let out = run_case_1d(spec, n)?;
            record(spec, n, &out, &mut report, || errors_1d(spec, &out))?
        } else {
            let out = run_case_2d(spec, n)?;
            record(spec, n, &out, &mut report, || errors_2d(spec, &out))?
        };
        rows.extend(row);
    }
    if spec.example.has_exact() {
        let errors = ErrorReport { rows };
        if let Some(dir) = &spec.out {
            let md = format!(
                "{}\n\nFirst limiter activation:\n\n{}",
                errors.to_markdown(),
                errors.first_events_markdown()
            );
            report.files.push(write_file(dir, "errors.md", &md)?);
            report
                .files
                .push(write_file(dir, "errors.csv", &errors.to_csv())?);
        }
        report.errors = Some(errors);
    }
    Ok(report)
}

fn record<S, E>(
    spec: &ExperimentSpec,
    n: usize,
    out: &CaseOutcome<S>,
    report: &mut ExperimentReport,
    errors: E,
) -> Result<Option<ErrorRow>>
where
    S: DgState,
    E: FnOnce() -> Result<(f64, f64)>,
{
    let events: Vec<LimiterEvent> = out.events().cloned().collect();
    report
        .runs
        .push((n, out.summary.steps, events.len(), out.runtime_s));
    if let Some(dir) = &spec.out {
        let sol_path = dir.join(format!("solution_n{n}.csv"));
        emit_plot_data(&out.solution, &sol_path)?;
        report.files.push(sol_path);
        let lim = dir.join(format!("limiter_n{n}.csv"));
        write_events_csv(&lim, &events)?;
        report.files.push(lim);
        let ck = dir.join(format!("checkpoint_n{n}.csv"));
        write_checkpoint(&ck, &out.solution)?;
        report.files.push(ck);
        if out.solution.mesh.dim == 2 {
            let levels = density_contour_levels(&out.solution, CONTOUR_LEVELS);
            let text: String = levels.iter().map(|l| format!("{l}\n")).collect();
            report
                .files
                .push(write_file(dir, &format!("contours_n{n}.txt"), &text)?);
        }
    }
    if !spec.example.has_exact() {
        return Ok(None);
    }
    let (linf, l1) = errors()?;
    Ok(Some(ErrorRow {
        cells: n,
        linf,
        l1,
        runtime_s: out.runtime_s,
        steps: out.summary.steps,
        first_event: events.first().cloned(),
    }))
}

fn write_file(dir: &Path, name: &str, text: &str) -> Result<PathBuf> {
    let path = dir.join(name);
    fs::write(&path, text)?;
    Ok(path)
}

#[cfg(test)]
mod tests;
