//! Plain-text checkpoints of the modal coefficients.
//!
//! ```text
//! # irpdg-checkpoint dim=1 k=2 nx=200 ny=1 gamma=1.4 s0=0 epsilon=1e-13 time=0.16 x0=-0.5 x1=0.5 y0=0 y1=1 bcx=transmissive bcy=periodic
//! cell,mode,c0,c1,c2
//! 0,0,1,0,2.5
//! ...
//! ```
//!
//! One row per `(cell, mode)`, columns are the conserved components. Values
//! are written in shortest round-trip form, so a read-back is bit exact.

use std::collections::HashMap;
use std::io::{BufRead, BufWriter, Write};
use std::path::Path;

use crate::error::{IrpError, Result};
use crate::euler::{ConservedState, GasModel};
use crate::solver::basis::mode_count;
use crate::solver::mesh::{Boundary, Mesh};
use crate::solver::DgSolution;

const MAGIC: &str = "# irpdg-checkpoint";

pub fn write_checkpoint<S: ConservedState>(path: &Path, sol: &DgSolution<S>) -> Result<()> {
    let mut f = BufWriter::new(std::fs::File::create(path)?);
    let m = &sol.mesh;
    writeln!(
        f,
        "{MAGIC} dim={} k={} nx={} ny={} gamma={} s0={} epsilon={} time={} x0={} x1={} y0={} y1={} bcx={} bcy={}",
        m.dim,
        sol.degree,
        m.nx,
        m.ny,
        sol.gas.gamma,
        sol.gas.s0,
        sol.gas.epsilon,
        sol.time,
        m.x_range[0],
        m.x_range[1],
        m.y_range[0],
        m.y_range[1],
        m.bc_x,
        m.bc_y
    )?;
    let cols: Vec<String> = (0..S::NVARS).map(|i| format!("c{i}")).collect();
    writeln!(f, "cell,mode,{}", cols.join(","))?;
    let nm = sol.modes_per_cell();
    for (idx, c) in sol.coeffs.iter().enumerate() {
        let vals: Vec<String> = c.components().iter().map(|v| v.to_string()).collect();
        writeln!(f, "{},{},{}", idx / nm, idx % nm, vals.join(","))?;
    }
    f.flush()?;
    Ok(())
}

fn bad(msg: impl Into<String>) -> IrpError {
    IrpError::Io(format!("malformed checkpoint: {}", msg.into()))
}

pub fn read_checkpoint<S: ConservedState>(path: &Path) -> Result<DgSolution<S>> {
    let file = std::io::BufReader::new(std::fs::File::open(path)?);
    let mut lines = file.lines();
    let header = lines.next().ok_or_else(|| bad("empty file"))??;
    let rest = header
        .strip_prefix(MAGIC)
        .ok_or_else(|| bad("missing header"))?;
    let kv: HashMap<&str, &str> = rest
        .split_whitespace()
        .filter_map(|t| t.split_once('='))
        .collect();
    let get = |k: &str| {
        kv.get(k)
            .copied()
            .ok_or_else(|| bad(format!("missing key {k}")))
    };
    let num = |k: &str| -> Result<f64> {
        get(k)?
            .parse::<f64>()
            .map_err(|_| bad(format!("bad value for {k}")))
    };
    let int = |k: &str| -> Result<usize> {
        get(k)?
            .parse::<usize>()
            .map_err(|_| bad(format!("bad value for {k}")))
    };
    let dim = int("dim")?;
    let k = int("k")?;
    let (nx, ny) = (int("nx")?, int("ny")?);
    let gas = GasModel::new(num("gamma")?, num("epsilon")?, num("s0")?)?;
    let bcx: Boundary = get("bcx")?.parse()?;
    let bcy: Boundary = get("bcy")?.parse()?;
    let xr = [num("x0")?, num("x1")?];
    let yr = [num("y0")?, num("y1")?];
    let mesh = match dim {
        1 => Mesh::new_1d(nx, xr, bcx)?,
        2 => Mesh::new_2d(nx, ny, xr, yr, bcx, bcy)?,
        _ => return Err(bad(format!("dimension {dim}"))),
    };
    let expected_vars = if dim == 1 { 3 } else { 4 };
    if S::NVARS != expected_vars {
        return Err(bad(format!(
            "{dim}D checkpoint read into a state with {} components",
            S::NVARS
        )));
    }
    let mut sol = DgSolution::<S>::zeros(mesh, k, gas);
    sol.time = num("time")?;
    let nm = mode_count(dim, k);
    let _columns = lines.next().ok_or_else(|| bad("missing column line"))??;
    let mut seen = 0usize;
    for line in lines {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() != 2 + S::NVARS {
            return Err(bad(format!("row '{line}'")));
        }
        let cell: usize = fields[0]
            .parse()
            .map_err(|_| bad(format!("row '{line}'")))?;
        let mode: usize = fields[1]
            .parse()
            .map_err(|_| bad(format!("row '{line}'")))?;
        if mode >= nm || cell >= sol.mesh.cell_count() {
            return Err(bad(format!("index out of range in row '{line}'")));
        }
        let vals: Vec<f64> = fields[2..]
            .iter()
            .map(|v| v.parse::<f64>().map_err(|_| bad(format!("row '{line}'"))))
            .collect::<Result<_>>()?;
        sol.coeffs[cell * nm + mode] = S::from_components(&vals);
        seen += 1;
    }
    if seen != sol.coeffs.len() {
        return Err(bad(format!(
            "expected {} rows, found {seen}",
            sol.coeffs.len()
        )));
    }
    Ok(sol)
}
