use std::fmt;
use std::str::FromStr;

use crate::error::{IrpError, Result};

/// Boundary treatment along one axis.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Boundary {
    Periodic,
    /// Zero-gradient: the ghost trace copies the boundary cell's own trace.
    Transmissive,
}

impl fmt::Display for Boundary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Boundary::Periodic => "periodic",
            Boundary::Transmissive => "transmissive",
        })
    }
}

impl FromStr for Boundary {
    type Err = IrpError;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "periodic" => Ok(Boundary::Periodic),
            "transmissive" => Ok(Boundary::Transmissive),
            _ => Err(IrpError::InvalidArgument(format!("unknown boundary '{s}'"))),
        }
    }
}

/// Uniform Cartesian mesh. In 1D `ny = 1` and the y data are unused.
#[derive(Debug, Clone, PartialEq)]
pub struct Mesh {
    pub dim: usize,
    pub nx: usize,
    pub ny: usize,
    pub x_range: [f64; 2],
    pub y_range: [f64; 2],
    pub dx: f64,
    pub dy: f64,
    pub bc_x: Boundary,
    pub bc_y: Boundary,
}

impl Mesh {
    pub fn new_1d(nx: usize, x_range: [f64; 2], bc: Boundary) -> Result<Self> {
        if nx < 2 {
            return Err(IrpError::InvalidArgument(format!(
                "need at least 2 cells, got {nx}"
            )));
        }
        let dx = (x_range[1] - x_range[0]) / nx as f64;
        if !(dx > 0.0) {
            return Err(IrpError::InvalidArgument("empty x range".into()));
        }
        Ok(Self {
            dim: 1,
            nx,
            ny: 1,
            x_range,
            y_range: [0.0, 1.0],
            dx,
            dy: 1.0,
            bc_x: bc,
            bc_y: Boundary::Periodic,
        })
    }

    pub fn new_2d(
        nx: usize,
        ny: usize,
        x_range: [f64; 2],
        y_range: [f64; 2],
        bc_x: Boundary,
        bc_y: Boundary,
    ) -> Result<Self> {
        if nx < 2 || ny < 2 {
            return Err(IrpError::InvalidArgument(format!(
                "need at least 2x2 cells, got {nx}x{ny}"
            )));
        }
        let dx = (x_range[1] - x_range[0]) / nx as f64;
        let dy = (y_range[1] - y_range[0]) / ny as f64;
        if !(dx > 0.0 && dy > 0.0) {
            return Err(IrpError::InvalidArgument("empty domain".into()));
        }
        Ok(Self {
            dim: 2,
            nx,
            ny,
            x_range,
            y_range,
            dx,
            dy,
            bc_x,
            bc_y,
        })
    }

    pub fn cell_count(&self) -> usize {
        self.nx * self.ny
    }

    #[inline]
    pub fn index(&self, i: usize, j: usize) -> usize {
        i + self.nx * j
    }

    #[inline]
    pub fn ij(&self, cell: usize) -> (usize, usize) {
        (cell % self.nx, cell / self.nx)
    }

    pub fn x_bounds(&self, i: usize) -> [f64; 2] {
        let a = self.x_range[0] + i as f64 * self.dx;
        [a, a + self.dx]
    }

    pub fn y_bounds(&self, j: usize) -> [f64; 2] {
        let a = self.y_range[0] + j as f64 * self.dy;
        [a, a + self.dy]
    }

    pub fn center(&self, cell: usize) -> [f64; 2] {
        let (i, j) = self.ij(cell);
        let y = if self.dim == 1 {
            0.0
        } else {
            self.y_range[0] + (j as f64 + 0.5) * self.dy
        };
        [self.x_range[0] + (i as f64 + 0.5) * self.dx, y]
    }

    /// Extent of a cell along each axis (`dy = 1` in 1D).
    pub fn extent(&self) -> [f64; 2] {
        if self.dim == 1 {
            [self.dx, 1.0]
        } else {
            [self.dx, self.dy]
        }
    }

    pub fn cell_volume(&self) -> f64 {
        if self.dim == 1 {
            self.dx
        } else {
            self.dx * self.dy
        }
    }

    pub fn domain_measure(&self) -> f64 {
        self.cell_volume() * self.cell_count() as f64
    }

    /// Physical point of a reference coordinate in a cell.
    pub fn physical(&self, cell: usize, r: [f64; 2]) -> [f64; 2] {
        let c = self.center(cell);
        if self.dim == 1 {
            [c[0] + r[0] * self.dx, 0.0]
        } else {
            [c[0] + r[0] * self.dx, c[1] + r[1] * self.dy]
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn indexing_and_geometry() {
        let m = Mesh::new_2d(
            4,
            3,
            [0.0, 2.0],
            [0.0, 3.0],
            Boundary::Periodic,
            Boundary::Transmissive,
        )
        .unwrap();
        assert_eq!(m.cell_count(), 12);
        assert_eq!(m.index(1, 2), 9);
        assert_eq!(m.ij(9), (1, 2));
        assert_eq!(m.center(9), [0.75, 2.5]);
        assert_eq!(m.physical(9, [0.5, -0.5]), [1.0, 2.0]);
        assert!((m.domain_measure() - 6.0).abs() < 1e-15);
        assert!(Mesh::new_1d(1, [0.0, 1.0], Boundary::Periodic).is_err());
        assert!(Mesh::new_1d(4, [1.0, 1.0], Boundary::Periodic).is_err());
        assert_eq!(
            "transmissive".parse::<Boundary>().unwrap(),
            Boundary::Transmissive
        );
    }
}
