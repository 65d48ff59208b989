use crate::error::{IrpError, Result};
use crate::euler::ConservedState;
use crate::solver::basis;

/// Modal coefficients of the DG solution on one cell. Mode 0 is the cell
/// average.
#[derive(Debug, Clone, PartialEq)]
pub struct CellPolynomial<S> {
    pub degree: usize,
    pub dim: usize,
    pub modes: Vec<S>,
}

impl<S: ConservedState> CellPolynomial<S> {
    pub fn constant(dim: usize, degree: usize, w: S) -> Self {
        let mut modes = vec![S::default(); basis::mode_count(dim, degree)];
        modes[0] = w;
        Self { degree, dim, modes }
    }

    pub fn from_modes(dim: usize, degree: usize, modes: Vec<S>) -> Result<Self> {
        if !(dim == 1 || dim == 2) {
            return Err(IrpError::InvalidArgument(format!("dimension {dim}")));
        }
        let expected = basis::mode_count(dim, degree);
        if modes.len() != expected {
            return Err(IrpError::InvalidArgument(format!(
                "expected {expected} modes for degree {degree} in {dim}D, got {}",
                modes.len()
            )));
        }
        Ok(Self { degree, dim, modes })
    }

    #[inline]
    pub fn average(&self) -> S {
        self.modes[0]
    }

    /// Evaluates with precomputed basis values.
    pub fn eval(&self, phi: &[f64]) -> S {
        self.modes
            .iter()
            .zip(phi)
            .fold(S::default(), |acc, (&c, &p)| acc + c * p)
    }

    /// Evaluates at a reference point in `[−1/2, 1/2]^d`.
    pub fn eval_at(&self, reference: [f64; 2]) -> S {
        self.eval(&basis::tabulate(self.dim, self.degree, reference))
    }

    /// `θ·w + (1 − θ)·w̄`, i.e. every non-constant mode scaled by `θ`.
    pub fn contract(&mut self, theta: f64) {
        for c in self.modes.iter_mut().skip(1) {
            *c = *c * theta;
        }
    }
}
