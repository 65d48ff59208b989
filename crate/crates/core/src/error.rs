use thiserror::Error;

/// Errors raised by the solver stack.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum IrpError {
    #[error("vacuum state: density {rho} is not positive")]
    Vacuum { rho: f64 },

    #[error("negative pressure {p}")]
    NegativePressure { p: f64 },

    #[error("entropy undefined: rho = {rho}, p = {p}")]
    EntropyUndefined { rho: f64, p: f64 },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("cell average outside interior: U(w_bar) = {u_bar}")]
    CellAverageOutsideInterior { u_bar: f64 },

    #[error("average outside region: {constraint} margin {margin:e}")]
    AverageOutsideRegion {
        constraint: &'static str,
        margin: f64,
    },

    #[error("region violation in cell {cell}: {source}")]
    RegionViolation {
        cell: usize,
        #[source]
        source: Box<IrpError>,
    },

    #[error("vacuum formation in Riemann problem: delta_u = {delta_u}, critical = {critical}")]
    VacuumFormation { delta_u: f64, critical: f64 },

    #[error("Newton iteration failed to converge after {iterations} iterations")]
    NoConvergence { iterations: usize },

    #[error("CFL violation: lambda * sigma = {value} exceeds {bound}")]
    CflViolation { value: f64, bound: f64 },

    #[error("non-physical state at cell {cell}, point {point}: {reason}")]
    NonPhysical {
        cell: usize,
        point: usize,
        reason: String,
    },

    #[error("config error: {0}")]
    Config(String),

    #[error("io error: {0}")]
    Io(String),
}

impl IrpError {
    /// Region violations abort a run with a dedicated exit code.
    pub fn is_region_violation(&self) -> bool {
        matches!(
            self,
            IrpError::RegionViolation { .. }
                | IrpError::AverageOutsideRegion { .. }
                | IrpError::CellAverageOutsideInterior { .. }
                | IrpError::NonPhysical { .. }
        )
    }
}

impl From<std::io::Error> for IrpError {
    fn from(e: std::io::Error) -> Self {
        IrpError::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, IrpError>;
