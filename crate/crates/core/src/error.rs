use std::path::PathBuf;

/// Broad failure families, used by callers (e.g. the CLI) to map errors onto
/// exit codes without matching every variant.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorCategory {
    Validation,
    Numerical,
    Io,
}

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("cell is not pristine (already carries a defect)")]
    NotPristine,

    #[error("supercell multiplicity {n} too small: {reason}")]
    CellTooSmall { n: u32, reason: String },

    #[error("atom index {index} out of range for {natoms} atoms")]
    IndexOutOfRange { index: usize, natoms: usize },

    #[error("atom count mismatch: expected {expected}, found {found}")]
    AtomCountMismatch { expected: usize, found: usize },

    #[error("lattice mismatch between cells: {0}")]
    LatticeMismatch(String),

    #[error("embedding rule violation: {0}")]
    RuleViolation(String),

    #[error("unmatched pair fingerprint: {0}")]
    FingerprintUnmatched(String),

    #[error("matrix not symmetric: max residual {residual:e}")]
    NotSymmetric { residual: f64 },

    #[error("unstable force model: eigenvalue {omega_sq_mev2:e} meV^2 below tolerance")]
    Unstable { omega_sq_mev2: f64 },

    #[error("eigensolver failed to converge (lapack info = {info})")]
    EigenFailed { info: i32 },

    #[error("broken symmetry: {0}")]
    SymmetryBroken(String),

    #[error("format error: {0}")]
    Format(String),

    #[error("empty input: {0}")]
    EmptyInput(String),

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
}

impl Error {
    pub fn category(&self) -> ErrorCategory {
        match self {
            Error::InvalidArgument(_)
            | Error::NotPristine
            | Error::CellTooSmall { .. }
            | Error::IndexOutOfRange { .. }
            | Error::AtomCountMismatch { .. }
            | Error::LatticeMismatch(_)
            | Error::RuleViolation(_)
            | Error::Format(_)
            | Error::EmptyInput(_) => ErrorCategory::Validation,
            Error::FingerprintUnmatched(_)
            | Error::NotSymmetric { .. }
            | Error::Unstable { .. }
            | Error::EigenFailed { .. }
            | Error::SymmetryBroken(_) => ErrorCategory::Numerical,
            Error::Io { .. } => ErrorCategory::Io,
        }
    }

    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
