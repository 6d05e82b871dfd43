use hyperzeta_core::Error as CoreError;

/// Failures of a command, each with its process exit code.
#[derive(Debug, thiserror::Error)]
pub enum AppError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] CoreError),
    #[error("i/o: {0}")]
    Io(#[from] std::io::Error),
    #[error("{0}")]
    Output(String),
    #[error("{0} verification check(s) failed")]
    Verification(u64),
}

impl AppError {
    /// 1 parse/config, 2 bad curve, 3 budget, 4 verification failure.
    pub fn exit_code(&self) -> i32 {
        match self {
            AppError::Core(e) => match e {
                CoreError::NotSquarefree { .. } | CoreError::GenusZero(_) | CoreError::ZeroPolynomial => 2,
                CoreError::BudgetExceeded { .. } => 3,
                CoreError::RouteMismatch { .. }
                | CoreError::FunctionalEquation { .. }
                | CoreError::NewtonNotExact { .. } => 4,
                _ => 1,
            },
            AppError::Verification(_) => 4,
            AppError::Usage(_) | AppError::Io(_) | AppError::Output(_) => 1,
        }
    }
}

impl From<csv::Error> for AppError {
    fn from(e: csv::Error) -> Self {
        AppError::Output(e.to_string())
    }
}

impl From<serde_json::Error> for AppError {
    fn from(e: serde_json::Error) -> Self {
        AppError::Output(e.to_string())
    }
}
