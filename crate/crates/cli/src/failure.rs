use std::process::ExitCode;

/// Command failures, each with its process exit code.
#[derive(Debug, thiserror::Error)]
pub enum Failure {
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Validation(String),
    #[error("{0}")]
    Consistency(String),
    #[error("{0}")]
    Budget(String),
}

impl Failure {
    pub fn code(&self) -> ExitCode {
        ExitCode::from(match self {
            Failure::Input(_) => 1,
            Failure::Usage(_) => 2,
            Failure::Validation(_) => 3,
            Failure::Consistency(_) => 4,
            Failure::Budget(_) => 5,
        })
    }
}

impl From<lattice_wiring::Error> for Failure {
    fn from(e: lattice_wiring::Error) -> Self {
        match e {
            lattice_wiring::Error::Budget { .. } => Failure::Budget(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Input(e.to_string())
    }
}
