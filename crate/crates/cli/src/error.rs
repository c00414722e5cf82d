use spectral_core::LabError;
use thiserror::Error;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("parse error at line {line}, column {column} (field {path}): {message}")]
    Parse {
        path: String,
        line: usize,
        column: usize,
        message: String,
    },

    #[error("shape error in {field}: {message}")]
    Shape { field: String, message: String },

    #[error("cannot {action} {path}: {source}")]
    Io {
        action: &'static str,
        path: String,
        source: std::io::Error,
    },

    #[error("invalid argument: {0}")]
    Argument(String),

    #[error("condition violated: A(BA)^2 = ABACA = ACABA = (AC)^2A does not hold")]
    ConditionViolated,

    #[error(transparent)]
    Lab(#[from] LabError),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::ConditionViolated | CliError::Lab(LabError::ConditionNotSatisfied) => EXIT_FAIL,
            CliError::Lab(LabError::Postcondition(_) | LabError::Generator(_)) => EXIT_FAIL,
            _ => EXIT_INPUT,
        }
    }
}
