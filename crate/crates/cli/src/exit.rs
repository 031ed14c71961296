//! Process exit codes.

use perzeta_core::Error;
use perzeta_oracle::OracleError;

pub const OK: u8 = 0;
pub const BOUND_EXCEEDED: u8 = 1;
pub const DOMAIN: u8 = 2;
pub const CONVERGENCE: u8 = 3;
pub const IO: u8 = 4;
pub const ORACLE_CONFIG: u8 = 5;
pub const CONDITIONING: u8 = 6;

#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    pub fn new(code: u8, message: impl Into<String>) -> Self {
        Failure {
            code,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Convergence { .. } => CONVERGENCE,
            Error::Conditioning { .. } => CONDITIONING,
            _ => DOMAIN,
        };
        Failure::new(code, e.to_string())
    }
}

impl From<OracleError> for Failure {
    fn from(e: OracleError) -> Self {
        match e {
            OracleError::Core(inner) => inner.into(),
            other => Failure::new(ORACLE_CONFIG, other.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        // A closed downstream pipe is not an error of ours.
        if e.kind() == std::io::ErrorKind::BrokenPipe {
            return Failure::new(OK, "");
        }
        Failure::new(IO, e.to_string())
    }
}
