use std::fmt;
use std::io;

use semistream::algo::{AugmentError, ParamError};
use semistream::io::ParseError;
use semistream::rs::{LambdaError, ManifestError, ParamsError, RsError};

/// Why a command stopped. Each kind has its own exit status.
#[derive(Debug)]
pub enum Failure {
    /// Bad flags or parameter values.
    Usage(String),
    /// Unreadable or malformed input, or output that could not be written.
    Input(String),
    /// An RS instance failed certification.
    Certification(String),
}

impl Failure {
    pub fn exit_code(&self) -> i32 {
        match self {
            Failure::Usage(_) => 1,
            Failure::Input(_) => 2,
            Failure::Certification(_) => 3,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Usage(m) | Failure::Input(m) | Failure::Certification(m) => f.write_str(m),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

impl From<ParseError> for Failure {
    fn from(e: ParseError) -> Self {
        Failure::Input(e.to_string())
    }
}

impl From<ManifestError> for Failure {
    fn from(e: ManifestError) -> Self {
        Failure::Input(e.to_string())
    }
}

impl From<ParamError> for Failure {
    fn from(e: ParamError) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<ParamsError> for Failure {
    fn from(e: ParamsError) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<RsError> for Failure {
    fn from(e: RsError) -> Self {
        match e {
            RsError::Graph(_) => Failure::Input(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

impl From<LambdaError> for Failure {
    fn from(e: LambdaError) -> Self {
        match e {
            LambdaError::Uncertified | LambdaError::CertificateFailed => Failure::Certification(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

impl From<AugmentError> for Failure {
    fn from(e: AugmentError) -> Self {
        Failure::Input(e.to_string())
    }
}
