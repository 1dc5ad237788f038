use std::process::ExitCode;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),

    #[error("{0}")]
    Core(#[from] cliffgate::Error),

    #[error("{context}: {source}")]
    Located { context: String, source: cliffgate::Error },

    #[error("verification failed: {0}")]
    Verification(String),

    #[error("size cap: {0}")]
    SizeCap(String),

    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
}

pub mod code {
    pub const IO: u8 = 1;
    pub const USAGE: u8 = 2;
    pub const PARSE: u8 = 3;
    pub const PRECONDITION: u8 = 4;
    pub const VERIFICATION: u8 = 5;
    pub const CAP: u8 = 6;
}

fn core_code(e: &cliffgate::Error) -> u8 {
    use cliffgate::Error::*;
    match e {
        Parse { .. } => code::PARSE,
        CapExceeded(_) | AmbientTooLarge(_) => code::CAP,
        _ => code::PRECONDITION,
    }
}

impl CliError {
    pub fn exit_code(&self) -> ExitCode {
        ExitCode::from(match self {
            CliError::Usage(_) => code::USAGE,
            CliError::Core(e) | CliError::Located { source: e, .. } => core_code(e),
            CliError::Verification(_) => code::VERIFICATION,
            CliError::SizeCap(_) => code::CAP,
            CliError::Io { .. } => code::IO,
        })
    }
}

pub type CliResult<T> = Result<T, CliError>;
