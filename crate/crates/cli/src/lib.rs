//! Table verification and command-line plumbing for `fockdec`.

pub mod cache;
pub mod expr;
pub mod golden;
pub mod prop4e;
pub mod report;
pub mod suites;
pub mod tables;
pub mod verify;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] fockdec::Error),
    #[error(transparent)]
    Golden(#[from] golden::GoldenError),
    #[error(transparent)]
    Expr(#[from] expr::ExprError),
    #[error("unknown verification target {0:?}")]
    UnknownTarget(String),
    #[error("{0}")]
    Usage(String),
    #[error("cache: {0}")]
    Cache(String),
}

pub type CliResult<T> = std::result::Result<T, CliError>;
