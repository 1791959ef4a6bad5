use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("I/O error: {0}")]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Core(#[from] hsbound_core::Error),
    #[error("invalid range: need 3 <= nmin <= nmax, got nmin = {nmin}, nmax = {nmax}")]
    InvalidRange { nmin: usize, nmax: usize },
    #[error("`{0}` refuses --divisor n-1: the bounds hold for the population divisor n only")]
    DivisorRefused(&'static str),
}
