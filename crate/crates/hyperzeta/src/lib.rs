//! Std companion of `hyperzeta-core`: parallel family scans, CSV / JSON
//! reports and the subcommands of the `hyperzeta` binary.

pub mod cli;
pub mod commands;
mod error;
pub mod parallel;
pub mod report;
pub mod verify;
pub mod zeta;

pub use error::AppError;
