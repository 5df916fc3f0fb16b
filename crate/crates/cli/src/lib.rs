//! Command-line plumbing over `hurwitz-core`: enumeration cache, parallel
//! metric sweeps, DOT/CSV exports and the subcommand implementations.

pub mod cache;
pub mod commands;
pub mod config;
pub mod export;
pub mod sweep;

pub use commands::Outcome;
pub use config::{Format, ItemKind, RunConfig};
