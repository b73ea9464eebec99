//! File formats, JSON views and property suites on top of `k2n-core`.

pub mod dto;
pub mod format;
pub mod gen;
pub mod verify;

pub use k2n_core as core;
