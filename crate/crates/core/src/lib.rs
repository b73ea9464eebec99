//! Exact search and structure tools for graphs without large `K_{2,n}` minors.
//!
//! Everything here works on small dense-id graphs ([`Graph`]). Search
//! routines take a [`Budget`] and report [`Error::WorkLimit`] when it runs
//! out, which is never conflated with a negative answer.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod bits;
pub mod combinat;
pub mod budget;
pub mod enumerate;
pub mod error;
pub mod fanstrip;
pub mod graph;
pub mod iso;
pub mod minor;
pub mod standard;
pub mod sum;
pub mod typeone;

pub use budget::Budget;
pub use error::{Error, Result};
pub use graph::{Graph, PathRef, VertexId};
