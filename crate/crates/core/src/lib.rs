//! Executable prime-spectrum topology and star-operation machinery for
//! deciding the Prüfer v-multiplication property on a catalog of domains.

pub mod arith;
pub mod error;
pub mod ho;
pub mod intpoly;
pub mod pvmd;
pub mod spectra;
pub mod star;
pub mod verify;

pub use error::{Error, Result};
