//! Exact Chevalley–Eilenberg cohomology of Lie algebras with module
//! coefficients, absolute and relative to a subalgebra.

pub mod cecomplex;
pub mod cli;
pub mod cohomology;
pub mod error;
pub mod extensions;
pub mod gmod;
pub mod identities;
pub mod liealg;
pub mod ratlin;
pub mod verify;
pub mod volume;

pub use error::{Error, Result};
