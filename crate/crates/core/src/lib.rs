//! Tropical invariants of binary quintics and (4,1)-forms, tree types of
//! their root configurations, and reduction types of Picard curves.

pub mod classify;
pub mod error;
pub mod invariants;
pub mod io;
pub mod numkernel;
pub mod oracle;
pub mod polyalg;
pub mod ring;
pub mod selftest;
pub mod transvect;
pub mod verify;

pub use error::{Error, Result};
