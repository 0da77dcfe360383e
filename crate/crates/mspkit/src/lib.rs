//! File formats, seeded input generation and the identity suite built on
//! [`mspkit_core`]. The `mspkit` binary is a thin front end over this crate.

pub mod format;
pub mod golden;
pub mod random;
pub mod verify;
