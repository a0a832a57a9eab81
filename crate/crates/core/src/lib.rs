//! Desk-scale simulation of macroscopic spin-cat generation in a
//! Rydberg-dressed BEC and its transfer to mechanical oscillators:
//! collective-spin bifurcation dynamics, quantum-jump Monte Carlo
//! decoherence, Rydberg pair-state structure and blockade fidelity, and the
//! spin-to-phonon transfer protocol.

pub mod dicke;
pub mod error;
pub mod linalg;
pub mod lmg;

pub use error::{Error, Result};
