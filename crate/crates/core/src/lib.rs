//! Simulator and exact analysis toolkit for the two-way quantum dialogue
//! protocol under intercept-measure and Pauli-disturbance eavesdropping.
//!
//! The crate is layered bottom-up:
//!
//! - [`qcore`]: two-qubit statevectors, the Pauli encoding operators, Bell
//!   states under two labeling conventions, Born-rule measurements and the
//!   seedable [`RandomSource`](qcore::RandomSource).
//! - [`attacks`]: Eve's strategies and their action on the travel qubit.
//! - [`protocol`]: single-round choreography and multi-round sessions.
//! - [`analysis`]: exact rational enumeration of detection probabilities,
//!   Monte Carlo estimation, message corruption rates and the claims report.
//! - [`cli`]: the deterministic command-line front end.
//!
//! Basis ordering is fixed project-wide: amplitude index `2*h + t`, where `h`
//! is the home qubit Bob keeps and `t` is the travel qubit.

pub mod analysis;
pub mod attacks;
pub mod cli;
mod error;
pub mod protocol;
pub mod qcore;

pub use error::{Error, Result};
