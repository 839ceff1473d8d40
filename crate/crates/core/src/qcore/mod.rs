//! Two-qubit linear algebra for the dialogue protocol.
//!
//! Everything here is a pure function of its inputs. Randomness enters only
//! through an explicitly passed [`RandomSource`].

mod bell;
mod measure;
mod pauli;
mod random;
mod state;

pub use bell::{
    bell_decompose, bell_state, label_map, BellDecomposition, BellLabel, LabelingConvention,
};
pub use measure::{
    bell_probabilities, measure_bell, measure_t_computational, t_probabilities, BellMeasurement,
    TMeasurement,
};
pub use pauli::{
    pauli_action_closed_form, pauli_compose, pauli_matrix, Matrix2, PauliCode, Phase, PhasedPauli,
};
pub use random::{RandomSource, GENERATOR_ID};
pub use state::{equal_up_to_global_phase, Amplitude, TwoQubitState};

/// Tolerance for algebraic identities and normalization checks.
pub const ALGEBRA_TOL: f64 = 1e-12;

/// Tolerance used when canonicalizing global phase.
pub const CANONICAL_TOL: f64 = 1e-9;
