//! Detection-probability analysis.
//!
//! [`enumerate_exact`] folds over every `(i, j, k, l)`, every Eve branch and
//! every Bell outcome using exact Gaussian-integer amplitudes, so all reported
//! probabilities are exact dyadic rationals. [`monte_carlo`] estimates the
//! same quantities by running the protocol round by round.

mod claims;
mod enumerate;
mod exact;
mod montecarlo;
mod rational;

pub use claims::{compare_claims, ClaimsReport, LabeledFigure};
pub use enumerate::{
    enumerate_exact, enumerate_exact_ordered, message_error_rate, paper_case_table, CaseBranch,
    CaseDescriptor, DetectionReport, MessageErrorReport,
};
pub use exact::ExactVector;
pub use montecarlo::{monte_carlo, McEstimate};
pub use rational::Rational;
