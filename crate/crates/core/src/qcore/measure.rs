//! Born-rule measurements: travel qubit in the computational basis, and the
//! joint Bell measurement Bob performs.

use num_complex::Complex64;

use super::bell::{bell_decompose, BellLabel, LabelingConvention};
use super::random::RandomSource;
use super::state::TwoQubitState;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TMeasurement {
    pub outcome: u8,
    pub collapsed: TwoQubitState,
    pub probability: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BellMeasurement {
    pub label: BellLabel,
    pub probability: f64,
}

/// `[P(t=0), P(t=1)]`.
pub fn t_probabilities(state: &TwoQubitState) -> [f64; 2] {
    let a = state.amplitudes();
    [
        a[0].norm_sqr() + a[2].norm_sqr(),
        a[1].norm_sqr() + a[3].norm_sqr(),
    ]
}

/// Born weights indexed by `2k + l` in `convention`.
pub fn bell_probabilities(state: &TwoQubitState, convention: LabelingConvention) -> [f64; 4] {
    let d = bell_decompose(state, convention);
    let mut out = [0.0; 4];
    for (label, c) in d.iter() {
        out[label.index()] = c.norm_sqr();
    }
    out
}

/// Draws an index with the given weights. Zero-weight entries are never
/// returned, even when rounding leaves `u` past the cumulative total.
fn sample(weights: &[f64], rand: &mut RandomSource) -> usize {
    let total: f64 = weights.iter().sum();
    let u = rand.uniform() * total;
    let mut acc = 0.0;
    let mut last_nonzero = 0;
    for (i, &w) in weights.iter().enumerate() {
        if w <= 0.0 {
            continue;
        }
        last_nonzero = i;
        acc += w;
        if u < acc {
            return i;
        }
    }
    last_nonzero
}

pub fn measure_t_computational(state: &TwoQubitState, rand: &mut RandomSource) -> TMeasurement {
    let probs = t_probabilities(state);
    let outcome = sample(&probs, rand) as u8;
    let probability = probs[outcome as usize];
    let scale = 1.0 / probability.sqrt();
    let mut amp = [Complex64::new(0.0, 0.0); 4];
    for h in 0..2 {
        let idx = 2 * h + outcome as usize;
        amp[idx] = state.amplitudes()[idx] * scale;
    }
    TMeasurement {
        outcome,
        collapsed: TwoQubitState::from_amplitudes(amp),
        probability,
    }
}

pub fn measure_bell(
    state: &TwoQubitState,
    convention: LabelingConvention,
    rand: &mut RandomSource,
) -> BellMeasurement {
    let probs = bell_probabilities(state, convention);
    let idx = sample(&probs, rand);
    BellMeasurement {
        label: convention.labels()[idx],
        probability: probs[idx],
    }
}
