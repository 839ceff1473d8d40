use serde::Serialize;

use crate::attacks::EveStrategy;
use crate::protocol::{run_session, Conventions};
use crate::qcore::{RandomSource, GENERATOR_ID};
use crate::{Error, Result};

/// Bernoulli detection estimate.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct McEstimate {
    pub mean: f64,
    /// `sqrt(mean (1 - mean) / n)`.
    pub standard_error: f64,
    pub n: u64,
    pub seed: u64,
    pub generator_id: &'static str,
}

impl McEstimate {
    /// `|mean - target|` measured in standard errors; zero-variance
    /// estimates count as 0 on exact agreement and infinity otherwise.
    pub fn sigmas_from(&self, target: f64) -> f64 {
        let diff = (self.mean - target).abs();
        if self.standard_error > 0.0 {
            diff / self.standard_error
        } else if diff == 0.0 {
            0.0
        } else {
            f64::INFINITY
        }
    }
}

/// Stream index reserved for round bits, apart from the per-round quantum
/// streams `0..n`.
const BIT_STREAM: u64 = u64::MAX;

/// Runs `n` control rounds with uniformly random bits.
pub fn monte_carlo(
    attack: EveStrategy,
    conventions: Conventions,
    n: u64,
    seed: u64,
) -> Result<McEstimate> {
    if n == 0 {
        return Err(Error::Usage("Monte Carlo needs at least one round".into()));
    }
    let rand = RandomSource::new(seed);
    let bits = rand.child(BIT_STREAM);
    let stats = run_session(n, 1.0, &bits, attack, conventions, &rand)?;
    let mean = stats.detection_rate.unwrap_or(0.0);
    Ok(McEstimate {
        mean,
        standard_error: (mean * (1.0 - mean) / n as f64).sqrt(),
        n,
        seed,
        generator_id: GENERATOR_ID,
    })
}
