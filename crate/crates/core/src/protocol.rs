//! Round choreography of the two-way dialogue.
//!
//! One round: Bob prepares the EPR pair and applies `C_{k,l}` to the travel
//! qubit, the qubit passes Eve's B→A tap, Alice applies `C_{i,j}`, the qubit
//! passes Eve's A→B tap, and Bob performs a Bell measurement. Undisturbed, the
//! outcome is `Ψ_{i⊕k, j⊕l}` in operator-encoding labels.
//!
//! In a control round Alice announces `(i, j)` after Bob's measurement and
//! Bob checks the outcome against the expected label. In a message round Bob
//! announces the outcome and each side XORs away its own bits.

use std::fmt;
use std::ops::Add;

use rayon::prelude::*;
use serde::Serialize;

use crate::attacks::{apply_eve, EveRecord, EveStrategy, Route};
use crate::qcore::{
    bell_state, measure_bell, BellLabel, LabelingConvention, PauliCode, RandomSource,
    TwoQubitState, ALGEBRA_TOL, GENERATOR_ID,
};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum RoundMode {
    Message,
    Control,
}

/// How an outcome is compared to the expected label when the two live in
/// different conventions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum ComparisonRule {
    /// Compare raw index pairs without conversion.
    StrictPaper,
    /// Map the outcome through `label_map` first.
    Converted,
}

impl ComparisonRule {
    pub fn name(self) -> &'static str {
        match self {
            ComparisonRule::StrictPaper => "strict-paper",
            ComparisonRule::Converted => "converted",
        }
    }
}

/// Convention pair plus comparison rule; echoed in every report.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Conventions {
    pub outcome: LabelingConvention,
    pub expectation: LabelingConvention,
    pub comparison: ComparisonRule,
}

impl Conventions {
    pub fn new(
        outcome: LabelingConvention,
        expectation: LabelingConvention,
        comparison: ComparisonRule,
    ) -> Conventions {
        Conventions {
            outcome,
            expectation,
            comparison,
        }
    }

    /// Operator-encoding labels on both sides.
    pub fn consistent() -> Conventions {
        Conventions::new(
            LabelingConvention::OperatorEncoding,
            LabelingConvention::OperatorEncoding,
            ComparisonRule::Converted,
        )
    }

    /// Outcomes read in parity-phase labels, expectations in
    /// operator-encoding labels, raw index comparison.
    pub fn paper_bookkeeping() -> Conventions {
        Conventions::new(
            LabelingConvention::ParityPhase,
            LabelingConvention::OperatorEncoding,
            ComparisonRule::StrictPaper,
        )
    }
}

impl Default for Conventions {
    fn default() -> Self {
        Conventions::consistent()
    }
}

impl fmt::Display for Conventions {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "outcome={} expected={} compare={}",
            self.outcome,
            self.expectation,
            self.comparison.name()
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RoundConfig {
    /// `(k, l)`.
    pub bob_bits: PauliCode,
    /// `(i, j)`.
    pub alice_bits: PauliCode,
    pub mode: RoundMode,
    pub conventions: Conventions,
}

/// The Bell label Bob predicts for an undisturbed round.
pub fn expected_outcome(i: u8, j: u8, k: u8, l: u8, convention: LabelingConvention) -> BellLabel {
    let code = PauliCode::new(i, j).xor(PauliCode::new(k, l));
    BellLabel::from_code(code, LabelingConvention::OperatorEncoding).in_convention(convention)
}

/// Whether a control round flags Eve.
pub fn is_detected(outcome: BellLabel, expected: BellLabel, rule: ComparisonRule) -> bool {
    if outcome.convention() == expected.convention() {
        return !outcome.matches(expected);
    }
    match rule {
        ComparisonRule::StrictPaper => !outcome.same_indices(expected),
        ComparisonRule::Converted => !outcome
            .in_convention(expected.convention())
            .matches(expected),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Snapshots {
    pub prepared: TwoQubitState,
    pub bob_encoded: TwoQubitState,
    pub after_tap_b2a: TwoQubitState,
    pub alice_encoded: TwoQubitState,
    pub after_tap_a2b: TwoQubitState,
}

impl Snapshots {
    pub fn iter(&self) -> impl Iterator<Item = (&'static str, &TwoQubitState)> {
        [
            ("prepared", &self.prepared),
            ("bob_encoded", &self.bob_encoded),
            ("after_tap_b2a", &self.after_tap_b2a),
            ("alice_encoded", &self.alice_encoded),
            ("after_tap_a2b", &self.after_tap_a2b),
        ]
        .into_iter()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RoundTranscript {
    pub config: RoundConfig,
    pub snapshots: Snapshots,
    pub eve: EveRecord,
    pub bell_outcome: BellLabel,
    pub bell_probability: f64,
    /// Bob's reading of Alice's `(i, j)`; message rounds only.
    pub decoded_alice_bits: Option<PauliCode>,
    /// Alice's reading of Bob's `(k, l)`; message rounds only.
    pub decoded_bob_bits: Option<PauliCode>,
    /// Control rounds only.
    pub detected: Option<bool>,
}

impl RoundTranscript {
    pub fn validate(&self) -> Result<()> {
        for (stage, state) in self.snapshots.iter() {
            if !state.is_normalized(ALGEBRA_TOL) {
                return Err(Error::Invariant(format!(
                    "snapshot {stage} has norm² {}",
                    state.norm_sqr()
                )));
            }
        }
        let control = self.config.mode == RoundMode::Control;
        if self.detected.is_some() != control {
            return Err(Error::Invariant(
                "detection flag present outside control mode".into(),
            ));
        }
        Ok(())
    }

    pub fn expected(&self) -> BellLabel {
        let (a, b) = (self.config.alice_bits, self.config.bob_bits);
        expected_outcome(
            a.a(),
            a.b(),
            b.a(),
            b.b(),
            self.config.conventions.expectation,
        )
    }
}

pub fn run_round(
    config: RoundConfig,
    eve: EveStrategy,
    rand: &mut RandomSource,
) -> RoundTranscript {
    let prepared = bell_state(LabelingConvention::OperatorEncoding, 0, 0);
    let bob_encoded = prepared.apply_pauli_t(config.bob_bits);
    let (after_tap_b2a, rec_b2a) = apply_eve(eve, Route::BtoA, &bob_encoded, rand);
    let alice_encoded = after_tap_b2a.apply_pauli_t(config.alice_bits);
    let (after_tap_a2b, rec_a2b) = apply_eve(eve, Route::AtoB, &alice_encoded, rand);
    let measured = measure_bell(&after_tap_a2b, config.conventions.outcome, rand);

    let eve_record = match rec_b2a {
        EveRecord::None => rec_a2b,
        rec => rec,
    };

    let mut transcript = RoundTranscript {
        config,
        snapshots: Snapshots {
            prepared,
            bob_encoded,
            after_tap_b2a,
            alice_encoded,
            after_tap_a2b,
        },
        eve: eve_record,
        bell_outcome: measured.label,
        bell_probability: measured.probability,
        decoded_alice_bits: None,
        decoded_bob_bits: None,
        detected: None,
    };
    match config.mode {
        RoundMode::Message => {
            // XOR decoding is only meaningful on operator-encoding labels.
            let announced = measured
                .label
                .in_convention(LabelingConvention::OperatorEncoding)
                .code();
            transcript.decoded_alice_bits = Some(announced.xor(config.bob_bits));
            transcript.decoded_bob_bits = Some(announced.xor(config.alice_bits));
        }
        RoundMode::Control => {
            transcript.detected = Some(is_detected(
                measured.label,
                transcript.expected(),
                config.conventions.comparison,
            ));
        }
    }
    transcript
}

/// Aggregates over a session of rounds.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SessionStats {
    pub rounds: u64,
    pub control_rounds: u64,
    pub message_rounds: u64,
    pub detections: u64,
    /// Detections over control rounds; absent without control rounds.
    pub detection_rate: Option<f64>,
    pub detection_standard_error: Option<f64>,
    /// Message rounds where Bob's decoded `(i, j)` was wrong.
    pub alice_to_bob_pair_errors: u64,
    /// Message rounds where Alice's decoded `(k, l)` was wrong.
    pub bob_to_alice_pair_errors: u64,
    /// Wrong bits out of `4 * message_rounds`.
    pub bit_errors: u64,
    pub bit_error_rate: Option<f64>,
    /// `(1 - d̂)^c` over the `c` control rounds.
    pub survival_estimate: Option<f64>,
    pub seed: u64,
    pub bit_seed: u64,
    pub generator_id: &'static str,
}

#[derive(Debug, Clone, Copy, Default)]
struct Tally {
    control: u64,
    detections: u64,
    a2b_errors: u64,
    b2a_errors: u64,
    bit_errors: u64,
    invariant_failures: u64,
}

impl Add for Tally {
    type Output = Tally;

    fn add(self, o: Tally) -> Tally {
        Tally {
            control: self.control + o.control,
            detections: self.detections + o.detections,
            a2b_errors: self.a2b_errors + o.a2b_errors,
            b2a_errors: self.b2a_errors + o.b2a_errors,
            bit_errors: self.bit_errors + o.bit_errors,
            invariant_failures: self.invariant_failures + o.invariant_failures,
        }
    }
}

fn bit_flips(x: PauliCode, y: PauliCode) -> u64 {
    let d = x.xor(y);
    (d.a() + d.b()) as u64
}

/// Draws round `index`'s bits and mode from the bit stream.
pub(crate) fn draw_round_inputs(
    bit_source: &RandomSource,
    index: u64,
    control_fraction: f64,
) -> (PauliCode, PauliCode, RoundMode) {
    let mut r = bit_source.child(index);
    let alice = PauliCode::new(r.bit(), r.bit());
    let bob = PauliCode::new(r.bit(), r.bit());
    let mode = if r.uniform() < control_fraction {
        RoundMode::Control
    } else {
        RoundMode::Message
    };
    (alice, bob, mode)
}

/// Runs `n_rounds` independent rounds. Round `r` takes its bits and mode from
/// `bit_source.child(r)` and its quantum randomness from `rand.child(r)`, so
/// results do not depend on scheduling.
pub fn run_session(
    n_rounds: u64,
    control_fraction: f64,
    bit_source: &RandomSource,
    eve: EveStrategy,
    conventions: Conventions,
    rand: &RandomSource,
) -> Result<SessionStats> {
    if n_rounds == 0 {
        return Err(Error::Usage("a session needs at least one round".into()));
    }
    if !(0.0..=1.0).contains(&control_fraction) {
        return Err(Error::Usage(format!(
            "control fraction {control_fraction} outside [0, 1]"
        )));
    }

    let tally = (0..n_rounds)
        .into_par_iter()
        .map(|index| {
            let (alice_bits, bob_bits, mode) =
                draw_round_inputs(bit_source, index, control_fraction);
            let config = RoundConfig {
                bob_bits,
                alice_bits,
                mode,
                conventions,
            };
            let t = run_round(config, eve, &mut rand.child(index));
            let mut tally = Tally {
                invariant_failures: u64::from(t.validate().is_err()),
                ..Tally::default()
            };
            match mode {
                RoundMode::Control => {
                    tally.control = 1;
                    tally.detections = u64::from(t.detected == Some(true));
                }
                RoundMode::Message => {
                    let got_alice = t.decoded_alice_bits.unwrap_or(alice_bits);
                    let got_bob = t.decoded_bob_bits.unwrap_or(bob_bits);
                    tally.a2b_errors = u64::from(got_alice != alice_bits);
                    tally.b2a_errors = u64::from(got_bob != bob_bits);
                    tally.bit_errors =
                        bit_flips(got_alice, alice_bits) + bit_flips(got_bob, bob_bits);
                }
            }
            tally
        })
        .reduce(Tally::default, |a, b| a + b);

    if tally.invariant_failures > 0 {
        return Err(Error::Invariant(format!(
            "{} rounds produced non-normalized snapshots",
            tally.invariant_failures
        )));
    }

    let message_rounds = n_rounds - tally.control;
    let detection_rate =
        (tally.control > 0).then(|| tally.detections as f64 / tally.control as f64);
    let detection_standard_error =
        detection_rate.map(|d| (d * (1.0 - d) / tally.control as f64).sqrt());
    let survival_estimate = detection_rate.map(|d| (1.0 - d).powf(tally.control as f64));
    let bit_error_rate =
        (message_rounds > 0).then(|| tally.bit_errors as f64 / (4 * message_rounds) as f64);

    Ok(SessionStats {
        rounds: n_rounds,
        control_rounds: tally.control,
        message_rounds,
        detections: tally.detections,
        detection_rate,
        detection_standard_error,
        alice_to_bob_pair_errors: tally.a2b_errors,
        bob_to_alice_pair_errors: tally.b2a_errors,
        bit_errors: tally.bit_errors,
        bit_error_rate,
        survival_estimate,
        seed: rand.seed(),
        bit_seed: bit_source.seed(),
        generator_id: GENERATOR_ID,
    })
}
