//! Exhaustive enumeration of detection and message-error probabilities.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use super::exact::ExactVector;
use super::rational::Rational;
use crate::attacks::{EveBranch, EveStrategy, Route};
use crate::protocol::{expected_outcome, is_detected, Conventions};
use crate::qcore::{BellLabel, LabelingConvention, PauliCode};

/// Which discrete Eve branch a case was conditioned on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum CaseBranch {
    None,
    A,
    B,
    /// Disturbance with `C_{u,v}`.
    Applied(PauliCode),
}

impl CaseBranch {
    pub fn name(self) -> String {
        match self {
            CaseBranch::None => "none".into(),
            CaseBranch::A => "a".into(),
            CaseBranch::B => "b".into(),
            CaseBranch::Applied(code) => format!("uv{}{}", code.a(), code.b()),
        }
    }
}

impl From<EveBranch> for CaseBranch {
    fn from(b: EveBranch) -> Self {
        match b {
            EveBranch::A => CaseBranch::A,
            EveBranch::B => CaseBranch::B,
        }
    }
}

/// `m = i⊕k`, `n = j⊕l`, `J = m⊕n`, plus the Eve branch.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CaseDescriptor {
    pub eve_branch: CaseBranch,
    pub m: u8,
    pub n: u8,
    #[serde(rename = "J")]
    pub parity: u8,
}

impl CaseDescriptor {
    pub fn new(eve_branch: CaseBranch, m: u8, n: u8) -> CaseDescriptor {
        CaseDescriptor {
            eve_branch,
            m,
            n,
            parity: m ^ n,
        }
    }

    /// Roman numeral of the `(m, n)` case: i=(0,0), ii=(0,1), iii=(1,0), iv=(1,1).
    pub fn numeral(self) -> &'static str {
        ["i", "ii", "iii", "iv"][(2 * self.m + self.n) as usize]
    }
}

impl fmt::Display for CaseDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.eve_branch.name(), self.numeral())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct DetectionReport {
    /// Detection probability conditioned on the case and branch.
    pub per_case: BTreeMap<CaseDescriptor, Rational>,
    /// Overall detection probability, uniform over `(i, j, k, l)`.
    pub average: Rational,
    pub conventions: Conventions,
    pub attack: EveStrategy,
}

impl DetectionReport {
    pub fn get(&self, branch: CaseBranch, m: u8, n: u8) -> Option<Rational> {
        self.per_case
            .get(&CaseDescriptor::new(branch, m, n))
            .copied()
    }

    pub fn branches(&self) -> Vec<CaseBranch> {
        let mut out: Vec<CaseBranch> = self.per_case.keys().map(|c| c.eve_branch).collect();
        out.dedup();
        out
    }

    /// Unweighted mean of the four cases of `branch`.
    pub fn branch_average(&self, branch: CaseBranch) -> Option<Rational> {
        let values: Vec<Rational> = self
            .per_case
            .iter()
            .filter(|(c, _)| c.eve_branch == branch)
            .map(|(_, v)| *v)
            .collect();
        (values.len() == 4)
            .then(|| values.into_iter().sum::<Rational>() / Rational::from_integer(4))
    }
}

/// One Eve branch of one `(i, j, k, l)` assignment: its probability and the
/// joint probability of each Bell outcome with it.
struct BranchOutcomes {
    branch: CaseBranch,
    probability: Rational,
    outcomes: Vec<(BellLabel, Rational)>,
}

fn tap(
    attack: EveStrategy,
    route: Route,
    v: ExactVector,
) -> Vec<(CaseBranch, Rational, ExactVector)> {
    if attack.route() != Some(route) {
        return vec![(CaseBranch::None, Rational::ONE, v)];
    }
    match attack {
        EveStrategy::Passive => vec![(CaseBranch::None, Rational::ONE, v)],
        EveStrategy::InterceptMeasure { .. } => (0..2u8)
            .map(|bit| v.project_t(bit))
            .filter(|p| !p.is_zero())
            .map(|p| {
                let h = p
                    .home_bit()
                    .expect("travel-qubit projection of a Bell state fixes h");
                (EveBranch::from_home_bit(h).into(), Rational::ONE, p)
            })
            .collect(),
        EveStrategy::DisturbPauli { selection, .. } => {
            let choices = selection.choices();
            let weight = Rational::new(1, choices.len() as i64);
            choices
                .into_iter()
                .map(|code| (CaseBranch::Applied(code), weight, v.apply_pauli_t(code)))
                .collect()
        }
    }
}

fn round_branches(
    attack: EveStrategy,
    alice: PauliCode,
    bob: PauliCode,
    outcome_convention: LabelingConvention,
) -> Vec<BranchOutcomes> {
    let prepared = ExactVector::bell(BellLabel::new(0, 0, LabelingConvention::OperatorEncoding));
    let bob_encoded = prepared.apply_pauli_t(bob);
    let mut out = Vec::new();
    for (b1, w1, v1) in tap(attack, Route::BtoA, bob_encoded) {
        for (b2, w2, v2) in tap(attack, Route::AtoB, v1.apply_pauli_t(alice)) {
            let branch = if b1 == CaseBranch::None { b2 } else { b1 };
            let scale = w1 * w2;
            let outcomes = outcome_convention
                .labels()
                .into_iter()
                .map(|label| (label, scale * v2.overlap_sqr(&ExactVector::bell(label))))
                .collect();
            out.push(BranchOutcomes {
                branch,
                probability: scale * v2.norm_sqr(),
                outcomes,
            });
        }
    }
    out
}

fn all_assignments() -> Vec<[u8; 4]> {
    (0..16u8)
        .map(|x| [x >> 3 & 1, x >> 2 & 1, x >> 1 & 1, x & 1])
        .collect()
}

pub fn enumerate_exact(attack: EveStrategy, conventions: Conventions) -> DetectionReport {
    enumerate_exact_ordered(attack, conventions, &all_assignments())
}

/// [`enumerate_exact`] visiting `(i, j, k, l)` in the given order, which
/// must be a permutation of all sixteen assignments.
pub fn enumerate_exact_ordered(
    attack: EveStrategy,
    conventions: Conventions,
    order: &[[u8; 4]],
) -> DetectionReport {
    let mut sorted = order.to_vec();
    sorted.sort_unstable();
    assert_eq!(
        sorted,
        all_assignments(),
        "order must permute the 16 assignments"
    );

    let weight = Rational::new(1, 16);
    // (branch probability mass, detection mass) per case
    let mut mass: BTreeMap<CaseDescriptor, (Rational, Rational)> = BTreeMap::new();
    let mut average = Rational::ZERO;

    for &[i, j, k, l] in order {
        let expected = expected_outcome(i, j, k, l, conventions.expectation);
        let case = |branch| CaseDescriptor::new(branch, i ^ k, j ^ l);
        let branches = round_branches(
            attack,
            PauliCode::new(i, j),
            PauliCode::new(k, l),
            conventions.outcome,
        );
        for b in branches {
            let detected: Rational = b
                .outcomes
                .iter()
                .filter(|(label, _)| is_detected(*label, expected, conventions.comparison))
                .map(|(_, p)| *p)
                .sum();
            let entry = mass.entry(case(b.branch)).or_default();
            entry.0 = entry.0 + weight * b.probability;
            entry.1 = entry.1 + weight * detected;
            average = average + weight * detected;
        }
    }

    let per_case = mass
        .into_iter()
        .filter(|(_, (w, _))| !w.is_zero())
        .map(|(c, (w, d))| (c, d / w))
        .collect();
    DetectionReport {
        per_case,
        average,
        conventions,
        attack,
    }
}

/// The case table in the published bookkeeping: intercept on the B→A leg,
/// outcomes read in parity-phase labels, expectations in operator-encoding
/// labels, raw index comparison.
pub fn paper_case_table() -> DetectionReport {
    enumerate_exact(
        EveStrategy::intercept(Route::BtoA),
        Conventions::paper_bookkeeping(),
    )
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MessageErrorReport {
    /// P(Bob's decoded `(i, j)` differs from Alice's).
    pub alice_to_bob: Rational,
    /// P(Alice's decoded `(k, l)` differs from Bob's).
    pub bob_to_alice: Rational,
    /// Flip probability of each individual bit, keyed `i`, `j`, `k`, `l`.
    pub per_bit: BTreeMap<&'static str, Rational>,
}

/// Exact message-mode corruption rates with operator-encoding labels.
pub fn message_error_rate(attack: EveStrategy) -> MessageErrorReport {
    let weight = Rational::new(1, 16);
    let mut a2b = Rational::ZERO;
    let mut b2a = Rational::ZERO;
    let mut flips = [Rational::ZERO; 4];
    for [i, j, k, l] in all_assignments() {
        let alice = PauliCode::new(i, j);
        let bob = PauliCode::new(k, l);
        for b in round_branches(attack, alice, bob, LabelingConvention::OperatorEncoding) {
            for (label, p) in b.outcomes {
                let p = weight * p;
                let announced = label.code();
                let got_alice = announced.xor(bob);
                let got_bob = announced.xor(alice);
                if got_alice != alice {
                    a2b = a2b + p;
                }
                if got_bob != bob {
                    b2a = b2a + p;
                }
                let wrong = [
                    got_alice.a() != i,
                    got_alice.b() != j,
                    got_bob.a() != k,
                    got_bob.b() != l,
                ];
                for (f, w) in flips.iter_mut().zip(wrong) {
                    if w {
                        *f = *f + p;
                    }
                }
            }
        }
    }
    MessageErrorReport {
        alice_to_bob: a2b,
        bob_to_alice: b2a,
        per_bit: ["i", "j", "k", "l"].into_iter().zip(flips).collect(),
    }
}
