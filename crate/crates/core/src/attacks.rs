//! Eve's strategies and their action at the two channel taps.
//!
//! The travel qubit passes Eve twice per round: once on the way to Alice
//! (`BtoA`) and once on the way back (`AtoB`). A strategy acts only at the
//! tap matching its route. No strategy is ever told whether the round is a
//! message or a control round; [`apply_eve`] takes no mode argument.

use std::fmt;

use serde::Serialize;

use crate::qcore::{measure_t_computational, PauliCode, RandomSource, TwoQubitState};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Route {
    BtoA,
    AtoB,
}

impl Route {
    pub fn short_name(self) -> &'static str {
        match self {
            Route::BtoA => "b2a",
            Route::AtoB => "a2b",
        }
    }
}

/// How a disturbing Eve picks the operator `C_{u,v}` each round.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Selection {
    Fixed(PauliCode),
    UniformAll4,
    /// Uniform over `C_{0,0}` and `C_{1,1}`.
    CoinIZ,
}

impl Selection {
    /// The equiprobable operator choices.
    pub fn choices(self) -> Vec<PauliCode> {
        match self {
            Selection::Fixed(code) => vec![code],
            Selection::UniformAll4 => PauliCode::all().to_vec(),
            Selection::CoinIZ => vec![PauliCode::new(0, 0), PauliCode::new(1, 1)],
        }
    }

    fn draw(self, rand: &mut RandomSource) -> PauliCode {
        let choices = self.choices();
        choices[rand.below_pow2(choices.len() as u64) as usize]
    }
}

impl fmt::Display for Selection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Selection::Fixed(code) => write!(f, "fixed{code}"),
            Selection::UniformAll4 => f.write_str("uniform4"),
            Selection::CoinIZ => f.write_str("coin-iz"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum EveStrategy {
    Passive,
    InterceptMeasure { route: Route },
    DisturbPauli { route: Route, selection: Selection },
}

impl EveStrategy {
    pub fn intercept(route: Route) -> EveStrategy {
        EveStrategy::InterceptMeasure { route }
    }

    /// Disturbance on the return leg.
    pub fn disturb(selection: Selection) -> EveStrategy {
        EveStrategy::DisturbPauli {
            route: Route::AtoB,
            selection,
        }
    }

    pub fn route(self) -> Option<Route> {
        match self {
            EveStrategy::Passive => None,
            EveStrategy::InterceptMeasure { route } | EveStrategy::DisturbPauli { route, .. } => {
                Some(route)
            }
        }
    }
}

impl fmt::Display for EveStrategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EveStrategy::Passive => f.write_str("passive"),
            EveStrategy::InterceptMeasure { route } => {
                write!(f, "intercept({})", route.short_name())
            }
            EveStrategy::DisturbPauli { route, selection } => {
                write!(f, "disturb({},{selection})", route.short_name())
            }
        }
    }
}

/// Branch (a) leaves the home qubit in `|0>`, branch (b) in `|1>`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum EveBranch {
    A,
    B,
}

impl EveBranch {
    pub fn from_home_bit(h: u8) -> EveBranch {
        if h == 0 {
            EveBranch::A
        } else {
            EveBranch::B
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            EveBranch::A => "a",
            EveBranch::B => "b",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum EveRecord {
    None,
    MeasuredBranch { branch: EveBranch, t_outcome: u8 },
    Applied { code: PauliCode },
}

impl fmt::Display for EveRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EveRecord::None => f.write_str("none"),
            EveRecord::MeasuredBranch { branch, t_outcome } => {
                write!(f, "branch {} (t={t_outcome})", branch.name())
            }
            EveRecord::Applied { code } => write!(f, "applied C{code}"),
        }
    }
}

/// Home-qubit value of a state collapsed by a travel-qubit measurement.
/// Reachable states are always maximally entangled, so after the collapse
/// the home qubit is sharp; the heavier side is taken otherwise.
pub(crate) fn home_bit(state: &TwoQubitState) -> u8 {
    let a = state.amplitudes();
    let p0 = a[0].norm_sqr() + a[1].norm_sqr();
    let p1 = a[2].norm_sqr() + a[3].norm_sqr();
    u8::from(p1 > p0)
}

/// Eve's action at the `route` tap. Strategies whose route differs are
/// no-ops that return [`EveRecord::None`].
pub fn apply_eve(
    strategy: EveStrategy,
    route: Route,
    state: &TwoQubitState,
    rand: &mut RandomSource,
) -> (TwoQubitState, EveRecord) {
    if strategy.route() != Some(route) {
        return (*state, EveRecord::None);
    }
    match strategy {
        EveStrategy::Passive => (*state, EveRecord::None),
        EveStrategy::InterceptMeasure { .. } => {
            let m = measure_t_computational(state, rand);
            let branch = EveBranch::from_home_bit(home_bit(&m.collapsed));
            (
                m.collapsed,
                EveRecord::MeasuredBranch {
                    branch,
                    t_outcome: m.outcome,
                },
            )
        }
        EveStrategy::DisturbPauli { selection, .. } => {
            let code = selection.draw(rand);
            (state.apply_pauli_t(code), EveRecord::Applied { code })
        }
    }
}
