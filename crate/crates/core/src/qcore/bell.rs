//! Bell states under the two labeling conventions in use.
//!
//! *OperatorEncoding* names the state reached by applying `C_{k,l}` to the
//! travel qubit of the EPR pair `(|01> + |10>)/√2`:
//! `Ψ_{k,l} = (|0> C_{k,l}|1> + |1> C_{k,l}|0>)/√2`, phases included.
//!
//! *ParityPhase* names states by the computational-basis decomposition
//! `|μν> = (Ψ_{0,μ⊕ν} + (-1)^μ Ψ_{1,μ⊕ν})/√2`, which inverts to
//! `Ψ_{k,c} = (|0 c> + (-1)^k |1 (1⊕c)>)/√2`.
//!
//! The two schemes attach the same index pair to different physical states.
//! [`label_map`] converts between them: `(k, l) ↦ (k, 1⊕k⊕l)` in either
//! direction.

use std::f64::consts::FRAC_1_SQRT_2;
use std::fmt;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::pauli::{pauli_action_closed_form, PauliCode};
use super::state::TwoQubitState;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum LabelingConvention {
    OperatorEncoding,
    ParityPhase,
}

impl LabelingConvention {
    pub const ALL: [LabelingConvention; 2] = [
        LabelingConvention::OperatorEncoding,
        LabelingConvention::ParityPhase,
    ];

    pub fn short_name(self) -> &'static str {
        match self {
            LabelingConvention::OperatorEncoding => "oe",
            LabelingConvention::ParityPhase => "pp",
        }
    }

    pub fn other(self) -> LabelingConvention {
        match self {
            LabelingConvention::OperatorEncoding => LabelingConvention::ParityPhase,
            LabelingConvention::ParityPhase => LabelingConvention::OperatorEncoding,
        }
    }

    /// The four labels of this convention in index order.
    pub fn labels(self) -> [BellLabel; 4] {
        PauliCode::all().map(|c| BellLabel::new(c.a(), c.b(), self))
    }
}

impl fmt::Display for LabelingConvention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.short_name())
    }
}

/// A Bell-state name `Ψ_{k,l}` tied to its convention.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BellLabel {
    k: u8,
    l: u8,
    convention: LabelingConvention,
}

impl BellLabel {
    pub fn new(k: u8, l: u8, convention: LabelingConvention) -> BellLabel {
        assert!(
            k <= 1 && l <= 1,
            "Bell label bits must be 0 or 1, got ({k},{l})"
        );
        BellLabel { k, l, convention }
    }

    pub fn from_code(code: PauliCode, convention: LabelingConvention) -> BellLabel {
        BellLabel::new(code.a(), code.b(), convention)
    }

    pub fn k(self) -> u8 {
        self.k
    }

    pub fn l(self) -> u8 {
        self.l
    }

    pub fn convention(self) -> LabelingConvention {
        self.convention
    }

    /// The raw index pair as a code, ignoring the convention.
    pub fn code(self) -> PauliCode {
        PauliCode::new(self.k, self.l)
    }

    pub fn index(self) -> usize {
        (2 * self.k + self.l) as usize
    }

    /// Same-convention equality. Panics when the conventions differ.
    pub fn matches(self, other: BellLabel) -> bool {
        assert_eq!(
            self.convention, other.convention,
            "Bell labels from different conventions are not comparable"
        );
        self.k == other.k && self.l == other.l
    }

    /// Index-pair equality regardless of convention.
    pub fn same_indices(self, other: BellLabel) -> bool {
        self.k == other.k && self.l == other.l
    }

    /// Re-expresses this label in `target`, mapping only when it differs.
    pub fn in_convention(self, target: LabelingConvention) -> BellLabel {
        if self.convention == target {
            self
        } else {
            label_map(self)
        }
    }
}

impl fmt::Display for BellLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({},{})", self.convention, self.k, self.l)
    }
}

pub fn bell_state(convention: LabelingConvention, k: u8, l: u8) -> TwoQubitState {
    assert!(k <= 1 && l <= 1, "Bell label bits must be 0 or 1");
    let s = Complex64::new(FRAC_1_SQRT_2, 0.0);
    let mut amp = [Complex64::new(0.0, 0.0); 4];
    match convention {
        LabelingConvention::OperatorEncoding => {
            let code = PauliCode::new(k, l);
            // |0>_h C|1>_t + |1>_h C|0>_t
            for (h, t_in) in [(0u8, 1u8), (1, 0)] {
                let (phase, t_out) = pauli_action_closed_form(code, t_in);
                amp[(2 * h + t_out) as usize] += phase.to_complex() * s;
            }
        }
        LabelingConvention::ParityPhase => {
            let sign = if k == 0 { 1.0 } else { -1.0 };
            amp[l as usize] = s;
            amp[(2 + (1 - l)) as usize] = s * sign;
        }
    }
    TwoQubitState::from_amplitudes(amp)
}

/// `(k, l) ↦ (k, 1⊕k⊕l)` with the convention flipped. Involutive.
pub fn label_map(label: BellLabel) -> BellLabel {
    BellLabel::new(label.k, 1 ^ label.k ^ label.l, label.convention.other())
}

/// Coefficients `<Ψ_{k,l}|state>` for the four Bell states of one convention.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BellDecomposition {
    pub convention: LabelingConvention,
    coeffs: [Complex64; 4],
}

impl BellDecomposition {
    pub fn get(&self, k: u8, l: u8) -> Complex64 {
        self.coeffs[(2 * k + l) as usize]
    }

    pub fn coefficient(&self, label: BellLabel) -> Complex64 {
        assert_eq!(label.convention, self.convention);
        self.coeffs[label.index()]
    }

    pub fn iter(&self) -> impl Iterator<Item = (BellLabel, Complex64)> + '_ {
        self.convention
            .labels()
            .into_iter()
            .zip(self.coeffs.iter().copied())
    }

    /// `Σ c_{k,l} Ψ_{k,l}`.
    pub fn recompose(&self) -> TwoQubitState {
        let mut amp = [Complex64::new(0.0, 0.0); 4];
        for (label, c) in self.iter() {
            let psi = bell_state(self.convention, label.k, label.l);
            for (out, a) in amp.iter_mut().zip(psi.amplitudes()) {
                *out += c * a;
            }
        }
        TwoQubitState::from_amplitudes(amp)
    }
}

pub fn bell_decompose(state: &TwoQubitState, convention: LabelingConvention) -> BellDecomposition {
    let coeffs = convention
        .labels()
        .map(|label| bell_state(convention, label.k, label.l).inner(state));
    BellDecomposition { convention, coeffs }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qcore::ALGEBRA_TOL;
    use LabelingConvention::{OperatorEncoding as OE, ParityPhase as PP};

    const H: f64 = FRAC_1_SQRT_2;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn assert_amps(s: &TwoQubitState, want: [Complex64; 4]) {
        for (x, y) in s.amplitudes().iter().zip(want) {
            assert!((x - y).norm() <= ALGEBRA_TOL, "{s} vs {want:?}");
        }
    }

    #[test]
    fn bell_state_examples() {
        let z = c(0.0, 0.0);
        assert_amps(&bell_state(OE, 0, 0), [z, c(H, 0.0), c(H, 0.0), z]);
        assert_amps(&bell_state(OE, 1, 0), [c(0.0, H), z, z, c(0.0, -H)]);
        assert_amps(&bell_state(PP, 0, 1), [z, c(H, 0.0), c(H, 0.0), z]);
    }

    #[test]
    fn bell_families_are_orthonormal() {
        for conv in LabelingConvention::ALL {
            for x in conv.labels() {
                for y in conv.labels() {
                    let ip = bell_state(conv, x.k, x.l).inner(&bell_state(conv, y.k, y.l));
                    let want = if x == y { 1.0 } else { 0.0 };
                    assert!((ip - c(want, 0.0)).norm() <= ALGEBRA_TOL);
                }
            }
        }
    }

    #[test]
    fn parity_phase_inverts_basis_decomposition() {
        for mu in 0..2u8 {
            for nu in 0..2u8 {
                let d = bell_decompose(&TwoQubitState::basis(mu, nu), PP);
                let sign = if mu == 0 { 1.0 } else { -1.0 };
                for (label, coeff) in d.iter() {
                    let want = if label.l != mu ^ nu {
                        0.0
                    } else if label.k == 0 {
                        H
                    } else {
                        sign * H
                    };
                    assert!(
                        (coeff - c(want, 0.0)).norm() <= ALGEBRA_TOL,
                        "|{mu}{nu}> at {label}"
                    );
                }
            }
        }
    }

    #[test]
    fn decompose_examples() {
        let d = bell_decompose(&bell_state(OE, 0, 0), OE);
        assert!((d.get(0, 0) - c(1.0, 0.0)).norm() <= ALGEBRA_TOL);
        for (k, l) in [(0, 1), (1, 0), (1, 1)] {
            assert!(d.get(k, l).norm() <= ALGEBRA_TOL);
        }

        let d = bell_decompose(&TwoQubitState::basis(0, 0), OE);
        assert!((d.get(0, 1) - c(H, 0.0)).norm() <= ALGEBRA_TOL);
        assert!((d.get(1, 0) - c(0.0, -H)).norm() <= ALGEBRA_TOL);
        assert!(d.get(0, 0).norm() <= ALGEBRA_TOL);
        assert!(d.get(1, 1).norm() <= ALGEBRA_TOL);
    }

    #[test]
    fn label_map_examples() {
        assert_eq!(
            label_map(BellLabel::new(0, 0, OE)),
            BellLabel::new(0, 1, PP)
        );
        assert_eq!(
            label_map(BellLabel::new(1, 1, OE)),
            BellLabel::new(1, 1, PP)
        );
        for conv in LabelingConvention::ALL {
            for label in conv.labels() {
                assert_eq!(label_map(label_map(label)), label);
            }
        }
    }

    #[test]
    fn label_map_names_the_same_ray() {
        for conv in LabelingConvention::ALL {
            for from in conv.labels() {
                let mapped = label_map(from);
                let psi = bell_state(conv, from.k, from.l);
                for to in conv.other().labels() {
                    let overlap = psi.inner(&bell_state(to.convention, to.k, to.l)).norm();
                    let want = if to == mapped { 1.0 } else { 0.0 };
                    assert!((overlap - want).abs() <= ALGEBRA_TOL, "{from} vs {to}");
                }
            }
        }
    }

    #[test]
    #[should_panic]
    fn cross_convention_match_is_a_contract_violation() {
        BellLabel::new(0, 0, OE).matches(BellLabel::new(0, 0, PP));
    }
}
