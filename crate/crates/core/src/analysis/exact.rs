//! Exact two-qubit vectors for the enumeration engine.
//!
//! Every amplitude reachable in the protocol is a Gaussian integer divided by
//! a power of √2, so a vector is stored as four `Complex<i64>` numerators and
//! one shared exponent. Vectors may be unnormalized: after a projection the
//! squared norm *is* the branch probability, and Born weights of later
//! outcomes are joint probabilities with that branch.

use num_complex::Complex;

use super::rational::Rational;
use crate::qcore::{
    pauli_action_closed_form, BellLabel, LabelingConvention, PauliCode, TwoQubitState,
};

type Gaussian = Complex<i64>;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExactVector {
    num: [Gaussian; 4],
    /// Value is `num / √2^root2_exp`.
    root2_exp: u32,
}

impl ExactVector {
    pub fn basis(h: u8, t: u8) -> ExactVector {
        let mut num = [Gaussian::new(0, 0); 4];
        num[(2 * h + t) as usize] = Gaussian::new(1, 0);
        ExactVector { num, root2_exp: 0 }
    }

    pub fn bell(label: BellLabel) -> ExactVector {
        let (k, l) = (label.k(), label.l());
        let mut num = [Gaussian::new(0, 0); 4];
        match label.convention() {
            LabelingConvention::OperatorEncoding => {
                let code = PauliCode::new(k, l);
                for (h, t_in) in [(0u8, 1u8), (1, 0)] {
                    let (phase, t_out) = pauli_action_closed_form(code, t_in);
                    num[(2 * h + t_out) as usize] += phase.to_gaussian();
                }
            }
            LabelingConvention::ParityPhase => {
                num[l as usize] = Gaussian::new(1, 0);
                num[(2 + (1 - l)) as usize] = Gaussian::new(if k == 0 { 1 } else { -1 }, 0);
            }
        }
        ExactVector { num, root2_exp: 1 }
    }

    /// `(I ⊗ C_code)` on the travel qubit.
    pub fn apply_pauli_t(&self, code: PauliCode) -> ExactVector {
        let mut num = [Gaussian::new(0, 0); 4];
        for h in 0..2u8 {
            for t in 0..2u8 {
                let (phase, t_out) = pauli_action_closed_form(code, t);
                num[(2 * h + t_out) as usize] +=
                    phase.to_gaussian() * self.num[(2 * h + t) as usize];
            }
        }
        ExactVector {
            num,
            root2_exp: self.root2_exp,
        }
    }

    /// Projection onto travel-qubit value `bit`, not renormalized.
    pub fn project_t(&self, bit: u8) -> ExactVector {
        let mut num = self.num;
        for h in 0..2 {
            num[2 * h + (1 - bit as usize)] = Gaussian::new(0, 0);
        }
        ExactVector {
            num,
            root2_exp: self.root2_exp,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(|g| g.re == 0 && g.im == 0)
    }

    pub fn norm_sqr(&self) -> Rational {
        let total: i64 = self.num.iter().map(|g| g.norm_sqr()).sum();
        Rational::dyadic(total, self.root2_exp)
    }

    /// `|<other|self>|²`.
    pub fn overlap_sqr(&self, other: &ExactVector) -> Rational {
        let ip: Gaussian = other
            .num
            .iter()
            .zip(self.num.iter())
            .map(|(a, b)| a.conj() * b)
            .sum();
        Rational::dyadic(ip.norm_sqr(), self.root2_exp + other.root2_exp)
    }

    /// Home-qubit value when it is sharp, `None` for entangled vectors.
    pub fn home_bit(&self) -> Option<u8> {
        let zero = |g: &Gaussian| g.re == 0 && g.im == 0;
        let h0 = !(zero(&self.num[0]) && zero(&self.num[1]));
        let h1 = !(zero(&self.num[2]) && zero(&self.num[3]));
        match (h0, h1) {
            (true, false) => Some(0),
            (false, true) => Some(1),
            _ => None,
        }
    }

    /// Floating-point rendering (not renormalized).
    pub fn to_state(&self) -> TwoQubitState {
        let scale = (0.5f64).powf(self.root2_exp as f64 / 2.0);
        TwoQubitState::from_amplitudes(
            self.num
                .map(|g| num_complex::Complex64::new(g.re as f64 * scale, g.im as f64 * scale)),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qcore::{bell_state, ALGEBRA_TOL};
    use LabelingConvention::{OperatorEncoding as OE, ParityPhase as PP};

    #[test]
    fn bell_vectors_match_float_states() {
        for conv in LabelingConvention::ALL {
            for label in conv.labels() {
                let exact = ExactVector::bell(label).to_state();
                let float = bell_state(conv, label.k(), label.l());
                for (a, b) in exact.amplitudes().iter().zip(float.amplitudes()) {
                    assert!((a - b).norm() <= ALGEBRA_TOL);
                }
                assert_eq!(ExactVector::bell(label).norm_sqr(), Rational::ONE);
            }
        }
    }

    #[test]
    fn pauli_action_matches_float_path() {
        let v = ExactVector::bell(BellLabel::new(1, 0, PP));
        for code in PauliCode::all() {
            let exact = v.apply_pauli_t(code).to_state();
            let float = v.to_state().apply_pauli_t(code);
            for (a, b) in exact.amplitudes().iter().zip(float.amplitudes()) {
                assert!((a - b).norm() <= ALGEBRA_TOL);
            }
        }
    }

    #[test]
    fn projection_weights_are_exact_halves() {
        let v = ExactVector::bell(BellLabel::new(0, 0, OE));
        assert_eq!(v.project_t(0).norm_sqr(), Rational::new(1, 2));
        assert_eq!(v.project_t(1).norm_sqr(), Rational::new(1, 2));
        assert_eq!(v.project_t(1).home_bit(), Some(0));
        assert_eq!(v.home_bit(), None);
    }

    #[test]
    fn overlaps_of_basis_states() {
        let v = ExactVector::basis(0, 1);
        assert_eq!(
            v.overlap_sqr(&ExactVector::bell(BellLabel::new(0, 0, OE))),
            Rational::new(1, 2)
        );
        assert_eq!(
            v.overlap_sqr(&ExactVector::bell(BellLabel::new(0, 1, OE))),
            Rational::ZERO
        );
        assert_eq!(
            v.overlap_sqr(&ExactVector::bell(BellLabel::new(1, 1, PP))),
            Rational::new(1, 2)
        );
    }
}
