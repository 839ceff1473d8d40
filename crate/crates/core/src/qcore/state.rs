use std::fmt;

use num_complex::Complex64;
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use super::pauli::{pauli_matrix, PauliCode};
use super::{ALGEBRA_TOL, CANONICAL_TOL};
use crate::{Error, Result};

pub type Amplitude = Complex64;

/// Pure state of the (home, travel) qubit pair.
///
/// `amp[2*h + t]` is the amplitude of `|h t>`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TwoQubitState {
    amp: [Amplitude; 4],
}

impl TwoQubitState {
    /// Builds a state, checking finiteness and normalization.
    pub fn new(amp: [Amplitude; 4]) -> Result<Self> {
        if amp.iter().any(|a| !a.re.is_finite() || !a.im.is_finite()) {
            return Err(Error::Invariant("non-finite amplitude".into()));
        }
        let state = TwoQubitState { amp };
        let norm = state.norm_sqr();
        if (norm - 1.0).abs() > ALGEBRA_TOL {
            return Err(Error::Invariant(format!(
                "state norm² = {norm}, expected 1"
            )));
        }
        Ok(state)
    }

    /// Unchecked constructor for amplitudes already known to be normalized.
    pub(crate) fn from_amplitudes(amp: [Amplitude; 4]) -> Self {
        TwoQubitState { amp }
    }

    /// Computational basis state `|h t>`.
    pub fn basis(h: u8, t: u8) -> Self {
        assert!(h <= 1 && t <= 1, "basis labels must be bits");
        let mut amp = [Complex64::new(0.0, 0.0); 4];
        amp[(2 * h + t) as usize] = Complex64::new(1.0, 0.0);
        TwoQubitState { amp }
    }

    pub fn amplitudes(&self) -> &[Amplitude; 4] {
        &self.amp
    }

    pub fn amplitude(&self, h: u8, t: u8) -> Amplitude {
        self.amp[(2 * h + t) as usize]
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amp.iter().map(|a| a.norm_sqr()).sum()
    }

    pub fn is_normalized(&self, tol: f64) -> bool {
        (self.norm_sqr() - 1.0).abs() <= tol
    }

    /// `<self|other>`.
    pub fn inner(&self, other: &TwoQubitState) -> Complex64 {
        self.amp
            .iter()
            .zip(other.amp.iter())
            .map(|(a, b)| a.conj() * b)
            .sum()
    }

    /// `(I ⊗ C_code)|self>`: the operator acts on the travel qubit only.
    pub fn apply_pauli_t(&self, code: PauliCode) -> TwoQubitState {
        let m = pauli_matrix(code);
        let mut out = [Complex64::new(0.0, 0.0); 4];
        for h in 0..2 {
            for row in 0..2 {
                out[2 * h + row] = m[row][0] * self.amp[2 * h] + m[row][1] * self.amp[2 * h + 1];
            }
        }
        TwoQubitState { amp: out }
    }

    pub fn scaled(&self, c: Complex64) -> TwoQubitState {
        TwoQubitState {
            amp: self.amp.map(|a| a * c),
        }
    }

    /// Rotates the first amplitude with magnitude above `tol` onto the
    /// positive real axis.
    pub fn canonicalize(&self, tol: f64) -> TwoQubitState {
        match self.amp.iter().find(|a| a.norm() > tol) {
            Some(lead) => self.scaled(lead.conj() / lead.norm()),
            None => *self,
        }
    }
}

/// True iff the states agree up to a unit scalar, within `tol` per amplitude.
pub fn equal_up_to_global_phase(s1: &TwoQubitState, s2: &TwoQubitState, tol: f64) -> bool {
    let canon_tol = tol.max(CANONICAL_TOL);
    let a = s1.canonicalize(canon_tol);
    let b = s2.canonicalize(canon_tol);
    a.amp
        .iter()
        .zip(b.amp.iter())
        .all(|(x, y)| (x - y).norm() <= tol)
}

impl Serialize for TwoQubitState {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(4))?;
        for a in &self.amp {
            seq.serialize_element(&[a.re, a.im])?;
        }
        seq.end()
    }
}

impl fmt::Display for TwoQubitState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let labels = ["00", "01", "10", "11"];
        let mut first = true;
        for (a, label) in self.amp.iter().zip(labels) {
            if a.norm() <= ALGEBRA_TOL {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write!(f, "({:.6}{:+.6}i)|{label}>", a.re, a.im)?;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}
