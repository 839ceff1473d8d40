//! The encoding operators `C_{a,b}` and their exact phase algebra.
//!
//! `C_{0,0}` is the identity, `C_{0,1}` is σx and `C_{1,1}` is σz. `C_{1,0}` is
//! **minus** the textbook σy, i.e. `[[0, i], [-i, 0]]`, so that
//! `C_{1,0}|1> = +i|0>` and `C_{1,0}|0> = -i|1>`. Only global phases differ
//! from the textbook choice, so no probability depends on it.

use std::fmt;
use std::ops::Mul;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

pub type Matrix2 = [[Complex64; 2]; 2];

/// A fourth root of unity `i^n`, stored as the exponent `n mod 4`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Phase(u8);

impl Phase {
    pub const ONE: Phase = Phase(0);
    pub const I: Phase = Phase(1);
    pub const MINUS_ONE: Phase = Phase(2);
    pub const MINUS_I: Phase = Phase(3);

    /// `i^n`.
    pub fn i_pow(n: u32) -> Phase {
        Phase((n % 4) as u8)
    }

    pub fn exponent(self) -> u8 {
        self.0
    }

    pub fn conj(self) -> Phase {
        Phase((4 - self.0) % 4)
    }

    pub fn to_complex(self) -> Complex64 {
        match self.0 {
            0 => Complex64::new(1.0, 0.0),
            1 => Complex64::new(0.0, 1.0),
            2 => Complex64::new(-1.0, 0.0),
            _ => Complex64::new(0.0, -1.0),
        }
    }

    /// Exact Gaussian-integer value of the phase.
    pub fn to_gaussian(self) -> num_complex::Complex<i64> {
        match self.0 {
            0 => num_complex::Complex::new(1, 0),
            1 => num_complex::Complex::new(0, 1),
            2 => num_complex::Complex::new(-1, 0),
            _ => num_complex::Complex::new(0, -1),
        }
    }
}

impl Mul for Phase {
    type Output = Phase;

    fn mul(self, rhs: Phase) -> Phase {
        Phase((self.0 + rhs.0) % 4)
    }
}

impl fmt::Display for Phase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self.0 {
            0 => "+1",
            1 => "+i",
            2 => "-1",
            _ => "-i",
        })
    }
}

/// Two-bit operator index `(a, b)` naming `C_{a,b}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PauliCode {
    a: u8,
    b: u8,
}

impl PauliCode {
    pub const IDENTITY: PauliCode = PauliCode { a: 0, b: 0 };

    /// Panics if either argument is not a bit.
    pub fn new(a: u8, b: u8) -> PauliCode {
        assert!(
            a <= 1 && b <= 1,
            "Pauli code bits must be 0 or 1, got ({a},{b})"
        );
        PauliCode { a, b }
    }

    /// All four codes in the order (0,0), (0,1), (1,0), (1,1).
    pub fn all() -> [PauliCode; 4] {
        [
            PauliCode::new(0, 0),
            PauliCode::new(0, 1),
            PauliCode::new(1, 0),
            PauliCode::new(1, 1),
        ]
    }

    pub fn a(self) -> u8 {
        self.a
    }

    pub fn b(self) -> u8 {
        self.b
    }

    /// Component-wise XOR.
    pub fn xor(self, other: PauliCode) -> PauliCode {
        PauliCode::new(self.a ^ other.a, self.b ^ other.b)
    }

    /// Index `2a + b` into four-element tables.
    pub fn index(self) -> usize {
        (2 * self.a + self.b) as usize
    }
}

impl fmt::Display for PauliCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.a, self.b)
    }
}

/// `phase · C_{code}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PhasedPauli {
    pub code: PauliCode,
    pub phase: Phase,
}

pub fn pauli_matrix(code: PauliCode) -> Matrix2 {
    let z = Complex64::new(0.0, 0.0);
    let one = Complex64::new(1.0, 0.0);
    let i = Complex64::new(0.0, 1.0);
    match (code.a(), code.b()) {
        (0, 0) => [[one, z], [z, one]],
        (0, 1) => [[z, one], [one, z]],
        (1, 0) => [[z, i], [-i, z]],
        _ => [[one, z], [z, -one]],
    }
}

/// `C_{a,b}|bit> = phase · |result_bit>`, written with the Kronecker-delta
/// structure directly: the bit is kept iff `a ⊕ b = 0`.
pub fn pauli_action_closed_form(code: PauliCode, basis_bit: u8) -> (Phase, u8) {
    assert!(basis_bit <= 1, "basis bit must be 0 or 1");
    let a = code.a() as u32;
    let flips = code.a() ^ code.b() == 1;
    let phase = match (basis_bit, flips) {
        (1, false) => Phase::i_pow(2 * a),
        (1, true) => Phase::i_pow(a),
        (_, false) => Phase::ONE,
        // (-i)^a
        (_, true) => Phase::i_pow(3 * a),
    };
    let result = if flips { 1 - basis_bit } else { basis_bit };
    (phase, result)
}

/// `C_{first} · C_{second} = phase · C_{first ⊕ second}`.
pub fn pauli_compose(first: PauliCode, second: PauliCode) -> PhasedPauli {
    let code = first.xor(second);
    // Every C_{a,b} maps |0> to a single basis state, so comparing images of
    // |0> fixes the scalar.
    let (p_second, mid) = pauli_action_closed_form(second, 0);
    let (p_first, out) = pauli_action_closed_form(first, mid);
    let (p_code, out_code) = pauli_action_closed_form(code, 0);
    debug_assert_eq!(out, out_code);
    PhasedPauli {
        code,
        phase: p_first * p_second * p_code.conj(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn matmul(x: &Matrix2, y: &Matrix2) -> Matrix2 {
        let mut out = [[c(0.0, 0.0); 2]; 2];
        for r in 0..2 {
            for col in 0..2 {
                out[r][col] = x[r][0] * y[0][col] + x[r][1] * y[1][col];
            }
        }
        out
    }

    #[test]
    fn matrices_match_encoding_table() {
        let z = c(0.0, 0.0);
        assert_eq!(
            pauli_matrix(PauliCode::new(0, 0)),
            [[c(1.0, 0.0), z], [z, c(1.0, 0.0)]]
        );
        assert_eq!(
            pauli_matrix(PauliCode::new(0, 1)),
            [[z, c(1.0, 0.0)], [c(1.0, 0.0), z]]
        );
        assert_eq!(
            pauli_matrix(PauliCode::new(1, 0)),
            [[z, c(0.0, 1.0)], [c(0.0, -1.0), z]]
        );
        assert_eq!(
            pauli_matrix(PauliCode::new(1, 1)),
            [[c(1.0, 0.0), z], [z, c(-1.0, 0.0)]]
        );
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(
            pauli_action_closed_form(PauliCode::new(0, 0), 1),
            (Phase::ONE, 1)
        );
        assert_eq!(
            pauli_action_closed_form(PauliCode::new(1, 0), 1),
            (Phase::I, 0)
        );
        assert_eq!(
            pauli_action_closed_form(PauliCode::new(1, 0), 0),
            (Phase::MINUS_I, 1)
        );
        assert_eq!(
            pauli_action_closed_form(PauliCode::new(1, 1), 1),
            (Phase::MINUS_ONE, 1)
        );
    }

    #[test]
    fn closed_form_agrees_with_matrix_columns() {
        for code in PauliCode::all() {
            let m = pauli_matrix(code);
            for bit in 0..2u8 {
                let (phase, out) = pauli_action_closed_form(code, bit);
                let column = [m[0][bit as usize], m[1][bit as usize]];
                for row in 0..2u8 {
                    let want = if row == out {
                        phase.to_complex()
                    } else {
                        c(0.0, 0.0)
                    };
                    assert_eq!(
                        column[row as usize], want,
                        "code {code} bit {bit} row {row}"
                    );
                }
            }
        }
    }

    #[test]
    fn composition_examples() {
        for code in PauliCode::all() {
            assert_eq!(
                pauli_compose(PauliCode::IDENTITY, code),
                PhasedPauli {
                    code,
                    phase: Phase::ONE
                }
            );
        }
        assert_eq!(
            pauli_compose(PauliCode::new(1, 1), PauliCode::new(1, 1)),
            PhasedPauli {
                code: PauliCode::IDENTITY,
                phase: Phase::ONE
            }
        );
        assert_eq!(
            pauli_compose(PauliCode::new(0, 1), PauliCode::new(1, 1)),
            PhasedPauli {
                code: PauliCode::new(1, 0),
                phase: Phase::I
            }
        );
    }

    #[test]
    fn composition_law_matches_matrix_product() {
        for first in PauliCode::all() {
            for second in PauliCode::all() {
                let pp = pauli_compose(first, second);
                let product = matmul(&pauli_matrix(first), &pauli_matrix(second));
                let target = pauli_matrix(pp.code);
                for r in 0..2 {
                    for col in 0..2 {
                        assert_eq!(product[r][col], pp.phase.to_complex() * target[r][col]);
                    }
                }
            }
        }
    }

    #[test]
    fn matrices_are_unitary() {
        for code in PauliCode::all() {
            let m = pauli_matrix(code);
            let mut dagger = m;
            for r in 0..2 {
                for col in 0..2 {
                    dagger[r][col] = m[col][r].conj();
                }
            }
            let p = matmul(&m, &dagger);
            assert_eq!(p, pauli_matrix(PauliCode::IDENTITY));
        }
    }

    #[test]
    #[should_panic]
    fn rejects_non_bits() {
        let _ = PauliCode::new(2, 0);
    }

    #[test]
    fn phase_arithmetic() {
        assert_eq!(Phase::I * Phase::I, Phase::MINUS_ONE);
        assert_eq!(Phase::MINUS_I.conj(), Phase::I);
        assert_eq!(Phase::i_pow(7), Phase::MINUS_I);
        assert_eq!(Phase::I.to_string(), "+i");
    }
}
