//! Brute-force detection oracle used to cross-check the exact engine.
//!
//! Written against raw 4x4 matrices and literal Bell-vector tables, sharing
//! no code with the library's state, Bell or enumeration modules.

#![allow(dead_code)]

use std::collections::BTreeMap;

use num_complex::Complex64;

pub type Vec4 = [Complex64; 4];
pub type Mat4 = [[Complex64; 4]; 4];

const S: f64 = std::f64::consts::FRAC_1_SQRT_2;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// Single-qubit operators indexed by 2a+b: I, X, [[0,i],[-i,0]], Z.
fn single(code: usize) -> [[Complex64; 2]; 2] {
    let (o, z, i) = (c(1.0, 0.0), c(0.0, 0.0), c(0.0, 1.0));
    match code {
        0 => [[o, z], [z, o]],
        1 => [[z, o], [o, z]],
        2 => [[z, i], [-i, z]],
        _ => [[o, z], [z, -o]],
    }
}

/// I ⊗ P with basis index 2h + t.
pub fn on_travel(code: usize) -> Mat4 {
    let p = single(code);
    let mut m = [[c(0.0, 0.0); 4]; 4];
    for h in 0..2 {
        for r in 0..2 {
            for col in 0..2 {
                m[2 * h + r][2 * h + col] = p[r][col];
            }
        }
    }
    m
}

pub fn apply(m: &Mat4, v: &Vec4) -> Vec4 {
    let mut out = [c(0.0, 0.0); 4];
    for r in 0..4 {
        for col in 0..4 {
            out[r] += m[r][col] * v[col];
        }
    }
    out
}

pub fn epr() -> Vec4 {
    [c(0.0, 0.0), c(S, 0.0), c(S, 0.0), c(0.0, 0.0)]
}

/// Literal Bell tables, index 2k + l. `pp == false` selects operator encoding.
pub fn bell(pp: bool, idx: usize) -> Vec4 {
    let z = c(0.0, 0.0);
    let oe = [
        [z, c(S, 0.0), c(S, 0.0), z],
        [c(S, 0.0), z, z, c(S, 0.0)],
        [c(0.0, S), z, z, c(0.0, -S)],
        [z, c(-S, 0.0), c(S, 0.0), z],
    ];
    let parity = [
        [c(S, 0.0), z, z, c(S, 0.0)],
        [z, c(S, 0.0), c(S, 0.0), z],
        [c(S, 0.0), z, z, c(-S, 0.0)],
        [z, c(S, 0.0), c(-S, 0.0), z],
    ];
    if pp {
        parity[idx]
    } else {
        oe[idx]
    }
}

/// Same physical state across conventions, by table.
pub const CROSS_LABEL: [usize; 4] = [1, 0, 2, 3];

fn overlap_sqr(a: &Vec4, b: &Vec4) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| x.conj() * y)
        .sum::<Complex64>()
        .norm_sqr()
}

fn norm_sqr(v: &Vec4) -> f64 {
    v.iter().map(|x| x.norm_sqr()).sum()
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum OracleAttack {
    Passive,
    Intercept { b2a: bool },
    Disturb { b2a: bool, codes: &'static [usize] },
}

#[derive(Clone, Copy, Debug)]
pub struct OracleConventions {
    pub outcome_pp: bool,
    pub expected_pp: bool,
    pub convert: bool,
}

fn taps(attack: OracleAttack, at_b2a: bool, v: Vec4) -> Vec<(String, f64, Vec4)> {
    match attack {
        OracleAttack::Intercept { b2a } if b2a == at_b2a => (0..2)
            .filter_map(|bit| {
                let mut p = v;
                for h in 0..2 {
                    p[2 * h + (1 - bit)] = c(0.0, 0.0);
                }
                if norm_sqr(&p) < 1e-15 {
                    return None;
                }
                let h0 = p[0].norm_sqr() + p[1].norm_sqr();
                let name = if h0 > 0.5 * norm_sqr(&p) { "a" } else { "b" };
                Some((name.to_string(), 1.0, p))
            })
            .collect(),
        OracleAttack::Disturb { b2a, codes } if b2a == at_b2a => codes
            .iter()
            .map(|&code| {
                (
                    format!("uv{}{}", code >> 1, code & 1),
                    1.0 / codes.len() as f64,
                    apply(&on_travel(code), &v),
                )
            })
            .collect(),
        _ => vec![("none".to_string(), 1.0, v)],
    }
}

pub struct OracleReport {
    pub average: f64,
    /// (branch, m, n) -> conditional detection probability
    pub per_case: BTreeMap<(String, usize, usize), f64>,
}

pub fn brute_force(attack: OracleAttack, conv: OracleConventions) -> OracleReport {
    let mut mass: BTreeMap<(String, usize, usize), (f64, f64)> = BTreeMap::new();
    let mut average = 0.0;
    for x in 0..16usize {
        let (i, j, k, l) = (x >> 3 & 1, x >> 2 & 1, x >> 1 & 1, x & 1);
        let (m, n) = (i ^ k, j ^ l);
        let expected_oe = 2 * m + n;
        let expected = if conv.expected_pp {
            CROSS_LABEL[expected_oe]
        } else {
            expected_oe
        };
        let v0 = apply(&on_travel(2 * k + l), &epr());
        for (b1, w1, v1) in taps(attack, true, v0) {
            let v2 = apply(&on_travel(2 * i + j), &v1);
            for (b2, w2, v3) in taps(attack, false, v2) {
                let branch = if b1 == "none" { b2.clone() } else { b1.clone() };
                let w = w1 * w2;
                let mut detected = 0.0;
                for (outcome, &crossed) in CROSS_LABEL.iter().enumerate() {
                    let p = w * overlap_sqr(&bell(conv.outcome_pp, outcome), &v3);
                    let seen = if conv.outcome_pp != conv.expected_pp && conv.convert {
                        crossed
                    } else {
                        outcome
                    };
                    if seen != expected {
                        detected += p;
                    }
                }
                let e = mass.entry((branch, m, n)).or_insert((0.0, 0.0));
                e.0 += w * norm_sqr(&v3) / 16.0;
                e.1 += detected / 16.0;
                average += detected / 16.0;
            }
        }
    }
    OracleReport {
        average,
        per_case: mass.into_iter().map(|(key, (w, d))| (key, d / w)).collect(),
    }
}

/// Nearest multiple of 1/1024, if `x` is within 1e-12 of it.
pub fn as_dyadic(x: f64) -> Option<(i64, i64)> {
    let scaled = (x * 1024.0).round();
    ((x - scaled / 1024.0).abs() <= 1e-12).then_some((scaled as i64, 1024))
}
