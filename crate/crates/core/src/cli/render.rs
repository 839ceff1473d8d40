//! Text, JSON and CSV rendering of command results.

use std::fmt::Write as _;
use std::io;

use clap::ValueEnum;
use serde_json::ser::{Formatter, PrettyFormatter};
use serde_json::{json, Map, Value};

use crate::analysis::{ClaimsReport, DetectionReport, LabeledFigure, Rational};
use crate::attacks::EveStrategy;
use crate::protocol::{Conventions, RoundTranscript, SessionStats};
use crate::qcore::{TwoQubitState, GENERATOR_ID};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

const TOOL_VERSION: &str = concat!("qdialog ", env!("CARGO_PKG_VERSION"));

/// Pretty JSON with every float printed to six decimals.
struct FixedFloats<'a>(PrettyFormatter<'a>);

impl Formatter for FixedFloats<'_> {
    fn write_f64<W: ?Sized + io::Write>(&mut self, writer: &mut W, value: f64) -> io::Result<()> {
        write!(writer, "{value:.6}")
    }

    fn write_f32<W: ?Sized + io::Write>(&mut self, writer: &mut W, value: f32) -> io::Result<()> {
        write!(writer, "{value:.6}")
    }

    fn begin_array<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.begin_array(w)
    }

    fn end_array<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.end_array(w)
    }

    fn begin_array_value<W: ?Sized + io::Write>(
        &mut self,
        w: &mut W,
        first: bool,
    ) -> io::Result<()> {
        self.0.begin_array_value(w, first)
    }

    fn end_array_value<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.end_array_value(w)
    }

    fn begin_object<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.begin_object(w)
    }

    fn end_object<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.end_object(w)
    }

    fn begin_object_key<W: ?Sized + io::Write>(
        &mut self,
        w: &mut W,
        first: bool,
    ) -> io::Result<()> {
        self.0.begin_object_key(w, first)
    }

    fn begin_object_value<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.begin_object_value(w)
    }

    fn end_object_value<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.end_object_value(w)
    }
}

/// `serde_json::Value` objects are BTreeMap-backed, so keys come out sorted.
pub(crate) fn to_json_string(value: &Value) -> io::Result<String> {
    let mut buf = Vec::new();
    let mut ser =
        serde_json::Serializer::with_formatter(&mut buf, FixedFloats(PrettyFormatter::new()));
    serde::Serialize::serialize(value, &mut ser).map_err(io::Error::other)?;
    buf.push(b'\n');
    String::from_utf8(buf).map_err(io::Error::other)
}

fn conventions_json(c: Conventions) -> Value {
    json!({
        "outcome": c.outcome.short_name(),
        "expected": c.expectation.short_name(),
        "compare": c.comparison.name(),
    })
}

fn f6(x: f64) -> String {
    format!("{x:.6}")
}

fn opt_f6(x: Option<f64>) -> String {
    x.map(f6).unwrap_or_else(|| "n/a".into())
}

fn state_json(s: &TwoQubitState) -> Value {
    Value::Array(s.amplitudes().iter().map(|a| json!([a.re, a.im])).collect())
}

pub(super) struct Output {
    command: Vec<String>,
    seed: Option<u64>,
    conventions: Option<Conventions>,
    payload: Value,
    csv: Vec<Vec<String>>,
    text: String,
}

impl Output {
    pub(super) fn render(&self, format: Format) -> io::Result<String> {
        match format {
            Format::Text => Ok(self.text.clone()),
            Format::Json => {
                let mut env = Map::new();
                env.insert("tool_version".into(), json!(TOOL_VERSION));
                env.insert("command".into(), json!(self.command));
                if let Some(seed) = self.seed {
                    env.insert("seed".into(), json!(seed));
                    env.insert("generator_id".into(), json!(GENERATOR_ID));
                }
                if let Some(c) = self.conventions {
                    env.insert("conventions".into(), conventions_json(c));
                }
                env.insert("payload".into(), self.payload.clone());
                to_json_string(&Value::Object(env))
            }
            Format::Csv => {
                let mut w = csv::Writer::from_writer(Vec::new());
                for row in &self.csv {
                    w.write_record(row).map_err(io::Error::other)?;
                }
                let bytes = w
                    .into_inner()
                    .map_err(|e| io::Error::other(e.to_string()))?;
                String::from_utf8(bytes).map_err(io::Error::other)
            }
        }
    }

    pub(super) fn detection(command: Vec<String>, report: &DetectionReport) -> Output {
        let cases: Vec<Value> = report
            .per_case
            .iter()
            .map(|(c, v)| {
                json!({
                    "branch": c.eve_branch.name(),
                    "case": c.numeral(),
                    "m": c.m,
                    "n": c.n,
                    "J": c.parity,
                    "detection": v,
                })
            })
            .collect();
        let mut branch_avgs = Map::new();
        let mut text = String::new();
        let _ = writeln!(text, "attack: {}", report.attack);
        let _ = writeln!(text, "conventions: {}", report.conventions);
        for branch in report.branches() {
            for (c, v) in report
                .per_case
                .iter()
                .filter(|(c, _)| c.eve_branch == branch)
            {
                let _ = writeln!(text, "{c}: {v}  (m={} n={} J={})", c.m, c.n, c.parity);
            }
            if let Some(avg) = report.branch_average(branch) {
                let _ = writeln!(text, "d({}) = {avg}", branch.name());
                branch_avgs.insert(branch.name(), json!(avg));
            }
        }
        let _ = writeln!(text, "average = {}", report.average);

        let mut csv = vec![["branch", "m", "n", "J", "numerator", "denominator"]
            .map(String::from)
            .to_vec()];
        for (c, v) in &report.per_case {
            csv.push(vec![
                c.eve_branch.name(),
                c.m.to_string(),
                c.n.to_string(),
                c.parity.to_string(),
                v.numerator().to_string(),
                v.denominator().to_string(),
            ]);
        }

        Output {
            command,
            seed: None,
            conventions: Some(report.conventions),
            payload: json!({
                "attack": report.attack.to_string(),
                "cases": cases,
                "branch_averages": branch_avgs,
                "average": report.average,
            }),
            csv,
            text,
        }
    }

    pub(super) fn claims(command: Vec<String>, report: &ClaimsReport) -> Output {
        let figure = |f: &LabeledFigure| {
            json!({
                "value": f.value,
                "provenance": f.provenance,
                "conventions": f.conventions.map(conventions_json),
            })
        };
        let rows = [
            ("paper_claim", &report.paper_claim),
            ("consistent_value", &report.consistent_value),
            ("cai_claim", &report.cai_claim),
            ("disturbance_value", &report.disturbance_value),
        ];
        let mut text = String::new();
        let mut csv = vec![vec![
            "claim".to_string(),
            "value".into(),
            "provenance".into(),
        ]];
        for (name, f) in rows {
            let conv = f.conventions.map(|c| format!(" [{c}]")).unwrap_or_default();
            let _ = writeln!(text, "{name} = {}{conv}\n  {}", f.value, f.provenance);
            csv.push(vec![
                name.to_string(),
                f.value.clone(),
                f.provenance.clone(),
            ]);
        }
        let _ = writeln!(text, "\n{}", report.explanation);
        let mut payload: Map<String, Value> = rows
            .iter()
            .map(|(n, f)| (n.to_string(), figure(f)))
            .collect();
        payload.insert("explanation".into(), json!(report.explanation));
        Output {
            command,
            seed: None,
            conventions: None,
            payload: Value::Object(payload),
            csv,
            text,
        }
    }

    pub(super) fn session(
        command: Vec<String>,
        attack: EveStrategy,
        conventions: Conventions,
        s: &SessionStats,
        exact: Rational,
    ) -> Output {
        let payload = json!({
            "attack": attack.to_string(),
            "rounds": s.rounds,
            "control_rounds": s.control_rounds,
            "message_rounds": s.message_rounds,
            "detections": s.detections,
            "detection_mean": s.detection_rate,
            "detection_standard_error": s.detection_standard_error,
            "exact_average": exact,
            "alice_to_bob_pair_errors": s.alice_to_bob_pair_errors,
            "bob_to_alice_pair_errors": s.bob_to_alice_pair_errors,
            "bit_errors": s.bit_errors,
            "bit_error_rate": s.bit_error_rate,
            "survival_estimate": s.survival_estimate,
            "bit_seed": s.bit_seed,
        });
        let pairs: Vec<(&str, String)> = vec![
            ("attack", attack.to_string()),
            ("outcome_labels", conventions.outcome.short_name().into()),
            (
                "expected_labels",
                conventions.expectation.short_name().into(),
            ),
            ("compare", conventions.comparison.name().into()),
            ("rounds", s.rounds.to_string()),
            ("control_rounds", s.control_rounds.to_string()),
            ("message_rounds", s.message_rounds.to_string()),
            ("detections", s.detections.to_string()),
            ("detection_mean", opt_f6(s.detection_rate)),
            (
                "detection_standard_error",
                opt_f6(s.detection_standard_error),
            ),
            ("exact_average", exact.to_string()),
            (
                "alice_to_bob_pair_errors",
                s.alice_to_bob_pair_errors.to_string(),
            ),
            (
                "bob_to_alice_pair_errors",
                s.bob_to_alice_pair_errors.to_string(),
            ),
            ("bit_errors", s.bit_errors.to_string()),
            ("bit_error_rate", opt_f6(s.bit_error_rate)),
            ("survival_estimate", opt_f6(s.survival_estimate)),
            ("seed", s.seed.to_string()),
            ("bit_seed", s.bit_seed.to_string()),
            ("generator_id", s.generator_id.to_string()),
        ];

        let mut text = String::new();
        let _ = writeln!(text, "attack: {attack}");
        let _ = writeln!(text, "conventions: {conventions}");
        let _ = writeln!(
            text,
            "rounds: {} (control {}, message {})",
            s.rounds, s.control_rounds, s.message_rounds
        );
        let _ = writeln!(text, "detection mean {}", opt_f6(s.detection_rate));
        let _ = writeln!(
            text,
            "standard error {}",
            opt_f6(s.detection_standard_error)
        );
        let _ = writeln!(text, "exact average {exact}");
        let _ = writeln!(
            text,
            "message pair errors: alice->bob {}, bob->alice {}; bit error rate {}",
            s.alice_to_bob_pair_errors,
            s.bob_to_alice_pair_errors,
            opt_f6(s.bit_error_rate)
        );
        let _ = writeln!(text, "survival estimate {}", opt_f6(s.survival_estimate));
        let _ = writeln!(text, "seed {} ({})", s.seed, s.generator_id);

        Output {
            command,
            seed: Some(s.seed),
            conventions: Some(conventions),
            payload,
            csv: key_value_rows(pairs),
            text,
        }
    }

    pub(super) fn round(
        command: Vec<String>,
        attack: EveStrategy,
        seed: u64,
        t: &RoundTranscript,
    ) -> Output {
        let cfg = t.config;
        let bits = |c: crate::qcore::PauliCode| format!("{}{}", c.a(), c.b());
        let snapshots: Map<String, Value> = t
            .snapshots
            .iter()
            .map(|(name, s)| (name.to_string(), state_json(s)))
            .collect();
        let payload = json!({
            "attack": attack.to_string(),
            "alice_bits": bits(cfg.alice_bits),
            "bob_bits": bits(cfg.bob_bits),
            "mode": format!("{:?}", cfg.mode).to_lowercase(),
            "snapshots": snapshots,
            "eve": t.eve.to_string(),
            "bell_outcome": t.bell_outcome.to_string(),
            "bell_probability": t.bell_probability,
            "expected_outcome": t.expected().to_string(),
            "decoded_alice_bits": t.decoded_alice_bits.map(bits),
            "decoded_bob_bits": t.decoded_bob_bits.map(bits),
            "detected": t.detected,
        });

        let mut pairs: Vec<(&str, String)> = vec![
            ("attack", attack.to_string()),
            ("alice_bits", bits(cfg.alice_bits)),
            ("bob_bits", bits(cfg.bob_bits)),
            ("mode", format!("{:?}", cfg.mode).to_lowercase()),
            ("eve", t.eve.to_string()),
            ("bell_outcome", t.bell_outcome.to_string()),
            ("bell_probability", f6(t.bell_probability)),
            ("expected_outcome", t.expected().to_string()),
            (
                "decoded_alice_bits",
                t.decoded_alice_bits
                    .map(bits)
                    .unwrap_or_else(|| "n/a".into()),
            ),
            (
                "decoded_bob_bits",
                t.decoded_bob_bits.map(bits).unwrap_or_else(|| "n/a".into()),
            ),
            (
                "detected",
                t.detected
                    .map(|d| d.to_string())
                    .unwrap_or_else(|| "n/a".into()),
            ),
            ("seed", seed.to_string()),
            ("generator_id", GENERATOR_ID.to_string()),
        ];
        let mut text = String::new();
        let _ = writeln!(text, "attack: {attack}");
        let _ = writeln!(text, "conventions: {}", cfg.conventions);
        for (name, s) in t.snapshots.iter() {
            let _ = writeln!(text, "{name:>14}: {s}");
            pairs.push((name, s.to_string()));
        }
        for (k, v) in pairs.iter().skip(3).take(8) {
            let _ = writeln!(text, "{k}: {v}");
        }
        let _ = writeln!(text, "seed {seed} ({GENERATOR_ID})");

        Output {
            command,
            seed: Some(seed),
            conventions: Some(cfg.conventions),
            payload,
            csv: key_value_rows(pairs),
            text,
        }
    }
}

fn key_value_rows(pairs: Vec<(&str, String)>) -> Vec<Vec<String>> {
    std::iter::once(vec!["key".to_string(), "value".to_string()])
        .chain(pairs.into_iter().map(|(k, v)| vec![k.to_string(), v]))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn floats_fixed_and_keys_sorted() {
        let v = json!({"zeta": 0.75, "alpha": [1.0, 0.5], "mid": "3/4", "n": 3});
        let s = to_json_string(&v).unwrap();
        assert_eq!(
            s,
            "{\n  \"alpha\": [\n    1.000000,\n    0.500000\n  ],\n  \"mid\": \"3/4\",\n  \"n\": 3,\n  \"zeta\": 0.750000\n}\n"
        );
    }
}
