//! Output envelope shared by every subcommand.

use num_rational::Ratio;
use serde_json::{json, Map, Value};

use lefschetz_core::bounds::BoundReport;

pub struct Envelope {
    command: &'static str,
    inputs: Map<String, Value>,
    results: Map<String, Value>,
    warnings: Vec<String>,
}

impl Envelope {
    pub fn new(command: &'static str) -> Self {
        Self { command, inputs: Map::new(), results: Map::new(), warnings: Vec::new() }
    }

    pub fn input(&mut self, key: &str, value: impl Into<Value>) {
        self.inputs.insert(key.to_owned(), value.into());
    }

    pub fn result(&mut self, key: &str, value: impl Into<Value>) {
        self.results.insert(key.to_owned(), value.into());
    }

    pub fn warn(&mut self, message: impl Into<String>) {
        self.warnings.push(message.into());
    }

    pub fn to_json(&self) -> String {
        let v = json!({
            "command": self.command,
            "inputs": self.inputs,
            "results": self.results,
            "warnings": self.warnings,
        });
        serde_json::to_string_pretty(&v).expect("serializing a JSON value cannot fail")
    }

    /// One `key: value` line per scalar, nested keys joined with dots.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (k, v) in &self.results {
            flatten(k, v, &mut out);
        }
        for w in &self.warnings {
            out.push_str("warning: ");
            out.push_str(w);
            out.push('\n');
        }
        out
    }
}

fn flatten(prefix: &str, v: &Value, out: &mut String) {
    match v {
        Value::Object(m) => {
            for (k, v) in m {
                flatten(&format!("{prefix}.{k}"), v, out);
            }
        }
        Value::Array(items) => {
            for (i, v) in items.iter().enumerate() {
                flatten(&format!("{prefix}[{i}]"), v, out);
            }
        }
        Value::String(s) => out.push_str(&format!("{prefix}: {s}\n")),
        other => out.push_str(&format!("{prefix}: {other}\n")),
    }
}

/// `p/q` in lowest terms with positive denominator; `Ratio` keeps that form.
pub fn rational(r: Ratio<i64>) -> Value {
    Value::String(format!("{}/{}", r.numer(), r.denom()))
}

pub fn report_value(report: &BoundReport) -> Value {
    let entries: Vec<Value> = report
        .entries
        .iter()
        .map(|e| {
            json!({
                "name": e.name,
                "relation": e.relation,
                "lhs": e.lhs,
                "rhs": e.rhs,
                "satisfied": e.satisfied,
            })
        })
        .collect();
    let c = &report.chain;
    let b = &report.betti;
    json!({
        "verdict": report.verdict.to_string(),
        "torelli": report.torelli,
        "entries": entries,
        "chain": {
            "euler_characteristic": c.euler_characteristic,
            "signature_upper": c.signature_upper,
            "k2_upper": c.k2_upper,
            "genus_sigma_upper": c.genus_sigma_upper,
            "degree": c.degree,
            "kneser_lower": c.kneser_lower,
        },
        "betti": {
            "b1_lower": b.b1_lower,
            "b2_minus_lower": b.b2_minus_lower,
            "b2_plus_lower": rational(b.b2_plus_lower),
            "vacuous": b.vacuous,
        },
    })
}
