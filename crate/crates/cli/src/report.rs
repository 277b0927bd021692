//! Analysis reports and their JSON and text renderings.

use mvcomp::{FiniteMvAlgebra, Homomorphism, IsoWitness, MvError};
use serde::Serialize;
use serde_json::Value;

pub const TOOL: &str = "mvcomp";

/// Process exit status carried by a report.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(into = "i32")]
pub enum ExitHint {
    Ok = 0,
    CheckFailed = 1,
    InputError = 2,
    ResourceLimit = 3,
}

impl From<ExitHint> for i32 {
    fn from(h: ExitHint) -> i32 {
        h as i32
    }
}

impl ExitHint {
    pub fn of_error(e: &MvError) -> Self {
        match e {
            MvError::ResourceLimit { .. } => ExitHint::ResourceLimit,
            MvError::TheoremViolation(_) | MvError::InternalInvariant(_) => ExitHint::CheckFailed,
            _ => ExitHint::InputError,
        }
    }
}

/// An isomorphism as an explicit element map.
#[derive(Debug, Clone, Serialize)]
pub struct WitnessEntry {
    pub name: String,
    pub source: String,
    pub target: String,
    pub map: Vec<(String, String)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reverified: Option<bool>,
    #[serde(skip)]
    pub algebras: Option<(FiniteMvAlgebra, FiniteMvAlgebra)>,
}

impl WitnessEntry {
    pub fn new(name: &str, source: &str, target: &str, iso: &IsoWitness) -> Self {
        WitnessEntry {
            name: name.into(),
            source: source.into(),
            target: target.into(),
            map: iso.forward().named_pairs(),
            reverified: None,
            algebras: Some((iso.source().clone(), iso.target().clone())),
        }
    }

    /// Rebuilds the isomorphism from its printed map and re-checks it.
    pub fn reverify(&self) -> Result<(), MvError> {
        let (source, target) = self
            .algebras
            .clone()
            .ok_or_else(|| MvError::InvalidArgument(format!("witness `{}` has no algebras", self.name)))?;
        let printed = serde_json::to_string(&self.map)
            .map_err(|e| MvError::InternalInvariant(e.to_string()))?;
        let pairs: Vec<(String, String)> =
            serde_json::from_str(&printed).map_err(|e| MvError::InternalInvariant(e.to_string()))?;
        let forward = Homomorphism::from_named_pairs(source, target, &pairs)?;
        IsoWitness::from_bijection(forward)?.verify()
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub tool: &'static str,
    pub version: &'static str,
    pub subject: Value,
    pub command: String,
    pub result: Value,
    pub witnesses: Vec<WitnessEntry>,
    pub diagnostics: Vec<String>,
    pub exit_hint: ExitHint,
}

impl Report {
    pub fn new(command: String, subject: Value) -> Self {
        Report {
            tool: TOOL,
            version: env!("CARGO_PKG_VERSION"),
            subject,
            command,
            result: Value::Null,
            witnesses: Vec::new(),
            diagnostics: Vec::new(),
            exit_hint: ExitHint::Ok,
        }
    }

    /// Raises the exit hint; the most severe outcome wins.
    pub fn escalate(&mut self, hint: ExitHint) {
        self.exit_hint = self.exit_hint.max(hint);
    }

    pub fn fail_with(&mut self, e: &MvError) {
        self.result = serde_json::json!({ "error": { "kind": error_kind(e), "message": e.to_string() } });
        self.diagnostics.push(e.to_string());
        self.escalate(ExitHint::of_error(e));
    }

    pub fn verify_witnesses(&mut self) {
        let mut failures = Vec::new();
        for w in &mut self.witnesses {
            match w.reverify() {
                Ok(()) => w.reverified = Some(true),
                Err(e) => {
                    w.reverified = Some(false);
                    failures.push(format!("witness `{}` does not re-verify: {e}", w.name));
                }
            }
        }
        if !failures.is_empty() {
            self.diagnostics.extend(failures);
            self.escalate(ExitHint::CheckFailed);
        }
    }

    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("reports serialize");
        text.push('\n');
        text
    }

    pub fn to_text(&self) -> String {
        let value = serde_json::to_value(self).expect("reports serialize");
        let mut out = String::new();
        render(&value, 0, &mut out);
        out
    }
}

pub fn error_kind(e: &MvError) -> &'static str {
    match e {
        MvError::InvalidParameter(_) => "invalid-parameter",
        MvError::Format(_) => "format",
        MvError::AxiomViolation { .. } => "axiom-violation",
        MvError::UndefinedPartialSum(_) => "undefined-partial-sum",
        MvError::InvalidArgument(_) => "invalid-argument",
        MvError::Precondition(_) => "precondition",
        MvError::ResourceLimit { .. } => "resource-limit",
        MvError::InternalInvariant(_) => "internal-invariant",
        MvError::TheoremViolation(_) => "theorem-violation",
    }
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("-".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Array(items) if items.iter().all(|i| !i.is_array() && !i.is_object()) => Some(format!(
            "[{}]",
            items.iter().filter_map(scalar).collect::<Vec<_>>().join(", ")
        )),
        Value::Array(items)
            if items.iter().all(|i| {
                i.as_array()
                    .is_some_and(|p| p.len() == 2 && p.iter().all(|x| !x.is_array() && !x.is_object()))
            }) =>
        {
            Some(
                items
                    .iter()
                    .map(|p| {
                        let p = p.as_array().expect("pair");
                        format!("{} -> {}", scalar(&p[0]).unwrap(), scalar(&p[1]).unwrap())
                    })
                    .collect::<Vec<_>>()
                    .join(", "),
            )
        }
        _ => None,
    }
}

fn render(v: &Value, depth: usize, out: &mut String) {
    let pad = "  ".repeat(depth);
    match v {
        Value::Object(map) => {
            for (k, item) in map {
                match scalar(item) {
                    Some(s) => out.push_str(&format!("{pad}{k}: {s}\n")),
                    None => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        render(item, depth + 1, out);
                    }
                }
            }
        }
        Value::Array(items) => {
            for item in items {
                match scalar(item) {
                    Some(s) => out.push_str(&format!("{pad}- {s}\n")),
                    None => {
                        out.push_str(&format!("{pad}-\n"));
                        render(item, depth + 1, out);
                    }
                }
            }
        }
        other => out.push_str(&format!("{pad}{}\n", scalar(other).unwrap_or_default())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn most_severe_hint_wins() {
        let mut r = Report::new("validate".into(), Value::Null);
        r.escalate(ExitHint::ResourceLimit);
        r.escalate(ExitHint::CheckFailed);
        assert_eq!(r.exit_hint, ExitHint::ResourceLimit);
        assert!(r.to_json().contains("\"exit_hint\": 3"));
    }

    #[test]
    fn printed_witness_reverifies() {
        let a = FiniteMvAlgebra::product(&[2, 3]).unwrap();
        let b = FiniteMvAlgebra::product(&[3, 2]).unwrap();
        let iso = mvcomp::algebra::is_isomorphic(&a, &b).unwrap().unwrap();
        let mut w = WitnessEntry::new("swap", "A", "B", &iso);
        w.reverify().unwrap();
        w.map.swap(1, 2);
        w.map[1].0 = w.map[2].0.clone();
        assert!(w.reverify().is_err());
    }

    #[test]
    fn text_rendering_flattens_pairs() {
        let mut out = String::new();
        render(&serde_json::json!({"map": [["0", "1"]], "n": 2}), 0, &mut out);
        assert_eq!(out, "map: 0 -> 1\nn: 2\n");
    }
}
