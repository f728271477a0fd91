//! JSON report for `check` and `oracle`.

use clap::ValueEnum;
use serde::{Deserialize, Serialize};

use preimage::pair::is_synchronizing;
use preimage::scc::is_strongly_connected;
use preimage::Automaton;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Problem {
    /// |S·w⁻¹| > |S|
    Extend,
    /// S·w⁻¹ = Q
    ExtendTotal,
    /// Q·w ∩ S = ∅
    Avoid,
    /// |S·w⁻¹| ≠ |S|
    Resize,
}

impl Problem {
    pub fn name(self) -> &'static str {
        match self {
            Problem::Extend => "extend",
            Problem::ExtendTotal => "extend-total",
            Problem::Avoid => "avoid",
            Problem::Resize => "resize",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Answer {
    Yes,
    No,
    /// The method found a witness but cannot tell whether a shorter one
    /// meets `--max-len`.
    Unknown,
    /// A search budget or the oracle state cap was hit.
    UnknownBudget,
}

impl Answer {
    pub fn exit_code(self) -> i32 {
        match self {
            Answer::Yes => 0,
            Answer::No => 1,
            Answer::Unknown | Answer::UnknownBudget => 2,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Answer::Yes => "yes",
            Answer::No => "no",
            Answer::Unknown => "unknown",
            Answer::UnknownBudget => "unknown-budget",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Poly,
    Oracle,
    FastPath,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Poly => "poly",
            Method::Oracle => "oracle",
            Method::FastPath => "fast-path",
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Stats {
    pub nodes_expanded: Option<usize>,
    pub basis_size: Option<usize>,
    pub vectors_checked: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elapsed_us: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Classification {
    pub states: usize,
    pub letters: usize,
    pub strongly_connected: bool,
    pub synchronizing: bool,
    pub permutation: bool,
    pub sink_state: Option<usize>,
}

impl Classification {
    pub fn of(a: &Automaton) -> Self {
        Classification {
            states: a.num_states(),
            letters: a.num_letters(),
            strongly_connected: is_strongly_connected(a),
            synchronizing: is_synchronizing(a),
            permutation: a.is_permutation_automaton(),
            sink_state: a.sink_state(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WitnessReport {
    pub problem: Problem,
    pub answer: Answer,
    /// Letters `a`, `b`, ... for alphabets up to 26, else space-separated indices.
    pub witness: Option<String>,
    pub witness_letters: Option<Vec<usize>>,
    pub witness_length: Option<usize>,
    pub subset: Vec<usize>,
    pub subset_size: usize,
    /// `|S·w⁻¹|` for the witness.
    pub preimage_size: Option<usize>,
    pub max_len: Option<usize>,
    pub method: Method,
    pub note: Option<String>,
    pub stats: Stats,
    pub automaton: Classification,
}

impl WitnessReport {
    /// Serializes and checks that the text parses back to the same report
    /// under the strict schema.
    pub fn to_checked_json(&self) -> Result<String, String> {
        self.consistent()?;
        let text = serde_json::to_string_pretty(self).map_err(|e| e.to_string())?;
        let back: WitnessReport = serde_json::from_str(&text).map_err(|e| e.to_string())?;
        if &back != self {
            return Err("report does not round-trip".into());
        }
        Ok(text)
    }

    fn consistent(&self) -> Result<(), String> {
        if self.subset_size != self.subset.len() {
            return Err("subset_size disagrees with subset".into());
        }
        let len = self.witness_letters.as_ref().map(Vec::len);
        if len != self.witness_length || self.witness.is_some() != len.is_some() {
            return Err("witness fields disagree".into());
        }
        if self.witness.is_some() && self.answer == Answer::UnknownBudget {
            return Err("budget-limited answers carry no witness".into());
        }
        Ok(())
    }

    pub fn to_text(&self) -> String {
        let mut out = format!(
            "problem: {}\nanswer: {}\n",
            self.problem.name(),
            self.answer.name()
        );
        if let (Some(w), Some(len)) = (&self.witness, self.witness_length) {
            let shown = if w.is_empty() { "ε" } else { w };
            out.push_str(&format!("witness: {shown}\nlength: {len}\n"));
        }
        if let Some(p) = self.preimage_size {
            out.push_str(&format!(
                "preimage size: {p} (subset size {})\n",
                self.subset_size
            ));
        }
        out.push_str(&format!("method: {}\n", self.method.name()));
        if let Some(note) = &self.note {
            out.push_str(&format!("note: {note}\n"));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> WitnessReport {
        WitnessReport {
            problem: Problem::Extend,
            answer: Answer::Yes,
            witness: Some("ba".into()),
            witness_letters: Some(vec![1, 0]),
            witness_length: Some(2),
            subset: vec![1, 2],
            subset_size: 2,
            preimage_size: Some(3),
            max_len: None,
            method: Method::Poly,
            note: None,
            stats: Stats::default(),
            automaton: Classification::of(&preimage::automaton::samples::cerny4()),
        }
    }

    #[test]
    fn round_trip() {
        let text = sample().to_checked_json().unwrap();
        assert!(text.contains("\"problem\": \"extend\""));
        assert!(!text.contains("elapsed_us"));
    }

    #[test]
    fn strict_schema() {
        let text = sample().to_checked_json().unwrap();
        let extra = text.replacen('{', "{\"extra\": 1,", 1);
        assert!(serde_json::from_str::<WitnessReport>(&extra).is_err());
        let mut bad = sample();
        bad.witness_length = Some(3);
        assert!(bad.to_checked_json().is_err());
    }
}
