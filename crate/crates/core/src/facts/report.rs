use serde::{Deserialize, Serialize};

/// One checked statement with its outcome and the data that decided it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fact {
    pub id: String,
    /// What the statement is about, in words.
    pub context: String,
    pub verdict: bool,
    pub evidence: Vec<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactReport {
    pub facts: Vec<Fact>,
}

impl FactReport {
    pub fn new() -> FactReport {
        FactReport::default()
    }

    pub fn push(&mut self, id: impl Into<String>, context: impl Into<String>, verdict: bool, evidence: Vec<String>) {
        self.facts.push(Fact {
            id: id.into(),
            context: context.into(),
            verdict,
            evidence,
        });
    }

    pub fn extend(&mut self, other: FactReport) {
        self.facts.extend(other.facts);
    }

    pub fn all_pass(&self) -> bool {
        self.facts.iter().all(|f| f.verdict)
    }

    pub fn failures(&self) -> Vec<&Fact> {
        self.facts.iter().filter(|f| !f.verdict).collect()
    }

    pub fn get(&self, id: &str) -> Option<&Fact> {
        self.facts.iter().find(|f| f.id == id)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for f in &self.facts {
            let mark = if f.verdict { "PASS" } else { "FAIL" };
            out.push_str(&format!("{mark} {} - {}\n", f.id, f.context));
            for e in &f.evidence {
                out.push_str(&format!("    {e}\n"));
            }
        }
        let passed = self.facts.iter().filter(|f| f.verdict).count();
        out.push_str(&format!("{passed}/{} facts hold\n", self.facts.len()));
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}
