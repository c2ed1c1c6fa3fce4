//! Per-condition pass/fail ledgers. Every checker in the crate reports all
//! failures it finds (not just the first), with exact witness values, so
//! each failed identity can be attributed to its condition id.

use std::fmt;

/// Rendered witnesses are capped per condition to keep reports readable;
/// the count of suppressed witnesses is kept.
pub const WITNESS_CAP: usize = 16;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Condition {
    pub id: String,
    pub passed: bool,
    pub witnesses: Vec<String>,
    pub suppressed: usize,
}

impl Condition {
    pub fn pass(id: &str) -> Condition {
        Condition { id: id.to_string(), passed: true, witnesses: Vec::new(), suppressed: 0 }
    }

    pub fn fail(id: &str, witnesses: Vec<String>) -> Condition {
        let mut c = Condition::pass(id);
        c.passed = false;
        c.suppressed = witnesses.len().saturating_sub(WITNESS_CAP);
        c.witnesses = witnesses.into_iter().take(WITNESS_CAP).collect();
        c
    }

    pub fn from_witnesses(id: &str, witnesses: Vec<String>) -> Condition {
        if witnesses.is_empty() {
            Condition::pass(id)
        } else {
            Condition::fail(id, witnesses)
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AnalysisReport {
    pub conditions: Vec<Condition>,
}

impl AnalysisReport {
    pub fn new() -> AnalysisReport {
        AnalysisReport { conditions: Vec::new() }
    }

    pub fn push(&mut self, condition: Condition) {
        self.conditions.push(condition);
    }

    pub fn record(&mut self, id: &str, witnesses: Vec<String>) {
        self.push(Condition::from_witnesses(id, witnesses));
    }

    pub fn merge(&mut self, other: AnalysisReport) {
        self.conditions.extend(other.conditions);
    }

    pub fn all_passed(&self) -> bool {
        self.conditions.iter().all(|c| c.passed)
    }

    pub fn condition(&self, id: &str) -> Option<&Condition> {
        self.conditions.iter().find(|c| c.id == id)
    }

    pub fn passed(&self, id: &str) -> bool {
        self.condition(id).is_some_and(|c| c.passed)
    }

    pub fn failed_ids(&self) -> Vec<String> {
        self.conditions.iter().filter(|c| !c.passed).map(|c| c.id.clone()).collect()
    }

    /// Stable presentation order: lexicographic by condition id.
    pub fn sorted(mut self) -> AnalysisReport {
        self.conditions.sort_by(|a, b| a.id.cmp(&b.id));
        self
    }
}

impl fmt::Display for AnalysisReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.conditions {
            writeln!(f, "{} {}", if c.passed { "pass" } else { "FAIL" }, c.id)?;
            for w in &c.witnesses {
                writeln!(f, "    {w}")?;
            }
            if c.suppressed > 0 {
                writeln!(f, "    (+{} more witnesses)", c.suppressed)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn report_accumulates_and_sorts() {
        let mut r = AnalysisReport::new();
        r.record("e2", vec![]);
        r.record("e1", vec!["witness".into()]);
        assert!(!r.all_passed());
        assert_eq!(r.failed_ids(), vec!["e1".to_string()]);
        let sorted = r.sorted();
        assert_eq!(sorted.conditions[0].id, "e1");
        assert!(sorted.passed("e2"));
    }

    #[test]
    fn witness_cap_counts_suppressed() {
        let witnesses: Vec<String> = (0..20).map(|i| format!("w{i}")).collect();
        let c = Condition::fail("x", witnesses);
        assert_eq!(c.witnesses.len(), WITNESS_CAP);
        assert_eq!(c.suppressed, 4);
    }
}
