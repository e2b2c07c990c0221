use std::fmt;

/// Number of witnesses shown when a report is rendered without an explicit limit.
pub const DEFAULT_WITNESS_LIMIT: usize = 16;

/// A single counterexample: a short label plus the cells, objects or
/// morphisms involved, in the order the failing law mentions them.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Witness {
    pub label: String,
    pub items: Vec<String>,
}

impl Witness {
    pub fn new<I, S>(label: impl Into<String>, items: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        Witness {
            label: label.into(),
            items: items.into_iter().map(Into::into).collect(),
        }
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: ({})", self.label, self.items.join(", "))
    }
}

/// Outcome of a law or property check.
///
/// The verdict is derived from the witness list, so a report is true exactly
/// when it carries no counterexample. Aggregated reports keep their
/// sub-reports in `parts` and copy every failing part's witnesses upward.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertyReport {
    pub name: String,
    pub witnesses: Vec<Witness>,
    pub parts: Vec<PropertyReport>,
}

impl PropertyReport {
    pub fn new(name: impl Into<String>) -> Self {
        PropertyReport {
            name: name.into(),
            witnesses: Vec::new(),
            parts: Vec::new(),
        }
    }

    pub fn verdict(&self) -> bool {
        self.witnesses.is_empty()
    }

    pub fn push(&mut self, witness: Witness) {
        self.witnesses.push(witness);
    }

    pub fn with_witnesses(mut self, witnesses: impl IntoIterator<Item = Witness>) -> Self {
        self.witnesses.extend(witnesses);
        self
    }

    /// Builds a conjunction of sub-reports.
    pub fn all(name: impl Into<String>, parts: Vec<PropertyReport>) -> Self {
        let mut report = PropertyReport::new(name);
        for part in &parts {
            report.witnesses.extend(part.witnesses.iter().cloned());
        }
        report.parts = parts;
        report
    }

    pub fn part(&self, name: &str) -> Option<&PropertyReport> {
        self.parts.iter().find(|p| p.name == name)
    }

    /// Renders the report tree, showing at most `limit` witnesses per node.
    pub fn render(&self, limit: usize) -> String {
        let mut out = String::new();
        self.render_into(&mut out, 0, limit);
        out
    }

    fn render_into(&self, out: &mut String, depth: usize, limit: usize) {
        let indent = "  ".repeat(depth);
        out.push_str(&format!("{indent}{}: {}\n", self.name, self.verdict()));
        if self.parts.is_empty() {
            for w in self.witnesses.iter().take(limit) {
                out.push_str(&format!("{indent}  - {w}\n"));
            }
            if self.witnesses.len() > limit {
                out.push_str(&format!("{indent}  ... {} more\n", self.witnesses.len() - limit));
            }
        }
        for part in &self.parts {
            part.render_into(out, depth + 1, limit);
        }
    }
}

impl fmt::Display for PropertyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(DEFAULT_WITNESS_LIMIT))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verdict_tracks_witnesses() {
        let mut r = PropertyReport::new("p");
        assert!(r.verdict());
        r.push(Witness::new("bad", ["x"]));
        assert!(!r.verdict());
    }

    #[test]
    fn conjunction_collects_failing_parts() {
        let ok = PropertyReport::new("a");
        let bad = PropertyReport::new("b").with_witnesses([Witness::new("w", ["1", "2"])]);
        let all = PropertyReport::all("both", vec![ok, bad]);
        assert!(!all.verdict());
        assert_eq!(all.witnesses.len(), 1);
        assert!(all.part("a").unwrap().verdict());
    }

    #[test]
    fn render_caps_witnesses() {
        let r = PropertyReport::new("p").with_witnesses((0..5).map(|i| Witness::new("w", [i.to_string()])));
        let text = r.render(2);
        assert!(text.contains("... 3 more"));
        assert_eq!(text.lines().count(), 4);
    }
}
