use serde::{Deserialize, Serialize};

/// One step of the case analysis: the case entered and what satisfied it.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TraceStep {
    /// Recursion depth; 0 is the top-level call.
    pub depth: usize,
    pub label: String,
    pub via: String,
}

/// Ordered record of the cases an embedding went through.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EmbedTrace {
    steps: Vec<TraceStep>,
}

impl EmbedTrace {
    pub fn steps(&self) -> &[TraceStep] {
        &self.steps
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Labels of the top-level steps, in order.
    pub fn top_labels(&self) -> Vec<&str> {
        self.steps
            .iter()
            .filter(|s| s.depth == 0)
            .map(|s| s.label.as_str())
            .collect()
    }

    /// `label` or `label <- via` for every step, indented by depth.
    pub fn lines(&self) -> Vec<String> {
        self.steps
            .iter()
            .map(|s| {
                let pad = "  ".repeat(s.depth);
                if s.via.is_empty() {
                    format!("{pad}{}", s.label)
                } else {
                    format!("{pad}{} <- {}", s.label, s.via)
                }
            })
            .collect()
    }

    pub(crate) fn push(&mut self, depth: usize, label: impl Into<String>, via: impl Into<String>) {
        self.steps.push(TraceStep {
            depth,
            label: label.into(),
            via: via.into(),
        });
    }

    pub(crate) fn mark(&self) -> usize {
        self.steps.len()
    }

    pub(crate) fn rewind(&mut self, mark: usize) {
        self.steps.truncate(mark);
    }

    /// Sets the `via` of the step at `mark`, optionally renaming it.
    pub(crate) fn annotate(&mut self, mark: usize, label: Option<&str>, via: String) {
        if let Some(step) = self.steps.get_mut(mark) {
            if let Some(l) = label {
                step.label = l.to_string();
            }
            step.via = via;
        }
    }

    /// Whether any step fell back to search.
    pub fn uses_fallback(&self) -> bool {
        self.steps.iter().any(|s| s.label.starts_with("Fallback"))
    }
}
