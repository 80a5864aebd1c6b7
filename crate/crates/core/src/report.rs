use std::fmt;

/// Deterministic record of a randomized or backtracking run.
///
/// Rendered as `key: value` lines so reports can be diffed and kept as fixtures.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SearchReport {
    pub procedure: String,
    pub seed: Option<u64>,
    pub params: Vec<(String, String)>,
    pub tries: u64,
    /// Seed of the attempt that produced the returned object, if any.
    pub winning_seed: Option<u64>,
    pub outcome: String,
}

impl SearchReport {
    pub fn new(procedure: &str, seed: Option<u64>) -> Self {
        SearchReport {
            procedure: procedure.to_string(),
            seed,
            ..Default::default()
        }
    }

    pub fn param(mut self, key: &str, value: impl fmt::Display) -> Self {
        self.params.push((key.to_string(), value.to_string()));
        self
    }
}

impl fmt::Display for SearchReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "procedure: {}", self.procedure)?;
        if let Some(seed) = self.seed {
            writeln!(f, "seed: {seed}")?;
        }
        for (k, v) in &self.params {
            writeln!(f, "param.{k}: {v}")?;
        }
        writeln!(f, "tries: {}", self.tries)?;
        if let Some(w) = self.winning_seed {
            writeln!(f, "winning_seed: {w}")?;
        }
        writeln!(f, "outcome: {}", self.outcome)
    }
}
