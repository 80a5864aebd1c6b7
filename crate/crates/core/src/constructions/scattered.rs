use std::fmt;
use std::str::FromStr;

use super::local_search::{local_search, rejection_search, ColouringProblem, SearchRun};
use crate::colouring::CompleteColouring;
use crate::combinadic::binomial;
use crate::error::{Error, Result};
use crate::report::SearchReport;
use crate::verifiers::every_clique_all_colours;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SearchMode {
    Rejection,
    LocalSearch,
}

impl fmt::Display for SearchMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SearchMode::Rejection => "rejection",
            SearchMode::LocalSearch => "local-search",
        })
    }
}

impl FromStr for SearchMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "rejection" => Ok(SearchMode::Rejection),
            "local-search" => Ok(SearchMode::LocalSearch),
            other => Err(Error::Parse(format!("unknown search mode {other:?}"))),
        }
    }
}

/// Request for a graph colouring of `K_n` in which every `t`-clique shows all `q` colours.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ScatteredColouringSpec {
    pub n: usize,
    pub t: usize,
    pub q: usize,
    pub seed: u64,
    /// Restarts (local search) or sampled colourings (rejection).
    pub max_tries: u64,
    /// Moves per local-search restart.
    pub steps: u64,
    pub search_mode: SearchMode,
}

impl ScatteredColouringSpec {
    pub fn new(n: usize, t: usize, q: usize, seed: u64) -> Self {
        ScatteredColouringSpec {
            n,
            t,
            q,
            seed,
            max_tries: 50,
            steps: 5_000,
            search_mode: SearchMode::LocalSearch,
        }
    }
}

#[derive(Clone, Debug)]
pub struct ScatteredOutcome {
    /// `None` when the search ran out of tries ("exhausted").
    pub colouring: Option<CompleteColouring>,
    pub report: SearchReport,
}

pub fn find_scattered_colouring(spec: &ScatteredColouringSpec) -> Result<ScatteredOutcome> {
    if binomial(spec.t, 2) < spec.q {
        return Err(Error::InfeasibleSpec(format!(
            "a {}-clique has C({},2) = {} edges, fewer than q = {} colours",
            spec.t,
            spec.t,
            binomial(spec.t, 2),
            spec.q
        )));
    }
    let problem = ColouringProblem {
        n: spec.n,
        t: spec.t,
        q: spec.q,
        forbid_rainbow: None,
    };
    let SearchRun {
        colouring,
        tries,
        winning_seed,
    } = match spec.search_mode {
        SearchMode::Rejection => rejection_search(problem, spec.seed, spec.max_tries)?,
        SearchMode::LocalSearch => local_search(problem, spec.seed, spec.max_tries, spec.steps)?,
    };
    if let Some(c) = &colouring {
        // the search's own bookkeeping is incremental; confirm from scratch
        if let Some(w) = every_clique_all_colours(c, spec.t, spec.q) {
            panic!("local search returned a colouring with deficient clique {w:?}");
        }
    }
    let mut report = SearchReport::new("find_scattered_colouring", Some(spec.seed))
        .param("n", spec.n)
        .param("t", spec.t)
        .param("q", spec.q)
        .param("mode", spec.search_mode)
        .param("max_tries", spec.max_tries)
        .param("steps", spec.steps);
    report.tries = tries;
    report.winning_seed = winning_seed;
    report.outcome = if colouring.is_some() { "found" } else { "exhausted" }.to_string();
    Ok(ScatteredOutcome { colouring, report })
}
