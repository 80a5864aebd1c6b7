//! Extraction procedures for three colours: sparse-hypergraph independent
//! sets, two-coloured cliques in Gallai colourings, the `F(t)` oracle and the
//! staged pipeline that combines them.

mod clique;
mod clique_search;
mod f_oracle;
mod gallai;
mod pipeline;
mod spencer;

pub use clique_search::{clique_avoiding, three_colour_clique_search};
pub use f_oracle::{
    exhaustive_f_witness, f_oracle, f_oracle_with, FOracleConfig, FOracleResult, FStep, FValue, FWitness,
    EXHAUSTIVE_MAX_N,
};
pub use gallai::{cube_root_ceil, gallai_two_coloured_clique, GallaiColouring, GALLAI_MAX_N};
pub use pipeline::{
    three_colour_pipeline, LabelColouring, PipelineOutcome, PipelineTrace, ScaleOverrides, Stage, StagedFailure,
};
pub use spencer::{
    spencer_guarantee, spencer_independent_set, spencer_independent_set_with_trials, TriangleHypergraph, DEFAULT_TRIALS,
};
