//! Exact checkers for every certificate the toolkit emits.
//!
//! Nothing in here calls into the constructions, finder or extractors; the
//! checkers re-derive everything from the host colouring.

mod cliques;
mod embedding;
mod exhaustive;
mod hedgehog_search;
mod lifts;
pub mod slow;

pub use cliques::{every_clique_all_colours, rainbow_triangle_free, verify_clique_witness, verify_independent_set};
pub use embedding::{verify_embedding, Violation};
pub use exhaustive::{cross_check_sample, exhaustive_ramsey_check, RamseyVerdict, MAX_SEQUENCES};
pub use hedgehog_search::has_monochromatic_hedgehog;
pub use lifts::verify_complement_lift;
pub use slow::brute_force_hedgehog;
