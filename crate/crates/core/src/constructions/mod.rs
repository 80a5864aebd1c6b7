//! Lower-bound colouring generators: random and scattered graph colourings,
//! Gallai-type product witnesses, and lifts to higher uniformity.

mod gallai_witness;
mod lifts;
pub mod local_search;
mod random;
mod scattered;

pub use gallai_witness::{
    gallai_base_size, gallai_lower_bound_witness, gallai_witness_with_base, pair_union_target, GallaiOutcome,
    GallaiWitness, FACTOR_PALETTES,
};
pub use lifts::{
    colour_set_from_index, colour_set_index, complement_lift, kr_quad_lift, lex_product, quad_set_lift,
    set_lift_colour_count,
};
pub use random::{attempt_seed, random_colouring};
pub use scattered::{find_scattered_colouring, ScatteredColouringSpec, ScatteredOutcome, SearchMode};
