//! Colourings of complete hypergraphs and monochromatic hedgehogs in them.
//!
//! Every search result comes back as a certificate that has passed the
//! matching checker in [`verifiers`]. The guide in `book/` walks through the
//! modules; its snippets are compiled as doctests of this crate.

pub mod bitset;
pub mod colouring;
pub mod combinadic;
pub mod constructions;
pub mod degeneracy;
pub mod error;
pub mod extractors;
pub mod finder;
pub mod hedgehog;
pub mod report;
pub mod verifiers;
pub mod witness;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    pub struct Introduction;
    #[doc = include_str!("../../../book/src/colourings.md")]
    pub struct Colourings;
    #[doc = include_str!("../../../book/src/hedgehogs.md")]
    pub struct Hedgehogs;
    #[doc = include_str!("../../../book/src/finder.md")]
    pub struct Finder;
    #[doc = include_str!("../../../book/src/lifts.md")]
    pub struct Lifts;
    #[doc = include_str!("../../../book/src/extractors.md")]
    pub struct Extractors;
    #[doc = include_str!("../../../book/src/small-values.md")]
    pub struct SmallValues;
    #[doc = include_str!("../../../book/src/cli.md")]
    pub struct Cli;
}
