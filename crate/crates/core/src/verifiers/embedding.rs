use std::collections::{HashMap, HashSet};
use std::fmt;

use crate::colouring::{Colour, CompleteColouring};
use crate::hedgehog::HedgehogEmbedding;

/// Why a hedgehog certificate was rejected. Tip-specific variants name the
/// first failing tip in certificate order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    UniformityMismatch {
        certificate: usize,
        host: usize,
    },
    ColourOutOfRange {
        colour: Colour,
        q: usize,
    },
    VertexOutOfRange {
        vertex: usize,
    },
    DuplicateBodyVertex {
        vertex: usize,
    },
    WrongSpineCount {
        expected: usize,
        found: usize,
    },
    MalformedTip {
        tip: Vec<usize>,
    },
    DuplicateTip {
        tip: Vec<usize>,
    },
    SpineInBody {
        tip: Vec<usize>,
        spine: usize,
    },
    SharedSpine {
        tip: Vec<usize>,
        spine: usize,
    },
    WrongColour {
        tip: Vec<usize>,
        spine: usize,
        found: Colour,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::UniformityMismatch { certificate, host } => {
                write!(f, "certificate is {certificate}-uniform but host is {host}-uniform")
            }
            Violation::ColourOutOfRange { colour, q } => write!(f, "colour {colour} not below q = {q}"),
            Violation::VertexOutOfRange { vertex } => write!(f, "vertex {vertex} outside the host"),
            Violation::DuplicateBodyVertex { vertex } => write!(f, "body vertex {vertex} repeated"),
            Violation::WrongSpineCount { expected, found } => {
                write!(f, "expected {expected} spines, found {found}")
            }
            Violation::MalformedTip { tip } => write!(f, "tip {tip:?} is not a subset of the body of the right size"),
            Violation::DuplicateTip { tip } => write!(f, "tip {tip:?} listed twice"),
            Violation::SpineInBody { tip, spine } => write!(f, "tip {tip:?}: spine {spine} lies in the body"),
            Violation::SharedSpine { tip, spine } => {
                write!(f, "tip {tip:?}: spine {spine} already used (injectivity)")
            }
            Violation::WrongColour { tip, spine, found } => {
                write!(f, "tip {tip:?}: edge with spine {spine} has colour {found}")
            }
        }
    }
}

/// Check a hedgehog certificate against its host colouring.
pub fn verify_embedding(emb: &HedgehogEmbedding, host: &CompleteColouring) -> Result<(), Violation> {
    let k = host.k();
    if emb.k != k {
        return Err(Violation::UniformityMismatch {
            certificate: emb.k,
            host: k,
        });
    }
    if emb.colour as usize >= host.q() {
        return Err(Violation::ColourOutOfRange {
            colour: emb.colour,
            q: host.q(),
        });
    }
    let n = host.n();
    let mut body = HashSet::new();
    for &v in &emb.body {
        if v >= n {
            return Err(Violation::VertexOutOfRange { vertex: v });
        }
        if !body.insert(v) {
            return Err(Violation::DuplicateBodyVertex { vertex: v });
        }
    }
    let t = emb.body.len();
    if t + 1 < k {
        return Err(Violation::WrongSpineCount {
            expected: 0,
            found: emb.spines.len(),
        });
    }
    let expected = choose(t, k - 1);
    if emb.spines.len() != expected {
        return Err(Violation::WrongSpineCount {
            expected,
            found: emb.spines.len(),
        });
    }

    let mut tips: HashSet<Vec<usize>> = HashSet::new();
    let mut used: HashMap<usize, Vec<usize>> = HashMap::new();
    for s in &emb.spines {
        let mut tip = s.tip.clone();
        tip.sort_unstable();
        let distinct = tip.windows(2).all(|w| w[0] != w[1]);
        if tip.len() != k - 1 || !distinct || !tip.iter().all(|v| body.contains(v)) {
            return Err(Violation::MalformedTip { tip: s.tip.clone() });
        }
        if !tips.insert(tip.clone()) {
            return Err(Violation::DuplicateTip { tip: s.tip.clone() });
        }
        if s.vertex >= n {
            return Err(Violation::VertexOutOfRange { vertex: s.vertex });
        }
        if body.contains(&s.vertex) {
            return Err(Violation::SpineInBody {
                tip: s.tip.clone(),
                spine: s.vertex,
            });
        }
        if used.insert(s.vertex, tip.clone()).is_some() {
            return Err(Violation::SharedSpine {
                tip: s.tip.clone(),
                spine: s.vertex,
            });
        }
        let mut edge = tip;
        edge.push(s.vertex);
        let found = host.colour_unsorted(&edge);
        if found != emb.colour {
            return Err(Violation::WrongColour {
                tip: s.tip.clone(),
                spine: s.vertex,
                found,
            });
        }
    }
    Ok(())
}

// Kept local so this checker shares no arithmetic with the producers.
fn choose(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}
