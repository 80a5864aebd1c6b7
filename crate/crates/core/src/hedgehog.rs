//! Hedgehog shapes and embedding certificates.
//!
//! The k-uniform hedgehog with body size `t` has `t` body vertices and, for
//! every (k−1)-subset of the body (a *tip*), one private spine vertex that
//! completes the tip to an edge.

use std::fmt;
use std::str::FromStr;

use crate::colouring::Colour;
use crate::combinadic::{binomial, for_each_subset};
use crate::error::{invalid, Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HedgehogShape {
    pub t: usize,
    pub k: usize,
    pub vertex_count: usize,
    pub edge_count: usize,
}

pub fn hedgehog_shape(t: usize, k: usize) -> Result<HedgehogShape> {
    if k < 2 {
        return invalid(format!("uniformity k = {k} must be at least 2"));
    }
    if t < k - 1 {
        return invalid(format!("body size t = {t} is below k - 1 = {}", k - 1));
    }
    let edge_count = binomial(t, k - 1);
    Ok(HedgehogShape {
        t,
        k,
        vertex_count: t + edge_count,
        edge_count,
    })
}

/// The edge list of the hedgehog itself: body `0..t`, spines numbered from
/// `t` upward in colex order of their tips.
pub fn hedgehog_edges(t: usize, k: usize) -> Result<Vec<Vec<usize>>> {
    let shape = hedgehog_shape(t, k)?;
    let mut edges = Vec::with_capacity(shape.edge_count);
    let mut spine = t;
    for_each_subset(t, k - 1, |tip| {
        let mut e = tip.to_vec();
        e.push(spine);
        spine += 1;
        edges.push(e);
    });
    Ok(edges)
}

/// One hedgehog edge: a tip (sorted (k−1)-subset of the body) and its spine.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Spine {
    pub tip: Vec<usize>,
    pub vertex: usize,
}

/// A claimed monochromatic copy of the hedgehog inside some host colouring.
///
/// Nothing here is trusted; `verifiers::verify_embedding` checks it against
/// the host.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HedgehogEmbedding {
    pub k: usize,
    pub colour: Colour,
    pub body: Vec<usize>,
    pub spines: Vec<Spine>,
}

impl HedgehogEmbedding {
    pub fn t(&self) -> usize {
        self.body.len()
    }

    /// All vertices used, body first.
    pub fn vertices(&self) -> Vec<usize> {
        let mut v = self.body.clone();
        v.extend(self.spines.iter().map(|s| s.vertex));
        v
    }
}

/// Plain-text certificate:
///
/// ```text
/// HEDGEHOG v1 k=3 t=3 colour=1
/// body 0 4 9
/// spine 0 4 : 1
/// spine 0 9 : 2
/// spine 4 9 : 3
/// ```
impl fmt::Display for HedgehogEmbedding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "HEDGEHOG v1 k={} t={} colour={}", self.k, self.t(), self.colour)?;
        write!(f, "body")?;
        for v in &self.body {
            write!(f, " {v}")?;
        }
        writeln!(f)?;
        for s in &self.spines {
            write!(f, "spine")?;
            for v in &s.tip {
                write!(f, " {v}")?;
            }
            writeln!(f, " : {}", s.vertex)?;
        }
        Ok(())
    }
}

impl FromStr for HedgehogEmbedding {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let perr = |m: String| Error::Parse(m);
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header = lines.next().ok_or_else(|| perr("empty certificate".into()))?;
        let mut hp = header.split_whitespace();
        if hp.next() != Some("HEDGEHOG") || hp.next() != Some("v1") {
            return Err(perr(format!("bad certificate header {header:?}")));
        }
        let mut kv = |name: &str| -> Result<usize> {
            hp.next()
                .and_then(|p| p.strip_prefix(name))
                .and_then(|p| p.strip_prefix('='))
                .and_then(|p| p.parse().ok())
                .ok_or_else(|| Error::Parse(format!("bad certificate header {header:?}")))
        };
        let k = kv("k")?;
        let t = kv("t")?;
        let colour = kv("colour")?;
        let colour = Colour::try_from(colour).map_err(|_| perr(format!("colour {colour} out of range")))?;

        let body_line = lines.next().ok_or_else(|| perr("missing body line".into()))?;
        let body = body_line
            .strip_prefix("body")
            .ok_or_else(|| perr(format!("expected body line, got {body_line:?}")))?;
        let body = parse_list(body)?;
        if body.len() != t {
            return Err(perr(format!(
                "header says t={t} but body lists {} vertices",
                body.len()
            )));
        }
        let mut spines = Vec::new();
        for line in lines {
            let rest = line
                .strip_prefix("spine")
                .ok_or_else(|| perr(format!("expected spine line, got {line:?}")))?;
            let (tip, v) = rest
                .split_once(':')
                .ok_or_else(|| perr(format!("spine line without ':' {line:?}")))?;
            let vs = parse_list(v)?;
            if vs.len() != 1 {
                return Err(perr(format!("spine line must name one vertex: {line:?}")));
            }
            spines.push(Spine {
                tip: parse_list(tip)?,
                vertex: vs[0],
            });
        }
        Ok(HedgehogEmbedding {
            k,
            colour,
            body,
            spines,
        })
    }
}

fn parse_list(s: &str) -> Result<Vec<usize>> {
    s.split_whitespace()
        .map(|tok| tok.parse().map_err(|_| Error::Parse(format!("bad vertex {tok:?}"))))
        .collect()
}
