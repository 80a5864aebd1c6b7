//! Dense colourings of the complete k-uniform hypergraph and the HCOL v1
//! text format.

use std::fmt::Write as _;
use std::io::{Read, Write};

use crate::combinadic::{binomial, for_each_subset, rank2, rank3, rank_unchecked, TABLE_K, TABLE_N};
use crate::error::{invalid, Error, Result};

/// Colour index. Every construction in the toolkit fits in one byte.
pub type Colour = u8;

pub const RED: Colour = 0;
pub const BLUE: Colour = 1;
pub const GREEN: Colour = 2;
pub const YELLOW: Colour = 3;

/// The three colours whose rainbow triangle is forbidden in Gallai-type colourings.
pub const RBG: [Colour; 3] = [RED, BLUE, GREEN];

/// A `q`-colouring of every `k`-subset of `[n]`, stored in colex rank order.
///
/// Immutable once built, so it can be shared across worker threads freely.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CompleteColouring {
    n: usize,
    k: usize,
    q: usize,
    colours: Vec<Colour>,
}

impl CompleteColouring {
    pub fn new(n: usize, k: usize, q: usize, colours: Vec<Colour>) -> Result<Self> {
        check_shape(n, k, q)?;
        let len = binomial(n, k);
        if colours.len() != len {
            return invalid(format!("expected C({n},{k}) = {len} colours, got {}", colours.len()));
        }
        if let Some((i, c)) = colours.iter().enumerate().find(|(_, &c)| c as usize >= q) {
            return invalid(format!("colour {c} at rank {i} is not below q = {q}"));
        }
        Ok(CompleteColouring { n, k, q, colours })
    }

    /// Every edge receives colour `c`.
    pub fn constant(n: usize, k: usize, q: usize, c: Colour) -> Result<Self> {
        check_shape(n, k, q)?;
        Self::new(n, k, q, vec![c; binomial(n, k)])
    }

    /// Build by calling `f` on each sorted k-subset in rank order.
    pub fn from_fn(n: usize, k: usize, q: usize, mut f: impl FnMut(&[usize]) -> Colour) -> Result<Self> {
        check_shape(n, k, q)?;
        let mut colours = Vec::with_capacity(binomial(n, k));
        for_each_subset(n, k, |s| colours.push(f(s)));
        Self::new(n, k, q, colours)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn colours(&self) -> &[Colour] {
        &self.colours
    }

    pub fn into_colours(self) -> Vec<Colour> {
        self.colours
    }

    pub fn len(&self) -> usize {
        self.colours.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colours.is_empty()
    }

    /// Colour of a strictly increasing k-subset.
    #[inline]
    pub fn colour(&self, subset: &[usize]) -> Colour {
        debug_assert_eq!(subset.len(), self.k);
        debug_assert!(subset.windows(2).all(|w| w[0] < w[1]));
        self.colours[rank_unchecked(subset)]
    }

    /// Colour of a subset given in any order.
    pub fn colour_unsorted(&self, subset: &[usize]) -> Colour {
        let mut s = subset.to_vec();
        s.sort_unstable();
        self.colour(&s)
    }

    #[inline]
    pub fn colour_at(&self, rank: usize) -> Colour {
        self.colours[rank]
    }

    /// Graph edge colour, endpoints in any order.
    #[inline]
    pub fn edge(&self, u: usize, v: usize) -> Colour {
        debug_assert_eq!(self.k, 2);
        let (a, b) = if u < v { (u, v) } else { (v, u) };
        self.colours[rank2(a, b)]
    }

    /// Triple colour, vertices in any order.
    #[inline]
    pub fn triple(&self, a: usize, b: usize, c: usize) -> Colour {
        debug_assert_eq!(self.k, 3);
        let mut s = [a, b, c];
        s.sort_unstable();
        self.colours[rank3(s[0], s[1], s[2])]
    }

    /// Number of edges of each colour.
    pub fn census(&self) -> Vec<usize> {
        let mut counts = vec![0; self.q];
        for &c in &self.colours {
            counts[c as usize] += 1;
        }
        counts
    }

    /// The colouring induced on `vertices`, relabelled `0..vertices.len()`
    /// in the order given.
    pub fn restrict(&self, vertices: &[usize]) -> Result<CompleteColouring> {
        let mut seen = vec![false; self.n];
        for &v in vertices {
            if v >= self.n || std::mem::replace(&mut seen[v], true) {
                return invalid(format!(
                    "restriction set {vertices:?} is not a set of vertices of [{}]",
                    self.n
                ));
            }
        }
        let mut buf = vec![0; self.k];
        Self::from_fn(vertices.len(), self.k, self.q, |s| {
            for (b, &i) in buf.iter_mut().zip(s) {
                *b = vertices[i];
            }
            self.colour_unsorted(&buf)
        })
    }

    /// Serialize in HCOL v1.
    pub fn to_hcol(&self) -> String {
        let mut out = String::with_capacity(self.colours.len() * 2 + 40);
        writeln!(out, "HCOL v1 n={} k={} q={}", self.n, self.k, self.q).unwrap();
        if self.q <= 16 {
            for &c in &self.colours {
                out.push(char::from_digit(c as u32, 16).unwrap());
            }
        } else {
            for (i, &c) in self.colours.iter().enumerate() {
                if i > 0 {
                    out.push(' ');
                }
                write!(out, "{c}").unwrap();
            }
        }
        out.push('\n');
        out
    }

    pub fn write_hcol(&self, mut w: impl Write) -> Result<()> {
        w.write_all(self.to_hcol().as_bytes())?;
        Ok(())
    }

    pub fn read_hcol(mut r: impl Read) -> Result<Self> {
        let mut text = String::new();
        r.read_to_string(&mut text)?;
        Self::from_hcol(&text)
    }

    /// Parse HCOL v1. Length mismatches and out-of-range colours are rejected.
    pub fn from_hcol(text: &str) -> Result<Self> {
        let (header, body) = text
            .split_once('\n')
            .ok_or_else(|| Error::Parse("missing header line".into()))?;
        let (n, k, q) = parse_header(header)?;
        check_shape(n, k, q).map_err(|e| Error::Parse(e.to_string()))?;
        let body = body.strip_suffix('\n').unwrap_or(body);
        let expected = binomial(n, k);
        let colours: Vec<Colour> = if q <= 16 {
            body.chars()
                .map(|ch| {
                    ch.to_digit(16)
                        .map(|d| d as Colour)
                        .ok_or_else(|| Error::Parse(format!("invalid hex colour {ch:?}")))
                })
                .collect::<Result<_>>()?
        } else {
            body.split_ascii_whitespace()
                .map(|tok| {
                    tok.parse::<Colour>()
                        .map_err(|_| Error::Parse(format!("invalid decimal colour {tok:?}")))
                })
                .collect::<Result<_>>()?
        };
        if colours.len() != expected {
            return Err(Error::Parse(format!(
                "length mismatch: header promises C({n},{k}) = {expected} colours, body has {}",
                colours.len()
            )));
        }
        Self::new(n, k, q, colours).map_err(|e| Error::Parse(e.to_string()))
    }
}

fn check_shape(n: usize, k: usize, q: usize) -> Result<()> {
    if !(2..=TABLE_K).contains(&k) {
        return invalid(format!("uniformity k = {k} outside 2..={TABLE_K}"));
    }
    if n > TABLE_N {
        return invalid(format!("n = {n} exceeds {TABLE_N}"));
    }
    if !(1..=256).contains(&q) {
        return invalid(format!("colour count q = {q} outside 1..=256"));
    }
    Ok(())
}

fn parse_header(line: &str) -> Result<(usize, usize, usize)> {
    let bad = || Error::Parse(format!("malformed header {line:?}"));
    let mut parts = line.split(' ');
    if parts.next() != Some("HCOL") || parts.next() != Some("v1") {
        return Err(bad());
    }
    let mut field = |name: &str| -> Result<usize> {
        parts
            .next()
            .and_then(|p| p.strip_prefix(name))
            .and_then(|p| p.strip_prefix('='))
            .and_then(|p| p.parse().ok())
            .ok_or_else(bad)
    };
    let n = field("n")?;
    let k = field("k")?;
    let q = field("q")?;
    if parts.next().is_some() {
        return Err(bad());
    }
    Ok((n, k, q))
}
