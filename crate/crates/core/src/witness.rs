use std::fmt;
use std::str::FromStr;

use crate::colouring::{Colour, CompleteColouring};
use crate::error::Error;

/// A vertex set of a complete graph together with the colours on its internal edges.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CliqueWitness {
    pub vertices: Vec<usize>,
    /// Sorted, deduplicated colours appearing on edges inside `vertices`.
    pub colours: Vec<Colour>,
}

impl CliqueWitness {
    /// Build a witness, reading the colour census off `graph`.
    pub fn from_vertices(graph: &CompleteColouring, mut vertices: Vec<usize>) -> Self {
        vertices.sort_unstable();
        let mut mask = 0u64;
        let mut wide = Vec::new();
        for (i, &u) in vertices.iter().enumerate() {
            for &v in &vertices[i + 1..] {
                let c = graph.edge(u, v);
                if c < 64 {
                    mask |= 1 << c;
                } else if !wide.contains(&c) {
                    wide.push(c);
                }
            }
        }
        let mut colours: Vec<Colour> = (0..64).filter(|&c| mask >> c & 1 == 1).map(|c| c as Colour).collect();
        wide.sort_unstable();
        colours.extend(wide);
        CliqueWitness { vertices, colours }
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }
}

impl fmt::Display for CliqueWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CLIQUE v1 size={}\nvertices", self.vertices.len())?;
        for v in &self.vertices {
            write!(f, " {v}")?;
        }
        write!(f, "\ncolours")?;
        for c in &self.colours {
            write!(f, " {c}")?;
        }
        writeln!(f)
    }
}

impl FromStr for CliqueWitness {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self, Error> {
        let bad = |m: &str| Error::Parse(format!("clique certificate: {m}"));
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header = lines.next().ok_or_else(|| bad("empty"))?;
        let size: usize = header
            .strip_prefix("CLIQUE v1 size=")
            .and_then(|s| s.trim().parse().ok())
            .ok_or_else(|| bad("bad header"))?;
        let mut field = |name: &str| -> Result<Vec<usize>, Error> {
            let line = lines.next().ok_or_else(|| bad(&format!("missing {name} line")))?;
            let rest = line
                .strip_prefix(name)
                .ok_or_else(|| bad(&format!("expected {name} line")))?;
            rest.split_whitespace()
                .map(|tok| tok.parse().map_err(|_| bad(&format!("bad number {tok:?}"))))
                .collect()
        };
        let vertices = field("vertices")?;
        let colours = field("colours")?
            .into_iter()
            .map(|c| Colour::try_from(c).map_err(|_| bad("colour out of range")))
            .collect::<Result<Vec<_>, _>>()?;
        if vertices.len() != size {
            return Err(bad("size does not match the vertex list"));
        }
        Ok(CliqueWitness { vertices, colours })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_roundtrip() {
        let g = CompleteColouring::new(4, 2, 3, vec![0, 1, 2, 0, 1, 2]).unwrap();
        let w = CliqueWitness::from_vertices(&g, vec![3, 0, 1]);
        assert_eq!(w.to_string(), "CLIQUE v1 size=3\nvertices 0 1 3\ncolours 0 1\n");
        assert_eq!(w.to_string().parse::<CliqueWitness>().unwrap(), w);
        assert!("CLIQUE v1 size=2\nvertices 0\ncolours\n"
            .parse::<CliqueWitness>()
            .is_err());
    }
}
