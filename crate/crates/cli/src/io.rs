use std::fmt;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use hedgehog::colouring::CompleteColouring;
use hedgehog::error::Error;

use crate::{REFUSED, USAGE, VIOLATION};

/// An error carrying the exit code it maps to.
#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    pub fn usage(message: impl Into<String>) -> Self {
        CliError {
            code: USAGE,
            message: message.into(),
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Refused { .. } => REFUSED,
            Error::PreconditionViolated { .. } | Error::GuaranteeViolated(_) => VIOLATION,
            _ => USAGE,
        };
        CliError {
            code,
            message: e.to_string(),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::usage(e.to_string())
    }
}

pub type CliResult<T = i32> = Result<T, CliError>;

pub fn read_text(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|e| CliError::usage(format!("{}: {e}", path.display())))
}

pub fn read_colouring(path: &Path) -> CliResult<CompleteColouring> {
    let text = read_text(path)?;
    CompleteColouring::from_hcol(&text).map_err(|e| CliError::usage(format!("{}: {e}", path.display())))
}

/// Write `text` to `path` if given, else to `out`.
pub fn emit(path: &Option<PathBuf>, text: &str, out: &mut dyn Write) -> CliResult<()> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| CliError::usage(format!("{}: {e}", p.display()))),
        None => Ok(out.write_all(text.as_bytes())?),
    }
}

/// Certificate for an independent set of the hypergraph of colour-1 triples.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndependentCert {
    pub n: usize,
    pub vertices: Vec<usize>,
}

impl fmt::Display for IndependentCert {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "INDEPENDENT v1 n={} size={}\nvertices", self.n, self.vertices.len())?;
        for v in &self.vertices {
            write!(f, " {v}")?;
        }
        writeln!(f)
    }
}

impl std::str::FromStr for IndependentCert {
    type Err = CliError;

    fn from_str(text: &str) -> CliResult<Self> {
        let bad = |m: &str| CliError::usage(format!("independent-set certificate: {m}"));
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header = lines.next().ok_or_else(|| bad("empty"))?;
        let mut parts = header.split_whitespace();
        if parts.next() != Some("INDEPENDENT") || parts.next() != Some("v1") {
            return Err(bad("bad header"));
        }
        let mut kv = |key: &str| -> CliResult<usize> {
            parts
                .next()
                .and_then(|p| p.strip_prefix(key))
                .and_then(|p| p.strip_prefix('='))
                .and_then(|p| p.parse().ok())
                .ok_or_else(|| bad("bad header"))
        };
        let n = kv("n")?;
        let size = kv("size")?;
        let line = lines.next().ok_or_else(|| bad("missing vertices line"))?;
        let vertices = line
            .strip_prefix("vertices")
            .ok_or_else(|| bad("expected vertices line"))?
            .split_whitespace()
            .map(|tok| tok.parse().map_err(|_| bad(&format!("bad number {tok:?}"))))
            .collect::<CliResult<Vec<usize>>>()?;
        if vertices.len() != size {
            return Err(bad("size does not match the vertex list"));
        }
        Ok(IndependentCert { n, vertices })
    }
}
