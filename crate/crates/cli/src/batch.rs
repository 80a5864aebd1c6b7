//! Manifest runner. Each entry runs in-process with its own captured output;
//! worker threads come from the global pool, so an entry's own `--threads`
//! has no effect.

use std::io::Write;
use std::time::Instant;

use rayon::prelude::*;

use crate::args::{BatchArgs, Cli};
use crate::io::{read_text, CliError, CliResult};
use crate::{run_args, FAILED, OK};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Entry {
    pub line: usize,
    pub expect: i32,
    pub argv: Vec<String>,
}

#[derive(Clone, Debug)]
struct Outcome {
    code: i32,
    millis: u128,
    stdout: Vec<u8>,
    stderr: Vec<u8>,
}

pub fn parse_manifest(text: &str) -> CliResult<Vec<Entry>> {
    let mut entries = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let mut argv: Vec<String> = line.split_whitespace().map(str::to_string).collect();
        let mut expect = OK;
        if let Some(v) = argv[0].strip_prefix("expect=") {
            expect = v
                .parse()
                .map_err(|_| CliError::usage(format!("manifest line {}: bad expect value {v:?}", i + 1)))?;
            argv.remove(0);
            if argv.is_empty() {
                return Err(CliError::usage(format!(
                    "manifest line {}: no command after expect=",
                    i + 1
                )));
            }
        }
        entries.push(Entry {
            line: i + 1,
            expect,
            argv,
        });
    }
    Ok(entries)
}

fn run_entry(e: &Entry) -> Outcome {
    let mut stdout = Vec::new();
    let mut stderr = Vec::new();
    let start = Instant::now();
    let argv = std::iter::once("hedgehog".to_string()).chain(e.argv.iter().cloned());
    let code = run_args(argv, &mut stdout, &mut stderr);
    Outcome {
        code,
        millis: start.elapsed().as_millis(),
        stdout,
        stderr,
    }
}

pub fn run(_cli: &Cli, args: &BatchArgs, out: &mut dyn Write, err: &mut dyn Write) -> CliResult {
    let entries = parse_manifest(&read_text(&args.manifest)?)?;
    let outcomes: Vec<Outcome> = if args.parallel {
        entries.par_iter().map(run_entry).collect()
    } else {
        entries.iter().map(run_entry).collect()
    };

    writeln!(
        out,
        "{:<5} {:<6} {:>4} {:>6} {:>8}  command",
        "line", "result", "exit", "expect", "ms"
    )?;
    let mut failures = 0;
    for (e, o) in entries.iter().zip(&outcomes) {
        let pass = o.code == e.expect;
        if !pass {
            failures += 1;
        }
        writeln!(
            out,
            "{:<5} {:<6} {:>4} {:>6} {:>8}  {}",
            e.line,
            if pass { "pass" } else { "FAIL" },
            o.code,
            e.expect,
            o.millis,
            e.argv.join(" ")
        )?;
    }
    writeln!(
        out,
        "{} entries, {} passed, {} failed",
        entries.len(),
        entries.len() - failures,
        failures
    )?;

    for (e, o) in entries.iter().zip(&outcomes) {
        if o.code != e.expect {
            writeln!(err, "--- line {}: {}", e.line, e.argv.join(" "))?;
            err.write_all(&o.stderr)?;
            let text = String::from_utf8_lossy(&o.stdout);
            for l in text
                .lines()
                .filter(|l| l.starts_with("rejected") || l.starts_with("error"))
            {
                writeln!(err, "{l}")?;
            }
        }
    }
    Ok(if failures == 0 { OK } else { FAILED })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn manifest_syntax() {
        let text =
            "# header\n\ngenerate random -n 5 -q 2 --seed 1  # trailing\nexpect=2 verify scattered --in x --t 3\n";
        let entries = parse_manifest(text).unwrap();
        assert_eq!(entries.len(), 2);
        assert_eq!(entries[0].line, 3);
        assert_eq!(entries[0].expect, 0);
        assert_eq!(entries[0].argv[0], "generate");
        assert_eq!(entries[1].expect, 2);
        assert_eq!(entries[1].argv[..2], ["verify", "scattered"]);
        assert!(parse_manifest("expect=x find\n").is_err());
        assert!(parse_manifest("expect=1\n").is_err());
        assert!(parse_manifest("").unwrap().is_empty());
    }
}
