use std::fs;
use std::io::Write;

use hedgehog::colouring::{Colour, CompleteColouring};
use hedgehog::constructions::{
    complement_lift, find_scattered_colouring, gallai_lower_bound_witness, gallai_witness_with_base, kr_quad_lift,
    lex_product, quad_set_lift, random_colouring, ScatteredColouringSpec,
};
use hedgehog::extractors::{
    f_oracle_with, gallai_two_coloured_clique, spencer_guarantee, spencer_independent_set_with_trials,
    three_colour_pipeline, FOracleConfig, FWitness, GallaiColouring, ScaleOverrides, TriangleHypergraph,
};
use hedgehog::finder::{find_monochromatic_hedgehog, FinderError};
use hedgehog::hedgehog::HedgehogEmbedding;
use hedgehog::report::SearchReport;
use hedgehog::verifiers::{
    every_clique_all_colours, exhaustive_ramsey_check, has_monochromatic_hedgehog, rainbow_triangle_free,
    verify_clique_witness, verify_complement_lift, verify_embedding, verify_independent_set, RamseyVerdict,
};
use hedgehog::witness::CliqueWitness;

use crate::args::{Cli, Command, Extract, Find, Generate, Lift, Search, Verify};
use crate::io::{emit, read_colouring, read_text, CliError, CliResult, IndependentCert};
use crate::{batch, FAILED, OK, USAGE, VIOLATION};

pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let mut ctx = Ctx { cli, out, err };
    match ctx.dispatch() {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(ctx.err, "error: {e}");
            e.code
        }
    }
}

struct Ctx<'a> {
    cli: &'a Cli,
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
}

impl Ctx<'_> {
    fn report(&mut self, report: &SearchReport) -> CliResult<()> {
        match &self.cli.report {
            Some(p) => fs::write(p, report.to_string()).map_err(|e| CliError::usage(format!("{}: {e}", p.display()))),
            None => Ok(write!(self.err, "{report}")?),
        }
    }

    fn say(&mut self, msg: impl std::fmt::Display) -> CliResult<()> {
        Ok(writeln!(self.out, "{msg}")?)
    }

    fn reject(&mut self, msg: impl std::fmt::Display) -> CliResult {
        writeln!(self.out, "rejected: {msg}")?;
        Ok(VIOLATION)
    }

    fn dispatch(&mut self) -> CliResult {
        match &self.cli.command {
            Command::Generate(g) => self.generate(g),
            Command::Lift(l) => self.lift(l),
            Command::Find(f) => self.find(f),
            Command::Extract(x) => self.extract(x),
            Command::Pipeline(p) => {
                let c = read_colouring(&p.input)?;
                let mut scale: ScaleOverrides = p.scale.parse()?;
                scale.seed = p.seed;
                let mut report = SearchReport::new("three_colour_pipeline", Some(p.seed))
                    .param("t", p.t)
                    .param("n", c.n())
                    .param("scale", &p.scale);
                report.tries = 1;
                let code = match three_colour_pipeline(&c, p.t, scale) {
                    Ok(o) => {
                        report.outcome = format!(
                            "found at stage {} (independent set {}, red-blue-green triangles {})",
                            o.trace.finished_at.unwrap_or(0),
                            o.trace.independent_set.len(),
                            o.trace.rbg_triangles
                        );
                        emit(&p.out, &o.embedding.to_string(), self.out)?;
                        OK
                    }
                    Err(f) => {
                        report.outcome = f.to_string();
                        writeln!(self.err, "{f}")?;
                        FAILED
                    }
                };
                self.report(&report)?;
                Ok(code)
            }
            Command::Verify(v) => self.verify(v),
            Command::Search(Search::Exhaustive { t, q, n }) => {
                let mut report = SearchReport::new("exhaustive_ramsey_check", None)
                    .param("t", t)
                    .param("q", q)
                    .param("n", n);
                let code = match exhaustive_ramsey_check(*t, *q, *n)? {
                    RamseyVerdict::Holds { colourings_checked } => {
                        report.tries = colourings_checked;
                        report.outcome = "holds".into();
                        self.say(format!(
                            "holds: every {q}-colouring of K_{n}^(3) contains a monochromatic H_{t}"
                        ))?;
                        OK
                    }
                    RamseyVerdict::Counterexample(c) => {
                        report.outcome = "counterexample".into();
                        self.say(format!("counterexample: no monochromatic H_{t} in"))?;
                        write!(self.out, "{}", c.to_hcol())?;
                        VIOLATION
                    }
                };
                self.report(&report)?;
                Ok(code)
            }
            Command::FOracle(a) => {
                let cfg = FOracleConfig {
                    seed: a.seed,
                    restarts: a.restarts,
                    steps: a.steps,
                    cross_check: a.cross_check,
                    ..FOracleConfig::default()
                };
                let res = f_oracle_with(a.t, a.cap, cfg)?;
                let show = |x: Option<bool>| match x {
                    Some(true) => "witness",
                    Some(false) => "none",
                    None => "-",
                };
                writeln!(self.out, "n\texhaustive\tlocal-search")?;
                for s in &res.steps {
                    writeln!(self.out, "{}\t{}\t{}", s.n, show(s.exhaustive), show(s.local_search))?;
                }
                self.say(format!("F({}) {}", a.t, res.value))?;
                if let Some(w) = &res.witness {
                    write!(self.out, "{}", w.colouring().to_hcol())?;
                }
                self.report(&res.report)?;
                if res.steps.iter().any(|s| !s.consistent()) {
                    writeln!(
                        self.err,
                        "local search found a witness that exhaustive search ruled out"
                    )?;
                    return Ok(VIOLATION);
                }
                Ok(OK)
            }
            Command::Batch(b) => batch::run(self.cli, b, self.out, self.err),
        }
    }

    fn generate(&mut self, g: &Generate) -> CliResult {
        match g {
            Generate::Random { n, k, q, seed, out } => {
                let c = random_colouring(*n, *k, *q, *seed)?;
                let mut report = SearchReport::new("random_colouring", Some(*seed))
                    .param("n", n)
                    .param("k", k)
                    .param("q", q);
                report.tries = 1;
                report.winning_seed = Some(*seed);
                report.outcome = "generated".into();
                emit(out, &c.to_hcol(), self.out)?;
                self.report(&report)?;
                Ok(OK)
            }
            Generate::Scattered {
                n,
                t,
                q,
                seed,
                max_tries,
                steps,
                mode,
                out,
            } => {
                let spec = ScatteredColouringSpec {
                    max_tries: *max_tries,
                    steps: *steps,
                    search_mode: *mode,
                    ..ScatteredColouringSpec::new(*n, *t, *q, *seed)
                };
                let res = find_scattered_colouring(&spec)?;
                self.report(&res.report)?;
                match res.colouring {
                    Some(c) => {
                        emit(out, &c.to_hcol(), self.out)?;
                        Ok(OK)
                    }
                    None => {
                        writeln!(self.err, "no scattered colouring found: {}", res.report.outcome)?;
                        Ok(FAILED)
                    }
                }
            }
            Generate::GallaiWitness {
                t,
                seed,
                base,
                max_tries,
                out,
            } => {
                let res = match base {
                    Some(b) => gallai_witness_with_base(*t, *b, *seed, *max_tries)?,
                    None => gallai_lower_bound_witness(*t, *seed)?,
                };
                self.report(&res.report)?;
                match res.witness {
                    Some(w) => {
                        writeln!(
                            self.err,
                            "n = {}, no clique of order {} on three colours; certifies F({t}) > {}: {}",
                            w.colouring.n(),
                            w.clique_bound,
                            w.colouring.n(),
                            w.certifies_f_lower_bound()
                        )?;
                        emit(out, &w.colouring.to_hcol(), self.out)?;
                        Ok(OK)
                    }
                    None => {
                        writeln!(self.err, "no witness: {}", res.report.outcome)?;
                        Ok(FAILED)
                    }
                }
            }
        }
    }

    fn lift(&mut self, l: &Lift) -> CliResult {
        let (lifted, out) = match l {
            Lift::Complement { input, palette, out } => {
                let g = read_colouring(input)?;
                let palette = palette_or_all(palette, &g)?;
                (complement_lift(&g, &palette)?, out)
            }
            Lift::KrQuad { input, out } => (kr_quad_lift(&read_colouring(input)?)?, out),
            Lift::QuadSet { input, out } => (quad_set_lift(&read_colouring(input)?)?, out),
            Lift::LexProduct { input, inner, out } => {
                (lex_product(&read_colouring(input)?, &read_colouring(inner)?)?, out)
            }
        };
        emit(out, &lifted.to_hcol(), self.out)?;
        Ok(OK)
    }

    fn find(&mut self, f: &Find) -> CliResult {
        let Find::Hedgehog { t, input, colour, out } = f;
        let c = read_colouring(input)?;
        let mut report = SearchReport::new("find_hedgehog", None)
            .param("t", t)
            .param("n", c.n())
            .param("colour", colour);
        report.tries = 1;
        let found = if colour == "auto" {
            match find_monochromatic_hedgehog(&c, *t) {
                Ok(e) => Some(e),
                Err(FinderError::InvalidArgument(m)) => return Err(CliError::usage(m)),
                Err(e @ FinderError::Rejected(_)) => {
                    writeln!(self.err, "{e}")?;
                    return Ok(VIOLATION);
                }
                Err(e) => {
                    report.outcome = e.to_string();
                    None
                }
            }
        } else {
            let col: Colour = colour
                .parse()
                .map_err(|_| CliError::usage(format!("--colour must be `auto` or a colour number, got {colour:?}")))?;
            if col as usize >= c.q() {
                return Err(CliError::usage(format!("colour {col} not below q = {}", c.q())));
            }
            let e = has_monochromatic_hedgehog(&c, *t, col);
            if e.is_none() {
                report.outcome = format!("no hedgehog of colour {col}");
            }
            e
        };
        let code = match found {
            Some(e) => {
                report.outcome = format!("found colour {}", e.colour);
                emit(out, &e.to_string(), self.out)?;
                OK
            }
            None => {
                writeln!(self.err, "not found: {}", report.outcome)?;
                FAILED
            }
        };
        self.report(&report)?;
        Ok(code)
    }

    fn extract(&mut self, x: &Extract) -> CliResult {
        match x {
            Extract::Spencer {
                input,
                seed,
                trials,
                out,
            } => {
                let c = read_colouring(input)?;
                let h = colour_one_triples(&c)?;
                let set = spencer_independent_set_with_trials(&h, *seed, *trials);
                let bound = spencer_guarantee(c.n(), h.edges.len());
                let mut report = SearchReport::new("spencer_independent_set", Some(*seed))
                    .param("n", c.n())
                    .param("edges", h.edges.len())
                    .param("trials", trials);
                report.tries = trials + 1;
                report.outcome = format!("size {} (guaranteed {bound})", set.len());
                self.report(&report)?;
                if set.len() < bound {
                    writeln!(
                        self.err,
                        "independent set of size {} is below the guarantee {bound}",
                        set.len()
                    )?;
                    return Ok(VIOLATION);
                }
                emit(
                    out,
                    &IndependentCert {
                        n: c.n(),
                        vertices: set,
                    }
                    .to_string(),
                    self.out,
                )?;
                Ok(OK)
            }
            Extract::Gallai { input, out } => {
                let g = GallaiColouring::new(read_colouring(input)?)?;
                let w = gallai_two_coloured_clique(&g)?;
                emit(out, &w.to_string(), self.out)?;
                Ok(OK)
            }
        }
    }

    fn verify(&mut self, v: &Verify) -> CliResult {
        match v {
            Verify::Embedding { input, cert } => {
                let host = read_colouring(input)?;
                let emb: HedgehogEmbedding = read_text(cert)?.parse()?;
                match verify_embedding(&emb, &host) {
                    Ok(()) => self.ok(format!("valid H_{} of colour {}", emb.t(), emb.colour)),
                    Err(e) => self.reject(e),
                }
            }
            Verify::Lift {
                input,
                base,
                t,
                palette,
            } => {
                let lifted = read_colouring(input)?;
                let base = read_colouring(base)?;
                let palette = palette_or_all(palette, &base)?;
                if let Err(e) = verify_complement_lift(&base, &lifted, &palette) {
                    return self.reject(format!("not a complement lift: {e}"));
                }
                if let Some(w) = every_clique_all_colours(&base, *t, base.q()) {
                    return self.reject(format!(
                        "base is not scattered: clique {:?} uses {:?}",
                        w.vertices, w.colours
                    ));
                }
                for col in 0..lifted.q() as Colour {
                    if let Some(e) = has_monochromatic_hedgehog(&lifted, *t, col) {
                        writeln!(self.out, "rejected: the lift contains a monochromatic hedgehog")?;
                        write!(self.out, "{e}")?;
                        return Ok(VIOLATION);
                    }
                }
                self.ok(format!(
                    "sound: no monochromatic H_{t} in any of {} colours",
                    lifted.q()
                ))
            }
            Verify::Scattered { input, t } => {
                let c = read_colouring(input)?;
                if c.k() != 2 {
                    return Err(CliError::usage("scattered check needs a graph colouring (k = 2)"));
                }
                match every_clique_all_colours(&c, *t, c.q()) {
                    None => self.ok(format!("every {t}-clique shows all {} colours", c.q())),
                    Some(w) => self.reject(format!("clique {:?} uses only {:?}", w.vertices, w.colours)),
                }
            }
            Verify::Rainbow { input, palette } => {
                let c = read_colouring(input)?;
                let p: [Colour; 3] = palette
                    .as_slice()
                    .try_into()
                    .map_err(|_| CliError::usage("--palette needs exactly three colours"))?;
                if c.k() != 2 {
                    return Err(CliError::usage("rainbow check needs a graph colouring (k = 2)"));
                }
                match rainbow_triangle_free(&c, p) {
                    None => self.ok(format!("no triangle coloured {p:?}")),
                    Some(tri) => self.reject(format!("triangle {tri:?} uses {p:?}")),
                }
            }
            Verify::FWitness { input, t } => {
                let c = read_colouring(input)?;
                if c.k() != 2 || c.q() != 4 {
                    return Err(CliError::usage("F-witness needs a 4-colouring of K_n"));
                }
                let n = c.n();
                match FWitness::verify(*t, c) {
                    Ok(_) => self.ok(format!("F({t}) > {n}")),
                    Err(e) => self.reject(e),
                }
            }
            Verify::Clique {
                input,
                cert,
                max_colours,
            } => {
                let c = read_colouring(input)?;
                if c.k() != 2 {
                    return Err(CliError::usage("clique check needs a graph colouring (k = 2)"));
                }
                let w: CliqueWitness = read_text(cert)?.parse()?;
                match verify_clique_witness(&c, &w, *max_colours) {
                    Ok(()) => self.ok(format!("clique of order {} with colours {:?}", w.len(), w.colours)),
                    Err(e) => self.reject(e),
                }
            }
            Verify::Independent { input, cert } => {
                let c = read_colouring(input)?;
                let h = colour_one_triples(&c)?;
                let cert: IndependentCert = read_text(cert)?.parse()?;
                if cert.n != c.n() {
                    return self.reject(format!(
                        "certificate is for n = {}, colouring has n = {}",
                        cert.n,
                        c.n()
                    ));
                }
                match verify_independent_set(c.n(), &h.edges, &cert.vertices) {
                    Ok(()) => self.ok(format!("independent set of size {}", cert.vertices.len())),
                    Err(e) => self.reject(e),
                }
            }
        }
    }

    fn ok(&mut self, msg: impl std::fmt::Display) -> CliResult {
        writeln!(self.out, "ok: {msg}")?;
        Ok(OK)
    }
}

/// The explicit palette, or every colour of `g`.
fn palette_or_all(palette: &Option<Vec<u8>>, g: &CompleteColouring) -> CliResult<Vec<Colour>> {
    Ok(match palette {
        Some(p) if p.is_empty() => {
            return Err(CliError {
                code: USAGE,
                message: "empty palette".into(),
            })
        }
        Some(p) => p.clone(),
        None => (0..g.q() as Colour).collect(),
    })
}

/// The 3-uniform hypergraph of colour-1 triples.
fn colour_one_triples(c: &CompleteColouring) -> CliResult<TriangleHypergraph> {
    if c.k() != 3 {
        return Err(CliError::usage(
            "expected a colouring of triples (k = 3) whose colour-1 triples are the edges",
        ));
    }
    let n = c.n();
    let mut edges = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            for d in b + 1..n {
                if c.triple(a, b, d) == 1 {
                    edges.push([a, b, d]);
                }
            }
        }
    }
    Ok(TriangleHypergraph::new(n, edges)?)
}
