//! `globcat`: validate presentations, run law suites and build constructions
//! from the command line.
//!
//! Exit status is 0 when every verdict holds or a construction succeeded, 1
//! when a verdict is false, and 2 when the input could not be used.

use std::path::{Path as FsPath, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use globcat::fincat::{
    are_equivalent_bruteforce, check_adjoint_equivalence, check_cat_span, check_category_laws, check_functor_laws,
    check_naturality, functor_props, pseudo_inverse, pullback_category,
};
use globcat::fusion::{equivalence_fusion, fuse_to_span, projection_u, projection_v};
use globcat::globular::{equivalence_profile, is_faithful_on, is_full_on, is_injective_on, is_surjective_on};
use globcat::limits::pullback_globular;
use globcat::one_alg::{check_algebra_laws, nerve, DEFAULT_BOUND};
use globcat::pres::{parse, Entry, Item, Kind, SpanBody};
use globcat::report::DEFAULT_WITNESS_LIMIT;
use globcat::span::{compose_spans, is_span_equivalence};
use globcat::{CatSpan, DiagnosticKind, Document, PropertyReport};

mod suite;

#[derive(Parser)]
#[command(
    name = "globcat",
    version,
    about = "Finite globular sets, spans and equivalences of finite categories"
)]
struct Cli {
    /// Witnesses shown per failing check.
    #[arg(long, global = true, default_value_t = DEFAULT_WITNESS_LIMIT)]
    witness_limit: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Out {
    /// Output file; standard output when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Parse a file and list what it contains.
    Validate { file: String },
    /// Surjectivity, injectivity, fullness and faithfulness of a globular map.
    Props {
        #[arg(long)]
        map: String,
        /// Restrict to one dimension; without it the equivalence profile is checked.
        #[arg(long)]
        k: Option<usize>,
    },
    /// Pullback of two maps (or two functors) with a common codomain.
    Pullback {
        f: String,
        g: String,
        #[command(flatten)]
        out: Out,
    },
    #[command(subcommand)]
    Span(SpanCommand),
    /// Run the law suite of every category, functor, transformation,
    /// adjoint equivalence and algebra in a file.
    Laws {
        file: String,
        #[arg(long, default_value_t = DEFAULT_BOUND)]
        bound: usize,
    },
    /// Equivalence fusion of an adjoint equivalence, with its projections.
    Fuse {
        #[arg(long)]
        adjequiv: String,
        #[command(flatten)]
        out: Out,
    },
    /// One projection out of the fusion.
    Project {
        #[arg(long)]
        adjequiv: String,
        #[arg(long, value_enum)]
        side: Side,
        #[command(flatten)]
        out: Out,
    },
    /// Adjoint pseudo-inverse of a surjective, full and faithful functor.
    PseudoInverse {
        #[arg(long)]
        functor: String,
        #[command(flatten)]
        out: Out,
    },
    /// Nerve of a category as a tabulated algebra.
    Nerve {
        file: String,
        #[command(flatten)]
        out: Out,
    },
    #[command(subcommand)]
    Alg(AlgCommand),
    /// Exhaustive search for an adjoint equivalence between two small categories.
    EquivSearch {
        a: String,
        b: String,
        #[command(flatten)]
        out: Out,
    },
    /// Randomized law suite over generated instances.
    Suite {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        cases: usize,
    },
}

#[derive(Subcommand)]
enum SpanCommand {
    /// Check that a span is a span equivalence.
    Check { file: String },
    /// Compose two spans by pullback.
    Compose {
        s1: String,
        s2: String,
        #[command(flatten)]
        out: Out,
    },
}

#[derive(Subcommand)]
enum AlgCommand {
    /// Algebra laws up to a path length bound.
    Check {
        file: String,
        #[arg(long, default_value_t = DEFAULT_BOUND)]
        bound: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Side {
    U,
    V,
}

/// Why a command could not produce a verdict.
#[derive(Debug)]
enum Failure {
    /// Unusable input: exit 2.
    Input(String),
    /// The input parsed but only law violations were found: exit 1.
    Violations(String),
}

type Outcome = Result<bool, Failure>;

fn input(e: impl std::fmt::Display) -> Failure {
    Failure::Input(e.to_string())
}

/// Splits `file@name` into a path and an optional entry name.
fn locate(sel: &str) -> (PathBuf, Option<String>) {
    if !FsPath::new(sel).exists() {
        if let Some((path, name)) = sel.rsplit_once('@') {
            return (PathBuf::from(path), Some(name.to_owned()));
        }
    }
    (PathBuf::from(sel), None)
}

fn diagnostics_text(path: &FsPath, diags: &[globcat::Diagnostic]) -> String {
    diags.iter().map(|d| format!("{}:{d}\n", path.display())).collect()
}

fn load(path: &FsPath) -> Result<Document, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| input(format!("{}: {e}", path.display())))?;
    parse(&text).map_err(|d| Failure::Input(diagnostics_text(path, &d).trim_end().to_owned()))
}

fn select(sel: &str, kind: Kind) -> Result<(Document, Entry), Failure> {
    let (path, name) = locate(sel);
    let doc = load(&path)?;
    let entry = doc
        .select(kind, name.as_deref())
        .map_err(|e| input(format!("{}: {e}", path.display())))?
        .clone();
    Ok((doc, entry))
}

fn has_kind(sel: &str, kind: Kind) -> Result<bool, Failure> {
    let (path, _) = locate(sel);
    Ok(load(&path)?.of_kind(kind).next().is_some())
}

fn emit(doc: &Document, out: &Out, summary: &str) -> Outcome {
    match &out.out {
        Some(path) => {
            std::fs::write(path, doc.to_string()).map_err(|e| input(format!("{}: {e}", path.display())))?;
            println!("wrote {}: {summary}", path.display());
        }
        None => print!("{doc}"),
    }
    Ok(true)
}

fn report(r: &PropertyReport, limit: usize) -> bool {
    print!("{}", r.render(limit));
    r.verdict()
}

fn entry_label(e: &Entry) -> String {
    match &e.name {
        Some(n) => format!("{} {n}", e.item.kind()),
        None => e.item.kind().to_string(),
    }
}

fn validate(file: &str) -> Outcome {
    let (path, _) = locate(file);
    let text = std::fs::read_to_string(&path).map_err(|e| input(format!("{}: {e}", path.display())))?;
    match parse(&text) {
        Ok(doc) => {
            for e in doc.entries() {
                let size = match &e.item {
                    Item::Globular(x) => {
                        (0..=x.dim())
                            .map(|k| x.len(k).to_string())
                            .collect::<Vec<_>>()
                            .join("/")
                            + " cells"
                    }
                    Item::Category(c) => format!("{} objects, {} morphisms", c.num_objects(), c.num_morphisms()),
                    Item::Map { domain, codomain, .. } | Item::Functor { domain, codomain, .. } => {
                        format!("{domain} -> {codomain}")
                    }
                    Item::Nat { source, target, .. } => format!("{source} => {target}"),
                    Item::AdjEquiv { s, t, .. } => format!("{s}, {t}"),
                    Item::Span { left, right, .. } => format!("{left}, {right}"),
                    Item::Algebra { carrier, .. } => format!("over {carrier}"),
                };
                println!("{}: {size}", entry_label(e));
            }
            println!("valid: true");
            Ok(true)
        }
        Err(diags) => {
            let text = diagnostics_text(&path, &diags);
            if diags.iter().all(|d| d.kind == DiagnosticKind::Violation) {
                Err(Failure::Violations(text))
            } else {
                Err(Failure::Input(text.trim_end().to_owned()))
            }
        }
    }
}

fn props(map: &str, k: Option<usize>, limit: usize) -> Outcome {
    let (_, entry) = select(map, Kind::Map)?;
    let Item::Map { map: f, .. } = &entry.item else {
        unreachable!()
    };
    let r = match k {
        None => equivalence_profile(f),
        Some(k) => {
            let mut parts = vec![
                is_surjective_on(f, k).map_err(input)?,
                is_injective_on(f, k).map_err(input)?,
            ];
            if k > 0 {
                parts.push(is_full_on(f, k).map_err(input)?);
                parts.push(is_faithful_on(f, k).map_err(input)?);
            }
            for p in &mut parts {
                p.name = p.name.split_whitespace().next().unwrap_or_default().to_owned();
            }
            PropertyReport::all(format!("{} on {k}-cells", entry_label(&entry)), parts)
        }
    };
    Ok(report(&r, limit))
}

fn pullback(f: &str, g: &str, out: &Out) -> Outcome {
    let mut doc = Document::new();
    if has_kind(f, Kind::Map)? {
        let (_, ef) = select(f, Kind::Map)?;
        let (_, eg) = select(g, Kind::Map)?;
        let (Item::Map { map: fm, .. }, Item::Map { map: gm, .. }) = (&ef.item, &eg.item) else {
            unreachable!()
        };
        let pb = pullback_globular(fm, gm).map_err(input)?;
        doc.add_map("f", fm.clone());
        doc.add_map("g", gm.clone());
        let sizes: Vec<String> = (0..=pb.apex.dim()).map(|k| pb.apex.len(k).to_string()).collect();
        let span = globcat::Span::new(pb.left, pb.right).map_err(input)?;
        let name = doc.add_span("P", span);
        emit(
            &doc,
            out,
            &format!("span {name} with apex of {} cells", sizes.join("/")),
        )
    } else {
        let (_, ef) = select(f, Kind::Functor)?;
        let (_, eg) = select(g, Kind::Functor)?;
        let (Item::Functor { functor: ff, .. }, Item::Functor { functor: gf, .. }) = (&ef.item, &eg.item) else {
            unreachable!()
        };
        let pb = pullback_category(ff, gf).map_err(input)?;
        let summary = format!(
            "apex with {} objects, {} morphisms",
            pb.apex.num_objects(),
            pb.apex.num_morphisms()
        );
        let span = CatSpan::new(pb.left, pb.right).map_err(input)?;
        doc.add_cat_span("P", span);
        emit(&doc, out, &summary)
    }
}

fn span_body(sel: &str) -> Result<SpanBody, Failure> {
    let (_, entry) = select(sel, Kind::Span)?;
    let Item::Span { body, .. } = entry.item else {
        unreachable!()
    };
    Ok(body)
}

fn span_check(file: &str, limit: usize) -> Outcome {
    let r = match span_body(file)? {
        SpanBody::Globular(s) => is_span_equivalence(&s),
        SpanBody::Category(s) => check_cat_span(&s),
    };
    Ok(report(&r, limit))
}

fn span_compose(s1: &str, s2: &str, out: &Out) -> Outcome {
    let mut doc = Document::new();
    match (span_body(s1)?, span_body(s2)?) {
        (SpanBody::Globular(a), SpanBody::Globular(b)) => {
            doc.add_span("S", compose_spans(&a, &b).map_err(input)?);
        }
        (SpanBody::Category(a), SpanBody::Category(b)) => {
            let pb = pullback_category(a.right(), b.left()).map_err(input)?;
            let left = a.left().after(&pb.left).map_err(input)?;
            let right = b.right().after(&pb.right).map_err(input)?;
            doc.add_cat_span("S", CatSpan::new(left, right).map_err(input)?);
        }
        _ => {
            return Err(input(
                "cannot compose a span of globular sets with a span of categories",
            ))
        }
    }
    emit(&doc, out, "composite span")
}

fn laws(file: &str, bound: usize, limit: usize) -> Outcome {
    let (path, name) = locate(file);
    let doc = load(&path)?;
    let mut parts = Vec::new();
    for e in doc.entries() {
        if name.is_some() && e.name != name {
            continue;
        }
        let mut r = match &e.item {
            Item::Category(c) => check_category_laws(c),
            Item::Functor { functor, .. } => check_functor_laws(functor),
            Item::Nat { nat, .. } => check_naturality(nat),
            Item::AdjEquiv { equivalence: q, .. } => check_adjoint_equivalence(q.s(), q.t(), q.eta(), q.eps()),
            Item::Algebra { algebra, .. } => check_algebra_laws(algebra, bound).map_err(input)?,
            _ => continue,
        };
        r.name = entry_label(e);
        parts.push(r);
    }
    if parts.is_empty() {
        return Err(input(format!("{}: nothing with laws to check", path.display())));
    }
    Ok(report(&PropertyReport::all("laws", parts), limit))
}

fn equivalence(sel: &str) -> Result<globcat::AdjointEquivalence, Failure> {
    let (_, entry) = select(sel, Kind::AdjEquiv)?;
    let Item::AdjEquiv { equivalence, .. } = entry.item else {
        unreachable!()
    };
    Ok(equivalence)
}

fn fuse(adjequiv: &str, out: &Out) -> Outcome {
    let e = equivalence(adjequiv)?;
    let (fusion, span) = fuse_to_span(&e);
    let c = fusion.category();
    let mut doc = Document::new();
    doc.add_cat_span("fusion", span);
    emit(
        &doc,
        out,
        &format!(
            "fusion with {} objects, {} morphisms",
            c.num_objects(),
            c.num_morphisms()
        ),
    )
}

fn project(adjequiv: &str, side: Side, out: &Out) -> Outcome {
    let fusion = equivalence_fusion(&equivalence(adjequiv)?);
    let (name, functor) = match side {
        Side::U => ("u", projection_u(&fusion)),
        Side::V => ("v", projection_v(&fusion)),
    };
    let mut doc = Document::new();
    doc.add_functor(name, functor);
    emit(&doc, out, &format!("projection {name}"))
}

fn pseudo_inverse_cmd(functor: &str, out: &Out, limit: usize) -> Outcome {
    let (_, entry) = select(functor, Kind::Functor)?;
    let Item::Functor { functor: f, .. } = &entry.item else {
        unreachable!()
    };
    let props = functor_props(f);
    if !props.verdict() {
        return Ok(report(&props, limit));
    }
    let e = pseudo_inverse(f).map_err(input)?;
    let mut doc = Document::new();
    doc.add_equivalence("E", e);
    emit(&doc, out, "adjoint equivalence")
}

fn nerve_cmd(file: &str, out: &Out) -> Outcome {
    let (_, entry) = select(file, Kind::Category)?;
    let Item::Category(c) = &entry.item else { unreachable!() };
    let mut doc = Document::new();
    let name = doc.add_algebra("N", &nerve(c)).map_err(input)?;
    emit(&doc, out, &format!("algebra {name}"))
}

fn alg_check(file: &str, bound: usize, limit: usize) -> Outcome {
    let (_, entry) = select(file, Kind::Algebra)?;
    let Item::Algebra { algebra, .. } = &entry.item else {
        unreachable!()
    };
    let mut r = check_algebra_laws(algebra, bound).map_err(input)?;
    r.name = format!("{} (paths up to length {bound})", entry_label(&entry));
    Ok(report(&r, limit))
}

fn category(sel: &str) -> Result<Arc<globcat::FinCategory>, Failure> {
    let (_, entry) = select(sel, Kind::Category)?;
    let Item::Category(c) = entry.item else { unreachable!() };
    Ok(c)
}

fn equiv_search(a: &str, b: &str, out: &Out) -> Outcome {
    let (ca, cb) = (category(a)?, category(b)?);
    match are_equivalent_bruteforce(&ca, &cb).map_err(input)? {
        Some(e) => {
            let mut doc = Document::new();
            doc.add_equivalence("E", e);
            println!("equivalent: true");
            emit(&doc, out, "adjoint equivalence")
        }
        None => {
            println!("equivalent: false");
            Ok(false)
        }
    }
}

fn run(cli: &Cli) -> Outcome {
    let limit = cli.witness_limit;
    match &cli.command {
        Command::Validate { file } => validate(file),
        Command::Props { map, k } => props(map, *k, limit),
        Command::Pullback { f, g, out } => pullback(f, g, out),
        Command::Span(SpanCommand::Check { file }) => span_check(file, limit),
        Command::Span(SpanCommand::Compose { s1, s2, out }) => span_compose(s1, s2, out),
        Command::Laws { file, bound } => laws(file, *bound, limit),
        Command::Fuse { adjequiv, out } => fuse(adjequiv, out),
        Command::Project { adjequiv, side, out } => project(adjequiv, *side, out),
        Command::PseudoInverse { functor, out } => pseudo_inverse_cmd(functor, out, limit),
        Command::Nerve { file, out } => nerve_cmd(file, out),
        Command::Alg(AlgCommand::Check { file, bound }) => alg_check(file, *bound, limit),
        Command::EquivSearch { a, b, out } => equiv_search(a, b, out),
        Command::Suite { seed, cases } => Ok(suite::run(*seed, *cases, limit)),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Violations(text)) => {
            print!("{text}");
            ExitCode::from(1)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
