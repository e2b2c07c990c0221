use std::collections::{HashMap, HashSet};
use std::sync::Arc;

use super::{Diagnostic, DiagnosticKind, Document, Item, Kind, SpanBody};
use crate::error::Error;
use crate::fincat::{AdjointEquivalence, CatSpan, CategoryBuilder, FinFunctor, NatTrans};
use crate::globular::{validate_globular, validate_map, RawGlobularMap, RawGlobularSet};
use crate::names::{identity_name, is_valid_name};
use crate::one_alg::OneAlgebra;
use crate::span::Span;

#[derive(Debug, Clone, Copy)]
struct Tok<'a> {
    col: usize,
    text: &'a str,
}

#[derive(Debug)]
struct BodyLine<'a> {
    line: usize,
    key: &'a str,
    key_col: usize,
    dim: Option<(usize, usize)>,
    entries: Vec<Tok<'a>>,
}

#[derive(Debug)]
struct Section<'a> {
    kind: Kind,
    line: usize,
    header: Vec<Tok<'a>>,
    body: Vec<BodyLine<'a>>,
    broken: bool,
}

fn tokens(line: &str) -> Vec<Tok<'_>> {
    let line = line.split('#').next().unwrap_or_default();
    let mut out = Vec::new();
    let mut start = None;
    let mut col = 0;
    for (byte, ch) in line.char_indices() {
        col += 1;
        match (ch.is_whitespace(), start) {
            (false, None) => start = Some((byte, col)),
            (true, Some((b, c))) => {
                out.push(Tok {
                    col: c,
                    text: &line[b..byte],
                });
                start = None;
            }
            _ => {}
        }
    }
    if let Some((b, c)) = start {
        out.push(Tok {
            col: c,
            text: &line[b..],
        });
    }
    out
}

/// Parses a document. All problems are reported; a section with errors is
/// skipped and parsing resumes at the next section header.
pub fn parse(text: &str) -> Result<Document, Vec<Diagnostic>> {
    let mut p = Parser::default();
    let sections = p.sections(text);
    for s in &sections {
        if s.broken {
            if let Some(name) = s.header.get(1).map(|t| t.text.trim_end_matches(':')) {
                p.failed.insert(name.to_string());
            }
        } else {
            p.build(s);
        }
    }
    if p.diags.is_empty() {
        Ok(p.doc)
    } else {
        Err(p.diags)
    }
}

#[derive(Default)]
struct Parser {
    doc: Document,
    diags: Vec<Diagnostic>,
    failed: HashSet<String>,
}

impl Parser {
    fn diag(&mut self, line: usize, column: usize, kind: DiagnosticKind, message: impl Into<String>) {
        self.diags.push(Diagnostic {
            line,
            column,
            kind,
            message: message.into(),
        });
    }

    fn sections<'a>(&mut self, text: &'a str) -> Vec<Section<'a>> {
        let mut sections: Vec<Section<'a>> = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let toks = tokens(raw);
            let Some(first) = toks.first().copied() else { continue };
            if let Some(kind) = Kind::from_keyword(first.text) {
                sections.push(Section {
                    kind,
                    line,
                    header: toks,
                    body: Vec::new(),
                    broken: false,
                });
                continue;
            }
            let Some(section) = sections.last_mut() else {
                self.diag(
                    line,
                    first.col,
                    DiagnosticKind::Syntax,
                    format!("expected a section header, found `{}`", first.text),
                );
                continue;
            };
            match body_line(line, &toks) {
                Ok(b) => section.body.push(b),
                Err(d) => {
                    section.broken = true;
                    self.diags.push(d);
                }
            }
        }
        sections
    }

    fn build(&mut self, s: &Section<'_>) {
        let before = self.diags.len();
        let Some((name, refs)) = self.header(s) else {
            if let Some(name) = s.header.get(1).map(|t| t.text.trim_end_matches(':')) {
                self.failed.insert(name.to_string());
            }
            return;
        };
        let item = if self.diags.len() > before {
            None
        } else {
            match s.kind {
                Kind::Globular => self.globular(s),
                Kind::Map => self.map(s, &refs),
                Kind::Category => self.category(s),
                Kind::Functor => self.functor(s, &refs),
                Kind::Nat => self.nat(s, &refs),
                Kind::AdjEquiv => self.adjequiv(s, &refs),
                Kind::Span => self.span(s, &refs),
                Kind::Algebra => self.algebra(s, &refs),
            }
        };
        match item {
            Some(item) if self.diags.len() == before => {
                if let Err(e) = self.doc.insert(name.clone(), item) {
                    self.error(s.line, s.header[0].col, e);
                }
            }
            _ => {
                if let Some(n) = name {
                    self.failed.insert(n);
                }
            }
        }
    }

    fn error(&mut self, line: usize, col: usize, e: Error) {
        match e {
            Error::Structural(issues) => {
                for m in issues {
                    self.diag(line, col, DiagnosticKind::Shape, m);
                }
            }
            Error::Globularity(ws) | Error::Commutation(ws) => {
                for w in ws {
                    self.diag(line, col, DiagnosticKind::Violation, w.to_string());
                }
            }
            Error::Precondition(m) => self.diag(line, col, DiagnosticKind::Violation, m),
            other => self.diag(line, col, DiagnosticKind::Shape, other.to_string()),
        }
    }

    /// Checks the header and resolves the names it refers to.
    fn header(&mut self, s: &Section<'_>) -> Option<(Option<String>, Vec<String>)> {
        let h = &s.header;
        let line = s.line;
        let kw = h[0];
        let shape = |k: Kind| -> &'static str {
            match k {
                Kind::Globular => "globular [name] n=<dim>",
                Kind::Category => "category [name]",
                Kind::Map => "map <name>: <globular> -> <globular>",
                Kind::Functor => "functor <name>: <category> -> <category>",
                Kind::Nat => "nat <name>: <functor> => <functor>",
                Kind::AdjEquiv => "adjequiv <name>: <functor S> <functor T>",
                Kind::Span => "span <name>: <left leg> <right leg>",
                Kind::Algebra => "algebra <name>: <globular>",
            }
        };
        let bad = |p: &mut Parser, col: usize| {
            p.diag(
                line,
                col,
                DiagnosticKind::Syntax,
                format!("expected `{}`", shape(s.kind)),
            );
            None
        };
        match s.kind {
            Kind::Globular | Kind::Category => {
                let mut rest = &h[1..];
                let mut name = None;
                if let Some(t) = rest.first() {
                    if !(s.kind == Kind::Globular && t.text.starts_with("n=")) {
                        if !is_valid_name(t.text) {
                            self.diag(
                                line,
                                t.col,
                                DiagnosticKind::Syntax,
                                format!("invalid name `{}`", t.text),
                            );
                            return None;
                        }
                        name = Some(t.text.to_string());
                        rest = &rest[1..];
                    }
                }
                let expected = usize::from(s.kind == Kind::Globular);
                if rest.len() != expected {
                    let col = rest.get(expected).or(rest.first()).map_or(kw.col, |t| t.col);
                    return bad(self, col);
                }
                if s.kind == Kind::Globular {
                    let t = rest[0];
                    match t.text.strip_prefix("n=").and_then(|d| d.parse::<usize>().ok()) {
                        Some(_) => {}
                        None => return bad(self, t.col),
                    }
                }
                Some((name, Vec::new()))
            }
            _ => {
                let arity = match s.kind {
                    Kind::Map | Kind::Functor | Kind::Nat => 5,
                    Kind::AdjEquiv | Kind::Span => 4,
                    _ => 3,
                };
                if h.len() != arity {
                    let col = h.get(arity).or(h.last()).map_or(kw.col, |t| t.col);
                    return bad(self, col);
                }
                let Some(name) = h[1].text.strip_suffix(':').filter(|n| is_valid_name(n)) else {
                    return bad(self, h[1].col);
                };
                let arrow = match s.kind {
                    Kind::Map | Kind::Functor => Some("->"),
                    Kind::Nat => Some("=>"),
                    _ => None,
                };
                let ref_toks: Vec<Tok<'_>> = match arrow {
                    Some(a) => {
                        if h[3].text != a {
                            return bad(self, h[3].col);
                        }
                        vec![h[2], h[4]]
                    }
                    None => h[2..].to_vec(),
                };
                let kinds: &[Kind] = match s.kind {
                    Kind::Map | Kind::Algebra => &[Kind::Globular],
                    Kind::Functor => &[Kind::Category],
                    Kind::Nat | Kind::AdjEquiv => &[Kind::Functor],
                    _ => &[Kind::Map, Kind::Functor],
                };
                let mut refs = Vec::new();
                for &t in &ref_toks {
                    if self.resolve(line, t, kinds) {
                        refs.push(t.text.to_string());
                    }
                }
                if refs.len() == ref_toks.len() {
                    Some((Some(name.to_string()), refs))
                } else {
                    None
                }
            }
        }
    }

    fn resolve(&mut self, line: usize, t: Tok<'_>, kinds: &[Kind]) -> bool {
        match self.doc.get(t.text) {
            Some(item) if kinds.contains(&item.kind()) => true,
            Some(item) => {
                let kind = item.kind();
                self.diag(
                    line,
                    t.col,
                    DiagnosticKind::Shape,
                    format!("`{}` is a {kind}, expected a {}", t.text, kinds[0]),
                );
                false
            }
            None if self.failed.contains(t.text) => {
                self.diag(
                    line,
                    t.col,
                    DiagnosticKind::Reference,
                    format!("`{}` has errors", t.text),
                );
                false
            }
            None => {
                self.diag(
                    line,
                    t.col,
                    DiagnosticKind::Reference,
                    format!("undeclared name `{}`", t.text),
                );
                false
            }
        }
    }

    /// Body lines with `key` (and dimension, if any), checking the key is allowed.
    fn keyed<'s, 'a>(&mut self, s: &'s Section<'a>, allowed: &[(&str, bool)]) -> Option<&'s [BodyLine<'a>]> {
        let mut ok = true;
        for b in &s.body {
            match allowed.iter().find(|(k, _)| *k == b.key) {
                Some(&(_, dim)) if dim == b.dim.is_some() => {}
                _ => {
                    let keys: Vec<String> = allowed
                        .iter()
                        .map(|(k, d)| if *d { format!("{k} <k>:") } else { format!("{k}:") })
                        .collect();
                    self.diag(
                        b.line,
                        b.key_col,
                        DiagnosticKind::Syntax,
                        format!(
                            "unexpected key `{}` in {} section; expected one of {}",
                            b.key,
                            s.kind,
                            keys.join(", ")
                        ),
                    );
                    ok = false;
                }
            }
        }
        ok.then_some(&s.body[..])
    }

    fn name_tok<'a>(&mut self, line: usize, t: Tok<'a>) -> Option<&'a str> {
        if is_valid_name(t.text) {
            Some(t.text)
        } else {
            self.diag(
                line,
                t.col,
                DiagnosticKind::Syntax,
                format!("invalid name `{}`", t.text),
            );
            None
        }
    }

    /// `a<sep>b`, with the column of `b`.
    fn pair<'a>(&mut self, line: usize, t: Tok<'a>, sep: &str) -> Option<(&'a str, &'a str, usize)> {
        match t.text.split_once(sep) {
            Some((a, b)) if is_valid_name(a) && is_valid_name(b) => {
                Some((a, b, t.col + a.chars().count() + sep.chars().count()))
            }
            _ => {
                self.diag(
                    line,
                    t.col,
                    DiagnosticKind::Syntax,
                    format!("expected `a{sep}b`, found `{}`", t.text),
                );
                None
            }
        }
    }

    /// Triples `g.f = h`, with the columns of `g`, `f` and `h`.
    fn equations<'a>(&mut self, b: &BodyLine<'a>) -> Option<Vec<([&'a str; 3], [usize; 3])>> {
        let mut out = Vec::new();
        let mut ok = true;
        for chunk in b.entries.chunks(3) {
            let parsed = match chunk {
                [gf, eq, h] if eq.text == "=" => match gf.text.split_once('.') {
                    Some((g, f)) if is_valid_name(g) && is_valid_name(f) && is_valid_name(h.text) => {
                        Some(([g, f, h.text], [gf.col, gf.col + g.chars().count() + 1, h.col]))
                    }
                    _ => None,
                },
                _ => None,
            };
            match parsed {
                Some(p) => out.push(p),
                None => {
                    self.diag(b.line, chunk[0].col, DiagnosticKind::Syntax, "expected `g.f = h`");
                    ok = false;
                }
            }
        }
        ok.then_some(out)
    }

    fn pairs<'a>(&mut self, b: &BodyLine<'a>, sep: &str) -> Option<Vec<(&'a str, &'a str, usize, usize)>> {
        let mut out = Vec::new();
        let mut ok = true;
        for &t in &b.entries {
            match self.pair(b.line, t, sep) {
                Some((x, y, c)) => out.push((x, y, t.col, c)),
                None => ok = false,
            }
        }
        ok.then_some(out)
    }

    fn undeclared(&mut self, line: usize, col: usize, what: &str, name: &str) {
        self.diag(
            line,
            col,
            DiagnosticKind::Reference,
            format!("undeclared {what} `{name}`"),
        );
    }

    fn globular(&mut self, s: &Section<'_>) -> Option<Item> {
        let n: usize = s.header.last()?.text.strip_prefix("n=")?.parse().ok()?;
        let body = self.keyed(s, &[("cells", true), ("src", true), ("tgt", true)])?;
        let mut raw = RawGlobularSet::new(n);
        for b in body.iter().filter(|b| b.key == "cells") {
            let (k, col) = b.dim?;
            if k > n {
                self.diag(
                    b.line,
                    col,
                    DiagnosticKind::Shape,
                    format!("dimension {k} exceeds n={n}"),
                );
                continue;
            }
            for &t in &b.entries {
                if let Some(name) = self.name_tok(b.line, t) {
                    raw.cells[k].push(name.to_string());
                }
            }
        }
        let declared: Vec<HashSet<&str>> = raw
            .cells
            .iter()
            .map(|c| c.iter().map(String::as_str).collect())
            .collect();
        let mut src = vec![Vec::new(); n];
        let mut tgt = vec![Vec::new(); n];
        for b in body.iter().filter(|b| b.key != "cells") {
            let (k, col) = b.dim?;
            if k == 0 || k > n {
                self.diag(
                    b.line,
                    col,
                    DiagnosticKind::Shape,
                    format!("boundaries exist in dimensions 1..={n}, not {k}"),
                );
                continue;
            }
            for (cell, bd, c1, c2) in self.pairs(b, "->").unwrap_or_default() {
                if !declared[k].contains(cell) {
                    self.undeclared(b.line, c1, &format!("{k}-cell"), cell);
                } else if !declared[k - 1].contains(bd) {
                    self.undeclared(b.line, c2, &format!("{}-cell", k - 1), bd);
                } else {
                    let table = if b.key == "src" { &mut src } else { &mut tgt };
                    table[k - 1].push((cell.to_string(), bd.to_string()));
                }
            }
        }
        raw.src = src;
        raw.tgt = tgt;
        match validate_globular(&raw) {
            Ok(x) => Some(Item::Globular(Arc::new(x))),
            Err(e) => {
                self.error(s.line, s.header[0].col, e);
                None
            }
        }
    }

    fn map(&mut self, s: &Section<'_>, refs: &[String]) -> Option<Item> {
        let (Some(Item::Globular(x)), Some(Item::Globular(y))) = (self.doc.get(&refs[0]), self.doc.get(&refs[1]))
        else {
            return None;
        };
        let (x, y) = (x.clone(), y.clone());
        if x.dim() != y.dim() {
            self.diag(
                s.line,
                s.header[2].col,
                DiagnosticKind::Shape,
                "domain and codomain have different dimensions",
            );
            return None;
        }
        let body = self.keyed(s, &[("comp", true)])?;
        let mut components = vec![Vec::new(); x.dim() + 1];
        for b in body {
            let (k, col) = b.dim?;
            if k > x.dim() {
                self.diag(
                    b.line,
                    col,
                    DiagnosticKind::Shape,
                    format!("dimension {k} exceeds n={}", x.dim()),
                );
                continue;
            }
            for (a, im, c1, c2) in self.pairs(b, "=>").unwrap_or_default() {
                if x.index_of(k, a).is_none() {
                    self.undeclared(b.line, c1, &format!("{k}-cell"), a);
                } else if y.index_of(k, im).is_none() {
                    self.undeclared(b.line, c2, &format!("{k}-cell"), im);
                } else {
                    components[k].push((a.to_string(), im.to_string()));
                }
            }
        }
        match validate_map(&RawGlobularMap {
            domain: x,
            codomain: y,
            components,
        }) {
            Ok(map) => Some(Item::Map {
                domain: refs[0].clone(),
                codomain: refs[1].clone(),
                map,
            }),
            Err(e) => {
                self.error(s.line, s.header[0].col, e);
                None
            }
        }
    }

    fn category(&mut self, s: &Section<'_>) -> Option<Item> {
        let body = self.keyed(s, &[("objects", false), ("morphisms", false), ("compose", false)])?;
        let before = self.diags.len();
        let mut builder = CategoryBuilder::new();
        for b in body.iter().filter(|b| b.key == "objects") {
            for &t in &b.entries {
                if let Some(o) = self.name_tok(b.line, t) {
                    builder.objects.push(o.to_string());
                }
            }
        }
        let objects: HashSet<String> = builder.objects.iter().cloned().collect();
        let mut morphisms: HashMap<String, (String, String)> = builder
            .objects
            .iter()
            .map(|o| (identity_name(o), (o.clone(), o.clone())))
            .collect();
        for b in body.iter().filter(|b| b.key == "morphisms") {
            for chunk in b.entries.chunks(2) {
                let decl = match chunk {
                    [name, ends] => name.text.strip_suffix(':').filter(|n| is_valid_name(n)).zip(
                        ends.text
                            .split_once("->")
                            .filter(|(x, y)| is_valid_name(x) && is_valid_name(y)),
                    ),
                    _ => None,
                };
                let Some((name, (x, y))) = decl else {
                    self.diag(b.line, chunk[0].col, DiagnosticKind::Syntax, "expected `f: x->y`");
                    continue;
                };
                let ends_col = chunk[1].col;
                if !objects.contains(x) {
                    self.undeclared(b.line, ends_col, "object", x);
                } else if !objects.contains(y) {
                    self.undeclared(b.line, ends_col + x.chars().count() + 2, "object", y);
                } else {
                    morphisms.insert(name.to_string(), (x.to_string(), y.to_string()));
                    builder.arrows.push((name.to_string(), x.to_string(), y.to_string()));
                }
            }
        }
        let mut seen: HashMap<(&str, &str), &str> = HashMap::new();
        for b in body.iter().filter(|b| b.key == "compose") {
            for (names, cols) in self.equations(b).unwrap_or_default() {
                let mut ok = true;
                for (n, c) in names.iter().zip(cols) {
                    if !morphisms.contains_key(*n) {
                        self.undeclared(b.line, c, "morphism", n);
                        ok = false;
                    }
                }
                if ok && morphisms[names[1]].1 != morphisms[names[0]].0 {
                    let msg = format!("{}.{} is not a composable pair", names[0], names[1]);
                    self.diag(b.line, cols[0], DiagnosticKind::Shape, msg);
                    ok = false;
                }
                if ok {
                    if let Some(prev) = seen.insert((names[0], names[1]), names[2]).filter(|&p| p != names[2]) {
                        let msg = format!(
                            "{}.{} = {} contradicts {}.{} = {prev}",
                            names[0], names[1], names[2], names[0], names[1]
                        );
                        self.diag(b.line, cols[0], DiagnosticKind::Shape, msg);
                        continue;
                    }
                    builder
                        .composites
                        .push((names[0].into(), names[1].into(), names[2].into()));
                }
            }
        }
        if self.diags.len() > before {
            return None;
        }
        match builder.build() {
            Ok(c) => Some(Item::Category(Arc::new(c))),
            Err(e) => {
                self.error(s.line, s.header[0].col, e);
                None
            }
        }
    }

    fn functor(&mut self, s: &Section<'_>, refs: &[String]) -> Option<Item> {
        let (Some(Item::Category(a)), Some(Item::Category(b))) = (self.doc.get(&refs[0]), self.doc.get(&refs[1]))
        else {
            return None;
        };
        let (a, b) = (a.clone(), b.clone());
        let body = self.keyed(s, &[("obj", false), ("mor", false)])?;
        let before = self.diags.len();
        let mut objects = Vec::new();
        let mut morphisms = Vec::new();
        for line in body {
            let is_obj = line.key == "obj";
            for (x, y, c1, c2) in self.pairs(line, "=>").unwrap_or_default() {
                let (found_x, found_y) = if is_obj {
                    (a.object_index(x).is_some(), b.object_index(y).is_some())
                } else {
                    (a.morphism_index(x).is_some(), b.morphism_index(y).is_some())
                };
                let what = if is_obj { "object" } else { "morphism" };
                if !found_x {
                    self.undeclared(line.line, c1, what, x);
                } else if !found_y {
                    self.undeclared(line.line, c2, what, y);
                } else if is_obj {
                    objects.push((x.to_string(), y.to_string()));
                } else {
                    morphisms.push((x.to_string(), y.to_string()));
                }
            }
        }
        if self.diags.len() > before {
            return None;
        }
        match FinFunctor::from_names(a, b, &objects, &morphisms) {
            Ok(functor) => Some(Item::Functor {
                domain: refs[0].clone(),
                codomain: refs[1].clone(),
                functor,
            }),
            Err(e) => {
                self.error(s.line, s.header[0].col, e);
                None
            }
        }
    }

    fn functor_ref(&self, name: &str) -> Option<FinFunctor> {
        match self.doc.get(name) {
            Some(Item::Functor { functor, .. }) => Some(functor.clone()),
            _ => None,
        }
    }

    fn nat(&mut self, s: &Section<'_>, refs: &[String]) -> Option<Item> {
        let (f, g) = (self.functor_ref(&refs[0])?, self.functor_ref(&refs[1])?);
        let body = self.keyed(s, &[("comp", false)])?;
        let lines: Vec<&BodyLine<'_>> = body.iter().collect();
        let entries = self.components_of(&lines, &f)?;
        match NatTrans::from_names(f, g, &entries) {
            Ok(nat) => Some(Item::Nat {
                source: refs[0].clone(),
                target: refs[1].clone(),
                nat,
            }),
            Err(e) => {
                self.error(s.line, s.header[0].col, e);
                None
            }
        }
    }

    fn adjequiv(&mut self, s: &Section<'_>, refs: &[String]) -> Option<Item> {
        let (sf, tf) = (self.functor_ref(&refs[0])?, self.functor_ref(&refs[1])?);
        let body = self.keyed(s, &[("eta", false), ("eps", false)])?;
        let eta_lines: Vec<&BodyLine<'_>> = body.iter().filter(|b| b.key == "eta").collect();
        let eps_lines: Vec<&BodyLine<'_>> = body.iter().filter(|b| b.key == "eps").collect();
        let id_a = FinFunctor::identity(sf.domain().clone());
        let id_b = FinFunctor::identity(sf.codomain().clone());
        let mut tables = Vec::new();
        for (lines, f, key) in [(eta_lines, &id_a, "eta"), (eps_lines, &id_b, "eps")] {
            let entries = self.components_of(&lines, f)?;
            let c = f.domain();
            let mut table = vec![None; c.num_objects()];
            for (x, m) in entries {
                let (i, j) = (c.object_index(&x)?, c.morphism_index(&m)?);
                if table[i].is_some_and(|p| p != j) {
                    self.diag(
                        s.line,
                        s.header[0].col,
                        DiagnosticKind::Shape,
                        format!("conflicting {key} components for `{x}`"),
                    );
                    return None;
                }
                table[i] = Some(j);
            }
            let missing: Vec<&str> = (0..c.num_objects())
                .filter(|&o| table[o].is_none())
                .map(|o| c.object_name(o))
                .collect();
            if !missing.is_empty() {
                self.diag(
                    s.line,
                    s.header[0].col,
                    DiagnosticKind::Shape,
                    format!("missing {key} components for {}", missing.join(" ")),
                );
                return None;
            }
            tables.push(table.into_iter().map(Option::unwrap).collect::<Vec<_>>());
        }
        let eps = tables.pop()?;
        let eta = tables.pop()?;
        match AdjointEquivalence::from_components(sf, tf, eta, eps) {
            Ok(equivalence) => Some(Item::AdjEquiv {
                s: refs[0].clone(),
                t: refs[1].clone(),
                equivalence,
            }),
            Err(e) => {
                self.error(s.line, s.header[0].col, e);
                None
            }
        }
    }

    /// `x=>m` entries: `x` an object of the domain of `f`, `m` a morphism of its codomain.
    fn components_of(&mut self, lines: &[&BodyLine<'_>], f: &FinFunctor) -> Option<Vec<(String, String)>> {
        let (a, b) = (f.domain(), f.codomain());
        let before = self.diags.len();
        let mut out = Vec::new();
        for line in lines {
            for (x, m, c1, c2) in self.pairs(line, "=>").unwrap_or_default() {
                if a.object_index(x).is_none() {
                    self.undeclared(line.line, c1, "object", x);
                } else if b.morphism_index(m).is_none() {
                    self.undeclared(line.line, c2, "morphism", m);
                } else {
                    out.push((x.to_string(), m.to_string()));
                }
            }
        }
        (self.diags.len() == before).then_some(out)
    }

    fn span(&mut self, s: &Section<'_>, refs: &[String]) -> Option<Item> {
        if !s.body.is_empty() {
            self.diag(
                s.body[0].line,
                s.body[0].key_col,
                DiagnosticKind::Syntax,
                "span sections have no body",
            );
            return None;
        }
        let body = match (self.doc.get(&refs[0]), self.doc.get(&refs[1])) {
            (Some(Item::Map { map: l, .. }), Some(Item::Map { map: r, .. })) => {
                Span::new(l.clone(), r.clone()).map(SpanBody::Globular)
            }
            (Some(Item::Functor { functor: l, .. }), Some(Item::Functor { functor: r, .. })) => {
                CatSpan::new(l.clone(), r.clone()).map(SpanBody::Category)
            }
            _ => {
                self.diag(
                    s.line,
                    s.header[3].col,
                    DiagnosticKind::Shape,
                    "legs must both be maps or both be functors",
                );
                return None;
            }
        };
        match body {
            Ok(body) => Some(Item::Span {
                left: refs[0].clone(),
                right: refs[1].clone(),
                body,
            }),
            Err(e) => {
                self.error(s.line, s.header[0].col, e);
                None
            }
        }
    }

    fn algebra(&mut self, s: &Section<'_>, refs: &[String]) -> Option<Item> {
        let Some(Item::Globular(x)) = self.doc.get(&refs[0]) else {
            return None;
        };
        let x = x.clone();
        if x.dim() != 1 {
            self.diag(
                s.line,
                s.header[2].col,
                DiagnosticKind::Shape,
                format!("carrier has dimension {}, expected 1", x.dim()),
            );
            return None;
        }
        let body = self.keyed(s, &[("unit", false), ("eval", false)])?;
        let before = self.diags.len();
        let mut units = vec![None; x.len(0)];
        let mut binary = HashMap::new();
        for b in body {
            if b.key == "unit" {
                for (o, f, c1, c2) in self.pairs(b, "=>").unwrap_or_default() {
                    match (x.index_of(0, o), x.index_of(1, f)) {
                        (None, _) => self.undeclared(b.line, c1, "0-cell", o),
                        (_, None) => self.undeclared(b.line, c2, "1-cell", f),
                        (Some(i), Some(j)) => units[i] = Some(j),
                    }
                }
            } else {
                for (names, cols) in self.equations(b).unwrap_or_default() {
                    let idx: Vec<Option<usize>> = names.iter().map(|n| x.index_of(1, n)).collect();
                    for ((n, c), i) in names.iter().zip(cols).zip(&idx) {
                        if i.is_none() {
                            self.undeclared(b.line, c, "1-cell", n);
                        }
                    }
                    if let [Some(g), Some(f), Some(h)] = idx[..] {
                        binary.insert((g, f), h);
                    }
                }
            }
        }
        if self.diags.len() > before {
            return None;
        }
        let missing: Vec<&str> = (0..x.len(0))
            .filter(|&o| units[o].is_none())
            .map(|o| x.name(0, o))
            .collect();
        if !missing.is_empty() {
            self.diag(
                s.line,
                s.header[0].col,
                DiagnosticKind::Shape,
                format!("missing unit for {}", missing.join(" ")),
            );
            return None;
        }
        let units = units.into_iter().map(Option::unwrap).collect();
        match OneAlgebra::from_table(x, units, binary) {
            Ok(algebra) => Some(Item::Algebra {
                carrier: refs[0].clone(),
                algebra,
            }),
            Err(e) => {
                self.error(s.line, s.header[0].col, e);
                None
            }
        }
    }
}

fn body_line<'a>(line: usize, toks: &[Tok<'a>]) -> Result<BodyLine<'a>, Diagnostic> {
    let first = toks[0];
    if let Some(key) = first.text.strip_suffix(':') {
        return Ok(BodyLine {
            line,
            key,
            key_col: first.col,
            dim: None,
            entries: toks[1..].to_vec(),
        });
    }
    if let Some(second) = toks.get(1) {
        if let Some(k) = second.text.strip_suffix(':').and_then(|d| d.parse::<usize>().ok()) {
            return Ok(BodyLine {
                line,
                key: first.text,
                key_col: first.col,
                dim: Some((k, second.col)),
                entries: toks[2..].to_vec(),
            });
        }
    }
    Err(Diagnostic {
        line,
        column: first.col,
        kind: DiagnosticKind::Syntax,
        message: format!("expected `key:` or `key <k>:`, found `{}`", first.text),
    })
}
