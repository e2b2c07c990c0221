//! Line-oriented text presentations of every structure in the crate.
//!
//! A file is a sequence of sections. Each section starts with a header line
//! naming its kind, followed by `key: entries` lines. `#` starts a comment.
//!
//! ```text
//! globular X n=1
//! cells 0: a b
//! cells 1: f
//! src 1: f->a
//! tgt 1: f->b
//!
//! category C
//! objects: x y
//! morphisms: f: x->y
//! compose:
//!
//! functor F: C -> C
//! obj: x=>x y=>y
//! mor: f=>f
//! ```
//!
//! Other headers are `map m: X -> Y` (`comp k:`), `nat t: F => G`
//! (`comp:`), `adjequiv E: S T` (`eta:`, `eps:`), `span s: u v` and
//! `algebra N: X` (`unit:`, `eval:`). Names must be declared before use.
//! Printing emits sections grouped by kind in the order above.

mod parse;
mod print;

use std::fmt;
use std::sync::Arc;

pub use parse::parse;
pub use print::print;

use crate::error::{Error, Result};
use crate::fincat::{AdjointEquivalence, CatSpan, FinCategory, FinFunctor, NatTrans};
use crate::globular::{GlobularMap, GlobularSet};
use crate::one_alg::OneAlgebra;
use crate::span::Span;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Kind {
    Globular,
    Map,
    Category,
    Functor,
    Nat,
    AdjEquiv,
    Span,
    Algebra,
}

impl Kind {
    pub const ALL: [Kind; 8] = [
        Kind::Globular,
        Kind::Map,
        Kind::Category,
        Kind::Functor,
        Kind::Nat,
        Kind::AdjEquiv,
        Kind::Span,
        Kind::Algebra,
    ];

    pub fn keyword(self) -> &'static str {
        match self {
            Kind::Globular => "globular",
            Kind::Map => "map",
            Kind::Category => "category",
            Kind::Functor => "functor",
            Kind::Nat => "nat",
            Kind::AdjEquiv => "adjequiv",
            Kind::Span => "span",
            Kind::Algebra => "algebra",
        }
    }

    pub fn from_keyword(word: &str) -> Option<Kind> {
        Kind::ALL.into_iter().find(|k| k.keyword() == word)
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.keyword())
    }
}

/// Legs of a span: maps of globular sets or functors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SpanBody {
    Globular(Span),
    Category(CatSpan),
}

#[derive(Debug, Clone)]
#[allow(clippy::large_enum_variant)]
pub enum Item {
    Globular(Arc<GlobularSet>),
    Map {
        domain: String,
        codomain: String,
        map: GlobularMap,
    },
    Category(Arc<FinCategory>),
    Functor {
        domain: String,
        codomain: String,
        functor: FinFunctor,
    },
    Nat {
        source: String,
        target: String,
        nat: NatTrans,
    },
    AdjEquiv {
        s: String,
        t: String,
        equivalence: AdjointEquivalence,
    },
    Span {
        left: String,
        right: String,
        body: SpanBody,
    },
    /// Always tabulated.
    Algebra {
        carrier: String,
        algebra: OneAlgebra,
    },
}

impl Item {
    pub fn kind(&self) -> Kind {
        match self {
            Item::Globular(_) => Kind::Globular,
            Item::Map { .. } => Kind::Map,
            Item::Category(_) => Kind::Category,
            Item::Functor { .. } => Kind::Functor,
            Item::Nat { .. } => Kind::Nat,
            Item::AdjEquiv { .. } => Kind::AdjEquiv,
            Item::Span { .. } => Kind::Span,
            Item::Algebra { .. } => Kind::Algebra,
        }
    }

    /// Names this item refers to, with the kinds they must have.
    fn references(&self) -> Vec<(&str, &[Kind])> {
        match self {
            Item::Globular(_) | Item::Category(_) => Vec::new(),
            Item::Map { domain, codomain, .. } => {
                vec![
                    (domain.as_str(), &[Kind::Globular][..]),
                    (codomain.as_str(), &[Kind::Globular][..]),
                ]
            }
            Item::Functor { domain, codomain, .. } => {
                vec![
                    (domain.as_str(), &[Kind::Category][..]),
                    (codomain.as_str(), &[Kind::Category][..]),
                ]
            }
            Item::Nat { source, target, .. } => {
                vec![
                    (source.as_str(), &[Kind::Functor][..]),
                    (target.as_str(), &[Kind::Functor][..]),
                ]
            }
            Item::AdjEquiv { s, t, .. } => vec![(s.as_str(), &[Kind::Functor][..]), (t.as_str(), &[Kind::Functor][..])],
            Item::Span { left, right, body } => {
                let k: &[Kind] = match body {
                    SpanBody::Globular(_) => &[Kind::Map],
                    SpanBody::Category(_) => &[Kind::Functor],
                };
                vec![(left.as_str(), k), (right.as_str(), k)]
            }
            Item::Algebra { carrier, .. } => vec![(carrier.as_str(), &[Kind::Globular][..])],
        }
    }
}

impl PartialEq for Item {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Item::Globular(a), Item::Globular(b)) => a == b,
            (Item::Category(a), Item::Category(b)) => a == b,
            (
                Item::Map { domain, codomain, map },
                Item::Map {
                    domain: d,
                    codomain: c,
                    map: m,
                },
            ) => domain == d && codomain == c && map == m,
            (
                Item::Functor {
                    domain,
                    codomain,
                    functor,
                },
                Item::Functor {
                    domain: d,
                    codomain: c,
                    functor: f,
                },
            ) => domain == d && codomain == c && functor == f,
            (
                Item::Nat { source, target, nat },
                Item::Nat {
                    source: s,
                    target: t,
                    nat: n,
                },
            ) => source == s && target == t && nat == n,
            (
                Item::AdjEquiv { s, t, equivalence },
                Item::AdjEquiv {
                    s: s2,
                    t: t2,
                    equivalence: e2,
                },
            ) => s == s2 && t == t2 && equivalence == e2,
            (
                Item::Span { left, right, body },
                Item::Span {
                    left: l,
                    right: r,
                    body: b,
                },
            ) => left == l && right == r && body == b,
            (Item::Algebra { carrier, algebra }, Item::Algebra { carrier: c, algebra: a }) => {
                carrier == c && algebra.carrier() == a.carrier() && algebra.table() == a.table()
            }
            _ => false,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Entry {
    pub name: Option<String>,
    pub item: Item,
}

/// An ordered collection of named structures, grouped by kind.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Document {
    entries: Vec<Entry>,
}

impl Document {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn entries(&self) -> &[Entry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, name: &str) -> Option<&Item> {
        self.entries
            .iter()
            .find(|e| e.name.as_deref() == Some(name))
            .map(|e| &e.item)
    }

    /// Entries of one kind, in insertion order.
    pub fn of_kind(&self, kind: Kind) -> impl Iterator<Item = &Entry> {
        self.entries.iter().filter(move |e| e.item.kind() == kind)
    }

    /// Adds an entry after the existing entries of the same or earlier kinds.
    /// Names are unique across kinds; references must resolve to entries of
    /// the right kind.
    pub fn insert(&mut self, name: Option<String>, item: Item) -> Result<()> {
        if let Some(n) = &name {
            if self.get(n).is_some() {
                return Err(Error::Structural(vec![format!("duplicate name `{n}`")]));
            }
        }
        for (r, kinds) in item.references() {
            match self.get(r) {
                Some(target) if kinds.contains(&target.kind()) => {}
                Some(target) => {
                    return Err(Error::Mismatch(format!(
                        "`{r}` is a {}, expected a {}",
                        target.kind(),
                        kinds[0]
                    )))
                }
                None => return Err(Error::Structural(vec![format!("undeclared name `{r}`")])),
            }
        }
        let kind = item.kind();
        let at = self
            .entries
            .iter()
            .rposition(|e| e.item.kind() <= kind)
            .map_or(0, |i| i + 1);
        self.entries.insert(at, Entry { name, item });
        Ok(())
    }

    /// `preferred`, or `preferred_2`, `preferred_3`, ... if taken.
    pub fn fresh_name(&self, preferred: &str) -> String {
        if self.get(preferred).is_none() {
            return preferred.to_string();
        }
        (2..)
            .map(|i| format!("{preferred}_{i}"))
            .find(|n| self.get(n).is_none())
            .expect("names are unbounded")
    }

    /// Adds a globular set unless an equal one is already named; returns its name.
    pub fn add_globular(&mut self, preferred: &str, set: Arc<GlobularSet>) -> String {
        if let Some(e) = self
            .entries
            .iter()
            .find(|e| matches!(&e.item, Item::Globular(s) if **s == *set))
        {
            if let Some(n) = &e.name {
                return n.clone();
            }
        }
        let name = self.fresh_name(preferred);
        self.insert(Some(name.clone()), Item::Globular(set))
            .expect("fresh name");
        name
    }

    /// Adds a category unless an equal one is already named; returns its name.
    pub fn add_category(&mut self, preferred: &str, cat: Arc<FinCategory>) -> String {
        if let Some(e) = self
            .entries
            .iter()
            .find(|e| matches!(&e.item, Item::Category(c) if **c == *cat))
        {
            if let Some(n) = &e.name {
                return n.clone();
            }
        }
        let name = self.fresh_name(preferred);
        self.insert(Some(name.clone()), Item::Category(cat))
            .expect("fresh name");
        name
    }

    pub fn add_map(&mut self, preferred: &str, map: GlobularMap) -> String {
        let domain = self.add_globular("X", map.domain().clone());
        let codomain = self.add_globular("Y", map.codomain().clone());
        let name = self.fresh_name(preferred);
        self.insert(Some(name.clone()), Item::Map { domain, codomain, map })
            .expect("references added");
        name
    }

    pub fn add_functor(&mut self, preferred: &str, functor: FinFunctor) -> String {
        let domain = self.add_category("A", functor.domain().clone());
        let codomain = self.add_category("B", functor.codomain().clone());
        let name = self.fresh_name(preferred);
        self.insert(
            Some(name.clone()),
            Item::Functor {
                domain,
                codomain,
                functor,
            },
        )
        .expect("references added");
        name
    }

    pub fn add_equivalence(&mut self, preferred: &str, e: AdjointEquivalence) -> String {
        let a = self.add_category("A", e.a().clone());
        let b = self.add_category("B", e.b().clone());
        let s_name = self.fresh_name("S");
        self.insert(
            Some(s_name.clone()),
            Item::Functor {
                domain: a.clone(),
                codomain: b.clone(),
                functor: e.s().clone(),
            },
        )
        .expect("references added");
        let t_name = self.fresh_name("T");
        self.insert(
            Some(t_name.clone()),
            Item::Functor {
                domain: b,
                codomain: a,
                functor: e.t().clone(),
            },
        )
        .expect("references added");
        let name = self.fresh_name(preferred);
        self.insert(
            Some(name.clone()),
            Item::AdjEquiv {
                s: s_name,
                t: t_name,
                equivalence: e,
            },
        )
        .expect("references added");
        name
    }

    pub fn add_span(&mut self, preferred: &str, span: Span) -> String {
        self.add_globular("P", span.apex().clone());
        self.add_globular("X", span.left().codomain().clone());
        self.add_globular("Y", span.right().codomain().clone());
        let left = self.add_map("l", span.left().clone());
        let right = self.add_map("r", span.right().clone());
        let name = self.fresh_name(preferred);
        self.insert(
            Some(name.clone()),
            Item::Span {
                left,
                right,
                body: SpanBody::Globular(span),
            },
        )
        .expect("references added");
        name
    }

    pub fn add_cat_span(&mut self, preferred: &str, span: CatSpan) -> String {
        self.add_category("C", span.apex().clone());
        self.add_category("A", span.left().codomain().clone());
        self.add_category("B", span.right().codomain().clone());
        let left = self.add_functor("u", span.left().clone());
        let right = self.add_functor("v", span.right().clone());
        let name = self.fresh_name(preferred);
        self.insert(
            Some(name.clone()),
            Item::Span {
                left,
                right,
                body: SpanBody::Category(span),
            },
        )
        .expect("references added");
        name
    }

    /// Adds a tabulated algebra together with its carrier.
    pub fn add_algebra(&mut self, preferred: &str, algebra: &OneAlgebra) -> Result<String> {
        let algebra = algebra.tabulate()?;
        let carrier = self.add_globular("G", algebra.carrier().clone());
        let name = self.fresh_name(preferred);
        self.insert(Some(name.clone()), Item::Algebra { carrier, algebra })?;
        Ok(name)
    }

    /// The only entry of `kind`, or the one named `name`.
    pub fn select(&self, kind: Kind, name: Option<&str>) -> Result<&Entry> {
        let mut candidates = self
            .of_kind(kind)
            .filter(|e| name.is_none() || e.name.as_deref() == name);
        match (candidates.next(), candidates.next()) {
            (Some(e), None) => Ok(e),
            (None, _) => Err(Error::Domain(match name {
                Some(n) => format!("no {kind} named `{n}`"),
                None => format!("no {kind} in document"),
            })),
            (Some(_), Some(_)) => Err(Error::Domain(format!("several {kind} entries; name one"))),
        }
    }
}

impl fmt::Display for Document {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&print(self))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DiagnosticKind {
    Syntax,
    Reference,
    Shape,
    Violation,
}

impl fmt::Display for DiagnosticKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DiagnosticKind::Syntax => "syntax",
            DiagnosticKind::Reference => "reference",
            DiagnosticKind::Shape => "shape",
            DiagnosticKind::Violation => "violation",
        })
    }
}

/// A positioned problem in an input file. Lines and columns start at 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagnostic {
    pub line: usize,
    pub column: usize,
    pub kind: DiagnosticKind,
    pub message: String,
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}: {}", self.line, self.column, self.kind, self.message)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::FinCategory;
    use crate::fusion::fuse_to_span;
    use crate::one_alg::nerve;

    const WALKING_ISO: &str = "\
category A
objects: a0 a1
morphisms: i: a0->a1 j: a1->a0
compose: j.i = id_a0 i.j = id_a1

category B
objects: *
morphisms:
compose:

functor S: A -> B
obj: a0=>* a1=>*
mor: i=>id_* j=>id_*

functor T: B -> A
obj: *=>a0
mor:

adjequiv E: S T
eta: a0=>id_a0 a1=>j
eps: *=>id_*
";

    #[test]
    fn terminal_category_prints_in_four_lines() {
        let mut doc = Document::new();
        doc.insert(None, Item::Category(Arc::new(FinCategory::terminal())))
            .unwrap();
        let text = print(&doc);
        assert_eq!(text, "category\nobjects: *\nmorphisms:\ncompose:\n");
        let back = parse(&text).unwrap();
        assert_eq!(back, doc);
        match &back.entries()[0].item {
            Item::Category(c) => assert_eq!((c.num_objects(), c.num_morphisms()), (1, 1)),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn adjoint_equivalence_round_trips() {
        let doc = parse(WALKING_ISO).unwrap();
        assert_eq!(doc.len(), 5);
        assert_eq!(print(&doc), WALKING_ISO);
        assert_eq!(parse(&print(&doc)).unwrap(), doc);
    }

    #[test]
    fn sections_are_regrouped_by_kind() {
        let text = "globular G n=0\ncells 0: p\n\ncategory C\nobjects: x\nmorphisms:\ncompose:\n\nglobular H n=0\ncells 0: q\n";
        let doc = parse(text).unwrap();
        let printed = print(&doc);
        assert!(printed.starts_with("globular G n=0\ncells 0: p\n\nglobular H n=0"));
        assert_eq!(parse(&printed).unwrap(), doc);
    }

    #[test]
    fn undeclared_morphism_in_compose_is_named() {
        let text = "category C\nobjects: x\nmorphisms: f: x->x\ncompose: f.f = g\n";
        let diags = parse(text).unwrap_err();
        assert_eq!(diags.len(), 1);
        let d = &diags[0];
        assert_eq!((d.line, d.column, d.kind), (4, 16, DiagnosticKind::Reference));
        assert!(d.message.contains("`g`"), "{}", d.message);
    }

    #[test]
    fn recovery_at_next_header() {
        let text =
            "category C\nobjects: x\nbogus line\n\ncategory D\nobjects: y\nmorphisms: f: y->z\n\nfunctor F: C -> D\n";
        let diags = parse(text).unwrap_err();
        let kinds: Vec<(usize, DiagnosticKind)> = diags.iter().map(|d| (d.line, d.kind)).collect();
        assert_eq!(
            kinds,
            [
                (3, DiagnosticKind::Syntax),
                (7, DiagnosticKind::Reference),
                (9, DiagnosticKind::Reference),
                (9, DiagnosticKind::Reference)
            ]
        );
        assert_eq!(diags[0].column, 1);
        assert_eq!(diags[1].column, 18);
        assert!(diags[2].message.contains("has errors"));
    }

    #[test]
    fn contradictory_composites_are_reported() {
        let text = "category C\nobjects: x\nmorphisms: f: x->x\ncompose: f.f = f f.f = id_x\n";
        let diags = parse(text).unwrap_err();
        assert!(diags[0].message.contains("contradicts"), "{}", diags[0].message);
    }

    #[test]
    fn invalid_adjoint_equivalence_is_a_violation() {
        let text = WALKING_ISO.replace("a1=>j", "a1=>id_a1");
        let diags = parse(&text).unwrap_err();
        assert!(diags
            .iter()
            .any(|d| d.kind == DiagnosticKind::Violation || d.kind == DiagnosticKind::Shape));
    }

    #[test]
    fn globularity_failures_are_violations() {
        let text = "globular X n=2\ncells 0: a b\ncells 1: f g\ncells 2: s\nsrc 1: f->a g->b\ntgt 1: f->b g->a\nsrc 2: s->f\ntgt 2: s->g\n";
        let diags = parse(text).unwrap_err();
        assert!(diags.iter().all(|d| d.kind == DiagnosticKind::Violation));
        assert_eq!(diags[0].line, 1);
    }

    #[test]
    fn fusion_and_nerve_print_parseable_text() {
        let doc = parse(WALKING_ISO).unwrap();
        let Item::AdjEquiv { equivalence, .. } = &doc.select(Kind::AdjEquiv, None).unwrap().item else {
            unreachable!()
        };
        let (fusion, span) = fuse_to_span(equivalence);
        let mut out = Document::new();
        out.add_cat_span("s", span);
        let again = parse(&print(&out)).unwrap();
        assert_eq!(again, out);
        let Item::Category(c) = &again.entries()[0].item else {
            unreachable!()
        };
        assert_eq!(**c, **fusion.category());

        let mut nerves = Document::new();
        nerves.add_algebra("N", &nerve(fusion.category())).unwrap();
        assert_eq!(parse(&print(&nerves)).unwrap(), nerves);
    }

    #[test]
    fn comments_and_blank_lines_are_ignored() {
        let text = "# leading\ncategory C # trailing\n\nobjects: x   # spaced\n";
        let doc = parse(text).unwrap();
        assert_eq!(print(&doc), "category C\nobjects: x\nmorphisms:\ncompose:\n");
    }

    #[test]
    fn select_by_kind_and_name() {
        let doc = parse(WALKING_ISO).unwrap();
        assert!(doc.select(Kind::Category, None).is_err());
        assert_eq!(
            doc.select(Kind::Category, Some("B")).unwrap().name.as_deref(),
            Some("B")
        );
        assert!(doc.select(Kind::Map, None).is_err());
    }
}
