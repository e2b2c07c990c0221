use std::fmt::Write;

use super::{Document, Entry, Item};
use crate::fincat::FinCategory;

/// Canonical text: sections grouped by kind, entries in structure order,
/// single spaces, one blank line between sections, newline-terminated.
pub fn print(doc: &Document) -> String {
    let mut out = String::new();
    for (i, entry) in doc.entries().iter().enumerate() {
        if i > 0 {
            out.push('\n');
        }
        print_entry(entry, &mut out);
    }
    out
}

fn line(out: &mut String, key: &str, entries: impl IntoIterator<Item = String>) {
    out.push_str(key);
    out.push(':');
    for e in entries {
        out.push(' ');
        out.push_str(&e);
    }
    out.push('\n');
}

fn header(out: &mut String, keyword: &str, name: &Option<String>, rest: &str) {
    out.push_str(keyword);
    if let Some(n) = name {
        let _ = write!(out, " {n}");
    }
    out.push_str(rest);
    out.push('\n');
}

fn composites(c: &FinCategory) -> Vec<String> {
    let n = c.num_objects();
    let mut out = Vec::new();
    for f in n..c.num_morphisms() {
        for g in (n..c.num_morphisms()).filter(|&g| c.src(g) == c.tgt(f)) {
            out.push(format!(
                "{}.{} = {}",
                c.morphism_name(g),
                c.morphism_name(f),
                c.morphism_name(c.comp(g, f))
            ));
        }
    }
    out
}

fn print_entry(entry: &Entry, out: &mut String) {
    let name = &entry.name;
    let plain = name.as_deref().unwrap_or_default();
    match &entry.item {
        Item::Globular(x) => {
            header(out, "globular", name, &format!(" n={}", x.dim()));
            for k in 0..=x.dim() {
                line(out, &format!("cells {k}"), x.cells(k).iter().cloned());
            }
            for k in 1..=x.dim() {
                let pairs = |table: &[usize]| {
                    table
                        .iter()
                        .enumerate()
                        .map(|(i, &b)| format!("{}->{}", x.name(k, i), x.name(k - 1, b)))
                        .collect::<Vec<_>>()
                };
                line(out, &format!("src {k}"), pairs(x.src_table(k)));
                line(out, &format!("tgt {k}"), pairs(x.tgt_table(k)));
            }
        }
        Item::Map { domain, codomain, map } => {
            let _ = writeln!(out, "map {plain}: {domain} -> {codomain}");
            let (x, y) = (map.domain(), map.codomain());
            for k in 0..=map.dim() {
                line(
                    out,
                    &format!("comp {k}"),
                    map.component(k)
                        .iter()
                        .enumerate()
                        .map(|(i, &j)| format!("{}=>{}", x.name(k, i), y.name(k, j))),
                );
            }
        }
        Item::Category(c) => {
            header(out, "category", name, "");
            line(out, "objects", c.objects().iter().cloned());
            line(
                out,
                "morphisms",
                c.morphisms()[c.num_objects()..]
                    .iter()
                    .map(|m| format!("{}: {}->{}", m.name, c.object_name(m.src), c.object_name(m.tgt))),
            );
            line(out, "compose", composites(c));
        }
        Item::Functor {
            domain,
            codomain,
            functor,
        } => {
            let _ = writeln!(out, "functor {plain}: {domain} -> {codomain}");
            let (a, b) = (functor.domain(), functor.codomain());
            line(
                out,
                "obj",
                (0..a.num_objects()).map(|o| format!("{}=>{}", a.object_name(o), b.object_name(functor.obj(o)))),
            );
            // identities are implied by the object map unless sent elsewhere
            line(
                out,
                "mor",
                (0..a.num_morphisms())
                    .filter(|&m| !a.is_identity(m) || functor.mor(m) != b.identity(functor.obj(m)))
                    .map(|m| format!("{}=>{}", a.morphism_name(m), b.morphism_name(functor.mor(m)))),
            );
        }
        Item::Nat { source, target, nat } => {
            let _ = writeln!(out, "nat {plain}: {source} => {target}");
            let (a, b) = (nat.source().domain(), nat.source().codomain());
            line(
                out,
                "comp",
                (0..a.num_objects()).map(|o| format!("{}=>{}", a.object_name(o), b.morphism_name(nat.component(o)))),
            );
        }
        Item::AdjEquiv { s, t, equivalence } => {
            let _ = writeln!(out, "adjequiv {plain}: {s} {t}");
            let (a, b) = (equivalence.a(), equivalence.b());
            line(
                out,
                "eta",
                (0..a.num_objects()).map(|o| {
                    format!(
                        "{}=>{}",
                        a.object_name(o),
                        a.morphism_name(equivalence.eta().component(o))
                    )
                }),
            );
            line(
                out,
                "eps",
                (0..b.num_objects()).map(|o| {
                    format!(
                        "{}=>{}",
                        b.object_name(o),
                        b.morphism_name(equivalence.eps().component(o))
                    )
                }),
            );
        }
        Item::Span { left, right, .. } => {
            let _ = writeln!(out, "span {plain}: {left} {right}");
        }
        Item::Algebra { carrier, algebra } => {
            let _ = writeln!(out, "algebra {plain}: {carrier}");
            let x = algebra.carrier();
            let (units, binary) = algebra.table().expect("document algebras are tabulated");
            line(
                out,
                "unit",
                units
                    .iter()
                    .enumerate()
                    .map(|(o, &u)| format!("{}=>{}", x.name(0, o), x.name(1, u))),
            );
            let mut entries = Vec::new();
            for f in 0..x.len(1) {
                for g in (0..x.len(1)).filter(|&g| x.src(1, g) == x.tgt(1, f)) {
                    let h = binary[&(g, f)];
                    entries.push(format!("{}.{} = {}", x.name(1, g), x.name(1, f), x.name(1, h)));
                }
            }
            line(out, "eval", entries);
        }
    }
}
