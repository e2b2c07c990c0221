//! Helpers shared by the integration suites: fixture loading and brute-force
//! oracles written directly from the defining equations.
#![allow(dead_code)]

use std::path::PathBuf;
use std::sync::Arc;

use globcat::fincat::{CatSpan, FinCategory, FinFunctor};
use globcat::one_alg::{nerve, nerve_functor, OneAlgebra};
use globcat::pres::{parse, Document, Item, Kind};
use globcat::span::Span;
use globcat::GlobularSet;

pub fn fixture_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
}

pub fn fixture(name: &str) -> String {
    std::fs::read_to_string(fixture_path(name)).unwrap_or_else(|e| panic!("{name}: {e}"))
}

pub fn fixture_doc(name: &str) -> Document {
    parse(&fixture(name)).unwrap_or_else(|d| panic!("{name}: {d:?}"))
}

/// The fixed category corpus: every category in `categories.cat`.
pub fn fixture_categories() -> Vec<(String, Arc<FinCategory>)> {
    fixture_doc("categories.cat")
        .of_kind(Kind::Category)
        .map(|e| match &e.item {
            Item::Category(c) => (e.name.clone().expect("named"), c.clone()),
            _ => unreachable!(),
        })
        .collect()
}

/// Every globular map `w -> p`, as component tables, by backtracking over
/// cells in dimension order. A candidate image `d` of a `k`-cell `c` is kept
/// iff `src d = m(src c)` and `tgt d = m(tgt c)`.
pub fn all_maps(w: &GlobularSet, p: &GlobularSet) -> Vec<Vec<Vec<usize>>> {
    assert_eq!(w.dim(), p.dim());
    let cells: Vec<(usize, usize)> = (0..=w.dim()).flat_map(|k| (0..w.len(k)).map(move |c| (k, c))).collect();
    let mut current: Vec<Vec<usize>> = (0..=w.dim()).map(|k| vec![usize::MAX; w.len(k)]).collect();
    let mut out = Vec::new();
    fn go(
        i: usize,
        cells: &[(usize, usize)],
        w: &GlobularSet,
        p: &GlobularSet,
        current: &mut Vec<Vec<usize>>,
        out: &mut Vec<Vec<Vec<usize>>>,
    ) {
        let Some(&(k, c)) = cells.get(i) else {
            out.push(current.clone());
            return;
        };
        for d in 0..p.len(k) {
            if k > 0 && (p.src(k, d) != current[k - 1][w.src(k, c)] || p.tgt(k, d) != current[k - 1][w.tgt(k, c)]) {
                continue;
            }
            current[k][c] = d;
            go(i + 1, cells, w, p, current, out);
        }
        current[k][c] = usize::MAX;
    }
    go(0, &cells, w, p, &mut current, &mut out);
    out
}

/// The image of a span of functors under the nerve, with the three algebras.
pub struct NerveSpan {
    pub span: Span,
    pub apex: OneAlgebra,
    pub left: OneAlgebra,
    pub right: OneAlgebra,
}

pub fn nerve_span(span: &CatSpan) -> NerveSpan {
    NerveSpan {
        span: Span::new(nerve_functor(span.left()), nerve_functor(span.right())).expect("legs share the apex"),
        apex: nerve(span.apex()),
        left: nerve(span.left().codomain()),
        right: nerve(span.right().codomain()),
    }
}

pub fn functor_pairs_first(
    c: &Arc<FinCategory>,
    a: &Arc<FinCategory>,
    b: &Arc<FinCategory>,
) -> Option<(FinFunctor, FinFunctor)> {
    let u = globcat::fincat::enumerate_functors(c, a).into_iter().next()?;
    let v = globcat::fincat::enumerate_functors(c, b).into_iter().next()?;
    Some((u, v))
}
