//! Dimension one: paths in a 1-globular set, the free category monad on
//! them, its algebras (categories presented by a path evaluator), the nerve
//! of a finite category, and span equivalence between algebras.
//!
//! Path sets are infinite as soon as the graph has a cycle, so every law
//! here is checked up to a length bound.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::fincat::{FinCategory, FinFunctor};
use crate::globular::{equivalence_profile, same_set, GlobularMap, GlobularSet};
use crate::names::identity_name;
use crate::report::{PropertyReport, Witness};
use crate::span::Span;

pub const DEFAULT_BOUND: usize = 4;

/// `(g, f) -> g∘f` on 1-cells.
pub type BinaryTable = HashMap<(usize, usize), usize>;

fn require_dim_one(g: &GlobularSet, what: &str) -> Result<()> {
    if g.dim() == 1 {
        Ok(())
    } else {
        Err(Error::Mismatch(format!("{what} has dimension {}, expected 1", g.dim())))
    }
}

fn require_bound(bound: usize) -> Result<()> {
    if bound == 0 {
        Err(Error::Domain("length bound must be at least 1".into()))
    } else {
        Ok(())
    }
}

/// A path of 1-cells. An empty path is the trivial path at `start`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Path {
    pub start: usize,
    pub edges: Vec<usize>,
}

impl Path {
    pub fn new(base: &GlobularSet, start: usize, edges: Vec<usize>) -> Result<Self> {
        require_dim_one(base, "path base")?;
        if start >= base.len(0) {
            return Err(Error::Domain(format!("no 0-cell with index {start}")));
        }
        let mut at = start;
        for &e in &edges {
            if e >= base.len(1) {
                return Err(Error::Domain(format!("no 1-cell with index {e}")));
            }
            if base.src(1, e) != at {
                return Err(Error::Precondition(format!(
                    "edge `{}` does not start at `{}`",
                    base.name(1, e),
                    base.name(0, at)
                )));
            }
            at = base.tgt(1, e);
        }
        Ok(Path { start, edges })
    }

    pub fn empty(start: usize) -> Self {
        Path {
            start,
            edges: Vec::new(),
        }
    }

    /// The unit of the monad: a single edge as a path.
    pub fn unit(base: &GlobularSet, edge: usize) -> Self {
        Path {
            start: base.src(1, edge),
            edges: vec![edge],
        }
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn end(&self, base: &GlobularSet) -> usize {
        self.edges.last().map_or(self.start, |&e| base.tgt(1, e))
    }

    /// Sub-path of edges `from..to`.
    pub fn slice(&self, base: &GlobularSet, from: usize, to: usize) -> Path {
        let start = if from == 0 {
            self.start
        } else {
            base.tgt(1, self.edges[from - 1])
        };
        Path {
            start,
            edges: self.edges[from..to].to_vec(),
        }
    }

    /// Applies a map of 1-globular sets edgewise.
    pub fn map(&self, f: &GlobularMap) -> Path {
        Path {
            start: f.apply(0, self.start),
            edges: self.edges.iter().map(|&e| f.apply(1, e)).collect(),
        }
    }

    pub fn render(&self, base: &GlobularSet) -> String {
        if self.edges.is_empty() {
            format!("<{}>", base.name(0, self.start))
        } else {
            self.edges
                .iter()
                .map(|&e| base.name(1, e))
                .collect::<Vec<_>>()
                .join(" ")
        }
    }
}

/// All paths of length at most `bound`, shortest first, then by edge index.
pub fn paths_up_to(base: &GlobularSet, bound: usize) -> Vec<Path> {
    let mut out: Vec<Path> = (0..base.len(0)).map(Path::empty).collect();
    let mut frontier = out.clone();
    for _ in 0..bound {
        let mut next = Vec::new();
        for p in &frontier {
            let end = p.end(base);
            for e in (0..base.len(1)).filter(|&e| base.src(1, e) == end) {
                let mut edges = p.edges.clone();
                edges.push(e);
                next.push(Path { start: p.start, edges });
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

/// A path of paths: consecutive segments, each starting where the previous
/// one ends. Segments may be empty.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NestedPath {
    pub start: usize,
    pub segments: Vec<Path>,
}

impl NestedPath {
    /// The unit at the outer level: the whole path as one segment.
    pub fn wrap(p: &Path) -> Self {
        NestedPath {
            start: p.start,
            segments: vec![p.clone()],
        }
    }

    /// The unit applied inside: every edge its own segment.
    pub fn wrap_edges(base: &GlobularSet, p: &Path) -> Self {
        NestedPath {
            start: p.start,
            segments: p.edges.iter().map(|&e| Path::unit(base, e)).collect(),
        }
    }

    /// Multiplication of the monad: concatenation.
    pub fn flatten(&self) -> Path {
        Path {
            start: self.start,
            edges: self.segments.iter().flat_map(|s| s.edges.iter().copied()).collect(),
        }
    }

    pub fn total_len(&self) -> usize {
        self.segments.iter().map(Path::len).sum()
    }

    pub fn render(&self, base: &GlobularSet) -> String {
        self.segments
            .iter()
            .map(|s| {
                let inner: Vec<&str> = s.edges.iter().map(|&e| base.name(1, e)).collect();
                format!("[{}]", inner.join(" "))
            })
            .collect()
    }
}

/// Cut points `0 = c0 <= c1 <= ... <= ck = len` for every `k` in `1..=max_parts`.
fn splittings(len: usize, max_parts: usize) -> Vec<Vec<usize>> {
    fn go(len: usize, parts_left: usize, cuts: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let last = *cuts.last().expect("cuts start at 0");
        if parts_left == 1 {
            cuts.push(len);
            out.push(cuts.clone());
            cuts.pop();
            return;
        }
        for c in last..=len {
            cuts.push(c);
            go(len, parts_left - 1, cuts, out);
            cuts.pop();
        }
    }
    let mut out = Vec::new();
    for k in 1..=max_parts {
        go(len, k, &mut vec![0], &mut out);
    }
    out
}

/// Every way to cut `p` into at most `max_parts` consecutive segments.
pub fn nestings(base: &GlobularSet, p: &Path, max_parts: usize) -> Vec<NestedPath> {
    splittings(p.len(), max_parts)
        .into_iter()
        .map(|cuts| NestedPath {
            start: p.start,
            segments: cuts.windows(2).map(|w| p.slice(base, w[0], w[1])).collect(),
        })
        .collect()
}

/// Checks the monad laws on paths of length at most `bound`: both unit laws
/// for flattening, and associativity of flattening on three-level nestings
/// with at most `bound` parts per level.
pub fn check_monad_laws(base: &GlobularSet, bound: usize) -> Result<PropertyReport> {
    require_dim_one(base, "carrier")?;
    require_bound(bound)?;
    let mut unit = PropertyReport::new("unit laws");
    let mut assoc = PropertyReport::new("flatten associativity");
    for p in paths_up_to(base, bound) {
        if NestedPath::wrap(&p).flatten() != p {
            unit.push(Witness::new("flatten(wrap p) != p", [p.render(base)]));
        }
        if NestedPath::wrap_edges(base, &p).flatten() != p {
            unit.push(Witness::new("flatten(wrap each edge) != p", [p.render(base)]));
        }
        for outer in splittings(p.len(), bound) {
            // level-two segments, grouped into level-one segments
            let pieces: Vec<Path> = outer.windows(2).map(|w| p.slice(base, w[0], w[1])).collect();
            for groups in splittings(pieces.len(), bound) {
                let nested: Vec<NestedPath> = groups
                    .windows(2)
                    .map(|w| NestedPath {
                        start: if w[0] < pieces.len() {
                            pieces[w[0]].start
                        } else {
                            p.end(base)
                        },
                        segments: pieces[w[0]..w[1]].to_vec(),
                    })
                    .collect();
                let inner_first = NestedPath {
                    start: p.start,
                    segments: nested.iter().map(NestedPath::flatten).collect(),
                }
                .flatten();
                let outer_first = NestedPath {
                    start: p.start,
                    segments: nested.iter().flat_map(|n| n.segments.iter().cloned()).collect(),
                }
                .flatten();
                if inner_first != outer_first || inner_first != p {
                    assoc.push(Witness::new("flatten not associative", [p.render(base)]));
                }
            }
        }
    }
    Ok(PropertyReport::all("monad laws", vec![unit, assoc]))
}

/// The free category on a 1-globular set, truncated to paths of length at
/// most `bound`. When a concatenation would be longer than the bound the
/// composite is left undefined and `truncated` is set.
#[derive(Debug, Clone)]
pub struct BoundedFreeCategory {
    base: Arc<GlobularSet>,
    paths: Vec<Path>,
    index: HashMap<Path, usize>,
    truncated: bool,
}

pub fn free_category_bounded(base: Arc<GlobularSet>, bound: usize) -> Result<BoundedFreeCategory> {
    require_dim_one(&base, "graph")?;
    require_bound(bound)?;
    let paths = paths_up_to(&base, bound);
    let index: HashMap<Path, usize> = paths.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    // composites escape the bound iff some path longer than the bound exists
    let truncated = paths.iter().any(|p| p.len() == bound && extends(&base, p));
    Ok(BoundedFreeCategory {
        base,
        paths,
        index,
        truncated,
    })
}

fn extends(base: &GlobularSet, p: &Path) -> bool {
    let end = p.end(base);
    (0..base.len(1)).any(|e| base.src(1, e) == end)
}

impl BoundedFreeCategory {
    pub fn base(&self) -> &Arc<GlobularSet> {
        &self.base
    }

    pub fn paths(&self) -> &[Path] {
        &self.paths
    }

    pub fn num_morphisms(&self) -> usize {
        self.paths.len()
    }

    pub fn truncated(&self) -> bool {
        self.truncated
    }

    pub fn path_index(&self, p: &Path) -> Option<usize> {
        self.index.get(p).copied()
    }

    /// `g ∘ f` as path indices, when the concatenation stays within the bound.
    pub fn compose(&self, g: usize, f: usize) -> Option<usize> {
        let (pf, pg) = (&self.paths[f], &self.paths[g]);
        if pf.end(&self.base) != pg.start {
            return None;
        }
        let mut edges = pf.edges.clone();
        edges.extend(&pg.edges);
        self.path_index(&Path { start: pf.start, edges })
    }

    /// Name of a path: `id_<x>` for trivial paths, otherwise edge names in
    /// order of traversal joined by `;`.
    pub fn path_name(&self, i: usize) -> String {
        let p = &self.paths[i];
        if p.is_empty() {
            identity_name(self.base.name(0, p.start))
        } else {
            p.edges
                .iter()
                .map(|&e| self.base.name(1, e))
                .collect::<Vec<_>>()
                .join(";")
        }
    }

    /// The free category itself; only available when nothing was truncated.
    pub fn to_category(&self) -> Result<FinCategory> {
        if self.truncated {
            return Err(Error::Precondition(
                "path bound truncates composition; the free category is not finite at this bound".into(),
            ));
        }
        let n = self.base.len(0);
        let arrows = (n..self.paths.len())
            .map(|i| (self.path_name(i), self.paths[i].start, self.paths[i].end(&self.base)))
            .collect();
        FinCategory::from_fn(self.base.cells(0).to_vec(), arrows, |g, f| {
            self.compose(g, f).expect("untruncated composites exist")
        })
    }
}

#[derive(Clone)]
enum Evaluator {
    /// Units per 0-cell and binary composites `(g, f) -> g ∘ f`, folded
    /// from the left along the path.
    Table {
        units: Vec<usize>,
        binary: BinaryTable,
    },
    Custom(Arc<dyn Fn(&Path) -> usize + Send + Sync>),
}

/// An algebra for the free category monad: a 1-globular carrier together
/// with an evaluation of every path to a 1-cell.
#[derive(Clone)]
pub struct OneAlgebra {
    carrier: Arc<GlobularSet>,
    eval: Evaluator,
}

impl fmt::Debug for OneAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("OneAlgebra")
            .field("carrier", &self.carrier)
            .field("tabulated", &matches!(self.eval, Evaluator::Table { .. }))
            .finish()
    }
}

impl OneAlgebra {
    /// An algebra given by unit cells and a composition table. The table
    /// must have an entry for every composable pair of 1-cells.
    pub fn from_table(carrier: Arc<GlobularSet>, units: Vec<usize>, binary: BinaryTable) -> Result<Self> {
        require_dim_one(&carrier, "carrier")?;
        let mut issues = Vec::new();
        if units.len() != carrier.len(0) {
            issues.push(format!("expected {} unit cells, got {}", carrier.len(0), units.len()));
        }
        if units.iter().any(|&u| u >= carrier.len(1)) {
            issues.push("unit cell out of range".into());
        }
        for f in 0..carrier.len(1) {
            for g in (0..carrier.len(1)).filter(|&g| carrier.src(1, g) == carrier.tgt(1, f)) {
                match binary.get(&(g, f)) {
                    None => issues.push(format!("no value for `{}.{}`", carrier.name(1, g), carrier.name(1, f))),
                    Some(&h) if h >= carrier.len(1) => issues.push(format!(
                        "value of `{}.{}` out of range",
                        carrier.name(1, g),
                        carrier.name(1, f)
                    )),
                    Some(_) => {}
                }
            }
        }
        for &(g, f) in binary.keys() {
            if g >= carrier.len(1) || f >= carrier.len(1) || carrier.src(1, g) != carrier.tgt(1, f) {
                issues.push("table entry for a non-composable pair".into());
                break;
            }
        }
        if issues.is_empty() {
            Ok(OneAlgebra {
                carrier,
                eval: Evaluator::Table { units, binary },
            })
        } else {
            Err(Error::Structural(issues))
        }
    }

    /// An algebra given by an arbitrary evaluation function. The function
    /// must return a 1-cell index for every path; laws are not checked here.
    pub fn from_fn(carrier: Arc<GlobularSet>, eval: impl Fn(&Path) -> usize + Send + Sync + 'static) -> Result<Self> {
        require_dim_one(&carrier, "carrier")?;
        Ok(OneAlgebra {
            carrier,
            eval: Evaluator::Custom(Arc::new(eval)),
        })
    }

    pub fn carrier(&self) -> &Arc<GlobularSet> {
        &self.carrier
    }

    pub fn eval(&self, p: &Path) -> usize {
        match &self.eval {
            Evaluator::Table { units, binary } => match p.edges.split_first() {
                None => units[p.start],
                Some((&first, rest)) => rest.iter().fold(first, |acc, &g| binary[&(g, acc)]),
            },
            Evaluator::Custom(f) => f(p),
        }
    }

    /// Unit cells and binary table, when the algebra is tabulated.
    pub fn table(&self) -> Option<(&[usize], &BinaryTable)> {
        match &self.eval {
            Evaluator::Table { units, binary } => Some((units, binary)),
            Evaluator::Custom(_) => None,
        }
    }

    /// Tabulates the evaluator on paths of length zero and two.
    pub fn tabulate(&self) -> Result<OneAlgebra> {
        let c = &self.carrier;
        let units = (0..c.len(0)).map(|x| self.eval(&Path::empty(x))).collect();
        let mut binary = HashMap::new();
        for f in 0..c.len(1) {
            for g in (0..c.len(1)).filter(|&g| c.src(1, g) == c.tgt(1, f)) {
                binary.insert(
                    (g, f),
                    self.eval(&Path {
                        start: c.src(1, f),
                        edges: vec![f, g],
                    }),
                );
            }
        }
        OneAlgebra::from_table(c.clone(), units, binary)
    }
}

/// The underlying 1-globular set of a category: objects as 0-cells and
/// every morphism, identities included, as a 1-cell.
pub fn underlying_graph(c: &FinCategory) -> GlobularSet {
    let morphisms = c.morphisms();
    GlobularSet::from_indices(
        1,
        vec![c.objects().to_vec(), morphisms.iter().map(|m| m.name.clone()).collect()],
        vec![morphisms.iter().map(|m| m.src).collect()],
        vec![morphisms.iter().map(|m| m.tgt).collect()],
    )
    .expect("categories have valid underlying graphs")
}

/// The nerve: the underlying graph with paths evaluated by composition.
pub fn nerve(c: &FinCategory) -> OneAlgebra {
    let carrier = Arc::new(underlying_graph(c));
    let units = (0..c.num_objects()).map(|o| c.identity(o)).collect();
    let binary = c.composable_pairs().map(|(g, f)| ((g, f), c.comp(g, f))).collect();
    OneAlgebra::from_table(carrier, units, binary).expect("composition tables are total")
}

/// The map of underlying graphs of a functor.
pub fn nerve_functor(f: &FinFunctor) -> GlobularMap {
    GlobularMap::from_indices(
        Arc::new(underlying_graph(f.domain())),
        Arc::new(underlying_graph(f.codomain())),
        vec![f.object_map().to_vec(), f.morphism_map().to_vec()],
    )
    .expect("functors preserve endpoints")
}

/// Reads a functor off a map between nerves. The result is checked with
/// the functor laws by the caller; endpoint preservation is checked here.
pub fn functor_from_nerve_map(
    f: &GlobularMap,
    domain: Arc<FinCategory>,
    codomain: Arc<FinCategory>,
) -> Result<FinFunctor> {
    if f.dim() != 1 {
        return Err(Error::Mismatch("expected a map of 1-globular sets".into()));
    }
    if **f.domain() != underlying_graph(&domain) || **f.codomain() != underlying_graph(&codomain) {
        return Err(Error::Mismatch(
            "map is not between the nerves of the given categories".into(),
        ));
    }
    FinFunctor::new(domain, codomain, f.component(0).to_vec(), f.component(1).to_vec())
}

/// Checks typing, the unit law on single edges and the multiplication law
/// on all nestings with total length at most `bound` and at most `bound`
/// segments.
pub fn check_algebra_laws(alg: &OneAlgebra, bound: usize) -> Result<PropertyReport> {
    require_bound(bound)?;
    let c = &alg.carrier;
    let mut typing = PropertyReport::new("typing");
    let mut unit = PropertyReport::new("unit law");
    let mut mult = PropertyReport::new("multiplication law");
    let paths = paths_up_to(c, bound);
    for p in &paths {
        let v = alg.eval(p);
        if v >= c.len(1) || c.src(1, v) != p.start || c.tgt(1, v) != p.end(c) {
            typing.push(Witness::new("value has wrong endpoints", [p.render(c)]));
        }
    }
    for e in 0..c.len(1) {
        if alg.eval(&Path::unit(c, e)) != e {
            unit.push(Witness::new("eval of a single edge", [c.name(1, e)]));
        }
    }
    // evaluated segments need not form a path when typing fails
    if !typing.verdict() {
        return Ok(PropertyReport::all("algebra laws", vec![typing, unit, mult]));
    }
    for p in &paths {
        let whole = alg.eval(p);
        for nested in nestings(c, p, bound) {
            let evaluated = Path {
                start: p.start,
                edges: nested.segments.iter().map(|s| alg.eval(s)).collect(),
            };
            if alg.eval(&evaluated) != whole {
                mult.push(Witness::new("eval(flatten) != eval(eval each)", [nested.render(c)]));
            }
        }
    }
    Ok(PropertyReport::all("algebra laws", vec![typing, unit, mult]))
}

/// Checks that `f` commutes with evaluation on every path of length at
/// most `bound`, trivial paths included.
pub fn is_algebra_map(f: &GlobularMap, src: &OneAlgebra, dst: &OneAlgebra, bound: usize) -> Result<PropertyReport> {
    if !same_set(f.domain(), &src.carrier) || !same_set(f.codomain(), &dst.carrier) {
        return Err(Error::Mismatch("map is not between the algebra carriers".into()));
    }
    let mut report = PropertyReport::new("algebra map");
    for p in paths_up_to(&src.carrier, bound) {
        if f.apply(1, src.eval(&p)) != dst.eval(&p.map(f)) {
            report.push(Witness::new("f(eval p) != eval(f p)", [p.render(&src.carrier)]));
        }
    }
    Ok(report)
}

/// Span equivalence of algebras: both legs are algebra maps and both have
/// the equivalence profile of 1-globular maps.
pub fn span_equivalence_wk1(
    span: &Span,
    apex: &OneAlgebra,
    left: &OneAlgebra,
    right: &OneAlgebra,
    bound: usize,
) -> Result<PropertyReport> {
    let mut left_map = is_algebra_map(span.left(), apex, left, bound)?;
    left_map.name = "left leg algebra map".into();
    let mut right_map = is_algebra_map(span.right(), apex, right, bound)?;
    right_map.name = "right leg algebra map".into();
    let mut left_profile = equivalence_profile(span.left());
    left_profile.name = "left leg profile".into();
    let mut right_profile = equivalence_profile(span.right());
    right_profile.name = "right leg profile".into();
    Ok(PropertyReport::all(
        "span equivalence of algebras",
        vec![left_map, right_map, left_profile, right_profile],
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::{check_category_laws, functor_props, CategoryBuilder};
    use crate::globular::{validate_globular, RawGlobularSet};

    fn graph(raw: RawGlobularSet) -> Arc<GlobularSet> {
        Arc::new(validate_globular(&raw).unwrap())
    }

    fn walking_iso() -> FinCategory {
        CategoryBuilder::new()
            .objects(["a0", "a1"])
            .arrow("i", "a0", "a1")
            .arrow("j", "a1", "a0")
            .compose("j", "i", "id_a0")
            .compose("i", "j", "id_a1")
            .build()
            .unwrap()
    }

    #[test]
    fn free_category_on_an_arrow() {
        let g = graph(RawGlobularSet::new(1).cells(0, ["x", "y"]).cell(1, "f", "x", "y"));
        let free = free_category_bounded(g, 2).unwrap();
        assert_eq!(free.num_morphisms(), 3);
        assert!(!free.truncated());
        let c = free.to_category().unwrap();
        assert!(check_category_laws(&c).verdict());
        assert_eq!(c.morphism_name(2), "f");
    }

    #[test]
    fn free_category_on_a_loop_is_truncated() {
        let g = graph(RawGlobularSet::new(1).cells(0, ["x"]).cell(1, "e", "x", "x"));
        let free = free_category_bounded(g, 3).unwrap();
        assert_eq!(free.num_morphisms(), 4);
        assert!(free.truncated());
        assert_eq!(free.path_name(2), "e;e");
        assert_eq!(free.compose(2, 1), Some(3));
        assert_eq!(free.compose(2, 2), None);
        assert!(free.to_category().is_err());
    }

    #[test]
    fn free_category_without_edges_is_discrete() {
        let g = graph(RawGlobularSet::new(1).cells(0, ["x", "y"]));
        let c = free_category_bounded(g, 1).unwrap().to_category().unwrap();
        assert_eq!(c, FinCategory::discrete(["x", "y"]));
    }

    #[test]
    fn free_category_on_a_composable_pair() {
        let g = graph(
            RawGlobularSet::new(1)
                .cells(0, ["x", "y", "z"])
                .cell(1, "f", "x", "y")
                .cell(1, "g", "y", "z"),
        );
        let c = free_category_bounded(g.clone(), 2).unwrap().to_category().unwrap();
        assert_eq!(c.num_morphisms(), 6);
        assert!(check_category_laws(&c).verdict());
        assert!(free_category_bounded(g, 0).is_err());
    }

    #[test]
    fn nerve_of_walking_iso() {
        let c = walking_iso();
        let n = nerve(&c);
        assert_eq!(n.carrier().len(0), 2);
        assert_eq!(n.carrier().len(1), 4);
        let (i, j) = (c.morphism_index("i").unwrap(), c.morphism_index("j").unwrap());
        let p = Path::new(n.carrier(), 0, vec![i, j]).unwrap();
        assert_eq!(n.eval(&p), c.identity(0));
        assert!(check_algebra_laws(&n, 4).unwrap().verdict());
    }

    #[test]
    fn nerve_of_terminal() {
        let n = nerve(&FinCategory::terminal());
        assert_eq!(n.carrier().len(1), 1);
        assert!(check_algebra_laws(&n, 4).unwrap().verdict());
    }

    #[test]
    fn dropping_the_last_edge_breaks_the_unit_law() {
        let c = walking_iso();
        let n = nerve(&c);
        let inner = n.clone();
        let carrier = n.carrier().clone();
        let broken = OneAlgebra::from_fn(carrier.clone(), move |p| {
            let mut q = p.clone();
            q.edges.pop();
            inner.eval(&q)
        })
        .unwrap();
        let report = check_algebra_laws(&broken, 2).unwrap();
        assert!(!report.verdict());
        let unit = report.part("unit law").unwrap();
        assert_eq!(unit.witnesses[0].items, ["i"]);
    }

    #[test]
    fn empty_carrier_passes_vacuously() {
        let carrier = Arc::new(GlobularSet::empty(1));
        let alg = OneAlgebra::from_table(carrier.clone(), Vec::new(), HashMap::new()).unwrap();
        assert!(check_algebra_laws(&alg, 4).unwrap().verdict());
        assert!(check_monad_laws(&carrier, 4).unwrap().verdict());
    }

    #[test]
    fn incomplete_tables_are_rejected() {
        let carrier = graph(RawGlobularSet::new(1).cells(0, ["x"]).cell(1, "e", "x", "x"));
        assert!(matches!(
            OneAlgebra::from_table(carrier, vec![0], HashMap::new()),
            Err(Error::Structural(_))
        ));
    }

    #[test]
    fn monad_laws_on_a_loop() {
        let g = graph(
            RawGlobularSet::new(1)
                .cells(0, ["x"])
                .cell(1, "e", "x", "x")
                .cell(1, "d", "x", "x"),
        );
        assert!(check_monad_laws(&g, 4).unwrap().verdict());
    }

    #[test]
    fn splitting_counts() {
        // compositions of 2 into at most 3 possibly empty parts: 1 + 3 + 6
        assert_eq!(splittings(2, 3).len(), 10);
        assert_eq!(splittings(0, 2).len(), 2);
    }

    #[test]
    fn functor_maps_are_algebra_maps() {
        let iso = Arc::new(walking_iso());
        let one = Arc::new(FinCategory::terminal());
        let f = FinFunctor::to_terminal(iso.clone());
        let (src, dst) = (nerve(&iso), nerve(&one));
        let m = nerve_functor(&f);
        assert!(is_algebra_map(&m, &src, &dst, 4).unwrap().verdict());
        let back = functor_from_nerve_map(&m, iso, one).unwrap();
        assert_eq!(back, f);
        let id = GlobularMap::identity(src.carrier().clone());
        assert!(is_algebra_map(&id, &src, &src, 4).unwrap().verdict());
    }

    fn z2() -> Arc<FinCategory> {
        Arc::new(
            CategoryBuilder::new()
                .objects(["x"])
                .arrow("s", "x", "x")
                .compose("s", "s", "id_x")
                .build()
                .unwrap(),
        )
    }

    #[test]
    fn map_breaking_identities_is_not_an_algebra_map() {
        let n = nerve(&z2());
        let m = GlobularMap::from_indices(n.carrier().clone(), n.carrier().clone(), vec![vec![0], vec![1, 1]]).unwrap();
        let report = is_algebra_map(&m, &n, &n, 4).unwrap();
        assert!(!report.verdict());
        assert_eq!(report.witnesses[0].items, ["<x>"]);
    }

    #[test]
    fn nerve_preserves_and_reflects_properties() {
        let z2 = z2();
        let iso = Arc::new(walking_iso());
        let functors = [
            FinFunctor::to_terminal(z2.clone()),
            FinFunctor::identity(z2),
            FinFunctor::to_terminal(iso.clone()),
            FinFunctor::new(Arc::new(FinCategory::discrete(["p", "q"])), iso, vec![0, 0], vec![0, 0]).unwrap(),
        ];
        for f in functors {
            let profile = equivalence_profile(&nerve_functor(&f));
            let props = functor_props(&f);
            for (a, b) in profile.parts.iter().zip(&props.parts) {
                assert_eq!(a.verdict(), b.verdict(), "{} vs {}", a.name, b.name);
            }
        }
    }
}
