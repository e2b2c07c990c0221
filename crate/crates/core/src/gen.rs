//! Seeded random generators for the property suites: globular sets, maps
//! and cospans, commuting cones, span equivalences, small categories and
//! adjoint equivalences between them.

use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::fincat::{
    promote_to_adjoint_equivalence, AdjointEquivalence, CategoryBuilder, FinCategory, FinFunctor, NatTrans,
};
use crate::globular::{equivalence_profile, GlobularMap, GlobularSet};
use crate::limits::pullback_globular;
use crate::one_alg::free_category_bounded;
use crate::span::Span;

pub type GenRng = ChaCha8Rng;

pub fn rng(seed: u64) -> GenRng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn cell_name(k: usize, i: usize) -> String {
    const PREFIX: [&str; 4] = ["x", "f", "s", "m"];
    format!("{}{i}", PREFIX.get(k).copied().unwrap_or("c"))
}

/// A random globular set with `1..=max_cells` cells in each dimension.
pub fn random_globular(rng: &mut GenRng, dim: usize, max_cells: usize) -> GlobularSet {
    let mut cells = vec![(0..rng.gen_range(1..=max_cells))
        .map(|i| cell_name(0, i))
        .collect::<Vec<_>>()];
    let mut src = Vec::new();
    let mut tgt = Vec::new();
    for k in 1..=dim {
        let count = rng.gen_range(1..=max_cells);
        let below = cells[k - 1].len();
        let mut s = Vec::with_capacity(count);
        let mut t = Vec::with_capacity(count);
        for _ in 0..count {
            let a = rng.gen_range(0..below);
            let b = if k == 1 {
                rng.gen_range(0..below)
            } else {
                let (ps, pt): (&Vec<usize>, &Vec<usize>) = (&src[k - 2], &tgt[k - 2]);
                let candidates: Vec<usize> = (0..below).filter(|&b| ps[b] == ps[a] && pt[b] == pt[a]).collect();
                *candidates.choose(rng).expect("a is parallel to itself")
            };
            s.push(a);
            t.push(b);
        }
        cells.push((0..count).map(|i| cell_name(k, i)).collect());
        src.push(s);
        tgt.push(t);
    }
    GlobularSet::from_indices(dim, cells, src, tgt).expect("generated sets are globular")
}

/// Lifting policy for [`random_cover`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoverMode {
    /// 0 to 2 lifts everywhere: an arbitrary map.
    Random,
    /// 1 or 2 lifts of each cell over every admissible boundary, exactly one
    /// in the top dimension: a map with the equivalence profile.
    Equivalence,
}

/// Builds `X` together with a map `X -> y` by lifting the cells of `y`
/// dimension by dimension, within `max_cells` cells per dimension.
///
/// In [`CoverMode::Equivalence`] draws are rejected until the map has the
/// equivalence profile. Fullness in dimension `k >= 2` quantifies over all
/// pairs of `(k-1)`-cells, parallel or not, so lifting a cell that bounds a
/// higher cell more than once usually fails it; after a few rejected draws
/// the result is an isomorphic copy of `y`.
pub fn random_cover(rng: &mut GenRng, y: &Arc<GlobularSet>, mode: CoverMode, max_cells: usize) -> GlobularMap {
    match mode {
        CoverMode::Random => lift(rng, y, max_cells, |rng, _| rng.gen_range(0..=2), true).expect("truncation allowed"),
        CoverMode::Equivalence => {
            let n = y.dim();
            for _ in 0..16 {
                let drawn = lift(
                    rng,
                    y,
                    max_cells,
                    |rng, k| {
                        if k == n && k > 0 {
                            1
                        } else {
                            1 + usize::from(rng.gen_bool(0.3))
                        }
                    },
                    false,
                );
                if let Some(f) = drawn.filter(|f| equivalence_profile(f).verdict()) {
                    return f;
                }
            }
            lift(rng, y, usize::MAX, |_, _| 1, false).expect("no cap")
        }
    }
}

fn lift(
    rng: &mut GenRng,
    y: &Arc<GlobularSet>,
    max_cells: usize,
    lifts: impl Fn(&mut GenRng, usize) -> usize,
    truncate: bool,
) -> Option<GlobularMap> {
    let n = y.dim();
    let mut over: Vec<Vec<usize>> = vec![Vec::new(); n + 1];
    let mut src: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut tgt: Vec<Vec<usize>> = vec![Vec::new(); n];
    for b in 0..y.len(0) {
        for _ in 0..lifts(rng, 0) {
            if over[0].len() == max_cells {
                if !truncate {
                    return None;
                }
                break;
            }
            over[0].push(b);
        }
    }
    if over[0].is_empty() {
        over[0].push(rng.gen_range(0..y.len(0)));
    }
    for k in 1..=n {
        let mut cells = Vec::new();
        let mut s = Vec::new();
        let mut t = Vec::new();
        // boundary candidates: pairs of lifted (k-1)-cells, parallel in X
        let below = over[k - 1].len();
        let parallel_in_x =
            |a: usize, b: usize| k == 1 || (src[k - 2][a] == src[k - 2][b] && tgt[k - 2][a] == tgt[k - 2][b]);
        let mut order: Vec<usize> = (0..y.len(k)).collect();
        order.shuffle(rng);
        'cells: for beta in order {
            for a in (0..below).filter(|&a| over[k - 1][a] == y.src(k, beta)) {
                for b in (0..below).filter(|&b| over[k - 1][b] == y.tgt(k, beta) && parallel_in_x(a, b)) {
                    for _ in 0..lifts(rng, k) {
                        if cells.len() == max_cells {
                            if !truncate {
                                return None;
                            }
                            break 'cells;
                        }
                        cells.push(beta);
                        s.push(a);
                        t.push(b);
                    }
                }
            }
        }
        over[k] = cells;
        src[k - 1] = s;
        tgt[k - 1] = t;
    }
    let names = over
        .iter()
        .enumerate()
        .map(|(k, cells)| (0..cells.len()).map(|i| cell_name(k, i)).collect())
        .collect();
    let x = GlobularSet::from_indices(n, names, src, tgt).expect("lifts are globular");
    Some(GlobularMap::from_indices(Arc::new(x), y.clone(), over).expect("lifts commute with boundaries"))
}

/// A uniformly random globular map `x -> y` satisfying `allowed`, built
/// dimension by dimension; `None` if some cell has no admissible image.
pub fn random_map_with(
    rng: &mut GenRng,
    x: &Arc<GlobularSet>,
    y: &Arc<GlobularSet>,
    mut allowed: impl FnMut(usize, usize, usize) -> bool,
) -> Option<GlobularMap> {
    if x.dim() != y.dim() {
        return None;
    }
    let mut components: Vec<Vec<usize>> = Vec::new();
    for k in 0..=x.dim() {
        let mut comp = Vec::with_capacity(x.len(k));
        for c in 0..x.len(k) {
            let candidates: Vec<usize> = (0..y.len(k))
                .filter(|&d| {
                    k == 0
                        || (y.src(k, d) == components[k - 1][x.src(k, c)]
                            && y.tgt(k, d) == components[k - 1][x.tgt(k, c)])
                })
                .filter(|&d| allowed(k, c, d))
                .collect();
            comp.push(*candidates.choose(rng)?);
        }
        components.push(comp);
    }
    Some(GlobularMap::from_indices(x.clone(), y.clone(), components).expect("boundaries respected"))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CospanMode {
    /// Both legs arbitrary.
    Random,
    /// `f` has the equivalence profile, `g` is arbitrary.
    CoverLike,
    /// `f` is an identity, `g` arbitrary.
    Iso,
}

/// A cospan `X -f-> Y <-g- Z` with `Y` of dimension `dim`.
pub fn random_cospan(rng: &mut GenRng, dim: usize, max_cells: usize, mode: CospanMode) -> (GlobularMap, GlobularMap) {
    let y = Arc::new(random_globular(rng, dim, max_cells));
    let f = match mode {
        CospanMode::Random => random_cover(rng, &y, CoverMode::Random, max_cells),
        CospanMode::CoverLike => random_cover(rng, &y, CoverMode::Equivalence, max_cells),
        CospanMode::Iso => GlobularMap::identity(y.clone()),
    };
    let g = random_cover(rng, &y, CoverMode::Random, max_cells);
    (f, g)
}

/// A cone `X <-p- W -q-> Z` over the cospan, commuting by construction:
/// `p` is random and each `q(w)` is drawn from the cells of `Z` over `f(p w)`.
/// Built without reference to the pullback.
pub fn random_cone(
    rng: &mut GenRng,
    f: &GlobularMap,
    g: &GlobularMap,
    max_cells: usize,
    attempts: usize,
) -> Option<(GlobularMap, GlobularMap)> {
    for _ in 0..attempts {
        let w = Arc::new(random_globular(rng, f.dim(), max_cells));
        let Some(p) = random_map_with(rng, &w, f.domain(), |_, _, _| true) else {
            continue;
        };
        let q = random_map_with(rng, &w, g.domain(), |k, c, d| {
            g.apply(k, d) == f.apply(k, p.apply(k, c))
        });
        if let Some(q) = q {
            return Some((p, q));
        }
    }
    None
}

/// Two composable spans `X <- S1 -> Y <- S2 -> Z` whose legs have the
/// equivalence profile: `X`, `Y`, `Z` are equivalence covers of a common
/// base, and each span is a pullback over that base.
pub fn random_span_chain(rng: &mut GenRng, dim: usize, max_cells: usize) -> (Span, Span) {
    let base = Arc::new(random_globular(rng, dim, max_cells));
    let covers: Vec<GlobularMap> = (0..3)
        .map(|_| random_cover(rng, &base, CoverMode::Equivalence, max_cells))
        .collect();
    let s1 = pullback_globular(&covers[0], &covers[1]).expect("common base");
    let s2 = pullback_globular(&covers[1], &covers[2]).expect("common base");
    (
        Span::new(s1.left, s1.right).expect("pullback legs share the apex"),
        Span::new(s2.left, s2.right).expect("pullback legs share the apex"),
    )
}

/// Families of small categories.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Terminal,
    Discrete,
    Cyclic,
    Poset,
    WalkingIso,
    FreeAcyclic,
    Idempotent,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::Terminal,
        Family::Discrete,
        Family::Cyclic,
        Family::Poset,
        Family::WalkingIso,
        Family::FreeAcyclic,
        Family::Idempotent,
    ];
}

/// The cyclic group of order `n` as a one-object category.
pub fn cyclic_group(n: usize) -> FinCategory {
    let arrows = (1..n).map(|i| (format!("r{i}"), 0, 0)).collect();
    FinCategory::from_fn(vec!["x".into()], arrows, |g, f| (g + f) % n).expect("cyclic group")
}

pub fn walking_iso() -> FinCategory {
    CategoryBuilder::new()
        .objects(["a0", "a1"])
        .arrow("i", "a0", "a1")
        .arrow("j", "a1", "a0")
        .compose("j", "i", "id_a0")
        .compose("i", "j", "id_a1")
        .build()
        .expect("walking isomorphism")
}

/// The monoid `{1, e}` with `e e = e`.
pub fn idempotent_monoid() -> FinCategory {
    CategoryBuilder::new()
        .objects(["x"])
        .arrow("e", "x", "x")
        .compose("e", "e", "e")
        .build()
        .expect("idempotent monoid")
}

/// A random poset on `n` objects: the reflexive-transitive closure of a
/// random relation compatible with the index order.
pub fn random_poset(rng: &mut GenRng, n: usize) -> FinCategory {
    let mut le = vec![vec![false; n]; n];
    for (i, row) in le.iter_mut().enumerate() {
        for (j, cell) in row.iter_mut().enumerate() {
            *cell = i == j || (i < j && rng.gen_bool(0.5));
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if le[i][k] && le[k][j] {
                    le[i][j] = true;
                }
            }
        }
    }
    let objects: Vec<String> = (0..n).map(|i| format!("p{i}")).collect();
    let mut arrows = Vec::new();
    let mut index = vec![vec![None; n]; n];
    for (i, row) in index.iter_mut().enumerate() {
        row[i] = Some(i);
    }
    for i in 0..n {
        for j in (i + 1)..n {
            if le[i][j] {
                index[i][j] = Some(n + arrows.len());
                arrows.push((format!("le{i}{j}"), i, j));
            }
        }
    }
    let ends: Vec<(usize, usize)> = (0..n)
        .map(|i| (i, i))
        .chain(arrows.iter().map(|a| (a.1, a.2)))
        .collect();
    FinCategory::from_fn(objects, arrows, |g, f| index[ends[f].0][ends[g].1].expect("transitive"))
        .expect("posets are categories")
}

/// The free category on a random acyclic graph.
pub fn random_free_acyclic(rng: &mut GenRng, n: usize) -> FinCategory {
    let mut raw = crate::globular::RawGlobularSet::new(1).cells(0, (0..n).map(|i| format!("v{i}")));
    let mut e = 0;
    for i in 0..n {
        for j in (i + 1)..n {
            if rng.gen_bool(0.4) {
                raw = raw.cell(1, &format!("e{e}"), &format!("v{i}"), &format!("v{j}"));
                e += 1;
            }
        }
    }
    let g = crate::globular::validate_globular(&raw).expect("acyclic graph");
    free_category_bounded(Arc::new(g), n.max(1))
        .and_then(|c| c.to_category())
        .expect("acyclic graphs have finite free categories")
}

pub fn random_category(rng: &mut GenRng, family: Family, max_objects: usize) -> FinCategory {
    let n = rng.gen_range(1..=max_objects.max(1));
    match family {
        Family::Terminal => FinCategory::terminal(),
        Family::Discrete => FinCategory::discrete((0..n).map(|i| format!("d{i}"))),
        Family::Cyclic => cyclic_group(rng.gen_range(1..=3)),
        Family::Poset => random_poset(rng, n),
        Family::WalkingIso => walking_iso(),
        Family::FreeAcyclic => random_free_acyclic(rng, n),
        Family::Idempotent => idempotent_monoid(),
    }
}

/// `c` with object `o` replaced by `copies[o]` isomorphic copies, so the
/// result is equivalent to `c`. Objects are `o~i`, morphisms `f~ij`.
pub fn inflate(c: &FinCategory, copies: &[usize]) -> Inflation {
    let mut objects = Vec::new();
    let mut object_of = Vec::new();
    for (o, &k) in copies.iter().enumerate() {
        for i in 0..k {
            objects.push(format!("{}~{i}", c.object_name(o)));
            object_of.push((o, i));
        }
    }
    let first: Vec<usize> = copies
        .iter()
        .scan(0, |acc, &k| {
            let start = *acc;
            *acc += k;
            Some(start)
        })
        .collect();
    let obj = |o: usize, i: usize| first[o] + i;
    let mut morphism_of: Vec<(usize, usize, usize)> = object_of
        .iter()
        .map(|&(o, i)| (c.identity(o), obj(o, i), obj(o, i)))
        .collect();
    let mut arrows = Vec::new();
    for m in 0..c.num_morphisms() {
        let (s, t) = (c.src(m), c.tgt(m));
        for i in 0..copies[s] {
            for j in 0..copies[t] {
                if c.is_identity(m) && i == j {
                    continue;
                }
                arrows.push((format!("{}~{i}{j}", c.morphism_name(m)), obj(s, i), obj(t, j)));
                morphism_of.push((m, obj(s, i), obj(t, j)));
            }
        }
    }
    let index: std::collections::HashMap<(usize, usize, usize), usize> =
        morphism_of.iter().enumerate().map(|(i, &k)| (k, i)).collect();
    let category = FinCategory::from_fn(objects, arrows, |g, f| {
        let ((pg, _, t), (pf, s, _)) = (morphism_of[g], morphism_of[f]);
        index[&(c.comp(pg, pf), s, t)]
    })
    .expect("inflations are categories");
    Inflation {
        category: Arc::new(category),
        object_of,
        first,
        index,
    }
}

#[derive(Debug, Clone)]
pub struct Inflation {
    pub category: Arc<FinCategory>,
    /// `(object of the base, copy)` per object.
    pub object_of: Vec<(usize, usize)>,
    first: Vec<usize>,
    index: std::collections::HashMap<(usize, usize, usize), usize>,
}

impl Inflation {
    pub fn object(&self, o: usize, copy: usize) -> usize {
        self.first[o] + copy
    }

    /// The morphism with payload `m` between two objects of the inflation.
    pub fn morphism(&self, m: usize, src: usize, tgt: usize) -> usize {
        self.index[&(m, src, tgt)]
    }
}

/// Families `φ_o ∈ Aut(o)` natural in `o`: natural automorphisms of the
/// identity functor.
pub fn central_automorphisms(c: &FinCategory) -> Vec<Vec<usize>> {
    let autos: Vec<Vec<usize>> = (0..c.num_objects())
        .map(|o| c.hom(o, o).iter().copied().filter(|&m| c.is_iso(m)).collect())
        .collect();
    let mut out = Vec::new();
    let mut pick = vec![0; c.num_objects()];
    loop {
        let phi: Vec<usize> = pick.iter().enumerate().map(|(o, &i)| autos[o][i]).collect();
        let natural = (0..c.num_morphisms()).all(|f| c.comp(phi[c.tgt(f)], f) == c.comp(f, phi[c.src(f)]));
        if natural {
            out.push(phi);
        }
        let mut o = 0;
        while o < pick.len() {
            pick[o] += 1;
            if pick[o] < autos[o].len() {
                break;
            }
            pick[o] = 0;
            o += 1;
        }
        if o == pick.len() {
            return out;
        }
    }
}

/// Sizes bounding generated equivalences.
pub const MAX_EQUIV_OBJECTS: usize = 4;
pub const MAX_EQUIV_MORPHISMS: usize = 20;

fn inflation_size(c: &FinCategory, copies: &[usize]) -> (usize, usize) {
    let objects = copies.iter().sum();
    let morphisms = (0..c.num_morphisms())
        .map(|m| copies[c.src(m)] * copies[c.tgt(m)])
        .sum();
    (objects, morphisms)
}

fn random_copies(rng: &mut GenRng, c: &FinCategory) -> Option<Vec<usize>> {
    for _ in 0..16 {
        let copies: Vec<usize> = (0..c.num_objects()).map(|_| rng.gen_range(1..=2)).collect();
        let (o, m) = inflation_size(c, &copies);
        if o <= MAX_EQUIV_OBJECTS && m <= MAX_EQUIV_MORPHISMS {
            return Some(copies);
        }
    }
    let ones = vec![1; c.num_objects()];
    let (o, m) = inflation_size(c, &ones);
    (o <= MAX_EQUIV_OBJECTS && m <= MAX_EQUIV_MORPHISMS).then_some(ones)
}

/// A random adjoint equivalence `A ≃ B` where `A` and `B` are inflations of
/// a common base. `S` and `T` pick random copies, the unit carries a random
/// central automorphism twist, and the counit is obtained by promotion.
pub fn random_equivalence_over(rng: &mut GenRng, base: &FinCategory) -> Option<AdjointEquivalence> {
    let a = inflate(base, &random_copies(rng, base)?);
    let b = inflate(base, &random_copies(rng, base)?);
    let copies = |inf: &Inflation, o: usize| inf.object_of.iter().filter(|p| p.0 == o).count();
    let across = |rng: &mut GenRng, from: &Inflation, to: &Inflation| -> FinFunctor {
        let objects: Vec<usize> = from
            .object_of
            .iter()
            .map(|&(o, _)| to.object(o, rng.gen_range(0..copies(to, o))))
            .collect();
        let morphisms = (0..from.category.num_morphisms())
            .map(|m| {
                let (src, tgt) = (from.category.src(m), from.category.tgt(m));
                let payload = payload_of(from, m);
                to.morphism(payload, objects[src], objects[tgt])
            })
            .collect();
        FinFunctor::new(from.category.clone(), to.category.clone(), objects, morphisms).expect("in range")
    };
    let s = across(rng, &a, &b);
    let t = across(rng, &b, &a);
    let twists = central_automorphisms(base);
    let phi = twists.choose(rng)?;
    let ts = t.after(&s).ok()?;
    let eta: Vec<usize> = (0..a.category.num_objects())
        .map(|x| a.morphism(phi[a.object_of[x].0], x, ts.obj(x)))
        .collect();
    let st = s.after(&t).ok()?;
    let eps0: Vec<usize> = (0..b.category.num_objects())
        .map(|y| b.morphism(base.identity(b.object_of[y].0), st.obj(y), y))
        .collect();
    let eta = NatTrans::new(FinFunctor::identity(a.category.clone()), ts, eta).ok()?;
    let eps0 = NatTrans::new(st, FinFunctor::identity(b.category.clone()), eps0).ok()?;
    promote_to_adjoint_equivalence(&s, &t, &eta, &eps0).ok()
}

fn payload_of(inf: &Inflation, m: usize) -> usize {
    inf.index
        .iter()
        .find_map(|(&(p, _, _), &i)| (i == m).then_some(p))
        .expect("every morphism has a payload")
}

/// A random adjoint equivalence over a random base from `families`.
pub fn random_equivalence(rng: &mut GenRng, families: &[Family]) -> AdjointEquivalence {
    loop {
        let family = *families.choose(rng).expect("at least one family");
        let base = random_category(rng, family, 3);
        if let Some(e) = random_equivalence_over(rng, &base) {
            return e;
        }
    }
}
