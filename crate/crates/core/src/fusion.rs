//! The equivalence fusion of an adjoint equivalence `A ≃ B`: a category on
//! the disjoint union of objects, with mixed hom-sets read in `B` through
//! `S`, and its two projections onto `A` and `B`.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::fincat::{
    check_cat_span, compose_equivalences, pseudo_inverse, AdjointEquivalence, CatSpan, FinCategory, FinFunctor,
};
use crate::report::{PropertyReport, Witness};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    A,
    B,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::A => "A",
            Side::B => "B",
        })
    }
}

/// An object of the fusion: an object of `A` or of `B`, tagged.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FusionObject {
    pub side: Side,
    pub payload: usize,
}

/// A morphism `⟨f, x, y⟩`. The payload lives in `A` when both ends are on
/// side `A` and in `B` otherwise: `B(x, y)`, `B(Sx, y)` or `B(x, Sy)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FusionMorphism {
    pub payload: usize,
    pub src: usize,
    pub tgt: usize,
}

#[derive(Debug, Clone)]
pub struct Fusion {
    equivalence: AdjointEquivalence,
    category: Arc<FinCategory>,
    objects: Vec<FusionObject>,
    morphisms: Vec<FusionMorphism>,
}

impl Fusion {
    pub fn category(&self) -> &Arc<FinCategory> {
        &self.category
    }

    pub fn equivalence(&self) -> &AdjointEquivalence {
        &self.equivalence
    }

    pub fn objects(&self) -> &[FusionObject] {
        &self.objects
    }

    pub fn morphisms(&self) -> &[FusionMorphism] {
        &self.morphisms
    }

    pub fn side(&self, object: usize) -> Side {
        self.objects[object].side
    }

    /// Side pattern of a chain of objects, read as binary with `A = 0`.
    pub fn pattern(&self, objects: &[usize]) -> usize {
        objects
            .iter()
            .fold(0, |acc, &o| (acc << 1) | usize::from(self.side(o) == Side::B))
    }
}

/// Renders a side pattern such as `ABBA`.
pub fn pattern_name(pattern: usize, len: usize) -> String {
    (0..len)
        .map(|i| if pattern >> (len - 1 - i) & 1 == 1 { 'B' } else { 'A' })
        .collect()
}

pub fn object_name(side: Side, name: &str) -> String {
    format!("{side}/{name}")
}

/// Builds the fusion category of `e`.
pub fn equivalence_fusion(e: &AdjointEquivalence) -> Fusion {
    let (a, b) = (e.a().clone(), e.b().clone());
    let (s, t, eta) = (e.s(), e.t(), e.eta());
    let objects: Vec<FusionObject> = (0..a.num_objects())
        .map(|x| FusionObject {
            side: Side::A,
            payload: x,
        })
        .chain((0..b.num_objects()).map(|y| FusionObject {
            side: Side::B,
            payload: y,
        }))
        .collect();
    let hom = |x: FusionObject, y: FusionObject| -> &[usize] {
        match (x.side, y.side) {
            (Side::A, Side::A) => a.hom(x.payload, y.payload),
            (Side::B, Side::B) => b.hom(x.payload, y.payload),
            (Side::A, Side::B) => b.hom(s.obj(x.payload), y.payload),
            (Side::B, Side::A) => b.hom(x.payload, s.obj(y.payload)),
        }
    };
    let identity_payload = |o: FusionObject| match o.side {
        Side::A => a.identity(o.payload),
        Side::B => b.identity(o.payload),
    };

    let mut morphisms: Vec<FusionMorphism> = (0..objects.len())
        .map(|o| FusionMorphism {
            payload: identity_payload(objects[o]),
            src: o,
            tgt: o,
        })
        .collect();
    for x in 0..objects.len() {
        for y in 0..objects.len() {
            for &f in hom(objects[x], objects[y]) {
                if x == y && f == identity_payload(objects[x]) {
                    continue;
                }
                morphisms.push(FusionMorphism {
                    payload: f,
                    src: x,
                    tgt: y,
                });
            }
        }
    }
    let index: HashMap<FusionMorphism, usize> = morphisms.iter().enumerate().map(|(i, &m)| (m, i)).collect();

    let payload_name = |m: &FusionMorphism| -> &str {
        match (objects[m.src].side, objects[m.tgt].side) {
            (Side::A, Side::A) => a.morphism_name(m.payload),
            _ => b.morphism_name(m.payload),
        }
    };
    let obj_name = |o: usize| {
        let fo = objects[o];
        match fo.side {
            Side::A => object_name(Side::A, a.object_name(fo.payload)),
            Side::B => object_name(Side::B, b.object_name(fo.payload)),
        }
    };
    let names: Vec<String> = (0..objects.len()).map(obj_name).collect();
    let arrows = morphisms[objects.len()..]
        .iter()
        .map(|m| {
            (
                format!("[{}|{}|{}]", payload_name(m), names[m.src], names[m.tgt]),
                m.src,
                m.tgt,
            )
        })
        .collect();

    let eta_inv: Vec<usize> = (0..a.num_objects())
        .map(|x| a.inverse(eta.component(x)).expect("unit is invertible"))
        .collect();
    let category = FinCategory::from_fn(names, arrows, |gi, fi| {
        let (g, f) = (morphisms[gi], morphisms[fi]);
        let (x, y, z) = (objects[f.src], objects[f.tgt], objects[g.tgt]);
        let payload = match (x.side, y.side, z.side) {
            (Side::A, Side::A, Side::A) => a.comp(g.payload, f.payload),
            (Side::B, Side::B, Side::B) => b.comp(g.payload, f.payload),
            (Side::A, Side::A, Side::B) => b.comp(g.payload, s.mor(f.payload)),
            (Side::A, Side::B, Side::B) => b.comp(g.payload, f.payload),
            (Side::B, Side::B, Side::A) => b.comp(g.payload, f.payload),
            (Side::B, Side::A, Side::A) => b.comp(s.mor(g.payload), f.payload),
            (Side::A, Side::B, Side::A) => a.comp_chain(&[
                eta.component(x.payload),
                t.mor(f.payload),
                t.mor(g.payload),
                eta_inv[z.payload],
            ]),
            (Side::B, Side::A, Side::B) => b.comp(g.payload, f.payload),
        };
        index[&FusionMorphism {
            payload,
            src: f.src,
            tgt: g.tgt,
        }]
    })
    .expect("fusion tables are well formed");
    Fusion {
        equivalence: e.clone(),
        category: Arc::new(category),
        objects,
        morphisms,
    }
}

/// The projection `u` onto `A`: side-`B` objects go through `T`, mixed
/// morphisms through the adjunction bijections `Tf ∘ η_x` and `η_y⁻¹ ∘ Tf`.
pub fn projection_u(fusion: &Fusion) -> FinFunctor {
    let e = &fusion.equivalence;
    let (a, t, eta) = (e.a(), e.t(), e.eta());
    let objects = fusion
        .objects
        .iter()
        .map(|o| match o.side {
            Side::A => o.payload,
            Side::B => t.obj(o.payload),
        })
        .collect();
    let morphisms = fusion
        .morphisms
        .iter()
        .map(|m| {
            let (x, y) = (fusion.objects[m.src], fusion.objects[m.tgt]);
            match (x.side, y.side) {
                (Side::A, Side::A) => m.payload,
                (Side::B, Side::B) => t.mor(m.payload),
                (Side::A, Side::B) => a.comp(t.mor(m.payload), eta.component(x.payload)),
                (Side::B, Side::A) => {
                    let inv = a.inverse(eta.component(y.payload)).expect("unit is invertible");
                    a.comp(inv, t.mor(m.payload))
                }
            }
        })
        .collect();
    FinFunctor::new(fusion.category.clone(), a.clone(), objects, morphisms).expect("u is well formed")
}

/// The projection `v` onto `B`: side-`A` objects and `A`-morphisms go
/// through `S`, everything else is its own payload.
pub fn projection_v(fusion: &Fusion) -> FinFunctor {
    let e = &fusion.equivalence;
    let s = e.s();
    let objects = fusion
        .objects
        .iter()
        .map(|o| match o.side {
            Side::A => s.obj(o.payload),
            Side::B => o.payload,
        })
        .collect();
    let morphisms = fusion
        .morphisms
        .iter()
        .map(|m| match (fusion.side(m.src), fusion.side(m.tgt)) {
            (Side::A, Side::A) => s.mor(m.payload),
            _ => m.payload,
        })
        .collect();
    FinFunctor::new(fusion.category.clone(), e.b().clone(), objects, morphisms).expect("v is well formed")
}

/// The fusion together with its projections, as a span `A <- fusion -> B`.
pub fn fuse_to_span(e: &AdjointEquivalence) -> (Fusion, CatSpan) {
    let fusion = equivalence_fusion(e);
    let span = CatSpan::new(projection_u(&fusion), projection_v(&fusion)).expect("legs share the fusion");
    (fusion, span)
}

/// Recovers an adjoint equivalence `A ≃ B` from a span `A <- C -> B` whose
/// legs are surjective on objects, full and faithful, by composing the
/// pseudo-inverses of the two legs.
pub fn span_to_equivalence(span: &CatSpan) -> Result<AdjointEquivalence> {
    let report = check_cat_span(span);
    if !report.verdict() {
        return Err(Error::Precondition(format!(
            "span legs are not surjective, full and faithful functors: {}",
            report
                .witnesses
                .iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join("; ")
        )));
    }
    let c_to_a = pseudo_inverse(span.left())?;
    let c_to_b = pseudo_inverse(span.right())?;
    compose_equivalences(&c_to_a.swap(), &c_to_b)
}

/// Per-pattern counts of checked instances, alongside the law report.
#[derive(Debug, Clone)]
pub struct PatternCoverage {
    pub counts: Vec<usize>,
    pub report: PropertyReport,
}

impl PatternCoverage {
    pub fn len(&self) -> usize {
        self.counts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    pub fn merge(&mut self, other: &PatternCoverage) {
        for (c, o) in self.counts.iter_mut().zip(&other.counts) {
            *c += o;
        }
        self.report.witnesses.extend(other.report.witnesses.iter().cloned());
    }

    pub fn missing_patterns(&self) -> Vec<usize> {
        (0..self.counts.len()).filter(|&p| self.counts[p] == 0).collect()
    }
}

/// Associativity on every composable triple `(h, g, f)` over objects
/// `x -f-> y -g-> z -h-> w`, counted by side pattern of `(x, y, z, w)`.
pub fn associativity_by_pattern(fusion: &Fusion) -> PatternCoverage {
    let c = &fusion.category;
    let mut counts = vec![0; 16];
    let mut report = PropertyReport::new("fusion associativity");
    for (g, f) in c.composable_pairs() {
        let gf = c.comp(g, f);
        for h in (0..c.num_morphisms()).filter(|&h| c.src(h) == c.tgt(g)) {
            let p = fusion.pattern(&[c.src(f), c.tgt(f), c.tgt(g), c.tgt(h)]);
            counts[p] += 1;
            if c.comp(h, gf) != c.comp(c.comp(h, g), f) {
                report.push(Witness::new(
                    format!("associativity ({})", pattern_name(p, 4)),
                    [c.morphism_name(h), c.morphism_name(g), c.morphism_name(f)],
                ));
            }
        }
    }
    PatternCoverage { counts, report }
}

/// Preservation of composition by a functor out of the fusion, counted by
/// side pattern of `(x, y, z)`.
pub fn functoriality_by_pattern(fusion: &Fusion, functor: &FinFunctor) -> PatternCoverage {
    let c = &fusion.category;
    let target = functor.codomain();
    let mut counts = vec![0; 8];
    let mut report = PropertyReport::new("projection preserves composition");
    for (g, f) in c.composable_pairs() {
        let p = fusion.pattern(&[c.src(f), c.tgt(f), c.tgt(g)]);
        counts[p] += 1;
        if target.compose(functor.mor(g), functor.mor(f)) != Some(functor.mor(c.comp(g, f))) {
            report.push(Witness::new(
                format!("composition ({})", pattern_name(p, 3)),
                [c.morphism_name(g), c.morphism_name(f)],
            ));
        }
    }
    PatternCoverage { counts, report }
}

/// Every hom-map of `functor` is a bijection `C(x, y) -> D(Fx, Fy)`.
pub fn hom_maps_bijective(functor: &FinFunctor) -> PropertyReport {
    let (c, d) = (functor.domain(), functor.codomain());
    let mut report = PropertyReport::new("hom-maps bijective");
    for x in 0..c.num_objects() {
        for y in 0..c.num_objects() {
            let mut images: Vec<usize> = c.hom(x, y).iter().map(|&m| functor.mor(m)).collect();
            images.sort_unstable();
            images.dedup();
            let mut target = d.hom(functor.obj(x), functor.obj(y)).to_vec();
            target.sort_unstable();
            if images.len() != c.hom(x, y).len() || images != target {
                report.push(Witness::new("not a bijection", [c.object_name(x), c.object_name(y)]));
            }
        }
    }
    report
}
