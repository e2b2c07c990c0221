use std::sync::Arc;

use super::FinCategory;
use crate::error::{Error, Result};
use crate::report::{PropertyReport, Witness};

pub(crate) fn same_cat(a: &Arc<FinCategory>, b: &Arc<FinCategory>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

/// A functor between finite categories given by its object and morphism maps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinFunctor {
    domain: Arc<FinCategory>,
    codomain: Arc<FinCategory>,
    objects: Vec<usize>,
    morphisms: Vec<usize>,
}

impl FinFunctor {
    /// Checks only that the maps are total and land in the codomain; the
    /// functor laws are checked by [`check_functor_laws`].
    pub fn new(
        domain: Arc<FinCategory>,
        codomain: Arc<FinCategory>,
        objects: Vec<usize>,
        morphisms: Vec<usize>,
    ) -> Result<Self> {
        let mut issues = Vec::new();
        if objects.len() != domain.num_objects() {
            issues.push("object map is not total".to_string());
        }
        if morphisms.len() != domain.num_morphisms() {
            issues.push("morphism map is not total".to_string());
        }
        if objects.iter().any(|&o| o >= codomain.num_objects())
            || morphisms.iter().any(|&m| m >= codomain.num_morphisms())
        {
            issues.push("functor leaves its codomain".to_string());
        }
        if !issues.is_empty() {
            return Err(Error::Structural(issues));
        }
        Ok(FinFunctor {
            domain,
            codomain,
            objects,
            morphisms,
        })
    }

    /// Resolves name-based object and morphism maps.
    pub fn from_names(
        domain: Arc<FinCategory>,
        codomain: Arc<FinCategory>,
        objects: &[(String, String)],
        morphisms: &[(String, String)],
    ) -> Result<Self> {
        let mut issues = Vec::new();
        let mut obj = vec![None; domain.num_objects()];
        for (a, b) in objects {
            match (domain.object_index(a), codomain.object_index(b)) {
                (Some(i), Some(j)) => set_once(&mut obj[i], j, a, &mut issues),
                _ => issues.push(format!("object entry {a}=>{b} refers to an undeclared object")),
            }
        }
        let mut mor = vec![None; domain.num_morphisms()];
        for (f, g) in morphisms {
            match (domain.morphism_index(f), codomain.morphism_index(g)) {
                (Some(i), Some(j)) => set_once(&mut mor[i], j, f, &mut issues),
                _ => issues.push(format!("morphism entry {f}=>{g} refers to an undeclared morphism")),
            }
        }
        // identities follow the object map unless given explicitly
        for o in 0..domain.num_objects() {
            if let (None, Some(t)) = (mor[o], obj[o]) {
                mor[o] = Some(codomain.identity(t));
            }
        }
        let objects = collect_total(obj, |i| domain.object_name(i), "object", &mut issues);
        let morphisms = collect_total(mor, |i| domain.morphism_name(i), "morphism", &mut issues);
        if !issues.is_empty() {
            return Err(Error::Structural(issues));
        }
        Self::new(domain, codomain, objects, morphisms)
    }

    pub fn identity(c: Arc<FinCategory>) -> Self {
        FinFunctor {
            objects: (0..c.num_objects()).collect(),
            morphisms: (0..c.num_morphisms()).collect(),
            domain: c.clone(),
            codomain: c,
        }
    }

    /// The unique functor to the terminal category.
    pub fn to_terminal(c: Arc<FinCategory>) -> Self {
        FinFunctor {
            objects: vec![0; c.num_objects()],
            morphisms: vec![0; c.num_morphisms()],
            domain: c,
            codomain: Arc::new(FinCategory::terminal()),
        }
    }

    pub fn domain(&self) -> &Arc<FinCategory> {
        &self.domain
    }

    pub fn codomain(&self) -> &Arc<FinCategory> {
        &self.codomain
    }

    pub fn obj(&self, o: usize) -> usize {
        self.objects[o]
    }

    pub fn mor(&self, m: usize) -> usize {
        self.morphisms[m]
    }

    pub fn object_map(&self) -> &[usize] {
        &self.objects
    }

    pub fn morphism_map(&self) -> &[usize] {
        &self.morphisms
    }

    /// `self ∘ first`.
    pub fn after(&self, first: &FinFunctor) -> Result<FinFunctor> {
        if !same_cat(first.codomain(), self.domain()) {
            return Err(Error::Mismatch("functors are not composable".into()));
        }
        Ok(FinFunctor {
            domain: first.domain.clone(),
            codomain: self.codomain.clone(),
            objects: first.objects.iter().map(|&o| self.objects[o]).collect(),
            morphisms: first.morphisms.iter().map(|&m| self.morphisms[m]).collect(),
        })
    }
}

fn set_once(slot: &mut Option<usize>, value: usize, name: &str, issues: &mut Vec<String>) {
    match *slot {
        Some(prev) if prev != value => issues.push(format!("conflicting images for `{name}`")),
        _ => *slot = Some(value),
    }
}

fn collect_total<'a>(
    table: Vec<Option<usize>>,
    name: impl Fn(usize) -> &'a str,
    what: &str,
    issues: &mut Vec<String>,
) -> Vec<usize> {
    table
        .into_iter()
        .enumerate()
        .map(|(i, v)| {
            v.unwrap_or_else(|| {
                issues.push(format!("{what} `{}` has no image", name(i)));
                0
            })
        })
        .collect()
}

/// Preservation of sources, targets, identities and composition.
pub fn check_functor_laws(f: &FinFunctor) -> PropertyReport {
    let (a, b) = (f.domain(), f.codomain());
    let mut report = PropertyReport::new("functor laws");
    for m in 0..a.num_morphisms() {
        let fm = f.mor(m);
        if b.src(fm) != f.obj(a.src(m)) || b.tgt(fm) != f.obj(a.tgt(m)) {
            report.push(Witness::new("endpoints not preserved", [a.morphism_name(m)]));
        }
    }
    for o in 0..a.num_objects() {
        if f.mor(a.identity(o)) != b.identity(f.obj(o)) {
            report.push(Witness::new("identity not preserved", [a.object_name(o)]));
        }
    }
    if !report.verdict() {
        // composites are meaningless once endpoints are wrong
        return report;
    }
    for (g, h) in a.composable_pairs() {
        if f.mor(a.comp(g, h)) != b.comp(f.mor(g), f.mor(h)) {
            report.push(Witness::new(
                "composition not preserved",
                [a.morphism_name(g), a.morphism_name(h)],
            ));
        }
    }
    report
}

/// Surjectivity on objects, fullness and faithfulness, reported separately.
/// Assumes the functor laws hold.
pub fn functor_props(f: &FinFunctor) -> PropertyReport {
    let (a, b) = (f.domain(), f.codomain());
    let mut surjective = PropertyReport::new("surjective on objects");
    let mut hit = vec![false; b.num_objects()];
    for o in 0..a.num_objects() {
        hit[f.obj(o)] = true;
    }
    for (o, h) in hit.iter().enumerate() {
        if !h {
            surjective.push(Witness::new("unhit", [b.object_name(o)]));
        }
    }
    let mut full = PropertyReport::new("full");
    let mut faithful = PropertyReport::new("faithful");
    for x in 0..a.num_objects() {
        for y in 0..a.num_objects() {
            let source = a.hom(x, y);
            for &beta in b.hom(f.obj(x), f.obj(y)) {
                if !source.iter().any(|&m| f.mor(m) == beta) {
                    full.push(Witness::new(
                        "no preimage",
                        [a.object_name(x), a.object_name(y), b.morphism_name(beta)],
                    ));
                }
            }
            for (i, &m) in source.iter().enumerate() {
                for &m2 in &source[i + 1..] {
                    if f.mor(m) == f.mor(m2) {
                        faithful.push(Witness::new("identified", [a.morphism_name(m), a.morphism_name(m2)]));
                    }
                }
            }
        }
    }
    PropertyReport::all("functor properties", vec![surjective, full, faithful])
}

/// The unique morphism in `hom(x, y)` of the domain sent to `target`, if
/// exactly one exists.
pub(crate) fn unique_preimage(f: &FinFunctor, x: usize, y: usize, target: usize) -> Option<usize> {
    let mut it = f.domain().hom(x, y).iter().copied().filter(|&m| f.mor(m) == target);
    let first = it.next()?;
    it.next().is_none().then_some(first)
}
