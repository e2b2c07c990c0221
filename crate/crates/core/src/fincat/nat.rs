use super::FinFunctor;
use crate::error::{Error, Result};
use crate::fincat::functor::same_cat;
use crate::report::{PropertyReport, Witness};

/// A natural transformation between parallel functors, one component per
/// object of the common domain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NatTrans {
    source: FinFunctor,
    target: FinFunctor,
    components: Vec<usize>,
}

impl NatTrans {
    pub fn new(source: FinFunctor, target: FinFunctor, components: Vec<usize>) -> Result<Self> {
        if !same_cat(source.domain(), target.domain()) || !same_cat(source.codomain(), target.codomain()) {
            return Err(Error::Mismatch("functors are not parallel".into()));
        }
        if components.len() != source.domain().num_objects() {
            return Err(Error::Structural(vec!["component table is not total".into()]));
        }
        if components.iter().any(|&c| c >= source.codomain().num_morphisms()) {
            return Err(Error::Structural(vec!["component out of range".into()]));
        }
        Ok(NatTrans {
            source,
            target,
            components,
        })
    }

    pub fn from_names(source: FinFunctor, target: FinFunctor, entries: &[(String, String)]) -> Result<Self> {
        let (dom, cod) = (source.domain().clone(), source.codomain().clone());
        let mut table = vec![None; dom.num_objects()];
        let mut issues = Vec::new();
        for (x, m) in entries {
            match (dom.object_index(x), cod.morphism_index(m)) {
                (Some(i), Some(j)) => match table[i] {
                    Some(prev) if prev != j => issues.push(format!("conflicting components for `{x}`")),
                    _ => table[i] = Some(j),
                },
                _ => issues.push(format!("component {x}=>{m} refers to an undeclared name")),
            }
        }
        let components: Vec<usize> = table
            .iter()
            .enumerate()
            .map(|(i, c)| {
                c.unwrap_or_else(|| {
                    issues.push(format!("no component at `{}`", dom.object_name(i)));
                    0
                })
            })
            .collect();
        if !issues.is_empty() {
            return Err(Error::Structural(issues));
        }
        Self::new(source, target, components)
    }

    pub fn identity(f: FinFunctor) -> Self {
        let cod = f.codomain().clone();
        let components = (0..f.domain().num_objects()).map(|o| cod.identity(f.obj(o))).collect();
        NatTrans {
            source: f.clone(),
            target: f,
            components,
        }
    }

    pub fn source(&self) -> &FinFunctor {
        &self.source
    }

    pub fn target(&self) -> &FinFunctor {
        &self.target
    }

    pub fn component(&self, o: usize) -> usize {
        self.components[o]
    }

    pub fn components(&self) -> &[usize] {
        &self.components
    }

    /// Componentwise inverse, if every component is invertible.
    pub fn inverse(&self) -> Option<NatTrans> {
        let cod = self.source.codomain();
        let components = self
            .components
            .iter()
            .map(|&c| cod.inverse(c))
            .collect::<Option<Vec<_>>>()?;
        Some(NatTrans {
            source: self.target.clone(),
            target: self.source.clone(),
            components,
        })
    }
}

/// Component typing `t_x: F x -> G x` and every naturality square
/// `t_y ∘ F f = G f ∘ t_x`.
pub fn check_naturality(t: &NatTrans) -> PropertyReport {
    let (f, g) = (t.source(), t.target());
    let (dom, cod) = (f.domain(), f.codomain());
    let mut report = PropertyReport::new("naturality");
    for x in 0..dom.num_objects() {
        let c = t.component(x);
        if cod.src(c) != f.obj(x) || cod.tgt(c) != g.obj(x) {
            report.push(Witness::new("component has the wrong type", [dom.object_name(x)]));
        }
    }
    if !report.verdict() {
        return report;
    }
    for m in 0..dom.num_morphisms() {
        let (x, y) = (dom.src(m), dom.tgt(m));
        let top = cod.compose(t.component(y), f.mor(m));
        let bottom = cod.compose(g.mor(m), t.component(x));
        if top.is_none() || top != bottom {
            report.push(Witness::new("square does not commute", [dom.morphism_name(m)]));
        }
    }
    report
}

/// Naturality plus invertibility of every component.
pub fn is_natural_iso(t: &NatTrans) -> PropertyReport {
    let naturality = check_naturality(t);
    let cod = t.source().codomain();
    let mut invertible = PropertyReport::new("invertible components");
    for (x, &c) in t.components().iter().enumerate() {
        if !cod.is_iso(c) {
            invertible.push(Witness::new(
                "component not invertible",
                [t.source().domain().object_name(x)],
            ));
        }
    }
    PropertyReport::all("natural isomorphism", vec![naturality, invertible])
}
