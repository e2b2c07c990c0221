use std::collections::HashMap;
use std::sync::Arc;

use super::GlobularSet;
use crate::error::{Error, Result};
use crate::report::Witness;

/// A map of globular sets: one cell function per dimension, commuting with
/// source and target.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GlobularMap {
    domain: Arc<GlobularSet>,
    codomain: Arc<GlobularSet>,
    components: Vec<Vec<usize>>,
}

/// Name-based candidate data for a map. `components[k]` lists `(cell, image)`.
#[derive(Debug, Clone)]
pub struct RawGlobularMap {
    pub domain: Arc<GlobularSet>,
    pub codomain: Arc<GlobularSet>,
    pub components: Vec<Vec<(String, String)>>,
}

pub(crate) fn same_set(a: &Arc<GlobularSet>, b: &Arc<GlobularSet>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

impl GlobularMap {
    pub fn from_indices(
        domain: Arc<GlobularSet>,
        codomain: Arc<GlobularSet>,
        components: Vec<Vec<usize>>,
    ) -> Result<Self> {
        if domain.dim() != codomain.dim() {
            return Err(Error::Mismatch(format!(
                "domain has dimension {}, codomain {}",
                domain.dim(),
                codomain.dim()
            )));
        }
        let dim = domain.dim();
        if components.len() != dim + 1 {
            return Err(Error::Structural(vec![format!(
                "expected {} components, got {}",
                dim + 1,
                components.len()
            )]));
        }
        let mut issues = Vec::new();
        for (k, comp) in components.iter().enumerate() {
            if comp.len() != domain.len(k) {
                issues.push(format!("component {k} is not total"));
            } else if comp.iter().any(|&y| y >= codomain.len(k)) {
                issues.push(format!("component {k} leaves the codomain"));
            }
        }
        if !issues.is_empty() {
            return Err(Error::Structural(issues));
        }
        let map = GlobularMap {
            domain,
            codomain,
            components,
        };
        let violations = map.commutation_violations();
        if violations.is_empty() {
            Ok(map)
        } else {
            Err(Error::Commutation(violations))
        }
    }

    pub fn identity(x: Arc<GlobularSet>) -> Self {
        let components = (0..=x.dim()).map(|k| (0..x.len(k)).collect()).collect();
        GlobularMap {
            domain: x.clone(),
            codomain: x,
            components,
        }
    }

    /// The unique map into the terminal globular set of the same dimension.
    pub fn to_terminal(x: Arc<GlobularSet>) -> Self {
        let terminal = Arc::new(GlobularSet::terminal(x.dim()));
        let components = (0..=x.dim()).map(|k| vec![0; x.len(k)]).collect();
        GlobularMap {
            domain: x,
            codomain: terminal,
            components,
        }
    }

    pub fn domain(&self) -> &Arc<GlobularSet> {
        &self.domain
    }

    pub fn codomain(&self) -> &Arc<GlobularSet> {
        &self.codomain
    }

    pub fn dim(&self) -> usize {
        self.domain.dim()
    }

    pub fn component(&self, k: usize) -> &[usize] {
        &self.components[k]
    }

    pub fn components(&self) -> &[Vec<usize>] {
        &self.components
    }

    pub fn apply(&self, k: usize, cell: usize) -> usize {
        self.components[k][cell]
    }

    /// `self ∘ first`.
    pub fn after(&self, first: &GlobularMap) -> Result<GlobularMap> {
        compose_maps(self, first)
    }

    /// True when every component is a bijection.
    pub fn is_isomorphism(&self) -> bool {
        self.components.iter().enumerate().all(|(k, comp)| {
            if comp.len() != self.codomain.len(k) {
                return false;
            }
            let mut hit = vec![false; comp.len()];
            comp.iter().all(|&y| !std::mem::replace(&mut hit[y], true))
        })
    }

    fn commutation_violations(&self) -> Vec<Witness> {
        let (x, y) = (&self.domain, &self.codomain);
        let mut out = Vec::new();
        for k in 1..=x.dim() {
            for a in 0..x.len(k) {
                let fa = self.components[k][a];
                if y.src(k, fa) != self.components[k - 1][x.src(k, a)] {
                    out.push(Witness::new(
                        format!("dimension {k}: src(f(a)) != f(src(a))"),
                        [x.name(k, a).to_string()],
                    ));
                }
                if y.tgt(k, fa) != self.components[k - 1][x.tgt(k, a)] {
                    out.push(Witness::new(
                        format!("dimension {k}: tgt(f(a)) != f(tgt(a))"),
                        [x.name(k, a).to_string()],
                    ));
                }
            }
        }
        out
    }
}

/// Resolves a name-based map and checks the commutation squares.
pub fn validate_map(raw: &RawGlobularMap) -> Result<GlobularMap> {
    let (x, y) = (&raw.domain, &raw.codomain);
    if x.dim() != y.dim() {
        return Err(Error::Mismatch(format!(
            "domain has dimension {}, codomain {}",
            x.dim(),
            y.dim()
        )));
    }
    if raw.components.len() != x.dim() + 1 {
        return Err(Error::Structural(vec![format!(
            "expected components for dimensions 0..={}",
            x.dim()
        )]));
    }
    let mut issues = Vec::new();
    let mut components = Vec::with_capacity(x.dim() + 1);
    for (k, pairs) in raw.components.iter().enumerate() {
        let mut table: Vec<Option<usize>> = vec![None; x.len(k)];
        for (cell, image) in pairs {
            let Some(c) = x.index_of(k, cell) else {
                issues.push(format!("`{cell}` is not a {k}-cell of the domain"));
                continue;
            };
            let Some(i) = y.index_of(k, image) else {
                issues.push(format!("`{image}` is not a {k}-cell of the codomain"));
                continue;
            };
            match table[c] {
                Some(prev) if prev != i => issues.push(format!("conflicting images for `{cell}`")),
                _ => table[c] = Some(i),
            }
        }
        let comp: Vec<usize> = table
            .iter()
            .enumerate()
            .map(|(c, v)| {
                v.unwrap_or_else(|| {
                    issues.push(format!("component {k} is not total: `{}` has no image", x.name(k, c)));
                    0
                })
            })
            .collect();
        components.push(comp);
    }
    if !issues.is_empty() {
        return Err(Error::Structural(issues));
    }
    GlobularMap::from_indices(x.clone(), y.clone(), components)
}

/// Componentwise composite `g ∘ f`.
pub fn compose_maps(g: &GlobularMap, f: &GlobularMap) -> Result<GlobularMap> {
    if !same_set(f.codomain(), g.domain()) {
        return Err(Error::Mismatch("codomain of f is not the domain of g".into()));
    }
    let components = f
        .components
        .iter()
        .zip(&g.components)
        .map(|(fk, gk)| fk.iter().map(|&c| gk[c]).collect())
        .collect();
    Ok(GlobularMap {
        domain: f.domain.clone(),
        codomain: g.codomain.clone(),
        components,
    })
}

pub fn identity_map(x: Arc<GlobularSet>) -> GlobularMap {
    GlobularMap::identity(x)
}

/// Builds and validates a map from a lookup `(dimension, cell name) -> image name`.
pub fn map_from_name_fn(
    domain: Arc<GlobularSet>,
    codomain: Arc<GlobularSet>,
    image: impl Fn(usize, &str) -> String,
) -> Result<GlobularMap> {
    let components = (0..=domain.dim())
        .map(|k| domain.cells(k).iter().map(|c| (c.clone(), image(k, c))).collect())
        .collect();
    validate_map(&RawGlobularMap {
        domain,
        codomain,
        components,
    })
}

/// Inverse lookup of a component: image cell -> preimages in domain order.
pub(crate) fn fibres(map: &GlobularMap, k: usize) -> HashMap<usize, Vec<usize>> {
    let mut out: HashMap<usize, Vec<usize>> = HashMap::new();
    for (c, &y) in map.component(k).iter().enumerate() {
        out.entry(y).or_default().push(c);
    }
    out
}
