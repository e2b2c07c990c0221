use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::names::{check_names, identity_name};
use crate::report::{PropertyReport, Witness};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Morphism {
    pub name: String,
    pub src: usize,
    pub tgt: usize,
}

/// A finite category with a dense composition table.
///
/// Morphism `i` for `i < num_objects()` is the identity of object `i` and is
/// named `id_<object>`; the remaining morphisms follow in declaration order.
/// `compose(g, f)` is `g ∘ f` and is defined exactly when `tgt(f) = src(g)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinCategory {
    objects: Vec<String>,
    morphisms: Vec<Morphism>,
    table: Vec<Option<usize>>,
    homs: Vec<Vec<usize>>,
    object_index: HashMap<String, usize>,
    morphism_index: HashMap<String, usize>,
}

impl FinCategory {
    /// Builds a category from a full table over all morphisms, identities
    /// included. Only the shape of the table is checked here; associativity
    /// and the identity laws are left to [`check_category_laws`].
    pub fn from_table(
        objects: Vec<String>,
        arrows: Vec<(String, usize, usize)>,
        table: Vec<Option<usize>>,
    ) -> Result<Self> {
        let n = objects.len();
        let mut issues = Vec::new();
        check_names("object", &objects, &mut issues);
        let mut morphisms: Vec<Morphism> = (0..n)
            .map(|o| Morphism {
                name: identity_name(&objects[o]),
                src: o,
                tgt: o,
            })
            .collect();
        for (name, src, tgt) in arrows {
            if src >= n || tgt >= n {
                issues.push(format!("morphism `{name}` has an endpoint out of range"));
            }
            morphisms.push(Morphism { name, src, tgt });
        }
        check_names("morphism", morphisms.iter().map(|m| &m.name), &mut issues);
        let m = morphisms.len();
        if table.len() != m * m {
            issues.push(format!(
                "composition table has {} entries, expected {}",
                table.len(),
                m * m
            ));
        }
        if !issues.is_empty() {
            return Err(Error::Structural(issues));
        }
        for g in 0..m {
            for f in 0..m {
                let (mg, mf) = (&morphisms[g], &morphisms[f]);
                match (mf.tgt == mg.src, table[g * m + f]) {
                    (true, None) => issues.push(format!("missing composite {}.{}", mg.name, mf.name)),
                    (false, Some(_)) => issues.push(format!(
                        "composite {}.{} given for a non-composable pair",
                        mg.name, mf.name
                    )),
                    (true, Some(h)) if h >= m => {
                        issues.push(format!("composite {}.{} is out of range", mg.name, mf.name))
                    }
                    (true, Some(h)) if morphisms[h].src != mf.src || morphisms[h].tgt != mg.tgt => {
                        issues.push(format!(
                            "composite {}.{} = {} has the wrong source or target",
                            mg.name, mf.name, morphisms[h].name
                        ))
                    }
                    _ => {}
                }
            }
        }
        if !issues.is_empty() {
            return Err(Error::Structural(issues));
        }
        let mut homs = vec![Vec::new(); n * n];
        for (i, mor) in morphisms.iter().enumerate() {
            homs[mor.src * n + mor.tgt].push(i);
        }
        Ok(FinCategory {
            object_index: objects.iter().cloned().enumerate().map(|(i, o)| (o, i)).collect(),
            morphism_index: morphisms.iter().enumerate().map(|(i, m)| (m.name.clone(), i)).collect(),
            objects,
            morphisms,
            table,
            homs,
        })
    }

    /// Builds a category whose composites with identities are filled in
    /// automatically; `compose(g, f)` is consulted only for composable pairs
    /// of non-identity morphisms.
    pub fn from_fn(
        objects: Vec<String>,
        arrows: Vec<(String, usize, usize)>,
        mut compose: impl FnMut(usize, usize) -> usize,
    ) -> Result<Self> {
        let n = objects.len();
        let ends: Vec<(usize, usize)> = (0..n)
            .map(|o| (o, o))
            .chain(arrows.iter().map(|(_, s, t)| (*s, *t)))
            .collect();
        let m = ends.len();
        let mut table = vec![None; m * m];
        for g in 0..m {
            for f in 0..m {
                if ends[f].1 != ends[g].0 {
                    continue;
                }
                table[g * m + f] = Some(if g < n {
                    f
                } else if f < n {
                    g
                } else {
                    compose(g, f)
                });
            }
        }
        Self::from_table(objects, arrows, table)
    }

    /// The category with one object `*` and only its identity.
    pub fn terminal() -> Self {
        Self::discrete(["*"])
    }

    pub fn discrete<S: Into<String>>(objects: impl IntoIterator<Item = S>) -> Self {
        let objects: Vec<String> = objects.into_iter().map(Into::into).collect();
        Self::from_fn(objects, Vec::new(), |_, _| unreachable!()).expect("discrete category")
    }

    pub fn num_objects(&self) -> usize {
        self.objects.len()
    }

    pub fn num_morphisms(&self) -> usize {
        self.morphisms.len()
    }

    pub fn objects(&self) -> &[String] {
        &self.objects
    }

    pub fn morphisms(&self) -> &[Morphism] {
        &self.morphisms
    }

    pub fn object_name(&self, o: usize) -> &str {
        &self.objects[o]
    }

    pub fn morphism_name(&self, m: usize) -> &str {
        &self.morphisms[m].name
    }

    pub fn object_index(&self, name: &str) -> Option<usize> {
        self.object_index.get(name).copied()
    }

    pub fn morphism_index(&self, name: &str) -> Option<usize> {
        self.morphism_index.get(name).copied()
    }

    pub fn src(&self, m: usize) -> usize {
        self.morphisms[m].src
    }

    pub fn tgt(&self, m: usize) -> usize {
        self.morphisms[m].tgt
    }

    pub fn identity(&self, o: usize) -> usize {
        o
    }

    pub fn is_identity(&self, m: usize) -> bool {
        m < self.objects.len()
    }

    /// `g ∘ f`, or `None` when the pair is not composable.
    pub fn compose(&self, g: usize, f: usize) -> Option<usize> {
        self.table[g * self.morphisms.len() + f]
    }

    /// `g ∘ f` for a pair known to be composable.
    pub fn comp(&self, g: usize, f: usize) -> usize {
        self.compose(g, f).unwrap_or_else(|| {
            panic!(
                "{} and {} are not composable",
                self.morphism_name(g),
                self.morphism_name(f)
            )
        })
    }

    /// Composes a chain given in application order: `comp_chain(&[f, g, h])`
    /// is `h ∘ g ∘ f`.
    pub fn comp_chain(&self, chain: &[usize]) -> usize {
        chain[1..].iter().fold(chain[0], |acc, &next| self.comp(next, acc))
    }

    pub fn hom(&self, a: usize, b: usize) -> &[usize] {
        &self.homs[a * self.objects.len() + b]
    }

    /// The two-sided inverse of `m`, if any.
    pub fn inverse(&self, m: usize) -> Option<usize> {
        let (a, b) = (self.src(m), self.tgt(m));
        self.hom(b, a)
            .iter()
            .copied()
            .find(|&g| self.compose(g, m) == Some(a) && self.compose(m, g) == Some(b))
    }

    pub fn is_iso(&self, m: usize) -> bool {
        self.inverse(m).is_some()
    }

    /// Composable non-identity pairs `(g, f)` with `g ∘ f` defined, in table order.
    pub fn composable_pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let m = self.morphisms.len();
        (0..m).flat_map(move |g| {
            (0..m)
                .filter(move |&f| self.morphisms[f].tgt == self.morphisms[g].src)
                .map(move |f| (g, f))
        })
    }
}

/// Checks the identity laws and associativity on every composable triple.
pub fn check_category_laws(c: &FinCategory) -> PropertyReport {
    let name = |m: usize| c.morphism_name(m).to_string();
    let mut identity = PropertyReport::new("identity laws");
    for f in 0..c.num_morphisms() {
        if c.compose(f, c.identity(c.src(f))) != Some(f) {
            identity.push(Witness::new("f.id != f", [name(f)]));
        }
        if c.compose(c.identity(c.tgt(f)), f) != Some(f) {
            identity.push(Witness::new("id.f != f", [name(f)]));
        }
    }
    let mut assoc = PropertyReport::new("associativity");
    for (g, f) in c.composable_pairs() {
        let gf = c.comp(g, f);
        for h in (0..c.num_morphisms()).filter(|&h| c.src(h) == c.tgt(g)) {
            if c.comp(h, gf) != c.comp(c.comp(h, g), f) {
                assoc.push(Witness::new("h.(g.f) != (h.g).f", [name(h), name(g), name(f)]));
            }
        }
    }
    PropertyReport::all("category laws", vec![identity, assoc])
}

/// Name-based category data as written in a presentation: objects,
/// non-identity morphisms and composites. Composites involving identities
/// are filled in automatically.
#[derive(Debug, Clone, Default)]
pub struct CategoryBuilder {
    pub objects: Vec<String>,
    pub arrows: Vec<(String, String, String)>,
    pub composites: Vec<(String, String, String)>,
}

impl CategoryBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn objects<S: Into<String>>(mut self, names: impl IntoIterator<Item = S>) -> Self {
        self.objects.extend(names.into_iter().map(Into::into));
        self
    }

    pub fn arrow(mut self, name: &str, src: &str, tgt: &str) -> Self {
        self.arrows.push((name.into(), src.into(), tgt.into()));
        self
    }

    /// Records `g ∘ f = h`.
    pub fn compose(mut self, g: &str, f: &str, h: &str) -> Self {
        self.composites.push((g.into(), f.into(), h.into()));
        self
    }

    pub fn build(&self) -> Result<FinCategory> {
        let mut issues = Vec::new();
        check_names("object", &self.objects, &mut issues);
        let obj: HashMap<&str, usize> = self.objects.iter().enumerate().map(|(i, o)| (o.as_str(), i)).collect();
        let mut arrows = Vec::new();
        for (name, s, t) in &self.arrows {
            match (obj.get(s.as_str()), obj.get(t.as_str())) {
                (Some(&s), Some(&t)) => arrows.push((name.clone(), s, t)),
                _ => issues.push(format!("morphism `{name}` refers to an undeclared object")),
            }
        }
        if !issues.is_empty() {
            return Err(Error::Structural(issues));
        }
        let n = self.objects.len();
        let mut names: Vec<String> = self.objects.iter().map(|o| identity_name(o)).collect();
        names.extend(arrows.iter().map(|a| a.0.clone()));
        check_names("morphism", &names, &mut issues);
        if !issues.is_empty() {
            return Err(Error::Structural(issues));
        }
        let mor: HashMap<&str, usize> = names.iter().enumerate().map(|(i, m)| (m.as_str(), i)).collect();
        let ends: Vec<(usize, usize)> = (0..n)
            .map(|o| (o, o))
            .chain(arrows.iter().map(|a| (a.1, a.2)))
            .collect();
        let m = names.len();
        let mut table: Vec<Option<usize>> = vec![None; m * m];
        for g in 0..m {
            for f in 0..m {
                if ends[f].1 == ends[g].0 && (g < n || f < n) {
                    table[g * m + f] = Some(if g < n { f } else { g });
                }
            }
        }
        for (g, f, h) in &self.composites {
            let lookup = |x: &str| mor.get(x).copied();
            let (Some(gi), Some(fi), Some(hi)) = (lookup(g), lookup(f), lookup(h)) else {
                for x in [g, f, h] {
                    if lookup(x).is_none() {
                        issues.push(format!("composite {g}.{f} = {h} refers to undeclared morphism `{x}`"));
                    }
                }
                continue;
            };
            if ends[fi].1 != ends[gi].0 {
                issues.push(format!("{g}.{f} is not a composable pair"));
                continue;
            }
            let slot = &mut table[gi * m + fi];
            match *slot {
                Some(prev) if prev != hi => {
                    issues.push(format!("composite {g}.{f} = {h} contradicts {g}.{f} = {}", names[prev]))
                }
                _ => *slot = Some(hi),
            }
        }
        if !issues.is_empty() {
            return Err(Error::Structural(issues));
        }
        FinCategory::from_table(self.objects.clone(), arrows, table)
    }
}
