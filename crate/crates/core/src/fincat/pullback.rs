use std::collections::HashMap;
use std::sync::Arc;

use super::functor::same_cat;
use super::{check_functor_laws, functor_props, FinCategory, FinFunctor};
use crate::error::{Error, Result};
use crate::limits::pair_name;
use crate::report::PropertyReport;

/// The pullback of `F: A -> S` and `G: B -> S` in finite categories, with its
/// two projections.
#[derive(Debug, Clone)]
pub struct CategoryPullback {
    pub apex: Arc<FinCategory>,
    pub left: FinFunctor,
    pub right: FinFunctor,
}

/// Objects are pairs `(a, b)` with `F a = G b`, morphisms pairs `(f, g)` with
/// `F f = G g`, composition coordinatewise. Objects are ordered
/// lexicographically; identities come first, then the remaining morphism
/// pairs in lexicographic order.
pub fn pullback_category(f: &FinFunctor, g: &FinFunctor) -> Result<CategoryPullback> {
    if !same_cat(f.codomain(), g.codomain()) {
        return Err(Error::Mismatch("functors do not share a codomain".into()));
    }
    let (a, b) = (f.domain(), g.domain());
    let mut object_pairs = Vec::new();
    for x in 0..a.num_objects() {
        for y in 0..b.num_objects() {
            if f.obj(x) == g.obj(y) {
                object_pairs.push((x, y));
            }
        }
    }
    let object_of: HashMap<(usize, usize), usize> = object_pairs.iter().enumerate().map(|(i, &p)| (p, i)).collect();
    let mut morphism_pairs: Vec<(usize, usize)> = object_pairs
        .iter()
        .map(|&(x, y)| (a.identity(x), b.identity(y)))
        .collect();
    for m in 0..a.num_morphisms() {
        for n in 0..b.num_morphisms() {
            if f.mor(m) == g.mor(n) && !(a.is_identity(m) && b.is_identity(n)) {
                morphism_pairs.push((m, n));
            }
        }
    }
    let morphism_of: HashMap<(usize, usize), usize> = morphism_pairs.iter().enumerate().map(|(i, &p)| (p, i)).collect();

    let objects = object_pairs
        .iter()
        .map(|&(x, y)| pair_name(a.object_name(x), b.object_name(y)))
        .collect();
    let n_obj = object_pairs.len();
    let arrows = morphism_pairs[n_obj..]
        .iter()
        .map(|&(m, n)| {
            (
                pair_name(a.morphism_name(m), b.morphism_name(n)),
                object_of[&(a.src(m), b.src(n))],
                object_of[&(a.tgt(m), b.tgt(n))],
            )
        })
        .collect();
    let apex = Arc::new(FinCategory::from_fn(objects, arrows, |h, k| {
        let (h1, h2) = morphism_pairs[h];
        let (k1, k2) = morphism_pairs[k];
        morphism_of[&(a.comp(h1, k1), b.comp(h2, k2))]
    })?);
    let left = FinFunctor::new(
        apex.clone(),
        a.clone(),
        object_pairs.iter().map(|p| p.0).collect(),
        morphism_pairs.iter().map(|p| p.0).collect(),
    )?;
    let right = FinFunctor::new(
        apex.clone(),
        b.clone(),
        object_pairs.iter().map(|p| p.1).collect(),
        morphism_pairs.iter().map(|p| p.1).collect(),
    )?;
    Ok(CategoryPullback { apex, left, right })
}

/// A span of functors `A <- C -> B`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatSpan {
    apex: Arc<FinCategory>,
    left: FinFunctor,
    right: FinFunctor,
}

impl CatSpan {
    pub fn new(left: FinFunctor, right: FinFunctor) -> Result<Self> {
        if !same_cat(left.domain(), right.domain()) {
            return Err(Error::Mismatch("span legs have different domains".into()));
        }
        Ok(CatSpan {
            apex: left.domain().clone(),
            left,
            right,
        })
    }

    pub fn apex(&self) -> &Arc<FinCategory> {
        &self.apex
    }

    pub fn left(&self) -> &FinFunctor {
        &self.left
    }

    pub fn right(&self) -> &FinFunctor {
        &self.right
    }
}

fn leg_report(name: &str, leg: &FinFunctor) -> PropertyReport {
    let laws = check_functor_laws(leg);
    let parts = if laws.verdict() {
        vec![laws, functor_props(leg)]
    } else {
        vec![laws]
    };
    PropertyReport::all(name, parts)
}

/// Both legs are functors that are surjective on objects, full and faithful.
pub fn check_cat_span(span: &CatSpan) -> PropertyReport {
    PropertyReport::all(
        "span equivalence of categories",
        vec![leg_report("left leg", &span.left), leg_report("right leg", &span.right)],
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::{check_category_laws, CategoryBuilder};

    fn arrow_cat() -> Arc<FinCategory> {
        Arc::new(
            CategoryBuilder::new()
                .objects(["x", "y"])
                .arrow("f", "x", "y")
                .build()
                .unwrap(),
        )
    }

    #[test]
    fn pullback_along_identity() {
        let c = arrow_cat();
        let one = Arc::new(FinCategory::terminal());
        let f = FinFunctor::to_terminal(c.clone());
        let pb = pullback_category(&f, &FinFunctor::identity(one)).unwrap();
        assert_eq!(pb.apex.num_objects(), c.num_objects());
        assert_eq!(pb.apex.num_morphisms(), c.num_morphisms());
        assert!(check_category_laws(&pb.apex).verdict());
        assert!(functor_props(&pb.left).verdict());
    }

    #[test]
    fn pullback_over_terminal_is_product() {
        let c = arrow_cat();
        let pb = pullback_category(&FinFunctor::to_terminal(c.clone()), &FinFunctor::to_terminal(c)).unwrap();
        assert_eq!(pb.apex.num_objects(), 4);
        assert_eq!(pb.apex.num_morphisms(), 9);
        assert!(check_category_laws(&pb.apex).verdict());
        assert!(check_functor_laws(&pb.left).verdict());
        assert!(check_functor_laws(&pb.right).verdict());
        assert_eq!(pb.apex.object_name(1), "(x,y)");
        assert_eq!(pb.apex.morphism_name(1), "id_(x,y)");
    }

    #[test]
    fn codomain_mismatch() {
        let c = arrow_cat();
        assert!(matches!(
            pullback_category(&FinFunctor::identity(c.clone()), &FinFunctor::to_terminal(c)),
            Err(Error::Mismatch(_))
        ));
    }
}
