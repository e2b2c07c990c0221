//! Exhaustive search for equivalences between small categories. Used as an
//! independent oracle for the span characterisation of equivalence.

use std::ops::ControlFlow;
use std::sync::Arc;

use super::{promote_to_adjoint_equivalence, AdjointEquivalence, FinCategory, FinFunctor, NatTrans};
use crate::error::{Error, Result};

pub const SEARCH_MAX_OBJECTS: usize = 4;
pub const SEARCH_MAX_MORPHISMS: usize = 12;

/// Visits every functor `A -> B` in lexicographic order of (object map,
/// morphism map) until `visit` breaks.
pub fn for_each_functor<R>(
    a: &FinCategory,
    b: &FinCategory,
    mut visit: impl FnMut(&[usize], &[usize]) -> ControlFlow<R>,
) -> Option<R> {
    let (n, m) = (a.num_objects(), a.num_morphisms());
    if n > 0 && b.num_objects() == 0 {
        return None;
    }
    // triples (g, f, g∘f) grouped by the largest index among them, so each is
    // checked as soon as it is fully assigned
    let mut checks: Vec<Vec<(usize, usize, usize)>> = vec![Vec::new(); m];
    for g in 0..m {
        for f in 0..m {
            if let Some(h) = a.compose(g, f) {
                checks[g.max(f).max(h)].push((g, f, h));
            }
        }
    }
    let mut objects = vec![0usize; n];
    loop {
        let mut morphisms = vec![usize::MAX; m];
        if let Some(r) = assign(a, b, &objects, &mut morphisms, 0, &checks, &mut visit) {
            return Some(r);
        }
        // next object map, last position varying fastest
        let mut i = n;
        loop {
            if i == 0 {
                return None;
            }
            i -= 1;
            objects[i] += 1;
            if objects[i] < b.num_objects() {
                break;
            }
            objects[i] = 0;
        }
    }
}

fn assign<R>(
    a: &FinCategory,
    b: &FinCategory,
    objects: &[usize],
    morphisms: &mut Vec<usize>,
    next: usize,
    checks: &[Vec<(usize, usize, usize)>],
    visit: &mut impl FnMut(&[usize], &[usize]) -> ControlFlow<R>,
) -> Option<R> {
    if next == morphisms.len() {
        return match visit(objects, morphisms) {
            ControlFlow::Break(r) => Some(r),
            ControlFlow::Continue(()) => None,
        };
    }
    let candidates: Vec<usize> = if a.is_identity(next) {
        vec![b.identity(objects[next])]
    } else {
        b.hom(objects[a.src(next)], objects[a.tgt(next)]).to_vec()
    };
    for c in candidates {
        morphisms[next] = c;
        let ok = checks[next]
            .iter()
            .all(|&(g, f, h)| b.compose(morphisms[g], morphisms[f]) == Some(morphisms[h]));
        if ok {
            if let Some(r) = assign(a, b, objects, morphisms, next + 1, checks, visit) {
                return Some(r);
            }
        }
    }
    morphisms[next] = usize::MAX;
    None
}

/// All functors `A -> B`, in search order.
pub fn enumerate_functors(a: &Arc<FinCategory>, b: &Arc<FinCategory>) -> Vec<FinFunctor> {
    let mut out = Vec::new();
    for_each_functor::<()>(a, b, |objects, morphisms| {
        out.push(FinFunctor::new(a.clone(), b.clone(), objects.to_vec(), morphisms.to_vec()).expect("in range"));
        ControlFlow::Continue(())
    });
    out
}

fn is_full_faithful_ess_surjective(f: &FinFunctor) -> bool {
    let (a, b) = (f.domain(), f.codomain());
    for x in 0..a.num_objects() {
        for y in 0..a.num_objects() {
            let mut images: Vec<usize> = a.hom(x, y).iter().map(|&m| f.mor(m)).collect();
            images.sort_unstable();
            images.dedup();
            if images.len() != a.hom(x, y).len() || images.len() != b.hom(f.obj(x), f.obj(y)).len() {
                return false;
            }
        }
    }
    (0..b.num_objects()).all(|y| (0..a.num_objects()).any(|x| b.hom(f.obj(x), y).iter().any(|&m| b.is_iso(m))))
}

/// First natural isomorphism `source => target` in lexicographic order of
/// components.
fn find_natural_iso(source: &FinFunctor, target: &FinFunctor) -> Option<Vec<usize>> {
    let (dom, cod) = (source.domain(), source.codomain());
    let n = dom.num_objects();
    let candidates: Vec<Vec<usize>> = (0..n)
        .map(|x| {
            cod.hom(source.obj(x), target.obj(x))
                .iter()
                .copied()
                .filter(|&m| cod.is_iso(m))
                .collect()
        })
        .collect();
    let mut chosen = vec![usize::MAX; n];
    fn go(
        x: usize,
        chosen: &mut Vec<usize>,
        candidates: &[Vec<usize>],
        source: &FinFunctor,
        target: &FinFunctor,
    ) -> bool {
        let (dom, cod) = (source.domain(), source.codomain());
        if x == chosen.len() {
            return true;
        }
        for &c in &candidates[x] {
            chosen[x] = c;
            // squares whose endpoints are both assigned and one of them is x
            let ok = (0..dom.num_morphisms()).all(|m| {
                let (s, t) = (dom.src(m), dom.tgt(m));
                if s.max(t) != x {
                    return true;
                }
                cod.compose(chosen[t], source.mor(m)) == cod.compose(target.mor(m), chosen[s])
            });
            if ok && go(x + 1, chosen, candidates, source, target) {
                return true;
            }
        }
        false
    }
    go(0, &mut chosen, &candidates, source, target).then_some(chosen)
}

/// Searches all functor pairs `S: A -> B`, `T: B -> A` and natural
/// isomorphisms `I_A => TS`, `ST => I_B`; the first hit is promoted to an
/// adjoint equivalence. Refuses categories above
/// [`SEARCH_MAX_OBJECTS`] objects or [`SEARCH_MAX_MORPHISMS`] morphisms.
pub fn are_equivalent_bruteforce(a: &Arc<FinCategory>, b: &Arc<FinCategory>) -> Result<Option<AdjointEquivalence>> {
    for c in [a, b] {
        if c.num_objects() > SEARCH_MAX_OBJECTS || c.num_morphisms() > SEARCH_MAX_MORPHISMS {
            return Err(Error::SizeGuard(format!(
                "search is limited to {SEARCH_MAX_OBJECTS} objects and {SEARCH_MAX_MORPHISMS} morphisms, got {} and {}",
                c.num_objects(),
                c.num_morphisms()
            )));
        }
    }
    let id_a = FinFunctor::identity(a.clone());
    let id_b = FinFunctor::identity(b.clone());
    let found = for_each_functor(a, b, |so, sm| {
        let s = FinFunctor::new(a.clone(), b.clone(), so.to_vec(), sm.to_vec()).expect("in range");
        // only equivalences can be half of an equivalence
        if !is_full_faithful_ess_surjective(&s) {
            return ControlFlow::Continue(());
        }
        let hit = for_each_functor(b, a, |to, tm| {
            let t = FinFunctor::new(b.clone(), a.clone(), to.to_vec(), tm.to_vec()).expect("in range");
            let ts = t.after(&s).expect("composable");
            let Some(eta) = find_natural_iso(&id_a, &ts) else {
                return ControlFlow::Continue(());
            };
            let st = s.after(&t).expect("composable");
            let Some(eps) = find_natural_iso(&st, &id_b) else {
                return ControlFlow::Continue(());
            };
            ControlFlow::Break((t, eta, st, eps))
        });
        match hit {
            Some(found) => ControlFlow::Break((s.clone(), found)),
            None => ControlFlow::Continue(()),
        }
    });
    let Some((s, (t, eta, st, eps))) = found else {
        return Ok(None);
    };
    let ts = t.after(&s)?;
    let eta = NatTrans::new(id_a, ts, eta)?;
    let eps = NatTrans::new(st, id_b, eps)?;
    promote_to_adjoint_equivalence(&s, &t, &eta, &eps).map(Some)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::{check_functor_laws, CategoryBuilder};

    fn walking_iso() -> Arc<FinCategory> {
        Arc::new(
            CategoryBuilder::new()
                .objects(["a0", "a1"])
                .arrow("i", "a0", "a1")
                .arrow("j", "a1", "a0")
                .compose("j", "i", "id_a0")
                .compose("i", "j", "id_a1")
                .build()
                .unwrap(),
        )
    }

    #[test]
    fn functor_enumeration_matches_hand_count() {
        // functors from the arrow category x -> y into itself: object maps
        // (x,x), (x,y), (y,y) admit exactly one morphism map each; (y,x) none.
        let c = Arc::new(
            CategoryBuilder::new()
                .objects(["x", "y"])
                .arrow("f", "x", "y")
                .build()
                .unwrap(),
        );
        let all = enumerate_functors(&c, &c);
        assert_eq!(all.len(), 3);
        assert!(all.iter().all(|f| check_functor_laws(f).verdict()));
        // Z/2 -> Z/2 has two endofunctors
        let z2 = Arc::new(
            CategoryBuilder::new()
                .objects(["x"])
                .arrow("s", "x", "x")
                .compose("s", "s", "id_x")
                .build()
                .unwrap(),
        );
        assert_eq!(enumerate_functors(&z2, &z2).len(), 2);
    }

    #[test]
    fn same_category_finds_identity_first() {
        let c = walking_iso();
        let e = are_equivalent_bruteforce(&c, &c).unwrap().unwrap();
        // lexicographically first S maps both objects to a0
        assert_eq!(e.s().object_map(), &[0, 0]);
    }

    #[test]
    fn walking_iso_is_equivalent_to_terminal() {
        let one = Arc::new(FinCategory::terminal());
        assert!(are_equivalent_bruteforce(&walking_iso(), &one).unwrap().is_some());
        assert!(are_equivalent_bruteforce(&one, &walking_iso()).unwrap().is_some());
    }

    #[test]
    fn discrete_pair_is_not_equivalent_to_terminal() {
        let two = Arc::new(FinCategory::discrete(["p", "q"]));
        let one = Arc::new(FinCategory::terminal());
        assert!(are_equivalent_bruteforce(&two, &one).unwrap().is_none());
        assert!(are_equivalent_bruteforce(&one, &two).unwrap().is_none());
    }

    #[test]
    fn size_guard() {
        let big = Arc::new(FinCategory::discrete(["a", "b", "c", "d", "e"]));
        assert!(matches!(
            are_equivalent_bruteforce(&big, &big),
            Err(Error::SizeGuard(_))
        ));
    }
}
