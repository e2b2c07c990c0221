mod common;

use std::collections::BTreeSet;
use std::sync::Arc;

use globcat::fincat::{
    check_adjoint_equivalence, check_category_laws, check_functor_laws, check_naturality, compose_equivalences,
    enumerate_functors, functor_props, pseudo_inverse, pullback_category, FinFunctor,
};
use globcat::fusion::{equivalence_fusion, fuse_to_span, projection_u, projection_v};
use globcat::gen::{self, CospanMode, CoverMode, Family};
use globcat::globular::{compose_maps, equivalence_profile, identity_map, is_faithful_on, is_injective_on};
use globcat::limits::pullback_globular;
use globcat::one_alg::{check_algebra_laws, check_monad_laws, free_category_bounded, nerve, paths_up_to};
use globcat::pres::{parse, print, Document};
use globcat::span::{compose_spans, identity_span, is_span_equivalence, swap_span};
use globcat::{GlobularMap, GlobularSet};
use proptest::prelude::*;

fn lawful_cover(seed: u64, dim: usize, mode: CoverMode) -> GlobularMap {
    let mut r = gen::rng(seed);
    let y = Arc::new(gen::random_globular(&mut r, dim, 3));
    gen::random_cover(&mut r, &y, mode, 5)
}

fn assert_same_map(a: &GlobularMap, b: &GlobularMap) {
    assert_eq!(a.components(), b.components());
    assert_eq!(a.domain(), b.domain());
    assert_eq!(a.codomain(), b.codomain());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn hom_sets_partition_cells(seed in any::<u64>(), dim in 1usize..4) {
        let x = gen::random_globular(&mut gen::rng(seed), dim, 5);
        for k in 1..=dim {
            let mut seen = BTreeSet::new();
            for a in 0..x.len(k - 1) {
                for b in 0..x.len(k - 1) {
                    for c in x.hom_set(k, a, b).unwrap() {
                        prop_assert_eq!((x.src(k, c), x.tgt(k, c)), (a, b));
                        prop_assert!(seen.insert(c));
                    }
                }
            }
            prop_assert_eq!(seen.len(), x.len(k));
        }
    }

    #[test]
    fn injective_maps_are_faithful(seed in any::<u64>(), dim in 1usize..4) {
        let f = lawful_cover(seed, dim, CoverMode::Random);
        for k in 1..=dim {
            if is_injective_on(&f, k).unwrap().verdict() {
                prop_assert!(is_faithful_on(&f, k).unwrap().verdict());
            }
        }
    }

    #[test]
    fn isomorphisms_have_the_equivalence_profile(seed in any::<u64>(), dim in 0usize..4) {
        let x = Arc::new(gen::random_globular(&mut gen::rng(seed), dim, 4));
        prop_assert!(equivalence_profile(&identity_map(x)).verdict());
        let f = lawful_cover(seed, dim, CoverMode::Random);
        if f.is_isomorphism() {
            prop_assert!(equivalence_profile(&f).verdict());
        }
    }

    #[test]
    fn equivalence_covers_pass_the_profile(seed in any::<u64>(), dim in 0usize..4) {
        let f = lawful_cover(seed, dim, CoverMode::Equivalence);
        prop_assert!(equivalence_profile(&f).verdict());
    }

    #[test]
    fn map_composition_is_associative_and_unital(seed in any::<u64>(), dim in 0usize..4) {
        let mut r = gen::rng(seed);
        let w = Arc::new(gen::random_globular(&mut r, dim, 2));
        let h = gen::random_cover(&mut r, &w, CoverMode::Random, 4);
        let g = gen::random_cover(&mut r, h.domain(), CoverMode::Random, 4);
        let f = gen::random_cover(&mut r, g.domain(), CoverMode::Random, 4);
        let left = compose_maps(&compose_maps(&h, &g).unwrap(), &f).unwrap();
        let right = compose_maps(&h, &compose_maps(&g, &f).unwrap()).unwrap();
        assert_same_map(&left, &right);
        assert_same_map(&compose_maps(&f, &identity_map(f.domain().clone())).unwrap(), &f);
        assert_same_map(&compose_maps(&identity_map(f.codomain().clone()), &f).unwrap(), &f);
    }

    #[test]
    fn pullback_matches_pair_oracle(seed in any::<u64>(), dim in 0usize..4, mode in 0usize..3) {
        let modes = [CospanMode::Random, CospanMode::CoverLike, CospanMode::Iso];
        let (f, g) = gen::random_cospan(&mut gen::rng(seed), dim, 4, modes[mode]);
        let pb = pullback_globular(&f, &g).unwrap();
        assert_same_map(&compose_maps(&f, &pb.left).unwrap(), &compose_maps(&g, &pb.right).unwrap());
        for k in 0..=dim {
            let expected: BTreeSet<(usize, usize)> = (0..f.domain().len(k))
                .flat_map(|x| (0..g.domain().len(k)).map(move |y| (x, y)))
                .filter(|&(x, y)| f.apply(k, x) == g.apply(k, y))
                .collect();
            let got: BTreeSet<(usize, usize)> = (0..pb.apex.len(k)).map(|p| pb.pair(k, p)).collect();
            prop_assert_eq!(&got, &expected);
            for p in 0..pb.apex.len(k) {
                prop_assert_eq!(pb.left.apply(k, p), pb.pair(k, p).0);
                prop_assert_eq!(pb.right.apply(k, p), pb.pair(k, p).1);
            }
        }
    }

    #[test]
    fn pullback_is_symmetric_up_to_swap(seed in any::<u64>(), dim in 0usize..4) {
        let (f, g) = gen::random_cospan(&mut gen::rng(seed), dim, 4, CospanMode::Random);
        let fg = pullback_globular(&f, &g).unwrap();
        let gf = pullback_globular(&g, &f).unwrap();
        for k in 0..=dim {
            prop_assert_eq!(fg.apex.len(k), gf.apex.len(k));
            for p in 0..fg.apex.len(k) {
                let (x, y) = fg.pair(k, p);
                let q = gf.cell_of(k, (y, x)).expect("swapped pair");
                if k > 0 {
                    let (sx, sy) = fg.pair(k - 1, fg.apex.src(k, p));
                    prop_assert_eq!(gf.pair(k - 1, gf.apex.src(k, q)), (sy, sx));
                    let (tx, ty) = fg.pair(k - 1, fg.apex.tgt(k, p));
                    prop_assert_eq!(gf.pair(k - 1, gf.apex.tgt(k, q)), (ty, tx));
                }
            }
        }
    }

    #[test]
    fn span_operations_preserve_equivalences(seed in any::<u64>(), dim in 0usize..4) {
        let (s1, s2) = gen::random_span_chain(&mut gen::rng(seed), dim, 3);
        let e1 = is_span_equivalence(&s1).verdict();
        let e2 = is_span_equivalence(&s2).verdict();
        prop_assert_eq!(is_span_equivalence(&swap_span(&s1)).verdict(), e1);
        let composite = compose_spans(&s1, &s2).unwrap();
        if e1 && e2 {
            prop_assert!(is_span_equivalence(&composite).verdict());
        }
        let unit = compose_spans(&identity_span(s1.left().codomain().clone()), &s1).unwrap();
        for k in 0..=dim {
            prop_assert_eq!(unit.apex().len(k), s1.apex().len(k));
        }
    }

    #[test]
    fn generated_categories_are_lawful(seed in any::<u64>(), family in 0usize..Family::ALL.len()) {
        let mut r = gen::rng(seed);
        let c = gen::random_category(&mut r, Family::ALL[family], 4);
        prop_assert!(check_category_laws(&c).verdict());
        let copies: Vec<usize> = (0..c.num_objects()).map(|o| 1 + (seed as usize >> o) % 2).collect();
        let inflated = gen::inflate(&c, &copies);
        prop_assert!(check_category_laws(&inflated.category).verdict());
    }

    #[test]
    fn generated_equivalences_satisfy_the_triangle_identities(seed in any::<u64>()) {
        let e = gen::random_equivalence(&mut gen::rng(seed), &Family::ALL);
        prop_assert!(check_adjoint_equivalence(e.s(), e.t(), e.eta(), e.eps()).verdict());
        prop_assert!(check_naturality(e.eta()).verdict());
        let swapped = e.swap();
        prop_assert!(check_adjoint_equivalence(swapped.s(), swapped.t(), swapped.eta(), swapped.eps()).verdict());
        let p = pseudo_inverse(&projection_u(&equivalence_fusion(&e))).unwrap();
        prop_assert!(check_adjoint_equivalence(p.s(), p.t(), p.eta(), p.eps()).verdict());
        let c = compose_equivalences(&e, &swapped).unwrap();
        prop_assert!(check_adjoint_equivalence(c.s(), c.t(), c.eta(), c.eps()).verdict());
        prop_assert_eq!(c.a(), e.a());
        prop_assert_eq!(c.b(), e.a());
    }

    #[test]
    fn fusion_is_lawful_with_faithful_projections(seed in any::<u64>()) {
        let e = gen::random_equivalence(&mut gen::rng(seed), &Family::ALL);
        let fusion = equivalence_fusion(&e);
        let n = e.a().num_objects() + e.b().num_objects();
        prop_assert_eq!(fusion.category().num_objects(), n);
        prop_assert!(check_category_laws(fusion.category()).verdict());
        for leg in [projection_u(&fusion), projection_v(&fusion)] {
            prop_assert!(check_functor_laws(&leg).verdict());
            prop_assert!(functor_props(&leg).verdict());
        }
        let (_, span) = fuse_to_span(&e);
        prop_assert_eq!(span.left().codomain(), e.a());
        prop_assert_eq!(span.right().codomain(), e.b());
    }

    #[test]
    fn functor_composition_is_associative(seed in any::<u64>()) {
        let mut r = gen::rng(seed);
        let cats: Vec<_> = (0..3)
            .map(|i| Arc::new(gen::random_category(&mut r, Family::ALL[(seed as usize + i) % Family::ALL.len()], 2)))
            .collect();
        let fs = enumerate_functors(&cats[0], &cats[1]);
        let gs = enumerate_functors(&cats[1], &cats[2]);
        let hs = enumerate_functors(&cats[2], &cats[0]);
        for f in fs.iter().take(3) {
            for g in gs.iter().take(3) {
                let gf = g.after(f).unwrap();
                prop_assert!(check_functor_laws(&gf).verdict());
                for h in hs.iter().take(3) {
                    prop_assert_eq!(h.after(&gf).unwrap(), h.after(g).unwrap().after(f).unwrap());
                }
            }
            prop_assert_eq!(&f.after(&FinFunctor::identity(cats[0].clone())).unwrap(), f);
        }
    }

    #[test]
    fn category_pullback_commutes(seed in any::<u64>()) {
        let mut r = gen::rng(seed);
        let base = Arc::new(gen::random_category(&mut r, Family::Poset, 3));
        let a = Arc::new(gen::random_category(&mut r, Family::FreeAcyclic, 3));
        let fs = enumerate_functors(&a, &base);
        let gs = enumerate_functors(&base, &base);
        if let (Some(f), Some(g)) = (fs.last(), gs.first()) {
            let pb = pullback_category(f, g).unwrap();
            prop_assert!(check_category_laws(&pb.apex).verdict());
            prop_assert_eq!(f.after(&pb.left).unwrap(), g.after(&pb.right).unwrap());
        }
    }

    #[test]
    fn monad_laws_on_random_carriers(seed in any::<u64>()) {
        let g = gen::random_globular(&mut gen::rng(seed), 1, 3);
        prop_assert!(check_monad_laws(&g, 3).unwrap().verdict());
    }

    #[test]
    fn bounded_free_category_composes_by_concatenation(seed in any::<u64>()) {
        let g = Arc::new(gen::random_globular(&mut gen::rng(seed), 1, 3));
        let free = free_category_bounded(g.clone(), 3).unwrap();
        prop_assert_eq!(free.num_morphisms(), paths_up_to(&g, 3).len());
        for (i, p) in free.paths().iter().enumerate() {
            for (j, q) in free.paths().iter().enumerate() {
                if p.end(&g) != q.start || p.len() + q.len() > 3 {
                    continue;
                }
                let k = free.compose(j, i).expect("within bound");
                let joined: Vec<usize> = p.edges.iter().chain(&q.edges).copied().collect();
                prop_assert_eq!(&free.paths()[k].edges, &joined);
            }
        }
    }

    #[test]
    fn nerves_of_generated_categories_are_algebras(seed in any::<u64>(), family in 0usize..Family::ALL.len()) {
        let c = gen::random_category(&mut gen::rng(seed), Family::ALL[family], 3);
        prop_assert!(check_algebra_laws(&nerve(&c), 3).unwrap().verdict());
    }

    #[test]
    fn printing_round_trips(seed in any::<u64>(), dim in 0usize..4) {
        let mut r = gen::rng(seed);
        let mut doc = Document::new();
        let y = Arc::new(gen::random_globular(&mut r, dim, 3));
        doc.add_map("m", gen::random_cover(&mut r, &y, CoverMode::Random, 4));
        doc.add_equivalence("E", gen::random_equivalence(&mut r, &Family::ALL));
        let text = print(&doc);
        let back = parse(&text).unwrap();
        prop_assert_eq!(&back, &doc);
        prop_assert_eq!(print(&back), text);
    }
}

#[test]
fn empty_and_terminal_sets_have_the_expected_sizes() {
    let t = GlobularSet::terminal(3);
    assert!((0..=3).all(|k| t.len(k) == 1));
    assert!(GlobularSet::empty(2).is_empty());
    let to_t = GlobularMap::to_terminal(Arc::new(t.clone()));
    assert!(to_t.is_isomorphism());
}
