use std::sync::Arc;

use super::functor::{functor_props, same_cat, unique_preimage};
use super::nat::{check_naturality, is_natural_iso};
use super::{check_functor_laws, FinCategory, FinFunctor, NatTrans};
use crate::error::{Error, Result};
use crate::report::{PropertyReport, Witness};

/// An adjoint equivalence `(S, T, η, ε)` between `A` and `B`, with
/// `η: I_A -> TS` and `ε: ST -> I_B` natural isomorphisms satisfying both
/// triangle identities. Values of this type have passed
/// [`check_adjoint_equivalence`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdjointEquivalence {
    s: FinFunctor,
    t: FinFunctor,
    eta: NatTrans,
    eps: NatTrans,
}

impl AdjointEquivalence {
    pub fn new(s: FinFunctor, t: FinFunctor, eta: NatTrans, eps: NatTrans) -> Result<Self> {
        let report = check_adjoint_equivalence(&s, &t, &eta, &eps);
        if !report.verdict() {
            return Err(Error::Precondition(format!(
                "not an adjoint equivalence: {}",
                report
                    .witnesses
                    .iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>()
                    .join("; ")
            )));
        }
        Ok(AdjointEquivalence { s, t, eta, eps })
    }

    /// Builds from component tables: `eta[a]` in `A`, `eps[b]` in `B`.
    pub fn from_components(s: FinFunctor, t: FinFunctor, eta: Vec<usize>, eps: Vec<usize>) -> Result<Self> {
        let a = s.domain().clone();
        let b = s.codomain().clone();
        let eta = NatTrans::new(FinFunctor::identity(a), t.after(&s)?, eta)?;
        let eps = NatTrans::new(s.after(&t)?, FinFunctor::identity(b), eps)?;
        Self::new(s, t, eta, eps)
    }

    /// The identity equivalence on `c`.
    pub fn identity(c: Arc<FinCategory>) -> Self {
        let id = FinFunctor::identity(c);
        let unit = NatTrans::identity(id.clone());
        AdjointEquivalence {
            s: id.clone(),
            t: id,
            eta: unit.clone(),
            eps: unit,
        }
    }

    pub fn a(&self) -> &Arc<FinCategory> {
        self.s.domain()
    }

    pub fn b(&self) -> &Arc<FinCategory> {
        self.s.codomain()
    }

    pub fn s(&self) -> &FinFunctor {
        &self.s
    }

    pub fn t(&self) -> &FinFunctor {
        &self.t
    }

    pub fn eta(&self) -> &NatTrans {
        &self.eta
    }

    pub fn eps(&self) -> &NatTrans {
        &self.eps
    }

    /// The same equivalence read from `B` to `A`: `(T, S, ε⁻¹, η⁻¹)`.
    pub fn swap(&self) -> AdjointEquivalence {
        AdjointEquivalence {
            s: self.t.clone(),
            t: self.s.clone(),
            eta: self.eps.inverse().expect("counit is invertible"),
            eps: self.eta.inverse().expect("unit is invertible"),
        }
    }
}

/// Functor laws for `S` and `T`, naturality and invertibility of `η` and
/// `ε`, and both triangle identities.
pub fn check_adjoint_equivalence(s: &FinFunctor, t: &FinFunctor, eta: &NatTrans, eps: &NatTrans) -> PropertyReport {
    let mut shape = PropertyReport::new("shape");
    let (a, b) = (s.domain(), s.codomain());
    if !same_cat(t.domain(), b) || !same_cat(t.codomain(), a) {
        shape.push(Witness::new("T is not a functor B -> A", Vec::<String>::new()));
        return PropertyReport::all("adjoint equivalence", vec![shape]);
    }
    let ts = t.after(s).expect("composable");
    let st = s.after(t).expect("composable");
    if eta.source() != &FinFunctor::identity(a.clone()) || eta.target() != &ts {
        shape.push(Witness::new("eta is not I_A -> TS", Vec::<String>::new()));
    }
    if eps.source() != &st || eps.target() != &FinFunctor::identity(b.clone()) {
        shape.push(Witness::new("eps is not ST -> I_B", Vec::<String>::new()));
    }
    let mut laws_s = check_functor_laws(s);
    laws_s.name = "S functor laws".into();
    let mut laws_t = check_functor_laws(t);
    laws_t.name = "T functor laws".into();
    if !shape.verdict() || !laws_s.verdict() || !laws_t.verdict() {
        return PropertyReport::all("adjoint equivalence", vec![shape, laws_s, laws_t]);
    }
    let mut eta_iso = is_natural_iso(eta);
    eta_iso.name = "eta natural isomorphism".into();
    let mut eps_iso = is_natural_iso(eps);
    eps_iso.name = "eps natural isomorphism".into();
    if !check_naturality(eta).verdict() || !check_naturality(eps).verdict() {
        return PropertyReport::all("adjoint equivalence", vec![shape, laws_s, laws_t, eta_iso, eps_iso]);
    }

    // eps_{Sa} ∘ S(eta_a) = id_{Sa}
    let mut tri_a = PropertyReport::new("triangle at A");
    for x in 0..a.num_objects() {
        let lhs = b.comp(eps.component(s.obj(x)), s.mor(eta.component(x)));
        if lhs != b.identity(s.obj(x)) {
            tri_a.push(Witness::new("eps_Sa . S(eta_a) != id", [a.object_name(x)]));
        }
    }
    // T(eps_b) ∘ eta_{Tb} = id_{Tb}
    let mut tri_b = PropertyReport::new("triangle at B");
    for y in 0..b.num_objects() {
        let lhs = a.comp(t.mor(eps.component(y)), eta.component(t.obj(y)));
        if lhs != a.identity(t.obj(y)) {
            tri_b.push(Witness::new("T(eps_b) . eta_Tb != id", [b.object_name(y)]));
        }
    }
    PropertyReport::all(
        "adjoint equivalence",
        vec![shape, laws_s, laws_t, eta_iso, eps_iso, tri_a, tri_b],
    )
}

/// Turns an equivalence `(S, T, η, ε₀)` into an adjoint equivalence by
/// keeping `η` and rebuilding the counit: `ε_b` is the unique morphism
/// `STb -> b` with `T(ε_b) = η_{Tb}⁻¹`. `ε₀` only has to be a natural
/// isomorphism; it is otherwise ignored.
pub fn promote_to_adjoint_equivalence(
    s: &FinFunctor,
    t: &FinFunctor,
    eta: &NatTrans,
    eps0: &NatTrans,
) -> Result<AdjointEquivalence> {
    for (name, nat) in [("eta", eta), ("eps", eps0)] {
        let r = is_natural_iso(nat);
        if !r.verdict() {
            return Err(Error::Precondition(format!("{name} is not a natural isomorphism")));
        }
    }
    let (a, b) = (s.domain(), s.codomain());
    let mut eps = Vec::with_capacity(b.num_objects());
    for y in 0..b.num_objects() {
        let ty = t.obj(y);
        let inv = a
            .inverse(eta.component(ty))
            .expect("components of a natural isomorphism are invertible");
        let sty = s.obj(ty);
        let c = unique_preimage(t, sty, y, inv).ok_or_else(|| {
            Error::Precondition(format!(
                "T has no unique preimage of the inverse unit at `{}`",
                b.object_name(y)
            ))
        })?;
        eps.push(c);
    }
    let eps = NatTrans::new(eps0.source().clone(), eps0.target().clone(), eps)?;
    AdjointEquivalence::new(s.clone(), t.clone(), eta.clone(), eps)
}

/// Completes a surjective-on-objects, full and faithful functor `F: C -> A`
/// to an adjoint equivalence `(F, G, η, ε)`. `G` sends each object to its
/// first preimage in `C`'s order, so `F G = I_A` and `ε` is the identity.
pub fn pseudo_inverse(f: &FinFunctor) -> Result<AdjointEquivalence> {
    let laws = check_functor_laws(f);
    if !laws.verdict() {
        return Err(Error::Precondition("input is not a functor".into()));
    }
    let props = functor_props(f);
    if let Some(failing) = props.parts.iter().find(|p| !p.verdict()) {
        return Err(Error::Precondition(format!("functor is not {}", failing.name)));
    }
    let (c, a) = (f.domain().clone(), f.codomain().clone());
    let choice: Vec<usize> = (0..a.num_objects())
        .map(|x| {
            (0..c.num_objects())
                .find(|&o| f.obj(o) == x)
                .expect("surjective on objects")
        })
        .collect();
    let morphisms: Vec<usize> = (0..a.num_morphisms())
        .map(|m| unique_preimage(f, choice[a.src(m)], choice[a.tgt(m)], m).expect("full and faithful"))
        .collect();
    let g = FinFunctor::new(a.clone(), c.clone(), choice.clone(), morphisms)?;
    let eta: Vec<usize> = (0..c.num_objects())
        .map(|o| {
            let fo = f.obj(o);
            unique_preimage(f, o, choice[fo], a.identity(fo)).expect("full and faithful")
        })
        .collect();
    let eps: Vec<usize> = (0..a.num_objects()).map(|x| a.identity(x)).collect();
    AdjointEquivalence::from_components(f.clone(), g, eta, eps)
}

/// Composite `A ≃ B ≃ C`: `S₂S₁`, `T₁T₂`, unit `T₁(η₂ S₁) ∘ η₁` and counit
/// `ε₂ ∘ S₂(ε₁ T₂)`, then re-promoted.
pub fn compose_equivalences(e1: &AdjointEquivalence, e2: &AdjointEquivalence) -> Result<AdjointEquivalence> {
    if !same_cat(e1.b(), e2.a()) {
        return Err(Error::Mismatch("equivalences do not share a middle category".into()));
    }
    let (a, c) = (e1.a().clone(), e2.b().clone());
    let s = e2.s.after(&e1.s)?;
    let t = e1.t.after(&e2.t)?;
    let eta: Vec<usize> = (0..a.num_objects())
        .map(|x| {
            let inner = e1.t.mor(e2.eta.component(e1.s.obj(x)));
            a.comp(inner, e1.eta.component(x))
        })
        .collect();
    let eps: Vec<usize> = (0..c.num_objects())
        .map(|z| {
            let inner = e2.s.mor(e1.eps.component(e2.t.obj(z)));
            c.comp(e2.eps.component(z), inner)
        })
        .collect();
    let eta = NatTrans::new(FinFunctor::identity(a), t.after(&s)?, eta)?;
    let eps = NatTrans::new(s.after(&t)?, FinFunctor::identity(c), eps)?;
    promote_to_adjoint_equivalence(&s, &t, &eta, &eps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::CategoryBuilder;

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

    /// S: I -> 1, T picks a0, η_{a0} = id, η_{a1} = j.
    fn iso_to_one() -> AdjointEquivalence {
        let iso = walking_iso();
        let one = Arc::new(FinCategory::terminal());
        let s = FinFunctor::to_terminal(iso.clone());
        let t = FinFunctor::new(one, iso.clone(), vec![0], vec![0]).unwrap();
        let j = iso.morphism_index("j").unwrap();
        AdjointEquivalence::from_components(s, t, vec![0, j], vec![0]).unwrap()
    }

    #[test]
    fn identity_equivalence_passes() {
        let e = AdjointEquivalence::identity(walking_iso());
        assert!(check_adjoint_equivalence(e.s(), e.t(), e.eta(), e.eps()).verdict());
        let p = promote_to_adjoint_equivalence(e.s(), e.t(), e.eta(), e.eps()).unwrap();
        assert_eq!(p, e);
    }

    #[test]
    fn promotion_keeps_an_existing_counit() {
        let e = iso_to_one();
        let p = promote_to_adjoint_equivalence(e.s(), e.t(), e.eta(), e.eps()).unwrap();
        assert_eq!(p.eps(), e.eps());
    }

    #[test]
    fn promotion_repairs_a_twisted_counit() {
        // On Z/2 with S = T = identity and η = s (the non-trivial automorphism),
        // ε₀ = id makes the triangles fail; promotion must return ε = s⁻¹ = s.
        let c = z2();
        let id = FinFunctor::identity(c.clone());
        let s_mor = c.morphism_index("s").unwrap();
        let eta = NatTrans::new(id.clone(), id.clone(), vec![s_mor]).unwrap();
        let eps0 = NatTrans::new(id.clone(), id.clone(), vec![0]).unwrap();
        assert!(!check_adjoint_equivalence(&id, &id, &eta, &eps0).verdict());
        let e = promote_to_adjoint_equivalence(&id, &id, &eta, &eps0).unwrap();
        assert_eq!(e.eps().components(), &[s_mor]);
        assert!(check_adjoint_equivalence(e.s(), e.t(), e.eta(), e.eps()).verdict());
    }

    #[test]
    fn promotion_rejects_non_isos() {
        let c = Arc::new(
            CategoryBuilder::new()
                .objects(["x", "y"])
                .arrow("f", "x", "y")
                .build()
                .unwrap(),
        );
        let id = FinFunctor::identity(c.clone());
        // component at y is id_x, which has the wrong type
        let bad = NatTrans::new(id.clone(), id.clone(), vec![0, 0]).unwrap();
        assert!(matches!(
            promote_to_adjoint_equivalence(&id, &id, &bad, &NatTrans::identity(id.clone())),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn pseudo_inverse_of_identity_is_identity() {
        let c = walking_iso();
        let e = pseudo_inverse(&FinFunctor::identity(c.clone())).unwrap();
        assert_eq!(e, AdjointEquivalence::identity(c));
    }

    #[test]
    fn pseudo_inverse_of_walking_iso_collapse() {
        let c = walking_iso();
        let e = pseudo_inverse(&FinFunctor::to_terminal(c.clone())).unwrap();
        assert_eq!(e.t().object_map(), &[0]);
        // η_{a1}: a1 -> a0 is j
        assert_eq!(e.eta().component(1), c.morphism_index("j").unwrap());
    }

    #[test]
    fn pseudo_inverse_rejects_unfaithful() {
        match pseudo_inverse(&FinFunctor::to_terminal(z2())) {
            Err(Error::Precondition(msg)) => assert!(msg.contains("faithful")),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn swap_and_compose() {
        let e = iso_to_one();
        let back = e.swap();
        assert!(check_adjoint_equivalence(back.s(), back.t(), back.eta(), back.eps()).verdict());
        let auto = compose_equivalences(&e, &back).unwrap();
        assert!(Arc::ptr_eq(auto.a(), e.a()) || auto.a() == e.a());
        let a = auto.a().clone();
        assert!(auto.eta().components().iter().all(|&m| a.is_iso(m)));

        let with_id = compose_equivalences(&e, &AdjointEquivalence::identity(e.b().clone())).unwrap();
        assert_eq!(with_id, e);
        assert!(matches!(compose_equivalences(&e, &e), Err(Error::Mismatch(_))));
    }
}
