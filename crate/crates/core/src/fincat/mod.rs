//! Finite categories, functors, natural transformations and adjoint
//! equivalences, with exhaustive law checkers.

mod adjoint;
mod category;
mod functor;
mod nat;
mod pullback;
mod search;

pub use adjoint::{
    check_adjoint_equivalence, compose_equivalences, promote_to_adjoint_equivalence, pseudo_inverse, AdjointEquivalence,
};
pub use category::{check_category_laws, CategoryBuilder, FinCategory, Morphism};
pub use functor::{check_functor_laws, functor_props, FinFunctor};
pub use nat::{check_naturality, is_natural_iso, NatTrans};
pub use pullback::{check_cat_span, pullback_category, CatSpan, CategoryPullback};
pub use search::{are_equivalent_bruteforce, enumerate_functors, SEARCH_MAX_MORPHISMS, SEARCH_MAX_OBJECTS};
