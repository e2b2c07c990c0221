//! Finite n-globular sets, their maps and cell-wise map properties.

mod map;
mod props;
mod set;

pub use map::map_from_name_fn;
pub(crate) use map::same_set;
pub use map::{compose_maps, identity_map, validate_map, GlobularMap, RawGlobularMap};
pub use props::{equivalence_profile, is_faithful_on, is_full_on, is_injective_on, is_surjective_on};
pub use set::{validate_globular, GlobularSet, RawGlobularSet};
