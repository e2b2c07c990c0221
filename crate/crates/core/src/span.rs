//! Spans of globular maps and span equivalence as an equivalence relation.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::globular::{compose_maps, equivalence_profile, same_set, GlobularMap, GlobularSet};
use crate::limits::pullback_globular;
use crate::report::PropertyReport;

/// A span `X <- Z -> Y` of globular maps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Span {
    apex: Arc<GlobularSet>,
    left: GlobularMap,
    right: GlobularMap,
}

impl Span {
    pub fn new(left: GlobularMap, right: GlobularMap) -> Result<Self> {
        if !same_set(left.domain(), right.domain()) {
            return Err(Error::Mismatch("span legs have different domains".into()));
        }
        Ok(Span {
            apex: left.domain().clone(),
            left,
            right,
        })
    }

    pub fn apex(&self) -> &Arc<GlobularSet> {
        &self.apex
    }

    pub fn left(&self) -> &GlobularMap {
        &self.left
    }

    pub fn right(&self) -> &GlobularMap {
        &self.right
    }
}

/// Both legs are surjective on 0-cells, full in every dimension and faithful
/// in the top dimension. Only the underlying globular data is checked here;
/// at n = 1 the algebra-map side condition lives in [`crate::one_alg`].
pub fn is_span_equivalence(s: &Span) -> PropertyReport {
    let mut left = equivalence_profile(&s.left);
    left.name = "left leg".into();
    let mut right = equivalence_profile(&s.right);
    right.name = "right leg".into();
    PropertyReport::all("span equivalence", vec![left, right])
}

pub fn identity_span(x: Arc<GlobularSet>) -> Span {
    let id = GlobularMap::identity(x.clone());
    Span {
        apex: x,
        left: id.clone(),
        right: id,
    }
}

pub fn swap_span(s: &Span) -> Span {
    Span {
        apex: s.apex.clone(),
        left: s.right.clone(),
        right: s.left.clone(),
    }
}

/// Composes `X <- Z1 -> Y` with `Y <- Z2 -> W` through the pullback of the
/// two legs into `Y`.
pub fn compose_spans(s1: &Span, s2: &Span) -> Result<Span> {
    if !same_set(s1.right.codomain(), s2.left.codomain()) {
        return Err(Error::Mismatch("the spans do not share a middle object".into()));
    }
    let pb = pullback_globular(&s1.right, &s2.left)?;
    Span::new(compose_maps(&s1.left, &pb.left)?, compose_maps(&s2.right, &pb.right)?)
}
