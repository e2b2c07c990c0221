use thiserror::Error;

use crate::report::Witness;

/// Errors raised while building or combining structures.
///
/// Law failures on an already well-formed structure are not errors: they are
/// reported through [`crate::PropertyReport`]. Errors are reserved for inputs
/// that cannot be interpreted at all or that violate a construction's
/// precondition.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Tables are malformed: dangling references, duplicate names, partial maps.
    #[error("structural error: {}", .0.join("; "))]
    Structural(Vec<String>),

    /// A candidate globular set fails the globularity identities.
    #[error("globularity violated at {} cell(s)", .0.len())]
    Globularity(Vec<Witness>),

    /// A candidate globular map fails to commute with source or target.
    #[error("map does not commute with source/target at {} cell(s)", .0.len())]
    Commutation(Vec<Witness>),

    /// A cell, object or dimension lies outside the structure it was asked about.
    #[error("domain error: {0}")]
    Domain(String),

    /// Two structures that must agree (codomains, middle objects, ...) do not.
    #[error("mismatch: {0}")]
    Mismatch(String),

    /// A construction's precondition does not hold.
    #[error("precondition failed: {0}")]
    Precondition(String),

    /// Exhaustive search refused an input above its size guard.
    #[error("size guard exceeded: {0}")]
    SizeGuard(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
