//! Executable finite models of globular sets, span equivalence, and the
//! equivalence fusion of finite categories.

pub mod error;
pub mod fincat;
pub mod fusion;
pub mod gen;
pub mod globular;
pub mod limits;
pub mod names;
pub mod one_alg;
pub mod pres;
pub mod report;
pub mod span;

pub use error::{Error, Result};
pub use fincat::{AdjointEquivalence, CatSpan, FinCategory, FinFunctor, NatTrans};
pub use fusion::Fusion;
pub use globular::{GlobularMap, GlobularSet};
pub use one_alg::{OneAlgebra, Path};
pub use pres::{Diagnostic, DiagnosticKind, Document};
pub use report::{PropertyReport, Witness};
pub use span::Span;
