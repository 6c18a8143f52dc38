//! Annular Temperley-Lieb diagram calculus with exact arithmetic.
//!
//! Modules, bottom-up:
//! - [`scalar`]: cyclotomic numbers with certified sign decisions;
//! - [`tl`]: the disc Temperley-Lieb algebra and Jones-Wenzl idempotents;
//! - [`annular`]: annular tangles, composition, star and generators;
//! - [`tlmodules`]: the modules V^{k,ω}, V^μ, V^{0,±} and their Gram matrices;
//! - [`series`]: truncated power series and the Θ-transform;
//! - [`graphs`]: pointed bipartite graphs, loop counts and screening;
//! - [`ade`]: the E6/E7/E8 computations.

pub mod ade;
pub mod annular;
pub mod error;
pub mod graphs;
pub mod linalg;
pub mod scalar;
pub mod series;
pub mod tl;
pub mod tlmodules;

pub use annular::{AnnularDiagram, GeneratorKind, Level, WeightedDiagram};
pub use error::{Error, Result};
pub use graphs::PointedBipartiteGraph;
pub use scalar::{cyclo, CycloNumber, ScalarContext, ScalarMode, Sign};
pub use series::IntSeries;
pub use tl::{TLDiagram, TLElement};
pub use tlmodules::{GramResult, ModuleKind, ModuleSpec, ModuleVector};
