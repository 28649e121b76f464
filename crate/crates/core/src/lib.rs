//! Hook lengths, contents and an explicit bijection proving
//!
//! ```text
//! Σ_{u ∈ λ} h(u)² = n² + Σ_{u ∈ λ} c(u)²
//! ```
//!
//! for every partition `λ ⊢ n`, together with the injections for other powers,
//! rectangle counts inside Young diagrams, and an exhaustive verifier.
//!
//! Counting functions are generic over [`Count`]; [`Size`] and [`WideSize`] are the
//! machine-word instantiations, and any arbitrary-precision unsigned integer
//! implementing the `num-traits` arithmetic traits works as well.

pub mod bijection;
pub mod count;
pub mod error;
pub mod format;
pub mod labeled;
pub mod partition;
pub mod power;
pub mod rect;
pub mod verify;

pub use bijection::{phi, phi_inv, restriction_check, Maps, Mutant, RestrictionReport};
pub use count::Count;
pub use error::{Error, Result};
pub use format::{render, ElementRecord};
pub use labeled::{
    classify_h, classify_n2, enumerate_set, set_size, validate_c, validate_h, ContentElement,
    Element, Family, HClass, HookElement, NClass, TargetElement, TupleElement,
};
pub use partition::{partitions, Cell, CellStats, Partition};
pub use power::{inequality_check, phi_k, psi1, psi1_in_image, witness_non_image, InequalityReport, Relation};
pub use rect::RectCounts;
pub use verify::{verify, Check, VerifyConfig, VerifyReport};

/// Default exact counter.
pub type Size = u64;
/// Counter for large shapes or high powers.
pub type WideSize = u128;
