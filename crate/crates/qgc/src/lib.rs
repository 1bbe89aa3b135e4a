//! Computer algebra for quasi group codes: group algebras over finite fields,
//! central primitive idempotents and block decomposition, concatenated
//! constructions from outer codes over block rings, and constructive
//! self-duality.

pub mod algebra;
pub mod blockring;
pub mod code;
pub mod config;
pub mod error;
pub mod field;
pub mod group;
pub mod linalg;
pub mod poly;
pub mod quasi;

pub use algebra::{AlgebraElement, GroupAlgebra};
pub use blockring::{
    concat, concat_distance_bound, BlockRing, ConcatenationMap, OuterCode, RingElement,
    RingKind, RingPresentation,
};
pub use code::{griesmer_max_d, DistanceOptions, DistanceReport, LinearCode, Strategy};
pub use error::{Error, Result};
pub use field::{Field, FieldElement};
pub use group::{FiniteGroup, Permutation};
pub use quasi::{
    assemble, concat_distance_bound_for_parts, exhaustive_selfdual_search, from_free_action,
    selfdual_construct, selfdual_exists, selfdual_violation, verify_module, FreeActionWitness,
    Part, QuasiGroupCode,
};
