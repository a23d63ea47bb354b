//! Truncated operads as explicit linear data.

mod algebra;
mod axioms;
mod builders;
mod free;
mod morphism;
mod truncated;

pub use algebra::{Algebra, AlgebraJson, AlgebraMorphism, LeftModule};
pub use axioms::check_operad_axioms;
pub use builders::{
    build_arity01, build_from_algebra, build_uassoc, build_unit_operad, coend_operad, end_operad, uassoc_words,
    ENDO_GUARD, UASSOC_MAX_ARITY,
};
pub use free::{free_algebra, FreeAlgebraResult, FREE_GUARD};
pub use morphism::{dual_iso_coend_end, dual_iso_end_coend, operad_morphism_check, OperadMorphism};
pub use truncated::{composition_keys, OperadJson, TruncatedOperad};
