//! Coalgebras over truncated operads: validity, morphisms, cofree and
//! terminal objects, pointed coalgebras and the counit checks built on them.

mod coalgebra;
mod cofree;
mod morphisms;
mod pointed;

pub use coalgebra::{
    arity01_coalgebra, check_coalgebra, uassoc_coalgebra, CoalgebraJson, CoalgebraOverOperad,
    COALGEBRA_GUARD,
};
pub use cofree::{
    counit_split_check, cofree_arity1, couniversal_test_family, propagation_check, verify_couniversal, CofreeData, LiftResult,
    PropagationReport, SplitCheck,
};
pub use morphisms::{after_equals, check_morphism, solve_morphisms, AffineConstraint, MorphismSolution};
pub use pointed::{
    arity01_parts, composed_counit_check, cokernel_reduction, point_sum, round_trip_iso, terminal_coalgebra,
    terminal_morphism, terminality_check, ComposedCounit, PointedCoalgebra, POINT_SUM_MAX_ARITY,
};
