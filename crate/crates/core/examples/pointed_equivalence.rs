//! Pointed coalgebras over `P` against coalgebras over the reduced part `P̄`:
//! the terminal coalgebra, the point sum, and the round trip.

use opcheck::linalg::LinearMap;
use opcheck::operad::{build_arity01, Algebra, LeftModule};
use opcheck::sanity::{composed_counit_check, point_sum, round_trip_iso, terminal_coalgebra, CoalgebraOverOperad};
use opcheck::{FieldSpec, Result};

fn main() -> Result<()> {
    let q = FieldSpec::Rationals;
    let a = Algebra::dual_numbers(q);
    let w = LeftModule::via_augmentation(&a, &LinearMap::from_i64(q, 2, &[&[1, 0]])?)?;
    let p = build_arity01(&a, Some(&w))?;

    let t = terminal_coalgebra(&p)?;
    println!("terminal coalgebra has dimension {}", t.dim());

    let vbar = CoalgebraOverOperad::zero(&p.reduced());
    let vp = point_sum(&vbar, &p)?;
    let (_, phi, report) = round_trip_iso(&vp)?;
    println!("point sum of 0: dim {}, round trip iso {} ({}×{})", vp.base.dim(), report.passed(), phi.cod(), phi.dom());

    let composed = composed_counit_check(&p, 2)?;
    println!(
        "G_P X ↠ G_P̄ X ↠ X: dims {} → {} → {}, {}",
        composed.first.dom(),
        composed.first.cod(),
        composed.second.cod(),
        if composed.checks.passed() { "ok" } else { "FAILED" }
    );
    Ok(())
}
