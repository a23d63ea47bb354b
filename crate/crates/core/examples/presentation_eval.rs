//! Parses a presentation, evaluates relations on concrete structures and
//! reports which relations fail.

use opcheck::operad::Algebra;
use opcheck::presentation::{algebra_assignment, check_relations, Presentation};
use opcheck::{FieldSpec, LinearMap, Result};

fn main() -> Result<()> {
    let q = FieldSpec::Rationals;
    let pres = Presentation::uassoc(q);
    for rel in &pres.relations {
        println!("relation: {rel}");
    }

    let dual = Algebra::dual_numbers(q);
    let report = check_relations(&pres, &algebra_assignment(&dual)?)?;
    println!("dual numbers: {}/{} relations hold", report.checked - report.failed, report.checked);

    // e₁e₁ = e₂, e₁e₂ = e₁, all else 0: neither associative nor unital for 1 + 0ε
    let mut s = algebra_assignment(&dual)?;
    let mu = LinearMap::from_i64(q, 4, &[&[0, 1, 0, 0], &[1, 0, 0, 0]])?;
    s.maps.insert("mu".into(), mu);
    let report = check_relations(&pres, &s)?;
    for failure in &report.failures {
        println!("fails: {} ({})", failure.identity, failure.witness);
    }
    Ok(())
}
