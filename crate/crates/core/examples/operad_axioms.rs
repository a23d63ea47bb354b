//! Builds the standard truncated operads and verifies the operad axioms on
//! each of them exactly.

use opcheck::operad::{build_from_algebra, build_uassoc, build_unit_operad, check_operad_axioms, coend_operad, end_operad, Algebra};
use opcheck::{FieldSpec, Result};

fn main() -> Result<()> {
    let f2 = FieldSpec::prime(2)?;
    let operads = [
        ("unit", build_unit_operad(f2, 3)?),
        ("uassoc", build_uassoc(f2, 3)?),
        ("dual numbers", build_from_algebra(&Algebra::dual_numbers(f2))?),
        ("End(𝔽₂²)", end_operad(2, 3, f2)?),
        ("Coend(𝔽₂²)", coend_operad(2, 3, f2)?),
    ];
    for (name, p) in &operads {
        let report = check_operad_axioms(p)?;
        let dims: Vec<usize> = (0..=p.max_arity()).map(|n| p.dim(n)).collect();
        println!(
            "{name:>14}: dims {dims:?}, {} identities checked, {}",
            report.checked,
            if report.passed() { "all hold" } else { "FAILED" }
        );
    }
    Ok(())
}
