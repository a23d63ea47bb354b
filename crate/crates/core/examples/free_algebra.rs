//! Dimensions of the free algebra `P ⊲ X = ⊕ P(n) ⊗_{𝔖ₙ} X^{⊗n}` for a few operads.

use opcheck::operad::{build_uassoc, end_operad, free_algebra};
use opcheck::{FieldSpec, Result};

fn main() -> Result<()> {
    let q = FieldSpec::Rationals;
    for x in 0..=3 {
        let t = free_algebra(&build_uassoc(q, 3)?, x)?;
        println!("uassoc, dim X = {x}: {:?} (total {}), unit injective: {}", t.dims, t.total, t.unit_injective);
    }
    // End(V)(n) ⊗ X^{⊗n} is a permutation module, so the orbit count is exact
    let e = free_algebra(&end_operad(2, 3, FieldSpec::prime(2)?)?, 2)?;
    println!("End(𝔽₂²), dim X = 2: {:?}", e.dims);
    Ok(())
}
