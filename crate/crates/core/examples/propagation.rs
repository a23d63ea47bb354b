//! Restriction along an algebra map `A → A′` is a morphism of cofree
//! coalgebras, and surjective counits propagate back.

use opcheck::operad::AlgebraMorphism;
use opcheck::sanity::propagation_check;
use opcheck::{FieldSpec, Result};

fn main() -> Result<()> {
    let q = FieldSpec::Rationals;
    for (name, phi) in [
        ("augmentation 𝕂[𝔖₂] → 𝕂", AlgebraMorphism::augmentation_s2(q)),
        ("unit inclusion 𝕂 → 𝕂[ε]", AlgebraMorphism::unit_inclusion_dual(q)),
    ] {
        let r = propagation_check(&phi, 2)?;
        println!(
            "{name}: {} checks, composite epi {}, counit epi {}, {}",
            r.checks.checked,
            r.composite_epi,
            r.second_epi,
            if r.checks.passed() { "ok" } else { "FAILED" }
        );
    }
    Ok(())
}
