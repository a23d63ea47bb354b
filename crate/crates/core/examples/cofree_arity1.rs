//! The cofree coalgebra `Hom(A, X)` over an arity-1 operad: its counit splits
//! and every map into `X` lifts uniquely.

use opcheck::operad::Algebra;
use opcheck::sanity::{cofree_arity1, counit_split_check, couniversal_test_family, verify_couniversal};
use opcheck::{FieldSpec, Result};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> Result<()> {
    let f3 = FieldSpec::prime(3)?;
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for (name, a) in [("dual numbers", Algebra::dual_numbers(f3)), ("𝕂[𝔖₂]", Algebra::group_algebra_s2(f3))] {
        let cf = cofree_arity1(&a, 2)?;
        let split = counit_split_check(&cf.counit)?;
        let tests = couniversal_test_family(&cf, &mut rng)?;
        let (report, lifts) = verify_couniversal(&cf, &tests)?;
        println!(
            "{name}: carrier dim {}, counit split {}, {} unique lifts, {}",
            cf.carrier.dim(),
            split.replayed,
            lifts.iter().filter(|l| l.matches_formula).count(),
            if report.passed() { "ok" } else { "FAILED" }
        );
    }
    Ok(())
}
