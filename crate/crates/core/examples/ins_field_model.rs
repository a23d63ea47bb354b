//! The finite field `𝔽_{p^{m+1}} = 𝔽_p[t]/(f)` with inverses, and its dual
//! coalgebra, which satisfies the invertibility presentation.

use opcheck::ins::{build_field_model, build_ins_presentation};
use opcheck::presentation::check_relations;
use opcheck::Result;

fn main() -> Result<()> {
    for (p, m) in [(2, 1), (3, 1), (2, 2)] {
        let model = build_field_model(p, m)?;
        let lambdas = model.all_lambdas();
        let dual = model.dual_coalgebra(&lambdas)?;
        let pres = build_ins_presentation(model.field(), m, &lambdas)?;
        let report = check_relations(&pres.presentation, &dual.assignment()?)?;
        println!(
            "𝔽_{p}^{} via modulus {:?}: {} relations, {}",
            m + 1,
            model.modulus,
            report.checked,
            if report.passed() { "all hold" } else { "FAILED" }
        );
    }
    Ok(())
}
