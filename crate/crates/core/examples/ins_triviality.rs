//! When `dim V ≤ m`, some combination of the counits vanishes, so the
//! corresponding `σ_λ` is zero and cannot have a left inverse.

use opcheck::ins::{triviality_certificate, InsCoalgebraData};
use opcheck::{FieldSpec, LinearMap, Result};

fn main() -> Result<()> {
    let q = FieldSpec::Rationals;
    // V = ℚ with δ(e) = e ⊗ e and ε₀ = ε₁ = ε₂ = e^*
    let delta = LinearMap::from_i64(q, 1, &[&[1]])?;
    let eps = vec![vec![q.one()]; 3];
    let data = InsCoalgebraData::new(q, 1, delta, eps, None)?;
    let cert = triviality_certificate(&data)?;
    let lambda: Vec<String> = cert.lambda.iter().map(ToString::to_string).collect();
    println!("λ = ({})", lambda.join(", "));
    println!("σ_λ is zero: {}", cert.sigma.is_zero());
    println!("certificate replays: {}", cert.replay(&data)?);
    Ok(())
}
