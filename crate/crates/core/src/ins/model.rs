//! The extension field `𝔽_{p^{m+1}} = 𝔽_p[t]/(f)` as an algebra over the truncated Ins operad.

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::linalg::{basis_vector, LinearMap};
use crate::operad::Algebra;
use crate::presentation::{Mode, StructureAssignment};

use super::coalgebra::InsCoalgebraData;
use super::poly::{rem, smallest_irreducible};
use super::{generator_names, nonzero_vectors};

/// Largest `p^{m+1}` accepted by [`build_field_model`].
pub const MODEL_GUARD: u64 = 1 << 20;

#[derive(Clone, Debug)]
pub struct InsAlgebraModel {
    pub p: u32,
    pub m: usize,
    /// Monic irreducible of degree `m+1`, lowest coefficient first.
    pub modulus: Vec<u32>,
    /// The field on the basis `1, t, …, t^m`.
    pub algebra: Algebra,
}

/// Builds `𝔽_p[t]/(f)` with `f` the first monic irreducible of degree `m+1`
/// and `υ_i = tⁱ`.
pub fn build_field_model(p: u32, m: usize) -> Result<InsAlgebraModel> {
    let field = FieldSpec::prime(p)?;
    let order = u64::from(p).checked_pow(m as u32 + 1).filter(|&q| q <= MODEL_GUARD);
    if order.is_none() {
        return Err(Error::SizeGuard {
            what: format!("p^(m+1) for p = {p}, m = {m}"),
            needed: u128::from(p).saturating_pow(m as u32 + 1),
            limit: u128::from(MODEL_GUARD),
        });
    }
    let modulus = smallest_irreducible(m + 1, p)
        .ok_or_else(|| Error::NotApplicable(format!("no irreducible of degree {} over F{p}", m + 1)))?;
    let d = m + 1;
    let mut mult = LinearMap::zero(field, d, d * d);
    for i in 0..d {
        for j in 0..d {
            let mut mono = vec![0; i + j + 1];
            mono[i + j] = 1;
            for (k, &c) in rem(&mono, &modulus, p).iter().enumerate() {
                mult.set(k, i * d + j, field.from_i64(i64::from(c)));
            }
        }
    }
    let algebra = Algebra::new(field, d, mult, basis_vector(field, d, 0))?;
    Ok(InsAlgebraModel {
        p,
        m,
        modulus,
        algebra,
    })
}

impl InsAlgebraModel {
    pub fn field(&self) -> FieldSpec {
        self.algebra.field()
    }

    pub fn dim(&self) -> usize {
        self.m + 1
    }

    /// `Σ λᵢ υᵢ` as an element of the carrier.
    pub fn element(&self, lambda: &[Scalar]) -> Vec<Scalar> {
        lambda.to_vec()
    }

    /// `I_λ`: multiplication by `(Σ λᵢ υᵢ)⁻¹`.
    pub fn inverse_map(&self, lambda: &[Scalar]) -> Result<LinearMap> {
        if lambda.len() != self.dim() {
            return Err(Error::dims(format!("λ needs {} entries", self.dim())));
        }
        self.algebra
            .left_mult(&self.element(lambda))?
            .inverse()
            .ok_or_else(|| Error::InvalidStructure("Σ λ_i υ_i is not invertible".into()))
    }

    /// Every nonzero `λ ∈ 𝔽_p^{m+1}`.
    pub fn all_lambdas(&self) -> Vec<Vec<Scalar>> {
        nonzero_vectors(self.field(), self.dim())
    }

    /// Algebra-mode matrices for `mu`, `u0..um` and `I0..` (one per listed λ).
    pub fn assignment(&self, lambdas: &[Vec<Scalar>]) -> Result<StructureAssignment> {
        let f = self.field();
        let d = self.dim();
        let mut s = StructureAssignment::new(f, d, Mode::Algebra);
        let (units, invs) = generator_names(self.m, lambdas.len());
        s.assign("mu", 2, self.algebra.mult().clone())?;
        for (i, name) in units.iter().enumerate() {
            s.assign(name.clone(), 0, LinearMap::column_vector(f, basis_vector(f, d, i))?)?;
        }
        for (name, lambda) in invs.iter().zip(lambdas) {
            s.assign(name.clone(), 1, self.inverse_map(lambda)?)?;
        }
        Ok(s)
    }

    /// The dual coalgebra `(A^∨, μ^∨, υᵢ^∨, I_λ^∨)`.
    pub fn dual_coalgebra(&self, lambdas: &[Vec<Scalar>]) -> Result<InsCoalgebraData> {
        let d = self.dim();
        let f = self.field();
        let inv = lambdas
            .iter()
            .map(|l| Ok((l.clone(), self.inverse_map(l)?.transpose())))
            .collect::<Result<Vec<_>>>()?;
        InsCoalgebraData::new(
            f,
            d,
            self.algebra.mult().transpose(),
            (0..d).map(|i| basis_vector(f, d, i)).collect(),
            Some(inv),
        )
    }

    pub fn to_json(&self) -> Value {
        json!({
            "p": self.p,
            "m": self.m,
            "modulus": self.modulus,
            "algebra": self.algebra.to_json(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f4_inverse_of_one_plus_t_is_t() {
        let model = build_field_model(2, 1).unwrap();
        assert_eq!(model.modulus, vec![1, 1, 1]);
        let f = model.field();
        let inv = model.inverse_map(&[f.one(), f.one()]).unwrap();
        // I_λ(1) = t
        assert_eq!(inv.apply(&basis_vector(f, 2, 0)).unwrap(), basis_vector(f, 2, 1));
    }

    #[test]
    fn m_zero_is_the_prime_field() {
        for p in [2, 3, 5] {
            let model = build_field_model(p, 0).unwrap();
            assert_eq!(model.dim(), 1);
            let f = model.field();
            assert!(model.inverse_map(&[f.one()]).unwrap().is_identity());
        }
    }

    #[test]
    fn guard() {
        assert!(matches!(build_field_model(2, 20), Err(Error::SizeGuard { .. })));
        assert!(build_field_model(4, 1).is_err());
    }
}
