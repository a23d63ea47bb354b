//! Candidate coalgebras over the truncated Ins operad, the operator `σ_λ`,
//! generated subcoalgebras and triviality certificates.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::linalg::{is_zero_vector, json_vector, tensor_vectors, vector_to_json, LinearMap, Subspace};
use crate::presentation::{Mode, StructureAssignment};

use super::generator_names;

/// `(V, δ, ε₀, …, ε_m, I_λ)` with no validity assumed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InsCoalgebraData {
    pub field: FieldSpec,
    pub dim: usize,
    /// `δ : V → V ⊗ V`.
    pub delta: LinearMap,
    /// `ε₀, …, ε_m` as coordinate rows.
    pub eps: Vec<Vec<Scalar>>,
    /// Optional `(λ, I_λ)` pairs.
    pub inv: Option<Vec<(Vec<Scalar>, LinearMap)>>,
}

impl InsCoalgebraData {
    pub fn new(
        field: FieldSpec,
        dim: usize,
        delta: LinearMap,
        eps: Vec<Vec<Scalar>>,
        inv: Option<Vec<(Vec<Scalar>, LinearMap)>>,
    ) -> Result<Self> {
        if (delta.cod(), delta.dom()) != (dim * dim, dim) || delta.field() != field {
            return Err(Error::dims(format!("δ must be {}x{dim}", dim * dim)));
        }
        if eps.is_empty() || eps.iter().any(|e| e.len() != dim) {
            return Err(Error::dims(format!("need at least ε₀, each of length {dim}")));
        }
        let m = eps.len() - 1;
        for (lambda, map) in inv.iter().flatten() {
            if lambda.len() != m + 1 || (map.cod(), map.dom()) != (dim, dim) {
                return Err(Error::dims("I_λ entry has the wrong shape"));
            }
        }
        Ok(InsCoalgebraData {
            field,
            dim,
            delta,
            eps,
            inv,
        })
    }

    pub fn m(&self) -> usize {
        self.eps.len() - 1
    }

    pub fn is_coassociative(&self) -> Result<bool> {
        is_coassociative(&self.delta)
    }

    /// Whether `ε₀` is a two-sided counit for `δ`.
    pub fn has_counit(&self) -> Result<bool> {
        let id = LinearMap::identity(self.field, self.dim);
        let e0 = LinearMap::row_vector(self.field, self.eps[0].clone())?;
        Ok(e0.tensor(&id)?.compose(&self.delta)?.is_identity() && id.tensor(&e0)?.compose(&self.delta)?.is_identity())
    }

    /// `Σ λᵢ εᵢ` as a coordinate row.
    pub fn combined_functional(&self, lambda: &[Scalar]) -> Result<Vec<Scalar>> {
        if lambda.len() != self.eps.len() {
            return Err(Error::dims(format!("λ must have {} entries", self.eps.len())));
        }
        let mut acc = vec![self.field.zero(); self.dim];
        for (l, e) in lambda.iter().zip(&self.eps) {
            for (a, x) in acc.iter_mut().zip(e) {
                *a = &*a + &(l * x);
            }
        }
        Ok(acc)
    }

    /// Coalgebra-mode matrices for `mu`, `u0..um` and the stored `I` maps.
    pub fn assignment(&self) -> Result<StructureAssignment> {
        let mut s = StructureAssignment::new(self.field, self.dim, Mode::Coalgebra);
        let inv = self.inv.as_deref().unwrap_or(&[]);
        let (units, invs) = generator_names(self.m(), inv.len());
        s.assign("mu", 2, self.delta.clone())?;
        for (name, e) in units.iter().zip(&self.eps) {
            s.assign(name.clone(), 0, LinearMap::row_vector(self.field, e.clone())?)?;
        }
        for (name, (_, map)) in invs.iter().zip(inv) {
            s.assign(name.clone(), 1, map.clone())?;
        }
        Ok(s)
    }

    pub fn lambdas(&self) -> Vec<Vec<Scalar>> {
        self.inv.iter().flatten().map(|(l, _)| l.clone()).collect()
    }

    pub fn to_json(&self) -> Value {
        serde_json::to_value(InsCoalgebraJson {
            field: self.field,
            dim: self.dim,
            delta: self.delta.clone(),
            eps: self.eps.iter().map(|e| vec_json(e)).collect(),
            inv: self.inv.as_ref().map(|v| {
                v.iter()
                    .map(|(l, map)| InvJson {
                        lambda: vec_json(l),
                        map: map.clone(),
                    })
                    .collect()
            }),
        })
        .expect("coalgebra data serializes")
    }

    pub fn from_json(v: Value) -> Result<Self> {
        let raw: InsCoalgebraJson = serde_json::from_value(v)?;
        raw.field.validate()?;
        let eps = raw.eps.iter().map(|e| json_vector(raw.field, e)).collect::<Result<_>>()?;
        let inv = raw
            .inv
            .map(|v| {
                v.into_iter()
                    .map(|e| Ok((json_vector(raw.field, &e.lambda)?, e.map)))
                    .collect::<Result<Vec<_>>>()
            })
            .transpose()?;
        Self::new(raw.field, raw.dim, raw.delta, eps, inv)
    }
}

fn vec_json(v: &[Scalar]) -> Vec<Value> {
    vector_to_json(v).as_array().cloned().unwrap_or_default()
}

/// Wire form: `{"field","dim","delta":matrix,"eps":[[…],…],"inv":[{"lambda":[…],"map":matrix}]}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct InsCoalgebraJson {
    pub field: FieldSpec,
    pub dim: usize,
    pub delta: LinearMap,
    pub eps: Vec<Vec<Value>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub inv: Option<Vec<InvJson>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct InvJson {
    pub lambda: Vec<Value>,
    pub map: LinearMap,
}

pub fn is_coassociative(delta: &LinearMap) -> Result<bool> {
    let d = delta.dom();
    let id = LinearMap::identity(delta.field(), d);
    let left = delta.tensor(&id)?.compose(delta)?;
    let right = id.tensor(delta)?.compose(delta)?;
    Ok(left == right)
}

/// `σ_λ = ((Σ λᵢ εᵢ) ⊗ id_V) ∘ δ`.
pub fn sigma_lambda(data: &InsCoalgebraData, lambda: &[Scalar]) -> Result<LinearMap> {
    let phi = LinearMap::row_vector(data.field, data.combined_functional(lambda)?)?;
    phi.tensor(&LinearMap::identity(data.field, data.dim))?.compose(&data.delta)
}

/// The smallest subspace `W ∋ y` with `δ(W) ⊆ W ⊗ W`.
///
/// Closes `span{y}` under the slices `(e_k^* ⊗ id)δ(w)` and `(id ⊗ e_k^*)δ(w)`,
/// then verifies stability.
pub fn subcoalgebra_generated(delta: &LinearMap, y: &[Scalar]) -> Result<Subspace> {
    if !is_coassociative(delta)? {
        return Err(Error::InvalidStructure("δ is not coassociative".into()));
    }
    let field = delta.field();
    let d = delta.dom();
    if y.len() != d {
        return Err(Error::dims(format!("y must have length {d}")));
    }
    let mut w = Subspace::span(field, d, vec![y.to_vec()]);
    let mut done = 0;
    while done < w.dim() {
        let image = delta.apply(&w.basis()[done])?;
        done += 1;
        let mut grew = false;
        for k in 0..d {
            let row: Vec<Scalar> = image[k * d..(k + 1) * d].to_vec();
            let col: Vec<Scalar> = (0..d).map(|j| image[j * d + k].clone()).collect();
            grew |= w.insert(row);
            grew |= w.insert(col);
        }
        if grew {
            // the echelon basis was rebuilt, so rescan from the start
            done = 0;
        }
    }
    let ww = Subspace::span(
        field,
        d * d,
        w.basis().iter().flat_map(|a| w.basis().iter().map(move |b| tensor_vectors(a, b))).collect(),
    );
    for b in w.basis() {
        if !ww.contains(&delta.apply(b)?) {
            return Err(Error::InvalidStructure("closure is not δ-stable".into()));
        }
    }
    Ok(w)
}

/// Witness that candidate data of dimension `1 ≤ d ≤ m` cannot be an Ins-coalgebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrivialityCertificate {
    pub lambda: Vec<Scalar>,
    /// `σ_λ`, which must be the zero map.
    pub sigma: LinearMap,
    pub conclusion: bool,
}

/// Finds `λ ≠ 0` with `Σ λᵢ εᵢ = 0`, so `σ_λ = 0` and no `I_λ` with
/// `I_λ ∘ σ_λ = id` exists on `V ≠ 0`.
pub fn triviality_certificate(data: &InsCoalgebraData) -> Result<TrivialityCertificate> {
    let (d, m) = (data.dim, data.m());
    if d == 0 {
        return Err(Error::NotApplicable("V = 0 is trivially a coalgebra".into()));
    }
    if d > m {
        return Err(Error::NotApplicable(format!("dimension {d} exceeds m = {m}")));
    }
    // Eᵀ has the functionals εᵢ as columns; a kernel vector is a vanishing combination.
    let et = LinearMap::from_columns(data.field, d, &data.eps)?;
    let lambda = et
        .kernel()
        .into_iter()
        .next()
        .ok_or_else(|| Error::InvalidStructure("m+1 functionals on a space of dimension ≤ m must be dependent".into()))?;
    let sigma = sigma_lambda(data, &lambda)?;
    let cert = TrivialityCertificate {
        lambda,
        sigma,
        conclusion: true,
    };
    if !cert.replay(data)? {
        return Err(Error::InvalidStructure("certificate failed its own replay".into()));
    }
    Ok(cert)
}

impl TrivialityCertificate {
    /// Re-derives every claim from `data`: `λ ≠ 0`, `Σ λᵢεᵢ = 0`, `σ_λ = 0`.
    pub fn replay(&self, data: &InsCoalgebraData) -> Result<bool> {
        let functional = data.combined_functional(&self.lambda)?;
        let sigma = sigma_lambda(data, &self.lambda)?;
        Ok(!is_zero_vector(&self.lambda)
            && is_zero_vector(&functional)
            && sigma.is_zero()
            && self.sigma == sigma
            && data.dim > 0)
    }

    pub fn to_json(&self) -> Value {
        serde_json::json!({
            "lambda": vector_to_json(&self.lambda),
            "sigma_lambda": self.sigma,
            "conclusion": "no I_lambda satisfies I_lambda ∘ sigma_lambda = id on V ≠ 0; the data cannot extend to an Ins_m-coalgebra",
            "replay": "check lambda ≠ 0, sum_i lambda_i eps_i = 0 entrywise, and ((sum_i lambda_i eps_i) ⊗ id) ∘ delta = 0",
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::basis_vector;

    fn f2() -> FieldSpec {
        FieldSpec::prime(2).unwrap()
    }

    fn line(field: FieldSpec, c: i64, eps: &[i64]) -> InsCoalgebraData {
        let delta = LinearMap::from_i64(field, 1, &[&[c]]).unwrap();
        let eps = eps.iter().map(|&e| vec![field.from_i64(e)]).collect();
        InsCoalgebraData::new(field, 1, delta, eps, None).unwrap()
    }

    #[test]
    fn certificate_examples() {
        let c = triviality_certificate(&line(f2(), 1, &[1, 1])).unwrap();
        assert_eq!(c.lambda, vec![f2().one(), f2().one()]);
        assert!(c.sigma.is_zero());
        let c = triviality_certificate(&line(f2(), 1, &[1, 0])).unwrap();
        assert_eq!(c.lambda, vec![f2().zero(), f2().one()]);
        assert!(triviality_certificate(&line(f2(), 1, &[1])).is_err());
    }

    #[test]
    fn sigma_on_a_line_is_scalar() {
        let q = FieldSpec::Rationals;
        let data = line(q, 3, &[2, 5]);
        let s = sigma_lambda(&data, &[q.from_i64(1), q.from_i64(1)]).unwrap();
        assert_eq!(s.get(0, 0), &q.from_i64(21));
    }

    #[test]
    fn grouplike_subcoalgebras() {
        let q = FieldSpec::Rationals;
        let mut delta = LinearMap::zero(q, 4, 2);
        delta.set(0, 0, q.one());
        delta.set(3, 1, q.one());
        let e1 = basis_vector(q, 2, 0);
        assert_eq!(subcoalgebra_generated(&delta, &e1).unwrap().dim(), 1);
        let both = vec![q.one(), q.one()];
        assert_eq!(subcoalgebra_generated(&delta, &both).unwrap().dim(), 2);
        let zero = LinearMap::zero(q, 4, 2);
        assert_eq!(subcoalgebra_generated(&zero, &both).unwrap().dim(), 1);
    }

    #[test]
    fn json_round_trip() {
        let data = line(f2(), 1, &[1, 0]);
        assert_eq!(InsCoalgebraData::from_json(data.to_json()).unwrap(), data);
    }
}
