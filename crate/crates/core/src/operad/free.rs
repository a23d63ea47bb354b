//! The free algebra `P ⊲ X = ⊕ₙ P(n) ⊗_{𝔖ₙ} X^{⊗n}` of a truncated operad.

use crate::error::{Error, Result};
use crate::linalg::{checked_pow, coinvariants, perm_on_tensor_power, LinearMap, Permutation};

use super::truncated::TruncatedOperad;

/// Largest `dim P(n) · xⁿ` processed by [`free_algebra`].
pub const FREE_GUARD: usize = 4096;

#[derive(Clone, Debug)]
pub struct FreeAlgebraResult {
    /// `dim P(n) ⊗_{𝔖ₙ} X^{⊗n}` for `0 ≤ n ≤ N`.
    pub dims: Vec<usize>,
    pub total: usize,
    /// Quotient maps `P(n) ⊗ X^{⊗n} ↠ P(n) ⊗_{𝔖ₙ} X^{⊗n}`.
    pub quotients: Vec<LinearMap>,
    /// `X → P ⊲ X`, `v ↦ [1 ⊗ v]` in the arity-1 block.
    pub unit_map: LinearMap,
    pub unit_injective: bool,
}

pub fn free_algebra(p: &TruncatedOperad, x: usize) -> Result<FreeAlgebraResult> {
    let field = p.field();
    let mut dims = Vec::new();
    let mut quotients = Vec::new();
    for n in 0..=p.max_arity() {
        let xn = checked_pow(x, n).unwrap_or(usize::MAX);
        let ambient = p.dim(n).checked_mul(xn).filter(|&s| s <= FREE_GUARD).ok_or_else(|| Error::SizeGuard {
            what: format!("dim P({n}) · x^{n}"),
            needed: p.dim(n) as u128 * (x as u128).saturating_pow(n as u32),
            limit: FREE_GUARD as u128,
        })?;
        // p·s ⊗ v ~ p ⊗ s·v; for an involution s this is generated by the map R(s) ⊗ L(s)
        let gens = p
            .transpositions(n)
            .iter()
            .enumerate()
            .map(|(k, r)| r.tensor(&perm_on_tensor_power(field, &Permutation::adjacent(n, k), x)))
            .collect::<Result<Vec<_>>>()?;
        let co = coinvariants(field, ambient, &gens)?;
        dims.push(co.dim);
        quotients.push(co.quotient);
    }
    let total = dims.iter().sum();
    let offset = dims[0];
    let unit = LinearMap::column_vector(field, p.unit().to_vec())?;
    let into_arity1 = quotients[1].compose(&unit.tensor(&LinearMap::identity(field, x))?)?;
    let mut unit_map = LinearMap::zero(field, total, x);
    for r in 0..dims[1] {
        for c in 0..x {
            unit_map.set(offset + r, c, into_arity1.get(r, c).clone());
        }
    }
    let unit_injective = unit_map.is_injective();
    Ok(FreeAlgebraResult {
        dims,
        total,
        quotients,
        unit_map,
        unit_injective,
    })
}
