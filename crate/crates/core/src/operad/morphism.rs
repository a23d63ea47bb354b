//! Morphisms of truncated operads.

use serde_json::json;

use crate::error::{Error, Result};
use crate::linalg::LinearMap;
use crate::report::CheckReport;

use super::builders::{coend_operad, end_operad};
use super::truncated::{composition_keys, TruncatedOperad};
use crate::field::FieldSpec;

/// Arity-wise linear maps `φ_n : P(n) → P′(n)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OperadMorphism {
    pub source: TruncatedOperad,
    pub target: TruncatedOperad,
    pub components: Vec<LinearMap>,
}

impl OperadMorphism {
    /// Checks shapes only; use [`operad_morphism_check`] for the axioms.
    pub fn new(source: TruncatedOperad, target: TruncatedOperad, components: Vec<LinearMap>) -> Result<Self> {
        if source.field() != target.field() {
            return Err(Error::FieldMismatch(source.field(), target.field()));
        }
        if source.max_arity() != target.max_arity() || components.len() != source.max_arity() + 1 {
            return Err(Error::dims("morphism needs one component per arity of a common truncation"));
        }
        for (n, c) in components.iter().enumerate() {
            if (c.cod(), c.dom()) != (target.dim(n), source.dim(n)) {
                return Err(Error::dims(format!(
                    "component {n} is {}x{}, expected {}x{}",
                    c.cod(),
                    c.dom(),
                    target.dim(n),
                    source.dim(n)
                )));
            }
        }
        Ok(OperadMorphism {
            source,
            target,
            components,
        })
    }

    pub fn identity(p: &TruncatedOperad) -> Self {
        let components = p.dims().iter().map(|&d| LinearMap::identity(p.field(), d)).collect();
        OperadMorphism {
            source: p.clone(),
            target: p.clone(),
            components,
        }
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &OperadMorphism) -> Result<OperadMorphism> {
        if self.target != other.source {
            return Err(Error::dims("morphisms are not composable"));
        }
        let components = other
            .components
            .iter()
            .zip(&self.components)
            .map(|(g, f)| g.compose(f))
            .collect::<Result<_>>()?;
        OperadMorphism::new(self.source.clone(), other.target.clone(), components)
    }

    pub fn is_identity(&self) -> bool {
        self.source == self.target && self.components.iter().all(LinearMap::is_identity)
    }
}

/// Checks unit, equivariance under every adjacent transposition, and every
/// defined partial composition, basis element by basis element.
pub fn operad_morphism_check(phi: &OperadMorphism) -> Result<CheckReport> {
    let (p, q) = (&phi.source, &phi.target);
    let mut report = CheckReport::new();
    let image_unit = phi.components[1].apply(p.unit())?;
    report.record(image_unit == q.unit(), || "φ(1) = 1".into(), || json!({}));
    for n in 2..=p.max_arity() {
        for (k, (s, t)) in p.transpositions(n).iter().zip(q.transpositions(n)).enumerate() {
            let lhs = phi.components[n].compose(s)?;
            let rhs = t.compose(&phi.components[n])?;
            report.record(
                lhs == rhs,
                || format!("φ(p·s{k}) = φ(p)·s{k} (n={n})"),
                || json!({"arity": n, "transposition": k, "basis": first_diff(&lhs, &rhs)}),
            );
        }
    }
    for (m, n, i) in composition_keys(p.max_arity()) {
        let out = m + n - 1;
        for a in 0..p.dim(m) {
            let x = p.basis(m, a);
            let fx = phi.components[m].apply(&x)?;
            for b in 0..p.dim(n) {
                let y = p.basis(n, b);
                let lhs = phi.components[out].apply(&p.compose(m, n, i, &x, &y)?)?;
                let rhs = q.compose(m, n, i, &fx, &phi.components[n].apply(&y)?)?;
                report.record(
                    lhs == rhs,
                    || format!("φ(x∘_{i}y) = φ(x)∘_{i}φ(y)"),
                    || json!({"arities": [m, n], "slot": i, "basis": [a, b]}),
                );
            }
        }
    }
    Ok(report)
}

fn first_diff(a: &LinearMap, b: &LinearMap) -> Option<usize> {
    (0..a.dom()).find(|&c| a.column(c) != b.column(c))
}

fn transpose_basis(field: FieldSpec, d: usize, max_arity: usize, to_coend: bool) -> Vec<LinearMap> {
    (0..=max_arity)
        .map(|n| {
            let dn = d.pow(n as u32);
            let size = dn * d;
            let mut m = LinearMap::zero(field, size, size);
            for r in 0..d {
                for c in 0..dn {
                    // End basis E_{r,c} (r·dⁿ + c)  ↔  Coend basis E_{c,r} (c·d + r)
                    let (e, co) = (r * dn + c, c * d + r);
                    if to_coend {
                        m.set(co, e, field.one());
                    } else {
                        m.set(e, co, field.one());
                    }
                }
            }
            m
        })
        .collect()
}

/// `End(W) → Coend(W^∨)`, sending `f : W^{⊗n} → W` to its transpose
/// `f^∨ : W^∨ → (W^∨)^{⊗n}` in dual bases.
pub fn dual_iso_end_coend(d: usize, max_arity: usize, field: FieldSpec) -> Result<OperadMorphism> {
    let source = end_operad(d, max_arity, field)?;
    let target = coend_operad(d, max_arity, field)?;
    let components = transpose_basis(field, d, max_arity, true);
    OperadMorphism::new(source, target, components)
}

/// The inverse transpose `Coend(W^∨) → End(W)`.
pub fn dual_iso_coend_end(d: usize, max_arity: usize, field: FieldSpec) -> Result<OperadMorphism> {
    let source = coend_operad(d, max_arity, field)?;
    let target = end_operad(d, max_arity, field)?;
    let components = transpose_basis(field, d, max_arity, false);
    OperadMorphism::new(source, target, components)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dual_iso_is_a_morphism_and_inverts() {
        let q = FieldSpec::Rationals;
        let phi = dual_iso_end_coend(2, 2, q).unwrap();
        assert!(operad_morphism_check(&phi).unwrap().passed());
        let psi = dual_iso_coend_end(2, 2, q).unwrap();
        assert!(operad_morphism_check(&psi).unwrap().passed());
        assert!(phi.then(&psi).unwrap().is_identity());
        assert!(psi.then(&phi).unwrap().is_identity());
        let line = dual_iso_end_coend(1, 3, q).unwrap();
        assert!(line.components.iter().all(LinearMap::is_identity));
    }

    #[test]
    fn scaled_identity_is_not_a_morphism() {
        let q = FieldSpec::Rationals;
        let p = end_operad(1, 2, q).unwrap();
        let two = q.from_i64(2);
        let comps = p.dims().iter().map(|&d| LinearMap::identity(q, d).scale(&two)).collect();
        let phi = OperadMorphism::new(p.clone(), p, comps).unwrap();
        let r = operad_morphism_check(&phi).unwrap();
        assert!(!r.passed());
    }
}
