//! Coalgebra morphisms: direct checks and exact solution of the linear part
//! of the morphism equations.

use serde_json::json;

use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::linalg::{solve_affine, LinearMap};
use crate::report::CheckReport;

use super::coalgebra::CoalgebraOverOperad;

/// Checks `ρ_W(p) ∘ g = g^{⊗n} ∘ ρ_V(p)` for every arity and basis element.
pub fn check_morphism(g: &LinearMap, v: &CoalgebraOverOperad, w: &CoalgebraOverOperad) -> Result<CheckReport> {
    if v.operad() != w.operad() {
        return Err(Error::dims("coalgebras over different operads"));
    }
    if (g.cod(), g.dom()) != (w.dim(), v.dim()) {
        return Err(Error::dims(format!("g must be {}x{}", w.dim(), v.dim())));
    }
    let p = v.operad();
    let mut report = CheckReport::new();
    for n in 0..=p.max_arity() {
        let gn = g.tensor_power(n)?;
        for b in 0..p.dim(n) {
            let lhs = w.block(n, b).compose(g)?;
            let rhs = gn.compose(&v.block(n, b))?;
            report.record(
                lhs == rhs,
                || format!("ρ_W(p)∘g = g^⊗{n}∘ρ_V(p)"),
                || json!({"arity": n, "basis": b}),
            );
        }
    }
    Ok(report)
}

/// An affine condition `F(g) = 0` on the unknown map, given as a closure
/// that is affine in `g`.
pub type AffineConstraint<'a> = Box<dyn Fn(&LinearMap) -> Result<LinearMap> + 'a>;

#[derive(Clone, Debug)]
pub struct MorphismSolution {
    /// Dimension of the solution space of the linear constraints (`None` if inconsistent).
    pub nullity: Option<usize>,
    /// A particular solution, when one exists.
    pub particular: Option<LinearMap>,
    /// Full morphism check of the particular solution, including arities `≥ 2`.
    pub verified: Option<CheckReport>,
}

impl MorphismSolution {
    /// Exactly one solution, and it is a morphism.
    pub fn is_unique_morphism(&self) -> bool {
        self.nullity == Some(0) && self.verified.as_ref().is_some_and(CheckReport::passed)
    }
}

/// Solves for `g : V → W` under the morphism equations of arities 0 and 1
/// (which are affine in `g`) plus any `extra` constraints. Higher arities are
/// quadratic or worse, so they are verified on the particular solution.
pub fn solve_morphisms(
    v: &CoalgebraOverOperad,
    w: &CoalgebraOverOperad,
    extra: &[AffineConstraint<'_>],
) -> Result<MorphismSolution> {
    if v.operad() != w.operad() {
        return Err(Error::dims("coalgebras over different operads"));
    }
    let field = v.field();
    let (dv, dw) = (v.dim(), w.dim());
    let p = v.operad();
    let mut constraints: Vec<AffineConstraint<'_>> = Vec::new();
    for n in 0..=p.max_arity().min(1) {
        for b in 0..p.dim(n) {
            let (rw, rv) = (w.block(n, b), v.block(n, b));
            constraints.push(Box::new(move |g: &LinearMap| {
                let lhs = rw.compose(g)?;
                let rhs = if n == 0 { rv.clone() } else { g.compose(&rv)? };
                lhs.sub(&rhs)
            }));
        }
    }
    let all: Vec<&AffineConstraint<'_>> = constraints.iter().chain(extra).collect();
    let unknowns = dw * dv;
    let residual = |g: &LinearMap| -> Result<Vec<Scalar>> {
        let mut out = Vec::new();
        for c in &all {
            out.extend_from_slice(c(g)?.entries());
        }
        Ok(out)
    };
    let zero = LinearMap::zero(field, dw, dv);
    let offset = residual(&zero)?;
    let mut cols = Vec::with_capacity(unknowns);
    for k in 0..unknowns {
        let mut e = zero.clone();
        e.set(k / dv.max(1), k % dv.max(1), field.one());
        let r = residual(&e)?;
        cols.push(r.iter().zip(&offset).map(|(a, b)| a - b).collect::<Vec<_>>());
    }
    let a = LinearMap::from_columns(field, offset.len(), &cols)?;
    let rhs: Vec<Scalar> = offset.iter().map(|x| -x.clone()).collect();
    let Some((x, kernel)) = solve_affine(&a, &rhs) else {
        return Ok(MorphismSolution {
            nullity: None,
            particular: None,
            verified: None,
        });
    };
    let g = LinearMap::new(field, dw, dv, x)?;
    let verified = check_morphism(&g, v, w)?;
    Ok(MorphismSolution {
        nullity: Some(kernel.len()),
        particular: Some(g),
        verified: Some(verified),
    })
}

/// The constraint `h ∘ g = f`.
pub fn after_equals<'a>(h: &'a LinearMap, f: &'a LinearMap) -> AffineConstraint<'a> {
    Box::new(move |g: &LinearMap| h.compose(g)?.sub(f))
}
