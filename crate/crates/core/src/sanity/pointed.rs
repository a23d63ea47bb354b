//! The terminal coalgebra `P(0)^∨`, pointed coalgebras, and the passage between
//! pointed `P`-coalgebras and coalgebras over the reduced part `P̄`.

use serde_json::json;

use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::linalg::{basis_vector, flat_index, multi_index, LinearMap, Subspace};
use crate::operad::{Algebra, LeftModule, TruncatedOperad};
use crate::report::CheckReport;

use super::coalgebra::{check_coalgebra, CoalgebraOverOperad};
use super::cofree::{cofree_arity1, CofreeData};
use super::morphisms::{after_equals, check_morphism, solve_morphisms, MorphismSolution};

/// Largest arity handled by [`point_sum`].
pub const POINT_SUM_MAX_ARITY: usize = 3;

/// Fills the inputs of `x ∈ P(n)` listed in `slots` (ascending, 0-based) with
/// the given elements of `P(0)`, highest slot first.
fn fill_constants(p: &TruncatedOperad, n: usize, x: &[Scalar], slots: &[usize], consts: &[Vec<Scalar>]) -> Result<Vec<Scalar>> {
    let mut cur = x.to_vec();
    let mut arity = n;
    for (&s, c) in slots.iter().zip(consts).rev() {
        cur = p.compose(arity, 0, s + 1, &cur, c)?;
        arity -= 1;
    }
    Ok(cur)
}

/// The structure `P(0)^∨` dual to the initial algebra `P(0)`.
///
/// `ρ(p)` is the transpose of `α(p) : P(0)^{⊗n} → P(0)`, `α(p)(w₁…wₙ) = p(w₁, …, wₙ)`.
/// When `P(0) = 0` this is the zero coalgebra.
pub fn terminal_coalgebra(p: &TruncatedOperad) -> Result<CoalgebraOverOperad> {
    let w = p.dim(0);
    if w == 0 {
        return Ok(CoalgebraOverOperad::zero(p));
    }
    let field = p.field();
    let blocks = (0..=p.max_arity())
        .map(|n| {
            let slots: Vec<usize> = (0..n).collect();
            (0..p.dim(n))
                .map(|b| {
                    let x = p.basis(n, b);
                    let mut alpha = LinearMap::zero(field, w, w.pow(n as u32));
                    for idx in 0..w.pow(n as u32) {
                        let consts: Vec<Vec<Scalar>> =
                            multi_index(idx, w, n).iter().map(|&k| basis_vector(field, w, k)).collect();
                        let val = fill_constants(p, n, &x, &slots, &consts)?;
                        for (r, v) in val.into_iter().enumerate() {
                            alpha.set(r, idx, v);
                        }
                    }
                    Ok(alpha.transpose())
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    CoalgebraOverOperad::from_blocks(p.clone(), w, blocks)
}

/// The unique morphism `V → P(0)^∨`, `t(v)(w) = ρ_V(w)(v)`.
pub fn terminal_morphism(v: &CoalgebraOverOperad) -> LinearMap {
    let p = v.operad();
    let mut t = LinearMap::zero(v.field(), p.dim(0), v.dim());
    for w in 0..p.dim(0) {
        let row = v.block(0, w);
        for c in 0..v.dim() {
            t.set(w, c, row.get(0, c).clone());
        }
    }
    t
}

/// For each test coalgebra, solves for morphisms into `P(0)^∨` and checks
/// there is exactly one, equal to [`terminal_morphism`].
pub fn terminality_check(p: &TruncatedOperad, tests: &[CoalgebraOverOperad]) -> Result<CheckReport> {
    let t = terminal_coalgebra(p)?;
    let mut report = check_coalgebra(&t)?;
    for (k, v) in tests.iter().enumerate() {
        if !check_coalgebra(v)?.passed() {
            return Err(Error::InvalidStructure(format!("test coalgebra {k} is not a coalgebra")));
        }
        let sol = solve_morphisms(v, &t, &[])?;
        let ok = sol.is_unique_morphism() && sol.particular.as_ref() == Some(&terminal_morphism(v));
        report.record(
            ok,
            || format!("unique morphism to P(0)^∨ from test {k}"),
            || json!({"test": k, "solution_space_dim": sol.nullity}),
        );
    }
    Ok(report)
}

/// A `P`-coalgebra with a coalgebra morphism from `P(0)^∨`.
#[derive(Clone, Debug)]
pub struct PointedCoalgebra {
    pub base: CoalgebraOverOperad,
    pub pointing: LinearMap,
}

impl PointedCoalgebra {
    pub fn new(base: CoalgebraOverOperad, pointing: LinearMap) -> Result<Self> {
        let terminal = terminal_coalgebra(base.operad())?;
        if !check_morphism(&pointing, &terminal, &base)?.passed() {
            return Err(Error::InvalidStructure("pointing is not a coalgebra morphism".into()));
        }
        Ok(PointedCoalgebra { base, pointing })
    }

    /// Validity of the base and of the pointing as a morphism.
    pub fn check(&self) -> Result<CheckReport> {
        let mut r = check_coalgebra(&self.base)?;
        r.merge(check_morphism(&self.pointing, &terminal_coalgebra(self.base.operad())?, &self.base)?);
        Ok(r)
    }
}

/// Whether `q` is the reduced part of `p`.
fn is_reduced_part(q: &TruncatedOperad, p: &TruncatedOperad) -> bool {
    *q == p.reduced()
}

/// `V̄ ⊕ P(0)^∨` for a `P̄`-coalgebra `V̄`, pointed by the inclusion of `P(0)^∨`.
///
/// On `P(0)^∨` the terminal structure. On `V̄`, `ρ(p)(v̄)` sums over the sets
/// `S` of `q` inputs with `p = n − q ≥ 1`, and over basis tensors `w` of
/// `P(0)^{⊗q}`: `ρ̄(p ∘_S w)(v̄)` in the positions outside `S`, tensored with
/// the dual basis `w^∨` in the positions of `S`.
pub fn point_sum(vbar: &CoalgebraOverOperad, p: &TruncatedOperad) -> Result<PointedCoalgebra> {
    if !is_reduced_part(vbar.operad(), p) {
        return Err(Error::InvalidStructure("V̄ must be a coalgebra over the reduced part of P".into()));
    }
    if p.max_arity() > POINT_SUM_MAX_ARITY {
        return Err(Error::SizeGuard {
            what: "arity for the pointed sum".into(),
            needed: p.max_arity() as u128,
            limit: POINT_SUM_MAX_ARITY as u128,
        });
    }
    let field = p.field();
    let (dv, w) = (vbar.dim(), p.dim(0));
    let d = dv + w;
    let terminal = terminal_coalgebra(p)?;
    let mut blocks = Vec::new();
    for n in 0..=p.max_arity() {
        let size = d.pow(n as u32);
        let mut arity_blocks = Vec::new();
        for b in 0..p.dim(n) {
            let x = p.basis(n, b);
            let mut m = LinearMap::zero(field, size, d);
            for subset in 0u32..(1 << n) {
                let slots: Vec<usize> = (0..n).filter(|k| subset >> k & 1 == 1).collect();
                let rest: Vec<usize> = (0..n).filter(|k| subset >> k & 1 == 0).collect();
                if rest.is_empty() || dv == 0 {
                    continue;
                }
                for widx in 0..w.pow(slots.len() as u32) {
                    let wdigits = multi_index(widx, w, slots.len());
                    let consts: Vec<Vec<Scalar>> = wdigits.iter().map(|&k| basis_vector(field, w, k)).collect();
                    let y = fill_constants(p, n, &x, &slots, &consts)?;
                    let rho = vbar.rho(rest.len(), &y)?;
                    for c in 0..dv {
                        for r in 0..rho.cod() {
                            let e = rho.get(r, c);
                            if e.is_zero() {
                                continue;
                            }
                            let mut digits = vec![0; n];
                            for (&pos, &dig) in rest.iter().zip(&multi_index(r, dv, rest.len())) {
                                digits[pos] = dig;
                            }
                            for (&pos, &dig) in slots.iter().zip(&wdigits) {
                                digits[pos] = dv + dig;
                            }
                            let row = flat_index(&digits, d);
                            let acc = m.get(row, c) + e;
                            m.set(row, c, acc);
                        }
                    }
                }
            }
            let tb = terminal.block(n, b);
            for c in 0..w {
                for r in 0..tb.cod() {
                    let e = tb.get(r, c);
                    if e.is_zero() {
                        continue;
                    }
                    let digits: Vec<usize> = multi_index(r, w, n).iter().map(|&k| dv + k).collect();
                    m.set(flat_index(&digits, d), dv + c, e.clone());
                }
            }
            arity_blocks.push(m);
        }
        blocks.push(arity_blocks);
    }
    let base = CoalgebraOverOperad::from_blocks(p.clone(), d, blocks)?;
    let pointing = LinearMap::identity(field, d).column_block(dv, w);
    Ok(PointedCoalgebra { base, pointing })
}

/// The cokernel `V̄ = V / im(pointing)` with `ρ̄(p) = q^{⊗n} ∘ ρ(p) ∘ s`
/// for `n ≥ 1`, as a coalgebra over `P̄`.
pub fn cokernel_reduction(vp: &PointedCoalgebra) -> Result<CoalgebraOverOperad> {
    if !vp.pointing.is_injective() {
        return Err(Error::InvalidStructure("pointing is not injective".into()));
    }
    let (q, s) = cokernel_maps(vp);
    let p = vp.base.operad();
    let reduced = p.reduced();
    let dbar = q.cod();
    let blocks = (0..=p.max_arity())
        .map(|n| {
            if n == 0 {
                return Ok(Vec::new());
            }
            let qn = q.tensor_power(n)?;
            (0..p.dim(n))
                .map(|b| qn.compose(&vp.base.block(n, b))?.compose(&s))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    CoalgebraOverOperad::from_blocks(reduced, dbar, blocks)
}

/// Quotient map and section for the cokernel of the pointing.
fn cokernel_maps(vp: &PointedCoalgebra) -> (LinearMap, LinearMap) {
    let field = vp.base.field();
    let image = Subspace::span(field, vp.base.dim(), vp.pointing.columns());
    (image.quotient_map(), image.quotient_section())
}

/// The isomorphism `point_sum(cokernel(V)) → V`, `(v̄, ω) ↦ ℓ(v̄) + ι(ω)`,
/// where `ℓ` lifts `V̄` into the kernel of the terminal morphism.
pub fn round_trip_iso(vp: &PointedCoalgebra) -> Result<(PointedCoalgebra, LinearMap, CheckReport)> {
    let vbar = cokernel_reduction(vp)?;
    let rebuilt = point_sum(&vbar, vp.base.operad())?;
    let (_, s) = cokernel_maps(vp);
    let t = terminal_morphism(&vp.base);
    let field = vp.base.field();
    let d = vp.base.dim();
    let proj = LinearMap::identity(field, d).sub(&vp.pointing.compose(&t)?)?;
    let lift = proj.compose(&s)?;
    let mut phi = LinearMap::zero(field, d, d);
    for r in 0..d {
        for c in 0..lift.dom() {
            phi.set(r, c, lift.get(r, c).clone());
        }
        for c in 0..vp.pointing.dom() {
            phi.set(r, lift.dom() + c, vp.pointing.get(r, c).clone());
        }
    }
    let mut report = check_morphism(&phi, &rebuilt.base, &vp.base)?;
    report.record(phi.is_invertible(), || "Φ invertible".into(), || json!({}));
    report.record(
        phi.compose(&rebuilt.pointing)? == vp.pointing,
        || "Φ ∘ ι = pointing".into(),
        || json!({}),
    );
    Ok((rebuilt, phi, report))
}

/// The algebra `P(1)` and module `P(0)` of an operad concentrated in arities 0 and 1.
pub fn arity01_parts(p: &TruncatedOperad) -> Result<(Algebra, Option<LeftModule>)> {
    if p.max_arity() != 1 {
        return Err(Error::NotApplicable("operad must be truncated at N = 1 (arities 0 and 1)".into()));
    }
    let mult = p.pcomp(1, 1, 1).expect("∘₁ on P(1)").clone();
    let a = Algebra::new(p.field(), p.dim(1), mult, p.unit().to_vec())?;
    let module = if p.dim(0) > 0 {
        Some(LeftModule::new(&a, p.dim(0), p.pcomp(1, 0, 1).expect("∘₁ on P(0)").clone())?)
    } else {
        None
    };
    Ok((a, module))
}

#[derive(Clone, Debug)]
pub struct ComposedCounit {
    pub checks: CheckReport,
    pub cofree: CofreeData,
    pub total: PointedCoalgebra,
    /// `G_P X ↠ G_P̄ X`, the cokernel of the pointing.
    pub first: LinearMap,
    /// `G_P̄ X ↠ X`.
    pub second: LinearMap,
    pub composite: LinearMap,
    pub lifts: Vec<MorphismSolution>,
}

/// Builds `G_P X = point_sum(G_P̄ X)` and checks `G_P X ↠ G_P̄ X ↠ X`:
/// both maps epi, the composite epi, and unique lifts through the composite
/// for a family of `P`-coalgebras.
pub fn composed_counit_check(p: &TruncatedOperad, x: usize) -> Result<ComposedCounit> {
    let (a, _) = arity01_parts(p)?;
    let cofree = cofree_arity1(&a, x)?;
    let reduced_carrier = CoalgebraOverOperad::new(p.reduced(), cofree.carrier.dim(), cofree.carrier.maps().to_vec())?;
    let total = point_sum(&reduced_carrier, p)?;
    let (first, _) = cokernel_maps(&total);
    let second = cofree.counit.clone();
    let composite = second.compose(&first)?;
    let mut checks = total.check()?;
    checks.record(first.is_surjective(), || "G_P X → G_P̄ X epi".into(), || json!({}));
    checks.record(second.is_surjective(), || "G_P̄ X → X epi".into(), || json!({}));
    checks.record(composite.is_surjective(), || "G_P X → X epi".into(), || json!({}));

    let mut tests: Vec<(CoalgebraOverOperad, LinearMap)> = vec![(total.base.clone(), composite.clone())];
    tests.push((CoalgebraOverOperad::zero(p), LinearMap::zero(p.field(), x, 0)));
    let t = terminal_coalgebra(p)?;
    let f = test_map(p.field(), x, t.dim());
    tests.push((t, f));
    for k in 1..=2 {
        let small = cofree_arity1(&a, k)?;
        let red = CoalgebraOverOperad::new(p.reduced(), small.carrier.dim(), small.carrier.maps().to_vec())?;
        let v = point_sum(&red, p)?.base;
        let f = test_map(p.field(), x, v.dim());
        tests.push((v, f));
    }
    let mut lifts = Vec::new();
    for (k, (v, f)) in tests.iter().enumerate() {
        let sol = solve_morphisms(v, &total.base, &[after_equals(&composite, f)])?;
        checks.record(
            sol.is_unique_morphism(),
            || format!("unique lift through G_P X → X for test {k}"),
            || json!({"test": k, "solution_space_dim": sol.nullity}),
        );
        lifts.push(sol);
    }
    Ok(ComposedCounit {
        checks,
        cofree,
        total,
        first,
        second,
        composite,
        lifts,
    })
}

/// A fixed, full-rank-ish map `𝕂^cols → 𝕂^rows` with entries `(r + 2c + 1) mod 3`.
fn test_map(field: crate::field::FieldSpec, rows: usize, cols: usize) -> LinearMap {
    let mut m = LinearMap::zero(field, rows, cols);
    for r in 0..rows {
        for c in 0..cols {
            m.set(r, c, field.from_i64(((r + 2 * c + 1) % 3) as i64));
        }
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;
    use crate::operad::{build_arity01, build_uassoc};
    use crate::sanity::uassoc_coalgebra;

    #[test]
    fn uassoc_terminal_is_diagonal_line() {
        let q = FieldSpec::Rationals;
        let p = build_uassoc(q, 3).unwrap();
        let t = terminal_coalgebra(&p).unwrap();
        assert_eq!(t.dim(), 1);
        assert!(check_coalgebra(&t).unwrap().passed());
        assert!(t.block(2, 0).get(0, 0).is_one());
        assert!(t.block(0, 0).get(0, 0).is_one());
    }

    #[test]
    fn point_sum_of_zero_coproduct_line() {
        let q = FieldSpec::Rationals;
        let p = build_uassoc(q, 3).unwrap();
        let zero = LinearMap::zero(q, 1, 1);
        let vbar = uassoc_coalgebra(&p.reduced(), &zero, None).unwrap();
        let vp = point_sum(&vbar, &p).unwrap();
        let r = vp.check().unwrap();
        assert!(r.passed(), "{:?}", r.failures);
        // δ(v) = v⊗1 + 1⊗v on the basis (v, 1)
        let delta = vp.base.block(2, 0);
        assert_eq!(delta.column(0), vec![q.zero(), q.one(), q.one(), q.zero()]);
        assert_eq!(delta.column(1), vec![q.zero(), q.zero(), q.zero(), q.one()]);
        let back = cokernel_reduction(&vp).unwrap();
        assert_eq!(back, vbar);
        let (_, _, iso) = round_trip_iso(&vp).unwrap();
        assert!(iso.passed(), "{:?}", iso.failures);
    }

    #[test]
    fn terminal_with_identity_pointing_reduces_to_zero() {
        let p = build_uassoc(FieldSpec::prime(2).unwrap(), 3).unwrap();
        let t = terminal_coalgebra(&p).unwrap();
        let vp = PointedCoalgebra::new(t.clone(), LinearMap::identity(p.field(), 1)).unwrap();
        assert_eq!(cokernel_reduction(&vp).unwrap().dim(), 0);
        let tests = [t.clone(), t.direct_sum(&t).unwrap(), CoalgebraOverOperad::zero(&p)];
        assert!(terminality_check(&p, &tests).unwrap().passed());
    }

    #[test]
    fn no_constants_means_zero_terminal() {
        let q = FieldSpec::Rationals;
        let p = build_arity01(&Algebra::dual_numbers(q), None).unwrap();
        assert_eq!(terminal_coalgebra(&p).unwrap().dim(), 0);
        let r = composed_counit_check(&p, 2).unwrap();
        assert!(r.checks.passed(), "{:?}", r.checks.failures);
        assert!(r.first.is_identity());
    }

    #[test]
    fn arity01_point_sum_and_composed_counit() {
        let q = FieldSpec::Rationals;
        let k = Algebra::ground(q);
        let w = LeftModule::via_augmentation(&k, &LinearMap::identity(q, 1)).unwrap();
        let p = build_arity01(&k, Some(&w)).unwrap();
        let r = composed_counit_check(&p, 2).unwrap();
        assert!(r.checks.passed(), "{:?}", r.checks.failures);
        assert_eq!(r.total.base.dim(), 3);
        let d = Algebra::dual_numbers(q);
        let aug = LinearMap::from_i64(q, 2, &[&[1, 0]]).unwrap();
        let w = LeftModule::via_augmentation(&d, &aug).unwrap();
        let p = build_arity01(&d, Some(&w)).unwrap();
        let r = composed_counit_check(&p, 1).unwrap();
        assert!(r.checks.passed(), "{:?}", r.checks.failures);
        assert_eq!(r.total.base.dim(), 3);
    }
}
