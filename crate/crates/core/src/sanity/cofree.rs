//! Cofree coalgebras over operads concentrated in arity 1.

use rand::Rng;
use rayon::prelude::*;
use serde_json::json;

use crate::error::{Error, Result};
use crate::linalg::{basis_vector, random_invertible, random_map, LinearMap};
use crate::operad::{build_from_algebra, Algebra, AlgebraMorphism, TruncatedOperad};
use crate::report::CheckReport;

use super::coalgebra::{check_coalgebra, CoalgebraOverOperad};
use super::morphisms::{after_equals, solve_morphisms, MorphismSolution};

/// `Hom(A, X)` with its `A`-coalgebra structure and counit.
#[derive(Clone, Debug)]
pub struct CofreeData {
    pub algebra: Algebra,
    pub x: usize,
    /// Carrier `A^∨ ⊗ X`; basis `e_j^* ⊗ e_k` at index `j·x + k`.
    pub carrier: CoalgebraOverOperad,
    /// Evaluation at `1 ∈ A`.
    pub counit: LinearMap,
    pub section: Option<LinearMap>,
}

/// `φ ↦ φ ∘ L_a` on `Hom(A, X)`, in the basis `e_j^* ⊗ e_k`.
fn precompose_left_mult(a: &Algebra, x: usize, elem: &[crate::field::Scalar]) -> Result<LinearMap> {
    let l = a.left_mult(elem)?;
    let dim = a.dim() * x;
    let field = a.field();
    let mut m = LinearMap::zero(field, dim, dim);
    // (φ∘L)(e_i) = Σ_j L[j][i] φ(e_j); for φ = e_j^*⊗e_k that is Σ_i L[j][i] e_i^*⊗e_k
    for j in 0..a.dim() {
        for k in 0..x {
            for i in 0..a.dim() {
                let c = l.get(j, i);
                if !c.is_zero() {
                    m.set(i * x + k, j * x + k, c.clone());
                }
            }
        }
    }
    Ok(m)
}

/// The cofree `A`-coalgebra on `X`: `ρ(a)φ = φ ∘ L_a`, counit `φ ↦ φ(1)`.
pub fn cofree_arity1(a: &Algebra, x: usize) -> Result<CofreeData> {
    let operad = build_from_algebra(a)?;
    cofree_over(&operad, a, x, |e| precompose_left_mult(a, x, e))
}

fn cofree_over(
    operad: &TruncatedOperad,
    a: &Algebra,
    x: usize,
    action: impl Fn(&[crate::field::Scalar]) -> Result<LinearMap>,
) -> Result<CofreeData> {
    let field = a.field();
    let action = (0..a.dim())
        .map(|p| action(&basis_vector(field, a.dim(), p)))
        .collect::<Result<Vec<_>>>()?;
    let carrier = CoalgebraOverOperad::from_blocks(operad.clone(), a.dim() * x, vec![Vec::new(), action])?;
    let counit = evaluation(a, x, a.unit())?;
    let section = counit.right_inverse();
    Ok(CofreeData {
        algebra: a.clone(),
        x,
        carrier,
        counit,
        section,
    })
}

/// `φ ↦ φ(u)` as an `x × (a·x)` matrix.
fn evaluation(a: &Algebra, x: usize, u: &[crate::field::Scalar]) -> Result<LinearMap> {
    let mut m = LinearMap::zero(a.field(), x, a.dim() * x);
    for (j, c) in u.iter().enumerate() {
        for k in 0..x {
            m.set(k, j * x + k, c.clone());
        }
    }
    Ok(m)
}

impl CofreeData {
    /// The lift `g(v)(a) = f(ρ_V(a) v)` of `f : V → X`.
    pub fn lift(&self, v: &CoalgebraOverOperad, f: &LinearMap) -> Result<LinearMap> {
        let a = &self.algebra;
        let field = a.field();
        let mut g = LinearMap::zero(field, a.dim() * self.x, v.dim());
        for j in 0..a.dim() {
            let fj = f.compose(&v.block(1, j))?;
            for k in 0..self.x {
                for c in 0..v.dim() {
                    g.set(j * self.x + k, c, fj.get(k, c).clone());
                }
            }
        }
        Ok(g)
    }
}

#[derive(Clone, Debug)]
pub struct SplitCheck {
    pub surjective: bool,
    pub section: Option<LinearMap>,
    /// `counit ∘ section = id`, replayed.
    pub replayed: bool,
}

pub fn counit_split_check(counit: &LinearMap) -> Result<SplitCheck> {
    let surjective = counit.is_surjective();
    let section = if surjective { counit.right_inverse() } else { None };
    let replayed = match &section {
        Some(s) => counit.compose(s)?.is_identity(),
        None => false,
    };
    Ok(SplitCheck {
        surjective,
        section,
        replayed,
    })
}

/// Outcome of one couniversality test.
#[derive(Clone, Debug)]
pub struct LiftResult {
    pub solution: MorphismSolution,
    /// The explicit lift agrees with the solved one.
    pub matches_formula: bool,
}

/// For each `(V, f)`, solves for coalgebra morphisms `g : V → carrier` with
/// `counit ∘ g = f` and checks there is exactly one.
pub fn verify_couniversal(cf: &CofreeData, tests: &[(CoalgebraOverOperad, LinearMap)]) -> Result<(CheckReport, Vec<LiftResult>)> {
    for (t, (v, _)) in tests.iter().enumerate() {
        if !check_coalgebra(v)?.passed() {
            return Err(Error::InvalidStructure(format!("test coalgebra {t} is not a coalgebra")));
        }
    }
    let results = tests
        .par_iter()
        .map(|(v, f)| {
            let solution = solve_morphisms(v, &cf.carrier, &[after_equals(&cf.counit, f)])?;
            let matches_formula = match &solution.particular {
                Some(g) => *g == cf.lift(v, f)?,
                None => false,
            };
            Ok(LiftResult {
                solution,
                matches_formula,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let mut report = CheckReport::new();
    for (t, r) in results.iter().enumerate() {
        report.record(
            r.solution.is_unique_morphism() && r.matches_formula,
            || format!("unique lift for test {t}"),
            || json!({"test": t, "solution_space_dim": r.solution.nullity}),
        );
    }
    Ok((report, results))
}

/// Test pairs `(V, f : V → X)` for [`verify_couniversal`]: the carrier with
/// its counit and with a random map, the zero coalgebra, the cofree
/// coalgebras on `𝕂` and on `𝕂² ⊕ 𝕂`, and a conjugated copy of the carrier.
pub fn couniversal_test_family(cf: &CofreeData, rng: &mut impl Rng) -> Result<Vec<(CoalgebraOverOperad, LinearMap)>> {
    let field = cf.algebra.field();
    let x = cf.x;
    let carrier = &cf.carrier;
    let small = cofree_arity1(&cf.algebra, 1)?.carrier;
    let sum = cofree_arity1(&cf.algebra, 2)?.carrier.direct_sum(&small)?;
    let conj = carrier.conjugate(&random_invertible(field, carrier.dim(), rng))?;
    let mut out = vec![
        (carrier.clone(), cf.counit.clone()),
        (CoalgebraOverOperad::zero(carrier.operad()), LinearMap::zero(field, x, 0)),
    ];
    for v in [carrier.clone(), small, sum, conj] {
        let f = random_map(field, x, v.dim(), rng);
        out.push((v, f));
    }
    Ok(out)
}

#[derive(Clone, Debug)]
pub struct PropagationReport {
    pub checks: CheckReport,
    /// `Hom(A′, X) → Hom(A, X)`, `ψ ↦ ψ ∘ φ`.
    pub restriction: LinearMap,
    pub composite_epi: bool,
    pub second_epi: bool,
}

/// For `φ : A → A′`: the restriction map is a morphism of `A`-coalgebras,
/// `counit_A ∘ res = counit_{A′}`, and the composite being epi forces
/// `counit_A` to be epi.
pub fn propagation_check(phi: &AlgebraMorphism, x: usize) -> Result<PropagationReport> {
    let (a, a2) = (&phi.source, &phi.target);
    let field = a.field();
    let source = cofree_arity1(a, x)?;
    let target = cofree_arity1(a2, x)?;
    // ψ = e_j^*⊗e_k on A′ restricts to Σ_i φ[j][i] e_i^*⊗e_k on A
    let mut res = LinearMap::zero(field, a.dim() * x, a2.dim() * x);
    for j in 0..a2.dim() {
        for i in 0..a.dim() {
            let c = phi.map.get(j, i);
            if c.is_zero() {
                continue;
            }
            for k in 0..x {
                res.set(i * x + k, j * x + k, c.clone());
            }
        }
    }
    // Hom(A′, X) as an A-coalgebra through φ
    let actions = (0..a.dim())
        .map(|p| precompose_left_mult(a2, x, &phi.map.column(p)))
        .collect::<Result<Vec<_>>>()?;
    let pulled = CoalgebraOverOperad::from_blocks(source.carrier.operad().clone(), a2.dim() * x, vec![Vec::new(), actions])?;
    let mut checks = CheckReport::new();
    checks.merge(check_coalgebra(&pulled)?);
    checks.merge(super::morphisms::check_morphism(&res, &pulled, &source.carrier)?);
    let composite = source.counit.compose(&res)?;
    checks.record(composite == target.counit, || "counit_A ∘ res = counit_A′".into(), || json!({}));
    let composite_epi = composite.is_surjective();
    let second_epi = source.counit.is_surjective();
    checks.record(!composite_epi || second_epi, || "composite epi ⇒ counit_A epi".into(), || json!({}));
    Ok(PropagationReport {
        checks,
        restriction: res,
        composite_epi,
        second_epi,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;

    #[test]
    fn ground_field_is_identity() {
        let q = FieldSpec::Rationals;
        let cf = cofree_arity1(&Algebra::ground(q), 3).unwrap();
        assert!(cf.counit.is_identity());
        assert!(cf.section.as_ref().unwrap().is_identity());
        assert!(check_coalgebra(&cf.carrier).unwrap().passed());
    }

    #[test]
    fn dual_numbers_and_group_algebra() {
        for f in [FieldSpec::Rationals, FieldSpec::prime(2).unwrap()] {
            for a in [Algebra::dual_numbers(f), Algebra::group_algebra_s2(f)] {
                let cf = cofree_arity1(&a, 2).unwrap();
                assert_eq!(cf.carrier.dim(), 4);
                assert!(check_coalgebra(&cf.carrier).unwrap().passed());
                let split = counit_split_check(&cf.counit).unwrap();
                assert!(split.surjective && split.replayed);
                let f_map = cf.counit.clone();
                let (r, _) = verify_couniversal(&cf, &[(cf.carrier.clone(), f_map)]).unwrap();
                assert!(r.passed(), "{:?}", r.failures);
            }
        }
    }

    #[test]
    fn fake_counit_is_not_split() {
        let q = FieldSpec::Rationals;
        let fake = LinearMap::from_i64(q, 2, &[&[1, 0], &[2, 0]]).unwrap();
        let s = counit_split_check(&fake).unwrap();
        assert!(!s.surjective && s.section.is_none());
    }

    #[test]
    fn propagation_examples() {
        for f in [FieldSpec::Rationals, FieldSpec::prime(2).unwrap()] {
            for phi in [AlgebraMorphism::augmentation_s2(f), AlgebraMorphism::unit_inclusion_dual(f)] {
                let r = propagation_check(&phi, 2).unwrap();
                assert!(r.checks.passed(), "{:?}", r.checks.failures);
                assert!(r.composite_epi && r.second_epi);
            }
        }
    }
}
