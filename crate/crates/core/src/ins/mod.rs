//! The truncated Ins operads `Ins_m`: unital associative operations plus
//! constants `υ₀, …, υ_m` and unary operations `I_λ` subject to
//! `μ ∘ ((Σ λᵢ υᵢ) ⊗ id) ∘ I_λ = id`.
//!
//! Generator names in presentations and assignments are `mu`, `u0..um` and
//! `I0, I1, …` in the order of the listed `λ` vectors.

mod coalgebra;
mod model;
mod poly;
mod search;

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::linalg::is_zero_vector;
use crate::presentation::{Combo, Generator, Presentation, Relation, Tree, UASSOC_RELATIONS};

pub use coalgebra::{
    is_coassociative, sigma_lambda, subcoalgebra_generated, triviality_certificate, InsCoalgebraData,
    InsCoalgebraJson, InvJson, TrivialityCertificate,
};
pub use model::{build_field_model, InsAlgebraModel, MODEL_GUARD};
pub use poly::{is_irreducible, smallest_irreducible};
pub use search::{brute_force_search, SearchOutcome, SEARCH_BUDGET};

#[derive(Clone, Debug)]
pub struct InsPresentation {
    pub m: usize,
    pub lambdas: Vec<Vec<Scalar>>,
    pub presentation: Presentation,
}

pub(crate) fn generator_names(m: usize, lambdas: usize) -> (Vec<String>, Vec<String>) {
    ((0..=m).map(|i| format!("u{i}")).collect(), (0..lambdas).map(|j| format!("I{j}")).collect())
}

/// Every nonzero vector of `𝔽_p^n`, in lexicographic order of residues.
pub fn nonzero_vectors(field: FieldSpec, n: usize) -> Vec<Vec<Scalar>> {
    let elems = field.elements().expect("finite field");
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|prefix: Vec<Scalar>| {
                elems.iter().map(move |e| {
                    let mut v = prefix.clone();
                    v.push(e.clone());
                    v
                })
            })
            .collect();
    }
    out.retain(|v| !is_zero_vector(v));
    out
}

/// Generators `mu`, `u0..um`, one `I_j` per listed `λ`; relations: associativity,
/// both unit laws for `u0`, and `Σᵢ λᵢ (mu (uᵢ) (I_j x1)) = x1` for each `λ`.
pub fn build_ins_presentation(field: FieldSpec, m: usize, lambdas: &[Vec<Scalar>]) -> Result<InsPresentation> {
    let (units, invs) = generator_names(m, lambdas.len());
    let mut generators = vec![Generator {
        name: "mu".into(),
        arity: 2,
    }];
    generators.extend(units.iter().map(|u| Generator { name: u.clone(), arity: 0 }));
    generators.extend(invs.iter().map(|i| Generator { name: i.clone(), arity: 1 }));
    let mut relations = UASSOC_RELATIONS.iter().map(|r| Relation::parse(field, r)).collect::<Result<Vec<_>>>()?;
    for (lambda, inv) in lambdas.iter().zip(&invs) {
        if lambda.len() != m + 1 {
            return Err(Error::dims(format!("λ must have {} entries", m + 1)));
        }
        if is_zero_vector(lambda) {
            return Err(Error::InvalidStructure("λ must be nonzero".into()));
        }
        let terms = lambda
            .iter()
            .zip(&units)
            .filter(|(l, _)| !l.is_zero())
            .map(|(l, u)| {
                let t = Tree::node("mu", vec![Tree::node(u.clone(), vec![]), Tree::node(inv.clone(), vec![Tree::leaf(1)])]);
                (l.clone(), t)
            })
            .collect();
        relations.push(Relation::new(Combo(terms), Combo::single(field, Tree::leaf(1)))?);
    }
    Ok(InsPresentation {
        m,
        lambdas: lambdas.to_vec(),
        presentation: Presentation::new(field, generators, relations)?,
    })
}
