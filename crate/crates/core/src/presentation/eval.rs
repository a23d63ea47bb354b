use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::linalg::{checked_pow, perm_on_tensor_power, LinearMap, Permutation};
use crate::operad::TruncatedOperad;
use crate::report::CheckReport;

use super::tree::{Combo, Tree};
use super::Presentation;

/// Largest `d^{inputs}` an evaluated tree may reach.
pub const EVAL_GUARD: usize = 4096;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// Generators act as `V^{⊗n} → V`.
    Algebra,
    /// Generators act as `V → V^{⊗n}`.
    Coalgebra,
}

/// Concrete matrices for each generator of a presentation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureAssignment {
    pub field: FieldSpec,
    pub dim: usize,
    pub mode: Mode,
    pub maps: BTreeMap<String, LinearMap>,
}

impl StructureAssignment {
    pub fn new(field: FieldSpec, dim: usize, mode: Mode) -> Self {
        StructureAssignment {
            field,
            dim,
            mode,
            maps: BTreeMap::new(),
        }
    }

    /// Adds a generator of the given arity, checking the matrix shape.
    pub fn assign(&mut self, name: impl Into<String>, arity: usize, map: LinearMap) -> Result<&mut Self> {
        let name = name.into();
        self.check_shape(&name, arity, &map)?;
        self.maps.insert(name, map);
        Ok(self)
    }

    fn check_shape(&self, name: &str, arity: usize, map: &LinearMap) -> Result<()> {
        let power = checked_pow(self.dim, arity).ok_or_else(|| Error::dims("tensor power overflows"))?;
        let want = match self.mode {
            Mode::Algebra => (self.dim, power),
            Mode::Coalgebra => (power, self.dim),
        };
        if (map.cod(), map.dom()) != want || map.field() != self.field {
            return Err(Error::dims(format!(
                "{name} of arity {arity} must be {}x{} over {}, got {}x{}",
                want.0,
                want.1,
                self.field,
                map.cod(),
                map.dom()
            )));
        }
        Ok(())
    }

    /// Validates every map against the arities declared by `pres`.
    pub fn validate_against(&self, pres: &Presentation) -> Result<()> {
        for (name, map) in &self.maps {
            let arity = pres
                .arity(name)
                .ok_or_else(|| Error::Parse(format!("{name} is not a generator of the presentation")))?;
            self.check_shape(name, arity, map)?;
        }
        Ok(())
    }
}

fn planar(t: &Tree, s: &StructureAssignment) -> Result<LinearMap> {
    let field = s.field;
    match t {
        Tree::Leaf(_) => Ok(LinearMap::identity(field, s.dim)),
        Tree::Node { op, children } => {
            let gen = s.maps.get(op).ok_or_else(|| Error::NotApplicable(format!("generator {op} is not assigned")))?;
            let mut inner = LinearMap::identity(field, 1);
            for c in children {
                inner = inner.tensor(&planar(c, s)?)?;
            }
            match s.mode {
                Mode::Algebra => gen.compose(&inner),
                Mode::Coalgebra => inner.compose(gen),
            }
        }
    }
}

/// The permutation `σ` with `σ(ℓ_k) = k` (0-based), `ℓ` the planar leaf labels.
fn wiring(t: &Tree) -> Result<Permutation> {
    let labels = t.leaf_labels();
    let mut images = vec![0; labels.len()];
    for (k, &l) in labels.iter().enumerate() {
        images[l - 1] = k;
    }
    Permutation::new(images)
}

/// Evaluates `t` to `V^{⊗n} → V` (algebra mode) or `V → V^{⊗n}` (coalgebra mode),
/// where input `k` of the result is wired to the leaf labelled `k`.
pub fn eval_tree(t: &Tree, s: &StructureAssignment) -> Result<LinearMap> {
    let n = t.validate()?;
    let size = checked_pow(s.dim, n).filter(|&v| v <= EVAL_GUARD);
    if size.is_none() {
        return Err(Error::SizeGuard {
            what: format!("d^inputs for {t}"),
            needed: (s.dim as u128).saturating_pow(n as u32),
            limit: EVAL_GUARD as u128,
        });
    }
    let f = planar(t, s)?;
    let sigma = wiring(t)?;
    if sigma.is_identity() {
        return Ok(f);
    }
    match s.mode {
        Mode::Algebra => f.compose(&perm_on_tensor_power(s.field, &sigma, s.dim)),
        Mode::Coalgebra => perm_on_tensor_power(s.field, &sigma.inverse(), s.dim).compose(&f),
    }
}

pub fn eval_combo(c: &Combo, s: &StructureAssignment) -> Result<LinearMap> {
    let mut acc: Option<LinearMap> = None;
    for (coeff, t) in &c.0 {
        let term = eval_tree(t, s)?.scale(coeff);
        acc = Some(match acc {
            None => term,
            Some(a) => a.add(&term)?,
        });
    }
    acc.ok_or_else(|| Error::Parse("empty linear combination".into()))
}

/// Evaluates both sides of every relation and compares them exactly.
///
/// Failure witnesses carry the relation text and the rank of the difference.
pub fn check_relations(pres: &Presentation, s: &StructureAssignment) -> Result<CheckReport> {
    s.validate_against(pres)?;
    let mut report = CheckReport::new();
    for rel in &pres.relations {
        let diff = eval_combo(&rel.lhs, s)?.sub(&eval_combo(&rel.rhs, s)?)?;
        report.record(diff.is_zero(), || rel.to_string(), || json!({"difference_rank": diff.rank()}));
    }
    Ok(report)
}

/// The element of `P(n)` obtained by composing generator elements along `t`.
///
/// Children are inserted right to left so earlier slot indices stay put; the
/// planar composite is then acted on by the wiring permutation. For
/// `P = End(V)` this matches [`eval_tree`] in algebra mode.
pub fn tree_composite(p: &TruncatedOperad, t: &Tree, gens: &BTreeMap<String, Vec<Scalar>>) -> Result<Vec<Scalar>> {
    let n = t.validate()?;
    let planar = planar_composite(p, t, gens)?;
    p.act(n, &wiring(t)?, &planar)
}

fn planar_composite(p: &TruncatedOperad, t: &Tree, gens: &BTreeMap<String, Vec<Scalar>>) -> Result<Vec<Scalar>> {
    match t {
        Tree::Leaf(_) => Ok(p.unit().to_vec()),
        Tree::Node { op, children } => {
            let mut x = gens
                .get(op)
                .cloned()
                .ok_or_else(|| Error::NotApplicable(format!("generator {op} has no element")))?;
            let mut arity = children.len();
            for (j, c) in children.iter().enumerate().rev() {
                let y = planar_composite(p, c, gens)?;
                let k = c.inputs();
                x = p.compose(arity, k, j + 1, &x, &y)?;
                arity = arity + k - 1;
            }
            Ok(x)
        }
    }
}
