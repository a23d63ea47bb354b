//! Operads given by generators and relations, checked against concrete
//! algebra or coalgebra structures without building the presented operad.
//!
//! Relations are checked only as listed. Equivariance is not implied, so a
//! symmetrized relation must be written out explicitly when it is intended.

mod eval;
mod tree;

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::operad::Algebra;

pub use eval::{check_relations, eval_combo, eval_tree, tree_composite, Mode, StructureAssignment, EVAL_GUARD};
pub use tree::{Combo, Relation, Tree};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Generator {
    pub name: String,
    pub arity: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    pub field: FieldSpec,
    pub generators: Vec<Generator>,
    pub relations: Vec<Relation>,
}

impl Presentation {
    pub fn new(field: FieldSpec, generators: Vec<Generator>, relations: Vec<Relation>) -> Result<Self> {
        let mut names = BTreeSet::new();
        for g in &generators {
            let leafish = g.name.strip_prefix('x').is_some_and(|d| !d.is_empty() && d.bytes().all(|b| b.is_ascii_digit()));
            if leafish || g.name.is_empty() || !names.insert(g.name.as_str()) {
                return Err(Error::Parse(format!("invalid or duplicate generator name {:?}", g.name)));
            }
        }
        let pres = Presentation {
            field,
            generators,
            relations,
        };
        for rel in &pres.relations {
            rel.inputs()?;
            for (_, t) in rel.lhs.0.iter().chain(&rel.rhs.0) {
                for (op, k) in t.operations() {
                    match pres.arity(op) {
                        Some(a) if a == k => {}
                        Some(a) => return Err(Error::Parse(format!("{op} has arity {a} but is used with {k} inputs"))),
                        None => return Err(Error::Parse(format!("unknown generator {op} in {rel}"))),
                    }
                }
            }
        }
        Ok(pres)
    }

    /// Builds a presentation from relation strings in the term grammar.
    pub fn from_text(field: FieldSpec, generators: &[(&str, usize)], relations: &[&str]) -> Result<Self> {
        let gens = generators
            .iter()
            .map(|&(name, arity)| Generator {
                name: name.into(),
                arity,
            })
            .collect();
        let rels = relations.iter().map(|r| Relation::parse(field, r)).collect::<Result<_>>()?;
        Self::new(field, gens, rels)
    }

    pub fn arity(&self, name: &str) -> Option<usize> {
        self.generators.iter().find(|g| g.name == name).map(|g| g.arity)
    }

    /// Unital associative algebras: `mu` of arity 2 and the unit `u0` of arity 0.
    pub fn uassoc(field: FieldSpec) -> Self {
        Self::from_text(field, &[("mu", 2), ("u0", 0)], &UASSOC_RELATIONS).expect("uassoc presentation")
    }

    pub fn to_json(&self) -> Value {
        serde_json::to_value(PresentationJson {
            field: self.field,
            generators: self.generators.clone(),
            relations: self.relations.iter().map(ToString::to_string).collect(),
        })
        .expect("presentation serializes")
    }

    pub fn from_json(v: Value) -> Result<Self> {
        let raw: PresentationJson = serde_json::from_value(v)?;
        raw.field.validate()?;
        let rels = raw.relations.iter().map(|r| Relation::parse(raw.field, r)).collect::<Result<_>>()?;
        Self::new(raw.field, raw.generators, rels)
    }
}

pub const UASSOC_RELATIONS: [&str; 3] = [
    "(mu (mu x1 x2) x3) = (mu x1 (mu x2 x3))",
    "(mu (u0) x1) = x1",
    "(mu x1 (u0)) = x1",
];

/// Wire form: `{"field", "generators": [{"name","arity"}], "relations": ["lhs = rhs", …]}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PresentationJson {
    pub field: FieldSpec,
    pub generators: Vec<Generator>,
    pub relations: Vec<String>,
}

/// `mu` and `u0` of an algebra, as an algebra-mode assignment.
pub fn algebra_assignment(a: &Algebra) -> Result<StructureAssignment> {
    let mut s = StructureAssignment::new(a.field(), a.dim(), Mode::Algebra);
    s.assign("mu", 2, a.mult().clone())?;
    s.assign("u0", 0, crate::linalg::LinearMap::column_vector(a.field(), a.unit().to_vec())?)?;
    Ok(s)
}
