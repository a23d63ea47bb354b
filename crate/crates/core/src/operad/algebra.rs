//! Finite-dimensional unital associative algebras, the arity-1 part of an operad.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::linalg::{json_vector, tensor_vectors, vector_to_json, LinearMap};

/// A unital associative algebra `A` with multiplication `A ⊗ A → A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Algebra {
    field: FieldSpec,
    dim: usize,
    mult: LinearMap,
    unit: Vec<Scalar>,
}

impl Algebra {
    /// Validates associativity and both unit laws.
    pub fn new(field: FieldSpec, dim: usize, mult: LinearMap, unit: Vec<Scalar>) -> Result<Self> {
        if (mult.cod(), mult.dom()) != (dim, dim * dim) || mult.field() != field {
            return Err(Error::InvalidAlgebra(format!(
                "multiplication must be {dim}x{}",
                dim * dim
            )));
        }
        if unit.len() != dim || unit.iter().any(|s| !field.contains(s)) {
            return Err(Error::InvalidAlgebra("unit vector has the wrong length or field".into()));
        }
        let a = Algebra {
            field,
            dim,
            mult,
            unit,
        };
        let id = LinearMap::identity(field, dim);
        let left = a.mult.compose(&a.mult.tensor(&id)?)?;
        let right = a.mult.compose(&id.tensor(&a.mult)?)?;
        if left != right {
            return Err(Error::InvalidAlgebra("multiplication is not associative".into()));
        }
        let u = LinearMap::column_vector(field, a.unit.clone())?;
        if !a.mult.compose(&u.tensor(&id)?)?.is_identity() || !a.mult.compose(&id.tensor(&u)?)?.is_identity() {
            return Err(Error::InvalidAlgebra("unit laws fail".into()));
        }
        Ok(a)
    }

    /// Builds an algebra from structure constants `table[i][j] = e_i · e_j`.
    pub fn from_table(field: FieldSpec, table: &[Vec<Vec<i64>>], unit: &[i64]) -> Result<Self> {
        let dim = unit.len();
        let mut mult = LinearMap::zero(field, dim, dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                for (k, &c) in table[i][j].iter().enumerate() {
                    mult.set(k, i * dim + j, field.from_i64(c));
                }
            }
        }
        Self::new(field, dim, mult, unit.iter().map(|&u| field.from_i64(u)).collect())
    }

    /// The ground field `𝕂`.
    pub fn ground(field: FieldSpec) -> Self {
        Self::from_table(field, &[vec![vec![1]]], &[1]).expect("𝕂 is an algebra")
    }

    /// `𝕂[ε]/ε²` on the basis `(1, ε)`.
    pub fn dual_numbers(field: FieldSpec) -> Self {
        let t = vec![vec![vec![1, 0], vec![0, 1]], vec![vec![0, 1], vec![0, 0]]];
        Self::from_table(field, &t, &[1, 0]).expect("dual numbers form an algebra")
    }

    /// The group algebra `𝕂[𝔖₂]` on the basis `(e, s)`.
    pub fn group_algebra_s2(field: FieldSpec) -> Self {
        let t = vec![vec![vec![1, 0], vec![0, 1]], vec![vec![0, 1], vec![1, 0]]];
        Self::from_table(field, &t, &[1, 0]).expect("group algebra")
    }

    /// `k × k` matrices on the basis `E_{ab}` (index `a·k + b`).
    pub fn matrix_algebra(field: FieldSpec, k: usize) -> Self {
        let dim = k * k;
        let mut table = vec![vec![vec![0; dim]; dim]; dim];
        for a in 0..k {
            for b in 0..k {
                for c in 0..k {
                    // E_ab E_bc = E_ac
                    table[a * k + b][b * k + c][a * k + c] = 1;
                }
            }
        }
        let unit: Vec<i64> = (0..dim).map(|i| i64::from(i / k == i % k)).collect();
        Self::from_table(field, &table, &unit).expect("matrix algebra")
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn mult(&self) -> &LinearMap {
        &self.mult
    }

    pub fn unit(&self) -> &[Scalar] {
        &self.unit
    }

    pub fn product(&self, x: &[Scalar], y: &[Scalar]) -> Result<Vec<Scalar>> {
        self.mult.apply(&tensor_vectors(x, y))
    }

    /// The matrix of `y ↦ a·y`.
    pub fn left_mult(&self, a: &[Scalar]) -> Result<LinearMap> {
        let cols = (0..self.dim)
            .map(|j| self.product(a, &crate::linalg::basis_vector(self.field, self.dim, j)))
            .collect::<Result<Vec<_>>>()?;
        LinearMap::from_columns(self.field, self.dim, &cols)
    }

    /// The matrix of `y ↦ y·a`.
    pub fn right_mult(&self, a: &[Scalar]) -> Result<LinearMap> {
        let cols = (0..self.dim)
            .map(|j| self.product(&crate::linalg::basis_vector(self.field, self.dim, j), a))
            .collect::<Result<Vec<_>>>()?;
        LinearMap::from_columns(self.field, self.dim, &cols)
    }

    pub fn to_json(&self) -> Value {
        serde_json::to_value(AlgebraJson {
            field: self.field,
            dim: self.dim,
            mult: self.mult.clone(),
            unit: vector_to_json(&self.unit).as_array().cloned().unwrap_or_default(),
        })
        .expect("algebra serializes")
    }

    pub fn from_json(v: Value) -> Result<Self> {
        let raw: AlgebraJson = serde_json::from_value(v)?;
        raw.field.validate()?;
        let unit = json_vector(raw.field, &raw.unit)?;
        Algebra::new(raw.field, raw.dim, raw.mult, unit)
    }
}

/// Wire form: `{"field","dim","mult":matrix,"unit":[…]}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct AlgebraJson {
    pub field: FieldSpec,
    pub dim: usize,
    pub mult: LinearMap,
    pub unit: Vec<Value>,
}

/// A unital algebra morphism `A → A′`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraMorphism {
    pub source: Algebra,
    pub target: Algebra,
    pub map: LinearMap,
}

impl AlgebraMorphism {
    pub fn new(source: Algebra, target: Algebra, map: LinearMap) -> Result<Self> {
        if (map.cod(), map.dom()) != (target.dim, source.dim) {
            return Err(Error::InvalidAlgebra("morphism has the wrong shape".into()));
        }
        if map.apply(&source.unit)? != target.unit {
            return Err(Error::InvalidAlgebra("morphism is not unital".into()));
        }
        let lhs = map.compose(&source.mult)?;
        let rhs = target.mult.compose(&map.tensor(&map)?)?;
        if lhs != rhs {
            return Err(Error::InvalidAlgebra("morphism is not multiplicative".into()));
        }
        Ok(AlgebraMorphism { source, target, map })
    }

    pub fn identity(a: &Algebra) -> Self {
        AlgebraMorphism {
            source: a.clone(),
            target: a.clone(),
            map: LinearMap::identity(a.field, a.dim),
        }
    }

    /// `𝕂[𝔖₂] → 𝕂`, `σ ↦ 1`.
    pub fn augmentation_s2(field: FieldSpec) -> Self {
        let map = LinearMap::from_i64(field, 2, &[&[1, 1]]).expect("shape");
        Self::new(Algebra::group_algebra_s2(field), Algebra::ground(field), map).expect("augmentation")
    }

    /// `𝕂 → 𝕂[ε]/ε²`, the unit.
    pub fn unit_inclusion_dual(field: FieldSpec) -> Self {
        let map = LinearMap::from_i64(field, 1, &[&[1], &[0]]).expect("shape");
        Self::new(Algebra::ground(field), Algebra::dual_numbers(field), map).expect("unit inclusion")
    }

    pub fn to_json(&self) -> Value {
        serde_json::json!({
            "source": self.source.to_json(),
            "target": self.target.to_json(),
            "map": self.map,
        })
    }

    pub fn from_json(v: Value) -> Result<Self> {
        let get = |k: &str| v.get(k).cloned().ok_or_else(|| Error::Parse(format!("missing {k:?}")));
        let source = Algebra::from_json(get("source")?)?;
        let target = Algebra::from_json(get("target")?)?;
        let map: LinearMap = serde_json::from_value(get("map")?)?;
        Self::new(source, target, map)
    }
}

/// A left `A`-module `W`, used as the constants `P(0)` of an arity-{0,1} operad.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeftModule {
    pub dim: usize,
    /// `A ⊗ W → W`.
    pub action: LinearMap,
}

impl LeftModule {
    pub fn new(algebra: &Algebra, dim: usize, action: LinearMap) -> Result<Self> {
        let f = algebra.field;
        if (action.cod(), action.dom()) != (dim, algebra.dim * dim) {
            return Err(Error::InvalidAlgebra("module action has the wrong shape".into()));
        }
        let id_w = LinearMap::identity(f, dim);
        let id_a = LinearMap::identity(f, algebra.dim);
        let lhs = action.compose(&algebra.mult.tensor(&id_w)?)?;
        let rhs = action.compose(&id_a.tensor(&action)?)?;
        if lhs != rhs {
            return Err(Error::InvalidAlgebra("module action is not associative".into()));
        }
        let u = LinearMap::column_vector(f, algebra.unit.clone())?;
        if !action.compose(&u.tensor(&id_w)?)?.is_identity() {
            return Err(Error::InvalidAlgebra("unit does not act as the identity".into()));
        }
        Ok(LeftModule { dim, action })
    }

    /// `𝕂` with `A` acting through an augmentation `A → 𝕂` (a row vector).
    pub fn via_augmentation(algebra: &Algebra, augmentation: &LinearMap) -> Result<Self> {
        Self::new(algebra, 1, augmentation.clone())
    }
}
