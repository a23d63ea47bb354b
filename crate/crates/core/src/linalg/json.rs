use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};

use super::matrix::LinearMap;

/// Wire form of a [`LinearMap`]:
/// `{"field":{"kind":"Fp","p":3},"dom":n,"cod":m,"entries":[[…],…]}`.
///
/// ℚ entries are written as strings (`"3"`, `"-1/2"`); 𝔽_p entries as integers.
/// Both spellings are accepted on input.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MatrixLiteral {
    pub field: FieldSpec,
    pub dom: usize,
    pub cod: usize,
    pub entries: Vec<Vec<Value>>,
}

pub(crate) fn scalar_from_json(field: FieldSpec, v: &Value) -> Result<Scalar> {
    match v {
        Value::String(s) => field.parse_scalar(s),
        Value::Number(n) => field.parse_scalar(&n.to_string()),
        other => Err(Error::Parse(format!("expected a scalar, found {other}"))),
    }
}

impl TryFrom<MatrixLiteral> for LinearMap {
    type Error = Error;

    fn try_from(lit: MatrixLiteral) -> Result<Self> {
        lit.field.validate()?;
        if lit.entries.len() != lit.cod {
            return Err(Error::dims(format!(
                "matrix literal declares cod {} but has {} rows",
                lit.cod,
                lit.entries.len()
            )));
        }
        let rows = lit
            .entries
            .iter()
            .map(|r| r.iter().map(|v| scalar_from_json(lit.field, v)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        LinearMap::from_rows(lit.field, lit.dom, rows)
    }
}

impl From<&LinearMap> for MatrixLiteral {
    fn from(m: &LinearMap) -> Self {
        MatrixLiteral {
            field: m.field(),
            dom: m.dom(),
            cod: m.cod(),
            entries: (0..m.cod())
                .map(|r| m.row(r).iter().map(Scalar::to_json).collect())
                .collect(),
        }
    }
}

impl Serialize for LinearMap {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        MatrixLiteral::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for LinearMap {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let lit = MatrixLiteral::deserialize(d)?;
        LinearMap::try_from(lit).map_err(serde::de::Error::custom)
    }
}

/// Serde helpers for plain scalar vectors, which need the field from context.
pub(crate) fn vector_to_json(v: &[Scalar]) -> Value {
    Value::Array(v.iter().map(Scalar::to_json).collect())
}

pub(crate) fn vector_from_json(field: FieldSpec, v: &[Value]) -> Result<Vec<Scalar>> {
    v.iter().map(|x| scalar_from_json(field, x)).collect()
}
