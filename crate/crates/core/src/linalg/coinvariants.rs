use crate::error::{Error, Result};

use super::matrix::LinearMap;
use super::reduce::Subspace;

/// The quotient `W / span{A_g w − w}` of a representation given by generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coinvariants {
    /// Dimension of the quotient.
    pub dim: usize,
    /// The surjection `W → W_G`.
    pub quotient: LinearMap,
    /// The relation subspace `span{A_g w − w}`.
    pub relations: Subspace,
}

/// Coinvariants of the action generated by `action` on a space of dimension `ambient`.
///
/// `ambient` is only consulted when `action` is empty.
pub fn coinvariants(field: crate::field::FieldSpec, ambient: usize, action: &[LinearMap]) -> Result<Coinvariants> {
    let mut rows = Vec::new();
    for a in action {
        if a.cod() != ambient || a.dom() != ambient {
            return Err(Error::dims(format!(
                "action map {}x{} on a space of dimension {ambient}",
                a.cod(),
                a.dom()
            )));
        }
        if a.field() != field {
            return Err(Error::FieldMismatch(field, a.field()));
        }
        let diff = a.sub(&LinearMap::identity(field, ambient))?;
        rows.extend(diff.columns().into_iter().filter(|c| c.iter().any(|x| !x.is_zero())));
    }
    let relations = Subspace::span(field, ambient, rows);
    let quotient = relations.quotient_map();
    Ok(Coinvariants {
        dim: quotient.cod(),
        quotient,
        relations,
    })
}
