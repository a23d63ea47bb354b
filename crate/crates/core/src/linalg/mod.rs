//! Exact dense linear algebra: maps, elimination, permutations of tensor
//! factors and coinvariant quotients.

mod coinvariants;
mod json;
mod matrix;
mod perm;
mod random;
mod reduce;

pub use coinvariants::{coinvariants, Coinvariants};
pub use json::MatrixLiteral;
pub(crate) use json::{vector_from_json as json_vector, vector_to_json};
pub use matrix::LinearMap;
pub use perm::{checked_pow, flat_index, multi_index, perm_on_tensor_power, Permutation};
pub use random::{random_invertible, random_map, random_scalar};
pub use reduce::{rank_of_rows, rref, solve_affine, Subspace};

use crate::field::{FieldSpec, Scalar};

/// `x ⊗ y` for coordinate vectors.
pub fn tensor_vectors(x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
    let mut out = Vec::with_capacity(x.len() * y.len());
    for a in x {
        for b in y {
            out.push(a * b);
        }
    }
    out
}

pub fn basis_vector(field: FieldSpec, n: usize, k: usize) -> Vec<Scalar> {
    let mut v = vec![field.zero(); n];
    v[k] = field.one();
    v
}

pub fn add_vectors(x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
    x.iter().zip(y).map(|(a, b)| a + b).collect()
}

pub fn scale_vector(s: &Scalar, x: &[Scalar]) -> Vec<Scalar> {
    x.iter().map(|a| s * a).collect()
}

pub fn is_zero_vector(x: &[Scalar]) -> bool {
    x.iter().all(Scalar::is_zero)
}
