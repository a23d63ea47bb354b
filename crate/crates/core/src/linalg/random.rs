//! Seeded sampling of scalars and maps for randomized checks.

use rand::Rng;

use crate::field::{FieldSpec, Scalar};

use super::LinearMap;

/// Uniform over `𝔽_p`; over `ℚ`, a small integer in `[-3, 3]`.
pub fn random_scalar(field: FieldSpec, rng: &mut impl Rng) -> Scalar {
    match field {
        FieldSpec::Rationals => field.from_i64(rng.gen_range(-3..=3)),
        FieldSpec::PrimeField { p } => field.from_i64(i64::from(rng.gen_range(0..p))),
    }
}

pub fn random_map(field: FieldSpec, cod: usize, dom: usize, rng: &mut impl Rng) -> LinearMap {
    let entries = (0..cod * dom).map(|_| random_scalar(field, rng)).collect();
    LinearMap::new(field, cod, dom, entries).expect("shape")
}

/// Rejection-samples an invertible `n × n` matrix.
pub fn random_invertible(field: FieldSpec, n: usize, rng: &mut impl Rng) -> LinearMap {
    loop {
        let m = random_map(field, n, n, rng);
        if m.is_invertible() {
            return m;
        }
    }
}
