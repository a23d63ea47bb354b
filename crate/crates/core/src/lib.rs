//! Exact linear algebra over truncated operads and their coalgebras.

pub mod cli;
pub mod error;
pub mod field;
pub mod ins;
pub mod linalg;
pub mod operad;
pub mod presentation;
pub mod report;
pub mod sanity;

pub use error::{Error, Result};
pub use field::{FieldSpec, Scalar};
pub use linalg::{LinearMap, Permutation};
