use std::fmt;

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};

use super::reduce::{rank_of_rows, rref, solve_affine};

/// A dense `cod × dom` matrix over an exact field, read as a map `𝕂^dom → 𝕂^cod`.
///
/// Entries are stored row-major. Zero-dimensional domains and codomains are
/// allowed and give empty matrices.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LinearMap {
    field: FieldSpec,
    cod: usize,
    dom: usize,
    entries: Vec<Scalar>,
}

impl fmt::Debug for LinearMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "LinearMap<{}> {}x{} [", self.field, self.cod, self.dom)?;
        for r in 0..self.cod {
            let row: Vec<String> = self.row(r).iter().map(|s| s.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl LinearMap {
    pub fn new(field: FieldSpec, cod: usize, dom: usize, entries: Vec<Scalar>) -> Result<Self> {
        if entries.len() != cod * dom {
            return Err(Error::dims(format!(
                "{} entries for a {cod}x{dom} matrix",
                entries.len()
            )));
        }
        if let Some(bad) = entries.iter().find(|s| !field.contains(s)) {
            return Err(Error::FieldMismatch(field, bad.field()));
        }
        Ok(LinearMap {
            field,
            cod,
            dom,
            entries,
        })
    }

    pub fn zero(field: FieldSpec, cod: usize, dom: usize) -> Self {
        LinearMap {
            field,
            cod,
            dom,
            entries: vec![field.zero(); cod * dom],
        }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        let mut m = Self::zero(field, n, n);
        for i in 0..n {
            m.entries[i * n + i] = field.one();
        }
        m
    }

    pub fn from_rows(field: FieldSpec, dom: usize, rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let cod = rows.len();
        if let Some(r) = rows.iter().find(|r| r.len() != dom) {
            return Err(Error::dims(format!("row of length {} in a map with dom {dom}", r.len())));
        }
        Self::new(field, cod, dom, rows.into_iter().flatten().collect())
    }

    /// Convenience constructor from small integer rows.
    pub fn from_i64(field: FieldSpec, dom: usize, rows: &[&[i64]]) -> Result<Self> {
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&v| field.from_i64(v)).collect())
            .collect();
        Self::from_rows(field, dom, rows)
    }

    /// The matrix whose columns are the given vectors.
    pub fn from_columns(field: FieldSpec, cod: usize, cols: &[Vec<Scalar>]) -> Result<Self> {
        let mut m = Self::zero(field, cod, cols.len());
        for (c, col) in cols.iter().enumerate() {
            if col.len() != cod {
                return Err(Error::dims(format!("column of length {} for cod {cod}", col.len())));
            }
            for (r, v) in col.iter().enumerate() {
                m.entries[r * cols.len() + c] = v.clone();
            }
        }
        Ok(m)
    }

    /// A `1 × n` functional.
    pub fn row_vector(field: FieldSpec, v: Vec<Scalar>) -> Result<Self> {
        let n = v.len();
        Self::new(field, 1, n, v)
    }

    /// An `n × 1` map `𝕂 → 𝕂^n`.
    pub fn column_vector(field: FieldSpec, v: Vec<Scalar>) -> Result<Self> {
        let n = v.len();
        Self::new(field, n, 1, v)
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn dom(&self) -> usize {
        self.dom
    }

    pub fn cod(&self) -> usize {
        self.cod
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.entries[r * self.dom + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        assert!(self.field.contains(&v), "scalar from a foreign field");
        self.entries[r * self.dom + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.entries[r * self.dom..(r + 1) * self.dom]
    }

    pub fn rows(&self) -> Vec<Vec<Scalar>> {
        (0..self.cod).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn column(&self, c: usize) -> Vec<Scalar> {
        (0..self.cod).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<Scalar>> {
        (0..self.dom).map(|c| self.column(c)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.cod == self.dom && *self == Self::identity(self.field, self.cod)
    }

    fn same_field(&self, other: &LinearMap) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(self.field, other.field));
        }
        Ok(())
    }

    /// `self ∘ g`.
    pub fn compose(&self, g: &LinearMap) -> Result<LinearMap> {
        self.same_field(g)?;
        if g.cod != self.dom {
            return Err(Error::dims(format!(
                "compose: inner codomain {} != outer domain {}",
                g.cod, self.dom
            )));
        }
        let mut out = Self::zero(self.field, self.cod, g.dom);
        for r in 0..self.cod {
            for k in 0..self.dom {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..g.dom {
                    let b = g.get(k, c);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = r * g.dom + c;
                    out.entries[idx] = &out.entries[idx] + &(a * b);
                }
            }
        }
        Ok(out)
    }

    /// Kronecker product; basis `(i, j)` of the tensor is linearized as `i·dim₂ + j`.
    pub fn tensor(&self, g: &LinearMap) -> Result<LinearMap> {
        self.same_field(g)?;
        let (cod, dom) = (self.cod * g.cod, self.dom * g.dom);
        let mut out = Self::zero(self.field, cod, dom);
        for r1 in 0..self.cod {
            for c1 in 0..self.dom {
                let a = self.get(r1, c1);
                if a.is_zero() {
                    continue;
                }
                for r2 in 0..g.cod {
                    for c2 in 0..g.dom {
                        let b = g.get(r2, c2);
                        if b.is_zero() {
                            continue;
                        }
                        out.entries[(r1 * g.cod + r2) * dom + c1 * g.dom + c2] = a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    /// `f^{⊗n}`; the 0-th power is `id_𝕂`.
    pub fn tensor_power(&self, n: usize) -> Result<LinearMap> {
        let mut out = Self::identity(self.field, 1);
        for _ in 0..n {
            out = out.tensor(self)?;
        }
        Ok(out)
    }

    /// Block-diagonal sum on the concatenated bases.
    pub fn direct_sum(&self, g: &LinearMap) -> Result<LinearMap> {
        self.same_field(g)?;
        let mut out = Self::zero(self.field, self.cod + g.cod, self.dom + g.dom);
        for r in 0..self.cod {
            for c in 0..self.dom {
                out.set(r, c, self.get(r, c).clone());
            }
        }
        for r in 0..g.cod {
            for c in 0..g.dom {
                out.set(self.cod + r, self.dom + c, g.get(r, c).clone());
            }
        }
        Ok(out)
    }

    pub fn add(&self, g: &LinearMap) -> Result<LinearMap> {
        self.same_field(g)?;
        if (self.cod, self.dom) != (g.cod, g.dom) {
            return Err(Error::dims(format!(
                "add: {}x{} vs {}x{}",
                self.cod, self.dom, g.cod, g.dom
            )));
        }
        let entries = self
            .entries
            .iter()
            .zip(&g.entries)
            .map(|(a, b)| a + b)
            .collect();
        Ok(self.with_entries(entries))
    }

    pub fn sub(&self, g: &LinearMap) -> Result<LinearMap> {
        self.add(&g.scale(&self.field.from_i64(-1)))
    }

    pub fn scale(&self, s: &Scalar) -> LinearMap {
        self.with_entries(self.entries.iter().map(|a| a * s).collect())
    }

    fn with_entries(&self, entries: Vec<Scalar>) -> LinearMap {
        LinearMap {
            field: self.field,
            cod: self.cod,
            dom: self.dom,
            entries,
        }
    }

    pub fn transpose(&self) -> LinearMap {
        let mut out = Self::zero(self.field, self.dom, self.cod);
        for r in 0..self.cod {
            for c in 0..self.dom {
                out.entries[c * self.cod + r] = self.get(r, c).clone();
            }
        }
        out
    }

    pub fn apply(&self, v: &[Scalar]) -> Result<Vec<Scalar>> {
        if v.len() != self.dom {
            return Err(Error::dims(format!(
                "apply: vector of length {} to a map with dom {}",
                v.len(),
                self.dom
            )));
        }
        let mut out = vec![self.field.zero(); self.cod];
        for (c, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (r, o) in out.iter_mut().enumerate() {
                let a = self.get(r, c);
                if !a.is_zero() {
                    *o = &*o + &(a * x);
                }
            }
        }
        Ok(out)
    }

    /// Restriction to the columns `start..start+len`.
    pub fn column_block(&self, start: usize, len: usize) -> LinearMap {
        let mut out = Self::zero(self.field, self.cod, len);
        for r in 0..self.cod {
            for c in 0..len {
                out.entries[r * len + c] = self.get(r, start + c).clone();
            }
        }
        out
    }

    /// The rows `start..start+len`.
    pub fn row_block(&self, start: usize, len: usize) -> LinearMap {
        LinearMap {
            entries: self.entries[start * self.dom..(start + len) * self.dom].to_vec(),
            field: self.field,
            cod: len,
            dom: self.dom,
        }
    }

    pub fn rank(&self) -> usize {
        rank_of_rows(self.rows(), self.dom)
    }

    /// Basis of the kernel, read off the reduced row echelon form.
    pub fn kernel(&self) -> Vec<Vec<Scalar>> {
        let (reduced, pivots) = rref(self.rows(), self.dom);
        let zero = self.field.zero();
        let one = self.field.one();
        let mut basis = Vec::new();
        for free in (0..self.dom).filter(|c| !pivots.contains(c)) {
            let mut v = vec![zero.clone(); self.dom];
            v[free] = one.clone();
            for (row, &pc) in reduced.iter().zip(&pivots) {
                v[pc] = -&row[free];
            }
            basis.push(v);
        }
        basis
    }

    /// Basis of the image (reduced rows of the transpose).
    pub fn image(&self) -> Vec<Vec<Scalar>> {
        rref(self.columns(), self.cod).0
    }

    pub fn is_injective(&self) -> bool {
        self.rank() == self.dom
    }

    pub fn is_surjective(&self) -> bool {
        self.rank() == self.cod
    }

    pub fn is_invertible(&self) -> bool {
        self.cod == self.dom && self.is_injective()
    }

    /// Some `g` with `self ∘ g = id`, when `self` is surjective.
    pub fn right_inverse(&self) -> Option<LinearMap> {
        if !self.is_surjective() {
            return None;
        }
        let mut cols = Vec::with_capacity(self.cod);
        for k in 0..self.cod {
            let mut e = vec![self.field.zero(); self.cod];
            e[k] = self.field.one();
            cols.push(solve_affine(self, &e)?.0);
        }
        LinearMap::from_columns(self.field, self.dom, &cols).ok()
    }

    /// Some `g` with `g ∘ self = id`, when `self` is injective.
    pub fn left_inverse(&self) -> Option<LinearMap> {
        if !self.is_injective() {
            return None;
        }
        self.transpose().right_inverse().map(|g| g.transpose())
    }

    pub fn inverse(&self) -> Option<LinearMap> {
        if !self.is_invertible() {
            return None;
        }
        self.right_inverse()
    }
}
