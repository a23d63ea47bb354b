//! Gaussian elimination over exact fields.

use crate::field::{FieldSpec, Scalar};

use super::matrix::LinearMap;

/// Reduced row echelon form of `rows` (each of length `ncols`).
///
/// Returns the nonzero reduced rows and their pivot columns, in order.
/// Zero entries are skipped, which keeps the sparse relation matrices built
/// by the coinvariant and morphism solvers cheap.
pub fn rref(mut rows: Vec<Vec<Scalar>>, ncols: usize) -> (Vec<Vec<Scalar>>, Vec<usize>) {
    let mut pivots = Vec::new();
    let mut top = 0;
    for col in 0..ncols {
        if top == rows.len() {
            break;
        }
        let Some(pr) = (top..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(top, pr);
        let inv = rows[top][col].inv().expect("pivot is nonzero");
        if !inv.is_one() {
            for x in rows[top].iter_mut() {
                if !x.is_zero() {
                    *x = &*x * &inv;
                }
            }
        }
        let pivot_row = rows[top].clone();
        let support: Vec<usize> = (col..ncols).filter(|&c| !pivot_row[c].is_zero()).collect();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == top || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for &c in &support {
                row[c] = &row[c] - &(&factor * &pivot_row[c]);
            }
        }
        pivots.push(col);
        top += 1;
    }
    rows.truncate(top);
    (rows, pivots)
}

pub fn rank_of_rows(rows: Vec<Vec<Scalar>>, ncols: usize) -> usize {
    rref(rows, ncols).1.len()
}

/// Solves `a·x = b`. Returns a particular solution and a kernel basis, or
/// `None` when the system is inconsistent.
pub fn solve_affine(a: &LinearMap, b: &[Scalar]) -> Option<(Vec<Scalar>, Vec<Vec<Scalar>>)> {
    let field = a.field();
    let n = a.dom();
    assert_eq!(b.len(), a.cod(), "right-hand side length");
    let rows: Vec<Vec<Scalar>> = (0..a.cod())
        .map(|r| {
            let mut row = a.row(r).to_vec();
            row.push(b[r].clone());
            row
        })
        .collect();
    let (reduced, pivots) = rref(rows, n + 1);
    if pivots.last() == Some(&n) {
        return None;
    }
    let mut x = vec![field.zero(); n];
    for (row, &pc) in reduced.iter().zip(&pivots) {
        x[pc] = row[n].clone();
    }
    Some((x, a.kernel()))
}

/// A subspace of `𝕂^ambient`, kept as reduced echelon rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    field: FieldSpec,
    ambient: usize,
    basis: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: FieldSpec, ambient: usize) -> Self {
        Subspace {
            field,
            ambient,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn span(field: FieldSpec, ambient: usize, vectors: Vec<Vec<Scalar>>) -> Self {
        let (basis, pivots) = rref(vectors, ambient);
        Subspace {
            field,
            ambient,
            basis,
            pivots,
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// `v` minus its projection along the echelon basis; zero iff `v` lies in the span.
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        let mut w = v.to_vec();
        for (row, &pc) in self.basis.iter().zip(&self.pivots) {
            if w[pc].is_zero() {
                continue;
            }
            let f = w[pc].clone();
            for (c, x) in row.iter().enumerate() {
                if !x.is_zero() {
                    w[c] = &w[c] - &(&f * x);
                }
            }
        }
        w
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.reduce(v).iter().all(Scalar::is_zero)
    }

    /// Adds `v`; returns whether the dimension grew.
    pub fn insert(&mut self, v: Vec<Scalar>) -> bool {
        if self.contains(&v) {
            return false;
        }
        let mut rows = std::mem::take(&mut self.basis);
        rows.push(v);
        let (b, p) = rref(rows, self.ambient);
        self.basis = b;
        self.pivots = p;
        true
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    /// The quotient map `𝕂^ambient → 𝕂^ambient / self`, in coordinates given by
    /// the non-pivot positions.
    pub fn quotient_map(&self) -> LinearMap {
        let free: Vec<usize> = (0..self.ambient).filter(|c| !self.pivots.contains(c)).collect();
        let mut q = LinearMap::zero(self.field, free.len(), self.ambient);
        for c in 0..self.ambient {
            let mut e = vec![self.field.zero(); self.ambient];
            e[c] = self.field.one();
            let r = self.reduce(&e);
            for (k, &fc) in free.iter().enumerate() {
                q.set(k, c, r[fc].clone());
            }
        }
        q
    }

    /// Inclusion of the non-pivot coordinate vectors: a section of [`Self::quotient_map`].
    pub fn quotient_section(&self) -> LinearMap {
        let free: Vec<usize> = (0..self.ambient).filter(|c| !self.pivots.contains(c)).collect();
        let mut s = LinearMap::zero(self.field, self.ambient, free.len());
        for (k, &fc) in free.iter().enumerate() {
            s.set(fc, k, self.field.one());
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn solve_consistent_and_inconsistent() {
        let q = FieldSpec::Rationals;
        let a = LinearMap::from_i64(q, 2, &[&[1, 1], &[2, 2]]).unwrap();
        let (x, k) = solve_affine(&a, &[q.from_i64(3), q.from_i64(6)]).unwrap();
        assert_eq!(a.apply(&x).unwrap(), vec![q.from_i64(3), q.from_i64(6)]);
        assert_eq!(k.len(), 1);
        assert!(solve_affine(&a, &[q.from_i64(1), q.from_i64(1)]).is_none());
    }

    #[test]
    fn quotient_kills_subspace() {
        let q = FieldSpec::Rationals;
        let s = Subspace::span(q, 3, vec![vec![q.one(), q.from_i64(-1), q.zero()]]);
        let pi = s.quotient_map();
        assert_eq!(pi.cod(), 2);
        assert!(pi.apply(&s.basis()[0]).unwrap().iter().all(Scalar::is_zero));
        assert!(pi.compose(&s.quotient_section()).unwrap().is_identity());
        assert!(pi.is_surjective());
    }

    #[test]
    fn insert_tracks_dimension() {
        let f = FieldSpec::prime(2).unwrap();
        let mut s = Subspace::zero(f, 2);
        assert!(s.insert(vec![f.one(), f.one()]));
        assert!(!s.insert(vec![f.one(), f.one()]));
        assert!(s.insert(vec![f.one(), f.zero()]));
        assert_eq!(s.dim(), 2);
    }
}
