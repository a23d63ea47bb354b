use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::FieldSpec;

use super::matrix::LinearMap;

/// A permutation of `{0, …, n-1}`, stored by its image list.
///
/// Composition is functional: `(σ∘τ)(k) = σ(τ(k))`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return Err(Error::Parse(format!("{images:?} is not a permutation")));
            }
            seen[i] = true;
        }
        Ok(Permutation { images })
    }

    /// From the 1-based image list of `1..n`.
    pub fn from_one_based(images: &[usize]) -> Result<Self> {
        if images.contains(&0) {
            return Err(Error::Parse("1-based images cannot contain 0".into()));
        }
        Self::new(images.iter().map(|i| i - 1).collect())
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// The adjacent transposition swapping `k` and `k+1` (0-based).
    pub fn adjacent(n: usize, k: usize) -> Self {
        assert!(k + 1 < n, "adjacent transposition out of range");
        let mut images: Vec<usize> = (0..n).collect();
        images.swap(k, k + 1);
        Permutation { images }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, k: usize) -> usize {
        self.images[k]
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree());
        Permutation {
            images: other.images.iter().map(|&k| self.images[k]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.degree()];
        for (k, &i) in self.images.iter().enumerate() {
            inv[i] = k;
        }
        Permutation { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(k, &i)| k == i)
    }

    /// All of `𝔖_n`, in lexicographic order of image lists.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(n);
        let mut used = vec![false; n];
        fn rec(n: usize, cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Permutation>) {
            if cur.len() == n {
                out.push(Permutation { images: cur.clone() });
                return;
            }
            for i in 0..n {
                if !used[i] {
                    used[i] = true;
                    cur.push(i);
                    rec(n, cur, used, out);
                    cur.pop();
                    used[i] = false;
                }
            }
        }
        rec(n, &mut cur, &mut used, &mut out);
        out
    }

    /// A word `[a₁, …, a_k]` of adjacent transpositions with
    /// `self = s_{a₁} ∘ s_{a₂} ∘ ⋯ ∘ s_{a_k}`.
    pub fn adjacent_word(&self) -> Vec<usize> {
        // Bubble-sort the image list; each swap at positions (j, j+1) right-multiplies by s_j.
        let mut cur = self.images.clone();
        let mut swaps = Vec::new();
        let n = cur.len();
        for pass in 0..n {
            for j in 0..n.saturating_sub(1 + pass) {
                if cur[j] > cur[j + 1] {
                    cur.swap(j, j + 1);
                    swaps.push(j);
                }
            }
        }
        // self ∘ s_{j₁} ∘ ⋯ ∘ s_{j_k} = id, so self = s_{j_k} ∘ ⋯ ∘ s_{j₁}.
        swaps.reverse();
        swaps
    }

    /// Replaces letter `slot` by a block of `width` consecutive letters.
    ///
    /// The result `σ'` on `m + width − 1` points satisfies: position `k` inside
    /// input slot `j` (offset `o`) is sent to the start of output slot `σ(j)`
    /// plus `o`, where output slot `σ(slot)` has width `width`. With `width = 0`
    /// the letter is deleted and the rest standardized.
    pub fn block_substitute(&self, slot: usize, width: usize) -> Permutation {
        let m = self.degree();
        let target = self.images[slot];
        let start_out = |s: usize| if s > target { s + width - 1 } else { s };
        let mut images = Vec::with_capacity(m + width - 1);
        for j in 0..m {
            if j == slot {
                for o in 0..width {
                    images.push(start_out(target) + o);
                }
            } else {
                images.push(start_out(self.images[j]));
            }
        }
        Permutation { images }
    }

    /// `σ` acting on positions `offset..offset+n` of a larger set of `total` points.
    pub fn shifted(&self, offset: usize, total: usize) -> Permutation {
        let mut images: Vec<usize> = (0..total).collect();
        for (k, &i) in self.images.iter().enumerate() {
            images[offset + k] = offset + i;
        }
        Permutation { images }
    }
}

/// Digits of `idx` in base `d` with `n` digits, most significant first.
pub fn multi_index(mut idx: usize, d: usize, n: usize) -> Vec<usize> {
    let mut out = vec![0; n];
    for k in (0..n).rev() {
        out[k] = idx % d;
        idx /= d;
    }
    out
}

/// Inverse of [`multi_index`].
pub fn flat_index(digits: &[usize], d: usize) -> usize {
    digits.iter().fold(0, |acc, &i| acc * d + i)
}

pub fn checked_pow(d: usize, n: usize) -> Option<usize> {
    (0..n).try_fold(1usize, |acc, _| acc.checked_mul(d))
}

/// The `dⁿ × dⁿ` matrix sending `e_{i₁}⊗⋯⊗e_{iₙ}` to `e_{i_{σ⁻¹(1)}}⊗⋯⊗e_{i_{σ⁻¹(n)}}`,
/// i.e. the factor in position `k` moves to position `σ(k)`.
pub fn perm_on_tensor_power(field: FieldSpec, sigma: &Permutation, d: usize) -> LinearMap {
    let n = sigma.degree();
    let size = checked_pow(d, n).expect("tensor power overflows usize");
    let mut m = LinearMap::zero(field, size, size);
    let mut out = vec![0; n];
    for src in 0..size {
        let digits = multi_index(src, d, n);
        for (k, &i) in digits.iter().enumerate() {
            out[sigma.apply(k)] = i;
        }
        m.set(flat_index(&out, d), src, field.one());
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::new(vec![0, 0]).is_err());
        assert!(Permutation::new(vec![2, 0]).is_err());
        assert!(Permutation::from_one_based(&[2, 1, 3]).is_ok());
    }

    #[test]
    fn adjacent_word_reconstructs() {
        for n in 0..=5 {
            for s in Permutation::all(n) {
                let rebuilt = s
                    .adjacent_word()
                    .iter()
                    .fold(Permutation::identity(n), |acc, &k| acc.compose(&Permutation::adjacent(n, k)));
                assert_eq!(rebuilt, s);
            }
        }
    }

    #[test]
    fn swap_on_two_factors() {
        let f = FieldSpec::Rationals;
        let m = perm_on_tensor_power(f, &Permutation::adjacent(2, 0), 2);
        // basis order 11, 12, 21, 22
        let expect = LinearMap::from_i64(
            f,
            4,
            &[&[1, 0, 0, 0], &[0, 0, 1, 0], &[0, 1, 0, 0], &[0, 0, 0, 1]],
        )
        .unwrap();
        assert_eq!(m, expect);
        assert!(perm_on_tensor_power(f, &Permutation::identity(3), 2).is_identity());
    }

    #[test]
    fn block_substitution_examples() {
        // σ = (2 1), plug a block of width 2 into slot 0: inputs 0,1 go to positions 1,2.
        let s = Permutation::new(vec![1, 0]).unwrap();
        assert_eq!(s.block_substitute(0, 2).images(), &[1, 2, 0]);
        assert_eq!(s.block_substitute(1, 2).images(), &[2, 0, 1]);
        assert_eq!(s.block_substitute(0, 0).images(), &[0]);
        let t = Permutation::new(vec![2, 0, 1]).unwrap();
        assert_eq!(t.block_substitute(1, 0).images(), &[1, 0]);
    }
}
