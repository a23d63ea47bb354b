//! Exhaustive enumeration of Ins_m-coalgebra structures over small prime fields.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::linalg::LinearMap;

use super::coalgebra::InsCoalgebraData;

/// Default bound on `p^{d³ + (m+1)d}`.
pub const SEARCH_BUDGET: u128 = 1 << 24;

#[derive(Clone, Debug)]
pub struct SearchOutcome {
    /// Size of the raw search space `p^{d³ + (m+1)d}`.
    pub space: u128,
    /// Coassociative `δ` found.
    pub coassociative: usize,
    /// Survivors in lexicographic order of `(δ, ε₀, …, ε_m)` entries.
    pub structures: Vec<InsCoalgebraData>,
}

struct Small {
    p: u32,
    d: usize,
}

impl Small {
    fn digits(&self, mut idx: u64, len: usize) -> Vec<u32> {
        // most significant first, so index order equals lexicographic order
        let mut out = vec![0; len];
        for k in (0..len).rev() {
            out[k] = (idx % u64::from(self.p)) as u32;
            idx /= u64::from(self.p);
        }
        out
    }

    /// `δ` stored row-major as a `d² × d` matrix.
    fn coassociative(&self, delta: &[u32]) -> bool {
        let (d, p) = (self.d, self.p);
        let at = |r: usize, c: usize| delta[r * d + c];
        // (δ⊗id)δ(e_c) and (id⊗δ)δ(e_c), coefficient of e_i⊗e_j⊗e_k
        for c in 0..d {
            for i in 0..d {
                for j in 0..d {
                    for k in 0..d {
                        let mut left = 0u32;
                        let mut right = 0u32;
                        for a in 0..d {
                            // δ(e_c) ∋ e_a⊗e_k then δ(e_a) ∋ e_i⊗e_j
                            left = (left + at(a * d + k, c) * at(i * d + j, a)) % p;
                            // δ(e_c) ∋ e_i⊗e_a then δ(e_a) ∋ e_j⊗e_k
                            right = (right + at(i * d + a, c) * at(j * d + k, a)) % p;
                        }
                        if left != right {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// `(ε⊗id)δ` as a `d × d` matrix.
    fn left_contract(&self, delta: &[u32], eps: &[u32]) -> Vec<u32> {
        let (d, p) = (self.d, self.p);
        let mut out = vec![0; d * d];
        for r in 0..d {
            for c in 0..d {
                out[r * d + c] = (0..d).map(|a| eps[a] * delta[(a * d + r) * d + c]).sum::<u32>() % p;
            }
        }
        out
    }

    fn right_contract(&self, delta: &[u32], eps: &[u32]) -> Vec<u32> {
        let (d, p) = (self.d, self.p);
        let mut out = vec![0; d * d];
        for r in 0..d {
            for c in 0..d {
                out[r * d + c] = (0..d).map(|a| eps[a] * delta[(r * d + a) * d + c]).sum::<u32>() % p;
            }
        }
        out
    }

    fn is_identity(&self, m: &[u32]) -> bool {
        m.iter().enumerate().all(|(k, &v)| v == u32::from(k / self.d == k % self.d))
    }

    fn invertible(&self, m: &[u32]) -> bool {
        let (d, p) = (self.d, self.p);
        let mut a = m.to_vec();
        for col in 0..d {
            let Some(piv) = (col..d).find(|&r| a[r * d + col] != 0) else {
                return false;
            };
            for k in 0..d {
                a.swap(col * d + k, piv * d + k);
            }
            let inv = pow_mod(a[col * d + col], p - 2, p);
            for r in col + 1..d {
                let f = a[r * d + col] * inv % p;
                if f != 0 {
                    for k in col..d {
                        a[r * d + k] = (a[r * d + k] + p * p - f * a[col * d + k] % p) % p;
                    }
                }
            }
        }
        true
    }
}

fn pow_mod(b: u32, mut e: u32, p: u32) -> u32 {
    let (mut base, mut acc) = (u64::from(b), 1u64);
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % u64::from(p);
        }
        base = base * base % u64::from(p);
        e >>= 1;
    }
    acc as u32
}

/// `(δ, [ε₀, …, ε_m])` as residues.
type RawStructure = (Vec<u32>, Vec<Vec<u32>>);

/// All `(δ, ε₀, …, ε_m)` over `𝔽_p` on `𝔽_p^d` with `δ` coassociative,
/// `ε₀` a counit and `σ_λ` invertible for every nonzero `λ`.
///
/// Invertibility of `σ_λ` is equivalent to the existence of `I_λ` with
/// `I_λ ∘ σ_λ = id`, which then equals `σ_λ⁻¹`. Survivors carry those inverses.
pub fn brute_force_search(p: u32, d: usize, m: usize, budget: u128) -> Result<SearchOutcome> {
    let field = FieldSpec::prime(p)?;
    let exponent = (d * d * d + (m + 1) * d) as u32;
    let space = u128::from(p).checked_pow(exponent).unwrap_or(u128::MAX);
    if space > budget {
        return Err(Error::Budget { needed: space, limit: budget });
    }
    let s = Small { p, d };
    let deltas = u64::from(p).pow((d * d * d) as u32);
    let functionals: Vec<Vec<u32>> = (0..u64::from(p).pow(d as u32)).map(|i| s.digits(i, d)).collect();
    let lambdas: Vec<Vec<u32>> = (1..u64::from(p).pow(m as u32 + 1)).map(|i| s.digits(i, m + 1)).collect();

    let per_delta: Vec<(bool, Vec<RawStructure>)> = (0..deltas)
        .into_par_iter()
        .map(|idx| {
            let delta = s.digits(idx, d * d * d);
            if !s.coassociative(&delta) {
                return (false, Vec::new());
            }
            let contractions: Vec<Vec<u32>> = functionals.iter().map(|e| s.left_contract(&delta, e)).collect();
            let mut found = Vec::new();
            for (i0, e0) in functionals.iter().enumerate() {
                if !s.is_identity(&contractions[i0]) || !s.is_identity(&s.right_contract(&delta, e0)) {
                    continue;
                }
                let rest = u64::from(p).pow((m * d) as u32);
                for r in 0..rest {
                    let mut chosen = vec![i0];
                    let mut rr = r;
                    let mut tail = Vec::with_capacity(m);
                    for _ in 0..m {
                        tail.push((rr % functionals.len() as u64) as usize);
                        rr /= functionals.len() as u64;
                    }
                    tail.reverse();
                    chosen.extend(tail);
                    let ok = lambdas.iter().all(|l| {
                        let mut sig = vec![0u32; d * d];
                        for (li, &fi) in l.iter().zip(&chosen) {
                            for (o, v) in sig.iter_mut().zip(&contractions[fi]) {
                                *o = (*o + li * v) % p;
                            }
                        }
                        s.invertible(&sig)
                    });
                    if ok {
                        found.push((delta.clone(), chosen.iter().map(|&i| functionals[i].clone()).collect()));
                    }
                }
            }
            (true, found)
        })
        .collect();

    let coassociative = per_delta.iter().filter(|(c, _)| *c).count();
    let mut raw: Vec<(Vec<u32>, Vec<Vec<u32>>)> = per_delta.into_iter().flat_map(|(_, f)| f).collect();
    raw.sort();
    let to_scalars = |v: &[u32]| v.iter().map(|&x| field.from_i64(i64::from(x))).collect::<Vec<_>>();
    let lambda_scalars: Vec<_> = lambdas.iter().map(|l| to_scalars(l)).collect();
    let structures = raw
        .iter()
        .map(|(delta, eps)| {
            let delta_map = LinearMap::new(field, d * d, d, to_scalars(delta))?;
            let mut data = InsCoalgebraData::new(field, d, delta_map, eps.iter().map(|e| to_scalars(e)).collect(), None)?;
            let inv = lambda_scalars
                .iter()
                .map(|l| {
                    let sigma = super::sigma_lambda(&data, l)?;
                    let i = sigma.inverse().ok_or_else(|| Error::InvalidStructure("σ_λ lost invertibility".into()))?;
                    Ok((l.clone(), i))
                })
                .collect::<Result<Vec<_>>>()?;
            data.inv = Some(inv);
            Ok(data)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SearchOutcome {
        space,
        coassociative,
        structures,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tiny_cases_are_empty() {
        let r = brute_force_search(2, 1, 1, SEARCH_BUDGET).unwrap();
        assert_eq!(r.space, 8);
        assert!(r.structures.is_empty());
        assert!(brute_force_search(3, 1, 1, SEARCH_BUDGET).unwrap().structures.is_empty());
    }

    #[test]
    fn dimension_above_m_can_survive() {
        // 𝔽₂ itself is an Ins₀-coalgebra
        let r = brute_force_search(2, 1, 0, SEARCH_BUDGET).unwrap();
        assert_eq!(r.structures.len(), 1);
    }

    #[test]
    fn budget_is_enforced() {
        assert!(matches!(brute_force_search(2, 3, 3, SEARCH_BUDGET), Err(Error::Budget { .. })));
    }
}
