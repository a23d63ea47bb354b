//! Canonical operads: unit, unital associative, algebras in arity one,
//! endomorphism and coendomorphism operads.

use std::collections::{BTreeMap, HashMap};

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::linalg::{checked_pow, flat_index, multi_index, LinearMap, Permutation};

use super::algebra::{Algebra, LeftModule};
use super::truncated::{composition_keys, TruncatedOperad};

/// Largest `d^{N+1}` accepted by the (co)endomorphism builders.
pub const ENDO_GUARD: usize = 4096;

/// Largest arity accepted by [`build_uassoc`].
pub const UASSOC_MAX_ARITY: usize = 6;

fn require_unit_arity(max_arity: usize) -> Result<()> {
    if max_arity < 1 {
        return Err(Error::InvalidOperad("maximal arity must be at least 1".into()));
    }
    Ok(())
}

/// Assembles an operad whose actions and compositions send basis elements to
/// basis elements (or zero).
fn monomial_operad(
    field: FieldSpec,
    max_arity: usize,
    dims: Vec<usize>,
    unit: Vec<Scalar>,
    act: impl Fn(usize, usize, usize) -> usize,
    comp: impl Fn(usize, usize, usize, usize, usize) -> Option<usize>,
) -> Result<TruncatedOperad> {
    let mut action = BTreeMap::new();
    for n in 2..=max_arity {
        let gens = (0..n - 1)
            .map(|k| {
                let mut m = LinearMap::zero(field, dims[n], dims[n]);
                for b in 0..dims[n] {
                    m.set(act(n, k, b), b, field.one());
                }
                m
            })
            .collect();
        action.insert(n, gens);
    }
    let mut pcomp = BTreeMap::new();
    for (m, n, i) in composition_keys(max_arity) {
        let mut c = LinearMap::zero(field, dims[m + n - 1], dims[m] * dims[n]);
        for a in 0..dims[m] {
            for b in 0..dims[n] {
                if let Some(r) = comp(m, n, i, a, b) {
                    c.set(r, a * dims[n] + b, field.one());
                }
            }
        }
        pcomp.insert((m, n, i), c);
    }
    TruncatedOperad::new(field, max_arity, dims, unit, action, pcomp)
}

/// The unit operad: `P(1) = 𝕂`, every other arity zero.
pub fn build_unit_operad(field: FieldSpec, max_arity: usize) -> Result<TruncatedOperad> {
    require_unit_arity(max_arity)?;
    let mut dims = vec![0; max_arity + 1];
    dims[1] = 1;
    monomial_operad(field, max_arity, dims, vec![field.one()], |_, _, b| b, |m, n, _, _, _| {
        (m == 1 && n == 1).then_some(0)
    })
}

/// Basis words of `uA(n) = 𝕂[𝔖_n]`: all orderings of the inputs `0..n`, lexicographic.
///
/// The word `w` stands for the operation `x ↦ x_{w₁} x_{w₂} ⋯ x_{wₙ}`.
pub fn uassoc_words(n: usize) -> Vec<Vec<usize>> {
    Permutation::all(n).into_iter().map(|p| p.images().to_vec()).collect()
}

/// The unital associative operad up to arity `N ≤ 6`.
///
/// `uA(0) = 𝕂` (the empty word, i.e. the unit of an algebra) and
/// `uA(n) = 𝕂[𝔖_n]` on words. A transposition `s_k` relabels the letters
/// `k ↔ k+1`; `w ∘_i u` substitutes the shifted word `u` for the letter `i`
/// and shifts the larger letters, so composing with the empty word deletes
/// the letter and standardizes.
pub fn build_uassoc(field: FieldSpec, max_arity: usize) -> Result<TruncatedOperad> {
    require_unit_arity(max_arity)?;
    if max_arity > UASSOC_MAX_ARITY {
        return Err(Error::SizeGuard {
            what: "uassoc arity".into(),
            needed: max_arity as u128,
            limit: UASSOC_MAX_ARITY as u128,
        });
    }
    let words: Vec<Vec<Vec<usize>>> = (0..=max_arity).map(uassoc_words).collect();
    let index: Vec<HashMap<Vec<usize>, usize>> = words
        .iter()
        .map(|ws| ws.iter().enumerate().map(|(k, w)| (w.clone(), k)).collect())
        .collect();
    let dims = words.iter().map(Vec::len).collect();
    let act = |n: usize, k: usize, b: usize| {
        let w: Vec<usize> = words[n][b]
            .iter()
            .map(|&x| if x == k { k + 1 } else if x == k + 1 { k } else { x })
            .collect();
        index[n][&w]
    };
    let comp = |m: usize, n: usize, i: usize, a: usize, b: usize| {
        let slot = i - 1;
        let mut w = Vec::with_capacity(m + n - 1);
        for &x in &words[m][a] {
            if x == slot {
                w.extend(words[n][b].iter().map(|&y| y + slot));
            } else if x > slot {
                w.push(x + n - 1);
            } else {
                w.push(x);
            }
        }
        Some(index[m + n - 1][&w])
    };
    monomial_operad(field, max_arity, dims, vec![field.one()], act, comp)
}

/// The operad with `P(1) = A` and nothing else.
pub fn build_from_algebra(algebra: &Algebra) -> Result<TruncatedOperad> {
    build_arity01(algebra, None)
}

/// The operad with `P(1) = A` and constants `P(0) = W` for a left `A`-module `W`.
///
/// `a ∘₁ b = ab` and `a ∘₁ w = a·w`.
pub fn build_arity01(algebra: &Algebra, constants: Option<&LeftModule>) -> Result<TruncatedOperad> {
    let field = algebra.field();
    let a = algebra.dim();
    let w = constants.map_or(0, |m| m.dim);
    let mut pcomp = BTreeMap::new();
    pcomp.insert(
        (1, 0, 1),
        constants.map_or_else(|| LinearMap::zero(field, 0, 0), |m| m.action.clone()),
    );
    pcomp.insert((1, 1, 1), algebra.mult().clone());
    TruncatedOperad::new(field, 1, vec![w, a], algebra.unit().to_vec(), BTreeMap::new(), pcomp)
}

fn endo_dims(d: usize, max_arity: usize) -> Result<Vec<usize>> {
    if d == 0 {
        return Err(Error::InvalidOperad("the zero space has no unit in arity one".into()));
    }
    let guard = checked_pow(d, max_arity + 1).filter(|&s| s <= ENDO_GUARD);
    if guard.is_none() {
        return Err(Error::SizeGuard {
            what: format!("d^(N+1) for d = {d}, N = {max_arity}"),
            needed: (d as u128).saturating_pow(max_arity as u32 + 1),
            limit: ENDO_GUARD as u128,
        });
    }
    Ok((0..=max_arity).map(|n| d.pow(n as u32) * d).collect())
}

fn swap_digits(idx: usize, d: usize, n: usize, k: usize) -> usize {
    let mut digits = multi_index(idx, d, n);
    digits.swap(k, k + 1);
    flat_index(&digits, d)
}

/// `Coend(V)(n) = Hom(V, V^{⊗n})` for `dim V = d`.
///
/// Basis: matrix units `E_{r,c}` of shape `dⁿ × d`, flattened as `r·d + c`.
/// `σ` acts by post-composition with the permutation of tensor factors,
/// and `f ∘_i g = (id^{⊗(i−1)} ⊗ g ⊗ id^{⊗(m−i)}) ∘ f`.
pub fn coend_operad(d: usize, max_arity: usize, field: FieldSpec) -> Result<TruncatedOperad> {
    require_unit_arity(max_arity)?;
    let dims = endo_dims(d, max_arity)?;
    let unit = (0..d * d).map(|k| if k / d == k % d { field.one() } else { field.zero() }).collect();
    let act = |n: usize, k: usize, b: usize| {
        let (r, c) = (b / d, b % d);
        swap_digits(r, d, n, k) * d + c
    };
    let comp = |m: usize, n: usize, i: usize, a: usize, b: usize| {
        let (r, c) = (multi_index(a / d, d, m), a % d);
        let (r2, c2) = (multi_index(b / d, d, n), b % d);
        if r[i - 1] != c2 {
            return None;
        }
        let mut row = r[..i - 1].to_vec();
        row.extend_from_slice(&r2);
        row.extend_from_slice(&r[i..]);
        Some(flat_index(&row, d) * d + c)
    };
    monomial_operad(field, max_arity, dims, unit, act, comp)
}

/// `End(V)(n) = Hom(V^{⊗n}, V)` for `dim V = d`.
///
/// Basis: matrix units `E_{r,c}` of shape `d × dⁿ`, flattened as `r·dⁿ + c`.
/// `σ` acts by pre-composition, and `f ∘_i g = f ∘ (id^{⊗(i−1)} ⊗ g ⊗ id^{⊗(m−i)})`.
pub fn end_operad(d: usize, max_arity: usize, field: FieldSpec) -> Result<TruncatedOperad> {
    require_unit_arity(max_arity)?;
    let dims = endo_dims(d, max_arity)?;
    let unit = (0..d * d).map(|k| if k / d == k % d { field.one() } else { field.zero() }).collect();
    let act = |n: usize, k: usize, b: usize| {
        let dn = d.pow(n as u32);
        let (r, c) = (b / dn, b % dn);
        r * dn + swap_digits(c, d, n, k)
    };
    let comp = |m: usize, n: usize, i: usize, a: usize, b: usize| {
        let (dm, dn) = (d.pow(m as u32), d.pow(n as u32));
        let (r, c) = (a / dm, multi_index(a % dm, d, m));
        let (r2, c2) = (b / dn, multi_index(b % dn, d, n));
        if c[i - 1] != r2 {
            return None;
        }
        let mut col = c[..i - 1].to_vec();
        col.extend_from_slice(&c2);
        col.extend_from_slice(&c[i..]);
        Some(r * d.pow((m + n - 1) as u32) + flat_index(&col, d))
    };
    monomial_operad(field, max_arity, dims, unit, act, comp)
}
