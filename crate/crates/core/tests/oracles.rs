//! Library results against independent brute-force computations.

use std::collections::{BTreeMap, BTreeSet};

use opcheck::field::{FieldSpec, Scalar};
use opcheck::ins::{brute_force_search, build_field_model, smallest_irreducible, subcoalgebra_generated, SEARCH_BUDGET};
use opcheck::linalg::{perm_on_tensor_power, LinearMap, Permutation};
use opcheck::operad::{build_uassoc, coend_operad, end_operad, free_algebra};
use opcheck::sanity::{check_coalgebra, cokernel_reduction, round_trip_iso, uassoc_coalgebra, PointedCoalgebra};

fn all_perms(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in all_perms(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

fn cycles(p: &[usize]) -> u32 {
    let mut seen = vec![false; p.len()];
    let mut c = 0;
    for s in 0..p.len() {
        if !seen[s] {
            c += 1;
            let mut k = s;
            while !seen[k] {
                seen[k] = true;
                k = p[k];
            }
        }
    }
    c
}

/// Orbit count of `𝔖_n` on a permutation basis, by Burnside:
/// `(1/n!) Σ_σ fix(σ)`, where `fix` is given per cycle count.
fn burnside(n: usize, fix: impl Fn(u32) -> u64) -> u64 {
    let perms = all_perms(n);
    perms.iter().map(|p| fix(cycles(p))).sum::<u64>() / perms.len() as u64
}

#[test]
fn free_algebra_dimensions_match_orbit_counts() {
    // P(n) ⊗ X^{⊗n} is a permutation module for these operads, so coinvariants
    // have one basis vector per orbit in every characteristic.
    for f in [FieldSpec::Rationals, FieldSpec::prime(2).unwrap(), FieldSpec::prime(3).unwrap()] {
        for x in 0..=3u64 {
            let u = free_algebra(&build_uassoc(f, 3).unwrap(), x as usize).unwrap();
            let want: Vec<usize> = (0..=3).map(|n| x.pow(n as u32) as usize).collect();
            assert_eq!(u.dims, want, "uassoc x={x} over {f}");
            for d in 1..=2u64 {
                // Hom(V^{⊗n}, V) ⊗ X^{⊗n}: σ fixes E_{r,c} ⊗ e_i iff c and i are constant on cycles
                let want: Vec<usize> =
                    (0..=3).map(|n| burnside(n, |c| d * d.pow(c) * x.pow(c)) as usize).collect();
                let e = free_algebra(&end_operad(d as usize, 3, f).unwrap(), x as usize).unwrap();
                assert_eq!(e.dims, want, "End({d}) x={x} over {f}");
                let want: Vec<usize> =
                    (0..=3).map(|n| burnside(n, |c| d * d.pow(c) * x.pow(c)) as usize).collect();
                let c = free_algebra(&coend_operad(d as usize, 3, f).unwrap(), x as usize).unwrap();
                assert_eq!(c.dims, want, "Coend({d}) x={x} over {f}");
            }
        }
    }
    let u = free_algebra(&build_uassoc(FieldSpec::Rationals, 3).unwrap(), 2).unwrap();
    assert_eq!(u.dims[3], 8);
}

#[test]
fn tensor_permutations_match_direct_relabelling() {
    let f = FieldSpec::prime(3).unwrap();
    for n in 1..=4 {
        for d in 1..=2usize {
            for images in all_perms(n) {
                let sigma = Permutation::new(images.clone()).unwrap();
                let l = perm_on_tensor_power(f, &sigma, d);
                // the factor in position k moves to position σ(k)
                for idx in 0..d.pow(n as u32) {
                    let digits: Vec<usize> = (0..n).map(|k| idx / d.pow((n - 1 - k) as u32) % d).collect();
                    let mut moved = vec![0; n];
                    for k in 0..n {
                        moved[images[k]] = digits[k];
                    }
                    let target = moved.iter().fold(0, |acc, &g| acc * d + g);
                    for r in 0..d.pow(n as u32) {
                        assert_eq!(l.get(r, idx).is_one(), r == target);
                    }
                }
            }
        }
    }
    // group law on all 36 pairs in 𝔖₃ with d = 2
    for a in all_perms(3) {
        for b in all_perms(3) {
            let (s, t) = (Permutation::new(a.clone()).unwrap(), Permutation::new(b).unwrap());
            let lhs = perm_on_tensor_power(f, &s.compose(&t), 2);
            let rhs = perm_on_tensor_power(f, &s, 2).compose(&perm_on_tensor_power(f, &t, 2)).unwrap();
            assert_eq!(lhs, rhs);
        }
    }
}

#[test]
fn smallest_irreducibles_have_no_roots() {
    // degree 2 and 3: irreducible iff there is no root
    for p in [2u32, 3, 5, 7] {
        for k in 2..=3usize {
            let found = smallest_irreducible(k, p).unwrap();
            let eval = |c: &[u32], t: u64| c.iter().rev().fold(0u64, |acc, &a| (acc * t + u64::from(a)) % u64::from(p));
            let mut first = None;
            'scan: for idx in 0..u64::from(p).pow(k as u32) {
                let mut c: Vec<u32> = (0..k).map(|j| (idx / u64::from(p).pow(j as u32) % u64::from(p)) as u32).collect();
                c.push(1);
                for t in 0..u64::from(p) {
                    if eval(&c, t) == 0 {
                        continue 'scan;
                    }
                }
                first = Some(c);
                break;
            }
            assert_eq!(Some(found), first, "p={p} k={k}");
        }
    }
}

#[test]
fn field_model_inverses_by_multiplication_table() {
    // 𝔽₄ = 𝔽₂[t]/(t²+t+1): every nonzero element times its claimed inverse is 1
    let model = build_field_model(2, 1).unwrap();
    assert_eq!(model.modulus, vec![1, 1, 1]);
    let f = model.field();
    let one = vec![f.one(), f.zero()];
    for lambda in model.all_lambdas() {
        let inv = model.inverse_map(&lambda).unwrap();
        let el = model.element(&lambda);
        let x = model.algebra.product(&el, &inv.apply(&one).unwrap()).unwrap();
        assert_eq!(x, one);
    }
    let t = model.inverse_map(&[f.one(), f.one()]).unwrap().apply(&one).unwrap();
    assert_eq!(t, vec![f.zero(), f.one()]);
}

fn fp_digits(mut idx: u64, p: u32, len: usize) -> Vec<u32> {
    let mut out = vec![0; len];
    for k in (0..len).rev() {
        out[k] = (idx % u64::from(p)) as u32;
        idx /= u64::from(p);
    }
    out
}

/// Direct enumeration of `(δ, ε₀, …, ε_m)` on `𝔽_p^d` for `d ≤ 2`: coassociative,
/// `ε₀` a two-sided counit, `(φ_λ ⊗ id)δ` invertible for every `λ ≠ 0`.
fn ins_oracle(p: u32, d: usize, m: usize) -> Vec<(Vec<u32>, Vec<u32>)> {
    let pm = |x: u32| x % p;
    let mut out = Vec::new();
    let n_delta = u64::from(p).pow((d * d * d) as u32);
    let n_eps = u64::from(p).pow(((m + 1) * d) as u32);
    for di in 0..n_delta {
        let delta = fp_digits(di, p, d * d * d);
        let at = |i: usize, j: usize, c: usize| delta[(i * d + j) * d + c];
        let coassoc = (0..d).all(|c| {
            (0..d).all(|i| {
                (0..d).all(|j| {
                    (0..d).all(|k| {
                        let l: u32 = (0..d).map(|a| at(a, k, c) * at(i, j, a)).sum();
                        let r: u32 = (0..d).map(|a| at(i, a, c) * at(j, k, a)).sum();
                        pm(l) == pm(r)
                    })
                })
            })
        });
        if !coassoc {
            continue;
        }
        let contract = |phi: &[u32], left: bool| -> Vec<Vec<u32>> {
            (0..d)
                .map(|j| {
                    (0..d)
                        .map(|c| pm((0..d).map(|i| phi[i] * if left { at(i, j, c) } else { at(j, i, c) }).sum()))
                        .collect()
                })
                .collect()
        };
        let is_id = |m: &Vec<Vec<u32>>| (0..d).all(|r| (0..d).all(|c| m[r][c] == u32::from(r == c)));
        let invertible = |m: &Vec<Vec<u32>>| match d {
            1 => m[0][0] != 0,
            2 => pm(m[0][0] * m[1][1] + (p - 1) * pm(m[0][1] * m[1][0])) != 0,
            _ => unreachable!(),
        };
        for ei in 0..n_eps {
            let eps = fp_digits(ei, p, (m + 1) * d);
            let e0 = &eps[..d];
            if !is_id(&contract(e0, true)) || !is_id(&contract(e0, false)) {
                continue;
            }
            let ok = (1..u64::from(p).pow(m as u32 + 1)).all(|li| {
                let lambda = fp_digits(li, p, m + 1);
                let phi: Vec<u32> = (0..d).map(|k| pm((0..=m).map(|i| lambda[i] * eps[i * d + k]).sum())).collect();
                invertible(&contract(&phi, true))
            });
            if ok {
                out.push((delta.clone(), eps));
            }
        }
    }
    out
}

fn library_tables(p: u32, d: usize, m: usize) -> Vec<(Vec<u32>, Vec<u32>)> {
    let out = brute_force_search(p, d, m, SEARCH_BUDGET).unwrap();
    out.structures
        .iter()
        .map(|s| {
            let delta: Vec<u32> = s.delta.entries().iter().map(|x| x.residue().unwrap()).collect();
            let eps: Vec<u32> = s.eps.iter().flatten().map(|x| x.residue().unwrap()).collect();
            (delta, eps)
        })
        .collect()
}

#[test]
fn search_agrees_with_direct_enumeration() {
    for (p, d, m) in [(2, 1, 0), (3, 1, 0), (5, 1, 0), (2, 1, 1), (3, 1, 1), (2, 2, 1), (2, 2, 2), (3, 2, 1)] {
        let oracle: BTreeSet<_> = ins_oracle(p, d, m).into_iter().collect();
        let lib: BTreeSet<_> = library_tables(p, d, m).into_iter().collect();
        assert_eq!(lib, oracle, "(p,d,m) = ({p},{d},{m})");
        if d == 1 && m == 0 {
            assert_eq!(lib.len(), p as usize - 1);
        }
        if d <= m {
            assert!(lib.is_empty());
        }
    }
}

#[test]
fn dual_field_model_is_found_by_search() {
    let model = build_field_model(2, 1).unwrap();
    let dual = model.dual_coalgebra(&model.all_lambdas()).unwrap();
    let delta: Vec<u32> = dual.delta.entries().iter().map(|x| x.residue().unwrap()).collect();
    let eps: Vec<u32> = dual.eps.iter().flatten().map(|x| x.residue().unwrap()).collect();
    assert!(library_tables(2, 2, 1).contains(&(delta, eps)));
}

fn f2_vectors(d: usize) -> Vec<Vec<u8>> {
    (0..1u32 << d).map(|b| (0..d).map(|k| ((b >> (d - 1 - k)) & 1) as u8).collect()).collect()
}

/// All subspaces of `𝔽₂^d` as sets of vectors.
fn f2_subspaces(d: usize) -> Vec<BTreeSet<Vec<u8>>> {
    let vs = f2_vectors(d);
    let mut out = BTreeSet::new();
    for mask in 0u64..1 << vs.len() {
        let set: BTreeSet<Vec<u8>> = (0..vs.len()).filter(|k| mask >> k & 1 == 1).map(|k| vs[k].clone()).collect();
        let closed = set.contains(&vec![0; d])
            && set.iter().all(|a| set.iter().all(|b| set.contains(&a.iter().zip(b).map(|(x, y)| x ^ y).collect::<Vec<_>>())));
        if closed {
            out.insert(set);
        }
    }
    out.into_iter().collect()
}

/// Coassociative coproducts on `𝔽₂^d`: every table for `d ≤ 2`, and for `d = 3`
/// the conjugates of a few standard ones under all of `GL₃(𝔽₂)`.
fn f2_coassociative(d: usize) -> Vec<LinearMap> {
    let f = FieldSpec::prime(2).unwrap();
    let from_bits = |bits: u64, d: usize| {
        let mut delta = LinearMap::zero(f, d * d, d);
        for r in 0..d * d {
            for c in 0..d {
                delta.set(r, c, f.from_i64(((bits >> (r * d + c)) & 1) as i64));
            }
        }
        delta
    };
    if d < 3 {
        return (0..1u64 << (d * d * d))
            .map(|b| from_bits(b, d))
            .filter(|delta| subcoalgebra_generated(delta, &vec![f.zero(); d]).is_ok())
            .collect();
    }
    let e = |i: usize, j: usize| i * 3 + j;
    let mut seeds = Vec::new();
    // group-like basis, one group-like vector, divided powers, zero
    for cols in [vec![vec![e(0, 0)], vec![e(1, 1)], vec![e(2, 2)]], vec![vec![e(0, 0)], vec![], vec![]], vec![
        vec![e(0, 0)],
        vec![e(0, 1), e(1, 0)],
        vec![e(0, 2), e(1, 1), e(2, 0)],
    ], vec![vec![], vec![], vec![]]]
    {
        let mut delta = LinearMap::zero(f, 9, 3);
        for (c, rows) in cols.iter().enumerate() {
            for &r in rows {
                delta.set(r, c, f.one());
            }
        }
        seeds.push(delta);
    }
    let mut out = BTreeSet::new();
    for bits in 0..1u64 << 9 {
        let mut a = LinearMap::zero(f, 3, 3);
        for r in 0..3 {
            for c in 0..3 {
                a.set(r, c, f.from_i64(((bits >> (r * 3 + c)) & 1) as i64));
            }
        }
        let Some(inv) = a.inverse() else { continue };
        let aa = a.tensor(&a).unwrap();
        for s in &seeds {
            let conj = aa.compose(s).unwrap().compose(&inv).unwrap();
            out.insert(conj.entries().iter().map(|x| x.residue().unwrap()).collect::<Vec<_>>());
        }
    }
    out.into_iter()
        .map(|v| LinearMap::new(f, 9, 3, v.into_iter().map(|x| f.from_i64(i64::from(x))).collect()).unwrap())
        .collect()
}

#[test]
fn generated_subcoalgebras_are_smallest_stable_subspaces() {
    let f = FieldSpec::prime(2).unwrap();
    for d in 1..=3usize {
        let subspaces = f2_subspaces(d);
        let vectors = f2_vectors(d);
        let all = f2_coassociative(d);
        assert!(!all.is_empty());
        for delta in &all {
            let table: Vec<u8> = delta.entries().iter().map(|x| x.residue().unwrap() as u8).collect();
            let apply = |v: &[u8]| -> Vec<u8> {
                (0..d * d).map(|r| (0..d).map(|c| table[r * d + c] & v[c]).fold(0, |a, b| a ^ b)).collect()
            };
            let stable: Vec<&BTreeSet<Vec<u8>>> = subspaces
                .iter()
                .filter(|w| {
                    let tensors: BTreeSet<Vec<u8>> = w
                        .iter()
                        .flat_map(|a| w.iter().map(move |b| a.iter().flat_map(|x| b.iter().map(move |y| x & y)).collect()))
                        .collect();
                    let span = span_f2(&tensors);
                    w.iter().all(|v| span.contains(&apply(v)))
                })
                .collect();
            for y in &vectors {
                let ys: Vec<Scalar> = y.iter().map(|&b| f.from_i64(i64::from(b))).collect();
                let w = subcoalgebra_generated(delta, &ys).unwrap();
                let smallest = stable.iter().filter(|s| s.contains(y)).min_by_key(|s| s.len()).unwrap();
                assert_eq!(1usize << w.dim(), smallest.len(), "d={d} δ={table:?} y={y:?}");
                for v in smallest.iter() {
                    let vs: Vec<Scalar> = v.iter().map(|&b| f.from_i64(i64::from(b))).collect();
                    assert!(w.contains(&vs));
                }
            }
        }
    }
}

fn span_f2(gens: &BTreeSet<Vec<u8>>) -> BTreeSet<Vec<u8>> {
    let mut span: BTreeSet<Vec<u8>> = BTreeSet::new();
    if let Some(g) = gens.iter().next() {
        span.insert(vec![0; g.len()]);
    }
    for g in gens {
        let add: Vec<Vec<u8>> = span.iter().map(|s| s.iter().zip(g).map(|(a, b)| a ^ b).collect()).collect();
        span.extend(add);
    }
    span
}

#[test]
fn grouplike_plane_pointed_at_first_vector() {
    // 𝕂² with δ(e_i) = e_i ⊗ e_i, ε = (1, 1), pointed by e_1: the cokernel is a
    // line spanned by the image of e_2 with δ̄(v) = v ⊗ v
    let q = FieldSpec::Rationals;
    let p = build_uassoc(q, 3).unwrap();
    let delta = LinearMap::from_i64(q, 2, &[&[1, 0], &[0, 0], &[0, 0], &[0, 1]]).unwrap();
    let eps = LinearMap::from_i64(q, 2, &[&[1, 1]]).unwrap();
    let v = uassoc_coalgebra(&p, &delta, Some(&eps)).unwrap();
    assert!(check_coalgebra(&v).unwrap().passed());
    let vp = PointedCoalgebra::new(v, LinearMap::from_i64(q, 1, &[&[1], &[0]]).unwrap()).unwrap();
    let vbar = cokernel_reduction(&vp).unwrap();
    assert_eq!(vbar.dim(), 1);
    assert!(check_coalgebra(&vbar).unwrap().passed());
    let mu = vbar.block(2, 0);
    assert_eq!(mu.entries(), &[q.one()]);
    let (_, _, iso) = round_trip_iso(&vp).unwrap();
    assert!(iso.passed(), "{:?}", iso.failures);
    // a non-group-like vector is not a valid pointing
    let bad = LinearMap::from_i64(q, 1, &[&[1], &[1]]).unwrap();
    let v = uassoc_coalgebra(&p, &delta, Some(&eps)).unwrap();
    assert!(PointedCoalgebra::new(v, bad).is_err());
}

#[test]
fn uassoc_operad_composition_by_word_substitution() {
    // ∘_i on words: replace letter i by the block of the inner word, shifting letters
    let q = FieldSpec::Rationals;
    let p = build_uassoc(q, 4).unwrap();
    let words = |n: usize| all_perms(n).into_iter().collect::<BTreeSet<_>>().into_iter().collect::<Vec<_>>();
    for m in 1..=3 {
        for n in 1..=4 - m + 1 {
            if m + n - 1 > 4 {
                continue;
            }
            let (wm, wn, wt) = (words(m), words(n), words(m + n - 1));
            let index: BTreeMap<&Vec<usize>, usize> = wt.iter().enumerate().map(|(k, w)| (w, k)).collect();
            for i in 1..=m {
                for (a, u) in wm.iter().enumerate() {
                    for (b, v) in wn.iter().enumerate() {
                        let mut out = Vec::new();
                        for &letter in u {
                            match letter.cmp(&(i - 1)) {
                                std::cmp::Ordering::Less => out.push(letter),
                                std::cmp::Ordering::Equal => out.extend(v.iter().map(|&l| l + i - 1)),
                                std::cmp::Ordering::Greater => out.push(letter + n - 1),
                            }
                        }
                        let got = p.compose(m, n, i, &p.basis(m, a), &p.basis(n, b)).unwrap();
                        assert_eq!(got, p.basis(m + n - 1, index[&out]), "{u:?} ∘_{i} {v:?}");
                    }
                }
            }
        }
    }
}
