//! Dense polynomials over `𝔽_p` with coefficients stored lowest degree first.

fn trim(mut a: Vec<u32>) -> Vec<u32> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn inv_mod(a: u32, p: u32) -> u32 {
    // p is prime, so a^(p-2) is the inverse
    let (mut base, mut exp, mut acc) = (u64::from(a % p), p - 2, 1u64);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % u64::from(p);
        }
        base = base * base % u64::from(p);
        exp >>= 1;
    }
    acc as u32
}

/// Remainder of `a` modulo a nonzero `b`.
pub fn rem(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let b = trim(b.to_vec());
    assert!(!b.is_empty(), "division by the zero polynomial");
    let mut r = trim(a.to_vec());
    let lead_inv = u64::from(inv_mod(*b.last().unwrap(), p));
    while r.len() >= b.len() {
        let shift = r.len() - b.len();
        let q = u64::from(*r.last().unwrap()) * lead_inv % u64::from(p);
        for (k, &bk) in b.iter().enumerate() {
            let sub = q * u64::from(bk) % u64::from(p);
            r[shift + k] = ((u64::from(r[shift + k]) + u64::from(p) - sub) % u64::from(p)) as u32;
        }
        r = trim(r);
    }
    r
}

/// The monic polynomial of degree `k` whose lower coefficients are the base-`p`
/// digits of `index`, with `c_{k−1}` the most significant digit.
pub fn monic_from_index(index: u64, k: usize, p: u32) -> Vec<u32> {
    let mut coeffs = Vec::with_capacity(k + 1);
    let mut r = index;
    for _ in 0..k {
        coeffs.push((r % u64::from(p)) as u32);
        r /= u64::from(p);
    }
    coeffs.push(1);
    coeffs
}

pub fn is_irreducible(f: &[u32], p: u32) -> bool {
    let f = trim(f.to_vec());
    let deg = f.len().saturating_sub(1);
    if deg == 0 {
        return false;
    }
    for k in 1..=deg / 2 {
        for idx in 0..u64::from(p).pow(k as u32) {
            if rem(&f, &monic_from_index(idx, k, p), p).is_empty() {
                return false;
            }
        }
    }
    true
}

/// The first monic irreducible polynomial of degree `k` in the order of
/// [`monic_from_index`].
pub fn smallest_irreducible(k: usize, p: u32) -> Option<Vec<u32>> {
    (0..u64::from(p).checked_pow(k as u32)?)
        .map(|idx| monic_from_index(idx, k, p))
        .find(|f| is_irreducible(f, p))
}
