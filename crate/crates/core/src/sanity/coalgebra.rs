//! Coalgebras over a truncated operad as explicit structure maps `P(n) ⊗ V → V^{⊗n}`.

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::linalg::{checked_pow, flat_index, multi_index, perm_on_tensor_power, LinearMap, Permutation};
use crate::operad::{composition_keys, coend_operad, uassoc_words, OperadMorphism, TruncatedOperad};
use crate::report::CheckReport;

/// Largest `d^N` accepted for a coalgebra carrier.
pub const COALGEBRA_GUARD: usize = 4096;

/// A `P`-coalgebra: `maps[n]` is `P(n) ⊗ V → V^{⊗n}`, column `p·d + v` being
/// `ρ(e_p)(e_v)`. Equivalently an operad morphism `P → Coend(V)`, so
/// `ρ(p·σ) = L(σ⁻¹) ∘ ρ(p)` and `ρ(p ∘_i q) = (id^{⊗(i−1)} ⊗ ρ(q) ⊗ id) ∘ ρ(p)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoalgebraOverOperad {
    operad: TruncatedOperad,
    dim: usize,
    maps: Vec<LinearMap>,
}

fn guard(d: usize, n: usize) -> Result<usize> {
    checked_pow(d, n).filter(|&s| s <= COALGEBRA_GUARD).ok_or_else(|| Error::SizeGuard {
        what: format!("d^N for d = {d}, N = {n}"),
        needed: (d as u128).saturating_pow(n as u32),
        limit: COALGEBRA_GUARD as u128,
    })
}

impl CoalgebraOverOperad {
    /// Checks shapes only; [`check_coalgebra`] decides validity.
    pub fn new(operad: TruncatedOperad, dim: usize, maps: Vec<LinearMap>) -> Result<Self> {
        guard(dim, operad.max_arity())?;
        if maps.len() != operad.max_arity() + 1 {
            return Err(Error::dims("one structure map per arity 0..=N is required"));
        }
        for (n, m) in maps.iter().enumerate() {
            let want = (dim.pow(n as u32), operad.dim(n) * dim);
            if (m.cod(), m.dom()) != want || m.field() != operad.field() {
                return Err(Error::dims(format!(
                    "structure map in arity {n} must be {}x{}, got {}x{}",
                    want.0,
                    want.1,
                    m.cod(),
                    m.dom()
                )));
            }
        }
        Ok(CoalgebraOverOperad { operad, dim, maps })
    }

    /// Assembles the structure from `blocks[n][p] = ρ(e_p) : V → V^{⊗n}`.
    pub fn from_blocks(operad: TruncatedOperad, dim: usize, blocks: Vec<Vec<LinearMap>>) -> Result<Self> {
        let field = operad.field();
        let maps = blocks
            .iter()
            .enumerate()
            .map(|(n, bs)| {
                let rows = dim.pow(n as u32);
                let mut m = LinearMap::zero(field, rows, bs.len() * dim);
                for (p, b) in bs.iter().enumerate() {
                    if (b.cod(), b.dom()) != (rows, dim) {
                        return Err(Error::dims(format!("ρ(e_{p}) in arity {n} must be {rows}x{dim}")));
                    }
                    for r in 0..rows {
                        for c in 0..dim {
                            m.set(r, p * dim + c, b.get(r, c).clone());
                        }
                    }
                }
                Ok(m)
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(operad, dim, maps)
    }

    /// The zero coalgebra.
    pub fn zero(operad: &TruncatedOperad) -> Self {
        let maps = (0..=operad.max_arity())
            .map(|n| LinearMap::zero(operad.field(), usize::from(n == 0), 0))
            .collect();
        CoalgebraOverOperad {
            operad: operad.clone(),
            dim: 0,
            maps,
        }
    }

    pub fn operad(&self) -> &TruncatedOperad {
        &self.operad
    }

    pub fn field(&self) -> FieldSpec {
        self.operad.field()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn maps(&self) -> &[LinearMap] {
        &self.maps
    }

    /// `ρ(e_p) : V → V^{⊗n}`.
    pub fn block(&self, n: usize, p: usize) -> LinearMap {
        self.maps[n].column_block(p * self.dim, self.dim)
    }

    /// `ρ(x)` for an arbitrary `x ∈ P(n)`.
    pub fn rho(&self, n: usize, x: &[Scalar]) -> Result<LinearMap> {
        let mut acc = LinearMap::zero(self.field(), self.dim.pow(n as u32), self.dim);
        for (p, c) in x.iter().enumerate() {
            if !c.is_zero() {
                acc = acc.add(&self.block(n, p).scale(c))?;
            }
        }
        Ok(acc)
    }

    /// The same structure maps read as an operad morphism `P → Coend(V)`.
    pub fn to_coend_morphism(&self) -> Result<OperadMorphism> {
        let n_max = self.operad.max_arity();
        let target = coend_operad(self.dim, n_max, self.field())?;
        let components = (0..=n_max)
            .map(|n| {
                let cols = (0..self.operad.dim(n)).map(|p| self.block(n, p).entries().to_vec()).collect::<Vec<_>>();
                LinearMap::from_columns(self.field(), target.dim(n), &cols)
            })
            .collect::<Result<Vec<_>>>()?;
        OperadMorphism::new(self.operad.clone(), target, components)
    }

    /// `V ⊕ V′` with both structures acting blockwise.
    pub fn direct_sum(&self, other: &CoalgebraOverOperad) -> Result<Self> {
        if self.operad != other.operad {
            return Err(Error::dims("direct sum needs a common operad"));
        }
        let d = self.dim + other.dim;
        let inc_a = LinearMap::identity(self.field(), d).column_block(0, self.dim);
        let inc_b = LinearMap::identity(self.field(), d).column_block(self.dim, other.dim);
        let blocks = (0..=self.operad.max_arity())
            .map(|n| {
                (0..self.operad.dim(n))
                    .map(|p| {
                        let a = inc_a.tensor_power(n)?.compose(&self.block(n, p))?;
                        let b = inc_b.tensor_power(n)?.compose(&other.block(n, p))?;
                        let mut m = LinearMap::zero(self.field(), d.pow(n as u32), d);
                        for r in 0..m.cod() {
                            for c in 0..self.dim {
                                m.set(r, c, a.get(r, c).clone());
                            }
                            for c in 0..other.dim {
                                m.set(r, self.dim + c, b.get(r, c).clone());
                            }
                        }
                        Ok(m)
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_blocks(self.operad.clone(), d, blocks)
    }

    /// Transports the structure along an isomorphism `T : V → V′`.
    pub fn conjugate(&self, t: &LinearMap) -> Result<Self> {
        let t_inv = t.inverse().ok_or_else(|| Error::InvalidStructure("conjugating map is not invertible".into()))?;
        let blocks = (0..=self.operad.max_arity())
            .map(|n| {
                (0..self.operad.dim(n))
                    .map(|p| t.tensor_power(n)?.compose(&self.block(n, p))?.compose(&t_inv))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_blocks(self.operad.clone(), self.dim, blocks)
    }

    pub fn to_json(&self) -> Value {
        serde_json::to_value(CoalgebraJson {
            operad: self.operad.to_json(),
            dim: self.dim,
            maps: self.maps.clone(),
        })
        .expect("coalgebra serializes")
    }

    pub fn from_json(v: Value) -> Result<Self> {
        let raw: CoalgebraJson = serde_json::from_value(v)?;
        Self::new(TruncatedOperad::from_json(raw.operad)?, raw.dim, raw.maps)
    }
}

/// Wire form: `{"operad": <operad>, "dim": d, "maps": [matrix for arity 0, 1, …]}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CoalgebraJson {
    pub operad: Value,
    pub dim: usize,
    pub maps: Vec<LinearMap>,
}

/// Replaces tensor factor `slot` of `v ∈ V^{⊗m}` by `g : V → V^{⊗n}`.
pub(crate) fn insert_at(v: &[Scalar], d: usize, m: usize, slot: usize, g: &LinearMap, n: usize) -> Vec<Scalar> {
    let field = g.field();
    let mut out = vec![field.zero(); d.pow((m + n - 1) as u32)];
    for (idx, c) in v.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let digits = multi_index(idx, d, m);
        for r in 0..g.cod() {
            let e = g.get(r, digits[slot]);
            if e.is_zero() {
                continue;
            }
            let mut o = digits[..slot].to_vec();
            o.extend(multi_index(r, d, n));
            o.extend_from_slice(&digits[slot + 1..]);
            let k = flat_index(&o, d);
            out[k] = &out[k] + &(c * e);
        }
    }
    out
}

/// Checks the unit, equivariance under adjacent transpositions, and
/// compatibility with every defined `∘_i` on basis elements.
pub fn check_coalgebra(c: &CoalgebraOverOperad) -> Result<CheckReport> {
    let p = &c.operad;
    let (field, d) = (c.field(), c.dim);
    let mut report = CheckReport::new();
    let unit = c.rho(1, p.unit())?;
    report.record(unit.is_identity(), || "ρ(1) = id".into(), || json!({}));
    for n in 2..=p.max_arity() {
        for (k, s) in p.transpositions(n).iter().enumerate() {
            let lhs = c.maps[n].compose(&s.tensor(&LinearMap::identity(field, d))?)?;
            let rhs = perm_on_tensor_power(field, &Permutation::adjacent(n, k), d).compose(&c.maps[n])?;
            report.record(
                lhs == rhs,
                || format!("ρ(p·s{k}) = L(s{k})∘ρ(p) (n={n})"),
                || json!({"arity": n, "transposition": k, "column": (0..lhs.dom()).find(|&j| lhs.column(j) != rhs.column(j))}),
            );
        }
    }
    for (m, n, i) in composition_keys(p.max_arity()) {
        for a in 0..p.dim(m) {
            let ra = c.block(m, a);
            for b in 0..p.dim(n) {
                let rb = c.block(n, b);
                let lhs = c.rho(m + n - 1, &p.compose(m, n, i, &p.basis(m, a), &p.basis(n, b))?)?;
                let ok = (0..d).all(|v| insert_at(&ra.column(v), d, m, i - 1, &rb, n) == lhs.column(v));
                report.record(
                    ok,
                    || format!("ρ(p∘_{i}q) = (id⊗ρ(q)⊗id)∘ρ(p)"),
                    || json!({"arities": [m, n], "slot": i, "basis": [a, b]}),
                );
            }
        }
    }
    Ok(report)
}

/// Iterated coproduct `Δ^{(n)} : V → V^{⊗n}` with `Δ^{(0)} = ε`, `Δ^{(1)} = id`.
fn iterated_coproduct(delta: &LinearMap, eps: Option<&LinearMap>, n: usize) -> Result<LinearMap> {
    let field = delta.field();
    let d = delta.dom();
    match n {
        0 => eps.cloned().ok_or_else(|| Error::NotApplicable("arity 0 needs a counit".into())),
        1 => Ok(LinearMap::identity(field, d)),
        _ => {
            let prev = iterated_coproduct(delta, eps, n - 1)?;
            delta.tensor(&LinearMap::identity(field, d.pow((n - 2) as u32)))?.compose(&prev)
        }
    }
}

/// A coassociative coalgebra `(V, δ, ε)` as a coalgebra over `uassoc` (or over
/// its reduced part when `ε` is absent): the word `w` acts by
/// `L(σ⁻¹) ∘ Δ^{(n)}` with `σ(w_k) = k`.
pub fn uassoc_coalgebra(
    operad: &TruncatedOperad,
    delta: &LinearMap,
    eps: Option<&LinearMap>,
) -> Result<CoalgebraOverOperad> {
    let d = delta.dom();
    if (delta.cod(), eps.map(|e| (e.cod(), e.dom()))) != (d * d, eps.map(|_| (1, d))) {
        return Err(Error::dims("δ must be d²×d and ε 1×d"));
    }
    let field = operad.field();
    let blocks = (0..=operad.max_arity())
        .map(|n| {
            if operad.dim(n) == 0 {
                return Ok(Vec::new());
            }
            let base = iterated_coproduct(delta, eps, n)?;
            uassoc_words(n)
                .into_iter()
                .map(|w| {
                    let mut sigma = vec![0; n];
                    for (k, &letter) in w.iter().enumerate() {
                        sigma[letter] = k;
                    }
                    let sigma = Permutation::new(sigma)?;
                    perm_on_tensor_power(field, &sigma.inverse(), d).compose(&base)
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    CoalgebraOverOperad::from_blocks(operad.clone(), d, blocks)
}

/// A right `A`-module over the operad `P` with `P(1) = A` (`ρ(ab) = ρ(b)ρ(a)`),
/// with optional functionals `ρ(w) : V → 𝕂` for a basis of `P(0)`.
pub fn arity01_coalgebra(
    operad: &TruncatedOperad,
    dim: usize,
    action: Vec<LinearMap>,
    constants: Vec<LinearMap>,
) -> Result<CoalgebraOverOperad> {
    if operad.max_arity() != 1 {
        return Err(Error::NotApplicable("operad must be concentrated in arities 0 and 1".into()));
    }
    CoalgebraOverOperad::from_blocks(operad.clone(), dim, vec![constants, action])
}
