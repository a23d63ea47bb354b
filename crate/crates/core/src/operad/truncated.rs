use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::linalg::{tensor_vectors, LinearMap, Permutation};

/// An operad truncated at a maximal arity `N`, stored as explicit linear data.
///
/// * `dims[n]` is the dimension of `P(n)` for `0 ≤ n ≤ N`.
/// * `action[n][k]` is the matrix of the adjacent transposition swapping
///   inputs `k` and `k+1` (0-based), acting on the right: `p·s = action[n][k]·p`.
/// * `pcomp[(m, n, i)]` is `∘_i : P(m) ⊗ P(n) → P(m+n−1)` with `1 ≤ i ≤ m`,
///   present exactly when `m ≥ 1` and `m + n − 1 ≤ N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedOperad {
    field: FieldSpec,
    max_arity: usize,
    dims: Vec<usize>,
    unit: Vec<Scalar>,
    action: BTreeMap<usize, Vec<LinearMap>>,
    pcomp: BTreeMap<(usize, usize, usize), LinearMap>,
}

/// Keys `(m, n, i)` of every partial composition defined under truncation `n_max`.
pub fn composition_keys(n_max: usize) -> impl Iterator<Item = (usize, usize, usize)> {
    (1..=n_max).flat_map(move |m| {
        (0..=n_max + 1 - m).flat_map(move |n| (1..=m).map(move |i| (m, n, i)))
    })
}

impl TruncatedOperad {
    pub fn new(
        field: FieldSpec,
        max_arity: usize,
        dims: Vec<usize>,
        unit: Vec<Scalar>,
        action: BTreeMap<usize, Vec<LinearMap>>,
        pcomp: BTreeMap<(usize, usize, usize), LinearMap>,
    ) -> Result<Self> {
        let op = TruncatedOperad {
            field,
            max_arity,
            dims,
            unit,
            action,
            pcomp,
        };
        op.validate()?;
        Ok(op)
    }

    fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidOperad(m));
        self.field.validate()?;
        if self.max_arity < 1 {
            return bad("maximal arity must be at least 1".into());
        }
        if self.dims.len() != self.max_arity + 1 {
            return bad(format!("{} dims for N = {}", self.dims.len(), self.max_arity));
        }
        if self.unit.len() != self.dims[1] || self.unit.iter().all(Scalar::is_zero) {
            return bad("unit must be a nonzero vector of P(1)".into());
        }
        if self.unit.iter().any(|s| !self.field.contains(s)) {
            return Err(Error::FieldMismatch(self.field, self.unit[0].field()));
        }
        let expected: Vec<usize> = (2..=self.max_arity).collect();
        if self.action.keys().copied().collect::<Vec<_>>() != expected {
            return bad("action must list transpositions for every arity 2..=N".into());
        }
        for (&n, gens) in &self.action {
            if gens.len() != n - 1 {
                return bad(format!("arity {n} needs {} transpositions", n - 1));
            }
            let d = self.dims[n];
            for g in gens {
                if (g.cod(), g.dom()) != (d, d) || g.field() != self.field {
                    return bad(format!("transposition for arity {n} must be {d}x{d}"));
                }
            }
            self.check_coxeter(n, gens)?;
        }
        let keys: Vec<_> = composition_keys(self.max_arity).collect();
        if self.pcomp.keys().copied().collect::<Vec<_>>() != {
            let mut k = keys.clone();
            k.sort();
            k
        } {
            return bad("pcomp must contain exactly the compositions defined under truncation".into());
        }
        for &(m, n, i) in &keys {
            let c = &self.pcomp[&(m, n, i)];
            let (cod, dom) = (self.dims[m + n - 1], self.dims[m] * self.dims[n]);
            if (c.cod(), c.dom()) != (cod, dom) || c.field() != self.field {
                return bad(format!("∘_{i} on ({m},{n}) must be {cod}x{dom}"));
            }
        }
        Ok(())
    }

    fn check_coxeter(&self, n: usize, gens: &[LinearMap]) -> Result<()> {
        let id = LinearMap::identity(self.field, self.dims[n]);
        for (a, sa) in gens.iter().enumerate() {
            for (b, sb) in gens.iter().enumerate() {
                let order = match a.abs_diff(b) {
                    0 => 1,
                    1 => 3,
                    _ => 2,
                };
                let prod = sa.compose(sb)?;
                let mut acc = LinearMap::identity(self.field, self.dims[n]);
                for _ in 0..order {
                    acc = acc.compose(&prod)?;
                }
                if acc != id {
                    return Err(Error::InvalidOperad(format!(
                        "arity {n}: transpositions s{a}, s{b} violate the Coxeter relation"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn max_arity(&self) -> usize {
        self.max_arity
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim(&self, n: usize) -> usize {
        self.dims[n]
    }

    pub fn unit(&self) -> &[Scalar] {
        &self.unit
    }

    pub fn transpositions(&self, n: usize) -> &[LinearMap] {
        self.action.get(&n).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn pcomp(&self, m: usize, n: usize, i: usize) -> Option<&LinearMap> {
        self.pcomp.get(&(m, n, i))
    }

    pub fn compositions(&self) -> impl Iterator<Item = (&(usize, usize, usize), &LinearMap)> {
        self.pcomp.iter()
    }

    pub fn basis(&self, n: usize, k: usize) -> Vec<Scalar> {
        crate::linalg::basis_vector(self.field, self.dims[n], k)
    }

    /// `x ∘_i y` for `x ∈ P(m)`, `y ∈ P(n)`; `i` is 1-based.
    pub fn compose(&self, m: usize, n: usize, i: usize, x: &[Scalar], y: &[Scalar]) -> Result<Vec<Scalar>> {
        let c = self.pcomp(m, n, i).ok_or_else(|| {
            Error::NotApplicable(format!("∘_{i} on arities ({m},{n}) is not defined at N = {}", self.max_arity))
        })?;
        c.apply(&tensor_vectors(x, y))
    }

    /// Right action of an adjacent transposition `s_k` on `x ∈ P(n)`.
    pub fn act_adjacent(&self, n: usize, k: usize, x: &[Scalar]) -> Result<Vec<Scalar>> {
        self.transpositions(n)
            .get(k)
            .ok_or_else(|| Error::dims(format!("no transposition s{k} in arity {n}")))?
            .apply(x)
    }

    /// Right action `x·σ`.
    pub fn act(&self, n: usize, sigma: &Permutation, x: &[Scalar]) -> Result<Vec<Scalar>> {
        if sigma.degree() != n {
            return Err(Error::dims(format!("permutation of degree {} on arity {n}", sigma.degree())));
        }
        let mut v = x.to_vec();
        for k in sigma.adjacent_word() {
            v = self.act_adjacent(n, k, &v)?;
        }
        Ok(v)
    }

    /// Matrix `R(σ)` with `x·σ = R(σ)·x`.
    pub fn action_matrix(&self, n: usize, sigma: &Permutation) -> Result<LinearMap> {
        let mut m = LinearMap::identity(self.field, self.dims[n]);
        for k in sigma.adjacent_word() {
            m = self.transpositions(n)[k].compose(&m)?;
        }
        Ok(m)
    }

    /// The maximal reduced suboperad: `P(0)` replaced by `0`, everything else kept.
    pub fn reduced(&self) -> TruncatedOperad {
        let mut out = self.clone();
        out.dims[0] = 0;
        for (&(m, n, _), c) in out.pcomp.iter_mut() {
            if n == 0 {
                *c = LinearMap::zero(self.field, out.dims[m + n - 1], out.dims[m] * out.dims[n]);
            }
        }
        out
    }

    pub fn is_reduced(&self) -> bool {
        self.dims[0] == 0
    }

    /// Whether the operad is concentrated in arities 0 and 1.
    pub fn is_arity01(&self) -> bool {
        self.dims.iter().skip(2).all(|&d| d == 0)
    }

    pub fn to_json(&self) -> Value {
        serde_json::to_value(OperadJson::from(self)).expect("operad serializes")
    }

    pub fn from_json(v: Value) -> Result<Self> {
        let raw: OperadJson = serde_json::from_value(v)?;
        raw.try_into()
    }
}

/// Wire form: `{"field","N","dims","unit","action":{"n":[…]},"pcomp":{"m,n,i":…}}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct OperadJson {
    pub field: FieldSpec,
    #[serde(rename = "N")]
    pub max_arity: usize,
    pub dims: Vec<usize>,
    pub unit: Vec<Value>,
    pub action: BTreeMap<String, Vec<LinearMap>>,
    pub pcomp: BTreeMap<String, LinearMap>,
}

impl From<&TruncatedOperad> for OperadJson {
    fn from(p: &TruncatedOperad) -> Self {
        OperadJson {
            field: p.field,
            max_arity: p.max_arity,
            dims: p.dims.clone(),
            unit: p.unit.iter().map(Scalar::to_json).collect(),
            action: p.action.iter().map(|(n, g)| (n.to_string(), g.clone())).collect(),
            pcomp: p
                .pcomp
                .iter()
                .map(|((m, n, i), c)| (format!("{m},{n},{i}"), c.clone()))
                .collect(),
        }
    }
}

impl TryFrom<OperadJson> for TruncatedOperad {
    type Error = Error;

    fn try_from(raw: OperadJson) -> Result<Self> {
        raw.field.validate()?;
        let unit = crate::linalg::json_vector(raw.field, &raw.unit)?;
        let mut action = BTreeMap::new();
        for (k, g) in raw.action {
            let n: usize = k.trim().parse().map_err(|_| Error::Parse(format!("bad arity key {k:?}")))?;
            action.insert(n, g);
        }
        let mut pcomp = BTreeMap::new();
        for (k, c) in raw.pcomp {
            let parts: Vec<usize> = k
                .split(',')
                .map(|s| s.trim().parse())
                .collect::<std::result::Result<_, _>>()
                .map_err(|_| Error::Parse(format!("bad composition key {k:?}")))?;
            let [m, n, i] = parts[..] else {
                return Err(Error::Parse(format!("bad composition key {k:?}")));
            };
            pcomp.insert((m, n, i), c);
        }
        TruncatedOperad::new(raw.field, raw.max_arity, raw.dims, unit, action, pcomp)
    }
}
