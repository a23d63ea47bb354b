//! Exact scalars over ℚ or a prime field 𝔽_p.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest admissible prime modulus (exclusive).
pub const MAX_PRIME: u32 = 1 << 16;

/// The ground field shared by every scalar of one computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum FieldSpec {
    #[serde(rename = "Q")]
    Rationals,
    #[serde(rename = "Fp")]
    PrimeField { p: u32 },
}

pub fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut k = 2u32;
    while k * k <= p {
        if p.is_multiple_of(k) {
            return false;
        }
        k += 1;
    }
    true
}

impl FieldSpec {
    pub fn prime(p: u32) -> Result<Self> {
        if !is_prime(p) || p >= MAX_PRIME {
            return Err(Error::InvalidField(format!("{p} is not a prime below 2^16")));
        }
        Ok(FieldSpec::PrimeField { p })
    }

    /// Checks the modulus after deserialization.
    pub fn validate(&self) -> Result<()> {
        match *self {
            FieldSpec::Rationals => Ok(()),
            FieldSpec::PrimeField { p } => Self::prime(p).map(|_| ()),
        }
    }

    pub fn characteristic(&self) -> u32 {
        match *self {
            FieldSpec::Rationals => 0,
            FieldSpec::PrimeField { p } => p,
        }
    }

    pub fn zero(&self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, v: i64) -> Scalar {
        match *self {
            FieldSpec::Rationals => Scalar::Q(BigRational::from_integer(BigInt::from(v))),
            FieldSpec::PrimeField { p } => Scalar::Fp {
                v: v.rem_euclid(p as i64) as u32,
                p,
            },
        }
    }

    /// `num / den`, reduced into the field. Fails when `den` vanishes in the field.
    pub fn from_ratio(&self, num: i64, den: i64) -> Result<Scalar> {
        let d = self.from_i64(den);
        if d.is_zero() {
            return Err(Error::Parse(format!("zero denominator in {num}/{den}")));
        }
        Ok(&self.from_i64(num) * &d.inv().expect("nonzero"))
    }

    /// Parses `"a"`, `"-a"` or `"a/b"`.
    pub fn parse_scalar(&self, s: &str) -> Result<Scalar> {
        let s = s.trim();
        let bad = || Error::Parse(format!("bad scalar literal {s:?}"));
        match *self {
            FieldSpec::Rationals => {
                let (n, d) = match s.split_once('/') {
                    Some((n, d)) => (
                        BigInt::from_str(n.trim()).map_err(|_| bad())?,
                        BigInt::from_str(d.trim()).map_err(|_| bad())?,
                    ),
                    None => (BigInt::from_str(s).map_err(|_| bad())?, BigInt::one()),
                };
                if d.is_zero() {
                    return Err(bad());
                }
                Ok(Scalar::Q(BigRational::new(n, d)))
            }
            FieldSpec::PrimeField { p } => {
                let reduce = |t: &str| -> Result<Scalar> {
                    let b = BigInt::from_str(t.trim()).map_err(|_| bad())?;
                    let r = ((b % p) + p) % p;
                    Ok(Scalar::Fp {
                        v: r.to_u32().expect("reduced"),
                        p,
                    })
                };
                match s.split_once('/') {
                    Some((n, d)) => {
                        let d = reduce(d)?;
                        let inv = d.inv().ok_or_else(bad)?;
                        Ok(&reduce(n)? * &inv)
                    }
                    None => reduce(s),
                }
            }
        }
    }

    /// All field elements, for finite fields only.
    pub fn elements(&self) -> Option<Vec<Scalar>> {
        match *self {
            FieldSpec::Rationals => None,
            FieldSpec::PrimeField { p } => Some((0..p).map(|v| Scalar::Fp { v, p }).collect()),
        }
    }

    pub fn contains(&self, s: &Scalar) -> bool {
        match (self, s) {
            (FieldSpec::Rationals, Scalar::Q(_)) => true,
            (FieldSpec::PrimeField { p }, Scalar::Fp { p: q, v }) => p == q && v < p,
            _ => false,
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::PrimeField { p } => write!(f, "F{p}"),
        }
    }
}

impl FromStr for FieldSpec {
    type Err = Error;

    /// Accepts `Q`, `F5`, `Fp5` or a bare prime.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.eq_ignore_ascii_case("q") {
            return Ok(FieldSpec::Rationals);
        }
        let digits = t.trim_start_matches(['F', 'f', 'p']);
        let p: u32 = digits
            .parse()
            .map_err(|_| Error::Parse(format!("unknown field {s:?}")))?;
        FieldSpec::prime(p)
    }
}

/// A field element. Prime-field elements carry their modulus.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Q(BigRational),
    Fp { v: u32, p: u32 },
}

impl Scalar {
    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Q(q) => q.is_zero(),
            Scalar::Fp { v, .. } => *v == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Q(q) => q.is_one(),
            Scalar::Fp { v, .. } => *v == 1,
        }
    }

    pub fn field(&self) -> FieldSpec {
        match self {
            Scalar::Q(_) => FieldSpec::Rationals,
            Scalar::Fp { p, .. } => FieldSpec::PrimeField { p: *p },
        }
    }

    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Q(q) => Scalar::Q(q.recip()),
            Scalar::Fp { v, p } => Scalar::Fp {
                v: pow_mod(*v as u64, (*p - 2) as u64, *p as u64) as u32,
                p: *p,
            },
        })
    }

    /// Integer representative in `0..p` for prime fields.
    pub fn residue(&self) -> Option<u32> {
        match self {
            Scalar::Fp { v, .. } => Some(*v),
            Scalar::Q(_) => None,
        }
    }

    /// JSON form: integers for 𝔽_p, `"a"` or `"a/b"` strings for ℚ.
    pub fn to_json(&self) -> serde_json::Value {
        match self {
            Scalar::Fp { v, .. } => serde_json::Value::from(*v),
            Scalar::Q(_) => serde_json::Value::from(self.to_string()),
        }
    }
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    r
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Q(q) => {
                if q.denom().is_one() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            Scalar::Fp { v, .. } => write!(f, "{v}"),
        }
    }
}

fn mismatch(a: &Scalar, b: &Scalar) -> ! {
    panic!("scalar field mismatch: {} vs {}", a.field(), b.field())
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a + b),
            (Scalar::Fp { v: a, p }, Scalar::Fp { v: b, p: q }) if p == q => Scalar::Fp {
                v: ((*a as u64 + *b as u64) % *p as u64) as u32,
                p: *p,
            },
            _ => mismatch(self, rhs),
        }
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a - b),
            (Scalar::Fp { v: a, p }, Scalar::Fp { v: b, p: q }) if p == q => Scalar::Fp {
                v: ((*a as u64 + *p as u64 - *b as u64) % *p as u64) as u32,
                p: *p,
            },
            _ => mismatch(self, rhs),
        }
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a * b),
            (Scalar::Fp { v: a, p }, Scalar::Fp { v: b, p: q }) if p == q => Scalar::Fp {
                v: ((*a as u64 * *b as u64) % *p as u64) as u32,
                p: *p,
            },
            _ => mismatch(self, rhs),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Q(a) => Scalar::Q(-a),
            Scalar::Fp { v, p } => Scalar::Fp {
                v: (*p - *v) % *p,
                p: *p,
            },
        }
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, rhs: Scalar) -> Scalar {
        &self + &rhs
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, rhs: Scalar) -> Scalar {
        &self - &rhs
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        &self * &rhs
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}
