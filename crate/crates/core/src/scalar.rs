//! Exact scalar arithmetic over a pluggable field.
//!
//! Two fields are supported: arbitrary-precision rationals and prime fields
//! `F_p`. All arithmetic is exact; there is no floating point anywhere in the
//! crate. Rationals serialize canonically as `p/q` with `q > 0` and
//! `gcd(p, q) = 1` (plain `p` when `q = 1`); prime-field elements serialize as
//! the canonical residue in `0..p`.

use std::fmt;
use std::str::FromStr;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::Error;

/// Which field scalars live in. Every structure fixes one field up front.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum FieldSpec {
    /// Arbitrary-precision rationals.
    Rational,
    /// The prime field `F_p`.
    Prime(u64),
}

impl FieldSpec {
    /// Parse `"rational"` or `"prime:p"` (with `p` prime).
    pub fn parse(s: &str) -> Result<Self, Error> {
        if s == "rational" {
            return Ok(FieldSpec::Rational);
        }
        if let Some(p) = s.strip_prefix("prime:") {
            let p: u64 = p
                .parse()
                .map_err(|_| Error::Parse(format!("bad prime field modulus in `{s}`")))?;
            if !is_prime(p) {
                return Err(Error::Parse(format!("{p} is not prime")));
            }
            return Ok(FieldSpec::Prime(p));
        }
        Err(Error::Parse(format!(
            "unknown field `{s}` (expected `rational` or `prime:p`)"
        )))
    }

    pub fn zero(&self) -> Scalar {
        match self {
            FieldSpec::Rational => Scalar::Rational(BigRational::zero()),
            FieldSpec::Prime(p) => Scalar::Prime { p: *p, value: 0 },
        }
    }

    pub fn one(&self) -> Scalar {
        match self {
            FieldSpec::Rational => Scalar::Rational(BigRational::one()),
            FieldSpec::Prime(p) => Scalar::Prime { p: *p, value: 1 % p },
        }
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        match self {
            FieldSpec::Rational => Scalar::Rational(BigRational::from(BigInt::from(n))),
            FieldSpec::Prime(p) => {
                let v = n.rem_euclid(*p as i64) as u64;
                Scalar::Prime { p: *p, value: v }
            }
        }
    }

    /// Parse a canonical scalar string for this field.
    pub fn parse_scalar(&self, s: &str) -> Result<Scalar, Error> {
        match self {
            FieldSpec::Rational => {
                let (num_s, den_s) = match s.split_once('/') {
                    Some((n, d)) => (n, d),
                    None => (s, "1"),
                };
                let n = BigInt::from_str(num_s)
                    .map_err(|_| Error::Parse(format!("bad rational `{s}`")))?;
                let d = BigInt::from_str(den_s)
                    .map_err(|_| Error::Parse(format!("bad rational `{s}`")))?;
                if d.is_zero() {
                    return Err(Error::Parse(format!("zero denominator in `{s}`")));
                }
                Ok(Scalar::Rational(BigRational::new(n, d)))
            }
            FieldSpec::Prime(p) => {
                let v: i64 = s
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad residue `{s}`")))?;
                Ok(Scalar::Prime {
                    p: *p,
                    value: v.rem_euclid(*p as i64) as u64,
                })
            }
        }
    }

    pub fn name(&self) -> String {
        match self {
            FieldSpec::Rational => "rational".into(),
            FieldSpec::Prime(p) => format!("prime:{p}"),
        }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// An exact field element. Mixed-field arithmetic is a programming error and
/// panics; all public constructors pin a single [`FieldSpec`] per structure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Scalar {
    Rational(BigRational),
    Prime { p: u64, value: u64 },
}

impl Scalar {
    pub fn field(&self) -> FieldSpec {
        match self {
            Scalar::Rational(_) => FieldSpec::Rational,
            Scalar::Prime { p, .. } => FieldSpec::Prime(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Prime { value, .. } => *value == 0,
        }
    }

    pub fn add(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Prime { p, value: a }, Scalar::Prime { p: q, value: b }) if p == q => {
                Scalar::Prime {
                    p: *p,
                    value: (a + b) % p,
                }
            }
            _ => panic!("scalar field mismatch in add"),
        }
    }

    pub fn sub(&self, other: &Scalar) -> Scalar {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Prime { p, value } => Scalar::Prime {
                p: *p,
                value: (p - value) % p,
            },
        }
    }

    pub fn mul(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Prime { p, value: a }, Scalar::Prime { p: q, value: b }) if p == q => {
                Scalar::Prime {
                    p: *p,
                    value: ((*a as u128 * *b as u128) % *p as u128) as u64,
                }
            }
            _ => panic!("scalar field mismatch in mul"),
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inverse(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        match self {
            Scalar::Rational(a) => Some(Scalar::Rational(a.recip())),
            Scalar::Prime { p, value } => Some(Scalar::Prime {
                p: *p,
                value: mod_inverse(*value, *p),
            }),
        }
    }

    pub fn div(&self, other: &Scalar) -> Option<Scalar> {
        other.inverse().map(|inv| self.mul(&inv))
    }
}

/// Inverse of `a` mod prime `p` via the extended Euclidean algorithm.
fn mod_inverse(a: u64, p: u64) -> u64 {
    let (mut t, mut new_t) = (0i128, 1i128);
    let (mut r, mut new_r) = (p as i128, a as i128);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    debug_assert_eq!(r, 1, "modulus not coprime");
    t.rem_euclid(p as i128) as u64
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else if r.denom().is_negative() {
                    // BigRational::new normalizes the sign, but guard anyway.
                    write!(f, "{}/{}", -r.numer(), -r.denom())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Prime { value, .. } => write!(f, "{value}"),
        }
    }
}
