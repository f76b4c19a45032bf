use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The coefficient ring every matrix and structure tensor lives over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Domain {
    Rational,
    Prime(u64),
    Integer,
}

impl Domain {
    /// Prime field of order `p`; rejects composite `p`.
    pub fn prime(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::Format(format!("{p} is not a prime")));
        }
        if p > u32::MAX as u64 {
            return Err(Error::Unsupported(format!("prime {p} exceeds 32 bits")));
        }
        Ok(Domain::Prime(p))
    }

    pub fn is_field(self) -> bool {
        !matches!(self, Domain::Integer)
    }

    pub fn characteristic(self) -> u64 {
        match self {
            Domain::Prime(p) => p,
            _ => 0,
        }
    }

    pub fn require_field(self, what: &str) -> Result<()> {
        if self.is_field() {
            Ok(())
        } else {
            Err(Error::UnsupportedDomain {
                operation: what.to_string(),
                domain: self,
            })
        }
    }

    pub fn zero(self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(self, v: i64) -> Scalar {
        self.from_bigint(&BigInt::from(v))
    }

    pub fn from_bigint(self, v: &BigInt) -> Scalar {
        match self {
            Domain::Rational => Scalar::Rational(BigRational::from_integer(v.clone())),
            Domain::Integer => Scalar::Integer(v.clone()),
            Domain::Prime(p) => {
                let r = v.mod_floor(&BigInt::from(p));
                Scalar::Residue {
                    value: r.to_u64().expect("residue fits"),
                    modulus: p,
                }
            }
        }
    }

    /// Maps a rational number into this domain. Fails for non-integers over ℤ
    /// and for denominators divisible by the characteristic.
    pub fn from_rational(self, q: &BigRational) -> Result<Scalar> {
        match self {
            Domain::Rational => Ok(Scalar::Rational(q.clone())),
            Domain::Integer => {
                if q.is_integer() {
                    Ok(Scalar::Integer(q.to_integer()))
                } else {
                    Err(Error::Format(format!("{q} is not an integer")))
                }
            }
            Domain::Prime(p) => {
                let num = self.from_bigint(q.numer());
                let den = self.from_bigint(q.denom());
                let inv = den
                    .inverse()
                    .ok_or_else(|| Error::Format(format!("denominator of {q} vanishes mod {p}")))?;
                Ok(&num * &inv)
            }
        }
    }

    /// Parses `"3"`, `"-1/2"` and similar strings.
    pub fn parse_scalar(self, text: &str) -> Result<Scalar> {
        let t = text.trim();
        let parsed = match t.split_once('/') {
            Some((n, d)) => {
                let n: BigInt = n.trim().parse().map_err(|_| bad_scalar(text))?;
                let d: BigInt = d.trim().parse().map_err(|_| bad_scalar(text))?;
                if d.is_zero() {
                    return Err(bad_scalar(text));
                }
                BigRational::new(n, d)
            }
            None => BigRational::from_integer(t.parse().map_err(|_| bad_scalar(text))?),
        };
        self.from_rational(&parsed)
    }
}

fn bad_scalar(text: &str) -> Error {
    Error::Format(format!("cannot parse scalar {text:?}"))
}

impl fmt::Display for Domain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Domain::Rational => write!(f, "Q"),
            Domain::Prime(p) => write!(f, "F{p}"),
            Domain::Integer => write!(f, "Z"),
        }
    }
}

pub(crate) fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// An exact element of ℚ, 𝔽p or ℤ.
///
/// Arithmetic between scalars of different domains is a logic error and
/// panics; matrices guarantee a single domain for all their entries.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Residue { value: u64, modulus: u64 },
    Integer(BigInt),
}

impl Scalar {
    pub fn domain(&self) -> Domain {
        match self {
            Scalar::Rational(_) => Domain::Rational,
            Scalar::Residue { modulus, .. } => Domain::Prime(*modulus),
            Scalar::Integer(_) => Domain::Integer,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_zero(),
            Scalar::Residue { value, .. } => *value == 0,
            Scalar::Integer(n) => n.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_one(),
            Scalar::Residue { value, .. } => *value == 1,
            Scalar::Integer(n) => n.is_one(),
        }
    }

    /// Multiplicative inverse, if it exists in the domain.
    pub fn inverse(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        match self {
            Scalar::Rational(q) => Some(Scalar::Rational(q.recip())),
            Scalar::Residue { value, modulus } => Some(Scalar::Residue {
                value: pow_mod(*value, modulus - 2, *modulus),
                modulus: *modulus,
            }),
            Scalar::Integer(n) => {
                if n.abs().is_one() {
                    Some(Scalar::Integer(n.clone()))
                } else {
                    None
                }
            }
        }
    }

    pub fn pow(&self, mut e: u64) -> Scalar {
        let mut base = self.clone();
        let mut acc = self.domain().one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// The value as a rational number. Residues are lifted to `[0, p)`.
    pub fn to_rational(&self) -> BigRational {
        match self {
            Scalar::Rational(q) => q.clone(),
            Scalar::Residue { value, .. } => BigRational::from_integer(BigInt::from(*value)),
            Scalar::Integer(n) => BigRational::from_integer(n.clone()),
        }
    }

    pub fn as_integer(&self) -> Option<&BigInt> {
        match self {
            Scalar::Integer(n) => Some(n),
            _ => None,
        }
    }

    /// True for strictly negative rationals and integers; residues have no sign.
    pub fn is_negative(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_negative(),
            Scalar::Integer(n) => n.is_negative(),
            Scalar::Residue { .. } => false,
        }
    }

    fn check_same(&self, other: &Scalar) {
        assert_eq!(
            self.domain(),
            other.domain(),
            "scalar arithmetic across domains"
        );
    }
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1u64 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, b, m);
        }
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    acc
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(q) => {
                if q.is_integer() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            Scalar::Residue { value, .. } => write!(f, "{value}"),
            Scalar::Integer(n) => write!(f, "{n}"),
        }
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        self.check_same(rhs);
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Integer(a), Scalar::Integer(b)) => Scalar::Integer(a + b),
            (Scalar::Residue { value: a, modulus }, Scalar::Residue { value: b, .. }) => {
                Scalar::Residue {
                    value: ((*a as u128 + *b as u128) % *modulus as u128) as u64,
                    modulus: *modulus,
                }
            }
            _ => unreachable!(),
        }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        self.check_same(rhs);
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Integer(a), Scalar::Integer(b)) => Scalar::Integer(a * b),
            (Scalar::Residue { value: a, modulus }, Scalar::Residue { value: b, .. }) => {
                Scalar::Residue {
                    value: mul_mod(*a, *b, *modulus),
                    modulus: *modulus,
                }
            }
            _ => unreachable!(),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Integer(a) => Scalar::Integer(-a),
            Scalar::Residue { value, modulus } => Scalar::Residue {
                value: (modulus - value) % modulus,
                modulus: *modulus,
            },
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fractions_are_normalized() {
        let q = Domain::Rational.parse_scalar("4/-6").unwrap();
        assert_eq!(q.to_string(), "-2/3");
        let r = Domain::Rational.parse_scalar("-2/3").unwrap();
        assert_eq!(q, r);
    }

    #[test]
    fn prime_field_residues() {
        let f5 = Domain::prime(5).unwrap();
        let two = f5.from_i64(2);
        assert_eq!(two.inverse().unwrap(), f5.from_i64(3));
        assert_eq!(f5.from_i64(-1), f5.from_i64(4));
        assert_eq!(f5.parse_scalar("1/2").unwrap(), f5.from_i64(3));
        assert!(f5.parse_scalar("1/5").is_err());
        assert!(Domain::prime(6).is_err());
    }

    #[test]
    fn integers_reject_fractions() {
        assert!(Domain::Integer.parse_scalar("1/2").is_err());
        assert_eq!(
            Domain::Integer.parse_scalar("6/3").unwrap(),
            Domain::Integer.from_i64(2)
        );
        assert!(Domain::Integer.from_i64(2).inverse().is_none());
        assert!(Domain::Integer.from_i64(-1).inverse().is_some());
    }

    #[test]
    #[should_panic(expected = "across domains")]
    fn mixed_domains_panic() {
        let _ = Domain::Rational.one() + Domain::Integer.one();
    }

    #[test]
    fn add_sub_roundtrip() {
        for d in [Domain::Rational, Domain::Prime(7), Domain::Integer] {
            let a = d.from_i64(-13);
            let b = d.from_i64(29);
            assert_eq!(&(&a + &b) - &b, a);
        }
    }
}
