//! Exact scalars: normalized rationals or residues modulo a prime.
//!
//! Every object in the crate carries a [`FieldSpec`]; arithmetic between
//! scalars of different fields is a programming error and panics.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// The base field of a computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldSpec {
    Rational,
    Prime(u64),
}

impl FieldSpec {
    /// GF(p); rejects non-primes.
    pub fn prime(p: u64) -> Result<Self> {
        if is_prime(p) {
            Ok(FieldSpec::Prime(p))
        } else {
            Err(Error::InvalidInput(format!("{p} is not a prime")))
        }
    }

    pub fn characteristic(self) -> u64 {
        match self {
            FieldSpec::Rational => 0,
            FieldSpec::Prime(p) => p,
        }
    }

    pub fn zero(self) -> Scalar {
        Scalar::from_i64(self, 0)
    }

    pub fn one(self) -> Scalar {
        Scalar::from_i64(self, 1)
    }

    pub fn int(self, v: i64) -> Scalar {
        Scalar::from_i64(self, v)
    }

    /// All field elements for a prime field, in residue order.
    pub fn elements(self) -> Option<Vec<Scalar>> {
        match self {
            FieldSpec::Rational => None,
            FieldSpec::Prime(p) => Some((0..p).map(|v| Scalar::Mod { v, p }).collect()),
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rational => write!(f, "Q"),
            FieldSpec::Prime(p) => write!(f, "GF({p})"),
        }
    }
}

pub(crate) fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// An exact field element.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rat(BigRational),
    Mod { v: u64, p: u64 },
}

impl Scalar {
    pub fn from_i64(field: FieldSpec, v: i64) -> Self {
        match field {
            FieldSpec::Rational => Scalar::Rat(BigRational::from_integer(BigInt::from(v))),
            FieldSpec::Prime(p) => Scalar::Mod { v: reduce_i128(v as i128, p), p },
        }
    }

    /// `num/den` in the given field. Over GF(p) a denominator other than ±1
    /// is only accepted when `coerce` is set; a denominator divisible by `p`
    /// is always an error.
    pub fn from_ratio(field: FieldSpec, num: &BigInt, den: &BigInt, coerce: bool) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::InvalidInput("zero denominator".into()));
        }
        match field {
            FieldSpec::Rational => Ok(Scalar::Rat(BigRational::new(num.clone(), den.clone()))),
            FieldSpec::Prime(p) => {
                if !den.abs().is_one() && !coerce {
                    return Err(Error::InvalidInput(format!(
                        "fraction {num}/{den} is not an element of GF({p}); enable modular coercion to reduce it"
                    )));
                }
                let pb = BigInt::from(p);
                let n = big_mod(num, &pb);
                let d = big_mod(den, &pb);
                if d == 0 {
                    return Err(Error::InvalidInput(format!("denominator {den} vanishes in GF({p})")));
                }
                let n = Scalar::Mod { v: n, p };
                let d = Scalar::Mod { v: d, p };
                Ok(&n * &d.inv().expect("nonzero residue"))
            }
        }
    }

    /// Parses `"n"`, `"-n"` or `"n/d"`.
    pub fn parse(field: FieldSpec, s: &str, coerce: bool) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::InvalidInput(format!("malformed coefficient {s:?}"));
        let (num, den) = match s.split_once('/') {
            Some((a, b)) => (
                a.trim().parse::<BigInt>().map_err(|_| bad())?,
                b.trim().parse::<BigInt>().map_err(|_| bad())?,
            ),
            None => (s.parse::<BigInt>().map_err(|_| bad())?, BigInt::one()),
        };
        Scalar::from_ratio(field, &num, &den, coerce)
    }

    pub fn field(&self) -> FieldSpec {
        match self {
            Scalar::Rat(_) => FieldSpec::Rational,
            Scalar::Mod { p, .. } => FieldSpec::Prime(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_zero(),
            Scalar::Mod { v, .. } => *v == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_one(),
            Scalar::Mod { v, .. } => *v == 1,
        }
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Rat(r) => Scalar::Rat(r.recip()),
            Scalar::Mod { v, p } => Scalar::Mod { v: pow_mod(*v, p - 2, *p), p: *p },
        })
    }

    /// Integer value when the scalar is a small integer (residue for GF(p)).
    pub fn to_i64(&self) -> Option<i64> {
        match self {
            Scalar::Rat(r) if r.is_integer() => r.to_integer().to_i64(),
            Scalar::Rat(_) => None,
            Scalar::Mod { v, .. } => i64::try_from(*v).ok(),
        }
    }

    /// Rational value, if over Q.
    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Rat(r) => Some(r),
            Scalar::Mod { .. } => None,
        }
    }

    fn same_field(&self, other: &Self) {
        if let (Scalar::Mod { p: a, .. }, Scalar::Mod { p: b, .. }) = (self, other) {
            assert_eq!(a, b, "scalar field mismatch: GF({a}) vs GF({b})");
        } else if std::mem::discriminant(self) != std::mem::discriminant(other) {
            panic!("scalar field mismatch: {} vs {}", self.field(), other.field());
        }
    }
}

fn reduce_i128(v: i128, p: u64) -> u64 {
    v.rem_euclid(p as i128) as u64
}

fn big_mod(v: &BigInt, p: &BigInt) -> u64 {
    let r = ((v % p) + p) % p;
    r.to_u64().expect("residue fits in u64")
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, b, p);
        }
        b = mul_mod(b, b, p);
        e >>= 1;
    }
    acc
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rat(r) => {
                if r.is_integer() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Mod { v, .. } => write!(f, "{v}"),
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rat(_) => write!(f, "{self}"),
            Scalar::Mod { v, p } => write!(f, "{v} (mod {p})"),
        }
    }
}

impl Add<&Scalar> for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        self.same_field(rhs);
        match (self, rhs) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a + b),
            (Scalar::Mod { v: a, p }, Scalar::Mod { v: b, .. }) => Scalar::Mod { v: (a + b) % p, p: *p },
            _ => unreachable!(),
        }
    }
}

impl Sub<&Scalar> for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self.same_field(rhs);
        match (self, rhs) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a - b),
            (Scalar::Mod { v: a, p }, Scalar::Mod { v: b, .. }) => Scalar::Mod { v: (a + p - b) % p, p: *p },
            _ => unreachable!(),
        }
    }
}

impl Mul<&Scalar> for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        self.same_field(rhs);
        match (self, rhs) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a * b),
            (Scalar::Mod { v: a, p }, Scalar::Mod { v: b, .. }) => Scalar::Mod { v: mul_mod(*a, *b, *p), p: *p },
            _ => unreachable!(),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rat(a) => Scalar::Rat(-a),
            Scalar::Mod { v, p } => Scalar::Mod { v: (p - v) % p, p: *p },
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident) => {
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar {
                (&self).$m(rhs)
            }
        }
        impl $tr<Scalar> for &Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                self.$m(&rhs)
            }
        }
    };
}
forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        match (&mut *self, rhs) {
            (Scalar::Mod { v: a, p }, Scalar::Mod { v: b, p: q }) => {
                assert_eq!(p, q, "scalar field mismatch");
                *a = (*a + b) % *p;
            }
            _ => *self = &*self + rhs,
        }
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        *self = &*self - rhs;
    }
}
