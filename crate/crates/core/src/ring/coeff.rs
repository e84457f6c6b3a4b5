use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::RingError;

/// Coefficient ring of a polynomial: the integers or a prime field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CoeffRing {
    Integers,
    Mod(u64),
}

impl CoeffRing {
    /// The prime field with `p` elements. `p` is validated by trial division.
    pub fn modulo(p: u64) -> Result<Self, RingError> {
        if is_prime(p) {
            Ok(CoeffRing::Mod(p))
        } else {
            Err(RingError::NotPrime(p))
        }
    }

    pub fn modulus(&self) -> Option<u64> {
        match self {
            CoeffRing::Integers => None,
            CoeffRing::Mod(p) => Some(*p),
        }
    }

    pub fn is_field(&self) -> bool {
        matches!(self, CoeffRing::Mod(_))
    }

    pub(crate) fn check_same(&self, other: &CoeffRing) -> Result<(), RingError> {
        if self == other {
            Ok(())
        } else {
            Err(RingError::RingMismatch {
                left: *self,
                right: *other,
            })
        }
    }
}

impl fmt::Display for CoeffRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoeffRing::Integers => write!(f, "Z"),
            CoeffRing::Mod(p) => write!(f, "F_{p}"),
        }
    }
}

/// Trial-division primality test.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n.is_multiple_of(2) {
        return false;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// A single scalar: an arbitrary-precision integer or a fully reduced residue.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Coeff {
    Int(BigInt),
    Residue { value: u64, modulus: u64 },
}

impl Coeff {
    pub fn int(n: impl Into<BigInt>) -> Self {
        Coeff::Int(n.into())
    }

    /// Residue of `n` modulo the prime `p`.
    pub fn residue(n: &BigInt, p: u64) -> Result<Self, RingError> {
        CoeffRing::modulo(p)?;
        Ok(Coeff::Residue {
            value: reduce_bigint(n, p),
            modulus: p,
        })
    }

    pub fn zero(ring: CoeffRing) -> Self {
        match ring {
            CoeffRing::Integers => Coeff::Int(BigInt::zero()),
            CoeffRing::Mod(p) => Coeff::Residue { value: 0, modulus: p },
        }
    }

    pub fn one(ring: CoeffRing) -> Self {
        match ring {
            CoeffRing::Integers => Coeff::Int(BigInt::one()),
            CoeffRing::Mod(p) => Coeff::Residue {
                value: 1 % p,
                modulus: p,
            },
        }
    }

    pub fn ring(&self) -> CoeffRing {
        match self {
            Coeff::Int(_) => CoeffRing::Integers,
            Coeff::Residue { modulus, .. } => CoeffRing::Mod(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Coeff::Int(n) => n.is_zero(),
            Coeff::Residue { value, .. } => *value == 0,
        }
    }

    /// Lift to an integer (the canonical representative for residues).
    pub fn to_bigint(&self) -> BigInt {
        match self {
            Coeff::Int(n) => n.clone(),
            Coeff::Residue { value, .. } => BigInt::from(*value),
        }
    }

    /// Units: ±1 over the integers, every nonzero residue over a field.
    pub fn is_unit(&self) -> bool {
        match self {
            Coeff::Int(n) => n.abs().is_one(),
            Coeff::Residue { value, .. } => *value != 0,
        }
    }

    pub fn inverse(&self) -> Option<Coeff> {
        match self {
            Coeff::Int(n) if n.abs().is_one() => Some(Coeff::Int(n.clone())),
            Coeff::Int(_) => None,
            Coeff::Residue { value: 0, .. } => None,
            Coeff::Residue { value, modulus } => Some(Coeff::Residue {
                value: inv_mod(*value, *modulus),
                modulus: *modulus,
            }),
        }
    }

    pub fn checked_add(&self, other: &Coeff) -> Result<Coeff, RingError> {
        self.ring().check_same(&other.ring())?;
        Ok(match (self, other) {
            (Coeff::Int(a), Coeff::Int(b)) => Coeff::Int(a + b),
            (Coeff::Residue { value: a, modulus }, Coeff::Residue { value: b, .. }) => Coeff::Residue {
                value: add_mod(*a, *b, *modulus),
                modulus: *modulus,
            },
            _ => unreachable!(),
        })
    }

    pub fn checked_mul(&self, other: &Coeff) -> Result<Coeff, RingError> {
        self.ring().check_same(&other.ring())?;
        Ok(match (self, other) {
            (Coeff::Int(a), Coeff::Int(b)) => Coeff::Int(a * b),
            (Coeff::Residue { value: a, modulus }, Coeff::Residue { value: b, .. }) => Coeff::Residue {
                value: mul_mod(*a, *b, *modulus),
                modulus: *modulus,
            },
            _ => unreachable!(),
        })
    }

    pub fn neg(&self) -> Coeff {
        match self {
            Coeff::Int(a) => Coeff::Int(-a),
            Coeff::Residue { value, modulus } => Coeff::Residue {
                value: neg_mod(*value, *modulus),
                modulus: *modulus,
            },
        }
    }
}

impl fmt::Display for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coeff::Int(n) => write!(f, "{n}"),
            Coeff::Residue { value, .. } => write!(f, "{value}"),
        }
    }
}

pub(crate) fn reduce_bigint(n: &BigInt, p: u64) -> u64 {
    let r = n.mod_floor(&BigInt::from(p));
    // mod_floor with positive modulus lands in [0, p)
    u64::try_from(r).expect("residue fits in u64")
}

#[inline]
pub(crate) fn add_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 + b as u128) % p as u128) as u64
}

#[inline]
pub(crate) fn sub_mod(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        p - (b - a)
    }
}

#[inline]
pub(crate) fn neg_mod(a: u64, p: u64) -> u64 {
    if a == 0 {
        0
    } else {
        p - a
    }
}

#[inline]
pub(crate) fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

/// Inverse of a nonzero residue modulo a prime, by the extended Euclidean algorithm.
pub(crate) fn inv_mod(a: u64, p: u64) -> u64 {
    let (mut r0, mut r1) = (p as i128, (a % p) as i128);
    let (mut s0, mut s1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    debug_assert_eq!(r0, 1, "{a} is not invertible mod {p}");
    s0.rem_euclid(p as i128) as u64
}
