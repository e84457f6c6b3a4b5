use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::coeff::{add_mod, inv_mod, mul_mod, neg_mod, reduce_bigint, sub_mod};
use super::{Coeff, CoeffRing, RingError};

/// Degree of a polynomial. The zero polynomial has degree `NegInfinity`,
/// which sorts below every finite degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    NegInfinity,
    Finite(usize),
}

impl Degree {
    pub fn finite(self) -> Option<usize> {
        match self {
            Degree::NegInfinity => None,
            Degree::Finite(d) => Some(d),
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::NegInfinity => write!(f, "-inf"),
            Degree::Finite(d) => write!(f, "{d}"),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
enum Repr {
    Int(Vec<BigInt>),
    Mod { p: u64, c: Vec<u64> },
}

/// Dense univariate polynomial in `t` over the integers or a prime field.
///
/// Coefficients are stored in ascending order of degree with no trailing
/// zeros, so structural equality is polynomial equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    repr: Repr,
}

fn trim_int(c: &mut Vec<BigInt>) {
    while c.last().is_some_and(|x| x.is_zero()) {
        c.pop();
    }
}

fn trim_mod(c: &mut Vec<u64>) {
    while c.last() == Some(&0) {
        c.pop();
    }
}

impl Poly {
    pub fn zero(ring: CoeffRing) -> Self {
        match ring {
            CoeffRing::Integers => Poly {
                repr: Repr::Int(Vec::new()),
            },
            CoeffRing::Mod(p) => Poly {
                repr: Repr::Mod { p, c: Vec::new() },
            },
        }
    }

    pub fn one(ring: CoeffRing) -> Self {
        Self::constant_i64(ring, 1)
    }

    pub fn constant_i64(ring: CoeffRing, n: i64) -> Self {
        Self::from_bigints(ring, vec![BigInt::from(n)])
    }

    pub fn constant(c: &Coeff) -> Self {
        Self::from_bigints(c.ring(), vec![c.to_bigint()])
    }

    /// `c * t^exp`.
    pub fn monomial(ring: CoeffRing, c: impl Into<BigInt>, exp: usize) -> Self {
        let mut v = vec![BigInt::zero(); exp + 1];
        v[exp] = c.into();
        Self::from_bigints(ring, v)
    }

    /// The variable `t`.
    pub fn t(ring: CoeffRing) -> Self {
        Self::monomial(ring, 1, 1)
    }

    /// Build from integer coefficients (ascending), reducing into `ring`.
    pub fn from_bigints(ring: CoeffRing, coeffs: Vec<BigInt>) -> Self {
        match ring {
            CoeffRing::Integers => {
                let mut c = coeffs;
                trim_int(&mut c);
                Poly { repr: Repr::Int(c) }
            }
            CoeffRing::Mod(p) => {
                let mut c: Vec<u64> = coeffs.iter().map(|x| reduce_bigint(x, p)).collect();
                trim_mod(&mut c);
                Poly {
                    repr: Repr::Mod { p, c },
                }
            }
        }
    }

    pub fn from_i64s(ring: CoeffRing, coeffs: &[i64]) -> Self {
        Self::from_bigints(ring, coeffs.iter().map(|&x| BigInt::from(x)).collect())
    }

    pub(crate) fn from_residues(p: u64, mut c: Vec<u64>) -> Self {
        debug_assert!(c.iter().all(|&x| x < p));
        trim_mod(&mut c);
        Poly {
            repr: Repr::Mod { p, c },
        }
    }

    pub fn ring(&self) -> CoeffRing {
        match &self.repr {
            Repr::Int(_) => CoeffRing::Integers,
            Repr::Mod { p, .. } => CoeffRing::Mod(*p),
        }
    }

    fn len(&self) -> usize {
        match &self.repr {
            Repr::Int(c) => c.len(),
            Repr::Mod { c, .. } => c.len(),
        }
    }

    pub fn degree(&self) -> Degree {
        match self.len() {
            0 => Degree::NegInfinity,
            n => Degree::Finite(n - 1),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.len() == 0
    }

    pub fn is_one(&self) -> bool {
        match &self.repr {
            Repr::Int(c) => c.len() == 1 && c[0].is_one(),
            Repr::Mod { c, .. } => c.len() == 1 && c[0] == 1,
        }
    }

    /// True for constants, including zero.
    pub fn is_constant(&self) -> bool {
        self.len() <= 1
    }

    /// Coefficient of `t^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> Coeff {
        match &self.repr {
            Repr::Int(c) => Coeff::Int(c.get(i).cloned().unwrap_or_default()),
            Repr::Mod { p, c } => Coeff::Residue {
                value: c.get(i).copied().unwrap_or(0),
                modulus: *p,
            },
        }
    }

    pub fn coeffs(&self) -> Vec<Coeff> {
        (0..self.len()).map(|i| self.coeff(i)).collect()
    }

    /// Coefficients lifted to integers, ascending.
    pub fn to_bigints(&self) -> Vec<BigInt> {
        match &self.repr {
            Repr::Int(c) => c.clone(),
            Repr::Mod { c, .. } => c.iter().map(|&x| BigInt::from(x)).collect(),
        }
    }

    pub fn constant_term(&self) -> Coeff {
        self.coeff(0)
    }

    pub fn leading_coeff(&self) -> Option<Coeff> {
        self.degree().finite().map(|d| self.coeff(d))
    }

    /// The constant value, if the polynomial has degree ≤ 0.
    pub fn as_constant(&self) -> Option<Coeff> {
        self.is_constant().then(|| self.constant_term())
    }

    /// `self - self(0)`: the part lying in `t·R[t]`.
    pub fn without_constant(&self) -> Poly {
        let mut out = self.clone();
        match &mut out.repr {
            Repr::Int(c) => {
                if let Some(x) = c.first_mut() {
                    *x = BigInt::zero();
                }
                trim_int(c);
            }
            Repr::Mod { c, .. } => {
                if let Some(x) = c.first_mut() {
                    *x = 0;
                }
                trim_mod(c);
            }
        }
        out
    }

    pub fn checked_add(&self, other: &Poly) -> Result<Poly, RingError> {
        self.ring().check_same(&other.ring())?;
        Ok(match (&self.repr, &other.repr) {
            (Repr::Int(a), Repr::Int(b)) => {
                let n = a.len().max(b.len());
                let mut c = Vec::with_capacity(n);
                for i in 0..n {
                    c.push(match (a.get(i), b.get(i)) {
                        (Some(x), Some(y)) => x + y,
                        (Some(x), None) | (None, Some(x)) => x.clone(),
                        (None, None) => unreachable!(),
                    });
                }
                trim_int(&mut c);
                Poly { repr: Repr::Int(c) }
            }
            (Repr::Mod { p, c: a }, Repr::Mod { c: b, .. }) => {
                let n = a.len().max(b.len());
                let c = (0..n)
                    .map(|i| add_mod(*a.get(i).unwrap_or(&0), *b.get(i).unwrap_or(&0), *p))
                    .collect();
                Poly::from_residues(*p, c)
            }
            _ => unreachable!(),
        })
    }

    pub fn checked_sub(&self, other: &Poly) -> Result<Poly, RingError> {
        self.checked_add(&other.neg_ref())
    }

    pub fn checked_mul(&self, other: &Poly) -> Result<Poly, RingError> {
        self.ring().check_same(&other.ring())?;
        if self.is_zero() || other.is_zero() {
            return Ok(Poly::zero(self.ring()));
        }
        Ok(match (&self.repr, &other.repr) {
            (Repr::Int(a), Repr::Int(b)) => {
                let mut c = vec![BigInt::zero(); a.len() + b.len() - 1];
                for (i, x) in a.iter().enumerate() {
                    if x.is_zero() {
                        continue;
                    }
                    for (j, y) in b.iter().enumerate() {
                        c[i + j] += x * y;
                    }
                }
                trim_int(&mut c);
                Poly { repr: Repr::Int(c) }
            }
            (Repr::Mod { p, c: a }, Repr::Mod { c: b, .. }) => {
                let p = *p;
                let mut acc = vec![0u128; a.len() + b.len() - 1];
                let pp = (p as u128) * (p as u128);
                for (i, &x) in a.iter().enumerate() {
                    if x == 0 {
                        continue;
                    }
                    for (j, &y) in b.iter().enumerate() {
                        let s = &mut acc[i + j];
                        *s += x as u128 * y as u128;
                        if *s >= u128::MAX - pp {
                            *s %= p as u128;
                        }
                    }
                }
                let c = acc.into_iter().map(|s| (s % p as u128) as u64).collect();
                Poly::from_residues(p, c)
            }
            _ => unreachable!(),
        })
    }

    fn neg_ref(&self) -> Poly {
        match &self.repr {
            Repr::Int(c) => Poly {
                repr: Repr::Int(c.iter().map(|x| -x).collect()),
            },
            Repr::Mod { p, c } => Poly {
                repr: Repr::Mod {
                    p: *p,
                    c: c.iter().map(|&x| neg_mod(x, *p)).collect(),
                },
            },
        }
    }

    /// Multiply by a scalar of the same ring.
    pub fn scale(&self, s: &Coeff) -> Result<Poly, RingError> {
        self.ring().check_same(&s.ring())?;
        Ok(match (&self.repr, s) {
            (Repr::Int(c), Coeff::Int(k)) => {
                let mut c: Vec<BigInt> = c.iter().map(|x| x * k).collect();
                trim_int(&mut c);
                Poly { repr: Repr::Int(c) }
            }
            (Repr::Mod { p, c }, Coeff::Residue { value, .. }) => {
                Poly::from_residues(*p, c.iter().map(|&x| mul_mod(x, *value, *p)).collect())
            }
            _ => unreachable!(),
        })
    }

    /// Euclidean division `self = q·divisor + r` with `deg r < deg divisor`.
    /// Only defined over field coefficients.
    pub fn divmod(&self, divisor: &Poly) -> Result<(Poly, Poly), RingError> {
        self.ring().check_same(&divisor.ring())?;
        let (p, b) = match &divisor.repr {
            Repr::Mod { p, c } => (*p, c),
            Repr::Int(_) => return Err(RingError::NotAField(self.ring())),
        };
        if b.is_empty() {
            return Err(RingError::DivisionByZero);
        }
        let Repr::Mod { c: a, .. } = &self.repr else {
            unreachable!()
        };
        if a.len() < b.len() {
            return Ok((Poly::zero(self.ring()), self.clone()));
        }
        let lead_inv = inv_mod(*b.last().unwrap(), p);
        let mut r = a.clone();
        let mut q = vec![0u64; a.len() - b.len() + 1];
        for shift in (0..q.len()).rev() {
            let top = r[shift + b.len() - 1];
            if top == 0 {
                continue;
            }
            let f = mul_mod(top, lead_inv, p);
            q[shift] = f;
            for (j, &bj) in b.iter().enumerate() {
                r[shift + j] = sub_mod(r[shift + j], mul_mod(f, bj, p), p);
            }
        }
        r.truncate(b.len() - 1);
        Ok((Poly::from_residues(p, q), Poly::from_residues(p, r)))
    }

    /// Coefficientwise reduction of an integer polynomial modulo the prime `p`.
    pub fn reduce_mod_p(&self, p: u64) -> Result<Poly, RingError> {
        let ring = CoeffRing::modulo(p)?;
        match &self.repr {
            Repr::Int(c) => Ok(Poly::from_bigints(ring, c.clone())),
            Repr::Mod { .. } => Err(RingError::ExpectedIntegers(self.ring())),
        }
    }

    /// Largest absolute coefficient (over the integers; residues use their representative).
    pub fn height(&self) -> BigInt {
        self.to_bigints().into_iter().map(|x| x.abs()).max().unwrap_or_default()
    }

    /// Total order used for deterministic output: by ring, then degree, then coefficients.
    pub fn canonical_cmp(&self, other: &Poly) -> Ordering {
        self.ring()
            .cmp(&other.ring())
            .then(self.degree().cmp(&other.degree()))
            .then_with(|| self.to_bigints().cmp(&other.to_bigints()))
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.ring() {
            CoeffRing::Integers => write!(f, "Poly[Z]({self})"),
            CoeffRing::Mod(p) => write!(f, "Poly[F_{p}]({self})"),
        }
    }
}

// Operator forms panic on ring mismatch; use the `checked_*` methods when the
// operands' rings are not already known to agree.
impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        self.checked_add(rhs).expect("polynomial ring mismatch")
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self.checked_sub(rhs).expect("polynomial ring mismatch")
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        self.checked_mul(rhs).expect("polynomial ring mismatch")
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.neg_ref()
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.neg_ref()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Z: CoeffRing = CoeffRing::Integers;
    const F2: CoeffRing = CoeffRing::Mod(2);
    const F5: CoeffRing = CoeffRing::Mod(5);

    #[test]
    fn difference_of_squares() {
        let a = Poly::from_i64s(Z, &[1, 1]);
        let b = Poly::from_i64s(Z, &[1, -1]);
        assert_eq!(&a * &b, Poly::from_i64s(Z, &[1, 0, -1]));
    }

    #[test]
    fn zero_annihilates() {
        let b = Poly::from_i64s(Z, &[3, 0, 0, 0, 0, 1]);
        let z = Poly::zero(Z);
        assert!((&z * &b).is_zero());
        assert_eq!(z.degree(), Degree::NegInfinity);
        assert!(Degree::NegInfinity < Degree::Finite(0));
    }

    #[test]
    fn product_over_f2() {
        // (t + 1)(t^2 + t + 1) = t^3 + 2t^2 + 2t + 1 ≡ t^3 + 1
        let a = Poly::from_i64s(F2, &[1, 1]);
        let b = Poly::from_i64s(F2, &[1, 1, 1]);
        assert_eq!(&a * &b, Poly::from_i64s(F2, &[1, 0, 0, 1]));
    }

    #[test]
    fn mixed_rings_rejected() {
        let a = Poly::from_i64s(F2, &[1, 1]);
        let b = Poly::from_i64s(F5, &[1, 1]);
        assert!(matches!(a.checked_mul(&b), Err(RingError::RingMismatch { .. })));
        assert!(a.checked_add(&Poly::one(Z)).is_err());
    }

    #[test]
    fn division_examples() {
        let a = Poly::from_i64s(F2, &[1, 0, 0, 1]);
        let b = Poly::from_i64s(F2, &[1, 1]);
        let (q, r) = a.divmod(&b).unwrap();
        assert_eq!(q, Poly::from_i64s(F2, &[1, 1, 1]));
        assert!(r.is_zero());
        assert_eq!(&(&q * &b) + &r, a);

        let t = Poly::t(F5);
        let t2 = Poly::monomial(F5, 1, 2);
        let (q, r) = t.divmod(&t2).unwrap();
        assert!(q.is_zero());
        assert_eq!(r, t);

        // t^2 + 1 = (t + 2)(t + 3) over F_5
        let (q, r) = Poly::from_i64s(F5, &[1, 0, 1])
            .divmod(&Poly::from_i64s(F5, &[2, 1]))
            .unwrap();
        assert_eq!(q, Poly::from_i64s(F5, &[3, 1]));
        assert!(r.is_zero());
    }

    #[test]
    fn division_errors() {
        let a = Poly::from_i64s(F5, &[1, 1]);
        assert!(matches!(a.divmod(&Poly::zero(F5)), Err(RingError::DivisionByZero)));
        let z = Poly::from_i64s(Z, &[1, 1]);
        assert!(matches!(z.divmod(&z), Err(RingError::NotAField(_))));
    }

    #[test]
    fn reduction_mod_p() {
        assert_eq!(Poly::from_i64s(Z, &[1, 2]).reduce_mod_p(2).unwrap(), Poly::one(F2));
        assert!(Poly::from_i64s(Z, &[8]).reduce_mod_p(2).unwrap().is_zero());
        // lower-right entry of h_{2,1}
        assert_eq!(Poly::from_i64s(Z, &[1, -2, 4]).reduce_mod_p(2).unwrap(), Poly::one(F2));
        assert!(matches!(Poly::one(Z).reduce_mod_p(4), Err(RingError::NotPrime(4))));
    }

    #[test]
    fn negative_residues_wrap() {
        assert_eq!(Poly::from_i64s(F5, &[-1, -6]), Poly::from_i64s(F5, &[4, 4]));
        assert_eq!(-&Poly::from_i64s(F5, &[1, 0, 2]), Poly::from_i64s(F5, &[4, 0, 3]));
    }
}
