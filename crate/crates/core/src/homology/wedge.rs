//! Symbolic classes in the exterior algebra on `t·R[t]`.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::HomologyError;
use crate::ring::{CoeffRing, RingError};

/// `t^{l_1} ∧ ⋯ ∧ t^{l_i}` with `1 ≤ l_1 < ⋯ < l_i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WedgeMonomial(Vec<u32>);

impl WedgeMonomial {
    pub fn new(exponents: Vec<u32>) -> Result<Self, HomologyError> {
        let ascending = exponents.windows(2).all(|w| w[0] < w[1]);
        if !ascending || exponents.first() == Some(&0) {
            return Err(HomologyError::InvalidMonomial(exponents));
        }
        Ok(WedgeMonomial(exponents))
    }

    /// The empty wedge, spanning degree zero.
    pub fn unit() -> Self {
        WedgeMonomial(Vec::new())
    }

    /// Sort an arbitrary sequence of exponents. Returns the sorted monomial
    /// and whether the sorting permutation is odd, or `None` when an
    /// exponent repeats.
    pub fn from_unsorted(exponents: &[u32]) -> Result<Option<(bool, Self)>, HomologyError> {
        if exponents.contains(&0) {
            return Err(HomologyError::InvalidMonomial(exponents.to_vec()));
        }
        let mut v = exponents.to_vec();
        let mut odd = false;
        // insertion sort, counting transpositions
        for i in 1..v.len() {
            let mut j = i;
            while j > 0 && v[j - 1] > v[j] {
                v.swap(j - 1, j);
                odd = !odd;
                j -= 1;
            }
            if j > 0 && v[j - 1] == v[j] {
                return Ok(None);
            }
        }
        Ok(Some((odd, WedgeMonomial(v))))
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    /// `self ∧ other` as `(odd, monomial)`, or `None` when a factor repeats.
    pub fn wedge(&self, other: &WedgeMonomial) -> Option<(bool, WedgeMonomial)> {
        let (x, y) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(x.len() + y.len());
        let (mut i, mut j) = (0, 0);
        let mut inversions = 0usize;
        while i < x.len() || j < y.len() {
            if j == y.len() || (i < x.len() && x[i] < y[j]) {
                out.push(x[i]);
                i += 1;
            } else if i == x.len() || y[j] < x[i] {
                // y[j] jumps over the remaining x's
                inversions += x.len() - i;
                out.push(y[j]);
                j += 1;
            } else {
                return None;
            }
        }
        Some((inversions % 2 == 1, WedgeMonomial(out)))
    }
}

impl fmt::Display for WedgeMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (k, l) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, "∧")?;
            }
            write!(f, "t^{l}")?;
        }
        Ok(())
    }
}

/// Finite linear combination of wedge monomials with integer or residue
/// coefficients. Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WedgeClass {
    ring: CoeffRing,
    terms: BTreeMap<WedgeMonomial, BigInt>,
}

fn normalize_coeff(ring: CoeffRing, c: BigInt) -> BigInt {
    match ring {
        CoeffRing::Integers => c,
        CoeffRing::Mod(p) => c.mod_floor(&BigInt::from(p)),
    }
}

impl WedgeClass {
    pub fn zero(ring: CoeffRing) -> Self {
        WedgeClass {
            ring,
            terms: BTreeMap::new(),
        }
    }

    pub fn monomial(ring: CoeffRing, m: WedgeMonomial, coeff: BigInt) -> Self {
        let mut x = WedgeClass::zero(ring);
        x.add_term(m, coeff);
        x
    }

    pub fn from_terms<I>(ring: CoeffRing, terms: I) -> Self
    where
        I: IntoIterator<Item = (WedgeMonomial, BigInt)>,
    {
        let mut x = WedgeClass::zero(ring);
        for (m, c) in terms {
            x.add_term(m, c);
        }
        x
    }

    fn add_term(&mut self, m: WedgeMonomial, c: BigInt) {
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                let c = normalize_coeff(self.ring, c);
                if !c.is_zero() {
                    v.insert(c);
                }
            }
            Entry::Occupied(mut o) => {
                let c = normalize_coeff(self.ring, o.get() + c);
                if c.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = c;
                }
            }
        }
    }

    pub fn ring(&self) -> CoeffRing {
        self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &WedgeMonomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// Terms in canonical (lexicographic) monomial order.
    pub fn terms(&self) -> impl Iterator<Item = (&WedgeMonomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn checked_add(&self, other: &WedgeClass) -> Result<WedgeClass, HomologyError> {
        if self.ring != other.ring {
            return Err(HomologyError::RingMismatch(self.ring, other.ring));
        }
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, k: &BigInt) -> WedgeClass {
        WedgeClass::from_terms(self.ring, self.terms.iter().map(|(m, c)| (m.clone(), c * k)))
    }

    pub fn neg(&self) -> WedgeClass {
        self.scale(&-BigInt::one())
    }
}

impl fmt::Display for WedgeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}·{m}")?;
        }
        Ok(())
    }
}

/// Bilinear extension of the monomial wedge; the sign is that of the
/// sorting permutation and a repeated exponent annihilates.
pub fn wedge_product(x: &WedgeClass, y: &WedgeClass) -> Result<WedgeClass, HomologyError> {
    if x.ring != y.ring {
        return Err(HomologyError::RingMismatch(x.ring, y.ring));
    }
    let mut out = WedgeClass::zero(x.ring);
    for (mx, cx) in &x.terms {
        for (my, cy) in &y.terms {
            if let Some((odd, m)) = mx.wedge(my) {
                let c = cx * cy;
                out.add_term(m, if odd { -c } else { c });
            }
        }
    }
    Ok(out)
}

/// Image of an integral class under reduction of coefficients modulo `p`:
/// monomial labels are kept, coefficients reduced, zero terms dropped.
pub fn phi_star_class(x: &WedgeClass, p: u64) -> Result<WedgeClass, HomologyError> {
    if x.ring != CoeffRing::Integers {
        return Err(RingError::ExpectedIntegers(x.ring).into());
    }
    let ring = CoeffRing::modulo(p)?;
    Ok(WedgeClass::from_terms(
        ring,
        x.terms.iter().map(|(m, c)| (m.clone(), c.clone())),
    ))
}
