//! Dimension counts for `H_i(G, F_p)` of the groups along the amalgam.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use serde::Serialize;

use super::{HomologyError, WedgeMonomial};
use crate::ring::{is_prime, CoeffRing, RingError};

/// `C(n, k)`, or `None` on overflow.
pub fn binomial(n: u64, k: u64) -> Option<u64> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for j in 0..k {
        // acc·(n-j) is divisible by j+1 at every step
        acc = acc.checked_mul(u128::from(n - j))? / u128::from(j + 1);
        if acc > u128::from(u64::MAX) {
            return None;
        }
    }
    u64::try_from(acc).ok()
}

/// Number of multisets of size `k` drawn from `n` elements.
pub fn multiset_count(n: u64, k: u64) -> Option<u64> {
    match (n, k) {
        (_, 0) => Some(1),
        (0, _) => Some(0),
        _ => binomial(n + k - 1, k),
    }
}

/// Degree-`i` part of the exterior algebra on `n` generators of degree one.
pub fn dim_exterior(n: u64, i: u64) -> Option<u64> {
    binomial(n, i)
}

/// Degree-`i` part of the divided power algebra on `n` generators of
/// degree two: `γ_m` sits in degree `2m`.
pub fn dim_divided_power(n: u64, i: u64) -> Option<u64> {
    if i % 2 == 1 {
        return Some(0);
    }
    multiset_count(n, i / 2)
}

fn overflow<T>(x: Option<T>) -> Result<T, HomologyError> {
    x.ok_or(HomologyError::Overflow)
}

/// `dim H_i(Z^r × ∏ Z/n_j, F_p)`: the exterior algebra on `r + m`
/// generators tensored with the divided power algebra on `m`, where `m`
/// counts the cyclic factors of order divisible by `p`.
pub fn abelian_dims(free_rank: u64, torsion: &[u64], p: u64, i: u64) -> Result<u64, HomologyError> {
    let m = torsion.iter().filter(|&&n| n % p == 0).count() as u64;
    let mut total: u64 = 0;
    for s in 0..=i / 2 {
        let term = overflow(
            dim_exterior(free_rank + m, i - 2 * s)
                .zip(multiset_count(m, s))
                .and_then(|(a, b)| a.checked_mul(b)),
        )?;
        total = overflow(total.checked_add(term))?;
    }
    Ok(total)
}

fn convolve(
    i: u64,
    f: impl Fn(u64) -> Result<u64, HomologyError>,
    g: impl Fn(u64) -> Result<u64, HomologyError>,
    skip_top: bool,
) -> Result<u64, HomologyError> {
    let top = if skip_top { i } else { i + 1 };
    let mut total: u64 = 0;
    for l in 0..top {
        let term = overflow(f(l)?.checked_mul(g(i - l)?))?;
        total = overflow(total.checked_add(term))?;
    }
    Ok(total)
}

/// A homology basis monomial of `H_•(V, F_p)` for an elementary abelian
/// `p`-group `V` with basis labelled by powers of `t`: a wedge of distinct
/// degree-one generators times divided powers `γ_m` of degree-two ones.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeightedMonomial {
    wedge: Vec<u32>,
    divided: Vec<(u32, u32)>,
}

impl WeightedMonomial {
    pub fn wedge(&self) -> &[u32] {
        &self.wedge
    }

    /// Pairs `(generator, m)` with `m ≥ 1`.
    pub fn divided(&self) -> &[(u32, u32)] {
        &self.divided
    }

    pub fn degree(&self) -> u64 {
        self.wedge.len() as u64 + self.divided.iter().map(|&(_, m)| 2 * u64::from(m)).sum::<u64>()
    }

    /// Exponent of `α` in the action of the torus element `diag(α, α^-1)`,
    /// which scales every degree-one generator by `α²`.
    pub fn weight(&self) -> u64 {
        2 * self.wedge.len() as u64 + self.divided.iter().map(|&(_, m)| 2 * u64::from(m)).sum::<u64>()
    }

    pub fn is_pure_wedge(&self) -> bool {
        self.divided.is_empty()
    }
}

fn subsets(labels: &[u32], k: usize, start: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if cur.len() == k {
        out.push(cur.clone());
        return;
    }
    for j in start..labels.len() {
        cur.push(labels[j]);
        subsets(labels, k, j + 1, cur, out);
        cur.pop();
    }
}

fn distributions(labels: &[u32], total: u32, j: usize, cur: &mut Vec<(u32, u32)>, out: &mut Vec<Vec<(u32, u32)>>) {
    if j == labels.len() {
        if total == 0 {
            out.push(cur.clone());
        }
        return;
    }
    for m in 0..=total {
        if m > 0 {
            cur.push((labels[j], m));
        }
        distributions(labels, total - m, j + 1, cur, out);
        if m > 0 {
            cur.pop();
        }
    }
}

/// All basis monomials of degree `i` over the given generator labels.
pub fn weighted_monomials(labels: &[u32], i: u64) -> Vec<WeightedMonomial> {
    let mut out = Vec::new();
    for s in 0..=i / 2 {
        let w = (i - 2 * s) as usize;
        if w > labels.len() {
            continue;
        }
        let mut wedges = Vec::new();
        subsets(labels, w, 0, &mut Vec::new(), &mut wedges);
        let mut divs = Vec::new();
        distributions(labels, s as u32, 0, &mut Vec::new(), &mut divs);
        for wedge in &wedges {
            for divided in &divs {
                out.push(WeightedMonomial {
                    wedge: wedge.clone(),
                    divided: divided.clone(),
                });
            }
        }
    }
    out.sort();
    out
}

/// Which powers of `t` span the truncated ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CoinvBasis {
    /// `t^0, …, t^d`: the whole of `F_p[t]`.
    Full,
    /// `t^1, …, t^d`: the ideal `t·F_p[t]`.
    TPart,
}

/// Which monomials are counted.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CoinvPart {
    All,
    /// Exterior monomials only (no divided powers).
    PureWedge,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CoinvOptions {
    pub basis: CoinvBasis,
    pub part: CoinvPart,
}

impl CoinvOptions {
    pub const FULL: CoinvOptions = CoinvOptions {
        basis: CoinvBasis::Full,
        part: CoinvPart::All,
    };
    pub const T_WEDGE: CoinvOptions = CoinvOptions {
        basis: CoinvBasis::TPart,
        part: CoinvPart::PureWedge,
    };

    fn labels(self, d: u64) -> Vec<u32> {
        let lo = match self.basis {
            CoinvBasis::Full => 0,
            CoinvBasis::TPart => 1,
        };
        (lo..=d as u32).collect()
    }
}

/// Dimension of the `F_p^×`-coinvariants of `H_i(R, F_p)` for the
/// truncated `R`. The action is diagonal on the monomial basis, with `α`
/// acting by `α^weight`, so the coinvariants are spanned by the monomials
/// whose weight is divisible by `p - 1`.
pub fn coinvariant_dims(p: u64, i: u64, d: u64, opts: CoinvOptions) -> Result<u64, HomologyError> {
    CoeffRing::modulo(p)?;
    let n = opts.labels(d).len() as u64;
    let mut total: u64 = 0;
    for s in 0..=i / 2 {
        let w = i - 2 * s;
        if opts.part == CoinvPart::PureWedge && s > 0 {
            continue;
        }
        // weight = 2w + 2s
        if !(2 * (w + s)).is_multiple_of(p - 1) {
            continue;
        }
        let term = overflow(
            dim_exterior(n, w)
                .zip(multiset_count(n, s))
                .and_then(|(a, b)| a.checked_mul(b)),
        )?;
        total = overflow(total.checked_add(term))?;
    }
    Ok(total)
}

/// [`coinvariant_dims`] by explicit enumeration of the basis.
pub fn coinvariant_dims_by_enumeration(p: u64, i: u64, d: u64, opts: CoinvOptions) -> Result<u64, HomologyError> {
    CoeffRing::modulo(p)?;
    let count = weighted_monomials(&opts.labels(d), i)
        .into_iter()
        .filter(|m| opts.part == CoinvPart::All || m.is_pure_wedge())
        .filter(|m| m.weight() % (p - 1) == 0)
        .count();
    Ok(count as u64)
}

/// Groups with tabulated `F_p`-homology.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum GroupId {
    /// The additive group `t·Z[t]`.
    Tzt,
    /// The additive group `t·F_p[t]`.
    Tfpt,
    /// `B(Z) ≅ Z/2 × Z`.
    Bz,
    /// `B(Z[t]) ≅ B(Z) × t·Z[t]`.
    Bzt,
    /// `B(F_p) ≅ F_p ⋊ F_p^×`.
    Bfp,
    /// `B(F_p[t]) ≅ F_p[t] ⋊ F_p^×`.
    Bfpt,
    /// `SL2(Z)`, seen through its abelianization `Z/12`.
    Sl2z,
    E2zt,
    /// The `H(B(F_p[t]))/H(B(F_p))` summand of `SL2(F_p[t])`, `p ∈ {2, 3}`.
    Sl2fpt,
}

impl GroupId {
    pub const ALL: [GroupId; 9] = [
        GroupId::Tzt,
        GroupId::Tfpt,
        GroupId::Bz,
        GroupId::Bzt,
        GroupId::Bfp,
        GroupId::Bfpt,
        GroupId::Sl2z,
        GroupId::E2zt,
        GroupId::Sl2fpt,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            GroupId::Tzt => "tzt",
            GroupId::Tfpt => "tfpt",
            GroupId::Bz => "bz",
            GroupId::Bzt => "bzt",
            GroupId::Bfp => "bfp",
            GroupId::Bfpt => "bfpt",
            GroupId::Sl2z => "sl2z",
            GroupId::E2zt => "e2zt",
            GroupId::Sl2fpt => "sl2fpt",
        }
    }

    pub fn description(self) -> &'static str {
        match self {
            GroupId::Tzt => "t·Z[t] (additive)",
            GroupId::Tfpt => "t·F_p[t] (additive)",
            GroupId::Bz => "B(Z)",
            GroupId::Bzt => "B(Z[t])",
            GroupId::Bfp => "B(F_p)",
            GroupId::Bfpt => "B(F_p[t])",
            GroupId::Sl2z => "SL2(Z) ≅_H Z/12",
            GroupId::E2zt => "E2(Z[t])",
            GroupId::Sl2fpt => "SL2(F_p[t]), B-quotient summand",
        }
    }
}

impl fmt::Display for GroupId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for GroupId {
    type Err = HomologyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        GroupId::ALL
            .into_iter()
            .find(|g| g.as_str() == s)
            .ok_or_else(|| HomologyError::UnknownGroup(s.to_string()))
    }
}

/// A dimension, possibly plus a summand that is not computed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Dimension {
    pub value: u64,
    /// Set when the true dimension is `value` plus the dimension of
    /// `H_i(SL2(F_p), F_p)`, which is left uncomputed.
    pub opaque: bool,
}

impl Dimension {
    fn exact(value: u64) -> Self {
        Dimension { value, opaque: false }
    }

    pub fn flags(&self) -> &'static str {
        if self.opaque {
            "opaque:H(SL2(F_p))"
        } else {
            ""
        }
    }
}

fn sl2z_dim(p: u64, i: u64) -> u64 {
    // H_i(Z/12, F_p) is F_p in every degree when p | 12, else only in degree 0
    u64::from(i == 0 || p == 2 || p == 3)
}

fn exact_dim(group: GroupId, p: u64, i: u64, d: u64) -> Result<u64, HomologyError> {
    Ok(match group {
        GroupId::Tzt => abelian_dims(d, &[], p, i)?,
        GroupId::Tfpt => overflow(
            (0..=i / 2)
                .map(|s| {
                    dim_exterior(d, i - 2 * s)
                        .zip(dim_divided_power(d, 2 * s))
                        .and_then(|(a, b)| a.checked_mul(b))
                })
                .try_fold(0u64, |acc, t| acc.checked_add(t?)),
        )?,
        GroupId::Bz => abelian_dims(1, &[2], p, i)?,
        GroupId::Bzt => convolve(
            i,
            |l| exact_dim(GroupId::Bz, p, l, d),
            |m| exact_dim(GroupId::Tzt, p, m, d),
            false,
        )?,
        GroupId::Bfp => coinvariant_dims(p, i, 0, CoinvOptions::FULL)?,
        GroupId::Bfpt => coinvariant_dims(p, i, d, CoinvOptions::FULL)?,
        GroupId::Sl2z => sl2z_dim(p, i),
        GroupId::E2zt => {
            if p >= 3 {
                let z12 = sl2z_dim(p, i);
                match i {
                    0 => 1,
                    1 => d + z12,
                    _ => overflow(binomial(d + 1, i))? + z12,
                }
            } else {
                // H(B(Z[t]))/H(B(Z)) ⊕ H(SL2(Z)), with the quotient read off
                // the Künneth decomposition B(Z[t]) = B(Z) × t·Z[t]
                convolve(
                    i,
                    |l| exact_dim(GroupId::Bz, p, l, d),
                    |m| exact_dim(GroupId::Tzt, p, m, d),
                    true,
                )? + sl2z_dim(p, i)
            }
        }
        GroupId::Sl2fpt => {
            if i == 0 {
                1
            } else {
                convolve(
                    i,
                    |l| exact_dim(GroupId::Bfp, p, l, d),
                    |m| exact_dim(GroupId::Tfpt, p, m, d),
                    true,
                )?
            }
        }
    })
}

/// `dim H_i(G, F_p)` with `t`-polynomials truncated to degree `≤ d`.
pub fn h_dims(group: GroupId, p: u64, i: u64, d: u64) -> Result<Dimension, HomologyError> {
    if !is_prime(p) {
        return Err(RingError::NotPrime(p).into());
    }
    if group == GroupId::Sl2fpt && p != 2 && p != 3 {
        return Err(HomologyError::Unsupported {
            group,
            p,
            reason: "the torus acts nontrivially on H(t·F_p[t]) for p ≥ 5, so B(F_p[t]) is not B(F_p) × t·F_p[t]",
        });
    }
    let value = exact_dim(group, p, i, d)?;
    if group == GroupId::Sl2fpt && i > 0 {
        Ok(Dimension { value, opaque: true })
    } else {
        Ok(Dimension::exact(value))
    }
}

/// Dimensions of one group in degrees `0..=max_i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GradedDimTable {
    pub group: GroupId,
    pub p: u64,
    pub d: u64,
    pub dims: Vec<Dimension>,
}

impl GradedDimTable {
    pub fn get(&self, i: usize) -> Option<Dimension> {
        self.dims.get(i).copied()
    }
}

pub fn h_table(group: GroupId, p: u64, max_i: u64, d: u64) -> Result<GradedDimTable, HomologyError> {
    let dims = (0..=max_i)
        .map(|i| h_dims(group, p, i, d))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(GradedDimTable { group, p, d, dims })
}

/// One degree of the Mayer–Vietoris dimension ledger for
/// `E2(Z[t]) = SL2(Z) *_{B(Z)} B(Z[t])`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MvLedgerEntry {
    pub p: u64,
    pub i: u64,
    pub d: u64,
    pub e2zt: u64,
    pub bzt: u64,
    pub sl2z: u64,
    pub bz: u64,
    pub holds: bool,
}

/// Check `dim H_i(E2(Z[t])) = dim H_i(B(Z[t])) + dim H_i(SL2(Z)) − dim H_i(B(Z))`.
pub fn mv_ledger_check(p: u64, i: u64, d: u64) -> Result<MvLedgerEntry, HomologyError> {
    let get = |g| h_dims(g, p, i, d).map(|x| x.value);
    let (e2zt, bzt, sl2z, bz) = (
        get(GroupId::E2zt)?,
        get(GroupId::Bzt)?,
        get(GroupId::Sl2z)?,
        get(GroupId::Bz)?,
    );
    Ok(MvLedgerEntry {
        p,
        i,
        d,
        e2zt,
        bzt,
        sl2z,
        bz,
        holds: u128::from(e2zt) + u128::from(bz) == u128::from(bzt) + u128::from(sl2z),
    })
}

/// Divisibility lower bound for the order of a degree-`i` class: `2·3`
/// times every prime `5 ≤ p ≤ prime_bound` with `(p - 1)/2` dividing `i`.
/// The empty monomial spans degree zero and gets bound `1`.
pub fn order_bound_for_degree(i: u64, prime_bound: u64) -> BigUint {
    if i == 0 {
        return BigUint::from(1u32);
    }
    let mut acc = BigUint::from(6u32);
    for p in 5..=prime_bound {
        if is_prime(p) && i.is_multiple_of((p - 1) / 2) {
            acc *= p;
        }
    }
    acc
}

pub fn class_order_lower_bound(x: &WedgeMonomial, prime_bound: u64) -> BigUint {
    order_bound_for_degree(x.degree() as u64, prime_bound)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn dim(g: GroupId, p: u64, i: u64, d: u64) -> u64 {
        h_dims(g, p, i, d).unwrap().value
    }

    fn count_subsets(n: u64, i: u64) -> u64 {
        let labels: Vec<u32> = (0..n as u32).collect();
        weighted_monomials(&labels, i)
            .iter()
            .filter(|m| m.is_pure_wedge())
            .count() as u64
    }

    fn count_divided(n: u64, i: u64) -> u64 {
        let labels: Vec<u32> = (0..n as u32).collect();
        weighted_monomials(&labels, i)
            .iter()
            .filter(|m| m.wedge().is_empty())
            .count() as u64
    }

    #[test]
    fn exterior_examples() {
        assert_eq!(dim_exterior(3, 2), Some(3));
        assert_eq!(dim_exterior(5, 0), Some(1));
        assert_eq!(dim_exterior(5, 2), Some(10));
        assert_eq!(count_subsets(5, 2), 10);
        assert_eq!(dim_exterior(2, 3), Some(0));
    }

    #[test]
    fn divided_power_examples() {
        for n in 0..5 {
            assert_eq!(dim_divided_power(n, 1), Some(0));
        }
        assert_eq!(dim_divided_power(1, 4), Some(1));
        assert_eq!(dim_divided_power(2, 4), Some(3));
        assert_eq!(count_divided(2, 4), 3);
        assert_eq!(dim_divided_power(0, 0), Some(1));
        assert_eq!(dim_divided_power(0, 2), Some(0));
    }

    #[test]
    fn counts_match_enumeration() {
        for n in 0..=6 {
            for i in 0..=8 {
                assert_eq!(dim_exterior(n, i), Some(count_subsets(n, i)), "ext n={n} i={i}");
                assert_eq!(dim_divided_power(n, i), Some(count_divided(n, i)), "div n={n} i={i}");
            }
        }
    }

    #[test]
    fn binomial_overflow_is_reported() {
        assert_eq!(binomial(64, 32), Some(1_832_624_140_942_590_534));
        assert_eq!(binomial(200, 100), None);
        assert_eq!(binomial(3, 5), Some(0));
    }

    #[test]
    fn h_dims_examples() {
        assert_eq!(dim(GroupId::E2zt, 3, 1, 4), 5);
        assert_eq!(dim(GroupId::E2zt, 5, 2, 4), 10);
        assert_eq!(dim(GroupId::Bzt, 2, 1, 4), 6);
        for g in GroupId::ALL {
            for p in [2, 3] {
                assert_eq!(h_dims(g, p, 0, 5).unwrap(), Dimension::exact(1), "{g} p={p}");
            }
        }
    }

    #[test]
    fn unsupported_combinations_are_errors() {
        assert!(matches!(
            h_dims(GroupId::Sl2fpt, 5, 1, 3),
            Err(HomologyError::Unsupported { .. })
        ));
        assert!(h_dims(GroupId::E2zt, 4, 1, 3).is_err());
        assert!(h_dims(GroupId::Sl2fpt, 3, 2, 3).unwrap().opaque);
        assert!("sl3z".parse::<GroupId>().is_err());
        assert_eq!("bfpt".parse::<GroupId>().unwrap(), GroupId::Bfpt);
    }

    #[test]
    fn coinvariant_examples() {
        for d in 0..6 {
            for i in 0..6 {
                for p in [2, 3] {
                    let full = abelian_dims(0, &vec![p; d as usize + 1], p, i).unwrap();
                    assert_eq!(coinvariant_dims(p, i, d, CoinvOptions::FULL).unwrap(), full);
                }
            }
        }
        assert_eq!(coinvariant_dims(5, 1, 4, CoinvOptions::T_WEDGE).unwrap(), 0);
        assert_eq!(coinvariant_dims(5, 2, 4, CoinvOptions::T_WEDGE).unwrap(), 6);
    }

    #[test]
    fn coinvariants_match_enumeration() {
        let opts = [
            CoinvOptions::FULL,
            CoinvOptions::T_WEDGE,
            CoinvOptions {
                basis: CoinvBasis::TPart,
                part: CoinvPart::All,
            },
            CoinvOptions {
                basis: CoinvBasis::Full,
                part: CoinvPart::PureWedge,
            },
        ];
        for p in [2, 3, 5, 7, 11] {
            for d in 0..=4 {
                for i in 0..=6 {
                    for o in opts {
                        assert_eq!(
                            coinvariant_dims(p, i, d, o).unwrap(),
                            coinvariant_dims_by_enumeration(p, i, d, o).unwrap(),
                            "p={p} i={i} d={d} {o:?}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn pure_wedge_part_follows_weight_rule() {
        for p in [5u64, 7] {
            for d in 0..=8 {
                for i in 0..=d {
                    let w = coinvariant_dims(p, i, d, CoinvOptions::T_WEDGE).unwrap();
                    assert_eq!(w != 0, i % ((p - 1) / 2) == 0, "p={p} i={i} d={d}");
                }
            }
        }
    }

    #[test]
    fn kunneth_consistency() {
        for p in [2u64, 3, 5, 7] {
            for d in 0..=8 {
                for i in 0..=8 {
                    let bzt = dim(GroupId::Bzt, p, i, d);
                    assert_eq!(bzt, abelian_dims(1 + d, &[2], p, i).unwrap());
                    let conv: u64 = (0..=i)
                        .map(|l| dim(GroupId::Bz, p, l, d) * dim(GroupId::Tzt, p, i - l, d))
                        .sum();
                    assert_eq!(bzt, conv);
                    assert_eq!(dim(GroupId::Sl2z, p, i, d), abelian_dims(0, &[12], p, i).unwrap());
                    assert_eq!(
                        dim(GroupId::Tfpt, p, i, d),
                        abelian_dims(0, &vec![p; d as usize], p, i).unwrap()
                    );
                    if p <= 3 {
                        let conv: u64 = (0..=i)
                            .map(|l| dim(GroupId::Bfp, p, l, d) * dim(GroupId::Tfpt, p, i - l, d))
                            .sum();
                        assert_eq!(dim(GroupId::Bfpt, p, i, d), conv);
                        let quotient = if i == 0 { 1 } else { conv - dim(GroupId::Bfp, p, i, d) };
                        assert_eq!(dim(GroupId::Sl2fpt, p, i, d), quotient);
                    }
                }
            }
        }
    }

    #[test]
    fn e2zt_closed_formula() {
        for d in 0..=8 {
            assert_eq!(dim(GroupId::E2zt, 3, 1, d), d + 1);
            for i in 2..=6 {
                assert_eq!(dim(GroupId::E2zt, 5, i, d), binomial(d + 1, i).unwrap());
            }
        }
    }

    #[test]
    fn ledger_examples() {
        let e = mv_ledger_check(3, 1, 6).unwrap();
        assert_eq!((e.bzt, e.sl2z, e.bz, e.e2zt), (7, 1, 1, 7));
        assert!(e.holds);
        let e = mv_ledger_check(5, 2, 6).unwrap();
        assert_eq!((e.bzt, e.sl2z, e.bz, e.e2zt), (21, 0, 0, 21));
        let e = mv_ledger_check(2, 0, 3).unwrap();
        assert_eq!((e.bzt, e.sl2z, e.bz, e.e2zt), (1, 1, 1, 1));
        for p in [2, 3, 5, 7] {
            for i in 0..=8 {
                for d in 0..=8 {
                    assert!(mv_ledger_check(p, i, d).unwrap().holds, "p={p} i={i} d={d}");
                }
            }
        }
    }

    #[test]
    fn order_bounds() {
        assert_eq!(order_bound_for_degree(1, 7), BigUint::from(6u32));
        assert_eq!(order_bound_for_degree(2, 7), BigUint::from(30u32));
        assert_eq!(order_bound_for_degree(3, 7), BigUint::from(42u32));
        assert_eq!(order_bound_for_degree(6, 13), BigUint::from(2u32 * 3 * 5 * 7 * 13));
        let x = WedgeMonomial::new(vec![1, 4]).unwrap();
        assert_eq!(class_order_lower_bound(&x, 5), BigUint::from(30u32));
        assert_eq!(class_order_lower_bound(&WedgeMonomial::unit(), 7), BigUint::from(1u32));
    }

    proptest! {
        #[test]
        fn tables_are_monotone_in_d(
            g in proptest::sample::select(GroupId::ALL.to_vec()),
            p in prop_oneof![Just(2u64), Just(3)],
            i in 0u64..7,
            d in 0u64..7,
        ) {
            let a = dim(g, p, i, d);
            let b = dim(g, p, i, d + 1);
            prop_assert!(a <= b);
        }

        #[test]
        fn weight_is_degree_plus_wedge_length(n in 0u64..5, i in 0u64..7) {
            let labels: Vec<u32> = (0..n as u32).collect();
            for m in weighted_monomials(&labels, i) {
                prop_assert_eq!(m.degree(), i);
                prop_assert_eq!(m.weight(), i + m.wedge().len() as u64);
            }
        }
    }
}
