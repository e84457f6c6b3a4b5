//! Search for families of units whose nonempty subfamily sums are all units.
//!
//! In the localization of the integers at `p`, a unit reduces to a nonzero
//! residue mod `p` and a sum is a unit exactly when its residue is nonzero, so
//! the question is a finite one about tuples of nonzero residues.

use serde::Serialize;

use super::coeff::is_prime;
use super::RingError;

/// Bounds for [`sn_witness_search`].
#[derive(Clone, Copy, Debug)]
pub struct SearchLimits {
    pub max_prime: u64,
    /// `None` means `n ≤ p`.
    pub max_arity: Option<usize>,
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits {
            max_prime: 31,
            max_arity: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SnWitness {
    pub p: u64,
    pub n: usize,
    /// `None` when the exhaustive search proved that no witness exists.
    pub residues: Option<Vec<u64>>,
}

impl SnWitness {
    pub fn exists(&self) -> bool {
        self.residues.is_some()
    }
}

/// Exhaustive search for `n` nonzero residues mod `p` with every nonempty
/// subset sum nonzero.
///
/// Subset sums do not depend on order, so only nondecreasing tuples are
/// visited; a branch is pruned as soon as zero becomes a subset sum. The
/// first witness in lexicographic order is returned.
pub fn sn_witness_search(p: u64, n: usize, limits: SearchLimits) -> Result<SnWitness, RingError> {
    if !is_prime(p) {
        return Err(RingError::NotPrime(p));
    }
    if n == 0 {
        return Err(RingError::SearchCap("arity must be at least 1".into()));
    }
    if p > limits.max_prime {
        return Err(RingError::SearchCap(format!(
            "p = {p} exceeds the search bound {}",
            limits.max_prime
        )));
    }
    let max_n = limits.max_arity.unwrap_or(p as usize);
    if n > max_n {
        return Err(RingError::SearchCap(format!(
            "n = {n} exceeds the search bound {max_n}"
        )));
    }

    let mut chosen = Vec::with_capacity(n);
    // reachable[r] is true when some nonempty subset of `chosen` sums to r mod p
    let reachable = vec![false; p as usize];
    let found = extend(p, n, 1, &mut chosen, &reachable);
    Ok(SnWitness {
        p,
        n,
        residues: found.then_some(chosen),
    })
}

fn extend(p: u64, n: usize, min: u64, chosen: &mut Vec<u64>, reachable: &[bool]) -> bool {
    if chosen.len() == n {
        return true;
    }
    for a in min..p {
        let mut next = reachable.to_vec();
        next[a as usize] = true;
        for (r, &hit) in reachable.iter().enumerate() {
            if hit {
                next[(r + a as usize) % p as usize] = true;
            }
        }
        if next[0] {
            continue;
        }
        chosen.push(a);
        if extend(p, n, a, chosen, &next) {
            return true;
        }
        chosen.pop();
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Plain enumeration over every ordered tuple, every subset.
    fn brute_force(p: u64, n: usize) -> Option<Vec<u64>> {
        let total = (p - 1).pow(n as u32);
        for idx in 0..total {
            let mut x = idx;
            let tuple: Vec<u64> = (0..n)
                .map(|_| {
                    let r = x % (p - 1) + 1;
                    x /= p - 1;
                    r
                })
                .collect();
            let ok = (1u32..(1 << n)).all(|mask| {
                let s: u64 = (0..n).filter(|i| mask & (1 << i) != 0).map(|i| tuple[i]).sum();
                !s.is_multiple_of(p)
            });
            if ok {
                return Some(tuple);
            }
        }
        None
    }

    #[test]
    fn small_cases() {
        let lim = SearchLimits::default();
        assert_eq!(sn_witness_search(3, 2, lim).unwrap().residues, Some(vec![1, 1]));
        assert_eq!(sn_witness_search(3, 3, lim).unwrap().residues, None);
        assert_eq!(sn_witness_search(2, 1, lim).unwrap().residues, Some(vec![1]));
        assert_eq!(sn_witness_search(2, 2, lim).unwrap().residues, None);
    }

    #[test]
    fn agrees_with_brute_force() {
        for p in [2u64, 3, 5, 7] {
            for n in 1..=(p as usize).min(6) {
                let fast = sn_witness_search(p, n, SearchLimits::default()).unwrap();
                assert_eq!(fast.exists(), brute_force(p, n).is_some(), "p={p} n={n}");
            }
        }
    }

    #[test]
    fn limits_are_distinct_from_nonexistence() {
        let lim = SearchLimits::default();
        assert!(matches!(sn_witness_search(37, 2, lim), Err(RingError::SearchCap(_))));
        assert!(matches!(sn_witness_search(5, 6, lim), Err(RingError::SearchCap(_))));
        assert!(matches!(sn_witness_search(4, 2, lim), Err(RingError::NotPrime(4))));
        let wide = SearchLimits {
            max_prime: 31,
            max_arity: Some(40),
        };
        assert!(!sn_witness_search(5, 6, wide).unwrap().exists());
    }
}
