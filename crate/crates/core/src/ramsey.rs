//! Binomial Ramsey upper bounds and the cutoffs derived from them.
//!
//! Only the bound `R(r, s) ≤ C(r+s−2, r−1)` is used, never exact Ramsey
//! numbers. That keeps every shortcut sound: a "No" cutoff fires only when
//! `k` is at least the bound (hence at least the true number), and an
//! overestimate merely sends some instances to exhaustive search. Likewise
//! the "Yes" cutoff on `n` only fires at or above the bound.

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::oracle::{enumerate_all_graphs, has_clique_of_size, has_independent_set_of_size};

/// `C(n, k)` by the multiplicative formula; every prefix product is an
/// exact binomial so each division is exact.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::ZERO;
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// `C(r+s−2, r−1)`, an upper bound on the Ramsey number `R(r, s)`.
pub fn ramsey_upper_bound(r: u64, s: u64) -> Result<BigUint> {
    if r == 0 || s == 0 {
        return Err(Error::InvalidArgument(format!(
            "Ramsey targets must be positive, got ({r}, {s})"
        )));
    }
    Ok(binomial(r + s - 2, r - 1))
}

/// `C(k + t − 2, k − 1)` where `t` is the input class's `i` (or `c`)
/// threshold: an input graph with at least this many vertices must contain
/// a `k`-clique (or `k`-independent set).
pub fn fpt_size_cutoff(k: u64, threshold: u64) -> Result<BigUint> {
    if k == 0 || threshold == 0 {
        return Err(Error::InvalidArgument(format!(
            "cutoff arguments must be positive, got k={k}, threshold={threshold}"
        )));
    }
    Ok(binomial(k + threshold - 2, k - 1))
}

/// Result of checking Ramsey's statement by enumeration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RamseyCheck {
    /// Every labeled graph on `n` vertices has an `r`-clique or an
    /// `s`-independent set.
    AllForced,
    /// The first graph in edge-mask order with neither.
    Counterexample(Graph),
}

/// Exhaustive check over all `2^C(n,2)` labeled graphs for `n ≤ 6`.
pub fn verify_ramsey_exhaustive(r: usize, s: usize, n: usize) -> Result<RamseyCheck> {
    if n > 6 {
        return Err(Error::TooLarge(format!("exhaustive Ramsey check needs n ≤ 6, got {n}")));
    }
    for g in enumerate_all_graphs(n)? {
        if !has_clique_of_size(&g, r) && !has_independent_set_of_size(&g, s) {
            return Ok(RamseyCheck::Counterexample(g));
        }
    }
    Ok(RamseyCheck::AllForced)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{max_clique, max_independent_set};

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn bound_values() {
        assert_eq!(ramsey_upper_bound(3, 3).unwrap(), big(6));
        assert_eq!(ramsey_upper_bound(3, 4).unwrap(), big(10));
        for s in 1..20 {
            assert_eq!(ramsey_upper_bound(1, s).unwrap(), big(1));
            assert_eq!(ramsey_upper_bound(s, 1).unwrap(), big(1));
        }
        assert!(matches!(ramsey_upper_bound(0, 3), Err(Error::InvalidArgument(_))));
        assert!(matches!(ramsey_upper_bound(3, 0), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn cutoff_values() {
        assert_eq!(fpt_size_cutoff(3, 3).unwrap(), big(6));
        assert_eq!(fpt_size_cutoff(4, 3).unwrap(), big(10));
        for i in 1..10 {
            assert_eq!(fpt_size_cutoff(1, i).unwrap(), big(1));
        }
        assert!(fpt_size_cutoff(0, 2).is_err());
        assert!(fpt_size_cutoff(2, 0).is_err());
    }

    #[test]
    fn huge_arguments_do_not_overflow() {
        let b = ramsey_upper_bound(200, 200).unwrap();
        // C(398, 199) has 119 decimal digits
        assert_eq!(b.to_string().len(), 119);
    }

    #[test]
    fn binomial_matches_pascal() {
        let mut row = vec![big(1)];
        for n in 1..60u64 {
            let mut next = vec![big(1)];
            for k in 1..n as usize {
                next.push(&row[k - 1] + &row[k]);
            }
            next.push(big(1));
            for (k, v) in next.iter().enumerate() {
                assert_eq!(&binomial(n, k as u64), v, "C({n},{k})");
            }
            row = next;
        }
        assert_eq!(binomial(3, 5), big(0));
    }

    #[test]
    fn exhaustive_checks() {
        assert_eq!(verify_ramsey_exhaustive(3, 3, 6).unwrap(), RamseyCheck::AllForced);
        assert_eq!(verify_ramsey_exhaustive(2, 2, 2).unwrap(), RamseyCheck::AllForced);
        match verify_ramsey_exhaustive(3, 3, 5).unwrap() {
            RamseyCheck::Counterexample(g) => {
                assert_eq!(max_clique(&g).unwrap().0, 2);
                assert_eq!(max_independent_set(&g).unwrap().0, 2);
                assert!(g.edge_count() == 5 && (0..5).all(|v| g.degree(v) == 2));
            }
            other => panic!("expected counterexample, got {other:?}"),
        }
        assert!(matches!(verify_ramsey_exhaustive(3, 3, 7), Err(Error::TooLarge(_))));
    }
}
