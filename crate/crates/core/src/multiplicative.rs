//! Binary sequences `x_1 … x_n` with `x_k x_{qk} = 0`.
//!
//! Every `k ≤ n` is uniquely `i·q^j` with `q ∤ i`, and the constraint only
//! links consecutive terms of each chain `i, iq, iq², …`. The count is the
//! product of one-dimensional golden-mean counts over those chains.

use num_bigint::BigUint;
use num_traits::One;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::fibonacci::{ln_a, weighted_geometric_tail, FibSeq};
use crate::systems::SeriesValue;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FiberDecomposition {
    pub q: u64,
    pub n: u64,
    /// `(i, length)` with `q ∤ i`, in increasing `i`.
    pub fibers: Vec<(u64, u64)>,
}

fn check(n: u64, q: u64) -> Result<()> {
    if n == 0 || q < 2 {
        return Err(Error::InvalidArgument(format!(
            "need n >= 1 and q >= 2, got n={n}, q={q}"
        )));
    }
    Ok(())
}

fn chain_length(i: u64, q: u64, n: u64) -> u64 {
    let mut len = 0;
    let mut k = i;
    while k <= n {
        len += 1;
        match k.checked_mul(q) {
            Some(next) => k = next,
            None => break,
        }
    }
    len
}

/// Chains as `(length, number of chains with that length)`, longest first,
/// without listing every chain.
fn chain_histogram(n: u64, q: u64) -> Vec<(u64, u64)> {
    // Chains of length ≥ L start at i ≤ n / q^{L-1}; count the q ∤ i among them.
    let coprime_upto = |m: u64| m - m / q;
    let mut out = Vec::new();
    let mut len = 1;
    let mut bound = n;
    while bound > 0 {
        let next = bound / q;
        let exact = coprime_upto(bound) - coprime_upto(next);
        if exact > 0 {
            out.push((len, exact));
        }
        bound = next;
        len += 1;
    }
    out.reverse();
    out
}

pub fn fiber_decomposition(n: u64, q: u64) -> Result<FiberDecomposition> {
    check(n, q)?;
    let fibers = (1..=n)
        .filter(|i| i % q != 0)
        .map(|i| (i, chain_length(i, q, n)))
        .collect();
    Ok(FiberDecomposition { q, n, fibers })
}

/// `Π a_ℓ` over chain lengths `ℓ`.
pub fn count_x_q0(n: u64, q: u64) -> Result<BigUint> {
    check(n, q)?;
    let mut fib = FibSeq::new();
    let mut value = BigUint::one();
    for (len, mult) in chain_histogram(n, q) {
        let exp = u32::try_from(mult).map_err(|_| Error::BudgetExceeded {
            what: "exact count exponent",
            needed: mult,
            budget: u32::MAX as u64,
        })?;
        value *= fib.get(len as usize).pow(exp);
    }
    Ok(value)
}

/// `ln` of the count, without big integers.
pub fn ln_count_x_q0(n: u64, q: u64) -> Result<f64> {
    check(n, q)?;
    Ok(chain_histogram(n, q)
        .into_iter()
        .map(|(len, mult)| mult as f64 * ln_a(len))
        .sum())
}

/// Exhaustive count over all `2^n` strings.
pub fn count_x_q0_bruteforce(n: u64, q: u64) -> Result<BigUint> {
    check(n, q)?;
    if n > 24 {
        return Err(Error::BudgetExceeded {
            what: "exhaustive string length",
            needed: n,
            budget: 24,
        });
    }
    let pairs: Vec<(u64, u64)> = (1..=n / q).map(|k| (k - 1, q * k - 1)).collect();
    let admissible = (0u64..1 << n)
        .filter(|x| pairs.iter().all(|&(a, b)| (x >> a) & (x >> b) & 1 == 0))
        .count();
    Ok(BigUint::from(admissible))
}

/// `(q-1)² Σ_{k≥1} q^{-(k+1)} ln a_k`, with the remainder bounded through
/// `ln a_k ≤ k ln 2`.
pub fn entropy_x_q0_series(q: u64, terms: u64) -> Result<SeriesValue> {
    if q < 2 || terms < 1 {
        return Err(Error::InvalidArgument(format!(
            "need q >= 2 and K >= 1, got q={q}, K={terms}"
        )));
    }
    let qf = q as f64;
    let c = (qf - 1.0).powi(2);
    let value: f64 = (1..=terms).map(|k| c * qf.powf(-(k as f64 + 1.0)) * ln_a(k)).sum();
    let tail_bound = c / qf * std::f64::consts::LN_2 * weighted_geometric_tail(1.0 / qf, terms);
    Ok(SeriesValue {
        value,
        tail_bound,
        terms,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fibers() {
        let f = fiber_decomposition(8, 2).unwrap();
        assert_eq!(f.fibers, vec![(1, 4), (3, 2), (5, 1), (7, 1)]);
        assert_eq!(fiber_decomposition(1, 5).unwrap().fibers, vec![(1, 1)]);
        let f = fiber_decomposition(9, 3).unwrap();
        assert_eq!(f.fibers, vec![(1, 3), (2, 2), (4, 1), (5, 1), (7, 1), (8, 1)]);
    }

    #[test]
    fn histogram_matches_listing() {
        for q in 2..=5 {
            for n in 1..=300 {
                let mut h = std::collections::BTreeMap::new();
                for (_, len) in fiber_decomposition(n, q).unwrap().fibers {
                    *h.entry(len).or_insert(0u64) += 1;
                }
                let listed: Vec<(u64, u64)> = h.into_iter().rev().collect();
                assert_eq!(chain_histogram(n, q), listed, "n={n} q={q}");
            }
        }
    }

    #[test]
    fn counts() {
        assert_eq!(count_x_q0(1, 2).unwrap(), BigUint::from(2u32));
        assert_eq!(count_x_q0(8, 2).unwrap(), BigUint::from(96u32));
        assert_eq!(count_x_q0(9, 3).unwrap(), BigUint::from(240u32));
        assert_eq!(count_x_q0_bruteforce(8, 2).unwrap(), BigUint::from(96u32));
        assert_eq!(count_x_q0_bruteforce(9, 3).unwrap(), BigUint::from(240u32));
    }

    #[test]
    fn series_terms() {
        let s = entropy_x_q0_series(2, 1).unwrap();
        assert!((s.value - 0.25 * 2f64.ln()).abs() < 1e-15);
        let s = entropy_x_q0_series(2, 40).unwrap();
        assert!(s.tail_bound < 1e-9);
        let long = entropy_x_q0_series(2, 300).unwrap().value;
        assert!(long >= s.value && long <= s.value + s.tail_bound);
    }
}
