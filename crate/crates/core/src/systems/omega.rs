//! The multiplicative lattices `Ω_q⁺(n)` and their four-fold reflections.
//!
//! `k = i·q^j` with `q ∤ i` sits at column `j` of the row for `i`; rows are
//! ordered by the rank of `i` among the integers not divisible by `q`.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::fibonacci::{ln_a, weighted_geometric_tail, FibSeq};
use crate::lattice::{run_counts, Axis, FiniteLattice, Run};

/// Largest `q^n` the constructors will build.
const MAX_POINTS: u64 = 1 << 32;

fn q_pow(q: u64, n: u64) -> Result<u64> {
    if q < 2 || n < 1 {
        return Err(Error::InvalidArgument(format!(
            "need q >= 2 and n >= 1, got q={q}, n={n}"
        )));
    }
    u32::try_from(n)
        .ok()
        .and_then(|e| q.checked_pow(e))
        .filter(|&v| v <= MAX_POINTS)
        .ok_or(Error::BudgetExceeded {
            what: "q^n lattice points",
            needed: u64::MAX,
            budget: MAX_POINTS,
        })
}

/// `(i, row length)` for every `i ≤ q^n` with `q ∤ i`, in increasing `i`.
fn fibers(q: u64, limit: u64) -> impl Iterator<Item = (u64, u64)> {
    (1..=limit).filter(move |i| i % q != 0).map(move |i| {
        let mut len = 0;
        let mut k = i;
        while k <= limit {
            len += 1;
            match k.checked_mul(q) {
                Some(next) => k = next,
                None => break,
            }
        }
        (i, len)
    })
}

fn rank(q: u64, i: u64) -> i64 {
    ((i - 1) - (i - 1) / q) as i64
}

pub fn omega_q_plus(q: u64, n: u64) -> Result<FiniteLattice> {
    let limit = q_pow(q, n)?;
    Ok(FiniteLattice::from_row_runs(
        fibers(q, limit).map(|(i, len)| (rank(q, i), vec![(0, len as i64 - 1)])),
    ))
}

/// Reflections of `Ω_q⁺(n)` across `x = -1/2` and `y = -1/2`; a row of length
/// `ℓ` becomes two rows of length `2ℓ`.
pub fn omega_q(q: u64, n: u64) -> Result<FiniteLattice> {
    let limit = q_pow(q, n)?;
    let mut rows: Vec<(i64, Vec<Run>)> = Vec::new();
    for (i, len) in fibers(q, limit) {
        let y = rank(q, i);
        let run = vec![(-(len as i64), len as i64 - 1)];
        rows.push((y, run.clone()));
        rows.push((-1 - y, run));
    }
    Ok(FiniteLattice::from_row_runs(rows))
}

/// Row length `ℓ ↦` number of rows of `Ω_q⁺(n)` with that length.
pub fn row_census(q: u64, n: u64) -> Result<BTreeMap<u64, u64>> {
    Ok(run_counts(&omega_q_plus(q, n)?, Axis::Horizontal))
}

/// The census predicted in closed form: one row of length `n+1`, `q-2` rows
/// of length `n`, and `(q-1)²q^{n-1-k}` rows of length `k < n`.
pub fn census_formula(q: u64, n: u64) -> Result<BTreeMap<u64, u64>> {
    q_pow(q, n)?;
    let mut census = BTreeMap::new();
    census.insert(n + 1, 1);
    if q > 2 {
        census.insert(n, q - 2);
    }
    for k in 1..n {
        census.insert(k, (q - 1).pow(2) * q.pow((n - 1 - k) as u32));
    }
    Ok(census)
}

/// `a_{2(n+1)}² · a_{2n}^{2(q-2)} · Π_{k=1}^{n-1} a_{2k}^{2(q-1)²q^{n-1-k}}`, the
/// golden-mean count on `Ω_q(n)`.
pub fn omega_q_count_formula(q: u64, n: u64) -> Result<BigUint> {
    q_pow(q, n)?;
    let mut fib = FibSeq::new();
    let mut value = fib.get(2 * (n as usize + 1)).pow(2);
    value *= fib.get(2 * n as usize).pow(2 * (q as u32 - 2));
    for k in 1..n {
        let e = 2 * (q - 1).pow(2) * q.pow((n - 1 - k) as u32);
        value *= fib.get(2 * k as usize).pow(e as u32);
    }
    Ok(value)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SeriesValue {
    /// Partial sum of the first `terms` terms; a lower bound.
    pub value: f64,
    /// Upper bound on the omitted remainder.
    pub tail_bound: f64,
    pub terms: u64,
}

/// `(1/2)(q-1)² Σ_{k≥1} q^{-(k+1)} ln a_{2k}`, the entropy along `Ω_q`.
/// The remainder is bounded with `ln a_{2k} ≤ 2k ln 2`.
pub fn omega_q_entropy_series(q: u64, terms: u64) -> Result<SeriesValue> {
    if q < 2 || terms < 1 {
        return Err(Error::InvalidArgument(format!(
            "need q >= 2 and K >= 1, got q={q}, K={terms}"
        )));
    }
    let qf = q as f64;
    let c = 0.5 * (qf - 1.0).powi(2);
    let value: f64 = (1..=terms).map(|k| c * qf.powf(-(k as f64 + 1.0)) * ln_a(2 * k)).sum();
    let tail_bound = c / qf * 2.0 * std::f64::consts::LN_2 * weighted_geometric_tail(1.0 / qf, terms);
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
    fn small_lattices() {
        let p = omega_q_plus(2, 2).unwrap();
        assert_eq!(p.len(), 4);
        assert_eq!(p.runs_at(0), &[(0, 2)]);
        assert_eq!(p.runs_at(1), &[(0, 0)]);
        assert_eq!(omega_q_plus(3, 1).unwrap().len(), 3);
        let o = omega_q(2, 2).unwrap();
        assert_eq!(o.len(), 16);
        let mut lens: Vec<u64> = run_counts(&o, Axis::Horizontal)
            .into_iter()
            .flat_map(|(l, c)| std::iter::repeat_n(l, c as usize))
            .collect();
        lens.sort_unstable();
        assert_eq!(lens, vec![2, 2, 6, 6]);
    }

    #[test]
    fn census_examples() {
        let c = row_census(2, 3).unwrap();
        assert_eq!(c, BTreeMap::from([(1, 2), (2, 1), (4, 1)]));
        let c = row_census(3, 2).unwrap();
        assert_eq!(c, BTreeMap::from([(1, 4), (2, 1), (3, 1)]));
        assert_eq!(row_census(2, 1).unwrap(), BTreeMap::from([(2, 1)]));
        for q in 2..=4 {
            for n in 1..=6 {
                assert_eq!(row_census(q, n).unwrap(), census_formula(q, n).unwrap(), "q={q} n={n}");
            }
        }
    }

    #[test]
    fn count_formula_values() {
        assert_eq!(omega_q_count_formula(2, 1).unwrap(), BigUint::from(64u32));
        assert_eq!(omega_q_count_formula(2, 2).unwrap(), BigUint::from(3969u32));
        let want = BigUint::from(21u32 * 21 * 8 * 8) * BigUint::from(3u32).pow(8);
        assert_eq!(omega_q_count_formula(3, 2).unwrap(), want);
    }

    #[test]
    fn series_first_term_and_tail() {
        let s = omega_q_entropy_series(2, 1).unwrap();
        assert!((s.value - 0.125 * 3f64.ln()).abs() < 1e-15);
        let s = omega_q_entropy_series(2, 30).unwrap();
        assert!(s.tail_bound < 1e-6);
        // Brute partial sums up to 200 terms land inside [value, value + tail].
        let long = omega_q_entropy_series(2, 200).unwrap().value;
        assert!(long >= s.value && long <= s.value + s.tail_bound);
    }
}
