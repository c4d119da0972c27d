//! Exact and log-domain counts of admissible patterns on finite lattices.
//!
//! Two independent engines compute the same number: an exhaustive
//! backtracking oracle for small lattices and a profile sweep for any lattice
//! whose forbidden shapes fit in a 2×2 window.

pub(crate) mod oracle;
pub(crate) mod sweep;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::FiniteLattice;
use crate::sft::{Pattern, SftSpec};

use oracle::Backtracker;
use sweep::Sweep;

/// Which patterns are counted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CountMode {
    /// No forbidden pattern sits fully inside the lattice.
    Local,
    /// Locally admissible patterns that extend to a locally admissible
    /// pattern on the lattice dilated by `margin`.
    Extendable { margin: u64 },
}

impl std::fmt::Display for CountMode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CountMode::Local => f.write_str("local"),
            CountMode::Extendable { margin } => write!(f, "ext:{margin}"),
        }
    }
}

impl std::str::FromStr for CountMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "local" => Ok(CountMode::Local),
            other => other
                .strip_prefix("ext:")
                .and_then(|m| m.parse().ok())
                .map(|margin| CountMode::Extendable { margin })
                .ok_or_else(|| Error::Parse(format!("mode must be local or ext:<margin>, got {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CountResult {
    #[serde(serialize_with = "serialize_decimal")]
    pub value: BigUint,
    pub mode: CountMode,
    pub lattice_size: usize,
}

fn serialize_decimal<S: serde::Serializer>(v: &BigUint, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_str_radix(10))
}

impl CountResult {
    /// Natural logarithm of the count.
    pub fn ln(&self) -> f64 {
        ln_biguint(&self.value)
    }
}

/// The engine `count` would pick.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Engine {
    ProfileDp,
    Oracle,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CountConfig {
    /// The oracle runs only if `N^|L| ≤ 2^oracle_bits`.
    pub oracle_bits: u32,
    /// Longest state window the sweep may use, in cells.
    pub frontier_cap: u32,
    /// Most local patterns the extendable count will test one by one.
    pub candidate_budget: u64,
}

impl Default for CountConfig {
    fn default() -> Self {
        CountConfig {
            oracle_bits: 24,
            frontier_cap: 24,
            candidate_budget: 1 << 20,
        }
    }
}

/// Natural log of a big integer, accurate to double precision at any size.
pub fn ln_biguint(v: &BigUint) -> f64 {
    if v.is_zero() {
        return f64::NEG_INFINITY;
    }
    let bits = v.bits();
    if bits <= 1000 {
        return v.to_f64().expect("finite below 2^1000").ln();
    }
    let shift = bits - 64;
    let top = (v >> shift).to_f64().expect("64-bit value");
    top.ln() + shift as f64 * std::f64::consts::LN_2
}

fn oracle_budget(lattice: &FiniteLattice, spec: &SftSpec, bits: u32) -> Result<()> {
    let n = lattice.len() as u64;
    let over = || Error::BudgetExceeded {
        what: "exhaustive assignments (log2)",
        needed: (n as f64 * (spec.alphabet() as f64).log2()).ceil() as u64,
        budget: bits as u64,
    };
    if n > bits as u64 {
        return Err(over());
    }
    if BigUint::from(spec.alphabet()).pow(n as u32) > BigUint::one() << bits {
        return Err(over());
    }
    Ok(())
}

fn local(value: BigUint, lattice: &FiniteLattice) -> CountResult {
    CountResult {
        value,
        mode: CountMode::Local,
        lattice_size: lattice.len(),
    }
}

/// Exhaustive count, for lattices with at most `2^24` assignments.
pub fn count_bruteforce(lattice: &FiniteLattice, spec: &SftSpec) -> Result<CountResult> {
    count_bruteforce_with(lattice, spec, CountConfig::default().oracle_bits)
}

pub fn count_bruteforce_with(lattice: &FiniteLattice, spec: &SftSpec, oracle_bits: u32) -> Result<CountResult> {
    oracle_budget(lattice, spec, oracle_bits)?;
    let n = Backtracker::new(lattice, spec).count();
    Ok(local(BigUint::from(n), lattice))
}

/// Exact count by the profile sweep.
pub fn count_profile_dp(lattice: &FiniteLattice, spec: &SftSpec) -> Result<CountResult> {
    count_profile_dp_with(lattice, spec, CountConfig::default().frontier_cap)
}

pub fn count_profile_dp_with(lattice: &FiniteLattice, spec: &SftSpec, frontier_cap: u32) -> Result<CountResult> {
    let sweep = Sweep::new(lattice, spec, frontier_cap)?;
    let states = sweep.run(BigUint::one(), |_, _, w| Some(w.clone()), |_| {});
    Ok(local(sweep::total(states, BigUint::zero()), lattice))
}

/// The engine `count` dispatches to, or the reason neither can run.
pub fn select_engine(lattice: &FiniteLattice, spec: &SftSpec, config: &CountConfig) -> Result<Engine> {
    let dp = Sweep::new(lattice, spec, config.frontier_cap);
    match dp {
        Ok(_) => Ok(Engine::ProfileDp),
        Err(e) => match oracle_budget(lattice, spec, config.oracle_bits) {
            Ok(()) => Ok(Engine::Oracle),
            Err(budget) => Err(if matches!(e, Error::UnsupportedForbiddenShape) {
                budget
            } else {
                e
            }),
        },
    }
}

/// Counts with the default configuration.
pub fn count(lattice: &FiniteLattice, spec: &SftSpec, mode: CountMode) -> Result<CountResult> {
    count_with(lattice, spec, mode, &CountConfig::default())
}

pub fn count_with(
    lattice: &FiniteLattice,
    spec: &SftSpec,
    mode: CountMode,
    config: &CountConfig,
) -> Result<CountResult> {
    match mode {
        CountMode::Extendable { margin } if margin > 0 => count_extendable_with(lattice, spec, margin, config),
        _ => match select_engine(lattice, spec, config)? {
            Engine::ProfileDp => count_profile_dp_with(lattice, spec, config.frontier_cap),
            Engine::Oracle => count_bruteforce_with(lattice, spec, config.oracle_bits),
        },
    }
}

/// Number of locally admissible patterns on `lattice` that agree with `fixed`
/// on `fixed.support() ∩ lattice`.
pub fn count_constrained(lattice: &FiniteLattice, spec: &SftSpec, fixed: &Pattern) -> Result<CountResult> {
    let config = CountConfig::default();
    match select_engine(lattice, spec, &config)? {
        Engine::ProfileDp => {
            let sweep = Sweep::new(lattice, spec, config.frontier_cap)?;
            let states = sweep.run(
                BigUint::one(),
                |p, s, w| match fixed.get(p) {
                    Some(t) if t != s => None,
                    _ => Some(w.clone()),
                },
                |_| {},
            );
            Ok(local(sweep::total(states, BigUint::zero()), lattice))
        }
        Engine::Oracle => {
            let mut bt = Backtracker::new(lattice, spec);
            for (p, s) in fixed.cells() {
                if let Some(i) = lattice.index_of(p) {
                    bt.fix(i, s);
                }
            }
            Ok(local(BigUint::from(bt.count()), lattice))
        }
    }
}

/// Whether some locally admissible pattern on `lattice` agrees with `fixed`.
pub(crate) fn extends(lattice: &FiniteLattice, spec: &SftSpec, fixed: &Pattern, config: &CountConfig) -> Result<bool> {
    match Sweep::new(lattice, spec, config.frontier_cap) {
        Ok(sweep) => {
            let states = sweep.run(
                true,
                |p, s, _| match fixed.get(p) {
                    Some(t) if t != s => None,
                    _ => Some(true),
                },
                |_| {},
            );
            Ok(!states.is_empty())
        }
        Err(_) => {
            let free = lattice.difference(fixed.support());
            oracle_budget(&free, spec, config.oracle_bits)?;
            let mut bt = Backtracker::new(lattice, spec);
            for (p, s) in fixed.cells() {
                if let Some(i) = lattice.index_of(p) {
                    bt.fix(i, s);
                }
            }
            Ok(bt.exists())
        }
    }
}

/// Counts patterns on `lattice` with a locally admissible extension to the
/// Chebyshev `margin`-neighbourhood of `lattice`.
pub fn count_extendable(lattice: &FiniteLattice, spec: &SftSpec, margin: u64) -> Result<CountResult> {
    count_extendable_with(lattice, spec, margin, &CountConfig::default())
}

pub fn count_extendable_with(
    lattice: &FiniteLattice,
    spec: &SftSpec,
    margin: u64,
    config: &CountConfig,
) -> Result<CountResult> {
    let local_count = count_with(lattice, spec, CountMode::Local, config)?;
    let mode = CountMode::Extendable { margin };
    if margin == 0 || local_count.value.is_zero() {
        return Ok(CountResult { mode, ..local_count });
    }
    let budget = BigUint::from(config.candidate_budget);
    if local_count.value > budget {
        return Err(Error::BudgetExceeded {
            what: "extendable candidates",
            needed: local_count.value.to_u64().unwrap_or(u64::MAX),
            budget: config.candidate_budget,
        });
    }
    let dilated = lattice.dilate(margin);
    let support = lattice.clone();
    let mut extendable = 0u64;
    let mut failure = None;
    Backtracker::new(lattice, spec).for_each(|symbols| {
        let candidate = Pattern::new(support.clone(), symbols.to_vec()).expect("sizes match");
        match extends(&dilated, spec, &candidate, config) {
            Ok(true) => extendable += 1,
            Ok(false) => {}
            Err(e) => {
                failure = Some(e);
                return false;
            }
        }
        true
    });
    if let Some(e) = failure {
        return Err(e);
    }
    Ok(CountResult {
        value: BigUint::from(extendable),
        mode,
        lattice_size: lattice.len(),
    })
}

/// Natural log of the local count, computed in floating point with
/// per-cell rescaling so that no intermediate overflows.
pub fn log_count(lattice: &FiniteLattice, spec: &SftSpec) -> Result<f64> {
    log_count_with(lattice, spec, CountConfig::default().frontier_cap)
}

pub fn log_count_with(lattice: &FiniteLattice, spec: &SftSpec, frontier_cap: u32) -> Result<f64> {
    let sweep = Sweep::new(lattice, spec, frontier_cap)?;
    let mut log_scale = 0.0f64;
    let states = sweep.run(
        1.0f64,
        |_, _, w| Some(*w),
        |states| {
            let max = states.values().copied().fold(0.0, f64::max);
            if max > 0.0 && max != 1.0 {
                log_scale += max.ln();
                for w in states.values_mut() {
                    *w /= max;
                }
            }
        },
    );
    let total = sweep::total(states, 0.0);
    Ok(if total == 0.0 {
        f64::NEG_INFINITY
    } else {
        total.ln() + log_scale
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::Point;
    use crate::sft::{
        forbid_one, full_shift, golden_mean_horizontal, golden_mean_vertical, hard_squares, ForbiddenPattern,
    };

    fn rect(m: u64, n: u64) -> FiniteLattice {
        FiniteLattice::rectangle(Point::ORIGIN, m, n)
    }

    fn fib(m: usize) -> u64 {
        let mut a = [2u64, 3];
        for _ in 2..m {
            a = [a[1], a[0] + a[1]];
        }
        if m == 1 {
            2
        } else {
            a[1]
        }
    }

    #[test]
    fn small_golden_mean_counts() {
        let gh = golden_mean_horizontal();
        assert_eq!(count_bruteforce(&rect(2, 2), &gh).unwrap().value, BigUint::from(9u32));
        assert_eq!(count_bruteforce(&rect(4, 1), &gh).unwrap().value, BigUint::from(8u32));
        assert_eq!(count_profile_dp(&rect(2, 1), &gh).unwrap().value, BigUint::from(3u32));
        assert_eq!(
            count_profile_dp(&rect(1, 2), &golden_mean_vertical()).unwrap().value,
            BigUint::from(3u32)
        );
        assert_eq!(
            count_profile_dp(&rect(2, 1), &golden_mean_vertical()).unwrap().value,
            BigUint::from(4u32)
        );
    }

    #[test]
    fn empty_lattice_counts_one() {
        let e = FiniteLattice::empty();
        assert_eq!(count_bruteforce(&e, &hard_squares()).unwrap().value, BigUint::one());
        assert_eq!(count_profile_dp(&e, &hard_squares()).unwrap().value, BigUint::one());
        assert_eq!(log_count(&e, &hard_squares()).unwrap(), 0.0);
    }

    #[test]
    fn rectangles_factor_into_rows() {
        let gh = golden_mean_horizontal();
        for m in 1..=8u64 {
            for n in 1..=8u64 {
                let c = count_profile_dp(&rect(m, n), &gh).unwrap().value;
                assert_eq!(c, BigUint::from(fib(m as usize)).pow(n as u32), "{m}x{n}");
            }
        }
    }

    #[test]
    fn hard_squares_match_oracle() {
        let hs = hard_squares();
        for (m, n) in [(3, 3), (4, 4), (2, 7), (5, 4)] {
            let l = rect(m, n);
            assert_eq!(count_profile_dp(&l, &hs).unwrap(), count_bruteforce(&l, &hs).unwrap());
        }
        // Known values of the hard-square counts on n×n squares.
        let known = [2u64, 7, 63, 1234, 55447];
        for (i, &k) in known.iter().enumerate() {
            let n = i as u64 + 1;
            assert_eq!(count_profile_dp(&rect(n, n), &hs).unwrap().value, BigUint::from(k));
        }
    }

    #[test]
    fn dispatch_follows_eligibility() {
        let gh = golden_mean_horizontal();
        let c = CountConfig::default();
        assert_eq!(select_engine(&rect(16, 16), &gh, &c).unwrap(), Engine::ProfileDp);
        let r = count(&rect(16, 16), &gh, CountMode::Local).unwrap();
        assert_eq!(r.value, BigUint::from(fib(16)).pow(16));

        let three = SftSpec::new(
            "111",
            2,
            vec![ForbiddenPattern::new((0..3).map(|x| (Point::new(x, 0), 1))).unwrap()],
        )
        .unwrap();
        assert_eq!(select_engine(&rect(20, 1), &three, &c).unwrap(), Engine::Oracle);
        // Tribonacci-like strings without 111: 2,4,7,13,24,...
        let r = count(&rect(5, 1), &three, CountMode::Local).unwrap();
        assert_eq!(r.value, BigUint::from(24u32));
        assert!(matches!(
            count(&rect(30, 1), &three, CountMode::Local),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn extendable_counts() {
        let gh = golden_mean_horizontal();
        let l = rect(3, 3);
        let base = count(&l, &gh, CountMode::Local).unwrap().value;
        for m in 0..=2 {
            let r = count_extendable(&l, &gh, m).unwrap();
            assert_eq!(r.value, base);
            assert_eq!(r.mode, CountMode::Extendable { margin: m });
        }
        for m in 0..3 {
            assert_eq!(
                count_extendable(&rect(2, 3), &forbid_one(), m).unwrap().value,
                BigUint::one()
            );
        }
    }

    #[test]
    fn extension_can_fail() {
        // Forbidding 00 and 10 leaves a 0 with no left neighbour.
        let spec = SftSpec::new(
            "no-left-of-0",
            2,
            vec![
                ForbiddenPattern::new([(Point::new(0, 0), 0), (Point::new(1, 0), 0)]).unwrap(),
                ForbiddenPattern::new([(Point::new(0, 0), 1), (Point::new(1, 0), 0)]).unwrap(),
            ],
        )
        .unwrap();
        let l = rect(1, 1);
        assert_eq!(count(&l, &spec, CountMode::Local).unwrap().value, BigUint::from(2u32));
        assert_eq!(count_extendable(&l, &spec, 1).unwrap().value, BigUint::one());
    }

    #[test]
    fn log_count_agrees_with_exact() {
        let gh = golden_mean_horizontal();
        let l = rect(20, 20);
        let exact = count_profile_dp(&l, &gh).unwrap().ln();
        let approx = log_count(&l, &gh).unwrap();
        assert!(((approx - exact) / exact).abs() < 1e-12);
        assert!((approx - 20.0 * 17711f64.ln()).abs() < 1e-9);
        let col = log_count(&rect(1, 50), &gh).unwrap();
        assert!((col - 50.0 * std::f64::consts::LN_2).abs() < 1e-12);
        let full = log_count(&rect(7, 9), &full_shift(3).unwrap()).unwrap();
        assert!((full - 63.0 * 3f64.ln()).abs() < 1e-9);
    }

    #[test]
    fn ln_of_huge_integers() {
        let big = BigUint::from(3u32).pow(5000);
        assert!((ln_biguint(&big) - 5000.0 * 3f64.ln()).abs() < 1e-9);
    }
}
