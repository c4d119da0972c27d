//! Counts of binary strings without two adjacent ones.

use num_bigint::BigUint;

/// Memoized `a_k`, the number of binary strings of length `k` with no `11`:
/// `a_1 = 2`, `a_2 = 3`, `a_k = a_{k-1} + a_{k-2}`.
#[derive(Debug, Clone)]
pub struct FibSeq {
    /// `values[k]` is `a_k`; `a_0 = 1` (the empty string).
    values: Vec<BigUint>,
}

impl Default for FibSeq {
    fn default() -> Self {
        Self::new()
    }
}

impl FibSeq {
    pub fn new() -> Self {
        FibSeq {
            values: vec![BigUint::from(1u32), BigUint::from(2u32)],
        }
    }

    pub fn get(&mut self, k: usize) -> &BigUint {
        while self.values.len() <= k {
            let n = self.values.len();
            let next = &self.values[n - 1] + &self.values[n - 2];
            self.values.push(next);
        }
        &self.values[k]
    }
}

/// `ln a_k` without big integers. Exact recursion while `a_k` fits in `u128`,
/// then the Binet form whose correction term is below `1e-50`.
pub fn ln_a(k: u64) -> f64 {
    if k <= 150 {
        let (mut prev, mut cur) = (1u128, 2u128);
        if k == 0 {
            return 0.0;
        }
        for _ in 1..k {
            (prev, cur) = (cur, prev + cur);
        }
        return (cur as f64).ln();
    }
    (k + 2) as f64 * ln_golden() - 0.5 * 5f64.ln()
}

/// `ln g` with `g = (1 + √5) / 2`.
pub fn ln_golden() -> f64 {
    ((1.0 + 5f64.sqrt()) / 2.0).ln()
}

/// `Σ_{k>K} k x^k` for `0 < x < 1`.
pub(crate) fn weighted_geometric_tail(x: f64, terms: u64) -> f64 {
    let k = terms as f64;
    x.powf(k + 1.0) * ((k + 1.0) - k * x) / (1.0 - x).powi(2)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_terms() {
        let mut f = FibSeq::new();
        let want = [1u32, 2, 3, 5, 8, 13, 21, 34, 55, 89, 144, 233, 377];
        for (k, &w) in want.iter().enumerate() {
            assert_eq!(*f.get(k), BigUint::from(w));
        }
    }

    #[test]
    fn log_agrees_with_exact() {
        let mut f = FibSeq::new();
        for k in [1u64, 2, 12, 100, 149, 150, 151, 400, 2000] {
            let exact = crate::counting::ln_biguint(f.get(k as usize));
            assert!((ln_a(k) - exact).abs() < 1e-12 * exact.max(1.0), "k={k}");
        }
    }
}
