//! Exact counting helpers shared by several modules.

use num_bigint::BigUint;
use num_traits::{One, Zero};

/// Binomial coefficient `C(n, k)`; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        // exact at every step: acc = C(n, i) * (n - i) / (i + 1) = C(n, i + 1)
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// `base^exp` for a possibly negative exponent restricted to `base == 1`.
///
/// `(n+1)^(n-1)` at `n = 0` is `1^(-1) = 1`; this is the only negative power
/// the counting formulas need.
pub fn pow_signed(base: u64, exp: i64) -> BigUint {
    if exp >= 0 {
        num_traits::pow(BigUint::from(base), exp as usize)
    } else {
        assert_eq!(base, 1, "negative exponent only defined for base 1");
        BigUint::one()
    }
}

/// Catalan number `C_n = C(2n, n) / (n + 1)`.
pub fn catalan(n: u64) -> BigUint {
    binomial(2 * n, n) / (n + 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pascal(rows: usize) -> Vec<Vec<u64>> {
        let mut t = vec![vec![1u64]];
        for r in 1..=rows {
            let prev = &t[r - 1];
            let mut row = vec![1u64; r + 1];
            for k in 1..r {
                row[k] = prev[k - 1] + prev[k];
            }
            t.push(row);
        }
        t
    }

    #[test]
    fn binomial_matches_pascal() {
        let t = pascal(30);
        for (n, row) in t.iter().enumerate() {
            for (k, &v) in row.iter().enumerate() {
                assert_eq!(binomial(n as u64, k as u64), BigUint::from(v));
            }
        }
        assert_eq!(binomial(3, 5), BigUint::zero());
    }

    #[test]
    fn catalan_matches_recurrence() {
        let mut c = vec![1u64];
        for n in 1..=15usize {
            let next = (0..n).map(|i| c[i] * c[n - 1 - i]).sum();
            c.push(next);
        }
        for (n, &v) in c.iter().enumerate() {
            assert_eq!(catalan(n as u64), BigUint::from(v));
        }
    }

    #[test]
    fn signed_power() {
        assert_eq!(pow_signed(1, -1), BigUint::one());
        assert_eq!(pow_signed(9, 7), BigUint::from(4_782_969u32));
        assert_eq!(pow_signed(5, 0), BigUint::one());
    }
}
