//! Exact binomial coefficients.
//!
//! Two semantics are needed and kept strictly apart:
//!
//! * [`binomial`] is the combinatorial count `C(x, k)`, which is zero whenever
//!   `x < k` or `k < 0`. All cohomology dimensions use this one.
//! * [`binomial_poly`] evaluates the integer-valued polynomial
//!   `x (x - 1) ... (x - k + 1) / k!` at any integer `x`, negative included.
//!   Only Euler characteristics use it, where the sign is meaningful.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

/// Combinatorial `C(x, k)`; zero outside `0 <= k <= x`.
pub fn binomial(x: i64, k: i64) -> BigUint {
    if k < 0 || x < k {
        return BigUint::zero();
    }
    let k = k.min(x - k) as u64;
    let x = x as u64;
    let mut acc = BigUint::one();
    // acc * (x - k + i) / i stays integral at every step.
    for i in 1..=k {
        acc *= x - k + i;
        acc /= i;
    }
    acc
}

/// The integer-valued polynomial `C(x, k)` evaluated at an arbitrary integer `x`.
pub fn binomial_poly(x: i64, k: u64) -> BigInt {
    if x >= 0 {
        return BigInt::from(binomial(x, k as i64));
    }
    // C(x, k) = (-1)^k C(k - x - 1, k) for negative x.
    let magnitude = BigInt::from(binomial(k as i64 - x - 1, k as i64));
    if k.is_multiple_of(2) {
        magnitude
    } else {
        -magnitude
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pascal(x: usize, k: usize) -> BigUint {
        let mut row = vec![BigUint::one()];
        for _ in 0..x {
            let mut next = vec![BigUint::one(); row.len() + 1];
            for j in 1..row.len() {
                next[j] = &row[j - 1] + &row[j];
            }
            row = next;
        }
        row.get(k).cloned().unwrap_or_default()
    }

    #[test]
    fn matches_pascal_triangle() {
        for x in 0..40 {
            for k in 0..45 {
                assert_eq!(binomial(x as i64, k as i64), pascal(x, k), "C({x},{k})");
            }
        }
    }

    #[test]
    fn zero_outside_support() {
        assert!(binomial(3, 4).is_zero());
        assert!(binomial(-1, 2).is_zero());
        assert!(binomial(5, -1).is_zero());
        assert_eq!(binomial(0, 0), BigUint::one());
    }

    #[test]
    fn large_values_are_exact() {
        let expected: BigUint = "98913082887808032681188722800".parse().unwrap();
        assert_eq!(binomial(100, 49), expected);
    }

    #[test]
    fn polynomial_semantics_at_negative_arguments() {
        // C(-1, 2) = (-1)(-2)/2 = 1, C(-1, 3) = -1, C(-3, 2) = 6
        assert_eq!(binomial_poly(-1, 2), BigInt::from(1));
        assert_eq!(binomial_poly(-1, 3), BigInt::from(-1));
        assert_eq!(binomial_poly(-3, 2), BigInt::from(6));
        // Roots at 0..k-1.
        for x in 0..4 {
            assert!(binomial_poly(x, 4).is_zero());
        }
    }

    #[test]
    fn polynomial_matches_falling_factorial() {
        for x in -12i64..12 {
            for k in 0u64..7 {
                let mut num = BigInt::one();
                let mut den = BigInt::one();
                for i in 0..k as i64 {
                    num *= x - i;
                    den *= i + 1;
                }
                assert_eq!(binomial_poly(x, k), num / den, "C({x},{k})");
            }
        }
    }
}
