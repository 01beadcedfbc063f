//! Exact integer helpers shared by the triangles, enumeration counts, and tests.

use num::{BigUint, One, Zero};

/// n! as an arbitrary-precision integer.
pub fn factorial(n: u32) -> BigUint {
    let mut acc = BigUint::one();
    for i in 2..=u64::from(n) {
        acc *= i;
    }
    acc
}

/// (2n-1)!! = 1 * 3 * 5 * ... * (2n-1), the number of matchings on [2n].
/// For n = 0 this is the empty product, 1.
pub fn odd_double_factorial(n: u32) -> BigUint {
    let mut acc = BigUint::one();
    let mut i = 1u64;
    while i < 2 * u64::from(n) {
        acc *= i;
        i += 2;
    }
    acc
}

/// Binomial coefficient C(n, k); zero when k > n.
pub fn binomial(n: u32, k: u32) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..u64::from(k) {
        acc *= u64::from(n) - i;
        acc /= i + 1;
    }
    acc
}

/// Catalan number C_n = C(2n, n) / (n + 1).
pub fn catalan(n: u32) -> BigUint {
    let num = binomial(2 * n, n);
    let den = BigUint::from(n + 1);
    debug_assert!((&num % &den).is_zero());
    num / den
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factorial_small() {
        assert_eq!(factorial(0), BigUint::from(1u32));
        assert_eq!(factorial(6), BigUint::from(720u32));
        assert_eq!(factorial(10), BigUint::from(3628800u32));
    }

    #[test]
    fn double_factorial_small() {
        let expect = [1u64, 1, 3, 15, 105, 945, 10395, 135135, 2027025];
        for (n, &e) in expect.iter().enumerate() {
            assert_eq!(odd_double_factorial(n as u32), BigUint::from(e));
        }
    }

    #[test]
    fn binomial_row() {
        let row: Vec<u64> = (0..=5)
            .map(|k| binomial(5, k).try_into().unwrap())
            .collect();
        assert_eq!(row, [1, 5, 10, 10, 5, 1]);
        assert_eq!(binomial(3, 7), BigUint::zero());
    }

    #[test]
    fn catalan_small() {
        let expect = [1u64, 1, 2, 5, 14, 42, 132, 429, 1430];
        for (n, &e) in expect.iter().enumerate() {
            assert_eq!(catalan(n as u32), BigUint::from(e));
        }
    }
}
