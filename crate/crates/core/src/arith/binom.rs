use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Standard binomial coefficient C(n, k), zero when k > n.
pub fn choose(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Binomial coefficient under the vanishing convention used by the product
/// family expansions: C_a^b = 0 whenever a ≤ 0, b < 0 or a < b.
///
/// Note that this makes `binom(0, 0) == 0`, unlike [`choose`].
pub fn binom(a: i64, b: i64) -> BigInt {
    if a <= 0 || b < 0 || a < b {
        return BigInt::zero();
    }
    choose(a as u64, b as u64)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn factorial(n: u64) -> BigInt {
        (1..=n).map(BigInt::from).product()
    }

    #[test]
    fn convention_examples() {
        assert_eq!(binom(4, 2), BigInt::from(6));
        assert_eq!(binom(-1, 0), BigInt::zero());
        assert_eq!(binom(3, 5), BigInt::zero());
        assert_eq!(binom(0, 0), BigInt::zero());
        assert_eq!(binom(5, -1), BigInt::zero());
        assert_eq!(choose(0, 0), BigInt::one());
    }

    #[test]
    fn matches_factorial_formula() {
        for a in 1..=30u64 {
            for b in 0..=a {
                let expected = factorial(a) / (factorial(b) * factorial(a - b));
                assert_eq!(binom(a as i64, b as i64), expected, "C({a},{b})");
            }
        }
    }

    #[test]
    fn subset_of_subset_identity() {
        // C(a,b)·C(a−b,c) = C(a,b+c)·C(b+c,b) on the range where every
        // argument satisfies the convention.
        for a in 1..=25i64 {
            for b in 0..=a {
                for c in 0..=(a - b) {
                    if a - b <= 0 || b + c <= 0 {
                        continue;
                    }
                    assert_eq!(
                        binom(a, b) * binom(a - b, c),
                        binom(a, b + c) * binom(b + c, b),
                        "a={a} b={b} c={c}"
                    );
                }
            }
        }
    }

    #[test]
    fn no_overflow_for_large_arguments() {
        let big = choose(200, 100);
        assert_eq!(big.to_string().len(), 59);
    }
}
