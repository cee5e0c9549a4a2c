//! Exact Bernoulli numbers and the tanh Maclaurin coefficients built
//! from them.

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use once_cell::sync::Lazy;

/// Exact rational (lowest terms, positive denominator).
pub type Rational = num_rational::BigRational;

const MAX_BERNOULLI: u32 = 64;
const MAX_TANH_COEFF: u32 = 30;

/// B_0 .. B_64 by the binomial-sum recurrence
/// `B_m = -1/(m+1) * sum_{j<m} C(m+1, j) B_j`.
static BERNOULLI: Lazy<Vec<Rational>> = Lazy::new(|| {
    let max = MAX_BERNOULLI as usize;
    let mut table: Vec<Rational> = Vec::with_capacity(max + 1);
    table.push(Rational::one());
    for m in 1..=max {
        let mut acc = Rational::zero();
        let mut binom = BigInt::one(); // C(m+1, 0)
        for (j, b) in table.iter().enumerate() {
            acc += Rational::from_integer(binom.clone()) * b;
            binom = binom * BigInt::from(m + 1 - j) / BigInt::from(j + 1);
        }
        table.push(-acc / Rational::from_integer(BigInt::from(m + 1)));
    }
    table
});

/// The n-th Bernoulli number (B_1 = -1/2 convention), exact, for n ≤ 64.
pub fn bernoulli(n: u32) -> Result<Rational> {
    if n > MAX_BERNOULLI {
        return Err(Error::Unsupported(format!(
            "Bernoulli index {n} exceeds the supported maximum {MAX_BERNOULLI}"
        )));
    }
    Ok(BERNOULLI[n as usize].clone())
}

/// Exact coefficient of x^(2n+1) in the Maclaurin series of tanh:
/// `4^(n+1) (4^(n+1) - 1) B_(2n+2) / (2n+2)!`, for n ≤ 30.
pub fn tanh_coeff(n: u32) -> Result<Rational> {
    if n > MAX_TANH_COEFF {
        return Err(Error::Unsupported(format!(
            "tanh coefficient index {n} exceeds the supported maximum {MAX_TANH_COEFF}"
        )));
    }
    let four_pow = BigInt::from(4).pow(n + 1);
    let scale = Rational::from_integer(&four_pow * (&four_pow - BigInt::one()));
    let mut fact = BigInt::one();
    for k in 2..=(2 * n + 2) {
        fact *= BigInt::from(k);
    }
    Ok(scale * bernoulli(2 * n + 2)? / Rational::from_integer(fact))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> Rational {
        Rational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn small_bernoulli_numbers() {
        assert_eq!(bernoulli(0).unwrap(), rat(1, 1));
        assert_eq!(bernoulli(1).unwrap(), rat(-1, 2));
        assert_eq!(bernoulli(2).unwrap(), rat(1, 6));
        assert_eq!(bernoulli(3).unwrap(), Rational::zero());
        assert_eq!(bernoulli(4).unwrap(), rat(-1, 30));
        assert_eq!(bernoulli(6).unwrap(), rat(1, 42));
        assert_eq!(bernoulli(8).unwrap(), rat(-1, 30));
        assert_eq!(bernoulli(12).unwrap(), rat(-691, 2730));
    }

    #[test]
    fn odd_bernoulli_vanish_from_three_on() {
        for n in (3..=63).step_by(2) {
            assert!(bernoulli(n).unwrap().is_zero(), "B_{n} should vanish");
        }
    }

    #[test]
    fn index_limit() {
        assert!(bernoulli(64).is_ok());
        assert!(matches!(bernoulli(65), Err(Error::Unsupported(_))));
    }

    #[test]
    fn tanh_coefficients() {
        assert_eq!(tanh_coeff(0).unwrap(), rat(1, 1));
        assert_eq!(tanh_coeff(1).unwrap(), rat(-1, 3));
        assert_eq!(tanh_coeff(2).unwrap(), rat(2, 15));
        assert_eq!(tanh_coeff(3).unwrap(), rat(-17, 315));
        assert_eq!(tanh_coeff(4).unwrap(), rat(62, 2835));
        assert!(tanh_coeff(30).is_ok());
        assert!(matches!(tanh_coeff(31), Err(Error::Unsupported(_))));
    }

    #[test]
    fn display_matches_cli_contract() {
        assert_eq!(bernoulli(2).unwrap().to_string(), "1/6");
        assert_eq!(bernoulli(1).unwrap().to_string(), "-1/2");
        assert_eq!(bernoulli(0).unwrap().to_string(), "1");
    }
}
