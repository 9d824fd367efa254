//! Rational scalar helpers.
//!
//! `ExactScalar` is a [`num_rational::BigRational`]: numerator and denominator
//! are arbitrary-precision integers, the fraction is reduced (gcd 1) after
//! every operation, and the denominator is kept positive. Those are exactly
//! the invariants the rest of the crate relies on, so we use the battle-tested
//! implementation instead of rolling our own.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::{Error, Result};

/// Arbitrary-precision rational number, always in lowest terms with a
/// positive denominator.
pub type ExactScalar = num_rational::BigRational;

/// Integer as an exact scalar.
pub fn int(n: i64) -> ExactScalar {
    ExactScalar::from_integer(BigInt::from(n))
}

/// Fraction `num/den` as an exact scalar.
///
/// Panics if `den == 0`; callers construct rationals from literals.
pub fn rat(num: i64, den: i64) -> ExactScalar {
    assert!(den != 0, "zero denominator");
    ExactScalar::new(BigInt::from(num), BigInt::from(den))
}

/// `k!` as an arbitrary-precision integer. `factorial(0) == 1`.
pub fn factorial(k: u32) -> BigInt {
    let mut acc = BigInt::one();
    for i in 2..=k {
        acc *= BigInt::from(i);
    }
    acc
}

/// Binomial coefficient `C(k, j) = k! / (j! (k-j)!)`.
///
/// Rejects `j > k` instead of adopting the zero convention: callers in this
/// crate always index inside Pascal's triangle, so an out-of-range index is a
/// bug worth surfacing.
pub fn binomial(k: u32, j: u32) -> Result<BigInt> {
    if j > k {
        return Err(Error::IndexOutOfRange(format!("binomial({k}, {j})")));
    }
    // Multiplicative form keeps intermediates integral: C(k, j) = prod_i (k-j+i)/i.
    let j = j.min(k - j);
    let mut acc = BigInt::one();
    for i in 1..=j {
        acc = acc * BigInt::from(k - j + i) / BigInt::from(i);
    }
    Ok(acc)
}

/// Rising factorial `n (n+1) ... (n+m-1)`, with `rising_factorial(n, 0) == 1`.
pub fn rising_factorial(n: u32, m: u32) -> BigInt {
    let mut acc = BigInt::one();
    for i in 0..m {
        acc *= BigInt::from(n + i);
    }
    acc
}

/// `x^e` for integer exponents, including negative ones.
///
/// Panics on `0^e` with `e < 0`.
pub fn pow_scalar(x: &ExactScalar, e: i32) -> ExactScalar {
    if e >= 0 {
        x.pow(e)
    } else {
        assert!(!x.is_zero(), "negative power of zero");
        x.pow(e)
    }
}

/// Round an exact scalar to the nearest `f64`.
pub fn to_f64(x: &ExactScalar) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

/// Exact rational value of a finite `f64` (binary fractions are exact).
pub fn from_f64_exact(x: f64) -> Result<ExactScalar> {
    ExactScalar::from_float(x).ok_or(Error::NonFinite {
        what: "interval endpoint".into(),
        x,
    })
}

/// Parse `"p/q"`, an integer, or a decimal such as `"0.25"` into an exact
/// scalar. Decimals are exact (scaled by a power of ten).
pub fn parse_scalar(s: &str) -> Result<ExactScalar> {
    let s = s.trim();
    let err = || Error::ParseScalar(s.to_string());
    if let Some((num, den)) = s.split_once('/') {
        let n: BigInt = num.trim().parse().map_err(|_| err())?;
        let d: BigInt = den.trim().parse().map_err(|_| err())?;
        if d.is_zero() {
            return Err(err());
        }
        return Ok(ExactScalar::new(n, d));
    }
    if let Some((whole, frac)) = s.split_once('.') {
        let negative = whole.starts_with('-');
        let w: BigInt = if whole == "-" || whole.is_empty() {
            BigInt::zero()
        } else {
            whole.parse().map_err(|_| err())?
        };
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(err());
        }
        let f: BigInt = frac.parse().map_err(|_| err())?;
        let scale = BigInt::from(10u32).pow(frac.len() as u32);
        let magnitude = w.abs() * &scale + f;
        let signed = if negative { -magnitude } else { magnitude };
        return Ok(ExactScalar::new(signed, scale));
    }
    let n: BigInt = s.parse().map_err(|_| err())?;
    Ok(ExactScalar::from_integer(n))
}

/// Render as `"p/q"`, or just `"p"` when the denominator is 1.
pub fn format_scalar(x: &ExactScalar) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factorial_base_cases() {
        assert_eq!(factorial(0), BigInt::from(1));
        assert_eq!(factorial(5), BigInt::from(120));
    }

    #[test]
    fn factorial_against_iterated_multiplication() {
        // Independent oracle: fold of explicit multiplications.
        let oracle = (1..=12u32).fold(BigInt::one(), |acc, i| acc * BigInt::from(i));
        assert_eq!(oracle, BigInt::from(479001600u64));
        assert_eq!(factorial(12), oracle);
    }

    #[test]
    fn binomial_small_cases() {
        assert_eq!(binomial(4, 2).unwrap(), BigInt::from(6));
        for k in 0..20 {
            assert_eq!(binomial(k, 0).unwrap(), BigInt::one());
        }
    }

    #[test]
    fn binomial_against_pascal_triangle() {
        // Oracle: Pascal's triangle built by additions only.
        let mut row = vec![BigInt::one()];
        for k in 1..=10usize {
            let mut next = vec![BigInt::one(); k + 1];
            for j in 1..k {
                next[j] = &row[j - 1] + &row[j];
            }
            row = next;
        }
        assert_eq!(row[4], BigInt::from(210));
        assert_eq!(binomial(10, 4).unwrap(), row[4]);
    }

    #[test]
    fn binomial_rejects_j_above_k() {
        assert!(binomial(3, 4).is_err());
    }

    #[test]
    fn rising_factorial_cases() {
        assert_eq!(rising_factorial(3, 0), BigInt::one());
        // 3*4*5 = 60
        assert_eq!(rising_factorial(3, 3), BigInt::from(60));
    }

    #[test]
    fn parse_fraction_integer_and_decimal() {
        assert_eq!(parse_scalar("3/4").unwrap(), rat(3, 4));
        assert_eq!(parse_scalar("-7").unwrap(), int(-7));
        assert_eq!(parse_scalar("0.25").unwrap(), rat(1, 4));
        assert_eq!(parse_scalar("-2.5").unwrap(), rat(-5, 2));
        assert_eq!(parse_scalar("-0.5").unwrap(), rat(-1, 2));
        assert!(parse_scalar("1/0").is_err());
        assert!(parse_scalar("abc").is_err());
        assert!(parse_scalar("1.2e3").is_err());
    }

    #[test]
    fn format_round_trips() {
        for s in ["3/4", "-7", "22/7", "0"] {
            let x = parse_scalar(s).unwrap();
            assert_eq!(parse_scalar(&format_scalar(&x)).unwrap(), x);
        }
        assert_eq!(format_scalar(&rat(-1, 24)), "-1/24");
        assert_eq!(format_scalar(&int(5)), "5");
    }

    #[test]
    fn from_f64_is_exact_for_binary_fractions() {
        assert_eq!(from_f64_exact(0.5).unwrap(), rat(1, 2));
        assert_eq!(from_f64_exact(-0.75).unwrap(), rat(-3, 4));
        assert!(from_f64_exact(f64::NAN).is_err());
    }

    #[test]
    fn pow_scalar_negative_exponent() {
        assert_eq!(pow_scalar(&rat(2, 3), -2), rat(9, 4));
        assert_eq!(pow_scalar(&int(5), 0), int(1));
    }
}
