//! Text form of rationals: `p/q` in lowest terms with `q > 0`, or plain `p`
//! when the denominator is 1. This is the wire format used by the report
//! JSON and the CLI, so it must be bit-exact across platforms.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::error::LinalgError;
use super::matrix::Rational;

pub fn format_rational(r: &Rational) -> String {
    // Ratio keeps lowest terms and a positive denominator; Display already
    // emits "p/q" or "p".
    r.to_string()
}

pub fn parse_rational(s: &str) -> Result<Rational, LinalgError> {
    let bad = || LinalgError::BadRational {
        text: s.to_string(),
    };
    match s.split_once('/') {
        None => {
            let p: BigInt = s.trim().parse().map_err(|_| bad())?;
            Ok(Rational::from(p))
        }
        Some((num, den)) => {
            let p: BigInt = num.trim().parse().map_err(|_| bad())?;
            let q: BigInt = den.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(p, q))
        }
    }
}

/// Fixed-point decimal rendering at `digits` fractional digits, rounded
/// half-to-even. Used only for display; verdicts are never computed on it.
pub fn to_decimal_string(r: &Rational, digits: usize) -> String {
    let scale = BigInt::from(10u32).pow(digits as u32);
    let scaled_num = r.numer().abs() * &scale;
    let (mut quot, rem) = scaled_num.div_rem(r.denom());
    let twice = &rem * BigInt::from(2);
    let round_up = match twice.cmp(r.denom()) {
        std::cmp::Ordering::Greater => true,
        std::cmp::Ordering::Less => false,
        std::cmp::Ordering::Equal => quot.is_odd(),
    };
    if round_up {
        quot += 1;
    }
    let sign = if r.numer().is_negative() && !quot.is_zero() {
        "-"
    } else {
        ""
    };
    if digits == 0 {
        return format!("{sign}{quot}");
    }
    let (int_part, frac_part) = quot.div_rem(&scale);
    format!("{sign}{int_part}.{frac_part:0>width$}", width = digits)
}
