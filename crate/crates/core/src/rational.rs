//! Exact rational numbers for fairness thresholds and measurements.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{Signed, ToPrimitive, Zero};
use thiserror::Error;

/// A reduced fraction `numerator / denominator` with a positive denominator.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Rational(Ratio<i64>);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RationalParseError {
    #[error("empty rational literal")]
    Empty,
    #[error("malformed rational literal `{0}`")]
    Malformed(String),
    #[error("zero denominator in `{0}`")]
    ZeroDenominator(String),
    #[error("rational literal `{0}` does not fit in 64-bit integers")]
    Overflow(String),
}

impl Rational {
    pub const ZERO: Rational = Rational(Ratio::new_raw(0, 1));
    pub const ONE: Rational = Rational(Ratio::new_raw(1, 1));

    /// Builds `numer / denom`, reducing the fraction.
    ///
    /// Panics if `denom` is zero.
    pub fn new(numer: i64, denom: i64) -> Self {
        Rational(Ratio::new(numer, denom))
    }

    pub fn from_integer(value: i64) -> Self {
        Rational(Ratio::from_integer(value))
    }

    pub fn numer(&self) -> i64 {
        *self.0.numer()
    }

    pub fn denom(&self) -> i64 {
        *self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    pub fn floor(&self) -> i64 {
        self.0.floor().to_integer()
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    pub fn min(self, other: Self) -> Self {
        if other < self {
            other
        } else {
            self
        }
    }

    /// Whether the value has a finite decimal expansion of at most `digits`
    /// fractional digits.
    pub fn is_exact_decimal(&self, digits: u32) -> bool {
        let scale = 10i128.pow(digits);
        (self.numer() as i128 * scale) % self.denom() as i128 == 0
    }

    /// Renders with exactly `digits` fractional digits, rounding half away
    /// from zero.
    pub fn to_decimal_string(&self, digits: u32) -> String {
        let scale = 10i128.pow(digits);
        let num = self.numer() as i128;
        let den = self.denom() as i128;
        let scaled = (2 * num.abs() * scale + den) / (2 * den);
        let int_part = scaled / scale;
        let frac_part = scaled % scale;
        let sign = if num < 0 && scaled != 0 { "-" } else { "" };
        if digits == 0 {
            format!("{sign}{int_part}")
        } else {
            format!("{sign}{int_part}.{frac_part:0width$}", width = digits as usize)
        }
    }

    /// `self <= other`, computed in 128-bit arithmetic so that intermediate
    /// products never overflow.
    pub fn le_i128(&self, other: &Self) -> bool {
        (self.numer() as i128) * (other.denom() as i128) <= (other.numer() as i128) * (self.denom() as i128)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numer(), self.denom())
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numer(), self.denom())
    }
}

impl From<i64> for Rational {
    fn from(value: i64) -> Self {
        Rational::from_integer(value)
    }
}

/// Accepts `p/q`, plain integers, and finite decimals such as `0.01`.
impl FromStr for Rational {
    type Err = RationalParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let text = s.trim();
        if text.is_empty() {
            return Err(RationalParseError::Empty);
        }
        let malformed = || RationalParseError::Malformed(text.to_string());
        let overflow = || RationalParseError::Overflow(text.to_string());
        if let Some((p, q)) = text.split_once('/') {
            let p: i64 = parse_int(p.trim()).ok_or_else(malformed)?;
            let q: i64 = parse_int(q.trim()).ok_or_else(malformed)?;
            if q == 0 {
                return Err(RationalParseError::ZeroDenominator(text.to_string()));
            }
            return Ok(Rational::new(p, q));
        }
        let (negative, body) = match text.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, text.strip_prefix('+').unwrap_or(text)),
        };
        let (int_part, frac_part) = body.split_once('.').unwrap_or((body, ""));
        if int_part.is_empty() && frac_part.is_empty() {
            return Err(malformed());
        }
        if !int_part.chars().all(|c| c.is_ascii_digit()) || !frac_part.chars().all(|c| c.is_ascii_digit()) {
            return Err(malformed());
        }
        let digits = format!("{int_part}{frac_part}");
        let numer: i64 = if digits.is_empty() {
            0
        } else {
            digits.parse().map_err(|_| overflow())?
        };
        let denom = 10i64.checked_pow(frac_part.len() as u32).ok_or_else(overflow)?;
        let numer = if negative { -numer } else { numer };
        Ok(Rational::new(numer, denom))
    }
}

fn parse_int(s: &str) -> Option<i64> {
    if s.is_empty() || !s.trim_start_matches(['-', '+']).chars().all(|c| c.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

impl Add for Rational {
    type Output = Rational;
    fn add(self, rhs: Self) -> Self {
        Rational(self.0 + rhs.0)
    }
}

impl Sub for Rational {
    type Output = Rational;
    fn sub(self, rhs: Self) -> Self {
        Rational(self.0 - rhs.0)
    }
}

impl Mul for Rational {
    type Output = Rational;
    fn mul(self, rhs: Self) -> Self {
        Rational(self.0 * rhs.0)
    }
}

impl Div for Rational {
    type Output = Rational;
    fn div(self, rhs: Self) -> Self {
        Rational(self.0 / rhs.0)
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Self {
        Rational(-self.0)
    }
}

/// `gcd`-reduced `a / b` for small non-negative integers.
pub(crate) fn reduced(a: i128, b: i128) -> Rational {
    let g = a.gcd(&b).max(1);
    Rational::new((a / g) as i64, (b / g) as i64)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_fraction_integer_and_decimal() {
        assert_eq!("2/3".parse::<Rational>().unwrap(), Rational::new(2, 3));
        assert_eq!("4/6".parse::<Rational>().unwrap(), Rational::new(2, 3));
        assert_eq!("7".parse::<Rational>().unwrap(), Rational::from_integer(7));
        assert_eq!("0.01".parse::<Rational>().unwrap(), Rational::new(1, 100));
        assert_eq!("0.050".parse::<Rational>().unwrap(), Rational::new(1, 20));
        assert_eq!(".5".parse::<Rational>().unwrap(), Rational::new(1, 2));
        assert_eq!("-1.25".parse::<Rational>().unwrap(), Rational::new(-5, 4));
    }

    #[test]
    fn rejects_junk() {
        assert!(matches!("".parse::<Rational>(), Err(RationalParseError::Empty)));
        assert!(matches!(
            "1/0".parse::<Rational>(),
            Err(RationalParseError::ZeroDenominator(_))
        ));
        assert!(matches!(
            "abc".parse::<Rational>(),
            Err(RationalParseError::Malformed(_))
        ));
        assert!(matches!(
            "1.2.3".parse::<Rational>(),
            Err(RationalParseError::Malformed(_))
        ));
        assert!(matches!(".".parse::<Rational>(), Err(RationalParseError::Malformed(_))));
    }

    #[test]
    fn decimal_rendering_rounds_half_up() {
        assert_eq!(Rational::new(2, 3).to_decimal_string(6), "0.666667");
        assert_eq!(Rational::new(1, 3).to_decimal_string(6), "0.333333");
        assert_eq!(Rational::new(1, 2).to_decimal_string(6), "0.500000");
        assert_eq!(Rational::from_integer(3).to_decimal_string(6), "3.000000");
        assert_eq!(Rational::new(-2, 3).to_decimal_string(2), "-0.67");
        assert!(Rational::new(1, 8).is_exact_decimal(6));
        assert!(!Rational::new(2, 3).is_exact_decimal(6));
    }

    #[test]
    fn display_is_reduced_fraction() {
        assert_eq!(Rational::new(6, -4).to_string(), "-3/2");
        assert_eq!(Rational::ZERO.to_string(), "0/1");
    }
}
