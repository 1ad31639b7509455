//! Numeric CLI arguments: plain decimals or simple fractions like `-3/4`,
//! so exact rational fixture values stay exact.

use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum NumberParseError {
    #[error("empty number")]
    Empty,
    #[error("cannot parse `{0}` as a number")]
    Invalid(String),
    #[error("division by zero in `{0}`")]
    ZeroDenominator(String),
    #[error("`{0}` is not finite")]
    NonFinite(String),
}

/// Parse a decimal or a `numerator/denominator` fraction.
pub fn parse_number(s: &str) -> Result<f64, NumberParseError> {
    let s = s.trim();
    if s.is_empty() {
        return Err(NumberParseError::Empty);
    }
    let value = match s.split_once('/') {
        Some((num, den)) => {
            let n: f64 = num.trim().parse().map_err(|_| NumberParseError::Invalid(s.into()))?;
            let d: f64 = den.trim().parse().map_err(|_| NumberParseError::Invalid(s.into()))?;
            if d == 0.0 {
                return Err(NumberParseError::ZeroDenominator(s.into()));
            }
            n / d
        }
        None => s.parse().map_err(|_| NumberParseError::Invalid(s.into()))?,
    };
    if !value.is_finite() {
        return Err(NumberParseError::NonFinite(s.into()));
    }
    Ok(value)
}

/// Parse an inclusive integer range `min..max`.
pub fn parse_range(s: &str) -> Result<(i64, i64), NumberParseError> {
    let (lo, hi) = s.trim().split_once("..").ok_or_else(|| NumberParseError::Invalid(s.into()))?;
    let lo: i64 = lo.trim().parse().map_err(|_| NumberParseError::Invalid(s.into()))?;
    let hi: i64 = hi.trim().parse().map_err(|_| NumberParseError::Invalid(s.into()))?;
    Ok((lo, hi))
}
