//! Exact rationals for exponents and bounds. Floats are never accepted.

use num_rational::Ratio;

use crate::error::{Error, Result};

pub type Rational = Ratio<i64>;

/// Parses `a/b` or a bare integer. Decimal notation is rejected.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let text = text.trim();
    if text.contains(['.', 'e', 'E']) {
        return Err(Error::Parse(format!(
            "expected an exact rational `a/b`, got `{text}`"
        )));
    }
    let value: Rational = text
        .parse()
        .map_err(|_| Error::Parse(format!("invalid rational `{text}`")))?;
    Ok(value)
}

/// Renders as `a/b`, always with a denominator (`2/1`), so output re-parses unambiguously.
pub fn format_rational(value: &Rational) -> String {
    format!("{}/{}", value.numer(), value.denom())
}

pub(crate) fn ratio(numer: i64, denom: i64) -> Rational {
    Rational::new(numer, denom)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_fractions_and_integers() {
        assert_eq!(parse_rational("19/10").unwrap(), ratio(19, 10));
        assert_eq!(parse_rational("166/84").unwrap(), ratio(83, 42));
        assert_eq!(parse_rational("2").unwrap(), ratio(2, 1));
    }

    #[test]
    fn rejects_floats() {
        assert!(parse_rational("1.75").is_err());
        assert!(parse_rational("1e2").is_err());
        assert!(parse_rational("7/").is_err());
    }

    #[test]
    fn formats_with_denominator() {
        assert_eq!(format_rational(&ratio(7, 4)), "7/4");
        assert_eq!(format_rational(&ratio(3, 1)), "3/1");
    }
}
